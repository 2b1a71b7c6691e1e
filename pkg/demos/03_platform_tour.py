#!/usr/bin/env python3
"""Tour the collaborative platform: a moderator posts a case, students publish
and rate arguments, everything persists and is searchable.

Run: python3 demos/03_platform_tour.py
"""

import tempfile

import argcoach as ac
from argcoach.model import ElementKind
from argcoach.ratings import Dimension
from argcoach.roles import UserRole
from argcoach.service import ExportFormat, Repository, SortOrder

data_dir = tempfile.mkdtemp(prefix="argcoach-demo-")
repo = Repository(data_dir)

case_id = repo.create_case(
    "prof", UserRole.MODERATOR,
    title="The Speluncean Explorers",
    abstract="Trapped explorers sacrificed one of their own to survive. "
             "Should their condemnation stand on appeal?",
    tags=("criminal", "jurisprudence"),
)
print("case:", case_id)


def publish(author, claim, grounds):
    draft = ac.new_draft(case_id, author, "en")
    draft = ac.set_element(draft, ElementKind.CLAIM, None, claim)
    for ground in grounds:
        draft = ac.set_element(draft, ElementKind.GROUND, None, ground)
    return repo.post_argument(case_id, draft, author)


first = publish("keen", "the sentence must be confirmed",
                ["the judiciary cannot create exceptions to the law",
                 "the conduct fits the statute"])
second = publish("foster", "the condemnation must be set aside",
                 ["the law of nature, not the statute, governed the cave",
                  "punishment here serves no deterrent purpose"])

for rater, role, target, stars in (
    ("alice", UserRole.STUDENT, first, 4),
    ("bruno", UserRole.STUDENT, first, 5),
    ("alice", UserRole.STUDENT, second, 3),
    ("prof", UserRole.MODERATOR, second, 5),
):
    repo.submit_rating(target, rater, role, stars)

for argument_id in (first, second):
    summary = repo.rating_summary(argument_id)
    print(f"argument {argument_id[:8]}: community {summary.community_mean} "
          f"({summary.community_count}), moderators {summary.moderator_mean} "
          f"({summary.moderator_count})")

print("\ntop by community stars:")
for entry in repo.top_arguments(case_id, Dimension.COMMUNITY, 5):
    print(f"  {entry.argument_ref[:8]}  mean={entry.mean} count={entry.count}")

print("\nsearch 'statute':",
      [(h.kind.value, h.doc_id[:8]) for h in repo.search("statute")])

print("\nplain-text export of the leading argument:")
print(" ", repo.export_argument(first, ExportFormat.PLAIN_TEXT).decode())

# Everything survives a restart; the index is derived data.
reopened = Repository(data_dir)
reopened.rebuild_index()
print("\nafter restart: cases =", len(reopened.list_cases()),
      "| arguments =", reopened.list_arguments(case_id, SortOrder.NEWEST).total,
      "| search equal:", reopened.search("statute") == repo.search("statute"))
print("\ndata directory:", data_dir)
