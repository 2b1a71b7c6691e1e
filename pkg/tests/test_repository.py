import itertools
import re

import pytest

import argcoach as ac
from argcoach.errors import (
    Forbidden,
    InvalidCase,
    NotPublishable,
    UnknownArgument,
    UnknownCase,
    UnknownDraft,
)
from argcoach.model import ElementKind
from argcoach.ratings import Dimension
from argcoach.roles import UserRole
from argcoach.service import (
    AUTH_MATRIX,
    ExportFormat,
    Operation,
    Repository,
    SortOrder,
    authorize,
)
from argcoach.textgen import RenderOptions, render
from conftest import build_keen_draft

K = ElementKind


@pytest.fixture
def repo(tmp_path):
    return Repository(tmp_path / "data")


@pytest.fixture
def case_id(repo):
    return repo.create_case(
        "prof", UserRole.MODERATOR,
        title="The Speluncean Explorers",
        abstract="Explorers trapped by a landslide sacrificed one of their own to survive; "
                 "the appeal against their death sentence is before the court.",
        tags=("criminal", "statutory-interpretation"),
    )


def simple_draft(case_id, author="keen", claim="The sentence must be confirmed.",
                 grounds=("The law admits no exception.",)):
    draft = ac.new_draft(case_id, author, "en")
    draft = ac.set_element(draft, K.CLAIM, None, claim)
    for ground in grounds:
        draft = ac.set_element(draft, K.GROUND, None, ground)
    return draft


class TestCases:
    def test_moderator_creates_case(self, repo, case_id):
        feed = repo.list_cases()
        assert [c.id for c in feed] == [case_id]
        assert feed[0].title == "The Speluncean Explorers"

    def test_student_cannot_create_case(self, repo):
        with pytest.raises(Forbidden):
            repo.create_case("kid", UserRole.STUDENT, title="t", abstract="a")

    def test_empty_abstract_rejected(self, repo):
        with pytest.raises(InvalidCase):
            repo.create_case("prof", UserRole.MODERATOR, title="t", abstract="   ")

    def test_feed_newest_first(self, repo, case_id):
        second = repo.create_case("prof", UserRole.MANAGER, title="Second case",
                                  abstract="Another matter.")
        assert [c.id for c in repo.list_cases()] == [second, case_id]


class TestPostArgument:
    def test_publishes_and_caches_render(self, repo, case_id):
        draft = build_keen_draft(case_ref=case_id)
        argument_id = repo.post_argument(case_id, draft, "keen")
        record = repo.get_argument(argument_id)
        template = repo.bundle.template(record.draft.locale)
        assert record.rendered_text == render(record.draft, template,
                                              RenderOptions(annotated=True))
        assert record.template_version == repo.template_version

    def test_claim_only_not_publishable(self, repo, case_id):
        draft = ac.set_element(ac.new_draft(case_id, "u", "en"), K.CLAIM, None, "x")
        with pytest.raises(NotPublishable) as exc:
            repo.post_argument(case_id, draft, "u")
        assert [i.describe() for i in exc.value.issues] == ["missing grounds"]

    def test_unknown_case(self, repo):
        with pytest.raises(UnknownCase):
            repo.post_argument("nope", simple_draft("nope"), "u")


class TestListArguments:
    def test_newest_first(self, repo, case_id):
        ids = [repo.post_argument(case_id, simple_draft(case_id, claim=f"Claim {n}."), "u")
               for n in range(3)]
        page = repo.list_arguments(case_id, SortOrder.NEWEST)
        assert [r.id for r in page.items] == list(reversed(ids))

    def test_top_community_matches_top_arguments(self, repo, case_id):
        ids = [repo.post_argument(case_id, simple_draft(case_id, author=f"a{n}",
                                                        claim=f"Claim {n}."), f"a{n}")
               for n in range(3)]
        repo.submit_rating(ids[0], "r1", UserRole.STUDENT, 3)
        repo.submit_rating(ids[1], "r1", UserRole.STUDENT, 5)
        repo.submit_rating(ids[1], "r2", UserRole.STUDENT, 4)
        ranked = repo.top_arguments(case_id, Dimension.COMMUNITY, 10)
        page = repo.list_arguments(case_id, SortOrder.TOP_COMMUNITY)
        assert [r.id for r in page.items[:len(ranked)]] == [t.argument_ref for t in ranked]
        # unrated arguments trail the rated ones
        assert page.items[-1].id == ids[2]

    def test_author_filter(self, repo, case_id):
        mine = repo.post_argument(case_id, simple_draft(case_id, author="me"), "me")
        repo.post_argument(case_id, simple_draft(case_id, author="you"), "you")
        page = repo.list_arguments(case_id, author="me")
        assert [r.id for r in page.items] == [mine]

    def test_stable_pagination(self, repo, case_id):
        for n in range(25):
            repo.post_argument(case_id, simple_draft(case_id, claim=f"Claim {n}."), "u")
        first = repo.list_arguments(case_id, page=1, page_size=10)
        second = repo.list_arguments(case_id, page=2, page_size=10)
        third = repo.list_arguments(case_id, page=3, page_size=10)
        assert first.total == 25
        seen = [r.id for r in first.items + second.items + third.items]
        assert len(seen) == len(set(seen)) == 25

    def test_empty_case(self, repo, case_id):
        page = repo.list_arguments(case_id)
        assert page.items == [] and page.total == 0

    def test_unknown_case(self, repo):
        with pytest.raises(UnknownCase):
            repo.list_arguments("nope")


def oracle_search(repo, query):
    """Brute-force scan over the stored records, mirroring the search contract."""
    def tokens(text):
        return re.findall(r"\w+", text.casefold())

    query_tokens = tokens(query)
    if not query_tokens:
        return []
    docs = []
    for case in repo.list_cases():
        text = " ".join((case.title, case.abstract, *case.tags))
        docs.append(("case", case.id, text, case.seq))
    for case in repo.list_cases():
        page = repo.list_arguments(case.id, page_size=1000)
        for record in page.items:
            draft = record.draft
            text = " ".join([draft.claim or "", *draft.grounds,
                             draft.warrant or "", draft.backing or ""])
            docs.append(("argument", record.id, text, record.seq))
    hits = []
    for kind, doc_id, text, seq in docs:
        doc_tokens = tokens(text)
        counts = [doc_tokens.count(t) for t in query_tokens]
        if all(c > 0 for c in counts):
            hits.append((kind, doc_id, sum(counts), seq))
    hits.sort(key=lambda h: (-h[2], -h[3]))
    return [(kind, doc_id) for kind, doc_id, _score, _seq in hits]


class TestSearch:
    def test_claim_token_hits_argument(self, repo, case_id):
        draft = simple_draft(
            case_id,
            claim="The sentence must be confirmed, with the maintenance of "
                  "condemnation of the accused.")
        argument_id = repo.post_argument(case_id, draft, "keen")
        hits = repo.search("condemnation")
        assert [(h.kind.value, h.doc_id) for h in hits] == [("argument", argument_id)]
        assert hits == repo.search("condemnation")

    def test_case_title_hit(self, repo, case_id):
        got = [(h.kind.value, h.doc_id) for h in repo.search("speluncean")]
        assert got == [("case", case_id)]

    def test_zero_matches(self, repo, case_id):
        assert repo.search("zzzzzz") == []

    def test_and_semantics_and_ranking_match_oracle(self, repo, case_id):
        repo.post_argument(case_id, simple_draft(
            case_id, claim="Statutes bind the judge.",
            grounds=("The judge follows the statute text.", "Morality is not statute.")), "a")
        repo.post_argument(case_id, simple_draft(
            case_id, claim="Equity tempers statutes.",
            grounds=("Purpose outranks text.",)), "b")
        for query in ("statute", "judge statute", "the", "purpose text",
                      "STATUTES bind", "explorers", ""):
            got = [(h.kind.value, h.doc_id) for h in repo.search(query)]
            assert got == oracle_search(repo, query), query

    def test_rebuild_preserves_results(self, repo, case_id):
        repo.post_argument(case_id, simple_draft(case_id), "u")
        queries = ("sentence", "law", "speluncean", "confirmed law")
        before = {q: repo.search(q) for q in queries}
        stats = repo.rebuild_index()
        assert stats.arguments == 1 and stats.cases == 1
        assert {q: repo.search(q) for q in queries} == before

    def test_rebuild_empty_store(self, tmp_path):
        repo = Repository(tmp_path / "fresh")
        stats = repo.rebuild_index()
        assert stats.documents == 0 and stats.tokens == 0


class TestExport:
    def test_plain_text_is_cached_render(self, repo, case_id):
        argument_id = repo.post_argument(case_id, build_keen_draft(case_ref=case_id), "keen")
        record = repo.get_argument(argument_id)
        assert repo.export_argument(argument_id, ExportFormat.PLAIN_TEXT) == \
            record.rendered_text.encode("utf-8")

    def test_structured_json_round_trip(self, repo, case_id):
        argument_id = repo.post_argument(case_id, build_keen_draft(case_ref=case_id), "keen")
        payload = repo.export_argument(argument_id, ExportFormat.STRUCTURED_JSON)
        restored = ac.draft_from_document(payload)
        assert restored.same_content(repo.get_argument(argument_id).draft)

    def test_unknown_argument(self, repo):
        with pytest.raises(UnknownArgument):
            repo.export_argument("nope", ExportFormat.PLAIN_TEXT)


class TestPersistence:
    def test_restart_preserves_everything(self, tmp_path):
        data = tmp_path / "data"
        repo = Repository(data)
        case_id = repo.create_case("prof", UserRole.MODERATOR, title="T", abstract="A case.")
        argument_id = repo.post_argument(case_id, simple_draft(case_id), "keen")
        repo.submit_rating(argument_id, "alice", UserRole.STUDENT, 4)
        repo.submit_rating(argument_id, "prof", UserRole.MODERATOR, 5)
        before_search = repo.search("sentence")
        before_summary = repo.rating_summary(argument_id)

        again = Repository(data)
        assert [c.id for c in again.list_cases()] == [case_id]
        record = again.get_argument(argument_id)
        assert record.rendered_text == repo.get_argument(argument_id).rendered_text
        assert again.rating_summary(argument_id) == before_summary
        again.rebuild_index()
        assert again.search("sentence") == before_search

    def test_sequence_survives_restart(self, tmp_path):
        data = tmp_path / "data"
        repo = Repository(data)
        repo.create_case("prof", UserRole.MODERATOR, title="One", abstract="x")
        again = Repository(data)
        second = again.create_case("prof", UserRole.MODERATOR, title="Two", abstract="y")
        feed = again.list_cases()
        assert feed[0].id == second  # newer seq even across restarts


class TestWizardSessions:
    def test_session_drives_draft(self, repo, case_id):
        session_id, _ = repo.create_session(case_id, "keen", "en")
        assert repo.session_prompt(session_id).question == "What are you trying to prove?"
        repo.session_answer(session_id, "The sentence must be confirmed.")
        session = repo.session_answer(session_id, "The law admits no exception.")
        draft = repo.get_draft(session.draft.id)
        assert draft.grounds == ("The law admits no exception.",)

    def test_unknown_draft(self, repo):
        with pytest.raises(UnknownDraft):
            repo.render_draft("nope")

    def test_render_locale_override(self, repo, case_id):
        session_id, session = repo.create_session(case_id, "keen", "en")
        repo.session_answer(session_id, "X")
        draft_id = session.draft.id
        assert repo.render_draft(draft_id) == "Therefore, X."
        assert repo.render_draft(draft_id, locale="pt-BR") == "Portanto, X."


class TestAuthMatrix:
    def test_matrix_is_total(self):
        assert set(AUTH_MATRIX) == set(Operation)

    def test_every_pair_behaves_as_declared(self):
        for operation, role in itertools.product(Operation, UserRole):
            allowed = role in AUTH_MATRIX[operation]
            if allowed:
                authorize(operation, role)
            else:
                with pytest.raises(Forbidden):
                    authorize(operation, role)

    def test_reindex_is_manager_only(self):
        assert AUTH_MATRIX[Operation.REINDEX] == frozenset({UserRole.MANAGER})
