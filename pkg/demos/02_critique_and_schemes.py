#!/usr/bin/env python3
"""Run the verification roll over a draft and browse argumentation schemes.

Run: python3 demos/02_critique_and_schemes.py
"""

import argcoach as ac
from argcoach.checklist import Answer
from argcoach.model import ElementKind

# A thin draft: a claim with a single, shaky reason.
draft = ac.new_draft("demo-case", "demo-user", "en")
draft = ac.set_element(draft, ElementKind.CLAIM, None, "The defendant must be acquitted.")
draft = ac.set_element(draft, ElementKind.GROUND, None, "He seems like a nice person.")

print("=== verification roll (en) ===")
for question in ac.verification_roll("en"):
    flaw = question.linked_flaw.value if question.linked_flaw else "-"
    print(f"  {question.id}: {question.text}  [flags: {flaw}]")

answers = {
    "q1": Answer.YES,     # the claim is clear
    "q3": Answer.NO,      # the reason is not relevant
    "q4": Answer.NO,      # and not enough
    "q5": Answer.UNSURE,  # justification unclear
}
report = ac.evaluate_checklist(draft, answers)
print("\nflaws found:", sorted(f.value for f in report.flaws))
print("advisory (revisit):", report.advisory)

print("\n=== scheme browsing ===")
scheme_set = ac.shipped_scheme_set("en")
for scheme in ac.search_schemes(scheme_set, "causal"):
    print(f"\n{scheme.name}  ({scheme.id})")
    for premise in scheme.premise_templates:
        print("  premise:", premise)
    print("  conclusion:", scheme.conclusion_template)
    print("  critical questions:")
    for cq in ac.critical_questions(scheme_set, scheme.id):
        print(f"    - ({cq.kind.value}) {cq.text}")
