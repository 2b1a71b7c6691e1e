#!/usr/bin/env python3
"""Walk the guided wizard to build a Toulmin draft, then render it as prose.

Run: python3 demos/01_build_and_render.py
"""

import argcoach as ac
from argcoach.wizard import Signal

# The wizard asks for one element at a time: claim, grounds (until you say
# you have no more), then warrant, backing, qualifier and rebuttal.
answers = [
    "The sentence must be confirmed, with the maintenance of condemnation of the accused.",
    "It is not of competence for the judge to measure if the act was just or unjust",
    "The judiciary cannot create exceptions to the application of the law",
    Signal.NO_MORE_GROUNDS,
    "The judge must be loyal to the written law and interpret its evident meaning.",
    "Article 12-A of the criminal code.",
    Signal.SKIP,   # qualifier
    Signal.SKIP,   # rebuttal
]

session = ac.start_session(ac.new_draft("demo-case", "demo-user", "en"))
for answer in answers:
    prompt = ac.next_prompt(session)
    shown = answer.value if isinstance(answer, Signal) else answer
    print(f"Q ({prompt.target.value}): {prompt.question}")
    print(f"A: {shown}\n")
    session = ac.apply_answer(session, answer)

draft = session.draft
print("completeness:", ac.completeness(draft).name)
print("structural issues:", [i.describe() for i in ac.structural_issues(draft)] or "none")
print()

bundle = ac.default_bundle()
for locale in ("en", "pt-BR"):
    template = bundle.template(locale)
    print(f"--- {locale}, plain ---")
    print(ac.render(draft, template))
    print(f"--- {locale}, annotated ---")
    print(ac.render(draft, template, ac.RenderOptions(annotated=True)))
    print()
