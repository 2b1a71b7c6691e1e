"""Question-driven construction of a draft, one element at a time.

The wizard walks the fixed order claim, grounds, warrant, backing, qualifier,
rebuttal. Grounds collect until the author signals there are no more; warrant
and later slots may be skipped, claim and the first ground may not.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from .errors import InvalidSignal, MandatoryElement, SessionFinished
from .locales import LocaleBundle, default_bundle
from .model import ELEMENT_ORDER, ElementKind, ToulminDraft, set_element


class Signal(Enum):
    """Non-text wizard answers."""

    SKIP = "skip"
    NO_MORE_GROUNDS = "no_more_grounds"


SKIPPABLE = frozenset({
    ElementKind.WARRANT,
    ElementKind.BACKING,
    ElementKind.QUALIFIER,
    ElementKind.REBUTTAL,
})


@dataclass(frozen=True)
class Prompt:
    target: ElementKind
    question: str
    hint: str | None = None


@dataclass(frozen=True)
class WizardSession:
    """One author walking one draft through the element order. Immutable;
    every transition returns a new session value."""

    draft: ToulminDraft
    cursor: ElementKind
    grounds_open: bool
    finished: bool
    #: kinds the author explicitly skipped; surfaced as advisories by clients
    skipped: tuple[ElementKind, ...] = ()

    @property
    def locale(self) -> str:
        return self.draft.locale


def _first_unfilled(draft: ToulminDraft, after: ElementKind | None = None) -> ElementKind | None:
    start = 0 if after is None else ELEMENT_ORDER.index(after) + 1
    for kind in ELEMENT_ORDER[start:]:
        if not draft.has(kind):
            return kind
    return None


def start_session(draft: ToulminDraft) -> WizardSession:
    """Open (or resume) a session; the cursor lands on the first unfilled kind."""
    cursor = _first_unfilled(draft)
    if cursor is None:
        return WizardSession(draft=draft, cursor=ELEMENT_ORDER[-1],
                             grounds_open=False, finished=True)
    return WizardSession(
        draft=draft,
        cursor=cursor,
        grounds_open=cursor is ElementKind.GROUND,
        finished=False,
    )


def next_prompt(session: WizardSession, bundle: LocaleBundle | None = None) -> Prompt | None:
    """The question for the cursor element, or None once the session is done."""
    if session.finished:
        return None
    bundle = bundle or default_bundle()
    text = bundle.prompt(session.locale, session.cursor)
    return Prompt(target=session.cursor, question=text.question, hint=text.hint)


def _advance(session: WizardSession, draft: ToulminDraft,
             skipped: ElementKind | None = None) -> WizardSession:
    cursor = _first_unfilled(draft, after=session.cursor)
    skips = session.skipped + ((skipped,) if skipped else ())
    if cursor is None:
        return WizardSession(draft=draft, cursor=session.cursor,
                             grounds_open=False, finished=True, skipped=skips)
    return WizardSession(
        draft=draft,
        cursor=cursor,
        grounds_open=cursor is ElementKind.GROUND,
        finished=False,
        skipped=skips,
    )


def apply_answer(session: WizardSession, answer: str | Signal) -> WizardSession:
    """Fold one answer into the session.

    Text fills the cursor slot; after a ground the cursor stays on grounds
    until ``Signal.NO_MORE_GROUNDS``. ``Signal.SKIP`` is only legal once the
    mandatory claim and first ground exist.
    """
    if session.finished:
        raise SessionFinished("the wizard already collected every element")

    if answer is Signal.NO_MORE_GROUNDS:
        if session.cursor is not ElementKind.GROUND:
            raise InvalidSignal("not collecting grounds right now")
        if not session.draft.grounds:
            raise MandatoryElement("at least one ground is required")
        return _advance(session, session.draft)

    if answer is Signal.SKIP:
        if session.cursor is ElementKind.CLAIM:
            raise MandatoryElement("the claim cannot be skipped")
        if session.cursor is ElementKind.GROUND:
            if not session.draft.grounds:
                raise MandatoryElement("at least one ground is required")
            # Skipping with grounds on record means the same as "no more".
            return _advance(session, session.draft)
        return _advance(session, session.draft, skipped=session.cursor)

    if not isinstance(answer, str):
        raise InvalidSignal(f"unsupported answer: {answer!r}")

    draft = set_element(session.draft, session.cursor, None, answer)
    if session.cursor is ElementKind.GROUND:
        return replace(session, draft=draft, grounds_open=True)
    return _advance(session, draft)
