"""The verification roll: quality questions an author runs over a draft, and
the mapping of negative answers onto the five-flaw taxonomy."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import UnknownQuestion
from .locales import LocaleBundle, default_bundle
from .model import ToulminDraft


class FlawCategory(Enum):
    ABSENT_DATA = "absent_data"
    IRRELEVANT_DATA = "irrelevant_data"
    DEFICIENT_DATA = "deficient_data"
    UNJUSTIFIED_SUPPOSITIONS = "unjustified_suppositions"
    AMBIGUITY = "ambiguity"


class QualityCriterion(Enum):
    """The four properties a good argument shows, mirrored by the roll."""

    CLARITY_OF_CLAIM = "clarity_of_claim"
    NECESSARY_SUFFICIENT_DATA = "necessary_sufficient_data"
    RELEVANT_SUPPORT = "relevant_support"
    EXPLICIT_STRENGTH_AND_REFUTATIONS = "explicit_strength_and_refutations"


class Answer(Enum):
    YES = "yes"
    NO = "no"
    UNSURE = "unsure"


@dataclass(frozen=True)
class ChecklistQuestion:
    id: str
    text: str
    linked_flaw: FlawCategory | None = None
    auto_checkable: bool = False


#: Roll structure: stable ids in presentation order, each with the flaw a
#: negative answer raises. Texts are locale assets. q6 is an extension entry;
#: it is auto-checkable because it only asks whether any ground exists.
_ROLL: tuple[tuple[str, FlawCategory | None, bool], ...] = (
    ("q1", FlawCategory.AMBIGUITY, False),
    ("q2", FlawCategory.AMBIGUITY, False),
    ("q3", FlawCategory.IRRELEVANT_DATA, False),
    ("q4", FlawCategory.DEFICIENT_DATA, False),
    ("q5", FlawCategory.UNJUSTIFIED_SUPPOSITIONS, False),
    ("q6", FlawCategory.ABSENT_DATA, True),
)


@dataclass(frozen=True)
class ChecklistReport:
    draft_ref: str
    answers: dict[str, Answer]
    flaws: frozenset[FlawCategory]
    advisory: list[str] = field(default_factory=list)


def verification_roll(locale: str, bundle: LocaleBundle | None = None) -> list[ChecklistQuestion]:
    """The localized roll, core questions first, extensions after."""
    bundle = bundle or default_bundle()
    return [
        ChecklistQuestion(
            id=qid,
            text=bundle.checklist_text(locale, qid),
            linked_flaw=flaw,
            auto_checkable=auto,
        )
        for qid, flaw, auto in _ROLL
    ]


def auto_flags(draft: ToulminDraft) -> set[FlawCategory]:
    """Flaws decidable from structure alone: data is absent when there are no
    grounds. Every other category needs a human answer."""
    if not draft.grounds:
        return {FlawCategory.ABSENT_DATA}
    return set()


def evaluate_checklist(
    draft: ToulminDraft,
    answers: dict[str, Answer],
    locale: str | None = None,
    bundle: LocaleBundle | None = None,
) -> ChecklistReport:
    """Fold roll answers and structural checks into a flaw report.

    No answers raise their linked flaw; unsure answers only add an advisory
    note (the question to revisit, localized).
    """
    bundle = bundle or default_bundle()
    locale = locale or draft.locale
    roll = {q.id: q for q in verification_roll(locale, bundle)}
    unknown = set(answers) - set(roll)
    if unknown:
        raise UnknownQuestion(f"no such checklist question: {sorted(unknown)}")

    flaws = auto_flags(draft)
    advisory: list[str] = []
    for qid, answer in answers.items():
        question = roll[qid]
        if answer is Answer.NO and question.linked_flaw is not None:
            flaws.add(question.linked_flaw)
        elif answer is Answer.UNSURE:
            advisory.append(question.text)
    return ChecklistReport(
        draft_ref=draft.id,
        answers=dict(answers),
        flaws=frozenset(flaws),
        advisory=advisory,
    )
