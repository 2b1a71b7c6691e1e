"""Toulmin layout of argument as immutable data, with completeness staging.

A draft holds up to six element kinds: a claim, an ordered list of grounds,
a warrant, a backing, and the optional qualifier and rebuttal slots. All
operations are pure: they take a draft and return a new one.
"""

from __future__ import annotations

import json
import uuid
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from enum import Enum, IntEnum

from .errors import (
    BadPosition,
    EmptyElement,
    NotPresent,
    ParseError,
    UnsupportedLocale,
)


class ElementKind(Enum):
    """The six slots of the Toulmin layout. Ground is the only multi-slot kind."""

    CLAIM = "claim"
    GROUND = "ground"
    WARRANT = "warrant"
    BACKING = "backing"
    QUALIFIER = "qualifier"
    REBUTTAL = "rebuttal"


#: Order elements are collected in by the wizard and reported in by validators.
ELEMENT_ORDER = (
    ElementKind.CLAIM,
    ElementKind.GROUND,
    ElementKind.WARRANT,
    ElementKind.BACKING,
    ElementKind.QUALIFIER,
    ElementKind.REBUTTAL,
)

SINGLE_SLOT_KINDS = frozenset(k for k in ElementKind if k is not ElementKind.GROUND)


class CompletenessStatus(IntEnum):
    """How far along the staging ladder a draft has progressed."""

    EMPTY = 0
    SKETCH = 1       # claim
    DRAFT = 2        # claim + at least one ground
    STRUCTURED = 3   # ... + warrant
    GROUNDED = 4     # ... + backing
    FULL = 5         # ... + qualifier or rebuttal


class IssueCode(Enum):
    MISSING_CLAIM = "missing_claim"
    MISSING_GROUNDS = "missing_grounds"
    MISSING_WARRANT = "missing_warrant"
    MISSING_BACKING = "missing_backing"
    EMPTY_ELEMENT = "empty_element"


@dataclass(frozen=True)
class StructuralIssue:
    """One problem with one element slot. Warrant/backing issues are advisory."""

    code: IssueCode
    element: ElementKind | None = None
    position: int | None = None

    #: Codes that block publication; the rest are advisory.
    BLOCKING = (IssueCode.MISSING_CLAIM, IssueCode.MISSING_GROUNDS, IssueCode.EMPTY_ELEMENT)

    @property
    def blocking(self) -> bool:
        return self.code in self.BLOCKING

    def describe(self) -> str:
        if self.code is IssueCode.EMPTY_ELEMENT:
            where = self.element.value if self.element else "?"
            if self.position is not None:
                where += f"[{self.position}]"
            return f"empty element: {where}"
        return self.code.value.replace("_", " ")


MISSING_CLAIM = StructuralIssue(IssueCode.MISSING_CLAIM, ElementKind.CLAIM)
MISSING_GROUNDS = StructuralIssue(IssueCode.MISSING_GROUNDS, ElementKind.GROUND)
MISSING_WARRANT = StructuralIssue(IssueCode.MISSING_WARRANT, ElementKind.WARRANT)
MISSING_BACKING = StructuralIssue(IssueCode.MISSING_BACKING, ElementKind.BACKING)


def _now() -> datetime:
    return datetime.now(timezone.utc)


@dataclass(frozen=True)
class ToulminDraft:
    """One argument under construction. Immutable; grounds keep insertion order."""

    id: str
    case_ref: str
    author_ref: str
    locale: str
    claim: str | None = None
    grounds: tuple[str, ...] = ()
    warrant: str | None = None
    backing: str | None = None
    qualifier: str | None = None
    rebuttal: str | None = None
    created_at: datetime = field(default_factory=_now)
    modified_at: datetime = field(default_factory=_now)

    def single_slot(self, kind: ElementKind) -> str | None:
        if kind is ElementKind.GROUND:
            raise ValueError("ground is not a single-slot kind")
        return getattr(self, kind.value)

    def has(self, kind: ElementKind) -> bool:
        if kind is ElementKind.GROUND:
            return len(self.grounds) > 0
        return self.single_slot(kind) is not None

    def same_content(self, other: "ToulminDraft") -> bool:
        """Equality on argument content, ignoring identity and timestamps."""
        keys = ("case_ref", "author_ref", "locale", "claim", "grounds",
                "warrant", "backing", "qualifier", "rebuttal")
        return all(getattr(self, k) == getattr(other, k) for k in keys)


def supported_locales() -> frozenset[str]:
    """Locales the shipped asset bundle covers."""
    from .locales import default_bundle

    return frozenset(default_bundle().templates)


def new_draft(case_ref: str, author_ref: str, locale: str) -> ToulminDraft:
    """Create an empty draft for the given case, author and locale."""
    if locale not in supported_locales():
        raise UnsupportedLocale(f"locale {locale!r} has no assets")
    now = _now()
    return ToulminDraft(
        id=uuid.uuid4().hex,
        case_ref=case_ref,
        author_ref=author_ref,
        locale=locale,
        created_at=now,
        modified_at=now,
    )


def _clean_text(text: str) -> str:
    cleaned = text.strip()
    if not cleaned:
        raise EmptyElement("element text is blank")
    return cleaned


def set_element(
    draft: ToulminDraft,
    kind: ElementKind,
    position: int | None,
    text: str,
) -> ToulminDraft:
    """Fill one element slot; for grounds, replace in place or append at len+1.

    A missing position appends a ground; any position on a single-slot kind
    is an error. Surrounding whitespace is trimmed, inner text kept verbatim.
    """
    cleaned = _clean_text(text)
    if kind is ElementKind.GROUND:
        grounds = list(draft.grounds)
        if position is None or position == len(grounds) + 1:
            grounds.append(cleaned)
        elif 1 <= position <= len(grounds):
            grounds[position - 1] = cleaned
        else:
            raise BadPosition(
                f"ground position {position} outside [1, {len(grounds) + 1}]"
            )
        return replace(draft, grounds=tuple(grounds), modified_at=_now())
    if position is not None:
        raise BadPosition(f"{kind.value} is a single slot; no position applies")
    return replace(draft, **{kind.value: cleaned}, modified_at=_now())


def remove_element(
    draft: ToulminDraft,
    kind: ElementKind,
    position: int | None = None,
) -> ToulminDraft:
    """Clear one slot; ground indices re-compact to a contiguous 1..n."""
    if kind is ElementKind.GROUND:
        if position is None or position < 1:
            raise BadPosition("removing a ground needs its 1-based position")
        if position > len(draft.grounds):
            raise NotPresent(f"no ground at position {position}")
        grounds = list(draft.grounds)
        del grounds[position - 1]
        return replace(draft, grounds=tuple(grounds), modified_at=_now())
    if position is not None:
        raise BadPosition(f"{kind.value} is a single slot; no position applies")
    if draft.single_slot(kind) is None:
        raise NotPresent(f"draft has no {kind.value}")
    return replace(draft, **{kind.value: None}, modified_at=_now())


def completeness(draft: ToulminDraft) -> CompletenessStatus:
    """Highest ladder stage whose cumulative element requirements are met."""
    if draft.claim is None:
        return CompletenessStatus.EMPTY
    if not draft.grounds:
        return CompletenessStatus.SKETCH
    if draft.warrant is None:
        return CompletenessStatus.DRAFT
    if draft.backing is None:
        return CompletenessStatus.STRUCTURED
    if draft.qualifier is None and draft.rebuttal is None:
        return CompletenessStatus.GROUNDED
    return CompletenessStatus.FULL


def structural_issues(draft: ToulminDraft) -> list[StructuralIssue]:
    """Missing-slot report; empty list means claim, grounds, warrant and backing
    are all present (missing warrant/backing are advisory, not publication gates)."""
    issues: list[StructuralIssue] = []
    if draft.claim is None:
        issues.append(MISSING_CLAIM)
    if not draft.grounds:
        issues.append(MISSING_GROUNDS)
    if draft.warrant is None:
        issues.append(MISSING_WARRANT)
    if draft.backing is None:
        issues.append(MISSING_BACKING)
    # Defensive: drafts built through set_element can never hold blank text,
    # but directly-constructed ones might.
    for kind in SINGLE_SLOT_KINDS:
        value = draft.single_slot(kind)
        if value is not None and not value.strip():
            issues.append(StructuralIssue(IssueCode.EMPTY_ELEMENT, kind))
    for i, ground in enumerate(draft.grounds, start=1):
        if not ground.strip():
            issues.append(StructuralIssue(IssueCode.EMPTY_ELEMENT, ElementKind.GROUND, i))
    return issues


def blocking_issues(draft: ToulminDraft) -> list[StructuralIssue]:
    """The subset of issues that gate publication (claim, grounds, blanks)."""
    return [i for i in structural_issues(draft) if i.blocking]


# --- canonical argument JSON document ---

DOCUMENT_FIELDS = (
    "claim", "grounds", "warrant", "backing", "qualifier", "rebuttal",
    "locale", "case_ref", "author_ref",
)


def draft_to_document(draft: ToulminDraft) -> dict:
    """Canonical JSON-ready form of a draft, keys in the documented order."""
    return {
        "claim": draft.claim,
        "grounds": list(draft.grounds),
        "warrant": draft.warrant,
        "backing": draft.backing,
        "qualifier": draft.qualifier,
        "rebuttal": draft.rebuttal,
        "locale": draft.locale,
        "case_ref": draft.case_ref,
        "author_ref": draft.author_ref,
    }


def draft_from_document(document: bytes | str | dict) -> ToulminDraft:
    """Import a canonical argument document. Unknown fields are rejected."""
    if isinstance(document, (bytes, str)):
        try:
            data = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad argument document: {exc.msg}",
                             line=exc.lineno, offset=exc.pos) from exc
    else:
        data = document
    if not isinstance(data, dict):
        raise ParseError("argument document must be a JSON object")
    unknown = set(data) - set(DOCUMENT_FIELDS)
    if unknown:
        raise ParseError(f"unknown fields in argument document: {sorted(unknown)}")
    missing = set(DOCUMENT_FIELDS) - set(data)
    if missing:
        raise ParseError(f"argument document missing fields: {sorted(missing)}")
    for key in ("locale", "case_ref", "author_ref"):
        if not isinstance(data[key], str) or not data[key]:
            raise ParseError(f"field {key!r} must be a non-empty string")
    if not isinstance(data["grounds"], list) or not all(
        isinstance(g, str) for g in data["grounds"]
    ):
        raise ParseError("field 'grounds' must be an array of strings")

    draft = new_draft(data["case_ref"], data["author_ref"], data["locale"])
    for i, ground in enumerate(data["grounds"], start=1):
        draft = set_element(draft, ElementKind.GROUND, i, ground)
    for kind in (ElementKind.CLAIM, ElementKind.WARRANT, ElementKind.BACKING,
                 ElementKind.QUALIFIER, ElementKind.REBUTTAL):
        value = data[kind.value]
        if value is None:
            continue
        if not isinstance(value, str):
            raise ParseError(f"field {kind.value!r} must be a string or null")
        draft = set_element(draft, kind, None, value)
    return draft
