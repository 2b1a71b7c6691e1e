"""Argumentation schemes with critical questions: parsing, canonical
serialization, and name search over immutable scheme sets."""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources

from .errors import DuplicateSchemeId, InvalidScheme, ParseError, UnknownScheme


class SchemeWarning(UserWarning):
    """Non-fatal oddity in a scheme-set document (e.g. a scheme without CQs)."""


class QuestionKind(Enum):
    PREMISE_ACCEPTABILITY = "premise_acceptability"
    EXCEPTION = "exception"


@dataclass(frozen=True)
class CriticalQuestion:
    id: str
    text: str
    kind: QuestionKind


@dataclass(frozen=True)
class ArgumentScheme:
    id: str
    name: str
    premise_templates: tuple[str, ...]
    conclusion_template: str
    critical_questions: tuple[CriticalQuestion, ...]
    source: str


@dataclass(frozen=True)
class SchemeSet:
    name: str
    locale: str
    schemes: tuple[ArgumentScheme, ...]

    def get(self, scheme_id: str) -> ArgumentScheme:
        for scheme in self.schemes:
            if scheme.id == scheme_id:
                return scheme
        raise UnknownScheme(f"no scheme {scheme_id!r} in set {self.name!r}")


_SET_FIELDS = {"name", "locale", "schemes"}
_SCHEME_FIELDS = {"id", "name", "premises", "conclusion", "critical_questions", "source"}
_CQ_FIELDS = {"id", "text", "kind"}


def _require_str(obj: dict, key: str, where: str) -> str:
    value = obj.get(key)
    if not isinstance(value, str):
        raise ParseError(f"{where}: field {key!r} must be a string")
    return value


def _parse_cq(entry: dict, where: str) -> CriticalQuestion:
    if not isinstance(entry, dict):
        raise ParseError(f"{where}: critical questions must be objects")
    unknown = set(entry) - _CQ_FIELDS
    if unknown:
        raise ParseError(f"{where}: unknown critical-question fields {sorted(unknown)}")
    text = _require_str(entry, "text", where)
    if not text.strip():
        raise InvalidScheme(f"{where}: critical question text is blank")
    kind_raw = _require_str(entry, "kind", where)
    try:
        kind = QuestionKind(kind_raw)
    except ValueError:
        raise ParseError(f"{where}: unknown critical-question kind {kind_raw!r}") from None
    return CriticalQuestion(id=_require_str(entry, "id", where), text=text, kind=kind)


def _parse_scheme(entry: dict) -> ArgumentScheme:
    if not isinstance(entry, dict):
        raise ParseError("schemes must be objects")
    unknown = set(entry) - _SCHEME_FIELDS
    if unknown:
        raise ParseError(f"unknown scheme fields {sorted(unknown)}")
    missing = _SCHEME_FIELDS - set(entry)
    if missing:
        raise ParseError(f"scheme missing fields {sorted(missing)}")
    scheme_id = _require_str(entry, "id", "scheme")
    where = f"scheme {scheme_id!r}"
    name = _require_str(entry, "name", where)
    if not name.strip():
        raise InvalidScheme(f"{where}: name is blank")
    premises = entry["premises"]
    if not isinstance(premises, list) or not all(isinstance(p, str) for p in premises):
        raise ParseError(f"{where}: premises must be an array of strings")
    if not premises:
        raise InvalidScheme(f"{where}: at least one premise template is required")
    cqs = entry["critical_questions"]
    if not isinstance(cqs, list):
        raise ParseError(f"{where}: critical_questions must be an array")
    if not cqs:
        warnings.warn(f"{where} has no critical questions", SchemeWarning, stacklevel=3)
    return ArgumentScheme(
        id=scheme_id,
        name=name,
        premise_templates=tuple(premises),
        conclusion_template=_require_str(entry, "conclusion", where),
        critical_questions=tuple(_parse_cq(cq, where) for cq in cqs),
        source=_require_str(entry, "source", where),
    )


def parse_scheme_set(document: bytes | str) -> SchemeSet:
    """Strictly parse a scheme-set document: unknown fields and duplicate
    scheme ids are rejected."""
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad scheme document: {exc.msg}",
                         line=exc.lineno, offset=exc.pos) from exc
    if not isinstance(data, dict):
        raise ParseError("scheme document must be a JSON object")
    unknown = set(data) - _SET_FIELDS
    if unknown:
        raise ParseError(f"unknown scheme-set fields {sorted(unknown)}")
    missing = _SET_FIELDS - set(data)
    if missing:
        raise ParseError(f"scheme-set missing fields {sorted(missing)}")
    if not isinstance(data["schemes"], list):
        raise ParseError("'schemes' must be an array")
    schemes: list[ArgumentScheme] = []
    seen: set[str] = set()
    for entry in data["schemes"]:
        scheme = _parse_scheme(entry)
        if scheme.id in seen:
            raise DuplicateSchemeId(f"scheme id {scheme.id!r} declared twice")
        seen.add(scheme.id)
        schemes.append(scheme)
    return SchemeSet(
        name=_require_str(data, "name", "scheme set"),
        locale=_require_str(data, "locale", "scheme set"),
        schemes=tuple(schemes),
    )


def serialize_scheme_set(scheme_set: SchemeSet) -> bytes:
    """Canonical UTF-8 serialization: fixed key order, stable list order, so
    serializing the same set twice yields identical bytes."""
    doc = {
        "name": scheme_set.name,
        "locale": scheme_set.locale,
        "schemes": [
            {
                "id": s.id,
                "name": s.name,
                "premises": list(s.premise_templates),
                "conclusion": s.conclusion_template,
                "critical_questions": [
                    {"id": cq.id, "text": cq.text, "kind": cq.kind.value}
                    for cq in s.critical_questions
                ],
                "source": s.source,
            }
            for s in scheme_set.schemes
        ],
    }
    return json.dumps(doc, ensure_ascii=False, indent=2).encode("utf-8")


def search_schemes(scheme_set: SchemeSet, query: str) -> list[ArgumentScheme]:
    """Case-insensitive substring match over scheme names, in set order.
    An empty query returns every scheme."""
    needle = query.casefold()
    return [s for s in scheme_set.schemes if needle in s.name.casefold()]


def critical_questions(scheme_set: SchemeSet, scheme_id: str) -> list[CriticalQuestion]:
    """A scheme's critical questions in authored order."""
    return list(scheme_set.get(scheme_id).critical_questions)


@lru_cache(maxsize=None)
def shipped_scheme_set(locale: str) -> SchemeSet:
    """The scheme set bundled with the package for one locale."""
    try:
        data = resources.files("argcoach.assets.schemes").joinpath(f"{locale}.json").read_bytes()
    except FileNotFoundError:
        raise UnknownScheme(f"no shipped scheme set for locale {locale!r}") from None
    return parse_scheme_set(data)


def shipped_locales() -> list[str]:
    """Locales for which a scheme set ships with the package."""
    root = resources.files("argcoach.assets.schemes")
    return sorted(
        entry.name[:-5] for entry in root.iterdir()
        if entry.name.endswith(".json")
    )
