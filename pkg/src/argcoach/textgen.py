"""Render a Toulmin draft into connected prose from per-locale sentence frames.

Generation is pure template substitution: element texts are embedded verbatim,
never reworded. Annotated mode inserts a marker token (e.g. "[W]") immediately
before each element payload.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import BadPattern, DuplicateLocale, EmptyGrounds, MissingClaim, ParseError
from .model import ElementKind, ToulminDraft

#: pattern name -> slots it must contain exactly once
_PATTERN_SLOTS = {
    "backing_sentence": ("B",),
    "warrant_sentence": ("W",),
    "grounds_claim_sentence": ("G", "C"),
    "claim_only_sentence": ("C",),
    "rebuttal_clause": ("R",),
    "qualifier_prefix": ("Q",),
    "ground_item": ("n", "text"),
}

_TEMPLATE_FIELDS = tuple(_PATTERN_SLOTS) + (
    "locale", "ground_separator", "final_conjunction", "marker_map",
)


@dataclass(frozen=True)
class LocaleTemplate:
    """Sentence frames and list connectives for one locale."""

    locale: str
    backing_sentence: str
    warrant_sentence: str
    grounds_claim_sentence: str
    claim_only_sentence: str
    rebuttal_clause: str
    qualifier_prefix: str
    ground_item: str
    ground_separator: str
    final_conjunction: str
    marker_map: dict[ElementKind, str]


@dataclass(frozen=True)
class RenderOptions:
    """Rendering switches; sentences are always joined by a single space."""

    annotated: bool = False


def _fill(pattern: str, values: dict[str, str]) -> str:
    """Substitute {slot} tokens in one pass so payloads are never rescanned."""
    names = "|".join(re.escape(name) for name in values)
    return re.sub(r"\{(" + names + r")\}", lambda m: values[m.group(1)], pattern)


def _check_pattern(name: str, pattern: str, locale: str) -> None:
    for slot in _PATTERN_SLOTS[name]:
        count = pattern.count("{" + slot + "}")
        if count != 1:
            raise BadPattern(
                f"{locale}: pattern {name!r} must contain {{{slot}}} exactly once"
                f" (found {count})"
            )


def _parse_template(entry: dict) -> LocaleTemplate:
    if not isinstance(entry, dict):
        raise ParseError("each locale template must be a JSON object")
    locale = entry.get("locale")
    if not isinstance(locale, str) or not locale:
        raise ParseError("locale template missing a 'locale' tag")
    unknown = set(entry) - set(_TEMPLATE_FIELDS)
    if unknown:
        raise ParseError(f"{locale}: unknown template fields {sorted(unknown)}")
    missing = set(_TEMPLATE_FIELDS) - set(entry)
    if missing:
        raise ParseError(f"{locale}: template missing fields {sorted(missing)}")
    for name in _PATTERN_SLOTS:
        if not isinstance(entry[name], str):
            raise ParseError(f"{locale}: pattern {name!r} must be a string")
        _check_pattern(name, entry[name], locale)
    for name in ("ground_separator", "final_conjunction"):
        if not isinstance(entry[name], str):
            raise ParseError(f"{locale}: {name!r} must be a string")
    raw_markers = entry["marker_map"]
    if not isinstance(raw_markers, dict):
        raise ParseError(f"{locale}: marker_map must be an object")
    markers: dict[ElementKind, str] = {}
    for kind in ElementKind:
        token = raw_markers.get(kind.value)
        if not isinstance(token, str) or not token:
            raise ParseError(f"{locale}: marker_map missing a token for {kind.value!r}")
        markers[kind] = token
    unknown_markers = set(raw_markers) - {k.value for k in ElementKind}
    if unknown_markers:
        raise ParseError(f"{locale}: marker_map has unknown kinds {sorted(unknown_markers)}")
    return LocaleTemplate(
        locale=locale,
        backing_sentence=entry["backing_sentence"],
        warrant_sentence=entry["warrant_sentence"],
        grounds_claim_sentence=entry["grounds_claim_sentence"],
        claim_only_sentence=entry["claim_only_sentence"],
        rebuttal_clause=entry["rebuttal_clause"],
        qualifier_prefix=entry["qualifier_prefix"],
        ground_item=entry["ground_item"],
        ground_separator=entry["ground_separator"],
        final_conjunction=entry["final_conjunction"],
        marker_map=markers,
    )


def load_templates(document: bytes | str) -> dict[str, LocaleTemplate]:
    """Parse a locale-template document into a locale -> template map."""
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad locale document: {exc.msg}",
                         line=exc.lineno, offset=exc.pos) from exc
    if not isinstance(data, dict) or not isinstance(data.get("locales"), list):
        raise ParseError("locale document needs a top-level 'locales' array")
    templates: dict[str, LocaleTemplate] = {}
    for entry in data["locales"]:
        template = _parse_template(entry)
        if template.locale in templates:
            raise DuplicateLocale(f"locale {template.locale!r} declared twice")
        templates[template.locale] = template
    return templates


def enumerate_grounds(grounds: list[str] | tuple[str, ...], template: LocaleTemplate) -> str:
    """Number the grounds and join them, with the final conjunction before the
    last item when there are two or more."""
    if not grounds:
        raise EmptyGrounds("no grounds to enumerate")
    items = [
        _fill(template.ground_item, {"n": str(i), "text": text})
        for i, text in enumerate(grounds, start=1)
    ]
    if len(items) == 1:
        return items[0]
    head = template.ground_separator.join(items[:-1])
    return head + template.ground_separator + template.final_conjunction + items[-1]


def render(draft: ToulminDraft, template: LocaleTemplate,
           options: RenderOptions = RenderOptions()) -> str:
    """Connected prose for a draft: backing sentence, then warrant sentence,
    then the grounds/claim sentence (or the claim-only frame)."""
    if draft.claim is None:
        raise MissingClaim("cannot render a draft without a claim")

    def payload(kind: ElementKind, text: str) -> str:
        if options.annotated:
            return f"{template.marker_map[kind]} {text}"
        return text

    sentences: list[str] = []
    if draft.backing is not None:
        sentences.append(_fill(
            template.backing_sentence,
            {"B": payload(ElementKind.BACKING, draft.backing)},
        ))
    if draft.warrant is not None:
        sentences.append(_fill(
            template.warrant_sentence,
            {"W": payload(ElementKind.WARRANT, draft.warrant)},
        ))

    claim_part = payload(ElementKind.CLAIM, draft.claim)
    if draft.qualifier is not None:
        claim_part = _fill(
            template.qualifier_prefix,
            {"Q": payload(ElementKind.QUALIFIER, draft.qualifier)},
        ) + claim_part
    if draft.rebuttal is not None:
        claim_part = claim_part + _fill(
            template.rebuttal_clause,
            {"R": payload(ElementKind.REBUTTAL, draft.rebuttal)},
        )

    if draft.grounds:
        enumerated = payload(ElementKind.GROUND, enumerate_grounds(draft.grounds, template))
        sentences.append(_fill(
            template.grounds_claim_sentence,
            {"G": enumerated, "C": claim_part},
        ))
    else:
        sentences.append(_fill(template.claim_only_sentence, {"C": claim_part}))
    return " ".join(sentences)
