"""Loading of the locale asset bundle: sentence templates, wizard prompts and
checklist question texts, all keyed by locale tag.

The shipped bundle covers en and pt-BR; a service can point at its own file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import ParseError, UnsupportedLocale
from .model import ElementKind
from .textgen import LocaleTemplate, load_templates


@dataclass(frozen=True)
class PromptText:
    question: str
    hint: str | None = None


@dataclass(frozen=True)
class LocaleBundle:
    """Everything locale-dependent, parsed from one asset document."""

    templates: dict[str, LocaleTemplate]
    prompts: dict[str, dict[ElementKind, PromptText]]
    checklist_texts: dict[str, dict[str, str]]

    def template(self, locale: str) -> LocaleTemplate:
        try:
            return self.templates[locale]
        except KeyError:
            raise UnsupportedLocale(f"no templates for locale {locale!r}") from None

    def prompt(self, locale: str, kind: ElementKind) -> PromptText:
        try:
            return self.prompts[locale][kind]
        except KeyError:
            raise UnsupportedLocale(f"no {kind.value} prompt for locale {locale!r}") from None

    def checklist_text(self, locale: str, question_id: str) -> str:
        try:
            return self.checklist_texts[locale][question_id]
        except KeyError:
            raise UnsupportedLocale(
                f"no checklist text for {question_id!r} in locale {locale!r}"
            ) from None


def _parse_prompts(data: dict, locales: set[str]) -> dict[str, dict[ElementKind, PromptText]]:
    raw = data.get("prompts")
    if not isinstance(raw, dict):
        raise ParseError("locale document needs a top-level 'prompts' object")
    prompts: dict[str, dict[ElementKind, PromptText]] = {}
    for locale in locales:
        per_locale = raw.get(locale)
        if not isinstance(per_locale, dict):
            raise ParseError(f"no prompt set for locale {locale!r}")
        by_kind: dict[ElementKind, PromptText] = {}
        for kind in ElementKind:
            entry = per_locale.get(kind.value)
            if not isinstance(entry, dict) or not entry.get("question"):
                raise ParseError(f"{locale}: missing prompt for {kind.value!r}")
            by_kind[kind] = PromptText(question=entry["question"], hint=entry.get("hint"))
        prompts[locale] = by_kind
    return prompts


def _parse_checklist(data: dict, locales: set[str]) -> dict[str, dict[str, str]]:
    raw = data.get("checklist")
    if not isinstance(raw, dict):
        raise ParseError("locale document needs a top-level 'checklist' object")
    texts: dict[str, dict[str, str]] = {}
    for locale in locales:
        per_locale = raw.get(locale)
        if not isinstance(per_locale, dict):
            raise ParseError(f"no checklist texts for locale {locale!r}")
        for qid, text in per_locale.items():
            if not isinstance(text, str) or not text.strip():
                raise ParseError(f"{locale}: checklist text for {qid!r} is blank")
        texts[locale] = dict(per_locale)
    return texts


def load_bundle(document: bytes | str) -> LocaleBundle:
    """Parse a full locale asset document (templates, prompts, checklist)."""
    templates = load_templates(document)
    data = json.loads(document)
    locales = set(templates)
    return LocaleBundle(
        templates=templates,
        prompts=_parse_prompts(data, locales),
        checklist_texts=_parse_checklist(data, locales),
    )


def load_bundle_file(path: str | Path) -> LocaleBundle:
    return load_bundle(Path(path).read_bytes())


@lru_cache(maxsize=1)
def default_bundle() -> LocaleBundle:
    """The bundle shipped with the package."""
    data = resources.files("argcoach.assets").joinpath("locales.json").read_bytes()
    return load_bundle(data)
