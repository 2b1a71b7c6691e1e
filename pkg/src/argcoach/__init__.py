"""argcoach: tools for composing, critiquing and discussing practical arguments.

The engine lives in plain modules (model, wizard, textgen, checklist, schemes,
ratings); the collaborative platform around it lives in ``argcoach.service``.
"""

from .checklist import (
    Answer,
    ChecklistQuestion,
    ChecklistReport,
    FlawCategory,
    QualityCriterion,
    auto_flags,
    evaluate_checklist,
    verification_roll,
)
from .locales import LocaleBundle, default_bundle, load_bundle, load_bundle_file
from .model import (
    CompletenessStatus,
    ElementKind,
    StructuralIssue,
    ToulminDraft,
    completeness,
    draft_from_document,
    draft_to_document,
    new_draft,
    remove_element,
    set_element,
    structural_issues,
)
from .ratings import (
    Dimension,
    Rating,
    RatingLedger,
    RatingSummary,
)
from .roles import UserRole
from .schemes import (
    ArgumentScheme,
    CriticalQuestion,
    SchemeSet,
    critical_questions,
    parse_scheme_set,
    search_schemes,
    serialize_scheme_set,
    shipped_scheme_set,
)
from .textgen import LocaleTemplate, RenderOptions, enumerate_grounds, load_templates, render
from .wizard import Prompt, Signal, WizardSession, apply_answer, next_prompt, start_session

__version__ = "0.1.0"

__all__ = [
    "Answer",
    "ArgumentScheme",
    "ChecklistQuestion",
    "ChecklistReport",
    "CompletenessStatus",
    "CriticalQuestion",
    "Dimension",
    "ElementKind",
    "FlawCategory",
    "LocaleBundle",
    "LocaleTemplate",
    "Prompt",
    "QualityCriterion",
    "Rating",
    "RatingLedger",
    "RatingSummary",
    "RenderOptions",
    "SchemeSet",
    "Signal",
    "StructuralIssue",
    "ToulminDraft",
    "UserRole",
    "WizardSession",
    "auto_flags",
    "completeness",
    "critical_questions",
    "default_bundle",
    "draft_from_document",
    "draft_to_document",
    "enumerate_grounds",
    "evaluate_checklist",
    "load_bundle",
    "load_bundle_file",
    "load_templates",
    "new_draft",
    "next_prompt",
    "parse_scheme_set",
    "remove_element",
    "render",
    "search_schemes",
    "serialize_scheme_set",
    "set_element",
    "shipped_scheme_set",
    "start_session",
    "structural_issues",
    "verification_roll",
]
