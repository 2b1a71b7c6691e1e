"""Cases, argument publication, ratings, wizard sessions and search: the
stateful platform around the pure engine modules.

Cases, arguments and ratings persist to the data directory; wizard sessions
and their in-progress drafts are ephemeral. Writes serialize behind one lock;
the search index is derived data rebuilt from the store on demand.
"""

from __future__ import annotations

import hashlib
import json
import threading
import uuid
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from enum import Enum
from importlib import resources
from pathlib import Path

from .. import checklist as checklist_mod
from .. import schemes as schemes_mod
from .. import textgen, wizard
from ..errors import (
    Forbidden,
    InvalidCase,
    NotPublishable,
    UnknownArgument,
    UnknownCase,
    UnknownDraft,
    UnknownScheme,
    UnknownSession,
    UnsupportedLocale,
)
from ..locales import LocaleBundle, load_bundle
from ..model import (
    ToulminDraft,
    blocking_issues,
    draft_to_document,
)
from ..ratings import ArgumentMeta, Dimension, Rating, RatingLedger, RankedArgument
from ..roles import UserRole
from .indexer import DocKind, IndexStats, SearchHit, SearchIndex
from .storage import JsonStore


class Operation(Enum):
    CREATE_CASE = "create_case"
    POST_ARGUMENT = "post_argument"
    SUBMIT_RATING = "submit_rating"
    REINDEX = "reindex"
    READ = "read"
    SEARCH = "search"
    EXPORT = "export"
    WIZARD = "wizard"
    RENDER_DRAFT = "render_draft"
    RUN_CHECKLIST = "run_checklist"


_ALL_ROLES = frozenset(UserRole)

#: Total allow map: every (operation, role) pair is decided here.
AUTH_MATRIX: dict[Operation, frozenset[UserRole]] = {
    Operation.CREATE_CASE: frozenset({UserRole.MODERATOR, UserRole.MANAGER}),
    Operation.POST_ARGUMENT: _ALL_ROLES,
    Operation.SUBMIT_RATING: _ALL_ROLES,
    Operation.REINDEX: frozenset({UserRole.MANAGER}),
    Operation.READ: _ALL_ROLES,
    Operation.SEARCH: _ALL_ROLES,
    Operation.EXPORT: _ALL_ROLES,
    Operation.WIZARD: _ALL_ROLES,
    Operation.RENDER_DRAFT: _ALL_ROLES,
    Operation.RUN_CHECKLIST: _ALL_ROLES,
}


def authorize(operation: Operation, role: UserRole) -> None:
    if role not in AUTH_MATRIX[operation]:
        raise Forbidden(f"role {role.value!r} may not {operation.value}")


class SortOrder(Enum):
    NEWEST = "newest"
    TOP_COMMUNITY = "top_community"
    TOP_MODERATOR = "top_moderator"


class ExportFormat(Enum):
    STRUCTURED_JSON = "structured_json"
    PLAIN_TEXT = "plain_text"


@dataclass(frozen=True)
class Case:
    id: str
    title: str
    abstract: str
    attachments: tuple[str, ...]
    author_ref: str
    opened_at: str
    tags: tuple[str, ...]
    seq: int

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "abstract": self.abstract,
            "attachments": list(self.attachments),
            "author_ref": self.author_ref,
            "opened_at": self.opened_at,
            "tags": list(self.tags),
            "seq": self.seq,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Case":
        return cls(
            id=data["id"],
            title=data["title"],
            abstract=data["abstract"],
            attachments=tuple(data["attachments"]),
            author_ref=data["author_ref"],
            opened_at=data["opened_at"],
            tags=tuple(data["tags"]),
            seq=data["seq"],
        )


@dataclass(frozen=True)
class ArgumentRecord:
    """A draft frozen at publication, with its cached rendering."""

    id: str
    case_ref: str
    author_ref: str
    draft: ToulminDraft
    rendered_text: str
    template_version: str
    published_at: str
    seq: int

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "case_ref": self.case_ref,
            "author_ref": self.author_ref,
            "draft": _draft_state(self.draft),
            "rendered_text": self.rendered_text,
            "template_version": self.template_version,
            "published_at": self.published_at,
            "seq": self.seq,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ArgumentRecord":
        return cls(
            id=data["id"],
            case_ref=data["case_ref"],
            author_ref=data["author_ref"],
            draft=_draft_from_state(data["draft"]),
            rendered_text=data["rendered_text"],
            template_version=data["template_version"],
            published_at=data["published_at"],
            seq=data["seq"],
        )


@dataclass(frozen=True)
class Page:
    items: list
    page: int
    page_size: int
    total: int


def _draft_state(draft: ToulminDraft) -> dict:
    state = draft_to_document(draft)
    state["id"] = draft.id
    state["created_at"] = draft.created_at.isoformat()
    state["modified_at"] = draft.modified_at.isoformat()
    return state


def _draft_from_state(state: dict) -> ToulminDraft:
    return ToulminDraft(
        id=state["id"],
        case_ref=state["case_ref"],
        author_ref=state["author_ref"],
        locale=state["locale"],
        claim=state["claim"],
        grounds=tuple(state["grounds"]),
        warrant=state["warrant"],
        backing=state["backing"],
        qualifier=state["qualifier"],
        rebuttal=state["rebuttal"],
        created_at=datetime.fromisoformat(state["created_at"]),
        modified_at=datetime.fromisoformat(state["modified_at"]),
    )


def _now_iso() -> str:
    return datetime.now(timezone.utc).isoformat()


def _case_index_text(case: Case) -> str:
    return " ".join((case.title, case.abstract, *case.tags))


def _argument_index_text(draft: ToulminDraft) -> str:
    parts = [draft.claim or ""]
    parts.extend(draft.grounds)
    if draft.warrant:
        parts.append(draft.warrant)
    if draft.backing:
        parts.append(draft.backing)
    return " ".join(parts)


def _load_locale_assets(path: Path | None) -> tuple[LocaleBundle, str]:
    if path is None:
        raw = resources.files("argcoach.assets").joinpath("locales.json").read_bytes()
    else:
        raw = Path(path).read_bytes()
    version = hashlib.sha256(raw).hexdigest()[:12]
    return load_bundle(raw), version


class Repository:
    def __init__(
        self,
        data_dir: str | Path,
        locale_assets: Path | None = None,
        schemes_dir: Path | None = None,
        default_locale: str = "en",
    ):
        self._store = JsonStore(data_dir)
        self.bundle, self.template_version = _load_locale_assets(locale_assets)
        if default_locale not in self.bundle.templates:
            raise UnsupportedLocale(f"default locale {default_locale!r} has no assets")
        self.default_locale = default_locale
        self._lock = threading.RLock()
        self._cases: dict[str, Case] = {}
        self._arguments: dict[str, ArgumentRecord] = {}
        self._drafts: dict[str, ToulminDraft] = {}
        self._sessions: dict[str, wizard.WizardSession] = {}
        self._ratings = RatingLedger(self)
        self._index = SearchIndex()
        self._seq = 0
        self._schemes_dir = Path(schemes_dir) if schemes_dir else self._store.data_dir / "schemes"
        self._schemes: dict[str, schemes_mod.SchemeSet] = {}
        self._load()
        self.rebuild_index()
        self._load_schemes()

    # --- persistence ---

    def _load(self) -> None:
        for entry in self._store.read("cases", []):
            case = Case.from_dict(entry)
            self._cases[case.id] = case
        for entry in self._store.read("arguments", []):
            record = ArgumentRecord.from_dict(entry)
            self._arguments[record.id] = record
        ratings = [
            Rating(
                argument_ref=entry["argument_ref"],
                rater_ref=entry["rater_ref"],
                stars=entry["stars"],
                dimension=Dimension(entry["dimension"]),
                comment=entry.get("comment"),
                rated_at=datetime.fromisoformat(entry["rated_at"]),
            )
            for entry in self._store.read("ratings", [])
        ]
        self._ratings.restore(ratings)
        self._seq = self._store.read("meta", {}).get("seq", 0)

    def _save_cases(self) -> None:
        ordered = sorted(self._cases.values(), key=lambda c: c.seq)
        self._store.write("cases", [c.to_dict() for c in ordered])

    def _save_arguments(self) -> None:
        ordered = sorted(self._arguments.values(), key=lambda a: a.seq)
        self._store.write("arguments", [a.to_dict() for a in ordered])

    def _save_ratings(self) -> None:
        entries = [
            {
                "argument_ref": r.argument_ref,
                "rater_ref": r.rater_ref,
                "stars": r.stars,
                "dimension": r.dimension.value,
                "comment": r.comment,
                "rated_at": r.rated_at.isoformat(),
            }
            for r in self._ratings.snapshot()
        ]
        entries.sort(key=lambda e: (e["argument_ref"], e["rater_ref"]))
        self._store.write("ratings", entries)

    def _save_meta(self) -> None:
        self._store.write("meta", {"seq": self._seq})

    def _next_seq(self) -> int:
        self._seq += 1
        self._save_meta()
        return self._seq

    def _load_schemes(self) -> None:
        for locale in schemes_mod.shipped_locales():
            self._schemes[locale] = schemes_mod.shipped_scheme_set(locale)
        if self._schemes_dir.is_dir():
            for path in sorted(self._schemes_dir.glob("*.json")):
                scheme_set = schemes_mod.parse_scheme_set(path.read_bytes())
                self._schemes[scheme_set.locale] = scheme_set

    # --- rating catalog protocol ---

    def argument_meta(self, argument_ref: str) -> ArgumentMeta | None:
        record = self._arguments.get(argument_ref)
        if record is None:
            return None
        return ArgumentMeta(
            case_ref=record.case_ref,
            author_ref=record.author_ref,
            published=True,
            order=record.seq,
        )

    def case_arguments(self, case_ref: str) -> list[str] | None:
        if case_ref not in self._cases:
            return None
        records = [r for r in self._arguments.values() if r.case_ref == case_ref]
        records.sort(key=lambda r: r.seq)
        return [r.id for r in records]

    # --- cases ---

    def create_case(
        self,
        author_ref: str,
        role: UserRole,
        title: str,
        abstract: str,
        attachments: tuple[str, ...] = (),
        tags: tuple[str, ...] = (),
    ) -> str:
        authorize(Operation.CREATE_CASE, role)
        if not title.strip() or not abstract.strip():
            raise InvalidCase("a case needs a non-empty title and abstract")
        with self._lock:
            case = Case(
                id=uuid.uuid4().hex,
                title=title.strip(),
                abstract=abstract.strip(),
                attachments=tuple(attachments),
                author_ref=author_ref,
                opened_at=_now_iso(),
                tags=tuple(tags),
                seq=self._next_seq(),
            )
            self._cases[case.id] = case
            self._save_cases()
            self._index.add_document(DocKind.CASE, case.id, _case_index_text(case), case.seq)
        return case.id

    def list_cases(self) -> list[Case]:
        return sorted(self._cases.values(), key=lambda c: c.seq, reverse=True)

    def get_case(self, case_id: str) -> Case:
        try:
            return self._cases[case_id]
        except KeyError:
            raise UnknownCase(f"no case {case_id!r}") from None

    # --- argument publication ---

    def post_argument(self, case_ref: str, draft: ToulminDraft, author_ref: str) -> str:
        self.get_case(case_ref)
        issues = blocking_issues(draft)
        if issues:
            raise NotPublishable(issues)
        template = self.bundle.template(draft.locale)
        frozen = replace(draft, case_ref=case_ref, author_ref=author_ref)
        rendered = textgen.render(frozen, template, textgen.RenderOptions(annotated=True))
        with self._lock:
            record = ArgumentRecord(
                id=uuid.uuid4().hex,
                case_ref=case_ref,
                author_ref=author_ref,
                draft=frozen,
                rendered_text=rendered,
                template_version=self.template_version,
                published_at=_now_iso(),
                seq=self._next_seq(),
            )
            self._arguments[record.id] = record
            self._save_arguments()
            self._index.add_document(
                DocKind.ARGUMENT, record.id, _argument_index_text(frozen), record.seq)
        return record.id

    def get_argument(self, argument_id: str) -> ArgumentRecord:
        try:
            return self._arguments[argument_id]
        except KeyError:
            raise UnknownArgument(f"no argument {argument_id!r}") from None

    def list_arguments(
        self,
        case_ref: str,
        sort: SortOrder = SortOrder.NEWEST,
        page: int = 1,
        page_size: int = 20,
        author: str | None = None,
    ) -> Page:
        members = self.case_arguments(case_ref)
        if members is None:
            raise UnknownCase(f"no case {case_ref!r}")
        records = [self._arguments[i] for i in members]
        if author is not None:
            records = [r for r in records if r.author_ref == author]
        if sort is SortOrder.NEWEST:
            records.sort(key=lambda r: r.seq, reverse=True)
        else:
            dimension = (Dimension.COMMUNITY if sort is SortOrder.TOP_COMMUNITY
                         else Dimension.MODERATOR)
            ranked = self._ratings.top_arguments(case_ref, dimension, max(len(members), 1))
            position = {entry.argument_ref: i for i, entry in enumerate(ranked)}
            rated = [r for r in records if r.id in position]
            rated.sort(key=lambda r: position[r.id])
            unrated = [r for r in records if r.id not in position]
            unrated.sort(key=lambda r: r.seq, reverse=True)
            records = rated + unrated
        total = len(records)
        if page < 1:
            raise ValueError("page starts at 1")
        start = (page - 1) * page_size
        return Page(items=records[start:start + page_size], page=page,
                    page_size=page_size, total=total)

    # --- ratings ---

    def submit_rating(self, argument_ref: str, rater_ref: str, role: UserRole,
                      stars: int, comment: str | None = None) -> Rating:
        authorize(Operation.SUBMIT_RATING, role)
        rating = self._ratings.submit(argument_ref, rater_ref, role, stars, comment)
        with self._lock:
            self._save_ratings()
        return rating

    def rating_summary(self, argument_ref: str):
        return self._ratings.aggregate(argument_ref)

    def top_arguments(self, case_ref: str, dimension: Dimension, k: int) -> list[RankedArgument]:
        return self._ratings.top_arguments(case_ref, dimension, k)

    # --- search ---

    def search(self, query: str) -> list[SearchHit]:
        return self._index.search(query)

    def rebuild_index(self) -> IndexStats:
        with self._lock:
            self._index.clear()
            for case in self._cases.values():
                self._index.add_document(DocKind.CASE, case.id,
                                         _case_index_text(case), case.seq)
            for record in self._arguments.values():
                self._index.add_document(DocKind.ARGUMENT, record.id,
                                         _argument_index_text(record.draft), record.seq)
            return IndexStats(
                cases=len(self._cases),
                arguments=len(self._arguments),
                tokens=self._index.token_count(),
            )

    # --- export ---

    def export_argument(self, argument_id: str, format: ExportFormat) -> bytes:
        record = self.get_argument(argument_id)
        if format is ExportFormat.PLAIN_TEXT:
            return record.rendered_text.encode("utf-8")
        doc = draft_to_document(record.draft)
        return json.dumps(doc, ensure_ascii=False, indent=2).encode("utf-8")

    # --- wizard sessions and drafts (ephemeral) ---

    def create_session(self, case_ref: str, author_ref: str,
                       locale: str | None = None) -> tuple[str, wizard.WizardSession]:
        self.get_case(case_ref)
        locale = locale or self.default_locale
        if locale not in self.bundle.templates:
            raise UnsupportedLocale(f"locale {locale!r} has no assets")
        draft = ToulminDraft(
            id=uuid.uuid4().hex,
            case_ref=case_ref,
            author_ref=author_ref,
            locale=locale,
        )
        session = wizard.start_session(draft)
        session_id = uuid.uuid4().hex
        with self._lock:
            self._sessions[session_id] = session
            self._drafts[draft.id] = draft
        return session_id, session

    def get_session(self, session_id: str) -> wizard.WizardSession:
        try:
            return self._sessions[session_id]
        except KeyError:
            raise UnknownSession(f"no wizard session {session_id!r}") from None

    def session_prompt(self, session_id: str) -> wizard.Prompt | None:
        return wizard.next_prompt(self.get_session(session_id), self.bundle)

    def session_answer(self, session_id: str,
                       answer: str | wizard.Signal) -> wizard.WizardSession:
        with self._lock:
            session = wizard.apply_answer(self.get_session(session_id), answer)
            self._sessions[session_id] = session
            self._drafts[session.draft.id] = session.draft
        return session

    def get_draft(self, draft_id: str) -> ToulminDraft:
        try:
            return self._drafts[draft_id]
        except KeyError:
            raise UnknownDraft(f"no draft {draft_id!r}") from None

    def render_draft(self, draft_id: str, locale: str | None = None,
                     annotated: bool = False) -> str:
        draft = self.get_draft(draft_id)
        template = self.bundle.template(locale or draft.locale)
        return textgen.render(draft, template, textgen.RenderOptions(annotated=annotated))

    def checklist_draft(self, draft_id: str, answers: dict[str, checklist_mod.Answer],
                        locale: str | None = None) -> checklist_mod.ChecklistReport:
        draft = self.get_draft(draft_id)
        return checklist_mod.evaluate_checklist(
            draft, answers, locale=locale or draft.locale, bundle=self.bundle)

    def verification_roll(self, locale: str | None = None) -> list[checklist_mod.ChecklistQuestion]:
        return checklist_mod.verification_roll(locale or self.default_locale, self.bundle)

    # --- schemes ---

    def scheme_set(self, locale: str | None = None) -> schemes_mod.SchemeSet:
        locale = locale or self.default_locale
        try:
            return self._schemes[locale]
        except KeyError:
            raise UnknownScheme(f"no scheme set for locale {locale!r}") from None

    def search_schemes(self, query: str, locale: str | None = None):
        return schemes_mod.search_schemes(self.scheme_set(locale), query)

    def critical_questions(self, scheme_id: str, locale: str | None = None):
        return schemes_mod.critical_questions(self.scheme_set(locale), scheme_id)

    def seed_schemes(self, document: bytes) -> schemes_mod.SchemeSet:
        """Validate a scheme-set document and install it for its locale."""
        scheme_set = schemes_mod.parse_scheme_set(document)
        self._schemes_dir.mkdir(parents=True, exist_ok=True)
        path = self._schemes_dir / f"{scheme_set.locale}.json"
        path.write_bytes(schemes_mod.serialize_scheme_set(scheme_set))
        with self._lock:
            self._schemes[scheme_set.locale] = scheme_set
        return scheme_set
