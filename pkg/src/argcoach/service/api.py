"""HTTP/JSON surface over the repository. Reads are public; writes carry a
static bearer token mapped to a (user, role) pair."""

from __future__ import annotations

from typing import Mapping

from fastapi import Depends, FastAPI, Header, HTTPException, Query, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .. import errors
from ..checklist import Answer, ChecklistReport
from ..model import completeness, draft_from_document, draft_to_document
from ..ratings import RatingSummary
from ..roles import UserRole
from ..schemes import ArgumentScheme, CriticalQuestion
from ..wizard import Prompt, Signal, WizardSession
from .repository import (
    ArgumentRecord,
    Case,
    ExportFormat,
    Operation,
    Repository,
    SortOrder,
    authorize,
)

_STATUS_BY_ERROR: tuple[tuple[type[errors.ArgcoachError], int], ...] = (
    (errors.Forbidden, 403),
    (errors.SelfRating, 403),
    (errors.UnknownCase, 404),
    (errors.UnknownArgument, 404),
    (errors.UnknownDraft, 404),
    (errors.UnknownSession, 404),
    (errors.UnknownScheme, 404),
    (errors.NotPresent, 404),
    (errors.NotRatable, 409),
    (errors.SessionFinished, 409),
    (errors.NotPublishable, 422),
    (errors.MandatoryElement, 422),
    (errors.MissingClaim, 422),
)


def _status_for(exc: errors.ArgcoachError) -> int:
    for kind, status in _STATUS_BY_ERROR:
        if isinstance(exc, kind):
            return status
    return 400


class CaseIn(BaseModel):
    title: str
    abstract: str
    attachments: list[str] = Field(default_factory=list)
    tags: list[str] = Field(default_factory=list)


class ArgumentIn(BaseModel):
    draft_id: str | None = None
    draft: dict | None = None


class RatingIn(BaseModel):
    stars: int
    comment: str | None = None


class SessionIn(BaseModel):
    case_ref: str
    locale: str | None = None


class AnswerIn(BaseModel):
    answer: str | None = None
    signal: str | None = None


class ChecklistIn(BaseModel):
    answers: dict[str, str]


def case_json(case: Case) -> dict:
    return {
        "id": case.id,
        "title": case.title,
        "abstract": case.abstract,
        "attachments": list(case.attachments),
        "author_ref": case.author_ref,
        "opened_at": case.opened_at,
        "tags": list(case.tags),
    }


def argument_json(record: ArgumentRecord) -> dict:
    return {
        "id": record.id,
        "case_ref": record.case_ref,
        "author_ref": record.author_ref,
        "published_at": record.published_at,
        "rendered_text": record.rendered_text,
        "template_version": record.template_version,
        "draft": draft_to_document(record.draft),
    }


def summary_json(summary: RatingSummary) -> dict:
    return {
        "argument_ref": summary.argument_ref,
        "community_count": summary.community_count,
        "community_mean": float(summary.community_mean)
        if summary.community_mean is not None else None,
        "moderator_count": summary.moderator_count,
        "moderator_mean": float(summary.moderator_mean)
        if summary.moderator_mean is not None else None,
    }


def prompt_json(prompt: Prompt) -> dict:
    return {"target": prompt.target.value, "question": prompt.question, "hint": prompt.hint}


def session_json(session_id: str, session: WizardSession,
                 prompt: Prompt | None, publishable: bool) -> dict:
    return {
        "session_id": session_id,
        "draft_id": session.draft.id,
        "locale": session.locale,
        "finished": session.finished,
        "done": session.finished,
        "prompt": prompt_json(prompt) if prompt else None,
        "completeness": completeness(session.draft).name.lower(),
        "publishable": publishable,
        "grounds": list(session.draft.grounds),
    }


def scheme_json(scheme: ArgumentScheme) -> dict:
    return {
        "id": scheme.id,
        "name": scheme.name,
        "premises": list(scheme.premise_templates),
        "conclusion": scheme.conclusion_template,
        "critical_questions": [cq_json(cq) for cq in scheme.critical_questions],
        "source": scheme.source,
    }


def cq_json(cq: CriticalQuestion) -> dict:
    return {"id": cq.id, "text": cq.text, "kind": cq.kind.value}


def report_json(report: ChecklistReport) -> dict:
    return {
        "draft_ref": report.draft_ref,
        "answers": {qid: answer.value for qid, answer in report.answers.items()},
        "flaws": sorted(flaw.value for flaw in report.flaws),
        "advisory": list(report.advisory),
    }


def create_app(repo: Repository,
               tokens: Mapping[str, tuple[str, UserRole]] | None = None) -> FastAPI:
    app = FastAPI(title="argcoach", version="0.1.0")
    # the web client is served from its own origin
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    token_table = dict(tokens or {})

    def current_user(authorization: str | None = Header(default=None)) -> tuple[str, UserRole]:
        if not authorization or not authorization.startswith("Bearer "):
            raise HTTPException(status_code=401, detail="bearer token required")
        entry = token_table.get(authorization.removeprefix("Bearer ").strip())
        if entry is None:
            raise HTTPException(status_code=401, detail="unknown token")
        return entry

    @app.exception_handler(errors.ArgcoachError)
    async def argcoach_error(request: Request, exc: errors.ArgcoachError):
        body = {"error": type(exc).__name__, "detail": str(exc)}
        if isinstance(exc, errors.NotPublishable):
            body["issues"] = [issue.describe() for issue in exc.issues]
        return JSONResponse(status_code=_status_for(exc), content=body)

    @app.get("/health")
    def health():
        return {"status": "ok"}

    # --- cases ---

    @app.get("/cases")
    def list_cases():
        return {"cases": [case_json(c) for c in repo.list_cases()]}

    @app.post("/cases", status_code=201)
    def create_case(body: CaseIn, user=Depends(current_user)):
        user_id, role = user
        case_id = repo.create_case(
            author_ref=user_id,
            role=role,
            title=body.title,
            abstract=body.abstract,
            attachments=tuple(body.attachments),
            tags=tuple(body.tags),
        )
        return {"id": case_id}

    @app.get("/cases/{case_id}/arguments")
    def list_arguments(
        case_id: str,
        sort: str = Query("newest"),
        page: int = Query(1, ge=1),
        page_size: int = Query(20, ge=1, le=100),
        author: str | None = Query(None),
    ):
        try:
            order = SortOrder(sort)
        except ValueError:
            raise HTTPException(status_code=400, detail=f"unknown sort {sort!r}")
        result = repo.list_arguments(case_id, sort=order, page=page,
                                     page_size=page_size, author=author)
        return {
            "items": [argument_json(r) for r in result.items],
            "page": result.page,
            "page_size": result.page_size,
            "total": result.total,
        }

    @app.post("/cases/{case_id}/arguments", status_code=201)
    def post_argument(case_id: str, body: ArgumentIn, user=Depends(current_user)):
        user_id, role = user
        authorize(Operation.POST_ARGUMENT, role)
        if (body.draft_id is None) == (body.draft is None):
            raise HTTPException(status_code=400,
                                detail="provide exactly one of draft_id or draft")
        if body.draft_id is not None:
            draft = repo.get_draft(body.draft_id)
        else:
            draft = draft_from_document(body.draft)
        argument_id = repo.post_argument(case_id, draft, author_ref=user_id)
        return {"id": argument_id}

    # --- arguments ---

    @app.get("/arguments/{argument_id}")
    def get_argument(argument_id: str):
        return argument_json(repo.get_argument(argument_id))

    @app.get("/arguments/{argument_id}/export")
    def export_argument(argument_id: str, format: str = Query("structured_json")):
        try:
            export_format = ExportFormat(format)
        except ValueError:
            raise HTTPException(status_code=400, detail=f"unknown format {format!r}")
        payload = repo.export_argument(argument_id, export_format)
        media = ("application/json" if export_format is ExportFormat.STRUCTURED_JSON
                 else "text/plain; charset=utf-8")
        return Response(content=payload, media_type=media)

    @app.post("/arguments/{argument_id}/ratings", status_code=201)
    def rate_argument(argument_id: str, body: RatingIn, user=Depends(current_user)):
        user_id, role = user
        rating = repo.submit_rating(argument_id, user_id, role, body.stars, body.comment)
        return {
            "argument_ref": rating.argument_ref,
            "rater_ref": rating.rater_ref,
            "stars": rating.stars,
            "dimension": rating.dimension.value,
            "comment": rating.comment,
            "rated_at": rating.rated_at.isoformat(),
        }

    @app.get("/arguments/{argument_id}/ratings/summary")
    def ratings_summary(argument_id: str):
        return summary_json(repo.rating_summary(argument_id))

    # --- schemes ---

    @app.get("/schemes")
    def schemes(q: str = Query(""), locale: str | None = Query(None)):
        found = repo.search_schemes(q, locale)
        return {
            "locale": locale or repo.default_locale,
            "schemes": [scheme_json(s) for s in found],
        }

    @app.get("/schemes/{scheme_id}/critical-questions")
    def scheme_questions(scheme_id: str, locale: str | None = Query(None)):
        questions = repo.critical_questions(scheme_id, locale)
        return {
            "scheme_id": scheme_id,
            "locale": locale or repo.default_locale,
            "critical_questions": [cq_json(cq) for cq in questions],
        }

    # --- wizard ---

    def _session_payload(session_id: str) -> dict:
        session = repo.get_session(session_id)
        prompt = repo.session_prompt(session_id)
        publishable = (session.draft.claim is not None
                       and len(session.draft.grounds) > 0)
        return session_json(session_id, session, prompt, publishable)

    @app.post("/wizard/sessions", status_code=201)
    def open_session(body: SessionIn, user=Depends(current_user)):
        user_id, role = user
        authorize(Operation.WIZARD, role)
        session_id, _session = repo.create_session(body.case_ref, user_id, body.locale)
        return _session_payload(session_id)

    @app.get("/wizard/sessions/{session_id}/prompt")
    def session_prompt(session_id: str):
        return _session_payload(session_id)

    @app.post("/wizard/sessions/{session_id}/answers")
    def session_answer(session_id: str, body: AnswerIn, user=Depends(current_user)):
        if (body.answer is None) == (body.signal is None):
            raise HTTPException(status_code=400,
                                detail="provide exactly one of answer or signal")
        if body.signal is not None:
            try:
                answer: str | Signal = Signal(body.signal)
            except ValueError:
                raise HTTPException(status_code=400,
                                    detail=f"unknown signal {body.signal!r}")
        else:
            answer = body.answer
        repo.session_answer(session_id, answer)
        return _session_payload(session_id)

    # --- drafts ---

    @app.post("/drafts/{draft_id}/render")
    def render_draft(draft_id: str, locale: str | None = Query(None),
                     annotated: bool = Query(False)):
        text = repo.render_draft(draft_id, locale=locale, annotated=annotated)
        return {
            "draft_id": draft_id,
            "locale": locale or repo.get_draft(draft_id).locale,
            "annotated": annotated,
            "text": text,
        }

    @app.post("/drafts/{draft_id}/checklist")
    def run_checklist(draft_id: str, body: ChecklistIn, locale: str | None = Query(None)):
        try:
            answers = {qid: Answer(value) for qid, value in body.answers.items()}
        except ValueError:
            raise HTTPException(status_code=400,
                                detail="answers must be yes, no or unsure")
        report = repo.checklist_draft(draft_id, answers, locale=locale)
        return report_json(report)

    # --- search and admin ---

    @app.get("/search")
    def search(q: str = Query("")):
        hits = []
        for hit in repo.search(q):
            entry = {"kind": hit.kind.value, "id": hit.doc_id, "score": hit.score}
            if hit.kind.value == "case":
                entry["label"] = repo.get_case(hit.doc_id).title
            else:
                entry["label"] = repo.get_argument(hit.doc_id).draft.claim
            hits.append(entry)
        return {"query": q, "hits": hits}

    @app.post("/admin/reindex")
    def reindex(user=Depends(current_user)):
        _user_id, role = user
        authorize(Operation.REINDEX, role)
        stats = repo.rebuild_index()
        return {"cases": stats.cases, "arguments": stats.arguments,
                "tokens": stats.tokens, "documents": stats.documents}

    return app
