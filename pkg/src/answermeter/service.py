"""HTTP JSON facade over the meter, wordlists, suggestions and sessions.

Every response body is UTF-8 JSON.  Errors use one shape everywhere:
{"code", "message", "field"} with code mapped 1:1 to the HTTP status
(validation 422, conflict 409, not_found 404, state 409, internal 500).
Answer text is never logged and never echoed back once stored.
"""

from __future__ import annotations

import logging
import os
import secrets
import threading
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from fastapi import FastAPI, Header, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import defaults
from .errors import AnswerMeterError, NotFoundError, StateError, ValidationError
from .mnemonics import MnemonicTemplate, Suggestion, load_templates
from .profiles import HashParams, verify_recovery
from .rules import RuleVector, evaluate
from .session import (
    DEFAULT_RECOVERY_THRESHOLD,
    DEFAULT_SESSION_TTL,
    QuestionCatalog,
    Session,
    SessionEngine,
    Slot,
    SubmitOutcome,
    expire_if_idle,
    validate_catalog,
)
from .store import FileProfileStore, MemoryProfileStore, ProfileStore
from .wordlists import Wordlist, is_common, load_wordlist

log = logging.getLogger("answermeter.service")

_STATUS_BY_CODE = {
    "validation": 422,
    "conflict": 409,
    "not_found": 404,
    "state": 409,
    "internal": 500,
}

ENV_PREFIX = "ANSWERMETER_"


@dataclass
class ServiceConfig:
    """Resolved service settings; flags win over environment variables."""

    host: str = "127.0.0.1"
    port: int = 8000
    wordlist_paths: list[str] = dc_field(default_factory=list)
    template_dir: str | None = None
    store_path: str | None = None
    recovery_threshold: int = DEFAULT_RECOVERY_THRESHOLD
    session_ttl: float = DEFAULT_SESSION_TTL

    @classmethod
    def from_env(cls, **overrides) -> "ServiceConfig":
        """Build from ANSWERMETER_* variables, then apply non-None overrides."""
        env = os.environ
        cfg = cls()
        if env.get(ENV_PREFIX + "HOST"):
            cfg.host = env[ENV_PREFIX + "HOST"]
        if env.get(ENV_PREFIX + "PORT"):
            cfg.port = int(env[ENV_PREFIX + "PORT"])
        if env.get(ENV_PREFIX + "WORDLISTS"):
            cfg.wordlist_paths = [
                p for p in env[ENV_PREFIX + "WORDLISTS"].split(os.pathsep) if p
            ]
        if env.get(ENV_PREFIX + "TEMPLATES"):
            cfg.template_dir = env[ENV_PREFIX + "TEMPLATES"]
        if env.get(ENV_PREFIX + "STORE"):
            cfg.store_path = env[ENV_PREFIX + "STORE"]
        if env.get(ENV_PREFIX + "RECOVERY_THRESHOLD"):
            cfg.recovery_threshold = int(env[ENV_PREFIX + "RECOVERY_THRESHOLD"])
        if env.get(ENV_PREFIX + "SESSION_TTL"):
            cfg.session_ttl = float(env[ENV_PREFIX + "SESSION_TTL"])
        for key, value in overrides.items():
            if value is not None:
                setattr(cfg, key, value)
        return cfg


def _rules_payload(rules: RuleVector) -> dict:
    return {
        "has_capital": rules.has_capital,
        "has_digit": rules.has_digit,
        "has_special": rules.has_special,
        "has_letter": rules.has_letter,
        "long_enough": rules.long_enough,
    }


def score_payload(answer: str, wordlists: list[Wordlist]) -> dict:
    """The canonical scoring payload; the CLI --json output must match it."""
    report = evaluate(answer)
    common, category = is_common(answer, wordlists)
    return {
        "rules": _rules_payload(report.rules),
        "score": report.score,
        "band": report.band.value,
        "color": report.color.value,
        "common": category if common else None,
    }


def _suggestion_payload(s: Suggestion) -> dict:
    return {"answer": s.answer, "explanation": s.explanation, "category": s.category}


def _slot_payload(slot: Slot) -> dict:
    return {
        "number": slot.number,
        "kind": slot.kind,
        "question_id": slot.question_id,
        "question": slot.question_text,
        "answer_state": slot.answer_state.value,
        "band": slot.band_at_save.value if slot.band_at_save else None,
        "weak_override": slot.weak_override,
    }


def _session_payload(session: Session) -> dict:
    return {
        "state": session.state.value,
        "slots": [_slot_payload(s) for s in session.slots],
    }


@dataclass
class _SessionRecord:
    session: Session
    token: str
    lock: threading.Lock = dc_field(default_factory=threading.Lock)


class SessionRegistry:
    """In-memory session table; mutations are serialized per session id."""

    def __init__(self, ttl: float):
        self.ttl = ttl
        self._records: dict[str, _SessionRecord] = {}
        self._lock = threading.Lock()

    def add(self, session: Session) -> str:
        token = secrets.token_urlsafe(24)
        with self._lock:
            self._records[session.id] = _SessionRecord(session=session, token=token)
        return token

    def checkout(self, session_id: str, token: str | None) -> _SessionRecord:
        with self._lock:
            record = self._records.get(session_id)
        if record is None or token != record.token:
            # A bad token is indistinguishable from a missing session on
            # purpose: the id must not be probeable.
            raise NotFoundError(f"unknown session {session_id!r}")
        if expire_if_idle(record.session, self.ttl):
            raise StateError("session expired and was abandoned")
        return record


class ScoreRequest(BaseModel):
    answer: str


class QuestionRequest(BaseModel):
    question_id: str | None = None
    text: str | None = None


class AnswerRequest(BaseModel):
    answer: str


class FinalizeRequest(BaseModel):
    threshold: int | None = None


class RecoverRequest(BaseModel):
    answers: list[str | None]


def _bearer(authorization: str | None) -> str | None:
    if authorization and authorization.startswith("Bearer "):
        return authorization[len("Bearer ") :]
    return None


def build_components(config: ServiceConfig):
    """Load catalog, wordlists, templates and store per the config."""
    if config.wordlist_paths:
        wordlists = [
            load_wordlist(p, category=Path(p).stem) for p in config.wordlist_paths
        ]
    else:
        wordlists = defaults.default_wordlists()
    if config.template_dir:
        templates = load_templates(config.template_dir)
    else:
        templates = defaults.default_templates()
    catalog = defaults.default_catalog()
    validate_catalog(catalog, templates)
    store: ProfileStore
    if config.store_path:
        store = FileProfileStore(config.store_path)
    else:
        store = MemoryProfileStore()
    return catalog, wordlists, templates, store


def create_app(
    config: ServiceConfig | None = None,
    *,
    catalog: QuestionCatalog | None = None,
    wordlists: list[Wordlist] | None = None,
    templates: dict[str, MnemonicTemplate] | None = None,
    store: ProfileStore | None = None,
    hash_params: HashParams | None = None,
) -> FastAPI:
    """Assemble the service; keyword components override config-driven ones."""
    config = config or ServiceConfig.from_env()
    if catalog is None or wordlists is None or templates is None or store is None:
        built_catalog, built_wordlists, built_templates, built_store = (
            build_components(config)
        )
        catalog = catalog or built_catalog
        wordlists = wordlists or built_wordlists
        templates = templates or built_templates
        store = store or built_store

    engine = SessionEngine(
        catalog,
        wordlists,
        templates,
        hash_params=hash_params,
        recovery_threshold=config.recovery_threshold,
    )
    registry = SessionRegistry(ttl=config.session_ttl)

    app = FastAPI(title="answermeter", version="0.1.0")
    # the UI is served statically from any origin; auth rides in the header
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.engine = engine
    app.state.registry = registry
    app.state.store = store

    @app.exception_handler(AnswerMeterError)
    async def domain_error(request: Request, exc: AnswerMeterError):
        status = _STATUS_BY_CODE.get(exc.code, 500)
        body = {"code": exc.code, "message": exc.message, "field": exc.field}
        return JSONResponse(status_code=status, content=body)

    @app.exception_handler(RequestValidationError)
    async def body_error(request: Request, exc: RequestValidationError):
        first = exc.errors()[0] if exc.errors() else {}
        loc = first.get("loc", ())
        field = ".".join(str(p) for p in loc[1:]) or None
        return JSONResponse(
            status_code=422,
            content={
                "code": "validation",
                "message": "malformed request body",
                "field": field,
            },
        )

    @app.exception_handler(Exception)
    async def internal_error(request: Request, exc: Exception):
        log.error("internal error on %s %s: %s", request.method,
                  request.url.path, type(exc).__name__)
        return JSONResponse(
            status_code=500,
            content={"code": "internal", "message": "internal error", "field": None},
        )

    @app.post("/score")
    async def route_score(body: ScoreRequest):
        return score_payload(body.answer, engine.wordlists)

    @app.get("/questions")
    async def route_questions():
        return {
            "questions": [
                {"id": q.id, "text": q.text, "category": q.category}
                for q in engine.catalog.questions
            ]
        }

    @app.post("/sessions", status_code=201)
    async def route_create_session():
        session = engine.create_session()
        token = registry.add(session)
        log.info("session created %s", session.id)
        return {
            "session_id": session.id,
            "token": token,
            **_session_payload(session),
        }

    @app.put("/sessions/{session_id}/slots/{slot_number}/question")
    async def route_set_question(
        session_id: str,
        slot_number: int,
        body: QuestionRequest,
        authorization: str | None = Header(default=None),
    ):
        record = registry.checkout(session_id, _bearer(authorization))
        with record.lock:
            if (body.question_id is None) == (body.text is None):
                raise ValidationError(
                    "provide exactly one of question_id or text", field="question_id"
                )
            if body.question_id is not None:
                engine.select_predefined(record.session, slot_number, body.question_id)
            else:
                engine.set_custom_question(record.session, slot_number, body.text or "")
            return _session_payload(record.session)

    @app.post("/sessions/{session_id}/slots/{slot_number}/answer")
    async def route_submit_answer(
        session_id: str,
        slot_number: int,
        body: AnswerRequest,
        authorization: str | None = Header(default=None),
    ):
        record = registry.checkout(session_id, _bearer(authorization))
        with record.lock:
            outcome: SubmitOutcome = engine.submit_answer(
                record.session, slot_number, body.answer
            )
            report = outcome.report
            return {
                "status": outcome.status.value,
                "report": {
                    "rules": _rules_payload(report.rules),
                    "score": report.score,
                    "band": report.band.value,
                    "color": report.color.value,
                },
                "common": outcome.common_hit,
                "suggestion": (
                    _suggestion_payload(outcome.suggestion)
                    if outcome.suggestion
                    else None
                ),
                "slot": _slot_payload(record.session.slots[slot_number - 1]),
            }

    @app.post("/sessions/{session_id}/slots/{slot_number}/confirm-weak")
    async def route_confirm_weak(
        session_id: str,
        slot_number: int,
        body: AnswerRequest,
        authorization: str | None = Header(default=None),
    ):
        record = registry.checkout(session_id, _bearer(authorization))
        with record.lock:
            engine.confirm_weak(record.session, slot_number, body.answer)
            return {"slot": _slot_payload(record.session.slots[slot_number - 1])}

    @app.post("/sessions/{session_id}/finalize", status_code=201)
    async def route_finalize(
        session_id: str,
        body: FinalizeRequest,
        authorization: str | None = Header(default=None),
    ):
        record = registry.checkout(session_id, _bearer(authorization))
        with record.lock:
            profile = engine.finalize(record.session, body.threshold)
            store.persist(profile)
            log.info("profile stored %s", profile.profile_id)
            return {
                "profile_id": profile.profile_id,
                "recovery_threshold": profile.recovery_threshold,
                "entries": [
                    {
                        "question": e.question_text,
                        "band": e.band_at_save.value,
                        "weak_override": e.weak_override,
                    }
                    for e in profile.entries
                ],
            }

    @app.post("/recover/{profile_id}")
    async def route_recover(profile_id: str, body: RecoverRequest):
        profile = store.load(profile_id)
        outcome = verify_recovery(profile, body.answers)
        log.info("recovery attempt for %s: %s", profile_id,
                 "granted" if outcome.granted else "denied")
        # Only the boolean leaves the service; the count stays internal.
        return {"granted": outcome.granted}

    return app
