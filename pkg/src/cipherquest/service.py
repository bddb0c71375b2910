"""HTTP/JSON session service: level delivery, attempts, hints, codex, progress.

The server is authoritative: solutions, attempt counts, and the clock all
live here. Clients only ever see challenge material and verdicts. Every
error body has the shape ``{"code": ..., "message": ...}``.
"""
from __future__ import annotations

import hashlib
import logging
import random
import threading
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional

from fastapi import Body, FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .campaign import LOCKED, Campaign, record_completion, unlock_state
from .profiles import (
    PlayerProfile,
    ProfileError,
    load_profile_file,
    profile_path,
    save_profile_file,
)
from .puzzles import (
    AttemptLog,
    MalformedSubmissionError,
    PuzzleInstance,
    check_answer,
    directional_feedback,
    generate_instance,
    hint_for,
    score_attempt,
    submission_fitness,
)

logger = logging.getLogger("cipherquest.service")

SESSION_HEADER = "X-Session"

# seeded generator in deterministic mode so transcripts replay exactly
_DETERMINISTIC_TOKEN_SEED = 0xC1F4
_DETERMINISTIC_EPOCH = 1_000_000.0


class ApiError(Exception):
    """Maps one failure to one machine code and HTTP status."""

    def __init__(self, status_code: int, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.status_code = status_code
        self.code = code
        self.message = message


class SystemClock:
    def now(self) -> float:
        return time.time()


class FixedStepClock:
    """Advances one second per reading; keeps test transcripts identical."""

    def __init__(self, start: float = _DETERMINISTIC_EPOCH, step: float = 1.0):
        self._next = start
        self._step = step
        self._lock = threading.Lock()

    def now(self) -> float:
        with self._lock:
            value = self._next
            self._next += self._step
            return value


@dataclass
class ActiveInstance:
    level_id: str
    instance: PuzzleInstance
    log: AttemptLog


@dataclass
class Session:
    session_id: str
    profile: PlayerProfile
    created_at: float
    active: Optional[ActiveInstance] = None
    replay_counters: dict[str, int] = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)


@dataclass(frozen=True)
class ServiceConfig:
    campaign: Campaign
    profile_dir: Path
    deterministic: bool = False
    # varies deterministic playthroughs without giving up replayability
    token_seed: int = _DETERMINISTIC_TOKEN_SEED
    ui_dir: Optional[Path] = None


def derive_seed(session_id: str, level_id: str, replay: int) -> int:
    """Replayable per session, varied per level and per restart."""
    digest = hashlib.sha256(f"{session_id}:{level_id}:{replay}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


class ServiceState:
    def __init__(self, config: ServiceConfig):
        self.config = config
        self.campaign = config.campaign
        self.clock = FixedStepClock() if config.deterministic else SystemClock()
        self._token_rng = (
            random.Random(config.token_seed)
            if config.deterministic
            else random.SystemRandom()
        )
        self._registry_lock = threading.Lock()
        self.sessions: dict[str, Session] = {}
        self.player_owner: dict[str, str] = {}

    def new_token(self) -> str:
        return f"{self._token_rng.getrandbits(128):032x}"

    def open_session(self, player_id: str) -> tuple[Session, bool]:
        with self._registry_lock:
            if player_id in self.player_owner:
                raise ApiError(
                    409,
                    "LOCKED_PROFILE",
                    f"player {player_id!r} already has an active session",
                )
            path = profile_path(self.config.profile_dir, player_id)
            resumed = path.exists()
            if resumed:
                try:
                    profile = load_profile_file(path)
                except ProfileError as exc:
                    raise ApiError(500, "STORAGE_FAILURE", str(exc)) from exc
            else:
                profile = PlayerProfile(player_id=player_id)
                self._persist(profile)
            session = Session(
                session_id=self.new_token(),
                profile=profile,
                created_at=self.clock.now(),
            )
            self.sessions[session.session_id] = session
            self.player_owner[player_id] = session.session_id
            return session, resumed

    def require_session(self, request: Request) -> Session:
        token = request.headers.get(SESSION_HEADER)
        if not token or token not in self.sessions:
            raise ApiError(401, "UNKNOWN_SESSION", "missing or unknown session token")
        return self.sessions[token]

    def _persist(self, profile: PlayerProfile) -> None:
        try:
            save_profile_file(profile, self.config.profile_dir)
        except OSError as exc:
            raise ApiError(500, "STORAGE_FAILURE", str(exc)) from exc

    # --- request handlers -------------------------------------------------

    def start_level(self, session: Session, level_id: str) -> dict[str, Any]:
        campaign = self.campaign
        if level_id not in campaign.levels_by_id:
            raise ApiError(404, "UNKNOWN_LEVEL", f"no level {level_id!r} in this campaign")
        state = unlock_state(campaign, session.profile)
        if state[level_id] == LOCKED:
            raise ApiError(403, "LEVEL_LOCKED", f"level {level_id!r} is still locked")
        level = campaign.level(level_id)
        replay = session.replay_counters.get(level_id, 0)
        session.replay_counters[level_id] = replay + 1
        seed = derive_seed(session.session_id, level_id, replay)
        instance = generate_instance(level.spec, seed)
        session.active = ActiveInstance(
            level_id=level_id,
            instance=instance,
            log=AttemptLog(started_at=self.clock.now()),
        )
        chapter_title = next(
            ch.title for ch in campaign.chapters if level_id in ch.level_ids
        )
        return {
            "level_id": level_id,
            "chapter": chapter_title,
            "kind": instance.kind.value,
            "answer_form": instance.answer_form.value,
            "challenge": instance.challenge,
            "intro_text": level.spec.intro_text,
            "story_intro": level.story_intro,
            "attempts": 0,
            "hints_taken": 0,
            "replay": replay,
        }

    def submit_attempt(self, session: Session, answer: str) -> dict[str, Any]:
        active = self._require_active(session)
        instance, log = active.instance, active.log
        try:
            verdict = check_answer(instance, answer)
        except MalformedSubmissionError as exc:
            detail = str(exc)
            if exc.position is not None:
                detail = f"{detail} (position {exc.position})"
            raise ApiError(422, "BAD_ANSWER_FORM", detail) from exc

        now = self.clock.now()
        if verdict.verdict == "correct":
            log.record(answer, now, submission_fitness(instance, answer))
            score = score_attempt(log, solved=True)
            elapsed = now - log.started_at
            new_codex = record_completion(
                self.campaign,
                session.profile,
                active.level_id,
                score=score,
                attempts=log.attempt_count,
                elapsed=elapsed,
            )
            self._persist(session.profile)
            level = self.campaign.level(active.level_id)
            session.active = None
            return {
                "verdict": "correct",
                "direction": "neutral",
                "message": level.spec.success_text,
                "attempts": log.attempt_count,
                "score": score,
                "codex_updates": new_codex,
                "story_outro": level.story_outro,
                "next_level": session.profile.current,
            }

        feedback = directional_feedback(instance, log, answer)
        log.record(answer, now, submission_fitness(instance, answer))
        return {
            "verdict": "incorrect",
            "direction": feedback.direction,
            "message": feedback.message,
            "attempts": log.attempt_count,
        }

    def give_hint(self, session: Session) -> Optional[dict[str, Any]]:
        active = self._require_active(session)
        level = self.campaign.level(active.level_id)
        earned = hint_for(level.spec, active.log, now=self.clock.now())
        if earned is None:
            return None
        tier, text = earned
        active.log.take_hint(tier)
        return {"tier": tier, "text": text, "hints_taken": active.log.hints_taken}

    def codex_view(self, session: Session) -> dict[str, Any]:
        unlocked = set(session.profile.codex)
        entries = [
            {
                "concept_id": entry.concept_id,
                "title": entry.title,
                "body": entry.body,
                "unlocked_by": entry.unlocked_by,
                "topics": list(entry.topics),
            }
            for entry in self.campaign.codex_entries
            if entry.concept_id in unlocked
        ]
        return {"entries": entries, "total": len(self.campaign.codex_entries)}

    def progress_view(self, session: Session) -> dict[str, Any]:
        profile = session.profile
        state = unlock_state(self.campaign, profile)
        rows = []
        for chapter in self.campaign.chapters:
            for level_id in chapter.level_ids:
                row: dict[str, Any] = {
                    "id": level_id,
                    "chapter": chapter.title,
                    "status": state[level_id],
                }
                record = profile.levels.get(level_id)
                if record is not None:
                    row["best_score"] = record.best_score
                    row["attempts"] = record.attempts
                    row["total_time"] = record.total_time
                rows.append(row)
        return {
            "player_id": profile.player_id,
            "current": profile.current,
            "levels": rows,
            "codex_unlocked": len(profile.codex),
        }

    def _require_active(self, session: Session) -> ActiveInstance:
        if session.active is None:
            raise ApiError(409, "NO_ACTIVE_INSTANCE", "start a level first")
        return session.active


def create_app(config: ServiceConfig) -> FastAPI:
    app = FastAPI(title="cipherquest", docs_url=None, redoc_url=None, openapi_url=None)
    state = ServiceState(config)
    app.state.service = state

    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def on_api_error(request: Request, exc: ApiError) -> JSONResponse:
        return JSONResponse(
            {"code": exc.code, "message": exc.message}, status_code=exc.status_code
        )

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(
        request: Request, exc: RequestValidationError
    ) -> JSONResponse:
        return JSONResponse(
            {"code": "BAD_REQUEST", "message": str(exc.errors()[:1])}, status_code=422
        )

    @app.middleware("http")
    async def log_requests(request: Request, call_next):
        response = await call_next(request)
        logger.info(
            "%s %s %s %s %s",
            datetime.now(timezone.utc).isoformat(timespec="seconds"),
            request.headers.get(SESSION_HEADER, "-"),
            request.method,
            request.url.path,
            response.status_code,
        )
        return response

    @app.post("/api/session")
    def create_session(payload: dict[str, Any] = Body(...)) -> dict[str, Any]:
        player_id = payload.get("player_id")
        if not isinstance(player_id, str) or not player_id.strip():
            raise ApiError(422, "BAD_REQUEST", "player_id must be a nonempty string")
        session, resumed = state.open_session(player_id.strip())
        profile = session.profile
        levels = unlock_state(state.campaign, profile)
        current = next(
            (lid for lid in state.campaign.level_order if levels[lid] == "unlocked"),
            None,
        )
        return {
            "session_id": session.session_id,
            "player_id": profile.player_id,
            "resumed": resumed,
            "current": current,
            "levels": levels,
            "codex": list(profile.codex),
        }

    @app.post("/api/level/{level_id}/start")
    def start_level(level_id: str, request: Request) -> dict[str, Any]:
        session = state.require_session(request)
        with session.lock:
            return state.start_level(session, level_id)

    @app.post("/api/attempt")
    def attempt(request: Request, payload: dict[str, Any] = Body(...)) -> dict[str, Any]:
        session = state.require_session(request)
        answer = payload.get("answer")
        if not isinstance(answer, str):
            raise ApiError(422, "BAD_ANSWER_FORM", "answer must be a string")
        with session.lock:
            return state.submit_attempt(session, answer)

    @app.post("/api/hint")
    def hint(request: Request) -> Response:
        session = state.require_session(request)
        with session.lock:
            earned = state.give_hint(session)
        if earned is None:
            return Response(status_code=204)
        return JSONResponse(earned)

    @app.get("/api/codex")
    def codex(request: Request) -> dict[str, Any]:
        session = state.require_session(request)
        with session.lock:
            return state.codex_view(session)

    @app.get("/api/progress")
    def progress(request: Request) -> dict[str, Any]:
        session = state.require_session(request)
        with session.lock:
            return state.progress_view(session)

    if config.ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=config.ui_dir, html=True), name="ui")

    return app
