"""Request/response service over one register store.

Backs a live cultivation session: a facilitation client lists signals,
previews a tentative session without committing it, then commits the
agreed numbers. Every mutation is written to the store before the
response goes out; a failed write rolls the in-memory register back, so
the store and the response never disagree.

Payloads use the same field names as the register document, so clients
of this service and readers of the saved file share one schema.
"""

from __future__ import annotations

import asyncio
from pathlib import Path
from typing import Any

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from signalfield import engine, register as reg_mod
from signalfield.engine import NrsPair, SessionInput
from signalfield.register import Register, RegisterError, Signal, UnknownSignalError

# Idempotence memory for commit retries: token -> response payload.
# Per-process; a restarted service forgets tokens, which is acceptable
# because a retry against a fresh process re-validates day ordering.
_MAX_REMEMBERED_TOKENS = 1024


class EntryPayload(BaseModel):
    name: str
    day: int
    assessments: list[tuple[int, int]] = Field(min_length=1)
    occurrences: int = 0
    note: str = ""


class SessionPayload(BaseModel):
    day: int
    # empty list means a review-only session (decay alone)
    assessments: list[tuple[int, int]] = Field(default_factory=list)
    occurrences: int = 0
    note: str = ""
    client_token: str | None = None


class StatusPayload(BaseModel):
    confirmed: bool = False


def _session_input(payload: SessionPayload | EntryPayload) -> SessionInput:
    try:
        pairs = tuple(NrsPair(sx, sy) for sx, sy in payload.assessments)
        return SessionInput(
            day=payload.day,
            assessments=pairs,
            occurrences=payload.occurrences,
            note=payload.note,
        )
    except ValueError as exc:
        raise HTTPException(
            status_code=422,
            detail={"code": "invalid-session", "message": str(exc)},
        ) from exc


def _error(status: int, code: str, exc: Exception) -> HTTPException:
    return HTTPException(
        status_code=status, detail={"code": code, "message": str(exc)}
    )


def _signal_doc(signal: Signal) -> dict[str, Any]:
    return {
        "id": signal.id,
        "name": signal.name,
        "status": signal.status.value,
        "status_history": [
            [day, status.value] for day, status in signal.status_history
        ],
        "locus": [reg_mod._record_to_doc(r) for r in signal.locus],
    }


def _summary_doc(signal: Signal) -> dict[str, Any]:
    latest = signal.latest
    return {
        "id": signal.id,
        "name": signal.name,
        "status": signal.status.value,
        "sessions": len(signal.locus),
        "day": latest.day,
        "x": latest.position.x,
        "y": latest.position.y,
        "region": latest.region.value,
        "d": latest.d,
        "sms": latest.sms,
        "f": latest.f,
        "ssi": latest.ssi,
        "band": latest.band.value,
    }


def create_app(store_path: str | Path) -> FastAPI:
    """Build the service around the register stored at store_path.

    A missing store starts empty (cadence/tier from defaults is not
    guessed: the file must exist; create one with save_register or the
    replay CLI first).
    """
    store = Path(store_path)
    state = {
        "register": reg_mod.load_register(store),
        "tokens": {},  # client_token -> committed response
    }
    lock = asyncio.Lock()
    app = FastAPI(title="signalfield session service")
    # the facilitation client is a static page served from elsewhere
    # (file:// or a dev server), so browser calls are cross-origin
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def current() -> Register:
        return state["register"]

    def get_signal(signal_id: str) -> Signal:
        try:
            return current()._get(signal_id)
        except UnknownSignalError as exc:
            raise _error(404, "unknown-signal", exc) from exc

    def persist_or_rollback(snapshot: dict) -> None:
        try:
            reg_mod.save_register(current(), store)
        except OSError as exc:
            state["register"] = reg_mod.register_from_doc(snapshot)
            raise _error(500, "store-write-failed", exc) from exc

    @app.get("/config")
    def config() -> dict[str, Any]:
        reg = current()
        return {
            "schema_version": reg.schema_version,
            "cadence": reg.cadence.kind,
            "tier": reg.tier.value,
            "constants": {
                "y_floor": engine.Y_FLOOR,
                "sms_threshold": engine.SMS_THRESHOLD,
                "retirement_threshold": engine.RETIREMENT_THRESHOLD,
                "ssi_denominator": engine.SSI_DENOMINATOR,
                "committee_floor": engine.COMMITTEE_FLOOR,
                "committee_slope": engine.COMMITTEE_SLOPE,
                "field_max": engine.FIELD_MAX,
            },
        }

    @app.get("/signals")
    def list_signals() -> list[dict[str, Any]]:
        return [_summary_doc(s) for s in current().signals.values()]

    @app.get("/signals/{signal_id}")
    def get_signal_doc(signal_id: str) -> dict[str, Any]:
        return _signal_doc(get_signal(signal_id))

    @app.get("/signals/{signal_id}/locus")
    def get_locus(signal_id: str) -> list[dict[str, Any]]:
        return [reg_mod._record_to_doc(r) for r in get_signal(signal_id).locus]

    @app.get("/signals/{signal_id}/ssi")
    def get_ssi(signal_id: str) -> list[dict[str, Any]]:
        return [
            {
                "session_index": r.session_index,
                "day": r.day,
                "ssi": r.ssi,
                "band": r.band.value,
                "sms": r.sms,
            }
            for r in get_signal(signal_id).locus
        ]

    @app.post("/signals", status_code=201)
    async def create(payload: EntryPayload) -> dict[str, Any]:
        async with lock:
            snapshot = reg_mod.register_to_doc(current())
            try:
                signal = reg_mod.create_signal(
                    current(), payload.name, _session_input(payload)
                )
            except RegisterError as exc:
                raise _error(409, "create-rejected", exc) from exc
            except engine.EntryConstraintError as exc:
                raise _error(422, "entry-constraint", exc) from exc
            persist_or_rollback(snapshot)
            return _signal_doc(signal)

    @app.post("/signals/{signal_id}/preview")
    def preview(signal_id: str, payload: SessionPayload) -> dict[str, Any]:
        signal = get_signal(signal_id)
        reg = current()
        try:
            record = engine.step(
                signal.state,
                _session_input(payload),
                reg.tier,
                reg.cadence,
                session_index=len(signal.locus) + 1,
            )
        except ValueError as exc:
            raise _error(422, "invalid-session", exc) from exc
        return reg_mod._record_to_doc(record)

    @app.post("/signals/{signal_id}/sessions", status_code=201)
    async def commit(signal_id: str, payload: SessionPayload) -> dict[str, Any]:
        async with lock:
            token = payload.client_token
            if token is not None and token in state["tokens"]:
                return state["tokens"][token]
            snapshot = reg_mod.register_to_doc(current())
            signal = get_signal(signal_id)
            try:
                record = reg_mod.record_session(
                    current(), signal.id, _session_input(payload)
                )
            except RegisterError as exc:
                raise _error(409, "commit-rejected", exc) from exc
            except ValueError as exc:
                raise _error(422, "invalid-session", exc) from exc
            persist_or_rollback(snapshot)
            doc = reg_mod._record_to_doc(record)
            if token is not None:
                if len(state["tokens"]) >= _MAX_REMEMBERED_TOKENS:
                    state["tokens"].pop(next(iter(state["tokens"])))
                state["tokens"][token] = doc
            return doc

    async def _transition(signal_id: str, op, **kwargs) -> dict[str, Any]:
        async with lock:
            snapshot = reg_mod.register_to_doc(current())
            signal = get_signal(signal_id)
            try:
                op(current(), signal.id, **kwargs)
            except RegisterError as exc:
                raise _error(409, "transition-rejected", exc) from exc
            persist_or_rollback(snapshot)
            return _signal_doc(signal)

    @app.post("/signals/{signal_id}/candidate")
    async def candidate(signal_id: str) -> dict[str, Any]:
        return await _transition(signal_id, reg_mod.mark_retirement_candidate)

    @app.post("/signals/{signal_id}/reactivate")
    async def reactivate(signal_id: str) -> dict[str, Any]:
        return await _transition(signal_id, reg_mod.reactivate_signal)

    @app.post("/signals/{signal_id}/retire")
    async def retire(signal_id: str, payload: StatusPayload) -> dict[str, Any]:
        return await _transition(
            signal_id, reg_mod.retire_signal, confirmed=payload.confirmed
        )

    return app


def serve(store_path: str | Path, port: int, host: str = "127.0.0.1") -> None:
    """Run the service until interrupted (blocking)."""
    import uvicorn

    uvicorn.run(create_app(store_path), host=host, port=port, log_level="warning")
