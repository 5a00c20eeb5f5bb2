"""Signal lifecycle, durable storage, and deterministic replay.

A register holds every signal a team tracks under one cadence and one
weight tier. Loci are append-only: nothing ever rewrites a recorded
session, and a retired signal keeps its full history forever.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Union

from signalfield import engine
from signalfield.engine import (
    CADENCES,
    Cadence,
    FieldPosition,
    GapClass,
    NrsPair,
    Region,
    SessionInput,
    SessionRecord,
    SsiBand,
    Tier,
)

SCHEMA_VERSION = 1


class SignalStatus(Enum):
    ACTIVE = "active"
    RETIREMENT_CANDIDATE = "retirement-candidate"
    RETIRED = "retired"


class RegisterError(ValueError):
    """Base for register-level rejections."""


class DuplicateNameError(RegisterError):
    pass


class UnknownSignalError(RegisterError):
    pass


class RetiredSignalError(RegisterError):
    pass


class StatusError(RegisterError):
    """An operation that does not fit the signal's current status."""


class RetirementRefusedError(RegisterError):
    pass


class StorageError(ValueError):
    """A register document could not be read back."""


@dataclass
class Signal:
    """One tracked signal: identity, status, and its full locus."""

    id: str
    name: str
    status: SignalStatus = SignalStatus.ACTIVE
    locus: list[SessionRecord] = field(default_factory=list)
    # (day, status) pairs, appended at each explicit transition
    status_history: list[tuple[int, SignalStatus]] = field(default_factory=list)

    @property
    def latest(self) -> SessionRecord:
        return self.locus[-1]

    @property
    def state(self) -> engine.SignalState:
        return engine.state_after(self.latest)


@dataclass
class Register:
    """All signals a team tracks under one cadence and tier."""

    cadence: Cadence
    tier: Tier = Tier.LITE
    signals: dict[str, Signal] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    def signal_by_name(self, name: str) -> Signal:
        for sig in self.signals.values():
            if sig.name == name:
                return sig
        raise UnknownSignalError(f"no signal named {name!r}")

    def _get(self, signal_id: str) -> Signal:
        try:
            return self.signals[signal_id]
        except KeyError:
            raise UnknownSignalError(f"no signal with id {signal_id!r}") from None


def create_signal(register: Register, name: str, entry: SessionInput) -> Signal:
    """Admit a new signal through the entry gate.

    The entry session places the position directly at the elicited
    coordinates; occurrences reported at entry count into f.

    Raises:
        EntryConstraintError: if any individual score exceeds 1.
        DuplicateNameError: if the register already tracks this name.
    """
    if any(s.name == name for s in register.signals.values()):
        raise DuplicateNameError(f"a signal named {name!r} already exists")
    record = engine.entry_record(entry, session_index=1)
    signal = Signal(id=f"s{len(register.signals) + 1:04d}", name=name)
    signal.locus.append(record)
    signal.status_history.append((entry.day, SignalStatus.ACTIVE))
    register.signals[signal.id] = signal
    return signal


def record_session(
    register: Register, signal_id: str, session: SessionInput
) -> SessionRecord:
    """Append one computed session to a signal's locus.

    Raises:
        RetiredSignalError: the signal no longer accepts sessions.
        DayOrderError: the day does not advance.
    """
    signal = register._get(signal_id)
    if signal.status is SignalStatus.RETIRED:
        raise RetiredSignalError(f"signal {signal.name!r} is retired")
    record = engine.step(
        signal.state,
        session,
        register.tier,
        register.cadence,
        session_index=len(signal.locus) + 1,
    )
    signal.locus.append(record)
    return record


def mark_retirement_candidate(register: Register, signal_id: str) -> Signal:
    """Flag a signal for wind-down consideration.

    No distance requirement: flagging is a judgment call, the d < 1.0
    test only gates the actual retirement.
    """
    signal = register._get(signal_id)
    if signal.status is not SignalStatus.ACTIVE:
        raise StatusError(
            f"only an active signal can become a retirement candidate "
            f"(currently {signal.status.value})"
        )
    signal.status = SignalStatus.RETIREMENT_CANDIDATE
    signal.status_history.append((signal.latest.day, signal.status))
    return signal


def reactivate_signal(register: Register, signal_id: str) -> Signal:
    """Move a retirement candidate back to active tracking."""
    signal = register._get(signal_id)
    if signal.status is not SignalStatus.RETIREMENT_CANDIDATE:
        raise StatusError(
            f"only a retirement candidate can be reactivated "
            f"(currently {signal.status.value})"
        )
    signal.status = SignalStatus.ACTIVE
    signal.status_history.append((signal.latest.day, signal.status))
    return signal


def retire_signal(
    register: Register, signal_id: str, confirmed: bool = False
) -> Signal:
    """Permanently close a signal's locus.

    Requires the signal to already be a retirement candidate, its latest
    distance to sit strictly inside the retirement radius, and an
    explicit human confirmation. The locus is retained.
    """
    signal = register._get(signal_id)
    if signal.status is SignalStatus.RETIRED:
        raise StatusError(f"signal {signal.name!r} is already retired")
    if signal.status is not SignalStatus.RETIREMENT_CANDIDATE:
        raise StatusError("retirement requires candidate status first")
    d = signal.latest.d
    if not engine.retirement_eligible(d):
        raise RetirementRefusedError(
            f"latest d = {d:.2f} is not inside the retirement radius "
            f"(needs d < {engine.RETIREMENT_THRESHOLD})"
        )
    if not confirmed:
        raise RetirementRefusedError(
            "retirement always requires explicit confirmation"
        )
    signal.status = SignalStatus.RETIRED
    signal.status_history.append((signal.latest.day, signal.status))
    return signal


# --- serialization ---------------------------------------------------------


def _record_to_doc(r: SessionRecord) -> dict:
    return {
        "session_index": r.session_index,
        "day": r.day,
        "gap_days": r.gap_days,
        "gap_class": r.gap_class.value if r.gap_class else None,
        "n": r.n,
        "w": r.w,
        "decay": r.decay,
        "c": r.c,
        "w_eff": r.w_eff,
        "x_new": r.x_new,
        "y_new": r.y_new,
        "x": r.position.x,
        "y": r.position.y,
        "region": r.region.value,
        "d": r.d,
        "sms": r.sms,
        "f": r.f,
        "ssi": r.ssi,
        "band": r.band.value,
        "assessments": [[a.score_x, a.score_y] for a in r.assessments],
        "occurrences": r.occurrences,
        "note": r.note,
    }


def _record_from_doc(doc: dict) -> SessionRecord:
    try:
        position = FieldPosition(doc["x"], doc["y"])
        record = SessionRecord(
            session_index=doc["session_index"],
            day=doc["day"],
            gap_days=doc["gap_days"],
            gap_class=GapClass(doc["gap_class"]) if doc["gap_class"] else None,
            n=doc["n"],
            w=doc["w"],
            decay=doc["decay"],
            c=doc["c"],
            w_eff=doc["w_eff"],
            x_new=doc["x_new"],
            y_new=doc["y_new"],
            position=position,
            region=Region(doc["region"]),
            d=doc["d"],
            sms=doc["sms"],
            f=doc["f"],
            ssi=doc["ssi"],
            band=SsiBand(doc["band"]),
            assessments=tuple(NrsPair(sx, sy) for sx, sy in doc["assessments"]),
            occurrences=doc["occurrences"],
            note=doc["note"],
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise StorageError(f"malformed session record: {exc}") from exc
    _verify_recomputable(record)
    return record


def _verify_recomputable(r: SessionRecord) -> None:
    """Stored derived values must match recomputation from (position, f)."""
    d = engine.distance(r.position)
    s = engine.ssi(d, r.f)
    if (
        d != r.d
        or s != r.ssi
        or engine.region_of(r.position) is not r.region
        or engine.sms_active(d) != r.sms
        or engine.ssi_band(s) is not r.band
    ):
        raise StorageError(
            f"session {r.session_index} (day {r.day}): stored derived values "
            f"do not match recomputation from position and f"
        )


def register_to_doc(register: Register) -> dict:
    return {
        "schema_version": register.schema_version,
        "cadence": register.cadence.kind,
        "tier": register.tier.value,
        "signals": [
            {
                "id": sig.id,
                "name": sig.name,
                "status": sig.status.value,
                "status_history": [
                    [day, status.value] for day, status in sig.status_history
                ],
                "locus": [_record_to_doc(r) for r in sig.locus],
            }
            for sig in register.signals.values()
        ],
    }


def register_from_doc(doc: dict) -> Register:
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise StorageError(
            f"unsupported schema_version {version!r} (this build reads {SCHEMA_VERSION})"
        )
    try:
        cadence = CADENCES[doc["cadence"]]
        tier = Tier(doc["tier"])
    except (KeyError, ValueError) as exc:
        raise StorageError(f"bad register header: {exc}") from exc
    register = Register(cadence=cadence, tier=tier, schema_version=version)
    for sig_doc in doc.get("signals", []):
        try:
            signal = Signal(
                id=sig_doc["id"],
                name=sig_doc["name"],
                status=SignalStatus(sig_doc["status"]),
                locus=[_record_from_doc(r) for r in sig_doc["locus"]],
                status_history=[
                    (day, SignalStatus(value))
                    for day, value in sig_doc["status_history"]
                ],
            )
        except (KeyError, ValueError, TypeError) as exc:
            if isinstance(exc, StorageError):
                raise
            raise StorageError(f"malformed signal entry: {exc}") from exc
        register.signals[signal.id] = signal
    return register


def save_register(register: Register, destination: Union[str, Path]) -> None:
    """Write the register as an indented, human-diffable document."""
    text = json.dumps(register_to_doc(register), indent=2)
    Path(destination).write_text(text + "\n", encoding="utf-8")


def load_register(source: Union[str, Path]) -> Register:
    """Read a register document back; verifies derived values as it goes.

    Raises:
        StorageError: on malformed content (with byte offset for syntax
            errors) or an unknown schema version.
    """
    text = Path(source).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StorageError(
            f"register document is not parseable at byte {exc.pos}: {exc.msg}"
        ) from exc
    return register_from_doc(doc)


def replay(
    entries: Iterable[tuple[str, SessionInput]],
    cadence: Cadence,
    tier: Tier = Tier.LITE,
) -> Register:
    """Rebuild a register from a session log.

    The first row for each signal name routes through the entry gate;
    every later row is a recorded session. Deterministic: the same log
    always yields a register that serializes identically.
    """
    register = Register(cadence=cadence, tier=tier)
    ids: dict[str, str] = {}
    for name, session in entries:
        if name not in ids:
            signal = create_signal(register, name, session)
            ids[name] = signal.id
        else:
            record_session(register, ids[name], session)
    return register
