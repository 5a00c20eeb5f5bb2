"""Risk-signal cultivation: field engine, register, harness, service."""

from signalfield.engine import (
    BIWEEKLY,
    CADENCES,
    MONTHLY,
    WEEKLY,
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
from signalfield.register import Register, Signal, SignalStatus

__all__ = [
    "BIWEEKLY",
    "CADENCES",
    "MONTHLY",
    "WEEKLY",
    "Cadence",
    "FieldPosition",
    "GapClass",
    "NrsPair",
    "Region",
    "Register",
    "SessionInput",
    "SessionRecord",
    "Signal",
    "SignalStatus",
    "SsiBand",
    "Tier",
]

__version__ = "0.1.0"
