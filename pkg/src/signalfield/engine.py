"""Per-session position math for risk signals on a 10x10 field.

A signal lives at (x, y): x is current risk intensity, y is growth
potential. Each facilitated session either rescores the signal (a
recency-weighted pull toward the newly elicited coordinates) or merely
reviews it (x holds, y decays toward a floor). The weight applied to a
rescore depends on how long it has been since the last session, bucketed
by the register's meeting cadence, and on how many assessors scored.

Everything in this module is a pure function over value types; state
lives in the register.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional, Sequence

# Hardcoded model constants. These are deliberately not configurable:
# the whole point of the lite tier is that nothing needs tuning.
Y_FLOOR = 0.50
SMS_THRESHOLD = 7.07
RETIREMENT_THRESHOLD = 1.0
SSI_DENOMINATOR = 14.14
COMMITTEE_FLOOR = 0.70
COMMITTEE_SLOPE = 0.06
FIELD_MAX = 10.0


class GapClass(Enum):
    """How late a session is relative to the register's cadence."""

    EARLY = "early"
    NORMAL = "normal"
    MISSED1 = "missed1"
    MISSED2PLUS = "missed2plus"

    @property
    def representative_tau(self) -> float:
        return _REPRESENTATIVE_TAU[self]


_REPRESENTATIVE_TAU = {
    GapClass.EARLY: 0.5,
    GapClass.NORMAL: 1.0,
    GapClass.MISSED1: 2.0,
    GapClass.MISSED2PLUS: 3.0,
}


class Region(Enum):
    """Quadrant of the field a position falls in."""

    QUESTION_MARKS = "QM"
    LIT_FUSES = "LF"
    SLEEPING_CATS = "SC"
    OWLS = "OW"


class SsiBand(Enum):
    LOW = "low"
    MODERATE = "moderate"
    ELEVATED = "elevated"
    CRITICAL = "critical"


class Tier(Enum):
    """Which weight source a register uses.

    LITE is the four-row lookup table; CONTINUOUS evaluates the
    underlying exponentials it was derived from.
    """

    LITE = "lite"
    CONTINUOUS = "continuous"


@dataclass(frozen=True)
class Cadence:
    """Gap-classification boundaries for one meeting rhythm.

    Boundaries are inclusive: a gap of exactly ``early_max_days`` is
    still Early. Gaps beyond ``missed1_max_days`` are Missed2Plus.
    """

    kind: str
    early_max_days: int
    normal_max_days: int
    missed1_max_days: int
    nominal_period_days: int

    def __post_init__(self) -> None:
        if not 0 < self.early_max_days < self.normal_max_days < self.missed1_max_days:
            raise ValueError(
                f"cadence boundaries must increase: "
                f"{self.early_max_days}/{self.normal_max_days}/{self.missed1_max_days}"
            )

    def scaled(self, factor: float) -> "Cadence":
        """Boundaries multiplied by ``factor`` and rounded up to whole days.

        The nominal period is untouched; only classification shifts.
        """
        return replace(
            self,
            early_max_days=math.ceil(self.early_max_days * factor),
            normal_max_days=math.ceil(self.normal_max_days * factor),
            missed1_max_days=math.ceil(self.missed1_max_days * factor),
        )


WEEKLY = Cadence("weekly", 5, 10, 21, 7)
BIWEEKLY = Cadence("biweekly", 10, 21, 42, 14)
MONTHLY = Cadence("monthly", 22, 45, 90, 30)

CADENCES = {c.kind: c for c in (WEEKLY, BIWEEKLY, MONTHLY)}


@dataclass(frozen=True)
class WeightRow:
    """Update weight and passive-decay multiplier for one gap class."""

    w: float
    decay: float


_LITE_TABLE = {
    GapClass.EARLY: WeightRow(0.281, 0.957),
    GapClass.NORMAL: WeightRow(0.475, 0.917),
    GapClass.MISSED1: WeightRow(0.700, 0.840),
    GapClass.MISSED2PLUS: WeightRow(0.800, 0.770),
}


@dataclass(frozen=True)
class ContinuousParams:
    """Constants of the exponentials the lite table discretizes."""

    alpha_base: float = 0.90
    lam: float = 0.75
    mu: float = 0.087


DEFAULT_CONTINUOUS = ContinuousParams()


@dataclass(frozen=True)
class NrsPair:
    """One assessor's (intensity, growth) scores, integers 0..4."""

    score_x: int
    score_y: int

    def __post_init__(self) -> None:
        for label, v in (("x", self.score_x), ("y", self.score_y)):
            if not isinstance(v, int) or not 0 <= v <= 4:
                raise ValueError(f"NRS score_{label} must be an integer in 0..4, got {v!r}")


@dataclass(frozen=True)
class SessionInput:
    """Raw facts for one signal-session.

    Empty ``assessments`` means a review-only session: the signal was
    discussed but not rescored.
    """

    day: int
    assessments: tuple[NrsPair, ...] = ()
    occurrences: int = 0
    note: str = ""

    def __post_init__(self) -> None:
        if self.day < 0:
            raise ValueError(f"day must be >= 0, got {self.day}")
        if self.occurrences < 0:
            raise ValueError(f"occurrences must be >= 0, got {self.occurrences}")

    @property
    def review_only(self) -> bool:
        return not self.assessments


@dataclass(frozen=True)
class FieldPosition:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.x <= FIELD_MAX and 0.0 <= self.y <= FIELD_MAX):
            raise ValueError(f"position ({self.x}, {self.y}) outside the field")


@dataclass(frozen=True)
class SessionRecord:
    """Everything computed for one session, plus the raw inputs.

    Entry records have no gap or weights (``gap_class`` through
    ``y_new`` are None except the elicited coordinates); review-only
    records have a decay but no elicitation-side values.
    """

    session_index: int
    day: int
    gap_days: int
    gap_class: Optional[GapClass]
    n: int
    w: Optional[float]
    decay: Optional[float]
    c: Optional[float]
    w_eff: Optional[float]
    x_new: Optional[float]
    y_new: Optional[float]
    position: FieldPosition
    region: Region
    d: float
    sms: bool
    f: int
    ssi: float
    band: SsiBand
    assessments: tuple[NrsPair, ...] = ()
    occurrences: int = 0
    note: str = ""


@dataclass(frozen=True)
class SignalState:
    """What the next step needs to know about a signal's past."""

    position: FieldPosition
    cumulative_f: int
    prev_day: int


class EntryConstraintError(ValueError):
    """A signal tried to enter with a score above 1."""

    def __init__(self, offenders: Sequence[int]):
        self.offenders = tuple(offenders)
        pretty = ", ".join(f"assessor {i + 1}" for i in self.offenders)
        super().__init__(f"entry requires every individual score <= 1; violated by {pretty}")


class DayOrderError(ValueError):
    """Session days must strictly increase."""


def elicit_coordinates(assessments: Sequence[NrsPair]) -> tuple[float, float]:
    """Map a committee's scores to target field coordinates.

    Args:
        assessments: at least one assessor's score pair.

    Returns:
        (x_new, y_new) = 2.5 times the mean score on each axis.
    """
    if not assessments:
        raise ValueError("elicitation needs at least one assessment; "
                         "use the review-only path for sessions without scores")
    n = len(assessments)
    x_new = 2.5 * sum(a.score_x for a in assessments) / n
    y_new = 2.5 * sum(a.score_y for a in assessments) / n
    return x_new, y_new


def check_entry_constraint(assessments: Sequence[NrsPair]) -> bool:
    """True iff every individual score on both axes is <= 1."""
    if not assessments:
        raise ValueError("entry requires at least one assessment")
    return all(a.score_x <= 1 and a.score_y <= 1 for a in assessments)


def classify_gap(gap_days: int, cadence: Cadence) -> GapClass:
    """Bucket the days since the previous session.

    Args:
        gap_days: whole days since the last recorded session, >= 1.
        cadence: the register's boundary set.
    """
    if gap_days < 1:
        raise ValueError(f"gap_days must be >= 1, got {gap_days}")
    if gap_days <= cadence.early_max_days:
        return GapClass.EARLY
    if gap_days <= cadence.normal_max_days:
        return GapClass.NORMAL
    if gap_days <= cadence.missed1_max_days:
        return GapClass.MISSED1
    return GapClass.MISSED2PLUS


def weights_lite(gap: GapClass) -> WeightRow:
    """The published four-row lookup table."""
    return _LITE_TABLE[gap]


def weights_continuous(
    gap_days: int,
    cadence: Cadence,
    params: ContinuousParams = DEFAULT_CONTINUOUS,
) -> WeightRow:
    """Evaluate the underlying exponentials instead of the lookup table.

    tau is the gap in units of the cadence's nominal period; no rounding
    is applied anywhere.
    """
    if gap_days < 1:
        raise ValueError(f"gap_days must be >= 1, got {gap_days}")
    tau = gap_days / cadence.nominal_period_days
    w = params.alpha_base * (1.0 - math.exp(-params.lam * tau))
    decay = math.exp(-params.mu * tau)
    return WeightRow(w=w, decay=decay)


def committee_scale(n: int) -> float:
    """Damping for small committees: c = min(1, 0.70 + 0.06 n)."""
    if n < 1:
        raise ValueError(f"committee size must be >= 1, got {n}")
    return min(1.0, COMMITTEE_FLOOR + COMMITTEE_SLOPE * n)


def effective_weight(w: float, c: float) -> float:
    return w * c


def update_position(
    prev: FieldPosition, x_new: float, y_new: float, w_eff: float, decay: float
) -> FieldPosition:
    """One rescored-session move.

    x blends toward x_new with no decay; y first decays, then blends,
    then is floored at 0.50.
    """
    x = prev.x + w_eff * (x_new - prev.x)
    y_decayed = prev.y * decay
    y = max(Y_FLOOR, y_decayed + w_eff * (y_new - y_decayed))
    return FieldPosition(x, y)


def passive_update(prev: FieldPosition, decay: float) -> FieldPosition:
    """Review-only move: x holds, y decays to no lower than the floor."""
    return FieldPosition(prev.x, max(Y_FLOOR, prev.y * decay))


def distance(pos: FieldPosition) -> float:
    return math.hypot(pos.x, pos.y)


def sms_active(d: float) -> bool:
    """Escalation state; the threshold itself counts as active."""
    return d >= SMS_THRESHOLD


def region_of(pos: FieldPosition) -> Region:
    """Quadrant lookup; the x = 5 and y = 5 boundaries belong upward."""
    if pos.x < 5.0:
        return Region.QUESTION_MARKS if pos.y < 5.0 else Region.SLEEPING_CATS
    return Region.LIT_FUSES if pos.y < 5.0 else Region.OWLS


def ssi(d: float, f: int) -> float:
    """Sustained-severity index: (d / 14.14) * ln(1 + f)."""
    if f < 0:
        raise ValueError(f"cumulative occurrence count must be >= 0, got {f}")
    return (d / SSI_DENOMINATOR) * math.log1p(f)


def ssi_band(s: float) -> SsiBand:
    if s < 0.5:
        return SsiBand.LOW
    if s < 1.5:
        return SsiBand.MODERATE
    if s < 2.5:
        return SsiBand.ELEVATED
    return SsiBand.CRITICAL


def retirement_eligible(d: float) -> bool:
    """Eligibility only; actually retiring a signal is a register command."""
    return d < RETIREMENT_THRESHOLD


def _weights_for(
    tier: Tier, gap_days: int, cadence: Cadence, gap: GapClass
) -> WeightRow:
    if tier is Tier.LITE:
        return weights_lite(gap)
    return weights_continuous(gap_days, cadence)


def entry_record(entry: SessionInput, session_index: int = 1) -> SessionRecord:
    """Place a brand-new signal directly at its elicited coordinates.

    No blending, no decay, no floor: the entry constraint already keeps
    the position near the origin. Occurrences reported at entry count
    into f immediately.
    """
    if entry.review_only:
        raise ValueError("a signal cannot enter on a review-only session")
    if not check_entry_constraint(entry.assessments):
        offenders = [
            i for i, a in enumerate(entry.assessments)
            if a.score_x > 1 or a.score_y > 1
        ]
        raise EntryConstraintError(offenders)
    x_new, y_new = elicit_coordinates(entry.assessments)
    pos = FieldPosition(x_new, y_new)
    d = distance(pos)
    f = entry.occurrences
    s = ssi(d, f)
    return SessionRecord(
        session_index=session_index,
        day=entry.day,
        gap_days=0,
        gap_class=None,
        n=len(entry.assessments),
        w=None,
        decay=None,
        c=None,
        w_eff=None,
        x_new=x_new,
        y_new=y_new,
        position=pos,
        region=region_of(pos),
        d=d,
        sms=sms_active(d),
        f=f,
        ssi=s,
        band=ssi_band(s),
        assessments=entry.assessments,
        occurrences=entry.occurrences,
        note=entry.note,
    )


def step(
    state: SignalState,
    session: SessionInput,
    tier: Tier,
    cadence: Cadence,
    session_index: int,
) -> SessionRecord:
    """Compute one post-entry session for a signal.

    Args:
        state: position, cumulative occurrence count, and day of the
            previous session.
        session: this session's raw inputs.
        tier: lite lookup or continuous exponentials.
        cadence: the register's gap boundaries.
        session_index: 1-based index this record will occupy in the locus.

    Returns:
        The fully computed SessionRecord.
    """
    if session.day <= state.prev_day:
        raise DayOrderError(
            f"session day {session.day} does not advance past day {state.prev_day}"
        )
    gap_days = session.day - state.prev_day
    gap = classify_gap(gap_days, cadence)
    row = _weights_for(tier, gap_days, cadence, gap)

    if session.review_only:
        pos = passive_update(state.position, row.decay)
        n = 0
        w = c = w_eff = None
        x_new = y_new = None
        decay = row.decay
    else:
        x_new, y_new = elicit_coordinates(session.assessments)
        n = len(session.assessments)
        c = committee_scale(n)
        w = row.w
        decay = row.decay
        w_eff = effective_weight(w, c)
        pos = update_position(state.position, x_new, y_new, w_eff, decay)

    d = distance(pos)
    f = state.cumulative_f + session.occurrences
    s = ssi(d, f)
    return SessionRecord(
        session_index=session_index,
        day=session.day,
        gap_days=gap_days,
        gap_class=gap,
        n=n,
        w=w,
        decay=decay,
        c=c,
        w_eff=w_eff,
        x_new=x_new,
        y_new=y_new,
        position=pos,
        region=region_of(pos),
        d=d,
        sms=sms_active(d),
        f=f,
        ssi=s,
        band=ssi_band(s),
        assessments=session.assessments,
        occurrences=session.occurrences,
        note=session.note,
    )


def state_after(record: SessionRecord) -> SignalState:
    """The SignalState a locus is in once ``record`` is its latest entry."""
    return SignalState(
        position=record.position, cumulative_f=record.f, prev_day=record.day
    )
