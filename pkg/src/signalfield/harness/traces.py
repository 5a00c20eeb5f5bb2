"""Deterministic randomized-trace generators for the harness sweeps.

Traces are full session logs (entry first), so they can replay through
the register path or be resolved into flat arrays for the batch kernels.
Both generators take an explicit seed and draw in a fixed order; the
same seed always yields the same traces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from signalfield import engine
from signalfield.engine import Cadence, NrsPair, SessionInput, Tier


@dataclass(frozen=True)
class GeneratedTrace:
    name: str
    cadence: Cadence
    sessions: tuple[SessionInput, ...]  # first element is the entry


def resolve_arrays(
    trace: GeneratedTrace, tier: Tier, cadence: Cadence | None = None
) -> tuple[float, float, np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Pre-resolve a trace for the batch kernels.

    Args:
        trace: generated log, entry first.
        tier: weight source.
        cadence: classification boundaries to use; defaults to the
            trace's own cadence (pass a scaled one for sensitivity runs).
            The nominal period for continuous weights always comes from
            the trace's cadence.

    Returns:
        (x0, y0, scored, w_eff, decay, x_new, y_new) with one array slot
        per post-entry session.
    """
    boundaries = cadence or trace.cadence
    entry = trace.sessions[0]
    x0, y0 = engine.elicit_coordinates(entry.assessments)
    rest = trace.sessions[1:]
    count = len(rest)
    scored = np.zeros(count, dtype=np.uint8)
    w_eff = np.zeros(count, dtype=np.float64)
    decay = np.zeros(count, dtype=np.float64)
    x_new = np.zeros(count, dtype=np.float64)
    y_new = np.zeros(count, dtype=np.float64)
    prev_day = entry.day
    for i, session in enumerate(rest):
        gap_days = session.day - prev_day
        prev_day = session.day
        gap = engine.classify_gap(gap_days, boundaries)
        if tier is Tier.LITE:
            row = engine.weights_lite(gap)
        else:
            row = engine.weights_continuous(gap_days, trace.cadence)
        decay[i] = row.decay
        if not session.review_only:
            scored[i] = 1
            x_new[i], y_new[i] = engine.elicit_coordinates(session.assessments)
            w_eff[i] = engine.effective_weight(
                row.w, engine.committee_scale(len(session.assessments))
            )
    return x0, y0, scored, w_eff, decay, x_new, y_new


# Integer gaps that land exactly on a bucket's representative tau AND
# classify into that bucket. There is no such gap for the heaviest
# bucket: three nominal periods still classifies one bucket lower for
# every cadence, so its representative has no class-consistent anchor.
ANCHOR_GAPS = {
    "weekly": (7, 14),
    "biweekly": (7, 14, 28),
    "monthly": (15, 30, 60),
}

_CADENCE_CYCLE = ("weekly", "biweekly", "monthly")


def generate_anchor_traces(count: int, seed: int) -> list[GeneratedTrace]:
    """Traces whose every gap sits exactly on a bucket anchor.

    Scores are unconstrained (any committee, any severity); only the
    gaps are special. Used for the accumulated-drift bound check.
    """
    rng = np.random.default_rng(seed)
    traces = []
    for t in range(count):
        cadence = engine.CADENCES[_CADENCE_CYCLE[t % 3]]
        anchors = ANCHOR_GAPS[cadence.kind]
        n_sessions = int(rng.integers(10, 51))
        entry = SessionInput(
            0,
            (NrsPair(int(rng.integers(0, 2)), int(rng.integers(0, 2))),),
            occurrences=int(rng.integers(0, 3)),
        )
        sessions = [entry]
        day = 0
        for _ in range(n_sessions):
            day += int(anchors[rng.integers(0, len(anchors))])
            if rng.random() < 0.15:
                sessions.append(SessionInput(day))
                continue
            n = int(rng.integers(1, 8))
            pairs = tuple(
                NrsPair(int(rng.integers(0, 5)), int(rng.integers(0, 5)))
                for _ in range(n)
            )
            sessions.append(
                SessionInput(day, pairs, occurrences=int(rng.integers(0, 3)))
            )
        traces.append(
            GeneratedTrace(
                name=f"anchor-{t:04d}", cadence=cadence, sessions=tuple(sessions)
            )
        )
    return traces


def generate_irregular_traces(count: int, seed: int) -> list[GeneratedTrace]:
    """Calendar-anchored sessions with scheduling noise and calm scores.

    Meetings aim at fixed calendar slots, so a late session is followed
    by a short gap back to the rhythm; occasionally a slot is skipped
    outright. Severity hovers in a two-level band above the entry level,
    with at least three sessions between one-level moves, and the whole
    committee reports the same level. Used for the threshold-scaling
    sweep, where the quantity under test is gap reclassification.
    """
    rng = np.random.default_rng(seed)
    traces = []
    for t in range(count):
        cadence = engine.CADENCES[_CADENCE_CYCLE[t % 3]]
        period = cadence.nominal_period_days
        n_sessions = int(rng.integers(12, 31))
        base_n = int(rng.integers(2, 5))
        bx = int(rng.integers(0, 2))
        by = int(rng.integers(0, 2))
        hix, hiy = min(4, bx + 2), min(4, by + 2)
        lox, loy = bx, by
        half = math.ceil(0.3 * period)
        entry = SessionInput(0, (NrsPair(bx, by),) * base_n)
        sessions = [entry]
        slot = 0
        prev_day = 0
        dwell_x = dwell_y = 0
        for _ in range(n_sessions):
            slot += 2 * period if rng.random() < 0.06 else period
            if rng.random() < 0.60:
                jitter = 0
            else:
                jitter = int(rng.integers(-half, half + 1) + rng.integers(-half, half + 1)) // 2
            day = max(prev_day + 1, slot + jitter)
            prev_day = day
            if rng.random() < 0.08:
                sessions.append(SessionInput(day))
                continue
            dwell_x += 1
            dwell_y += 1
            if dwell_x >= 3 and rng.random() < 0.35:
                bx = min(hix, max(lox, bx + (1 if rng.random() < 0.5 else -1)))
                dwell_x = 0
            if dwell_y >= 3 and rng.random() < 0.35:
                by = min(hiy, max(loy, by + (1 if rng.random() < 0.5 else -1)))
                dwell_y = 0
            n = min(4, max(2, base_n + int(rng.integers(-1, 2))))
            sessions.append(SessionInput(day, (NrsPair(bx, by),) * n))
        traces.append(
            GeneratedTrace(
                name=f"irregular-{t:04d}", cadence=cadence, sessions=tuple(sessions)
            )
        )
    return traces
