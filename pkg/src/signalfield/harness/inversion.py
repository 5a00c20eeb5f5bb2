"""Recover the session inputs behind the published trajectory.

The published table gives positions, committee sizes, and occurrence
counts but not the scores people actually entered. Inverting the update
formula recovers the elicited coordinates each session must have used;
snapping those to integer score assignments consistent with the
committee size yields a replayable log. The inversion runs against the
accumulated full-precision state, not the rounded printed positions, so
rounding in the table does not compound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from signalfield import engine
from signalfield.engine import BIWEEKLY, Cadence, NrsPair, SessionInput, Tier
from signalfield.harness.reference import SIGNAL_NAME, PublishedSession

COORD_TOLERANCE = 0.02


@dataclass
class InversionResult:
    entries: list[tuple[str, SessionInput]]
    # sessions where no integer score assignment lands within tolerance
    flagged: list[int] = field(default_factory=list)


def _snap_scores(mean: float, n: int) -> list[int]:
    """Integer scores for n assessors whose mean is close to ``mean``.

    The total is rounded half-away-from-zero, then spread so individual
    scores differ by at most one.
    """
    total = int(math.floor(mean * n + 0.5))
    total = max(0, min(4 * n, total))
    base, extra = divmod(total, n)
    return [base + 1] * extra + [base] * (n - extra)


def derive_inputs(
    published: list[PublishedSession],
    cadence: Cadence = BIWEEKLY,
) -> InversionResult:
    """Invert published positions into an integer-score session log.

    Session 1 becomes the entry (its coordinates divide by 2.5 into the
    entry scores directly); every later session solves

        x_new = x_prev + (x' - x_prev) / w_eff

    and the decayed-y analogue, then snaps.
    """
    first = published[0]
    entry_scores = _snap_scores(first.x / 2.5, first.n)
    entry_scores_y = _snap_scores(first.y / 2.5, first.n)
    entry = SessionInput(
        day=first.day,
        assessments=tuple(
            NrsPair(sx, sy) for sx, sy in zip(entry_scores, entry_scores_y)
        ),
        occurrences=first.occurrences,
        note=first.key_event,
    )
    entries = [(SIGNAL_NAME, entry)]
    flagged: list[int] = []

    record = engine.entry_record(entry)
    state = engine.state_after(record)

    for row in published[1:]:
        gap_days = row.day - state.prev_day
        gap = engine.classify_gap(gap_days, cadence)
        w_row = engine.weights_lite(gap)
        c = engine.committee_scale(row.n)
        w_eff = engine.effective_weight(w_row.w, c)

        x_target = state.position.x + (row.x - state.position.x) / w_eff
        y_decayed = state.position.y * w_row.decay
        y_target = y_decayed + (row.y - y_decayed) / w_eff

        xs = _snap_scores(x_target / 2.5, row.n)
        ys = _snap_scores(y_target / 2.5, row.n)
        session = SessionInput(
            day=row.day,
            assessments=tuple(NrsPair(sx, sy) for sx, sy in zip(xs, ys)),
            occurrences=row.occurrences,
            note=row.key_event,
        )
        replayed = engine.step(state, session, Tier.LITE, cadence, row.session)
        if (
            abs(replayed.position.x - row.x) > COORD_TOLERANCE
            or abs(replayed.position.y - row.y) > COORD_TOLERANCE
        ):
            flagged.append(row.session)
        entries.append((SIGNAL_NAME, session))
        state = engine.state_after(replayed)

    return InversionResult(entries=entries, flagged=flagged)
