"""Tier agreement checks: published-table weights versus the formulas.

Two instruments. ``tier_drift`` replays one session log under both
tiers and reports per-session coordinate differences. ``drift_bound_sweep``
does the same over a large batch of generated anchor traces (every gap
exactly on a bucket's representative tau) through the batch kernels,
where the only source of divergence is the rounding of the published
weight table.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from signalfield import engine, kernels, register
from signalfield.engine import Cadence, SessionInput, Tier
from signalfield.harness import traces as traces_mod


@dataclass(frozen=True)
class SessionDrift:
    session_index: int
    dx: float
    dy: float
    region_match: bool
    sms_match: bool

    @property
    def magnitude(self) -> float:
        return max(abs(self.dx), abs(self.dy))


@dataclass(frozen=True)
class DriftReport:
    """Per-session divergence of one log replayed under both tiers."""

    sessions: tuple[SessionDrift, ...]
    max_drift: float
    region_mismatches: int
    sms_mismatches: int


def tier_drift(
    entries: list[tuple[str, SessionInput]], cadence: Cadence
) -> DriftReport:
    lite = register.replay(entries, cadence, Tier.LITE)
    cont = register.replay(entries, cadence, Tier.CONTINUOUS)
    rows = []
    for signal in lite.signals.values():
        twin = cont.signal_by_name(signal.name)
        for a, b in zip(signal.locus, twin.locus):
            rows.append(
                SessionDrift(
                    session_index=a.session_index,
                    dx=b.position.x - a.position.x,
                    dy=b.position.y - a.position.y,
                    region_match=a.region is b.region,
                    sms_match=a.sms == b.sms,
                )
            )
    return DriftReport(
        sessions=tuple(rows),
        max_drift=max((r.magnitude for r in rows), default=0.0),
        region_mismatches=sum(not r.region_match for r in rows),
        sms_mismatches=sum(not r.sms_match for r in rows),
    )


@dataclass(frozen=True)
class SweepReport:
    """Batch drift result over generated traces."""

    seed: int
    trace_count: int
    session_count: int
    max_drift: float
    worst_trace: str


def _batched(
    batch: list[traces_mod.GeneratedTrace], tier: Tier, cadence_map
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    counts = np.array([len(t.sessions) - 1 for t in batch], dtype=np.int64)
    total = int(counts.sum())
    x0 = np.zeros(len(batch))
    y0 = np.zeros(len(batch))
    scored = np.zeros(total, dtype=np.uint8)
    w_eff = np.zeros(total)
    decay = np.zeros(total)
    x_new = np.zeros(total)
    y_new = np.zeros(total)
    pos = 0
    for i, trace in enumerate(batch):
        resolved = traces_mod.resolve_arrays(trace, tier, cadence_map(trace))
        x0[i], y0[i] = resolved[0], resolved[1]
        span = slice(pos, pos + counts[i])
        scored[span], w_eff[span], decay[span] = resolved[2], resolved[3], resolved[4]
        x_new[span], y_new[span] = resolved[5], resolved[6]
        pos += counts[i]
    xs, ys = kernels.batch_positions(counts, x0, y0, scored, w_eff, decay, x_new, y_new)
    return counts, xs, ys


def drift_bound_sweep(trace_count: int = 1000, seed: int = 20260822) -> SweepReport:
    """Max |coordinate difference| between tiers across anchor traces."""
    batch = traces_mod.generate_anchor_traces(trace_count, seed)
    counts, lx, ly = _batched(batch, Tier.LITE, lambda t: t.cadence)
    _, cx, cy = _batched(batch, Tier.CONTINUOUS, lambda t: t.cadence)
    diff = np.maximum(np.abs(lx - cx), np.abs(ly - cy))
    worst = int(np.argmax(diff))
    owner = int(np.searchsorted(np.cumsum(counts), worst, side="right"))
    return SweepReport(
        seed=seed,
        trace_count=len(batch),
        session_count=int(counts.sum()),
        max_drift=float(diff.max()) if diff.size else 0.0,
        worst_trace=batch[owner].name,
    )


def published_table_gap(cadence: Cadence | None = None) -> dict[str, tuple[float, float]]:
    """Per-bucket |published minus formula| for (w, decay) at the
    representative tau. Diagnostic companion to the sweep."""
    cadence = cadence or engine.BIWEEKLY
    out = {}
    for gap_class in engine.GapClass:
        tau = gap_class.representative_tau
        published = engine.weights_lite(gap_class)
        gap_days = tau * cadence.nominal_period_days
        exact = engine.weights_continuous(gap_days, cadence)
        out[gap_class.value] = (
            abs(published.w - exact.w),
            abs(published.decay - exact.decay),
        )
    return out
