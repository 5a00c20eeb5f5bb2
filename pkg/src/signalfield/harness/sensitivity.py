"""Robustness of outcomes to the placement of cadence boundaries.

The gap-class boundaries are judgment calls, so conclusions should not
hinge on them. This sweep replays the bundled gas-fumes log plus a
batch of generated calendar-anchored traces with every boundary scaled
by a common factor (ceil keeps them integer days) and measures the
largest coordinate displacement any session suffers relative to the
unscaled replay. Weights and nominal periods stay fixed; only
classification moves.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from signalfield import engine, kernels
from signalfield.engine import Tier
from signalfield.harness import reference
from signalfield.harness import traces as traces_mod

DEFAULT_SCALES = (0.7, 1.0, 1.3)
SWEEP_SEED = 19
SWEEP_TRACES = 100


@dataclass(frozen=True)
class ScaleResult:
    scale: float
    max_drift: float
    worst_trace: str
    # largest drift among sessions of each cadence, by kind
    per_cadence: dict[str, float]
    # drift of the bundled gas-fumes log alone
    gasfumes_drift: float
    # scored sessions whose effective weight changed under the scaling
    reweighted_sessions: int


@dataclass(frozen=True)
class SensitivityReport:
    seed: int
    trace_count: int
    session_count: int
    results: tuple[ScaleResult, ...]

    def max_drift(self, scale: float) -> float:
        for result in self.results:
            if result.scale == scale:
                return result.max_drift
        raise KeyError(f"scale {scale} was not swept")


def _gasfumes_trace() -> traces_mod.GeneratedTrace:
    sessions = tuple(session for _, session in reference.bundled_log_entries())
    return traces_mod.GeneratedTrace(
        name=reference.SIGNAL_NAME, cadence=engine.BIWEEKLY, sessions=sessions
    )


def _replay_batch(
    batch: list[traces_mod.GeneratedTrace], scale: float
) -> tuple[np.ndarray, np.ndarray, np.ndarray, list[np.ndarray]]:
    counts = np.array([len(t.sessions) - 1 for t in batch], dtype=np.int64)
    total = int(counts.sum())
    x0 = np.zeros(len(batch))
    y0 = np.zeros(len(batch))
    scored = np.zeros(total, dtype=np.uint8)
    w_eff = np.zeros(total)
    decay = np.zeros(total)
    x_new = np.zeros(total)
    y_new = np.zeros(total)
    weights = []
    pos = 0
    for i, trace in enumerate(batch):
        resolved = traces_mod.resolve_arrays(
            trace, Tier.LITE, trace.cadence.scaled(scale)
        )
        x0[i], y0[i] = resolved[0], resolved[1]
        span = slice(pos, pos + counts[i])
        scored[span], w_eff[span], decay[span] = resolved[2], resolved[3], resolved[4]
        x_new[span], y_new[span] = resolved[5], resolved[6]
        weights.append(resolved[3])
        pos += counts[i]
    xs, ys = kernels.batch_positions(counts, x0, y0, scored, w_eff, decay, x_new, y_new)
    return counts, xs, ys, weights


def sensitivity_sweep(
    scales: tuple[float, ...] = DEFAULT_SCALES,
    trace_count: int = SWEEP_TRACES,
    seed: int = SWEEP_SEED,
) -> SensitivityReport:
    batch = [_gasfumes_trace()]
    batch += traces_mod.generate_irregular_traces(trace_count, seed)
    counts, base_x, base_y, base_w = _replay_batch(batch, 1.0)
    edges = np.cumsum(counts)
    results = []
    for scale in scales:
        _, xs, ys, ws = _replay_batch(batch, scale)
        diff = np.maximum(np.abs(xs - base_x), np.abs(ys - base_y))
        worst = int(np.argmax(diff)) if diff.size else 0
        owner = int(np.searchsorted(edges, worst, side="right"))
        per_cadence = {kind: 0.0 for kind in engine.CADENCES}
        for i, trace in enumerate(batch):
            start = 0 if i == 0 else int(edges[i - 1])
            span = diff[start : int(edges[i])]
            if span.size:
                kind = trace.cadence.kind
                per_cadence[kind] = max(per_cadence[kind], float(span.max()))
        reweighted = sum(
            int(np.count_nonzero(a != b)) for a, b in zip(base_w, ws)
        )
        results.append(
            ScaleResult(
                scale=scale,
                max_drift=float(diff.max()) if diff.size else 0.0,
                worst_trace=batch[owner].name,
                per_cadence=per_cadence,
                gasfumes_drift=float(diff[: int(edges[0])].max()),
                reweighted_sessions=reweighted,
            )
        )
    return SensitivityReport(
        seed=seed,
        trace_count=len(batch),
        session_count=int(counts.sum()),
        results=tuple(results),
    )
