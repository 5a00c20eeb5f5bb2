"""Batch replay kernels for randomized sweeps.

The scalar engine is the reference implementation; these kernels exist
for the harness paths that replay thousands of traces (drift bounds,
sensitivity sweeps, benchmarks). Callers pre-resolve the per-session
weights so the kernel body is nothing but the position recurrence, which
keeps it bit-identical to engine.update_position / engine.passive_update.

Set SIGNALFIELD_NUMBA=0 to force the pure-Python/numpy fallback; by
default the jitted kernel is used when numba imports cleanly.
"""

from __future__ import annotations

import os

import numpy as np

from signalfield.engine import Y_FLOOR

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


def numba_enabled() -> bool:
    """True when the jitted kernels will actually be used."""
    return HAS_NUMBA and os.environ.get("SIGNALFIELD_NUMBA", "1") != "0"


def _trace_kernel(x0, y0, scored, w_eff, decay, x_new, y_new, xs, ys):
    # One trace: sequential recurrence over sessions. Mirrors the engine
    # update exactly, including operation order and the y floor.
    x = x0
    y = y0
    for i in range(scored.shape[0]):
        if scored[i]:
            x = x + w_eff[i] * (x_new[i] - x)
            yd = y * decay[i]
            y = yd + w_eff[i] * (y_new[i] - yd)
            if y < Y_FLOOR:
                y = Y_FLOOR
        else:
            y = y * decay[i]
            if y < Y_FLOOR:
                y = Y_FLOOR
        xs[i] = x
        ys[i] = y


def _batch_kernel(starts, counts, x0, y0, scored, w_eff, decay, x_new, y_new, xs, ys):
    # Many traces packed into flat arrays; each trace is independent.
    for t in range(starts.shape[0]):
        lo = starts[t]
        hi = lo + counts[t]
        _trace_kernel(
            x0[t], y0[t],
            scored[lo:hi], w_eff[lo:hi], decay[lo:hi],
            x_new[lo:hi], y_new[lo:hi], xs[lo:hi], ys[lo:hi],
        )


if HAS_NUMBA:
    _trace_kernel_jit = njit(cache=True)(_trace_kernel)

    @njit(cache=True)
    def _batch_kernel_jit(starts, counts, x0, y0, scored, w_eff, decay, x_new, y_new, xs, ys):
        for t in range(starts.shape[0]):
            lo = starts[t]
            hi = lo + counts[t]
            _trace_kernel_jit(
                x0[t], y0[t],
                scored[lo:hi], w_eff[lo:hi], decay[lo:hi],
                x_new[lo:hi], y_new[lo:hi], xs[lo:hi], ys[lo:hi],
            )


def trace_positions(
    x0: float,
    y0: float,
    scored: np.ndarray,
    w_eff: np.ndarray,
    decay: np.ndarray,
    x_new: np.ndarray,
    y_new: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Replay one trace from pre-resolved session arrays.

    Args:
        x0, y0: entry position (already placed; not part of the arrays).
        scored: uint8/bool flags, 0 = review-only session.
        w_eff: effective weight per session (ignored where scored is 0).
        decay: decay multiplier per session.
        x_new, y_new: elicited coordinates (ignored where scored is 0).

    Returns:
        (xs, ys) position after each session.
    """
    n = scored.shape[0]
    xs = np.empty(n, dtype=np.float64)
    ys = np.empty(n, dtype=np.float64)
    kernel = _trace_kernel_jit if numba_enabled() else _trace_kernel
    kernel(
        float(x0), float(y0),
        np.ascontiguousarray(scored, dtype=np.uint8),
        np.ascontiguousarray(w_eff, dtype=np.float64),
        np.ascontiguousarray(decay, dtype=np.float64),
        np.ascontiguousarray(x_new, dtype=np.float64),
        np.ascontiguousarray(y_new, dtype=np.float64),
        xs, ys,
    )
    return xs, ys


def batch_positions(
    counts: np.ndarray,
    x0: np.ndarray,
    y0: np.ndarray,
    scored: np.ndarray,
    w_eff: np.ndarray,
    decay: np.ndarray,
    x_new: np.ndarray,
    y_new: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Replay many traces packed end-to-end in flat session arrays.

    ``counts[t]`` sessions belong to trace t; entries are per-trace.
    """
    counts = np.ascontiguousarray(counts, dtype=np.int64)
    starts = np.zeros_like(counts)
    np.cumsum(counts[:-1], out=starts[1:])
    total = int(counts.sum())
    xs = np.empty(total, dtype=np.float64)
    ys = np.empty(total, dtype=np.float64)
    kernel = _batch_kernel_jit if numba_enabled() else _batch_kernel
    kernel(
        starts, counts,
        np.ascontiguousarray(x0, dtype=np.float64),
        np.ascontiguousarray(y0, dtype=np.float64),
        np.ascontiguousarray(scored, dtype=np.uint8),
        np.ascontiguousarray(w_eff, dtype=np.float64),
        np.ascontiguousarray(decay, dtype=np.float64),
        np.ascontiguousarray(x_new, dtype=np.float64),
        np.ascontiguousarray(y_new, dtype=np.float64),
        xs, ys,
    )
    return xs, ys
