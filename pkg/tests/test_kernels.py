"""The batch kernels must be bit-identical to the scalar engine."""

import numpy as np
import pytest

from signalfield import engine, kernels
from signalfield.engine import BIWEEKLY, FieldPosition, Tier
from signalfield.harness import traces as traces_mod


def replay_with_engine(trace, tier):
    entry = trace.sessions[0]
    x0, y0 = engine.elicit_coordinates(entry.assessments)
    state = engine.SignalState(FieldPosition(x0, y0), cumulative_f=0, prev_day=entry.day)
    xs, ys = [], []
    for i, session in enumerate(trace.sessions[1:], start=2):
        record = engine.step(state, session, tier, trace.cadence, session_index=i)
        state = engine.state_after(record)
        xs.append(record.position.x)
        ys.append(record.position.y)
    return np.array(xs), np.array(ys)


@pytest.fixture(scope="module")
def sample_traces():
    return traces_mod.generate_anchor_traces(40, seed=7)


@pytest.mark.parametrize("tier", [Tier.LITE, Tier.CONTINUOUS])
def test_trace_kernel_matches_engine_bitwise(sample_traces, tier):
    for trace in sample_traces:
        x0, y0, *arrays = traces_mod.resolve_arrays(trace, tier)
        kx, ky = kernels.trace_positions(x0, y0, *arrays)
        ex, ey = replay_with_engine(trace, tier)
        assert np.array_equal(kx, ex)
        assert np.array_equal(ky, ey)


def test_fallback_matches_jitted_bitwise(sample_traces, monkeypatch):
    trace = sample_traces[0]
    x0, y0, *arrays = traces_mod.resolve_arrays(trace, Tier.LITE)
    monkeypatch.delenv("SIGNALFIELD_NUMBA", raising=False)
    jit_x, jit_y = kernels.trace_positions(x0, y0, *arrays)
    monkeypatch.setenv("SIGNALFIELD_NUMBA", "0")
    assert not kernels.numba_enabled()
    fb_x, fb_y = kernels.trace_positions(x0, y0, *arrays)
    assert np.array_equal(jit_x, fb_x)
    assert np.array_equal(jit_y, fb_y)


def test_env_flag_controls_dispatch(monkeypatch):
    monkeypatch.setenv("SIGNALFIELD_NUMBA", "0")
    assert not kernels.numba_enabled()
    monkeypatch.setenv("SIGNALFIELD_NUMBA", "1")
    assert kernels.numba_enabled() == kernels.HAS_NUMBA


def test_batch_equals_per_trace(sample_traces):
    counts = np.array([len(t.sessions) - 1 for t in sample_traces], dtype=np.int64)
    total = int(counts.sum())
    x0 = np.zeros(len(sample_traces))
    y0 = np.zeros(len(sample_traces))
    scored = np.zeros(total, dtype=np.uint8)
    w_eff = np.zeros(total)
    decay = np.zeros(total)
    x_new = np.zeros(total)
    y_new = np.zeros(total)
    singles = []
    pos = 0
    for i, trace in enumerate(sample_traces):
        resolved = traces_mod.resolve_arrays(trace, Tier.LITE)
        x0[i], y0[i] = resolved[0], resolved[1]
        span = slice(pos, pos + counts[i])
        scored[span], w_eff[span], decay[span] = resolved[2], resolved[3], resolved[4]
        x_new[span], y_new[span] = resolved[5], resolved[6]
        singles.append(kernels.trace_positions(resolved[0], resolved[1], *resolved[2:]))
        pos += counts[i]
    bx, by = kernels.batch_positions(counts, x0, y0, scored, w_eff, decay, x_new, y_new)
    assert np.array_equal(bx, np.concatenate([s[0] for s in singles]))
    assert np.array_equal(by, np.concatenate([s[1] for s in singles]))


def test_review_only_sessions_decay_without_moving_x():
    scored = np.array([1, 0, 0], dtype=np.uint8)
    w_eff = np.array([0.418, 0.0, 0.0])
    decay = np.array([0.917, 0.917, 0.770])
    x_new = np.array([10.0, 0.0, 0.0])
    y_new = np.array([2.5, 0.0, 0.0])
    xs, ys = kernels.trace_positions(4.46, 3.40, scored, w_eff, decay, x_new, y_new)
    assert xs[1] == xs[0] and xs[2] == xs[0]
    assert ys[1] == ys[0] * 0.917
    assert ys[2] == max(engine.Y_FLOOR, ys[1] * 0.770)


def test_empty_trace():
    empty = np.array([], dtype=np.float64)
    xs, ys = kernels.trace_positions(
        2.5, 2.5, np.array([], dtype=np.uint8), empty, empty, empty, empty
    )
    assert xs.size == 0 and ys.size == 0


def test_resolve_arrays_uses_scaled_boundaries():
    trace = traces_mod.generate_irregular_traces(1, seed=3)[0]
    base = traces_mod.resolve_arrays(trace, Tier.LITE)
    shrunk = traces_mod.resolve_arrays(trace, Tier.LITE, trace.cadence.scaled(0.7))
    assert base[0] == shrunk[0] and base[1] == shrunk[1]
    # same sessions, potentially different weight rows
    assert base[2].shape == shrunk[2].shape
