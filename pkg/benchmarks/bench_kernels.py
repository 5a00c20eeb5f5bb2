#!/usr/bin/env python3
"""Time the batch replay kernels: jitted versus pure-Python fallback.

Builds one flat batch of generated traces, replays it in both modes,
and prints best-of-N wall times. The first jitted call pays compilation
cost, so each mode is warmed before timing.

Usage: python3 benchmarks/bench_kernels.py [--traces N] [--repeats K]
"""

from __future__ import annotations

import argparse
import os
import time

import numpy as np

from signalfield import kernels
from signalfield.engine import Tier
from signalfield.harness import traces as traces_mod


def build_batch(trace_count: int, seed: int):
    batch = traces_mod.generate_anchor_traces(trace_count, seed)
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
        resolved = traces_mod.resolve_arrays(trace, Tier.LITE)
        x0[i], y0[i] = resolved[0], resolved[1]
        span = slice(pos, pos + counts[i])
        scored[span], w_eff[span], decay[span] = resolved[2], resolved[3], resolved[4]
        x_new[span], y_new[span] = resolved[5], resolved[6]
        pos += counts[i]
    return counts, x0, y0, scored, w_eff, decay, x_new, y_new


def time_mode(args, repeats: int) -> float:
    kernels.batch_positions(*args)  # warm-up (compilation, caches)
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        kernels.batch_positions(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--traces", type=int, default=20000)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=20260822)
    args = parser.parse_args()

    batch = build_batch(args.traces, args.seed)
    sessions = int(batch[0].sum())
    print(f"{args.traces} traces, {sessions} sessions, best of {args.repeats}")

    os.environ["SIGNALFIELD_NUMBA"] = "0"
    fallback = time_mode(batch, args.repeats)
    print(f"fallback: {fallback * 1e3:9.2f} ms  ({sessions / fallback / 1e6:.2f} M sessions/s)")

    if not kernels.HAS_NUMBA:
        print("jitted:   unavailable (numba not importable)")
        return 0
    os.environ["SIGNALFIELD_NUMBA"] = "1"
    jitted = time_mode(batch, args.repeats)
    print(f"jitted:   {jitted * 1e3:9.2f} ms  ({sessions / jitted / 1e6:.2f} M sessions/s)")
    print(f"speedup:  {fallback / jitted:.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
