#!/usr/bin/env python3
"""Benchmark the compiled jet kernel against the pure-Python fallback.

Times the full per-point jet evaluation (the hot loop of every scan) over
an n-by-n grid for each flow surface, on both backends, and prints the
speedup. The two backends produce bit-identical slots; this script also
asserts that on the sampled grid.

Usage: python benchmarks/bench_backends.py [--n 192] [--repeats 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from powergeom import backend
from powergeom.models import FlowKind
from powergeom.stability import axis_samples


def grid_points(n: int) -> tuple[np.ndarray, np.ndarray]:
    axis = axis_samples((-1.55, 1.55), n)
    a1 = np.array([a for _ in range(n) for a in axis])
    a2 = np.array([b for b in axis for _ in range(n)])
    return a1, a2


def time_fill(fill, code: int, a1: np.ndarray, a2: np.ndarray,
              repeats: int) -> tuple[float, np.ndarray]:
    out = np.empty((a1.shape[0], 10))
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fill(code, a1, a2, out, 0, a1.shape[0])
        best = min(best, time.perf_counter() - start)
    return best, out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=192,
                        help="grid edge length (default 192)")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if backend._compiled is None:
        print("compiled extension not built; nothing to compare")
        return 1

    a1, a2 = grid_points(args.n)
    total = a1.shape[0]
    print(f"grid {args.n}x{args.n} = {total} points, best of {args.repeats}\n")
    print(f"{'flow':<11}{'compiled':>12}{'pure python':>14}{'speedup':>10}")

    for kind in FlowKind:
        code = kind.code
        t_c, out_c = time_fill(backend._compiled.batch_slots, code, a1, a2,
                               args.repeats)
        t_p, out_p = time_fill(backend._batch_slots_py, code, a1, a2,
                               max(1, args.repeats - 2))
        assert (out_c == out_p).all(), "backends diverged"
        print(f"{kind.value:<11}{t_c * 1e3:>10.1f}ms{t_p * 1e3:>12.1f}ms"
              f"{t_p / t_c:>9.1f}x")

    print("\nslots bit-identical across backends on every grid point")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
