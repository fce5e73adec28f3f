#!/usr/bin/env python3
"""Compare the pure-Python sweep kernels with the compiled extension.

Runs each workload on both backends (when the extension is importable),
checks that they produce identical results, and prints a timing table.

    python benchmarks/bench_sweeps.py [--max-p 799] [--repeat 3]
"""

import argparse
import time

from lensframe import _sweeps_py

try:
    from lensframe import _sweeps_cy
except ImportError:
    _sweeps_cy = None


def _workloads(max_p):
    lift_cap = min(max_p, 399)
    return [
        (
            f"invariant tables, odd p <= {max_p}",
            lambda impl: [impl.invariant_table(p) for p in range(3, max_p + 1, 2)],
        ),
        (
            f"residue tables, odd p <= {max_p}",
            lambda impl: [impl.residue_table(p) for p in range(3, max_p + 1, 2)],
        ),
        (
            f"lift sweeps (36 lifts/unit), odd p <= {lift_cap}",
            lambda impl: [impl.lift_mismatch(p, 5) for p in range(3, lift_cap + 1, 2)],
        ),
    ]


def _best_of(fn, impl, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(impl)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(
        description="Benchmark the unit-group sweep kernels on both backends."
    )
    parser.add_argument("--max-p", type=int, default=799)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _sweeps_cy is None:
        print("compiled extension not available; timing pure Python only")
    print(f"{'workload':<46} {'python':>10} {'compiled':>10} {'speedup':>9}")
    for name, fn in _workloads(args.max_p):
        py_time, py_result = _best_of(fn, _sweeps_py, args.repeat)
        if _sweeps_cy is None:
            print(f"{name:<46} {py_time:>9.3f}s {'-':>10} {'-':>9}")
            continue
        cy_time, cy_result = _best_of(fn, _sweeps_cy, args.repeat)
        if py_result != cy_result:
            raise AssertionError(f"backend mismatch in workload: {name}")
        print(f"{name:<46} {py_time:>9.3f}s {cy_time:>9.3f}s {py_time / cy_time:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
