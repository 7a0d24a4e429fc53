#!/usr/bin/env python3
"""Benchmark the compiled row-reduction kernels against the pure-Python
fallback on representative workloads, and verify they agree bit for bit.

Run:  python3 benchmarks/bench_kernels.py [--sizes 40,80,120] [--reps 3]
"""

import argparse
import time

from matlislab import _kernels_py

try:
    from matlislab import _kernels

    HAVE_COMPILED = True
except ImportError:
    _kernels = None
    HAVE_COMPILED = False


def _lcg_rows(nrows, ncols, mod, seed):
    state = seed
    rows = []
    for _ in range(nrows):
        row = []
        for _ in range(ncols):
            state = (state * 6364136223846793005 + 1442695040888963407) % (1 << 64)
            row.append((state >> 32) % mod - mod // 2)
        rows.append(tuple(row))
    return tuple(rows)


def bench(fn, rows, arg, reps):
    best = float("inf")
    out = None
    for _ in range(reps):
        t0 = time.perf_counter()
        out = fn(rows, arg) if arg is not None else fn(rows)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="40,80,120")
    ap.add_argument("--reps", type=int, default=3)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if not HAVE_COMPILED:
        print("compiled kernels not available; benchmarking fallback only")

    print("%-22s %10s %10s %8s" % ("workload", "python", "cython", "speedup"))
    for n in sizes:
        for label, fn_py, fn_cy, arg, rows in (
            (
                "rref_fp  p=5 %dx%d" % (n, n + 10),
                _kernels_py.rref_fp,
                _kernels.rref_fp if HAVE_COMPILED else None,
                5,
                _lcg_rows(n, n + 10, 5, seed=n),
            ),
            (
                "rref_int %dx%d" % (n, n + 10),
                _kernels_py.rref_int,
                _kernels.rref_int if HAVE_COMPILED else None,
                None,
                _lcg_rows(n, n + 10, 7, seed=n + 1),
            ),
        ):
            t_py, out_py = bench(fn_py, rows, arg, args.reps)
            if fn_cy is None:
                print("%-22s %9.4fs %10s %8s" % (label, t_py, "-", "-"))
                continue
            t_cy, out_cy = bench(fn_cy, rows, arg, args.reps)
            assert out_py == out_cy, "backend outputs differ on %s" % label
            print(
                "%-22s %9.4fs %9.4fs %7.1fx"
                % (label, t_py, t_cy, t_py / t_cy if t_cy else float("inf"))
            )
    if HAVE_COMPILED:
        print("all compared outputs identical")


if __name__ == "__main__":
    main()
