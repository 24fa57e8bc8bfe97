#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernels against the pure-Python lane.

The two lanes use different strategies (literal nested enumeration in C vs
memoised recursion in Python), so the speedup column is strategy + compiler
combined.  Counts must agree exactly; any mismatch aborts the run.

Usage:  python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import sys
import time
from array import array

from ffcount import kernels
from ffcount.kernels import quad_tables, vector_tables


def time_call(fn, *args, repeat=3):
    best = float("inf")
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return value, best


def bench_vectors(cells):
    from ffcount import _kernels_py

    rows = []
    for q, n, m in cells:
        ncodes, deg, gcdtab, monic_codes = vector_tables(q, m)
        if gcdtab is None:
            continue

        def run_pure():
            memo = {}
            return sum(
                _kernels_py.count_completions(
                    n - pos - 1, m, q, ncodes, deg, gcdtab, code, deg[code] == m, memo
                )
                for pos in range(n)
                for code in monic_codes
            )

        pure_val, pure_t = time_call(run_pure)
        row = {"cell": f"q={q} n={n} m={m}", "count": pure_val, "pure_s": pure_t}
        if kernels.USING_COMPILED:
            from ffcount import _speedups

            def run_compiled():
                return sum(
                    _speedups.count_completions(
                        n - pos - 1, m, q, ncodes, deg, gcdtab, code, deg[code] == m
                    )
                    for pos in range(n)
                    for code in monic_codes
                )

            comp_val, comp_t = time_call(run_compiled)
            if comp_val != pure_val:
                sys.exit(f"MISMATCH at {row['cell']}: pure {pure_val} vs compiled {comp_val}")
            row["compiled_s"] = comp_t
            row["speedup"] = pure_t / comp_t if comp_t else float("inf")
        rows.append(row)
    return rows


def bench_quadratic(cells):
    from ffcount import _kernels_py

    rows = []
    for q, m in cells:
        tables = quad_tables(q, m)
        pure_val, pure_t = time_call(_kernels_py.count_quadratic_triples, q, m, tables, 3)
        row = {"cell": f"q={q} m={m} (disc)", "count": pure_val, "pure_s": pure_t}
        if kernels.USING_COMPILED:
            from ffcount import _speedups

            ncodes, deg, gcdtab, monic_codes, sq, prod4, classify = tables
            comp_val, comp_t = time_call(
                _speedups.count_quadratic_triples,
                q, m, ncodes, deg, gcdtab, array("i", monic_codes), sq, prod4, classify, 3,
            )
            if comp_val != pure_val:
                sys.exit(f"MISMATCH at {row['cell']}: pure {pure_val} vs compiled {comp_val}")
            row["compiled_s"] = comp_t
            row["speedup"] = pure_t / comp_t if comp_t else float("inf")
        rows.append(row)
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="smaller cells only")
    args = ap.parse_args()

    if args.quick:
        vec_cells = [(2, 2, 6), (3, 2, 3), (3, 3, 2)]
        quad_cells = [(3, 1), (3, 2)]
    else:
        vec_cells = [(2, 2, 8), (2, 3, 5), (2, 4, 4), (3, 2, 4), (3, 3, 4), (3, 4, 3), (5, 2, 3)]
        quad_cells = [(3, 1), (3, 2), (3, 3), (5, 2)]

    print(f"compiled lane available: {kernels.USING_COMPILED}")
    print()
    header = f"{'cell':>22} {'count':>12} {'pure_s':>10} {'compiled_s':>11} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for row in bench_vectors(vec_cells) + bench_quadratic(quad_cells):
        pure = f"{row['pure_s']:.4f}"
        comp = f"{row.get('compiled_s', float('nan')):.4f}" if "compiled_s" in row else "-"
        speed = f"{row.get('speedup', float('nan')):.1f}x" if "speedup" in row else "-"
        print(f"{row['cell']:>22} {row['count']:>12} {pure:>10} {comp:>11} {speed:>9}")


if __name__ == "__main__":
    main()
