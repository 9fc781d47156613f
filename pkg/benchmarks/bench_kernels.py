#!/usr/bin/env python3
"""Benchmark the compiled induced-character kernels against the pure ones.

Builds every cell of the induced tables for a range of sizes with each
backend and reports wall time and speedup.  Results are also compared
entry by entry, so a benchmark run doubles as an equivalence check.

Usage: python benchmarks/bench_kernels.py [--max-sym 12] [--max-hob 6]
"""

import argparse
import sys
import time

from hobchar import _kernels
from hobchar.combinatorics import partitions, sign_flag_vectors
from hobchar.symmetric import CycleType

try:
    from hobchar import _speedups
except ImportError:
    _speedups = None


def sym_cells(n):
    classes = [CycleType.from_partition(p).exponents for p in reversed(partitions(n))]
    return [(c, lam.parts) for lam in partitions(n) for c in classes]


def hob_cells(n):
    labels = [
        (lam.parts, flags)
        for lam in partitions(n)
        for flags in sign_flag_vectors(lam)
    ]
    classes = []
    for parts, flags in reversed(labels):
        pos = [0] * parts[0]
        neg = [0] * parts[0]
        for p, f in zip(parts, flags):
            (pos if f else neg)[p - 1] += 1
        classes.append((tuple(pos), tuple(neg)))
    return [(pos, neg, parts, flags) for parts, flags in labels for pos, neg in classes]


def run_sym(kernel, cells):
    return [kernel(exps, parts) for exps, parts in cells]


def run_hob(kernel, cells):
    return [kernel(pos, neg, parts, mask) for pos, neg, parts, mask in cells]


def bench(label, cells, runner, pure_kernel, fast_kernel):
    t0 = time.perf_counter()
    pure = runner(pure_kernel, cells)
    t_pure = time.perf_counter() - t0
    if fast_kernel is None:
        print(f"{label:<18} {len(cells):>6} cells  pure {t_pure:8.3f}s  (compiled kernel unavailable)")
        return
    t0 = time.perf_counter()
    fast = runner(fast_kernel, cells)
    t_fast = time.perf_counter() - t0
    if pure != fast:
        print(f"{label}: BACKEND MISMATCH", file=sys.stderr)
        sys.exit(1)
    speedup = t_pure / t_fast if t_fast else float("inf")
    print(
        f"{label:<18} {len(cells):>6} cells  pure {t_pure:8.3f}s  "
        f"compiled {t_fast:8.3f}s  speedup {speedup:6.1f}x"
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-sym", type=int, default=12)
    parser.add_argument("--max-hob", type=int, default=6)
    args = parser.parse_args()

    if _speedups is None:
        print("note: compiled kernels not built; timing the pure path only")
    for n in range(6, args.max_sym + 1, 2):
        bench(
            f"sym degree {n}",
            sym_cells(n),
            run_sym,
            _kernels.sym_char_value,
            _speedups.sym_char_value if _speedups else None,
        )
    for n in range(3, args.max_hob + 1):
        bench(
            f"hyperoct rank {n}",
            hob_cells(n),
            run_hob,
            _kernels.hob_char_value,
            _speedups.hob_char_value if _speedups else None,
        )


if __name__ == "__main__":
    main()
