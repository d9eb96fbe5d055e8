#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the three hot paths on representative workloads: outcome-table
construction, swing counting, and Monte Carlo chunk evaluation on the
24-player board.  Results are identical across backends; only speed differs.

    python benchmarks/bench_backends.py [--repeat N] [--mc-samples N]
"""

import argparse
import time
from math import factorial

import numpy as np

from committee_power import RULES, backend
from committee_power.core import RULE_IDS
from committee_power.imf import shares_bp


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def workloads(mc_samples):
    rng = np.random.Generator(np.random.Philox(1234))
    w653 = np.array([6, 5, 3], dtype=np.int64)
    board = np.array(shares_bp("pre"), dtype=np.int64)
    total5 = factorial(5) ** 3
    board_codes = rng.integers(0, 6, size=(mc_samples, 24), dtype=np.int64)
    board_perts = rng.integers(0, 5, size=(mc_samples, 24), dtype=np.int64)

    def table(kern, rule):
        return kern.eval_winners(5, 3, w653, RULE_IDS[rule], 0, total5)

    tables = {rule: None for rule in ("borda", "schulze")}

    def bench_table(kern, rule):
        tables[rule] = table(kern, rule)

    def bench_swings(kern, rule):
        kern.count_swings(tables[rule], 5, 3)

    def bench_mc(kern, rule):
        kern.mc_chunk_hits(3, board, RULE_IDS[rule], board_codes, board_perts)

    return [
        ("outcome table, borda m=5 n=3", bench_table, "borda"),
        ("outcome table, schulze m=5 n=3", bench_table, "schulze"),
        ("swing counts, borda m=5 n=3", bench_swings, "borda"),
        (f"mc chunk, plurality board x{mc_samples}", bench_mc, "plurality"),
        (f"mc chunk, copeland board x{mc_samples}", bench_mc, "copeland"),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--mc-samples", type=int, default=200_000)
    args = parser.parse_args()

    names = backend.available_backends()
    kernels = {name: backend.get_kernels(name) for name in names}
    # verify agreement and warm jit compilation before timing
    w = np.array([2, 1], dtype=np.int64)
    for kern in kernels.values():
        for rule in RULES:
            t = kern.eval_winners(2, 2, w, RULE_IDS[rule], 0, 4)
            kern.count_swings(t, 2, 2)
            kern.mc_chunk_hits(2, w, RULE_IDS[rule],
                               np.zeros((8, 2), np.int64),
                               np.zeros((8, 2), np.int64))

    rows = []
    for label, fn, rule in workloads(args.mc_samples):
        times = {name: best_of(args.repeat, fn, kernels[name], rule)
                 for name in names}
        rows.append((label, times))

    width = max(len(label) for label, _ in rows) + 2
    header = f"{'workload':<{width}}" + "".join(f"{name:>12}" for name in names)
    if set(names) == {"numba", "numpy"}:
        header += f"{'numba/numpy':>14}"
    print(header)
    for label, times in rows:
        line = f"{label:<{width}}"
        for name in names:
            line += f"{times[name] * 1000:>10.1f}ms"
        if set(names) == {"numba", "numpy"}:
            line += f"{times['numpy'] / times['numba']:>13.2f}x"
        print(line)


if __name__ == "__main__":
    main()
