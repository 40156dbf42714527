#!/usr/bin/env python3
"""Compare the compiled and pure-Python solver kernels on growing instances.

Usage: python bench/bench_kernels.py [max_n]
"""

import random
import sys
import time

from slowcolor import _kernel_py
from slowcolor.families import complete_bipartite, cycle, petersen
from slowcolor.graph import from_edges

try:
    from slowcolor import _kernel_c
except ImportError:
    _kernel_c = None


def random_graph(n, p, seed):
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edges(n, edges)


def run(label, g):
    row = [f"{label:<24} n={g.n:<3}"]
    results = []
    for name, kernel in (("cython", _kernel_c), ("python", _kernel_py)):
        if kernel is None:
            row.append(f"{name}: unavailable")
            continue
        t0 = time.perf_counter()
        table, nodes = kernel.value_table(g.n, g.adj)
        dt = time.perf_counter() - t0
        results.append(table[-1])
        row.append(f"{name}: {dt * 1000:9.1f} ms (value {table[-1]}, {nodes} nodes)")
    if len(results) == 2:
        assert results[0] == results[1], "kernel disagreement!"
    print("  ".join(row))


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 14
    cases = [
        ("C10", cycle(10)),
        ("petersen", petersen()),
        ("K5,5", complete_bipartite(5, 5)),
        ("random(12, 0.4)", random_graph(12, 0.4, 7)),
    ]
    if max_n >= 14:
        cases.append(("random(14, 0.35)", random_graph(14, 0.35, 7)))
    for label, g in cases:
        if g.n <= max_n:
            run(label, g)


if __name__ == "__main__":
    main()
