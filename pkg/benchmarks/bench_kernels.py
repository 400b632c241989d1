#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs identical workloads through both backends and prints a small table
with the speedup. Results are asserted equal along the way, so this also
doubles as an equivalence spot check.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from chibound._kernels import pykernels
from chibound.embed import _order_space_adj, _search_plan
from chibound.generators import kneser, mycielski_tower, random_graph
from chibound.trees import bristled_star


def embedding_args(host, pattern):
    order, parents, cands = _search_plan(host, pattern, None)
    return list(host.adjacency_masks()), _order_space_adj(pattern, order), parents, cands


def workloads():
    tower = mycielski_tower(3)
    dense = random_graph(42, "0.5", 99)
    sparse = random_graph(70, "0.12", 7)
    host = kneser(6, 2)
    pat = bristled_star(1, 2)
    yield (
        "chi(tower23) = 5",
        lambda m: m.k_color(tower.n, list(tower.adjacency_masks()), 5),
    )
    yield (
        "refute 4-coloring tower23",
        lambda m: m.k_color(tower.n, list(tower.adjacency_masks()), 4),
    )
    yield (
        "3-color random(70, .12)",
        lambda m: m.k_color(sparse.n, list(sparse.adjacency_masks()), 3),
    )
    yield (
        "max clique random(42, .5)",
        lambda m: m.max_clique(dense.n, list(dense.adjacency_masks())),
    )
    args = embedding_args(host, pat)
    yield ("count star in kneser(6,2)", lambda m: m.count_embeddings(*args))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    try:
        from chibound._kernels import _ckernels
    except ImportError:
        _ckernels = None
        print("compiled kernels not built; timing the fallback only\n")

    rows = []
    for name, call in workloads():
        t0 = time.perf_counter()
        for _ in range(args.repeat):
            expected = call(pykernels)
        py_time = (time.perf_counter() - t0) / args.repeat
        if _ckernels is not None:
            t0 = time.perf_counter()
            for _ in range(args.repeat):
                got = call(_ckernels)
            c_time = (time.perf_counter() - t0) / args.repeat
            assert got == expected, f"backend mismatch on {name}"
            rows.append((name, py_time, c_time))
        else:
            rows.append((name, py_time, None))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'python':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, py_time, c_time in rows:
        if c_time is None:
            print(f"{name:<{width}}  {py_time * 1e3:>8.2f}ms  {'n/a':>10}  {'':>8}")
        else:
            print(
                f"{name:<{width}}  {py_time * 1e3:>8.2f}ms  {c_time * 1e3:>8.2f}ms  {py_time / c_time:>7.1f}x"
            )


if __name__ == "__main__":
    main()
