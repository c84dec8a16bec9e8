#!/usr/bin/env python3
"""Compare the compiled steiner kernels against the pure-Python fallback.

Times the three kernel entry points (steiner_value, greedy_extend,
brute_ecc) on the full corpus of non-isomorphic trees of a given order,
using identical call sequences for both backends, and prints per-call
averages plus the speedup ratio.

Usage:
    python benchmarks/bench_backends.py --n 10 --k 4 --trials 3
"""

from __future__ import annotations

import argparse
import random
import time
from itertools import combinations

from steinerkit import _kernels_py
from steinerkit.corpus import enumerate_trees

try:
    from steinerkit import _kernels
except ImportError:
    _kernels = None


def _subset_workload(trees, k, seed):
    """Fixed (tree index, vertex tuple) pairs shared by every backend."""
    rng = random.Random(seed)
    work = []
    for i, tree in enumerate(trees):
        if tree.n < k:
            continue
        for _ in range(20):
            work.append((i, tuple(rng.sample(range(tree.n), k))))
    return work


def bench_steiner_value(backend, packed, work):
    t0 = time.perf_counter()
    acc = 0
    for i, subset in work:
        acc += backend.steiner_value(packed[i], subset)
    return time.perf_counter() - t0, acc


def bench_greedy_extend(backend, packed, trees, k):
    t0 = time.perf_counter()
    acc = 0
    for i, tree in enumerate(trees):
        if tree.n < k:
            continue
        for v in range(tree.n):
            value, _ = backend.greedy_extend(packed[i], (v,), k - 1)
            acc += value
    return time.perf_counter() - t0, acc


def bench_brute_ecc(backend, packed, trees, k, kprime):
    t0 = time.perf_counter()
    acc = 0
    for i, tree in enumerate(trees):
        if tree.n < k:
            continue
        for base in combinations(range(tree.n), kprime):
            value, _ = backend.brute_ecc(packed[i], base, k - kprime)
            acc += value
    return time.perf_counter() - t0, acc


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=10, help="tree order (default 10)")
    parser.add_argument("--k", type=int, default=4, help="terminal count (default 4)")
    parser.add_argument("--trials", type=int, default=3, help="repetitions, best kept")
    parser.add_argument("--seed", type=int, default=2026, help="subset sampling seed")
    args = parser.parse_args(argv)

    backends = [("python", _kernels_py)]
    if _kernels is not None:
        backends.append(("c", _kernels))
    else:
        print("compiled backend unavailable; timing the fallback only")

    trees = list(enumerate_trees(args.n))
    print(f"corpus: {len(trees)} trees of order {args.n}, k={args.k}")
    work = _subset_workload(trees, args.k, args.seed)

    jobs = [
        ("steiner_value", lambda b, p: bench_steiner_value(b, p, work)),
        ("greedy_extend", lambda b, p: bench_greedy_extend(b, p, trees, args.k)),
        ("brute_ecc", lambda b, p: bench_brute_ecc(b, p, trees, args.k, 2)),
    ]

    results = {}
    for job_name, job in jobs:
        checks = set()
        for name, module in backends:
            packed = [module.pack(t.n, t.adjacency) for t in trees]
            best = min(job(module, packed) for _ in range(args.trials))
            elapsed, acc = best
            checks.add(acc)
            results[(job_name, name)] = elapsed
            print(f"  {job_name:14s} {name:7s} {elapsed * 1e3:9.2f} ms")
        if len(checks) != 1:
            raise SystemExit(f"backends disagree on {job_name}: {sorted(checks)}")
        if len(backends) == 2:
            ratio = results[(job_name, "python")] / results[(job_name, "c")]
            print(f"  {job_name:14s} speedup {ratio:6.1f}x")


if __name__ == "__main__":
    main()
