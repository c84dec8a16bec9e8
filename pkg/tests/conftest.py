"""Shared helpers: corpus caches and the Prüfer-dedup enumeration oracle.

The oracle side deliberately re-implements decoding and canonization with
its own conventions (descending child sort, string codes) so that it shares
no code path with steinerkit.corpus.
"""

from __future__ import annotations

import heapq
import sys
from functools import lru_cache
from itertools import permutations, product
from multiprocessing import Pool

from steinerkit import Tree, enumerate_trees


def prufer_decode(n, seq):
    """Labeled tree edges for a Prüfer sequence over {0..n-1}, len n-2."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def _centroids(n, adj):
    if n == 1:
        return [0]
    parent = [-1] * n
    order = [0]
    parent[0] = 0
    for v in order:
        for w in adj[v]:
            if parent[w] < 0:
                parent[w] = v
                order.append(w)
    size = [1] * n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    best, cents = n + 1, []
    for v in order:
        heaviest = n - size[v] if v else 0
        for w in adj[v]:
            if w and parent[w] == v:
                heaviest = max(heaviest, size[w])
        if heaviest < best:
            best, cents = heaviest, [v]
        elif heaviest == best:
            cents.append(v)
    return cents


def _rooted_code(adj, v, p):
    subs = sorted((_rooted_code(adj, w, v) for w in adj[v] if w != p), reverse=True)
    return "(" + "".join(subs) + ")"


def oracle_code(n, edges):
    """Isomorphism-complete string code, independent of steinerkit.corpus."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return min(_rooted_code(adj, c, -1) for c in _centroids(n, adj))


def tree_oracle_code(tree):
    return oracle_code(tree.n, tree.edges())


def _prufer_shard(args):
    n, prefix = args
    codes = set()
    count = 0
    for rest in product(range(n), repeat=n - 2 - len(prefix)):
        codes.add(oracle_code(n, prufer_decode(n, prefix + rest)))
        count += 1
    return codes, count


def prufer_class_codes(n, jobs=1):
    """Set of oracle codes over all n^(n-2) labeled trees, plus the count."""
    if n == 1:
        return {oracle_code(1, [])}, 1
    if n == 2:
        return {oracle_code(2, [(0, 1)])}, 1
    prefix_len = 2 if n - 2 >= 2 and jobs > 1 else 0
    shards = [(n, p) for p in product(range(n), repeat=prefix_len)]
    if jobs > 1 and len(shards) > 1:
        with Pool(jobs) as pool:
            parts = pool.map(_prufer_shard, shards)
    else:
        parts = map(_prufer_shard, shards)
    codes, total = set(), 0
    for part, count in parts:
        codes |= part
        total += count
    assert total == n ** (n - 2)
    return codes, total


@lru_cache(maxsize=None)
def trees_up_to(hi, lo=1):
    return tuple(t for n in range(lo, hi + 1) for t in enumerate_trees(n))


@lru_cache(maxsize=None)
def trees_of_order(n):
    return tuple(enumerate_trees(n))


def brute_isomorphic(t1, t2):
    """Permutation search; degree-multiset prefilter keeps n=8 affordable."""
    if t1.n != t2.n:
        return False
    if sorted(t1.degree(v) for v in range(t1.n)) != sorted(
        t2.degree(v) for v in range(t2.n)
    ):
        return False
    e2 = set(t2.edges())
    for perm in permutations(range(t1.n)):
        if all(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) in e2
            for u, v in t1.edges()
        ):
            return True
    return False


def relabel(tree, perm):
    return Tree(tree.n, [(perm[u], perm[v]) for u, v in tree.edges()])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num, label, ok, detail in sorted(mod.RESULTS):
        status = "PASS" if ok else "FAIL"
        suffix = f" ({detail})" if detail else ""
        terminalreporter.write_line(f"criterion {num} [{label}]: {status}{suffix}")
