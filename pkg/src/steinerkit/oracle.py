"""Exact Steiner computations on small general graphs.

This module is the independent oracle: a Dreyfus-Wagner dynamic program for
Steiner distance plus brute-force Steiner diameter/radius by subset
enumeration.  It shares no code with the tree-side algorithms, so agreement
between the two is a real check and not a tautology.

All guards are hard errors (TooLarge); an oracle must refuse rather than
approximate.  Edges are unweighted throughout.
"""

from __future__ import annotations

import heapq
import random
from collections import deque
from itertools import combinations
from math import comb
from typing import Iterable

from .errors import BadK, NotAGraph, TooLarge
from .tree import as_vertex_set

DW_MAX_TERMINALS = 12
DW_MAX_ORDER = 20
BRUTE_MAX_SUBSETS = 10**6


class Graph:
    """Immutable simple connected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adjacency")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if not isinstance(n, int) or n < 1:
            raise NotAGraph(f"order must be a positive integer, got {n!r}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not 0 <= u < n:
                raise NotAGraph(f"vertex {u} out of range for n={n}")
            if not 0 <= v < n:
                raise NotAGraph(f"vertex {v} out of range for n={n}")
            if u == v:
                raise NotAGraph(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise NotAGraph(f"duplicate edge ({min(u, v)},{max(u, v)})")
            adj[u].add(v)
            adj[v].add(u)
        reached = [False] * n
        reached[0] = True
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not reached[w]:
                    reached[w] = True
                    queue.append(w)
        for v in range(n):
            if not reached[v]:
                raise NotAGraph(f"vertex {v} unreachable from vertex 0")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in self.adjacency[u] if u < v)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2


def _all_pairs_distances(graph: Graph) -> list[list[int]]:
    dist = []
    for s in range(graph.n):
        row = [-1] * graph.n
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in graph.adjacency[u]:
                if row[w] < 0:
                    row[w] = row[u] + 1
                    queue.append(w)
        dist.append(row)
    return dist


def dw_steiner(graph: Graph, terminals: Iterable[int]) -> int:
    """Minimum edge count of a connected subgraph containing the terminals.

    Dreyfus-Wagner dynamic program over (terminal subset, attachment
    vertex), with subset-merge and unit-weight grow (Dijkstra) transitions.
    """
    members = as_vertex_set(terminals, graph.n)
    if len(members) > DW_MAX_TERMINALS:
        raise TooLarge(f"{len(members)} terminals exceeds the {DW_MAX_TERMINALS}-terminal guard")
    if graph.n > DW_MAX_ORDER:
        raise TooLarge(f"order {graph.n} exceeds the {DW_MAX_ORDER}-vertex guard")
    t = len(members)
    if t == 1:
        return 0
    dist = _all_pairs_distances(graph)
    if t == 2:
        return dist[members[0]][members[1]]
    n = graph.n
    inf = n * n
    full = (1 << t) - 1
    dp = [[inf] * n for _ in range(full + 1)]
    for i, s in enumerate(members):
        dp[1 << i] = dist[s][:]
    for mask in range(1, full + 1):
        if mask & (mask - 1) == 0:
            continue
        row = dp[mask]
        low = mask & (-mask)
        sub = (mask - 1) & mask
        while sub:
            if sub & low:
                other = mask ^ sub
                sub_row = dp[sub]
                other_row = dp[other]
                for v in range(n):
                    s = sub_row[v] + other_row[v]
                    if s < row[v]:
                        row[v] = s
            sub = (sub - 1) & mask
        heap = [(row[v], v) for v in range(n)]
        heapq.heapify(heap)
        while heap:
            d, v = heapq.heappop(heap)
            if d > row[v]:
                continue
            for w in graph.adjacency[v]:
                if d + 1 < row[w]:
                    row[w] = d + 1
                    heapq.heappush(heap, (d + 1, w))
    return min(dp[full])


def brute_sd_k(graph: Graph, k: int) -> int:
    """Steiner k-diameter by full enumeration of k-sets."""
    if not isinstance(k, int) or isinstance(k, bool) or not 2 <= k <= graph.n:
        raise BadK(f"k must satisfy 2 <= k <= n={graph.n}, got {k!r}")
    if comb(graph.n, k) > BRUTE_MAX_SUBSETS:
        raise TooLarge(f"C({graph.n},{k}) exceeds the {BRUTE_MAX_SUBSETS} subset guard")
    return max(dw_steiner(graph, s) for s in combinations(range(graph.n), k))


def brute_ecc_kk(graph: Graph, seed: Iterable[int], k: int) -> int:
    """(k,k')-eccentricity of a seed set by enumerating completions."""
    members = as_vertex_set(seed, graph.n)
    if not isinstance(k, int) or isinstance(k, bool) or not len(members) <= k <= graph.n:
        raise BadK(f"k must satisfy |seed| <= k <= n={graph.n}, got {k!r}")
    rest = [v for v in range(graph.n) if v not in set(members)]
    best = -1
    for completion in combinations(rest, k - len(members)):
        value = dw_steiner(graph, members + completion)
        if value > best:
            best = value
    return best


def brute_sr_kk(graph: Graph, k: int, kprime: int) -> int:
    """(k,k')-radius by double enumeration (all seeds, all completions)."""
    if not isinstance(kprime, int) or isinstance(kprime, bool) or not 1 <= kprime <= k:
        raise BadK(f"k' must satisfy 1 <= k' <= k={k}, got {kprime!r}")
    if not isinstance(k, int) or isinstance(k, bool) or k > graph.n:
        raise BadK(f"k must satisfy k <= n={graph.n}, got {k!r}")
    work = comb(graph.n, kprime) * comb(graph.n - kprime, k - kprime)
    if work > BRUTE_MAX_SUBSETS:
        raise TooLarge(f"{work} (seed, completion) pairs exceed the {BRUTE_MAX_SUBSETS} guard")
    cache: dict[tuple[int, ...], int] = {}
    best = -1
    for seed in combinations(range(graph.n), kprime):
        seed_set = set(seed)
        rest = [v for v in range(graph.n) if v not in seed_set]
        ecc = -1
        for completion in combinations(rest, k - kprime):
            key = tuple(sorted(seed + completion))
            value = cache.get(key)
            if value is None:
                value = dw_steiner(graph, key)
                cache[key] = value
            if value > ecc:
                ecc = value
        if best < 0 or ecc < best:
            best = ecc
    return best


def check_general_bounds(graph: Graph, k: int):
    """Check the general-graph diameter/radius bound for one (graph, k).

    Uses the 2(k+1)/(2k-1) bound for k in {2,3,4} and the (k+3)/(k+1)
    bound for k >= 5; both sides are exact.  Returns a Verdict.
    """
    from .corpus import graph6_encode
    from .families import bound_value
    from .verify import make_verdict

    if not isinstance(k, int) or isinstance(k, bool) or not 2 <= k <= graph.n:
        raise BadK(f"k must satisfy 2 <= k <= n={graph.n}, got {k!r}")
    sd = brute_sd_k(graph, k)
    sr = brute_sr_kk(graph, k, 1)
    name = "general_hos" if k <= 4 else "general_reiswig"
    return make_verdict(
        suite=name,
        graph6=graph6_encode(graph),
        canonical="",
        n=graph.n,
        k=k,
        kprime=1,
        lhs=sd,
        rhs=bound_value(name, k, 1, sr),
        witnesses={},
    )


def random_connected_graph(n: int, extra_edge_prob: float, rng: random.Random) -> Graph:
    """Seeded random connected graph: a uniform random labeled tree plus
    each remaining pair independently with the given probability."""
    if n < 1:
        raise NotAGraph(f"order must be >= 1, got {n}")
    edges: set[tuple[int, int]] = set()
    if n >= 2:
        sequence = [rng.randrange(n) for _ in range(n - 2)]
        degree = [1] * n
        for v in sequence:
            degree[v] += 1
        heap = [v for v in range(n) if degree[v] == 1]
        heapq.heapify(heap)
        for v in sequence:
            leaf = heapq.heappop(heap)
            edges.add((min(leaf, v), max(leaf, v)))
            degree[leaf] = 0
            degree[v] -= 1
            if degree[v] == 1:
                heapq.heappush(heap, v)
        last = [v for v in range(n) if degree[v] == 1]
        edges.add((min(last), max(last)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_edge_prob:
                edges.add((u, v))
    return Graph(n, sorted(edges))
