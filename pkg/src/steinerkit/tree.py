"""Labeled trees: validation, metric queries, and exact Steiner distance.

A :class:`Tree` is an immutable adjacency structure over vertices ``0..n-1``.
Steiner distance of a terminal set is computed by iteratively pruning leaves
that are not terminals; what survives is the unique minimal subtree spanning
the set, returned together with its edge list as a :class:`SteinerWitness`.

All query functions are pure and deterministic: BFS visits neighbors in
ascending id order and every farthest-vertex tie is broken toward the
smallest id, so repeated runs (and parallel workers) produce identical
output.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BadVertex, EmptySet, NotATree, PreconditionError

VertexSet = tuple[int, ...]


def as_vertex_set(vertices: Iterable[int], n: int, *, allow_empty: bool = False) -> VertexSet:
    """Normalize an iterable of vertex ids to a strictly increasing tuple.

    Raises BadVertex on out-of-range or duplicated ids, EmptySet when the
    input is empty and ``allow_empty`` is false.
    """
    members = sorted(vertices)
    if not members and not allow_empty:
        raise EmptySet("vertex set must be non-empty")
    seen: set[int] = set()
    for v in members:
        if not isinstance(v, int) or isinstance(v, bool):
            raise BadVertex(f"vertex id {v!r} is not an integer")
        if not 0 <= v < n:
            raise BadVertex(f"vertex {v} out of range for n={n}")
        if v in seen:
            raise BadVertex(f"duplicate vertex {v}")
        seen.add(v)
    return tuple(members)


class Tree:
    """Immutable labeled tree on vertices ``0..n-1``.

    Construction validates every invariant (n >= 1, exactly n-1 simple
    edges, connected) and raises :class:`NotATree` naming the first
    offending element otherwise.
    """

    __slots__ = ("n", "adjacency", "_packed")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        edge_list = [(int(u), int(v)) for u, v in edges]
        _check_tree(n, edge_list)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edge_list:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_packed", None)

    def __setattr__(self, name, value):
        raise AttributeError("Tree is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Tree) and self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={list(self.edges())})"

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (min, max) pairs in ascending order."""
        return tuple((u, v) for u in range(self.n) for v in self.adjacency[u] if u < v)

    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if len(self.adjacency[v]) == 1)

    def packed(self):
        """Kernel-backend handle for this tree, built once on first use."""
        if self._packed is None:
            from . import kernels

            object.__setattr__(self, "_packed", kernels.pack(self.n, self.adjacency))
        return self._packed


def _check_tree(n: int, edge_list: list[tuple[int, int]]) -> None:
    if not isinstance(n, int) or n < 1:
        raise NotATree(f"order must be a positive integer, got {n!r}")
    if len(edge_list) != n - 1:
        raise NotATree(f"expected {n - 1} edges for order {n}, got {len(edge_list)}")
    seen: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edge_list:
        if not 0 <= u < n:
            raise NotATree(f"vertex {u} out of range for n={n}")
        if not 0 <= v < n:
            raise NotATree(f"vertex {v} out of range for n={n}")
        if u == v:
            raise NotATree(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise NotATree(f"duplicate edge {key}")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
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
            raise NotATree(f"vertex {v} unreachable from vertex 0")


def validate(tree: Tree) -> None:
    """Re-check every Tree invariant; raises NotATree on the first failure."""
    edge_list = list(tree.edges())
    _check_tree(tree.n, edge_list)
    for u in range(tree.n):
        row = tree.adjacency[u]
        if tuple(sorted(set(row))) != row:
            raise NotATree(f"adjacency row of vertex {u} is not sorted and duplicate-free")
        for w in row:
            if u not in tree.adjacency[w]:
                raise NotATree(f"edge ({u},{w}) is not symmetric")


def bfs_distances(tree: Tree, source: int) -> list[int]:
    if not 0 <= source < tree.n:
        raise BadVertex(f"vertex {source} out of range for n={tree.n}")
    dist = [-1] * tree.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in tree.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_parents(tree: Tree, source: int) -> list[int]:
    """BFS parent of every vertex (source's parent is itself)."""
    parent = [-1] * tree.n
    parent[source] = source
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in tree.adjacency[u]:
            if parent[w] < 0:
                parent[w] = u
                queue.append(w)
    return parent


def distance(tree: Tree, u: int, v: int) -> int:
    """Length of the unique u-v path."""
    if not 0 <= v < tree.n:
        raise BadVertex(f"vertex {v} out of range for n={tree.n}")
    return bfs_distances(tree, u)[v]


def eccentricity(tree: Tree, v: int) -> int:
    return max(bfs_distances(tree, v))


@dataclass(frozen=True)
class CenterProfile:
    """Diameter, one diametrical path, centers, and per-branch depth data.

    ``branch_table[c][w]`` is the maximum depth, measured from center ``c``,
    of a leaf in the branch entered through neighbor ``w``; for two centers
    the edge between them is not a branch of either.
    """

    diameter: int
    path: tuple[int, ...]
    centers: tuple[int, ...]
    branch_table: dict[int, dict[int, int]]


def _farthest(dist: Sequence[int]) -> int:
    best = 0
    for v in range(1, len(dist)):
        if dist[v] > dist[best]:
            best = v
    return best


def center_profile(tree: Tree) -> CenterProfile:
    """Double-BFS diameter computation with smallest-id tie-breaking.

    The first BFS starts from vertex 0; among farthest vertices the smallest
    id is chosen at both steps, so the reported path is reproducible.
    """
    u0 = _farthest(bfs_distances(tree, 0))
    dist0 = bfs_distances(tree, u0)
    ud = _farthest(dist0)
    d = dist0[ud]
    parent = bfs_parents(tree, u0)
    path = [ud]
    while path[-1] != u0:
        path.append(parent[path[-1]])
    path.reverse()
    if d % 2 == 0:
        centers = (path[d // 2],)
    else:
        centers = tuple(sorted((path[(d - 1) // 2], path[(d + 1) // 2])))
    center_set = set(centers)
    table: dict[int, dict[int, int]] = {}
    for c in centers:
        depths = _branch_depths(tree, c, center_set - {c})
        table[c] = {w: max(dep.values()) for w, dep in depths.items()}
    return CenterProfile(diameter=d, path=tuple(path), centers=centers, branch_table=table)


def _branch_depths(tree: Tree, c: int, blocked: set[int]) -> dict[int, dict[int, int]]:
    """Depth of every vertex in each branch at ``c``, skipping ``blocked`` neighbors.

    Returns {branch root w: {vertex: depth from c}}.
    """
    out: dict[int, dict[int, int]] = {}
    for w in tree.adjacency[c]:
        if w in blocked:
            continue
        depth = {w: 1}
        queue = deque([w])
        while queue:
            u = queue.popleft()
            for x in tree.adjacency[u]:
                if x != c and x not in depth:
                    depth[x] = depth[u] + 1
                    queue.append(x)
        out[w] = depth
    return out


@dataclass(frozen=True)
class SteinerWitness:
    """Steiner distance value plus the edges of the minimal spanning subtree."""

    value: int
    edges: tuple[tuple[int, int], ...]


def steiner_distance(tree: Tree, terminals: Iterable[int]) -> SteinerWitness:
    """Exact Steiner distance of a terminal set within the tree.

    Leaves that are not terminals are pruned repeatedly; the surviving
    subtree is the unique minimal subtree spanning the terminals, every leaf
    of which is a terminal.
    """
    members = as_vertex_set(terminals, tree.n)
    in_s = [False] * tree.n
    for v in members:
        in_s[v] = True
    deg = [len(tree.adjacency[v]) for v in range(tree.n)]
    alive = [True] * tree.n
    queue = deque(v for v in range(tree.n) if deg[v] == 1 and not in_s[v])
    while queue:
        v = queue.popleft()
        alive[v] = False
        for w in tree.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1 and not in_s[w]:
                    queue.append(w)
    edges = tuple(
        (u, v)
        for u in range(tree.n)
        if alive[u]
        for v in tree.adjacency[u]
        if u < v and alive[v]
    )
    return SteinerWitness(value=len(edges), edges=edges)


def leaf_branch_length(tree: Tree, terminals: Iterable[int], v: int) -> int:
    """Distance inside the witness subtree from leaf v to its nearest branching vertex.

    Defined for terminal sets of at least three tree leaves in a tree with at
    least three leaves; the witness subtree then has a vertex of degree >= 3.
    """
    leaves = set(tree.leaves())
    if len(leaves) < 3:
        raise PreconditionError(f"tree has {len(leaves)} leaves; at least 3 required")
    members = as_vertex_set(terminals, tree.n)
    if len(members) < 3:
        raise PreconditionError(f"terminal set has {len(members)} vertices; at least 3 required")
    for s in members:
        if s not in leaves:
            raise PreconditionError(f"terminal {s} is not a leaf of the tree")
    if v not in members:
        raise PreconditionError(f"vertex {v} is not a terminal")
    witness = steiner_distance(tree, members)
    deg: dict[int, int] = {}
    adj: dict[int, list[int]] = {}
    for a, b in witness.edges:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    dist = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        if deg[u] >= 3:
            return dist[u]
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    raise PreconditionError("witness subtree has no branching vertex")
