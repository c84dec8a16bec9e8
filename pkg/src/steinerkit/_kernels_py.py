"""Pure-Python kernel backend.

Same contract as the compiled backend in ``_kernels.pyx``:

- ``pack(n, adjacency)`` precomputes, for every edge, the vertex bitmask of
  the side below it (rooted at vertex 0).  The Steiner distance of a set S
  in a tree equals the number of edges with terminals strictly on both
  sides, so ``steiner_value`` is a pass over ``n - 1`` masks.
- ``greedy_extend`` grows a terminal set by repeatedly adding the vertex
  farthest from the current minimal subtree (ties toward the smallest id),
  maintaining the subtree incrementally.
- ``brute_ecc`` maximizes the Steiner value over all ways of adding
  ``take`` vertices outside the base set, keeping the lexicographically
  first maximizer.

Vertex masks are machine-word sized in the compiled backend, so both
backends cap the order at 64; every public guard in the package trips far
below that.
"""

from collections import deque
from itertools import combinations

BACKEND = "python"

MAXN = 64


class PackedTree:
    __slots__ = ("n", "adjacency", "edge_masks", "full")

    def __init__(self, n, adjacency, edge_masks, full):
        self.n = n
        self.adjacency = adjacency
        self.edge_masks = edge_masks
        self.full = full


def pack(n, adjacency):
    if n > MAXN:
        raise ValueError(f"kernel backends support n <= {MAXN}, got {n}")
    parent = [-1] * n
    parent[0] = 0
    order = [0]
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if parent[w] < 0:
                parent[w] = u
                order.append(w)
                queue.append(w)
    below = [1 << v for v in range(n)]
    for v in reversed(order[1:]):
        below[parent[v]] |= below[v]
    edge_masks = tuple(below[v] for v in order[1:])
    return PackedTree(n, tuple(tuple(a) for a in adjacency), edge_masks, (1 << n) - 1)


def steiner_value(packed, vertices):
    sm = 0
    for v in vertices:
        sm |= 1 << v
    count = 0
    for m in packed.edge_masks:
        if (sm & m) and (sm & (packed.full ^ m)):
            count += 1
    return count


def _initial_subtree(packed, in_s):
    """Prune non-terminal leaves; returns (membership bytearray, edge count)."""
    n = packed.n
    adjacency = packed.adjacency
    deg = [len(a) for a in adjacency]
    alive = bytearray([1]) * n
    queue = deque(v for v in range(n) if deg[v] == 1 and not in_s[v])
    count = n
    while queue:
        v = queue.popleft()
        alive[v] = 0
        count -= 1
        for w in adjacency[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1 and not in_s[w]:
                    queue.append(w)
    return alive, count - 1


def greedy_extend(packed, base, steps):
    n = packed.n
    adjacency = packed.adjacency
    in_s = bytearray(n)
    for v in base:
        in_s[v] = 1
    in_t, value = _initial_subtree(packed, in_s)
    added = []
    for _ in range(steps):
        dist = [-1] * n
        parent = [-1] * n
        queue = deque()
        for v in range(n):
            if in_t[v]:
                dist[v] = 0
                parent[v] = v
                queue.append(v)
        while queue:
            u = queue.popleft()
            for w in adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
        best = -1
        for v in range(n):
            if not in_s[v] and (best < 0 or dist[v] > dist[best]):
                best = v
        if best < 0:
            raise ValueError("no vertex left to add")
        in_s[best] = 1
        added.append(best)
        value += dist[best]
        w = best
        while not in_t[w]:
            in_t[w] = 1
            w = parent[w]
    return value, added


def brute_ecc(packed, base, take):
    full = packed.full
    masks = packed.edge_masks
    base_mask = 0
    for v in base:
        base_mask |= 1 << v
    rest = [v for v in range(packed.n) if not (base_mask >> v) & 1]
    if take > len(rest):
        raise ValueError(f"cannot add {take} vertices, only {len(rest)} available")
    best_value = -1
    best_added: tuple = ()
    for combo in combinations(rest, take):
        sm = base_mask
        for v in combo:
            sm |= 1 << v
        count = 0
        for m in masks:
            if (sm & m) and (sm & (full ^ m)):
                count += 1
        if count > best_value:
            best_value = count
            best_added = combo
    return best_value, list(best_added)
