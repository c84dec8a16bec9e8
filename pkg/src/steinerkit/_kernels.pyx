# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernel backend.

Mirrors ``_kernels_py`` exactly: per-edge side bitmasks for O(n) Steiner
evaluation, greedy farthest-vertex growth with smallest-id tie-breaking,
and lexicographic brute-force maximization.  Results must be identical to
the pure backend on every input; the test suite enforces this.
"""

import numpy as np

from libc.stdint cimport uint64_t, int32_t

BACKEND = "c"

cdef enum:
    MAXN = 64


cdef class PackedTree:
    cdef public int n
    cdef int m
    cdef int32_t[::1] off
    cdef int32_t[::1] nbr
    cdef uint64_t[::1] emask
    cdef public uint64_t full


def pack(n, adjacency):
    if n > MAXN:
        raise ValueError(f"kernel backends support n <= {MAXN}, got {n}")
    cdef PackedTree p = PackedTree()
    cdef int i, u, w, deg_total = 0
    p.n = n
    off = np.zeros(n + 1, dtype=np.int32)
    for u in range(n):
        deg_total += len(adjacency[u])
        off[u + 1] = deg_total
    nbr = np.zeros(max(deg_total, 1), dtype=np.int32)
    i = 0
    for u in range(n):
        for w in adjacency[u]:
            nbr[i] = w
            i += 1
    p.m = n - 1
    p.off = off
    p.nbr = nbr
    p.full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF

    cdef int32_t parent[MAXN]
    cdef int32_t order[MAXN]
    cdef int head = 0, tail = 0, k
    for u in range(n):
        parent[u] = -1
    parent[0] = 0
    order[tail] = 0
    tail += 1
    while head < tail:
        u = order[head]
        head += 1
        for k in range(p.off[u], p.off[u + 1]):
            w = p.nbr[k]
            if parent[w] < 0:
                parent[w] = u
                order[tail] = w
                tail += 1
    below = np.zeros(n, dtype=np.uint64)
    cdef uint64_t[::1] below_v = below
    for u in range(n):
        below_v[u] = <uint64_t>1 << u
    for i in range(n - 1, 0, -1):
        u = order[i]
        below_v[parent[u]] |= below_v[u]
    emask = np.zeros(max(n - 1, 1), dtype=np.uint64)
    cdef uint64_t[::1] emask_v = emask
    for i in range(1, n):
        emask_v[i - 1] = below_v[order[i]]
    p.emask = emask
    return p


cdef inline int _count_cut_edges(PackedTree p, uint64_t sm) nogil:
    cdef int i, count = 0
    cdef uint64_t m
    for i in range(p.m):
        m = p.emask[i]
        if (sm & m) != 0 and (sm & (p.full ^ m)) != 0:
            count += 1
    return count


def steiner_value(PackedTree p, vertices):
    cdef uint64_t sm = 0
    for v in vertices:
        sm |= <uint64_t>1 << <int>v
    return _count_cut_edges(p, sm)


cdef int _initial_subtree(PackedTree p, char* in_s, char* in_t) nogil:
    cdef int deg[MAXN]
    cdef int queue[MAXN]
    cdef int head = 0, tail = 0
    cdef int v, w, k, count = p.n
    for v in range(p.n):
        deg[v] = p.off[v + 1] - p.off[v]
        in_t[v] = 1
    for v in range(p.n):
        if deg[v] == 1 and not in_s[v]:
            queue[tail] = v
            tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        in_t[v] = 0
        count -= 1
        for k in range(p.off[v], p.off[v + 1]):
            w = p.nbr[k]
            if in_t[w]:
                deg[w] -= 1
                if deg[w] == 1 and not in_s[w]:
                    queue[tail] = w
                    tail += 1
    return count - 1


def greedy_extend(PackedTree p, base, steps):
    cdef char in_s[MAXN]
    cdef char in_t[MAXN]
    cdef int dist[MAXN]
    cdef int parent[MAXN]
    cdef int queue[MAXN]
    cdef int n = p.n
    cdef int head, tail, step, v, w, k, best, value
    cdef int nsteps = steps
    for v in range(n):
        in_s[v] = 0
    for v in base:
        in_s[v] = 1
    value = _initial_subtree(p, in_s, in_t)
    added = []
    for step in range(nsteps):
        head = 0
        tail = 0
        for v in range(n):
            if in_t[v]:
                dist[v] = 0
                parent[v] = v
                queue[tail] = v
                tail += 1
            else:
                dist[v] = -1
                parent[v] = -1
        while head < tail:
            v = queue[head]
            head += 1
            for k in range(p.off[v], p.off[v + 1]):
                w = p.nbr[k]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue[tail] = w
                    tail += 1
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


def brute_ecc(PackedTree p, base, take):
    cdef uint64_t base_mask = 0, sm, best_mask = 0
    cdef int rest[MAXN]
    cdef int idx[MAXN]
    cdef int n = p.n
    cdef int t = take
    cdef int nrest = 0, v, i, count, best_value = -1
    cdef bint more
    for v in base:
        base_mask |= <uint64_t>1 << v
    for v in range(n):
        if not (base_mask >> v) & 1:
            rest[nrest] = v
            nrest += 1
    if t > nrest:
        raise ValueError(f"cannot add {take} vertices, only {nrest} available")
    best_added = []
    if t == 0:
        return _count_cut_edges(p, base_mask), []
    for i in range(t):
        idx[i] = i
    while True:
        sm = base_mask
        for i in range(t):
            sm |= <uint64_t>1 << rest[idx[i]]
        count = _count_cut_edges(p, sm)
        if count > best_value:
            best_value = count
            best_added = [rest[idx[i]] for i in range(t)]
        # next lexicographic combination of indices
        more = False
        for i in range(t - 1, -1, -1):
            if idx[i] != i + nrest - t:
                idx[i] += 1
                for k in range(i + 1, t):
                    idx[k] = idx[k - 1] + 1
                more = True
                break
        if not more:
            break
    return best_value, best_added
