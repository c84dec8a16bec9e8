"""Tree corpora: exhaustive enumeration, canonical codes, graph6 interchange.

Free trees are generated by successor iteration over canonical rooted level
sequences, filtered to one representative per isomorphism class by keeping
a rooted tree only when it is the canonical rooting of its own free tree
(rooted at a centroid, subtree sequences in decreasing lexicographic
order).  The independent Pruefer-relabeling dedup used to validate the
counts lives in the test suite, not here.

graph6 follows the standard layout: size header (one char for n <= 62,
'~' + 3 chars up to 2^18 - 1), then the upper-triangle adjacency bits in
column-major order, 6 bits per character, each offset by 63.  Decoding is
strict: bad characters, truncation, trailing characters, and nonzero
padding bits are all rejected with the byte offset, which keeps
encode(decode(x)) == x an identity on accepted lines.
"""

from __future__ import annotations

from typing import Iterator, Union

from .errors import BadSpec, MalformedGraph6, TooLarge
from .oracle import Graph
from .tree import Tree

ENUMERATION_MAX_ORDER = 16


def _rooted_level_sequences(n: int) -> Iterator[list[int]]:
    """All canonical level sequences of rooted trees on n vertices.

    Starts at the path (1,2,...,n) and applies the classic successor rule
    until the star (1,2,2,...,2); sequences appear in decreasing
    lexicographic order and each is the largest sequence of its rooted
    isomorphism class.
    """
    levels = list(range(1, n + 1))
    while True:
        yield levels
        p = -1
        for i in range(n - 1, -1, -1):
            if levels[i] > 2:
                p = i
                break
        if p < 0:
            return
        q = -1
        for i in range(p - 1, -1, -1):
            if levels[i] == levels[p] - 1:
                q = i
                break
        span = p - q
        nxt = levels[:p]
        while len(nxt) < n:
            nxt.append(nxt[len(nxt) - span])
        levels = nxt


def _sequence_edges(levels: list[int]) -> list[tuple[int, int]]:
    """Edges of the rooted tree whose preorder level sequence is given;
    vertex ids are preorder positions."""
    last_at_level = {levels[0]: 0}
    edges = []
    for i in range(1, len(levels)):
        lv = levels[i]
        edges.append((last_at_level[lv - 1], i))
        last_at_level[lv] = i
    return edges


def _adjacency(n: int, edges: list[tuple[int, int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _centroids(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n == 1:
        return [0]
    parent = [-1] * n
    order = [0]
    parent[0] = 0
    for u in order:
        for w in adj[u]:
            if parent[w] < 0:
                parent[w] = u
                order.append(w)
    size = [1] * n
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    best = n + 1
    out: list[int] = []
    for v in range(n):
        heaviest = 0 if v == 0 else n - size[v]
        for w in adj[v]:
            if parent[w] == v:
                heaviest = max(heaviest, size[w])
        if heaviest < best:
            best = heaviest
            out = [v]
        elif heaviest == best:
            out.append(v)
    return out


def _canonical_rooted_sequence(adj: list[list[int]], root: int) -> tuple[int, ...]:
    """Level sequence of the rooted tree with subtrees sorted in decreasing
    lexicographic order (the canonical form the generator emits)."""

    def rec(v: int, parent: int, depth: int) -> list[int]:
        subs = [rec(w, v, depth + 1) for w in adj[v] if w != parent]
        subs.sort(reverse=True)
        out = [depth]
        for s in subs:
            out.extend(s)
        return out

    return tuple(rec(root, -1, 1))


def enumerate_trees(n: int) -> Iterator[Tree]:
    """All non-isomorphic free trees of order exactly n, one per class.

    Deterministic order; vertex ids are preorder positions of the canonical
    rooted level sequence.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise BadSpec(f"order must be a positive integer, got {n!r}")
    if n > ENUMERATION_MAX_ORDER:
        raise TooLarge(f"order {n} exceeds the enumeration guard {ENUMERATION_MAX_ORDER}")
    if n == 1:
        yield Tree(1, [])
        return
    for levels in _rooted_level_sequences(n):
        edges = _sequence_edges(levels)
        adj = _adjacency(n, edges)
        canonical = max(_canonical_rooted_sequence(adj, c) for c in _centroids(adj))
        if tuple(levels) == canonical:
            yield Tree(n, edges)


def canonical_code(tree: Tree) -> str:
    """Isomorphism-invariant code: nested parentheses rooted at the
    centroid, children sorted; bicentroidal trees take the smaller of the
    two rootings."""
    adj = [list(a) for a in tree.adjacency]

    def code(v: int, parent: int) -> str:
        return "(" + "".join(sorted(code(w, v) for w in adj[v] if w != parent)) + ")"

    return min(code(c, -1) for c in _centroids(adj))


_PREFIX = ">>graph6<<"


def _decode_size(s: str, origin: int) -> tuple[int, int]:
    """Parse the graph6 size header; returns (n, chars consumed)."""
    c = ord(s[0])
    if c < 63 or c > 126:
        raise MalformedGraph6(f"invalid character {s[0]!r}", origin)
    if c != 126:
        return c - 63, 1
    if len(s) < 4:
        raise MalformedGraph6("truncated size header", origin + len(s))
    if s[1] == "~":
        raise MalformedGraph6("orders >= 2^18 are not supported", origin + 1)
    n = 0
    for i in range(1, 4):
        ci = ord(s[i])
        if ci < 63 or ci > 126:
            raise MalformedGraph6(f"invalid character {s[i]!r}", origin + i)
        n = (n << 6) | (ci - 63)
    return n, 4


def _decode_raw(text: str) -> tuple[int, list[tuple[int, int]]]:
    line = text.rstrip("\r\n")
    origin = 0
    if line.startswith(_PREFIX):
        line = line[len(_PREFIX):]
        origin = len(_PREFIX)
    if not line:
        raise MalformedGraph6("empty line", origin)
    n, used = _decode_size(line, origin)
    body = line[used:]
    origin += used
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(body) < nchars:
        raise MalformedGraph6(
            f"expected {nchars} adjacency characters, got {len(body)}", origin + len(body)
        )
    if len(body) > nchars:
        raise MalformedGraph6("trailing characters after adjacency bits", origin + nchars)
    edges = []
    bit = 0
    for idx, ch in enumerate(body):
        c = ord(ch)
        if c < 63 or c > 126:
            raise MalformedGraph6(f"invalid character {ch!r}", origin + idx)
        value = c - 63
        for shift in range(5, -1, -1):
            if bit >= nbits:
                if (value >> shift) & 1:
                    raise MalformedGraph6("nonzero padding bits", origin + idx)
                continue
            if (value >> shift) & 1:
                edges.append(_bit_to_edge(bit))
            bit += 1
    return n, edges


def _bit_to_edge(bit: int) -> tuple[int, int]:
    # upper triangle in column-major order: column v holds bits for rows 0..v-1
    v = 1
    while v * (v - 1) // 2 + v <= bit:
        v += 1
    u = bit - v * (v - 1) // 2
    return u, v


def graph6_decode(text: str) -> Graph:
    """One graph6 line to a validated Graph."""
    n, edges = _decode_raw(text)
    return Graph(n, edges)


def tree_from_graph6(text: str) -> Tree:
    """One graph6 line to a validated Tree."""
    n, edges = _decode_raw(text)
    return Tree(n, edges)


def graph6_encode(graph: Union[Tree, Graph]) -> str:
    """Standard graph6 line (no trailing newline) for a Tree or Graph."""
    n = graph.n
    if n > 262143:
        raise TooLarge(f"order {n} exceeds the graph6 encoder limit")
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    nbits = n * (n - 1) // 2
    bits = bytearray((nbits + 5) // 6)
    adjacency = graph.adjacency
    bit = 0
    for v in range(1, n):
        row = set(adjacency[v])
        for u in range(v):
            if u in row:
                bits[bit // 6] |= 1 << (5 - bit % 6)
            bit += 1
    return head + "".join(chr(b + 63) for b in bits)
