"""Closed-form parameter formulas, extremal-family generators, and bound values.

Supported family kinds: complete graphs, paths, complete multipartite
graphs, stars, starlike trees (one branching vertex, equal legs), and the
two-ended pendant-path trees P_l(a,b;x) (a path on l vertices with a and b
pendant paths of length x attached to its ends).

Formulas return exact integers; bound values return exact Fractions so that
equality detection never meets floating point.  Generators use fixed
labelings (documented per kind) so output files are stable across runs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import BadK, BadSpec, UnsupportedKind
from .oracle import Graph
from .tree import Tree

KINDS = ("complete", "path", "multipartite", "star", "starlike", "p_l_abx")

BOUND_NAMES = (
    "thm34",
    "thm_k2",
    "thm_k3",
    "conjecture",
    "tree_k1",
    "general_hos",
    "general_reiswig",
)


@dataclass(frozen=True)
class FamilySpec:
    """One member of a named family; only the fields for its kind are set."""

    kind: str
    n: Optional[int] = None
    parts: Optional[tuple[int, ...]] = None
    m: Optional[int] = None
    l: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None
    x: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UnsupportedKind(f"unknown family kind {self.kind!r}")
        need = {
            "complete": ("n",),
            "path": ("n",),
            "multipartite": ("parts",),
            "star": ("m",),
            "starlike": ("m", "l"),
            "p_l_abx": ("l", "a", "b", "x"),
        }[self.kind]
        for field in ("n", "parts", "m", "l", "a", "b", "x"):
            value = getattr(self, field)
            if field in need:
                if value is None:
                    raise BadSpec(f"{self.kind} spec requires parameter {field}")
            elif value is not None:
                raise BadSpec(f"{self.kind} spec does not take parameter {field}")
        if self.kind == "multipartite":
            parts = self.parts
            if len(parts) < 2:
                raise BadSpec("multipartite spec requires at least 2 parts")
            if any(p < 1 for p in parts):
                raise BadSpec("multipartite part sizes must be >= 1")
            if tuple(sorted(parts)) != parts:
                raise BadSpec("multipartite parts must be sorted ascending")
        else:
            for field in need:
                if getattr(self, field) < 1:
                    raise BadSpec(f"{self.kind} parameter {field} must be >= 1")
        if self.kind == "starlike" and self.m < 3:
            raise BadSpec("starlike spec requires at least 3 legs")

    def order(self) -> int:
        """Number of vertices of the generated graph."""
        if self.kind in ("complete", "path"):
            return self.n
        if self.kind == "multipartite":
            return sum(self.parts)
        if self.kind == "star":
            return self.m + 1
        if self.kind == "starlike":
            return self.m * self.l + 1
        return self.l + (self.a + self.b) * self.x


def parse_spec(text: str) -> FamilySpec:
    """Parse the compact string form, e.g. "p2ab:l=2,a=2,b=2,x=3"."""
    if ":" not in text:
        raise BadSpec(f"spec must look like 'kind:key=value,...', got {text!r}")
    head, _, body = text.partition(":")
    head = head.strip()
    body = body.strip()
    if head == "multipartite":
        body_match = re.fullmatch(r"parts=(\d+(?:,\d+)*)", body)
        if not body_match:
            raise BadSpec(f"multipartite spec must look like 'multipartite:parts=2,3', got {text!r}")
        parts = tuple(int(p) for p in body_match.group(1).split(","))
        return FamilySpec(kind="multipartite", parts=parts)
    fields: dict[str, int] = {}
    for item in body.split(","):
        item = item.strip()
        if "=" not in item:
            raise BadSpec(f"malformed parameter {item!r} in spec {text!r}")
        key, _, value = item.partition("=")
        key = key.strip()
        if key in fields:
            raise BadSpec(f"duplicate parameter {key!r} in spec {text!r}")
        try:
            fields[key] = int(value)
        except ValueError:
            raise BadSpec(f"parameter {key!r} has non-integer value {value!r}") from None
    plab = re.fullmatch(r"p(\d+)ab", head)
    if plab:
        try:
            spec = FamilySpec(kind="p_l_abx", **fields)
        except TypeError:
            raise BadSpec(f"unexpected parameter in spec {text!r}") from None
        if spec.l != int(plab.group(1)):
            raise BadSpec(f"spec kind {head!r} disagrees with l={spec.l}")
        return spec
    if head not in ("complete", "path", "star", "starlike"):
        raise UnsupportedKind(f"unknown family kind {head!r}")
    try:
        return FamilySpec(kind=head, **fields)
    except TypeError:
        raise BadSpec(f"unexpected parameter in spec {text!r}") from None


def format_spec(spec: FamilySpec) -> str:
    if spec.kind == "complete":
        return f"complete:n={spec.n}"
    if spec.kind == "path":
        return f"path:n={spec.n}"
    if spec.kind == "multipartite":
        return "multipartite:parts=" + ",".join(str(p) for p in spec.parts)
    if spec.kind == "star":
        return f"star:m={spec.m}"
    if spec.kind == "starlike":
        return f"starlike:m={spec.m},l={spec.l}"
    return f"p{spec.l}ab:l={spec.l},a={spec.a},b={spec.b},x={spec.x}"


def generate(spec: FamilySpec) -> Union[Tree, Graph]:
    """Deterministic construction of the spec'd graph.

    Trees: star hub is 0 with leaves 1..m; starlike center is 0 with legs
    labeled outward one after another; P_l(a,b;x) spine is 0..l-1, then the
    a pendant paths at spine end 0 and the b paths at spine end l-1, each
    labeled outward.  Multipartite vertices are labeled part by part in the
    given ascending part order.
    """
    if spec.kind == "complete":
        return Graph(spec.n, [(u, v) for u in range(spec.n) for v in range(u + 1, spec.n)])
    if spec.kind == "path":
        return Tree(spec.n, [(i, i + 1) for i in range(spec.n - 1)])
    if spec.kind == "multipartite":
        n = spec.order()
        bounds = []
        start = 0
        for p in spec.parts:
            bounds.append(range(start, start + p))
            start += p
        edges = [
            (u, v)
            for i in range(len(bounds))
            for j in range(i + 1, len(bounds))
            for u in bounds[i]
            for v in bounds[j]
        ]
        return Graph(n, edges)
    if spec.kind == "star":
        return Tree(spec.m + 1, [(0, leaf) for leaf in range(1, spec.m + 1)])
    if spec.kind == "starlike":
        edges = []
        nxt = 1
        for _ in range(spec.m):
            prev = 0
            for _ in range(spec.l):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
        return Tree(spec.m * spec.l + 1, edges)
    # p_l_abx
    edges = [(i, i + 1) for i in range(spec.l - 1)]
    nxt = spec.l
    for end, count in ((0, spec.a), (spec.l - 1, spec.b)):
        for _ in range(count):
            prev = end
            for _ in range(spec.x):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
    return Tree(spec.order(), edges)


def _check_formula_k(k: int, n: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or not 2 <= k <= n:
        raise BadK(f"k must satisfy 2 <= k <= n={n}, got {k!r}")


def sd_k_formula(spec: FamilySpec, k: int) -> int:
    """Closed-form Steiner k-diameter for complete, path, multipartite kinds."""
    if spec.kind not in ("complete", "path", "multipartite"):
        raise UnsupportedKind(f"no Steiner k-diameter formula for kind {spec.kind!r}")
    n = spec.order()
    _check_formula_k(k, n)
    if spec.kind == "complete":
        return k - 1
    if spec.kind == "path":
        return n - 1
    if spec.parts[-1] >= k:
        return k
    return k - 1


def sr_kk_formula(spec: FamilySpec, k: int, kprime: int) -> int:
    """Closed-form (k,k')-radius for complete, path, multipartite kinds."""
    if spec.kind not in ("complete", "path", "multipartite"):
        raise UnsupportedKind(f"no (k,k')-radius formula for kind {spec.kind!r}")
    n = spec.order()
    _check_formula_k(k, n)
    if not isinstance(kprime, int) or isinstance(kprime, bool) or not 1 <= kprime <= k:
        raise BadK(f"k' must satisfy 1 <= k' <= k={k}, got {kprime!r}")
    if spec.kind == "complete":
        return k - 1
    if spec.kind == "path":
        gap = k - kprime
        if gap == 0:
            return k - 1
        if gap == 1:
            return (n + kprime - 1) // 2  # ceil((n + k' - 2) / 2)
        return n - 1
    if kprime >= 2:
        return k - 1
    return k if spec.parts[0] >= k else k - 1


def bound_value(name: str, k: int, kprime: Optional[int], sr: int) -> Fraction:
    """Exact right-hand side of a named upper bound, given the radius value.

    Names: thm34 -> k/(k-k')*sr; thm_k2 -> k/(k-2)*sr - 2/(k-2);
    thm_k3 -> k/(k-3)*sr - 6/(k-3); conjecture -> k/(k-k')*sr -
    k'(k'-1)/(k-k'); tree_k1 -> k/(k-1)*sr; general_hos ->
    2(k+1)/(2k-1)*sr; general_reiswig -> (k+3)/(k+1)*sr.
    """
    if name not in BOUND_NAMES:
        raise UnsupportedKind(f"unknown bound name {name!r}")
    value = Fraction(sr)
    if name == "thm34":
        if kprime is None or not 1 <= kprime < k or k < 3:
            raise BadK(f"thm34 requires k >= 3 and 1 <= k' < k, got k={k}, k'={kprime}")
        return Fraction(k, k - kprime) * value
    if name == "thm_k2":
        if k < 3 or (kprime is not None and kprime != 2):
            raise BadK(f"thm_k2 requires k >= 3 and k'=2, got k={k}, k'={kprime}")
        return Fraction(k, k - 2) * value - Fraction(2, k - 2)
    if name == "thm_k3":
        if k < 4 or (kprime is not None and kprime != 3):
            raise BadK(f"thm_k3 requires k >= 4 and k'=3, got k={k}, k'={kprime}")
        return Fraction(k, k - 3) * value - Fraction(6, k - 3)
    if name == "conjecture":
        if kprime is None or not 1 <= kprime < k or k < 3:
            raise BadK(f"conjecture requires k >= 3 and 1 <= k' < k, got k={k}, k'={kprime}")
        return Fraction(k, k - kprime) * value - Fraction(kprime * (kprime - 1), k - kprime)
    if name == "tree_k1":
        if k < 2 or (kprime is not None and kprime != 1):
            raise BadK(f"tree_k1 requires k >= 2 and k'=1, got k={k}, k'={kprime}")
        return Fraction(k, k - 1) * value
    if name == "general_hos":
        if k < 2 or (kprime is not None and kprime != 1):
            raise BadK(f"general_hos requires k >= 2 and k'=1, got k={k}, k'={kprime}")
        return Fraction(2 * (k + 1), 2 * k - 1) * value
    if k < 5 or (kprime is not None and kprime != 1):
        raise BadK(f"general_reiswig requires k >= 5 and k'=1, got k={k}, k'={kprime}")
    return Fraction(k + 3, k + 1) * value
