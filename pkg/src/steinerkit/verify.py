"""Corpus-wide verification suites, conjecture hunting, and reports.

Every suite checks one inequality or identity on every tree of a corpus and
every (k, k') pair in range.  Pairs outside a suite's hypotheses are
recorded as skipped, never silently dropped, so a passing report
distinguishes "checked" from "vacuous".  All comparisons are exact
(integers and Fractions); violations and equality instances are kept as
Verdict rows, everything else is only counted.

Suites:

- thm32: Sd_k <= k/(k-k') * Sd_{k-k'}           (k >= 3, k-k' >= 2)
- thm33: Sd_{k-k'} <= Sr_{k,k'}                 (k >= 3, k-k' >= 2)
- thm34: Sd_k <= k/(k-k') * Sr_{k,k'}           (k >= 3, k > k' >= 1)
- thm_k1: Sd_k <= k/(k-1) * Sr_{k,1}            (k >= 2)
- thm_k2: Sd_k <= k/(k-2) * Sr_{k,2} - 2/(k-2)  (k >= 3)
- thm_k3: Sd_k <= k/(k-3) * Sr_{k,3} - 6/(k-3)  (k >= 4)
- fastpath: closed-form Sr_{k,2} / Sr_{k,3} equals brute enumeration
- chain: Sr_{k,k'+1} <= Sr_{k,k'}
- lemma31: d(S) = d(S - {v}) + l_v(S) for leaf sets S, all v in S
- conjecture (used by hunt_conjecture):
  Sd_k <= k/(k-k') * Sr_{k,k'} - k'(k'-1)/(k-k')

Work is sharded by tree index and merged in index order, so reports are
byte-identical for any worker count.
"""

from __future__ import annotations

import csv
import json
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import combinations
from multiprocessing import Pool
from typing import Callable, Iterable, Optional, Union

from .corpus import canonical_code, enumerate_trees, graph6_encode, tree_from_graph6
from .errors import BadSpec, TooLarge, UnknownSuite
from .families import bound_value
from .params import (
    central_pair,
    central_triple,
    ecc_kk,
    sd_k,
    sr_k,
    sr_k2_fast,
    sr_k3_fast,
    sr_kk_brute,
)
from .tree import Tree, center_profile, leaf_branch_length, steiner_distance

TOOLKIT_VERSION = "0.1.0"

HUNT_MAX_ORDER = 16

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class Verdict:
    """One exact comparison on one (tree, k, k') instance."""

    suite: str
    graph6: str
    canonical: str
    n: int
    k: int
    kprime: Optional[int]
    lhs: Fraction
    rhs: Fraction
    holds: bool
    equality: bool
    witnesses: dict[str, tuple[int, ...]]


def make_verdict(
    suite: str,
    graph6: str,
    canonical: str,
    n: int,
    k: int,
    kprime: Optional[int],
    lhs: Rational,
    rhs: Rational,
    witnesses: dict[str, tuple[int, ...]],
) -> Verdict:
    lhs = Fraction(lhs)
    rhs = Fraction(rhs)
    return Verdict(
        suite=suite,
        graph6=graph6,
        canonical=canonical,
        n=n,
        k=k,
        kprime=kprime,
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs,
        equality=lhs == rhs,
        witnesses=witnesses,
    )


def verdict_dict(v: Verdict) -> dict:
    return {
        "suite": v.suite,
        "graph6": v.graph6,
        "canonical": v.canonical,
        "n": v.n,
        "k": v.k,
        "kprime": v.kprime,
        "lhs": str(v.lhs),
        "rhs": str(v.rhs),
        "holds": v.holds,
        "equality": v.equality,
        "witnesses": {name: list(ids) for name, ids in sorted(v.witnesses.items())},
    }


@dataclass
class Report:
    """Everything one suite run or hunt produced.

    ``runtime_seconds`` is informational and never serialized: emitted
    report files must be byte-identical across reruns and worker counts.
    """

    suite: str
    parameters: dict
    corpus: dict
    toolkit_version: str
    total_instances: int
    skipped: list[dict]
    violations: list[Verdict]
    equalities: list[Verdict]
    equality_counts: dict[str, int]
    exit_status: str
    runtime_seconds: Optional[float] = None


class _TreeCache:
    """Per-tree memo of the parameters the suites keep re-reading."""

    def __init__(self, tree: Tree, graph6: str):
        self.tree = tree
        self.n = tree.n
        self.graph6 = graph6
        self.canonical = canonical_code(tree)
        self.leaves = tree.leaves()
        self.profile = center_profile(tree)
        self._sd: dict[int, tuple[int, tuple[int, ...]]] = {}
        self._sr_kk: dict[tuple[int, int], tuple[int, tuple[int, ...]]] = {}

    def sd(self, k: int) -> tuple[int, tuple[int, ...]]:
        if k not in self._sd:
            self._sd[k] = sd_k(self.tree, k)
        return self._sd[k]

    def sr_kk(self, k: int, kprime: int) -> tuple[int, tuple[int, ...]]:
        key = (k, kprime)
        if key not in self._sr_kk:
            if kprime == 1:
                value, vertex = sr_k(self.tree, k)
                self._sr_kk[key] = (value, (vertex,))
            else:
                self._sr_kk[key] = sr_kk_brute(self.tree, k, kprime)
        return self._sr_kk[key]

    def realizer(self, k: int, kprime: int) -> tuple[int, ...]:
        """A k-set realizing the eccentricity of the radius arg-min seed."""
        _, seed = self.sr_kk(k, kprime)
        return ecc_kk(self.tree, seed, k)[1]


_CheckResult = Union[str, tuple[Fraction, Fraction, Callable[[], dict]]]


def _check_thm32(cache: _TreeCache, k: int, kp: int) -> _CheckResult:
    if k < 3:
        return "k below 3"
    if k - kp < 2:
        return "k - k' below 2"
    if k > cache.n:
        return "k exceeds n"
    sdk, sdk_wit = cache.sd(k)
    sdm, sdm_wit = cache.sd(k - kp)
    rhs = Fraction(k, k - kp) * sdm
    return Fraction(sdk), rhs, lambda: {"sd_k": sdk_wit, "sd_k_minus_kprime": sdm_wit}


def _check_thm33(cache: _TreeCache, k: int, kp: int) -> _CheckResult:
    if k < 3:
        return "k below 3"
    if k - kp < 2:
        return "k - k' below 2"
    if k > cache.n:
        return "k exceeds n"
    sdm, sdm_wit = cache.sd(k - kp)
    sr, seed = cache.sr_kk(k, kp)
    return Fraction(sdm), Fraction(sr), lambda: {
        "sd_k_minus_kprime": sdm_wit,
        "sr_argmin": seed,
    }


def _check_thm34(cache: _TreeCache, k: int, kp: int) -> _CheckResult:
    if k < 3:
        return "k below 3"
    if kp >= k:
        return "k' not below k"
    if k > cache.n:
        return "k exceeds n"
    sdk, sdk_wit = cache.sd(k)
    sr, seed = cache.sr_kk(k, kp)
    rhs = bound_value("thm34", k, kp, sr)
    return Fraction(sdk), rhs, lambda: {"sd_k": sdk_wit, "sr_argmin": seed}


def _check_fixed_bound(
    cache: _TreeCache, k: int, kp: int, name: str, k_min: int
) -> _CheckResult:
    if k < k_min:
        return f"k below {k_min}"
    if k > cache.n:
        return "k exceeds n"
    sdk, sdk_wit = cache.sd(k)
    sr, seed = cache.sr_kk(k, kp)
    rhs = bound_value(name, k, kp, sr)
    return Fraction(sdk), rhs, lambda: {"sd_k": sdk_wit, "sr_argmin": seed}


def _check_thm_k1(cache, k, kp):
    return _check_fixed_bound(cache, k, kp, "tree_k1", 2)


def _check_thm_k2(cache, k, kp):
    return _check_fixed_bound(cache, k, kp, "thm_k2", 3)


def _check_thm_k3(cache, k, kp):
    return _check_fixed_bound(cache, k, kp, "thm_k3", 4)


def _check_conjecture(cache: _TreeCache, k: int, kp: int) -> _CheckResult:
    if k < 3:
        return "k below 3"
    if kp >= k:
        return "k' not below k"
    if k > cache.n:
        return "k exceeds n"
    sdk, sdk_wit = cache.sd(k)
    sr, seed = cache.sr_kk(k, kp)
    rhs = bound_value("conjecture", k, kp, sr)

    def witnesses():
        return {
            "sd_k": sdk_wit,
            "sr_argmin": seed,
            "sr_realizer": cache.realizer(k, kp),
        }

    return Fraction(sdk), rhs, witnesses


def _check_fastpath(cache: _TreeCache, k: int, kp: int) -> _CheckResult:
    if kp == 2:
        if k < 3:
            return "k below 3"
    else:
        if k < 4:
            return "k below 4"
    if k > cache.n:
        return "k exceeds n"
    fast = sr_k2_fast(cache.tree, k) if kp == 2 else sr_k3_fast(cache.tree, k)
    brute, seed = cache.sr_kk(k, kp)

    def witnesses():
        out = {"brute_argmin": seed}
        if kp == 2 and cache.profile.diameter >= 1:
            out["central_seed"] = central_pair(cache.profile)
        if kp == 3 and cache.profile.diameter >= 2:
            out["central_seed"] = central_triple(cache.profile)
        return out

    return Fraction(fast), Fraction(brute), witnesses


def _check_chain(cache: _TreeCache, k: int, kp: int) -> _CheckResult:
    if kp + 1 > k:
        return "k' + 1 exceeds k"
    if k > cache.n:
        return "k exceeds n"
    hi, hi_seed = cache.sr_kk(k, kp + 1)
    lo, lo_seed = cache.sr_kk(k, kp)
    return Fraction(hi), Fraction(lo), lambda: {
        "argmin_kprime_plus_1": hi_seed,
        "argmin_kprime": lo_seed,
    }


def _check_lemma31(cache: _TreeCache, k: int, kp: Optional[int]) -> _CheckResult:
    if k < 3:
        return "k below 3"
    if k > cache.n:
        return "k exceeds n"
    if len(cache.leaves) < 3:
        return "fewer than 3 tree leaves"
    if len(cache.leaves) < k:
        return "fewer than k tree leaves"
    worst = 0
    worst_wit: dict[str, tuple[int, ...]] = {}
    for terminal_set in combinations(cache.leaves, k):
        base = steiner_distance(cache.tree, terminal_set).value
        for v in terminal_set:
            rest = tuple(u for u in terminal_set if u != v)
            sub = steiner_distance(cache.tree, rest).value
            lb = leaf_branch_length(cache.tree, terminal_set, v)
            gap = abs(base - sub - lb)
            if gap > worst:
                worst = gap
                worst_wit = {"set": terminal_set, "vertex": (v,)}
    wit = dict(worst_wit)
    return Fraction(worst), Fraction(0), lambda: wit


@dataclass(frozen=True)
class _SuiteDef:
    name: str
    kprime_mode: str  # "range" | "fixed" | "none"
    checker: Callable[..., _CheckResult]
    fixed: tuple[int, ...] = ()

    def pairs(self, k_range, kprime_range):
        for k in range(k_range[0], k_range[1] + 1):
            if self.kprime_mode == "range":
                for kp in range(kprime_range[0], kprime_range[1] + 1):
                    yield k, kp
            elif self.kprime_mode == "fixed":
                for kp in self.fixed:
                    yield k, kp
            else:
                yield k, None


SUITES: dict[str, _SuiteDef] = {
    s.name: s
    for s in (
        _SuiteDef("thm32", "range", _check_thm32),
        _SuiteDef("thm33", "range", _check_thm33),
        _SuiteDef("thm34", "range", _check_thm34),
        _SuiteDef("thm_k1", "fixed", _check_thm_k1, (1,)),
        _SuiteDef("thm_k2", "fixed", _check_thm_k2, (2,)),
        _SuiteDef("thm_k3", "fixed", _check_thm_k3, (3,)),
        _SuiteDef("fastpath", "fixed", _check_fastpath, (2, 3)),
        _SuiteDef("chain", "range", _check_chain),
        _SuiteDef("lemma31", "none", _check_lemma31),
        _SuiteDef("conjecture", "range", _check_conjecture),
    )
}

SUITE_NAMES = tuple(name for name in SUITES if name != "conjecture")


def _evaluate_tree(item, suite_name, k_range, kprime_range):
    index, g6 = item
    tree = tree_from_graph6(g6)
    cache = _TreeCache(tree, g6)
    suite = SUITES[suite_name]
    evaluated = 0
    skips: Counter = Counter()
    eq_counts: Counter = Counter()
    violations: list[Verdict] = []
    equalities: list[Verdict] = []
    for k, kp in suite.pairs(k_range, kprime_range):
        result = suite.checker(cache, k, kp)
        if isinstance(result, str):
            skips[(k, kp, result)] += 1
            continue
        lhs, rhs, witness_fn = result
        evaluated += 1
        holds = lhs <= rhs
        equality = lhs == rhs
        if equality:
            eq_counts[(k, kp)] += 1
        if not holds or equality:
            verdict = Verdict(
                suite=suite_name,
                graph6=g6,
                canonical=cache.canonical,
                n=cache.n,
                k=k,
                kprime=kp,
                lhs=lhs,
                rhs=rhs,
                holds=holds,
                equality=equality,
                witnesses=witness_fn(),
            )
            (equalities if holds else violations).append(verdict)
    return index, evaluated, skips, eq_counts, violations, equalities


def _check_range(name: str, rng) -> tuple[int, int]:
    try:
        lo, hi = int(rng[0]), int(rng[1])
    except (TypeError, ValueError, IndexError):
        raise BadSpec(f"{name} must be a (low, high) integer pair, got {rng!r}") from None
    if lo < 1 or hi < lo:
        raise BadSpec(f"{name} must satisfy 1 <= low <= high, got {lo}:{hi}")
    return lo, hi


def _pair_key(kp: Optional[int]) -> str:
    return "none" if kp is None else str(kp)


def _run(
    suite_name: str,
    g6_corpus: list[str],
    k_range,
    kprime_range,
    jobs: int,
    parameters: dict,
    corpus_desc: str,
) -> Report:
    start = time.perf_counter()
    worker = partial(
        _evaluate_tree,
        suite_name=suite_name,
        k_range=k_range,
        kprime_range=kprime_range,
    )
    items = list(enumerate(g6_corpus))
    if jobs > 1 and len(items) > 1:
        chunk = max(1, len(items) // (8 * jobs))
        with Pool(processes=jobs) as pool:
            results = list(pool.imap(worker, items, chunksize=chunk))
    else:
        results = [worker(item) for item in items]
    total = 0
    skips: Counter = Counter()
    eq_counts: Counter = Counter()
    violations: list[Verdict] = []
    equalities: list[Verdict] = []
    for _, evaluated, tree_skips, tree_eq, tree_viol, tree_eqs in results:
        total += evaluated
        skips.update(tree_skips)
        eq_counts.update(tree_eq)
        violations.extend(tree_viol)
        equalities.extend(tree_eqs)
    skipped = [
        {"k": k, "kprime": kp, "reason": reason, "count": count}
        for (k, kp, reason), count in sorted(
            skips.items(), key=lambda kv: (kv[0][0], kv[0][1] if kv[0][1] is not None else -1, kv[0][2])
        )
    ]
    equality_counts = {
        f"k={k},kprime={_pair_key(kp)}": count
        for (k, kp), count in sorted(
            eq_counts.items(), key=lambda kv: (kv[0][0], kv[0][1] if kv[0][1] is not None else -1)
        )
    }
    return Report(
        suite=suite_name,
        parameters=parameters,
        corpus={"description": corpus_desc, "size": len(g6_corpus), "seed": None},
        toolkit_version=TOOLKIT_VERSION,
        total_instances=total,
        skipped=skipped,
        violations=violations,
        equalities=equalities,
        equality_counts=equality_counts,
        exit_status="pass" if not violations else "violations",
        runtime_seconds=time.perf_counter() - start,
    )


def run_suite(
    suite: str,
    corpus: Iterable[Union[Tree, str]],
    k_range,
    kprime_range=None,
    *,
    jobs: int = 1,
    corpus_description: Optional[str] = None,
) -> Report:
    """Run one verification suite over a corpus of trees (or graph6 lines)."""
    if suite not in SUITES:
        raise UnknownSuite(f"unknown suite {suite!r}; known: {', '.join(sorted(SUITES))}")
    k_range = _check_range("k range", k_range)
    if kprime_range is None:
        kprime_range = (1, k_range[1])
    kprime_range = _check_range("k' range", kprime_range)
    g6_corpus = [graph6_encode(t) if isinstance(t, Tree) else str(t).strip() for t in corpus]
    parameters = {
        "k_range": list(k_range),
        "kprime_range": list(kprime_range),
    }
    desc = corpus_description if corpus_description is not None else f"{len(g6_corpus)} supplied trees"
    return _run(suite, g6_corpus, k_range, kprime_range, max(1, int(jobs)), parameters, desc)


def hunt_conjecture(n_max: int, k_range, kprime_range, *, jobs: int = 1) -> Report:
    """Exhaustively test the conjectured shifted bound on all trees up to n_max.

    Violations are research output: they are reported verbatim with full
    witnesses and the run continues.
    """
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 1:
        raise BadSpec(f"n_max must be a positive integer, got {n_max!r}")
    if n_max > HUNT_MAX_ORDER:
        raise TooLarge(f"n_max {n_max} exceeds the hunt guard {HUNT_MAX_ORDER}")
    k_range = _check_range("k range", k_range)
    kprime_range = _check_range("k' range", kprime_range)
    g6_corpus = [
        graph6_encode(tree) for n in range(3, n_max + 1) for tree in enumerate_trees(n)
    ]
    parameters = {
        "n_max": n_max,
        "k_range": list(k_range),
        "kprime_range": list(kprime_range),
    }
    desc = f"all non-isomorphic trees with 3 <= n <= {n_max}"
    return _run("conjecture", g6_corpus, k_range, kprime_range, max(1, int(jobs)), parameters, desc)


def report_dict(report: Report) -> dict:
    """JSON-ready dict with stable field order; runtime intentionally absent."""
    return {
        "suite": report.suite,
        "toolkit_version": report.toolkit_version,
        "parameters": report.parameters,
        "corpus": report.corpus,
        "total_instances": report.total_instances,
        "skipped": report.skipped,
        "violation_count": len(report.violations),
        "violations": [verdict_dict(v) for v in report.violations],
        "equality_count": len(report.equalities),
        "equality_counts": report.equality_counts,
        "equalities": [verdict_dict(v) for v in report.equalities],
        "exit_status": report.exit_status,
    }


def _witness_cell(witnesses: dict[str, tuple[int, ...]]) -> str:
    return ";".join(
        f"{name}=" + " ".join(str(i) for i in ids) for name, ids in sorted(witnesses.items())
    )


def emit_report(report: Report, fmt: str = "json", out=None) -> str:
    """Serialize a report to JSON or CSV; returns the text, and writes it to
    ``out`` (path or file object) when given."""
    if fmt == "json":
        text = json.dumps(report_dict(report), indent=2) + "\n"
    elif fmt == "csv":
        import io

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["kind", "suite", "graph6", "canonical", "n", "k", "kprime", "lhs", "rhs", "holds", "equality", "witnesses"]
        )
        for kind, verdicts in (("violation", report.violations), ("equality", report.equalities)):
            for v in verdicts:
                writer.writerow(
                    [
                        kind,
                        v.suite,
                        v.graph6,
                        v.canonical,
                        v.n,
                        v.k,
                        "" if v.kprime is None else v.kprime,
                        str(v.lhs),
                        str(v.rhs),
                        v.holds,
                        v.equality,
                        _witness_cell(v.witnesses),
                    ]
                )
        text = buf.getvalue()
    else:
        raise BadSpec(f"unknown report format {fmt!r}")
    if out is not None:
        if hasattr(out, "write"):
            out.write(text)
        else:
            with open(out, "w", encoding="ascii") as handle:
                handle.write(text)
    return text
