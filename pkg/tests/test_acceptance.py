"""Acceptance gate: nine corpus-wide criteria, one recorded line each.

Each test computes its criterion exhaustively at the stated scale and
records a PASS/FAIL line that conftest prints in the terminal summary.
"""

import json
import time
from fractions import Fraction
from itertools import combinations

from conftest import prufer_class_codes, tree_oracle_code, trees_up_to
from steinerkit import (
    FamilySpec,
    Graph,
    generate,
    graph6_encode,
    kernels,
    parse_spec,
    sd_k,
    sd_k_formula,
    sr_k2_fast,
    sr_k3_fast,
    sr_kk_brute,
    sr_kk_formula,
    steiner_distance,
    tree_from_graph6,
)
from steinerkit.cli import main as cli_main
from steinerkit.oracle import brute_sd_k, brute_sr_kk, dw_steiner
from steinerkit.verify import emit_report, run_suite

RESULTS = []


def _record(num, label, ok, detail=""):
    RESULTS.append((num, label, ok, detail))
    assert ok, f"criterion {num} ({label}): {detail}"


def test_criterion_1_oracle_equivalence():
    start = time.perf_counter()
    instances = mismatches = 0
    for tree in trees_up_to(9):
        graph = Graph(tree.n, tree.edges())
        for size in range(1, min(tree.n, 4) + 1):
            for s in combinations(range(tree.n), size):
                instances += 1
                if steiner_distance(tree, s).value != dw_steiner(graph, s):
                    mismatches += 1
    elapsed = time.perf_counter() - start
    _record(
        1,
        "oracle equivalence",
        mismatches == 0 and elapsed < 120.0,
        f"{instances} instances, {mismatches} mismatches, {elapsed:.1f}s",
    )


def test_criterion_2_greedy_correctness():
    instances = mismatches = 0
    for tree in trees_up_to(10, lo=2):
        packed = kernels.pack(tree.n, tree.adjacency)
        for k in range(2, min(tree.n, 6) + 1):
            instances += 1
            greedy = sd_k(tree, k)[0]
            brute = kernels.brute_ecc(packed, (), k)[0]
            if greedy != brute:
                mismatches += 1
    _record(
        2,
        "greedy sd_k equals brute force",
        mismatches == 0,
        f"{instances} instances, {mismatches} mismatches",
    )


def test_criterion_3_fast_paths():
    instances = mismatches = 0
    for tree in trees_up_to(10, lo=3):
        for k in range(3, min(tree.n, 6) + 1):
            instances += 1
            if sr_k2_fast(tree, k) != sr_kk_brute(tree, k, 2)[0]:
                mismatches += 1
        if tree.n < 4:
            continue
        for k in range(4, min(tree.n, 6) + 1):
            instances += 1
            if sr_k3_fast(tree, k) != sr_kk_brute(tree, k, 3)[0]:
                mismatches += 1
    _record(
        3,
        "sr_k2/sr_k3 fast paths equal brute force",
        mismatches == 0,
        f"{instances} instances, {mismatches} mismatches",
    )


def test_criterion_4_theorem_suites():
    corpus = [graph6_encode(t) for t in trees_up_to(10, lo=2)]
    suites = ("thm32", "thm33", "thm34", "thm_k1", "thm_k2", "thm_k3", "chain", "lemma31")
    failures = []
    total = 0
    for name in suites:
        rep = run_suite(name, corpus, (2, 6), (1, 6), jobs=4)
        total += rep.total_instances
        if rep.exit_status != "pass":
            failures.append(f"{name}:{len(rep.violations)}")
    _record(
        4,
        "theorem suites corpus-wide",
        not failures,
        f"{len(suites)} suites, {total} instances" + (f", failures {failures}" if failures else ""),
    )


def test_criterion_5_equality_reproduction():
    cases = [
        ("thm_k1", "star:m=5", 3, None, Fraction(3)),
        ("thm32", "starlike:m=3,l=2", 3, (1, 1), Fraction(6)),
        ("thm_k2", "p2ab:l=2,a=2,b=2,x=3", 4, None, Fraction(13)),
        ("thm_k3", "p3ab:l=3,a=2,b=2,x=2", 4, None, Fraction(10)),
    ]
    bad = []
    for suite, spec, k, kp_range, lhs in cases:
        tree = generate(parse_spec(spec))
        rep = run_suite(suite, [tree], (k, k), kp_range)
        hit = any(v.equality and v.lhs == lhs and v.k == k for v in rep.equalities)
        if not hit or rep.exit_status != "pass":
            bad.append(f"{suite}@{spec}")
    _record(
        5,
        "equality flags on the four named families",
        not bad,
        "4 equalities certified" if not bad else f"missing {bad}",
    )


def _multipartite_parts(total_max):
    out = []

    def go(prefix, remaining, minimum):
        if len(prefix) >= 2:
            out.append(tuple(prefix))
        for part in range(minimum, remaining + 1):
            go(prefix + [part], remaining - part, part)

    for total in range(2, total_max + 1):
        go([], total, 1)
    return sorted(set(p for p in out if sum(p) >= 2))


def test_criterion_6_formula_oracle_agreement():
    instances = mismatches = 0

    def check(spec, graph):
        nonlocal instances, mismatches
        n = graph.n
        for k in range(2, n + 1):
            instances += 1
            if sd_k_formula(spec, k) != brute_sd_k(graph, k):
                mismatches += 1
            for kp in range(1, k + 1):
                instances += 1
                if sr_kk_formula(spec, k, kp) != brute_sr_kk(graph, k, kp):
                    mismatches += 1

    for n in range(2, 8):
        spec = FamilySpec(kind="complete", n=n)
        check(spec, generate(spec))
    for n in range(2, 11):
        spec = FamilySpec(kind="path", n=n)
        tree = generate(spec)
        check(spec, Graph(tree.n, tree.edges()))
    for parts in _multipartite_parts(8):
        spec = FamilySpec(kind="multipartite", parts=parts)
        check(spec, generate(spec))
    _record(
        6,
        "closed forms match the graph oracle",
        mismatches == 0,
        f"{instances} instances, {mismatches} mismatches",
    )


def test_criterion_7_conjecture_hunt(tmp_path):
    out = tmp_path / "hunt.json"
    start = time.perf_counter()
    code = cli_main(
        [
            "hunt",
            "--n-max",
            "11",
            "--k",
            "3:6",
            "--kprime",
            "1:5",
            "--jobs",
            "8",
            "--out",
            str(out),
        ]
    )
    elapsed = time.perf_counter() - start
    data = json.loads(out.read_text())
    proved_violations = [
        v for v in data["violations"] if v["kprime"] is not None and v["kprime"] <= 3
    ]
    open_findings = [
        v for v in data["violations"] if v["kprime"] is not None and v["kprime"] >= 4
    ]
    ok = not proved_violations and data["total_instances"] > 0
    if open_findings:
        ok = ok and code == 1 and all(v["witnesses"] for v in open_findings)
    else:
        ok = ok and code == 0
    _record(
        7,
        "conjecture hunt n<=11",
        ok,
        f"{data['total_instances']} instances, {len(proved_violations)} proved-case violations, "
        f"{len(open_findings)} open-case findings, {elapsed:.1f}s at 8 workers",
    )


def test_criterion_8_corpus_integrity():
    bad = []
    for n in range(1, 10):
        ours = [tree_oracle_code(t) for t in trees_up_to(n, lo=n)]
        oracle_codes, labeled = prufer_class_codes(n, jobs=8 if n >= 8 else 1)
        if len(ours) != len(oracle_codes) or set(ours) != oracle_codes:
            bad.append(f"n={n}: {len(ours)} vs {len(oracle_codes)}")
    round_trip_bad = 0
    checked = 0
    for t in trees_up_to(10):
        checked += 1
        back = tree_from_graph6(graph6_encode(t))
        if back.n != t.n or back.edges() != t.edges():
            round_trip_bad += 1
    _record(
        8,
        "enumeration matches Prüfer-dedup oracle; graph6 round-trip",
        not bad and round_trip_bad == 0,
        f"classes agree for n<=9, {checked} round-trips"
        + (f", failures {bad}" if bad else ""),
    )


def test_criterion_9_determinism(tmp_path):
    corpus = [graph6_encode(t) for t in trees_up_to(8, lo=3)]
    mismatch = []
    for suite in ("thm34", "chain", "lemma31", "fastpath"):
        texts = set()
        for jobs in (1, 2, 4):
            rep = run_suite(suite, corpus, (2, 6), jobs=jobs)
            texts.add(emit_report(rep, "json") + emit_report(rep, "csv"))
        if len(texts) != 1:
            mismatch.append(suite)
    files = []
    for jobs in ("1", "4"):
        out = tmp_path / f"hunt{jobs}.json"
        cli_main(["hunt", "--n-max", "8", "--k", "3:5", "--kprime", "1:4", "--jobs", jobs, "--out", str(out)])
        files.append(out.read_bytes())
    if files[0] != files[1]:
        mismatch.append("hunt-cli")
    _record(
        9,
        "byte-identical reports across --jobs",
        not mismatch,
        "4 suites + CLI hunt compared" + (f", mismatches {mismatch}" if mismatch else ""),
    )
