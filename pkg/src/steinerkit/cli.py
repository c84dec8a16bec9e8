"""Command-line interface.

Subcommands: compute, enumerate, family, verify, hunt, formula, oracle.
Exit codes: 0 success or suite passed; 1 violation or counterexample found
(the report is still written); 2 usage or input error; 3 resource guard
tripped.  All numeric output is integers or "p/q" rationals; runtimes go to
stderr only, so output files are byte-stable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .corpus import enumerate_trees, graph6_decode, graph6_encode, tree_from_graph6
from .errors import BadK, BadSpec, SteinerKitError, TooLarge
from .families import generate, parse_spec, sd_k_formula, sr_kk_formula
from .oracle import dw_steiner
from .params import param_record
from .verify import SUITE_NAMES, emit_report, hunt_conjecture, run_suite


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ":" in text:
            lo_text, _, hi_text = text.partition(":")
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected K or K1:K2, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"range must satisfy 1 <= low <= high, got {text!r}")
    return lo, hi


def _parse_vertex_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}") from None


def _read_graph6_lines(path: str) -> list[str]:
    with open(path, "r", encoding="ascii") as handle:
        return [line.rstrip("\r\n") for line in handle if line.strip()]


def _resolve_jobs(value: Optional[int]) -> int:
    if value is not None:
        return max(1, value)
    env = os.environ.get("STEINER_KIT_JOBS", "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise BadSpec(f"STEINER_KIT_JOBS must be an integer, got {env!r}") from None
    return 1


def _record_dict(g6: str, record) -> dict:
    return {
        "graph6": g6,
        "n": record.n,
        "k": record.k,
        "kprime": record.kprime,
        "sd_k": record.sd_k,
        "sr_k": record.sr_k,
        "sr_kk": record.sr_kk,
        "diam": record.diam,
        "a_size": record.a_size,
        "sr_kk_method": record.sr_kk_method,
        "witnesses": {name: list(ids) for name, ids in sorted(record.witnesses.items())},
    }


def _cmd_compute(args) -> int:
    records = []
    for line in _read_graph6_lines(args.infile):
        tree = tree_from_graph6(line)
        g6 = graph6_encode(tree)
        if args.all:
            for k in range(2, min(args.k, tree.n) + 1):
                for kprime in range(1, k + 1):
                    records.append(_record_dict(g6, param_record(tree, k, kprime)))
        else:
            kprime = 1 if args.kprime is None else args.kprime
            if kprime > args.k:
                raise BadK(f"k'={kprime} exceeds k={args.k}")
            records.append(_record_dict(g6, param_record(tree, args.k, kprime)))
    with open(args.out, "w", encoding="ascii") as handle:
        json.dump(records, handle, indent=2)
        handle.write("\n")
    return 0


def _cmd_enumerate(args) -> int:
    with open(args.out, "w", encoding="ascii") as handle:
        for tree in enumerate_trees(args.n):
            handle.write(graph6_encode(tree) + "\n")
    return 0


def _cmd_family(args) -> int:
    graph = generate(parse_spec(args.spec))
    with open(args.out, "w", encoding="ascii") as handle:
        handle.write(graph6_encode(graph) + "\n")
    return 0


def _emit(report, out: str) -> None:
    fmt = "csv" if out.endswith(".csv") else "json"
    emit_report(report, fmt, out)


def _report_exit(report) -> int:
    print(
        f"{report.suite}: {report.total_instances} instances, "
        f"{len(report.violations)} violations, {len(report.equalities)} equalities "
        f"({report.runtime_seconds:.2f}s)",
        file=sys.stderr,
    )
    return 0 if report.exit_status == "pass" else 1


def _cmd_verify(args) -> int:
    if args.n_max < 1:
        raise BadSpec(f"--n-max must be >= 1, got {args.n_max}")
    corpus = [tree for n in range(1, args.n_max + 1) for tree in enumerate_trees(n)]
    report = run_suite(
        args.suite,
        corpus,
        args.k,
        args.kprime,
        jobs=_resolve_jobs(args.jobs),
        corpus_description=f"all non-isomorphic trees with 1 <= n <= {args.n_max}",
    )
    report.parameters["n_max"] = args.n_max
    _emit(report, args.out)
    return _report_exit(report)


def _cmd_hunt(args) -> int:
    kprime = args.kprime if args.kprime is not None else (1, max(1, args.k[1] - 1))
    report = hunt_conjecture(args.n_max, args.k, kprime, jobs=_resolve_jobs(args.jobs))
    _emit(report, args.out)
    return _report_exit(report)


def _cmd_formula(args) -> int:
    spec = parse_spec(args.spec)
    if args.kprime is None:
        print(sd_k_formula(spec, args.k))
    else:
        print(sr_kk_formula(spec, args.k, args.kprime))
    return 0


def _cmd_oracle(args) -> int:
    for line in _read_graph6_lines(args.infile):
        graph = graph6_decode(line)
        print(dw_steiner(graph, args.set))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steinerkit",
        description="Exact Steiner distance parameters of trees: compute, verify, hunt.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="Steiner parameters for each input tree")
    p.add_argument("--in", dest="infile", required=True, help="graph6 input file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kprime", type=int, default=None)
    p.add_argument("--all", action="store_true", help="sweep all legal (k,k') up to --k")
    p.add_argument("--out", required=True, help="JSON output file")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("enumerate", help="all non-isomorphic trees of one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True, help="graph6 output file")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("family", help="generate one named family member")
    p.add_argument("--spec", required=True, help='e.g. "p2ab:l=2,a=2,b=2,x=3"')
    p.add_argument("--out", required=True, help="graph6 output file")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("verify", help="run one verification suite over a tree corpus")
    p.add_argument("--suite", required=True, choices=SUITE_NAMES)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k", type=_parse_range, required=True, metavar="K1:K2")
    p.add_argument("--kprime", type=_parse_range, default=None, metavar="P1:P2")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--out", required=True, help="report file (.json or .csv)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("hunt", help="hunt for conjecture counterexamples")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k", type=_parse_range, required=True, metavar="K1:K2")
    p.add_argument("--kprime", type=_parse_range, default=None, metavar="P1:P2")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--out", required=True, help="report file (.json or .csv)")
    p.set_defaults(func=_cmd_hunt)

    p = sub.add_parser("formula", help="closed-form parameter value for a family")
    p.add_argument("--spec", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kprime", type=int, default=None)
    p.set_defaults(func=_cmd_formula)

    p = sub.add_parser("oracle", help="Steiner distance of a vertex set, general graphs")
    p.add_argument("--in", dest="infile", required=True, help="graph6 input file")
    p.add_argument("--set", type=_parse_vertex_list, required=True, metavar="V1,V2,...")
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (SteinerKitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
