"""Command-line entry points.

Subcommands: generate, hampath, hamcycle, solve, verify, oracle,
experiment, audit, report.  Exit codes: 0 success, 1 negative or failed
domain outcome (no cycle, invalid system, no spanning system, audit
defects), 2 unusable input (bad flags, unreadable or malformed files),
3 undecided outcome (search budget exhausted).

The oracle node budget comes from --budget where offered, else the
DDPC_ORACLE_BUDGET environment variable, else 10**7.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .digraph import degree_report, is_semicomplete, read_dgr, write_dgr
from .engine import SolveConfig, format_trace, solve
from .gen import GEN_KINDS, GenSpec, generate
from .ham import (
    NotSemicompleteError,
    NotStrongError,
    TooFewVerticesError,
    hamiltonian_cycle,
    hamiltonian_path,
)
from .harness import audit_lemmas, format_audit_report, read_plan, run_experiment
from .oracle import exact_ddpc, exact_max_system, exact_st_linkage
from .path_system import (
    format_psys,
    lemma_report,
    read_psys,
    validate_system,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_UNDECIDED = 3


class _InputError(Exception):
    """Unusable input: maps to exit code 2."""


def _load_dgr(path: str):
    try:
        return read_dgr(path)
    except (OSError, ValueError) as exc:
        raise _InputError(f"cannot read instance {path}: {exc}") from None


def _load_psys(path: str):
    try:
        return read_psys(path)
    except (OSError, ValueError) as exc:
        raise _InputError(f"cannot read system {path}: {exc}") from None


def _parse_sinks(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise _InputError(f"--sinks must be a comma list of vertices: "
                          f"{text!r}") from None


def _cmd_generate(args) -> int:
    spec = GenSpec(n=args.n, kind=args.kind, digon_prob=args.digon_prob,
                   k=args.k, offset=args.offset, seed=args.seed)
    try:
        spec.validate()
        d = generate(spec)
    except ValueError as exc:
        raise _InputError(str(exc)) from None
    write_dgr(args.output, d)
    report = degree_report(d)
    print(f"n={d.n} arcs={d.arc_count} delta_zero={report.delta_zero} "
          f"-> {args.output}")
    return EXIT_OK


def _cmd_hampath(args) -> int:
    d = _load_dgr(args.dgr)
    try:
        path = hamiltonian_path(d)
    except NotSemicompleteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(" ".join(str(v) for v in path))
    return EXIT_OK


def _cmd_hamcycle(args) -> int:
    d = _load_dgr(args.dgr)
    try:
        cycle = hamiltonian_cycle(d)
    except (NotSemicompleteError, NotStrongError, TooFewVerticesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(" ".join(str(v) for v in cycle))
    return EXIT_OK


def _cmd_solve(args) -> int:
    d = _load_dgr(args.dgr)
    sinks = _parse_sinks(args.sinks)
    config = SolveConfig(use_fallback=not args.no_fallback,
                         fallback_cap=args.fallback_cap, budget=args.budget)
    try:
        result = solve(d, args.source, sinks, config)
    except ValueError as exc:
        raise _InputError(str(exc)) from None
    print(f"status={result.status}")
    print(f"engine_outcome={result.engine_outcome}")
    print(f"moves={len(result.trace)}")
    print(f"max_cover={result.max_cover}")
    if args.trace is not None:
        Path(args.trace).write_text(format_trace(result.trace),
                                    encoding="utf-8")
    if result.system is not None:
        sys.stdout.write(format_psys(result.system))
    if result.status == "found":
        return EXIT_OK
    if result.status == "none_exists":
        return EXIT_DOMAIN
    return EXIT_UNDECIDED


def _cmd_verify(args) -> int:
    d = _load_dgr(args.dgr)
    system = _load_psys(args.psys)
    problems = validate_system(d, system)
    print(f"n={d.n}")
    print(f"k={system.k}")
    print(f"valid={'true' if not problems else 'false'}")
    for problem in problems:
        print(f"problem={problem}")
    if problems:
        return EXIT_DOMAIN
    cover = system.cover_count()
    spanning = cover == d.n
    print(f"cover={cover}")
    print(f"spanning={'true' if spanning else 'false'}")
    if args.ddpc:
        print(f"ddpc={'true' if spanning else 'false'}")
        return EXIT_OK if spanning else EXIT_DOMAIN
    if not spanning and is_semicomplete(d):
        report = lemma_report(d, system)
        print(f"threshold_met={'true' if report.threshold_met else 'false'}")
        print(f"uncovered={report.uncovered_size}")
        print("uncovered_strong="
              f"{'true' if report.uncovered_strong else 'false'}")
        for claim in report.claims:
            print(f"claim.{claim.name}={'pass' if claim.holds else 'fail'}")
            print(f"claim.{claim.name}.hypotheses_met="
                  f"{'true' if claim.hypotheses_met else 'false'}")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    d = _load_dgr(args.dgr)
    sinks = _parse_sinks(args.sinks)
    ops = {"linkage": exact_st_linkage, "ddpc": exact_ddpc,
           "max": exact_max_system}
    try:
        verdict = ops[args.mode](d, args.source, sinks, budget=args.budget)
    except ValueError as exc:
        raise _InputError(str(exc)) from None
    print(f"kind={verdict.kind}")
    print(f"cover={verdict.max_cover}")
    print(f"nodes={verdict.nodes_explored}")
    if verdict.system is not None:
        sys.stdout.write(format_psys(verdict.system))
    if verdict.kind == "found":
        return EXIT_OK
    if verdict.kind == "none_exists":
        return EXIT_DOMAIN
    return EXIT_UNDECIDED


def _cmd_experiment(args) -> int:
    try:
        plan = read_plan(args.plan)
    except (OSError, ValueError) as exc:
        raise _InputError(f"cannot load plan {args.plan}: {exc}") from None
    rows = run_experiment(plan, args.output)
    found = sum(1 for r in rows if r.oracle_ddpc == "found")
    exceeded = sum(1 for r in rows if r.oracle_ddpc == "budget_exceeded")
    print(f"trials={len(rows)} found={found} budget_exceeded={exceeded} "
          f"-> {args.output}")
    return EXIT_OK


def _cmd_audit(args) -> int:
    if not Path(args.corpus).is_dir():
        raise _InputError(f"not a directory: {args.corpus}")
    report = audit_lemmas(args.corpus, budget=args.budget)
    sys.stdout.write(format_audit_report(report))
    return EXIT_DOMAIN if report.has_defects else EXIT_OK


def _cmd_report(args) -> int:
    from .figures import report as render_report
    try:
        written = render_report(args.csv, args.output)
    except (OSError, ValueError) as exc:
        raise _InputError(f"cannot render {args.csv}: {exc}") from None
    for path in written:
        print(f"wrote {path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ddpc",
        description="Disjoint directed path covers in semicomplete digraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a seeded instance to a file")
    p.add_argument("--kind", choices=sorted(GEN_KINDS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--k", type=int, default=2,
                   help="sink count shaping near_threshold instances")
    p.add_argument("--offset", type=int, default=0)
    p.add_argument("--digon-prob", type=float, default=0.25)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("hampath", help="print a spanning path")
    p.add_argument("dgr")
    p.set_defaults(func=_cmd_hampath)

    p = sub.add_parser("hamcycle", help="print a spanning cycle")
    p.add_argument("dgr")
    p.set_defaults(func=_cmd_hamcycle)

    p = sub.add_parser("solve",
                       help="grow a spanning path system with the move engine")
    p.add_argument("dgr")
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--sinks", required=True,
                   help="comma-separated sink vertices")
    p.add_argument("--no-fallback", action="store_true",
                   help="never fall back to the exhaustive search")
    p.add_argument("--fallback-cap", type=int, default=14,
                   help="largest n the fallback may attack")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--trace", default=None,
                   help="write applied moves to this file, one per line")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="validate a system against an instance")
    p.add_argument("dgr")
    p.add_argument("psys")
    p.add_argument("--ddpc", action="store_true",
                   help="also require the system to span every vertex")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="settle an instance exhaustively")
    p.add_argument("dgr")
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--sinks", required=True)
    p.add_argument("--mode", choices=("linkage", "ddpc", "max"),
                   default="ddpc")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("experiment", help="run a plan file into a CSV sweep")
    p.add_argument("plan")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("audit",
                       help="check structural claims over a corpus directory")
    p.add_argument("corpus")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("report", help="render figures from a sweep CSV")
    p.add_argument("csv")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
