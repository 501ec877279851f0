"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 infeasible instance,
3 verification discrepancy.
"""

from __future__ import annotations

import argparse
import sys

from .family_spec import FamilySpecError, family_graph
from .graphs import Graph, read_edge_list, write_edge_list
from .solver import (DominationQuery, Guards, GuardExceeded, active_backend,
                     domatic_exact, gamma_exact, gamma_naive)
from .verify import Report, SweepConfig, run_sweep, write_csv, write_markdown

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_DISCREPANCY = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the contract reserves 2 for
    # infeasible instances, so remap to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--family", help="family spec, e.g. prism:cycle:6")
    grp.add_argument("--input", help="edge-list file ('-' for stdin)")


def _load_graph(args) -> Graph:
    if args.family:
        return family_graph(args.family)
    if args.input == "-":
        return read_edge_list(sys.stdin)
    with open(args.input) as fh:
        return read_edge_list(fh)


def _fmt_set(s) -> str:
    return "{" + ", ".join(str(v + 1) for v in sorted(s)) + "}"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="domlab",
                     description="k-tuple total (restrained) domination toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gamma = sub.add_parser("gamma", parents=[], help="domination number")
    _add_graph_source(p_gamma)
    p_gamma.add_argument("--k", type=int, default=1)
    p_gamma.add_argument("--variant", default="restrained",
                         choices=["restrained", "total-restrained", "total"])
    p_gamma.add_argument("--certificate", action="store_true",
                         help="print one optimal set (1-based)")
    p_gamma.add_argument("--naive", action="store_true",
                         help="use the unpruned oracle instead of the kernel")

    p_dom = sub.add_parser("domatic", help="domatic number")
    _add_graph_source(p_dom)
    p_dom.add_argument("--k", type=int, default=1)
    p_dom.add_argument("--variant", default="restrained",
                       choices=["restrained", "total-restrained", "total"])
    p_dom.add_argument("--certificate", action="store_true",
                       help="print one maximum partition (1-based)")

    p_con = sub.add_parser("construct", help="emit a family as an edge list")
    p_con.add_argument("family", help="family spec, e.g. complement:path:9")
    p_con.add_argument("-o", "--out", help="output file (default stdout)")

    p_ver = sub.add_parser("verify-paper",
                           help="run the verification sweep and write a report")
    p_ver.add_argument("--sections", nargs="*", default=None,
                       help="subset of sweep sections (default: all)")
    p_ver.add_argument("--format", default="csv", choices=["csv", "markdown"])
    p_ver.add_argument("--out", help="report file (default stdout)")
    p_ver.add_argument("--seed", type=int, default=20230417)
    p_ver.add_argument("--oracle-random", type=int, default=500)
    p_ver.add_argument("--property-random", type=int, default=200)
    p_ver.add_argument("--workers", type=int, default=1)
    p_ver.add_argument("--timings", action="store_true",
                       help="fill runtime_ms (reports stop being byte-stable)")
    return parser


def _cmd_gamma(args) -> int:
    g = _load_graph(args)
    q = DominationQuery(g, args.k, args.variant)
    guards = Guards.from_env()
    res = gamma_naive(q, guards) if args.naive else gamma_exact(q, guards)
    if not res.feasible:
        print(f"infeasible: min degree {g.min_degree} < k={args.k}")
        return EXIT_INFEASIBLE
    print(f"gamma = {res.value}  (k={q.k}, variant={q.variant}, "
          f"backend={'naive' if args.naive else active_backend()})")
    if args.certificate:
        print(f"certificate: {_fmt_set(res.certificate)}")
    return EXIT_OK


def _cmd_domatic(args) -> int:
    g = _load_graph(args)
    q = DominationQuery(g, args.k, args.variant)
    res = domatic_exact(q, Guards.from_env())
    if not res.feasible:
        print(f"infeasible: min degree {g.min_degree} < k={args.k}")
        return EXIT_INFEASIBLE
    print(f"domatic = {res.value}  (k={q.k}, variant={q.variant})")
    if args.certificate:
        for i, cls in enumerate(res.certificate, 1):
            print(f"class {i}: {_fmt_set(cls)}")
    return EXIT_OK


def _cmd_construct(args) -> int:
    g = family_graph(args.family)
    if args.out:
        with open(args.out, "w") as fh:
            write_edge_list(g, fh)
    else:
        write_edge_list(g, sys.stdout)
    return EXIT_OK


def _write_report(report: Report, args) -> None:
    writer = write_csv if args.format == "csv" else write_markdown
    if args.out:
        with open(args.out, "w") as fh:
            writer(report, fh, timings=args.timings)
    else:
        writer(report, sys.stdout, timings=args.timings)


def _cmd_verify(args) -> int:
    config = SweepConfig(sections=tuple(args.sections or ()), seed=args.seed,
                         oracle_random=args.oracle_random,
                         property_random=args.property_random,
                         guards=Guards.from_env(), workers=args.workers,
                         timings=args.timings)
    report = run_sweep(config)
    _write_report(report, args)
    disc = report.discrepancies
    allow = report.allowlisted_failures
    print(f"rows={report.total} matched={report.matched} "
          f"discrepancies={len(disc)} allowlisted={len(allow)} "
          f"skipped={report.skipped}", file=sys.stderr)
    for row in disc[:20]:
        print(f"DISCREPANCY {row.instance}: solver={row.solver} "
              f"formula={row.formula} {row.note}", file=sys.stderr)
    for row in allow:
        print(f"allowlisted {row.instance}: {row.note}", file=sys.stderr)
    return EXIT_DISCREPANCY if disc else EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "gamma":
            return _cmd_gamma(args)
        if args.command == "domatic":
            return _cmd_domatic(args)
        if args.command == "construct":
            return _cmd_construct(args)
        return _cmd_verify(args)
    except (FamilySpecError, GuardExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
