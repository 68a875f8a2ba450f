"""Command-line entry point `gk`."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .catalog import GroupSpecError, order, parse_group, pi
from .coclique import max_coclique, max_coclique_containing
from .gkgraph import graph_for, export, parse_graph
from .ledger import EPSILONS, render, run_ledger
from .oracle import spectrum_of
from .search import Constraint, SearchBounds, find, load_bounds

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _group(spec: str):
    try:
        return parse_group(spec)
    except GroupSpecError as exc:
        raise UsageError(str(exc)) from None


def _bounds(path: str | None) -> SearchBounds:
    path = path or os.environ.get("GK_BOUNDS")
    if not path:
        return SearchBounds()
    try:
        return load_bounds(path)
    except OSError as exc:
        raise UsageError(f"cannot read bounds file {path}: {exc.strerror or exc}") from None
    except ValueError as exc:
        raise UsageError(f"bad bounds file {path}: {exc}") from None


def cmd_order(args) -> int:
    f = order(_group(args.group))
    print(" * ".join(f"{p}^{e}" for p, e in f))
    return EXIT_OK


def cmd_pi(args) -> int:
    print(",".join(map(str, pi(_group(args.group)))))
    return EXIT_OK


def cmd_graph(args) -> int:
    try:
        graph = graph_for(_group(args.group))
    except GroupSpecError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(export(graph, args.format))
    return EXIT_OK


def cmd_coclique(args) -> int:
    if (args.group is None) == (args.graph_file is None):
        raise UsageError("give exactly one of a group name or --graph-file")
    if args.graph_file:
        try:
            graph = parse_graph(Path(args.graph_file).read_text())
        except OSError as exc:
            raise UsageError(f"cannot read graph file {args.graph_file}: {exc.strerror or exc}") from None
        except (ValueError, KeyError) as exc:
            raise UsageError(f"bad graph file {args.graph_file}: {exc}") from None
    else:
        try:
            graph = graph_for(_group(args.group))
        except GroupSpecError as exc:
            raise UsageError(str(exc)) from None
    try:
        if args.containing is not None:
            res = max_coclique_containing(graph, args.containing)
        else:
            res = max_coclique(graph)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"size {res.size}")
    print("witness " + ",".join(map(str, res.witness)))
    return EXIT_OK


def cmd_search(args) -> int:
    subset = frozenset(pi(_group(args.pi_subset))) if args.pi_subset else None
    try:
        c = Constraint(args.largest_prime, args.divisible, subset)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for g in find(_bounds(args.bounds), c):
        print(g)
    return EXIT_OK


def cmd_oracle(args) -> int:
    try:
        s = spectrum_of(_group(args.group))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(",".join(map(str, s.orders)))
    return EXIT_OK


def cmd_verify(args) -> int:
    ledger = run_ledger(args.epsilon, _bounds(args.bounds))
    sys.stdout.write(render(ledger, "json" if args.json else "text"))
    return EXIT_FAIL if ledger.failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gk", description="Prime graphs, orders and cocliques of finite simple groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", help="factored group order")
    p.add_argument("group")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("pi", help="prime divisors of the group order")
    p.add_argument("group")
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("graph", help="prime graph (E6(3), 2E6(3), Alt(n), L(2,q))")
    p.add_argument("group")
    p.add_argument("--format", choices=("dot", "json", "edges"), default="dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("coclique", help="maximum coclique of a prime graph")
    p.add_argument("group", nargs="?")
    p.add_argument("--graph-file")
    p.add_argument("--containing", type=int)
    p.set_defaults(func=cmd_coclique)

    p = sub.add_parser("search", help="simple groups in the search box meeting order constraints")
    p.add_argument("--largest-prime", type=int)
    p.add_argument("--divisible", type=int)
    p.add_argument("--pi-subset", metavar="GROUP")
    p.add_argument("--bounds", metavar="FILE")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("oracle", help="brute-force spectra")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    sp = osub.add_parser("spectrum", help="element orders of Alt(n) or L(2,p)")
    sp.add_argument("group")
    sp.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="replay the recognition proof as a check ledger")
    p.add_argument("--epsilon", choices=EPSILONS, required=True)
    p.add_argument("--bounds", metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"gk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
