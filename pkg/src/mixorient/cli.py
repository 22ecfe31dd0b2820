"""Command-line front end.

    mixorient orient GRAPH [-u U]
    mixorient oracle GRAPH [--max-undirected N]
    mixorient gen FAMILY ARGS... [--seed S]
    mixorient verify SUITE [--max-n N] [--max-undirected N] [--seed S] [--csv PATH]

Exit codes: 0 ok, 1 other error, 2 usage or parse error, 3 not bridgeless,
4 bound violated, 5 too many undirected edges, 6 family only given as a
figure, 7 verification found a violation.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .engine import format_orientation, orient_best, orient_with_bound
from .errors import (
    BadParam,
    BoundViolated,
    MixorientError,
    NotBridgeless,
    NotConnected,
    NoCycle,
    ParseError,
    TooManyEdges,
    UnsupportedFigureOnly,
)
from .generators import FAMILIES, generate
from .graph import read_graph
from .oracle import DEFAULT_LIMIT, oriented_diameter_exact
from .sweep import SUITES, run_suite, summarize, write_csv

log = logging.getLogger("mixorient")

EXIT_CODES = [
    (ParseError, 2),
    (UnsupportedFigureOnly, 6),
    (BadParam, 2),
    (NotBridgeless, 3),
    (NotConnected, 3),
    (NoCycle, 3),
    (BoundViolated, 4),
    (TooManyEdges, 5),
]
EXIT_VIOLATION = 7


def _number(text: str):
    try:
        return int(text)
    except ValueError:
        return float(text)


def cmd_orient(args) -> int:
    g = read_graph(args.graph)
    if args.u is None:
        orientation, cert = orient_best(g)
    else:
        orientation, cert = orient_with_bound(g, args.u)
    sys.stdout.write(format_orientation(orientation, g))
    print(cert.line())
    return 0


def cmd_oracle(args) -> int:
    g = read_graph(args.graph)
    result = oriented_diameter_exact(g, args.max_undirected)
    if not result.has_strong:
        print("value none")
        return 3
    print(f"value {result.value}")
    sys.stdout.write(format_orientation(result.witness, g))
    return 0


def cmd_gen(args) -> int:
    params = [_number(p) for p in args.params]
    kwargs = {}
    if args.family.startswith("random"):
        kwargs["seed"] = args.seed
    for name in ("k", "l", "delta"):
        value = getattr(args, name)
        if value is not None:
            kwargs[name] = value
    try:
        inst = generate(args.family, *params, **kwargs)
    except TypeError as exc:
        raise BadParam(f"bad parameters for {args.family}: {exc}") from exc
    sys.stdout.write(inst.to_text())
    return 0


def cmd_verify(args) -> int:
    rows = run_suite(
        args.suite,
        seed=args.seed,
        max_n=args.max_n,
        max_undirected=args.max_undirected,
        count=args.count,
        jobs=args.jobs,
    )
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_csv(rows, fh)
        print(summarize(args.suite, rows))
    else:
        write_csv(rows, sys.stdout)
        print(summarize(args.suite, rows), file=sys.stderr)
    return EXIT_VIOLATION if any(not r.ok for r in rows) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mixorient", description="Strong orientations of bridgeless mixed graphs.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orient", help="orient a graph and print its certificate")
    p.add_argument("graph")
    p.add_argument("-u", type=int, default=None, help="pivot vertex (default: best max-undirected-degree vertex)")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("oracle", help="exact oriented diameter by exhaustive search")
    p.add_argument("graph")
    p.add_argument("--max-undirected", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="print a family member in the text format")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--delta", type=int, default=None, help="seed degree for m with d*=3")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run a verification suite, CSV rows plus a summary")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-undirected", type=int, default=None)
    p.add_argument("--count", type=int, default=None, help="number of random graphs")
    p.add_argument("--csv", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MixorientError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        for cls, code in EXIT_CODES:
            if isinstance(exc, cls):
                return code
        return 1


if __name__ == "__main__":
    sys.exit(main())
