"""Command-line interface.

Exit codes: 0 success, 2 malformed input, 3 not simplicial or rank
deficient, 4 resource limit exceeded.  Diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from math import gcd

from . import report
from .apery import DEFAULT_TUPLE_LIMIT, apery_set
from .conductor import conductor_min_gens, frobenius_number, normalization_generators
from .errors import (InvalidTuple, MalformedInput, NotNumerical, NotSimplicial, RankDeficient,
                     ResourceLimit)
from .semigroup import Semigroup
from .structure import classify, is_buchsbaum, is_cohen_macaulay, is_gorenstein, is_normal

EXIT_OK, EXIT_INPUT, EXIT_GEOMETRY, EXIT_LIMIT = 0, 2, 3, 4


def parse_gens(text: str) -> list:
    """``"5,3,1; 1,5,2"`` -> ``[(5, 3, 1), (1, 5, 2)]``."""
    text = "".join(text.split())
    if not text:
        raise MalformedInput("empty generator list")
    out = []
    for part in text.strip(";").split(";"):
        try:
            out.append(tuple(int(x) for x in part.split(",")))
        except ValueError:
            raise MalformedInput(f"cannot parse vector {part!r}") from None
    return out


def read_gens_file(path: str) -> list:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from None
    gens = data.get("generators") if isinstance(data, dict) else None
    if not isinstance(gens, list) or not all(isinstance(g, list) for g in gens):
        raise MalformedInput(f'{path}: expected {{"generators": [[...], ...]}}')
    return [tuple(g) for g in gens]


def _common(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--gens", help='semicolon-separated vectors, e.g. "3,0;0,3;5,2"')
    src.add_argument("--file", help='JSON file {"generators": [[...], ...]}')
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--limit-tuples", type=int, default=DEFAULT_TUPLE_LIMIT, metavar="N",
                   help="cap on Apery box tuples and f-vector combinations")
    p.add_argument("--limit-box", type=int, default=None, metavar="N",
                   help="cross-check against brute force enumeration in [0,N]^d")
    p.add_argument("--threads", type=int, default=1, metavar="N")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="asg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("analyze", help="full report")
    _common(p)
    p.add_argument("--timings", action="store_true", help="include stage timings")
    for name, text in [("apery", "Ap(S,E) with remainder classes"),
                       ("type", "type and quasi-Frobenius elements"),
                       ("normalization", "minimal generators of the normalization"),
                       ("conductor", "minimal generators of the conductor over the normalization"),
                       ("frobenius", "Frobenius number (d = 1)")]:
        _common(sub.add_parser(name, help=text))
    p = sub.add_parser("check", help="decide a ring property")
    p.add_argument("property", choices=["cm", "gorenstein", "buchsbaum", "normal"])
    _common(p)
    return parser


def _vecs(vs):
    return [list(v) for v in vs]


def _fmt(v):
    return ",".join(map(str, v))


def run(args) -> str:
    gens = parse_gens(args.gens) if args.gens is not None else read_gens_file(args.file)
    if args.threads < 1 or args.limit_tuples < 1:
        raise MalformedInput("--threads and --limit-tuples must be positive")
    if args.command == "analyze":
        limits = report.Limits(args.limit_tuples, args.limit_box, args.threads)
        r = report.analyze(gens, limits, timings=args.timings)
        return report.dumps(r) if args.json else report.render_text(r)

    s = Semigroup(gens)
    if s.d == 1:
        h = gcd(*(x for (x,) in s.generators))
        if h != 1:
            print(f"note: generators have gcd {h}; analyzed as given", file=sys.stderr)
    table = apery_set(s, args.limit_tuples, args.threads)
    if args.command == "apery":
        classes = table.classes()
        if args.json:
            return json.dumps({"elements": _vecs(table.elements), "remainders": _vecs(table.remainders),
                               "classes": [_vecs(c) for c in classes]})
        return "\n".join(f"{_fmt(w)}\tclass {table.class_of[w]}" for w in table.elements)
    if args.command == "type":
        c = classify(s, table)
        if args.json:
            return json.dumps({"typ": c.typ, "quasi_frobenius": _vecs(c.qf), "is_cm": c.is_cm})
        return f"{c.typ}\n" + "\n".join(_fmt(f) for f in c.qf)
    if args.command == "check":
        test = {"cm": is_cohen_macaulay, "gorenstein": is_gorenstein,
                "buchsbaum": is_buchsbaum, "normal": is_normal}[args.property]
        value = test(s, table)
        if args.json:
            return json.dumps({"property": args.property, "value": value})
        return "true" if value else "false"
    if args.command == "normalization":
        gs = normalization_generators(s, table)
    elif args.command == "conductor":
        gs = conductor_min_gens(s, table, args.limit_tuples, args.threads).minimal_generators
    else:  # frobenius
        f = frobenius_number(s, table, conductor_min_gens(s, table, args.limit_tuples, args.threads))
        return json.dumps({"frobenius_number": f}) if args.json else str(f)
    if args.json:
        return json.dumps({"generators": _vecs(gs)})
    return "\n".join(_fmt(g) for g in gs)


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        out = run(args)
    except (MalformedInput, NotNumerical, InvalidTuple) as exc:
        print(f"error [{exc.stage}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (RankDeficient, NotSimplicial) as exc:
        print(f"error [{exc.stage}]: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except ResourceLimit as exc:
        print(f"error [{exc.stage}]: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    print(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
