"""Command-line front end.

Usage:
    congmonoid im --n 4
    congmonoid im --n 9 --degree 6 --format csv --plot im9.png
    congmonoid enumerate --n 4 --degree 2
    congmonoid orbits --n 6 --degree 5
    congmonoid gen --n 8 --degree 5 --orbits
    congmonoid reduce --mod 4 --weights 2,6
    congmonoid verify --n-max 10 --check conjecture3
    congmonoid table --n-max 10 --plot table.png

Exit codes: 0 ok, 2 usage, 3 resource/scale, 4 below threshold,
5 a proved-tier check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .errors import BelowThreshold, MonoidError, ResourceLimit
from .gen import level1_layer, threshold
from .monoid import IndecomposableSet, brute_force_im, enumerate_degree, indecomposables
from .orbit import Orbit, orbit_decomposition, orbit_of
from .reduce import GeneralCongruence, general_indecomposables, reduce
from .solution import Solution
from .verify import CHECKS, FAILED, reports_to_json, render_reports, run_checks, summary_table

log = logging.getLogger("congmonoid")

EXIT_OK, EXIT_USAGE, EXIT_RESOURCE, EXIT_THRESHOLD, EXIT_CHECK = 0, 2, 3, 4, 5

SOLUTION_COLUMNS = ("counts", "degree", "multiplicity", "level", "orbit_size")


class UsageError(Exception):
    pass


# rendering


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(map(str, v)) + ")"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def render_table(rows: list[dict], columns: Sequence[str]) -> str:
    cells = [[_cell(r[c]) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    out = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    for row in cells:
        out.append("  ".join(v.rjust(w) for v, w in zip(row, widths)))
    return "\n".join(out)


def render_csv(rows: list[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([",".join(map(str, r[c])) if isinstance(r[c], (list, tuple)) else r[c] for c in columns])
    return buf.getvalue().rstrip("\n")


def render_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)


def solution_row(a: Solution) -> dict:
    orb = orbit_of(a)
    return {
        "n": a.n,
        "counts": list(a.counts),
        "degree": a.degree,
        "multiplicity": a.multiplicity,
        "level": orb.level,
        "orbit_size": orb.size,
    }


def _emit(args, rows, columns, doc):
    if args.format == "json":
        print(render_json(doc))
    elif args.format == "csv":
        print(render_csv(rows, columns))
    else:
        print(render_table(rows, columns))


def _diag(args, msg):
    if not args.quiet:
        print(msg, file=sys.stderr)


def _check_n(n):
    if n < 2:
        raise UsageError(f"--n must be >= 2 (got {n})")


# subcommands


def cmd_im(args) -> int:
    _check_n(args.n)
    im = indecomposables(args.n, limit=args.limit)
    elems = im.elements if args.degree is None else im.degree(args.degree)
    rows = [solution_row(a) for a in elems]
    doc = {"n": args.n, "F": len(im), "degree": args.degree, "elements": rows}
    _emit(args, rows, SOLUTION_COLUMNS, doc)
    if args.plot:
        from .plotting import plot_degree_profile

        plot_degree_profile([solution_row(a) for a in im], args.n, args.plot)
        _diag(args, f"figure written to {args.plot}")
    if args.seed_check:
        oracle = brute_force_im(args.n)
        if oracle.as_set() != im.as_set():
            _diag(args, f"seed-check: sweep and oracle disagree for n={args.n}")
            return EXIT_CHECK
        _diag(args, f"seed-check: sweep matches oracle for n={args.n} ({len(im)} elements)")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    _check_n(args.n)
    if args.degree < 0:
        raise UsageError("--degree must be >= 0")
    sols = enumerate_degree(args.n, args.degree)
    if len(sols) > args.limit:
        raise ResourceLimit(f"{len(sols)} solutions exceed the cap {args.limit}")
    rows = [solution_row(a) for a in sols]
    doc = {"n": args.n, "degree": args.degree, "solutions": rows}
    _emit(args, rows, SOLUTION_COLUMNS, doc)
    return EXIT_OK


ORBIT_COLUMNS = ("representative", "degree", "size", "level")


def _orbit_row(o: Orbit) -> dict:
    return {
        "representative": list(o.representative.counts),
        "degree": o.degree,
        "size": o.size,
        "level": o.level,
    }


def cmd_orbits(args) -> int:
    _check_n(args.n)
    im = indecomposables(args.n, limit=args.limit)
    elems = im.elements if args.degree is None else im.degree(args.degree)
    orbits = orbit_decomposition(elems)
    rows = [_orbit_row(o) for o in orbits]
    doc = {"n": args.n, "degree": args.degree, "orbits": [o.to_dict() for o in orbits]}
    _emit(args, rows, ORBIT_COLUMNS, doc)
    return EXIT_OK


def cmd_gen(args) -> int:
    _check_n(args.n)
    required = threshold(args.n)
    complete = args.degree >= required
    if not complete and args.force:
        _diag(
            args,
            f"WARNING: degree {args.degree} < {required}: "
            "mult1 subset, completeness not guaranteed",
        )
    layer = level1_layer(args.n, args.degree, orbits=args.orbits, force=args.force)
    if args.orbits:
        rows = []
        for idx, o in enumerate(layer):
            for e in o.elements:
                row = solution_row(e)
                row["orbit"] = idx
                rows.append(row)
        columns = ("orbit",) + SOLUTION_COLUMNS
        doc = {
            "n": args.n, "degree": args.degree, "threshold": required,
            "complete": complete, "orbits": [o.to_dict() for o in layer],
        }
    else:
        rows = [solution_row(a) for a in layer]
        columns = SOLUTION_COLUMNS
        doc = {
            "n": args.n, "degree": args.degree, "threshold": required,
            "complete": complete, "solutions": rows,
        }
    _emit(args, rows, columns, doc)
    return EXIT_OK


def _parse_weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(w) for w in text.split(",") if w.strip())
    except ValueError:
        raise UsageError(f"--weights must be comma-separated integers, got {text!r}")


def cmd_reduce(args) -> int:
    _check_n(args.mod)
    weights = _parse_weights(args.weights)
    if not weights:
        raise UsageError("--weights must not be empty")
    gc = GeneralCongruence(args.mod, weights)
    rm = reduce(gc)
    gens = general_indecomposables(gc, limit=args.limit)
    rows = [{"x": list(x), "degree": sum(x)} for x in gens]
    if args.format == "json":
        print(render_json({"n": gc.n, "weights": list(gc.weights), "reduction": rm.to_dict(), "generators": rows}))
    elif args.format == "csv":
        print(render_csv(rows, ("x", "degree")))
    else:
        groups = ", ".join(f"{s}:{list(v)}" for s, v in rm.groups.items())
        print(f"modulus: {gc.n}")
        print(f"weights: {list(gc.weights)}")
        print(f"support: {list(rm.canonical_support)}")
        print(f"groups: {{{groups}}}")
        print(f"dropped: {list(rm.dropped)}")
        print(f"generators: {len(rows)}")
        print(render_table(rows, ("x", "degree")))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n is not None:
        _check_n(args.n)
        ns = [args.n]
    else:
        if args.n_max < 2:
            raise UsageError("--n-max must be >= 2")
        ns = list(range(2, args.n_max + 1))
    names = [c.replace("-", "_") for c in args.check] if args.check else list(CHECKS)
    for name in names:
        if name not in CHECKS:
            raise UsageError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    workers = args.threads if args.threads else (os.cpu_count() or 1)
    reports = run_checks(ns, names, workers=workers)
    if args.format == "json":
        print(reports_to_json(reports))
    elif args.format == "csv":
        rows = [
            {
                "check": r.check_name, "n": r.n, "tier": r.tier, "status": r.status,
                "witnesses": len(r.witnesses),
                "counts": json.dumps(r.counts, sort_keys=True),
            }
            for r in reports
        ]
        print(render_csv(rows, ("check", "n", "tier", "status", "witnesses", "counts")))
    else:
        print(render_reports(reports))
    if any(r.status == FAILED and r.tier == "proved" for r in reports):
        _diag(args, "a proved-tier check FAILED")
        return EXIT_CHECK
    return EXIT_OK


TABLE_COLUMNS = ("n", "F", "p", "phi", "kac_bound", "bound_met")


def cmd_table(args) -> int:
    if args.n_max < 2:
        raise UsageError("--n-max must be >= 2")
    rows = summary_table(args.n_max)
    _emit(args, rows, TABLE_COLUMNS, rows)
    if args.plot:
        from .plotting import plot_summary

        plot_summary(rows, args.plot)
        _diag(args, f"figure written to {args.plot}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--threads", type=int, default=1, help="worker processes (0 = auto)")
    common.add_argument("--limit", type=int, default=20_000_000, help="candidate cap")
    common.add_argument("--quiet", action="store_true", help="suppress diagnostics")

    parser = argparse.ArgumentParser(prog="congmonoid", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("im", parents=[common], help="indecomposable solutions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int)
    p.add_argument("--plot", metavar="PATH", help="write a degree/level bar chart")
    p.add_argument("--seed-check", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_im)

    p = sub.add_parser("enumerate", parents=[common], help="all solutions of one degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("orbits", parents=[common], help="unit-group orbits of IM")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("gen", parents=[common], help="fast level-1 generator")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--orbits", action="store_true")
    p.add_argument("--force", action="store_true", help="run below the completeness threshold")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", parents=[common], help="general congruence generators")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--weights", required=True, help="e.g. 2,6 (use --weights=-1,3 for a leading minus)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", parents=[common], help="theorem and conjecture checks")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--n", type=int)
    grp.add_argument("--n-max", type=int)
    p.add_argument("--check", action="append", help=f"one of: {', '.join(CHECKS)}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common], help="F(n) against the lower bound")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--plot", metavar="PATH", help="write an F(n) figure")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.ERROR if args.quiet else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BelowThreshold as exc:
        print(f"error: {exc} (use --force for the partial layer)", file=sys.stderr)
        return EXIT_THRESHOLD
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except MonoidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
