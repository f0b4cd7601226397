"""Command line entry point: ``yaspe <command> ...`` or ``python -m yaspe``.

Commands write machine formats to stdout and log to stderr. Exit codes are
0 on success, 1 when a verification fails, 2 for invalid arguments or shapes
and 3 for a malformed specialization.
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from yaspe.torus import (
    LaurentPolynomial,
    ShapeError,
    SpecializationError,
    TorusShape,
    Variable,
    convert_convention,
    coprime_shapes,
    iter_paths,
    mellit_superpolynomial,
    p_minus,
    p_plus,
    parse_specialization,
    verify_full_twist,
)
from yaspe.verify import CHECKS, DEFAULT_CHECKS, SweepRunner, SweepSpec, default_jobs

logger = logging.getLogger(__name__)

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_SPECIALIZATION = 3


def _dump(record: Any) -> str:
    return json.dumps(record, separators=(",", ":"))


def cmd_paths(args: argparse.Namespace) -> int:
    shape = TorusShape(m=args.m, n=args.n)
    paths = iter_paths(shape, rugged=args.rugged)
    if args.count:
        print(sum(1 for _ in paths))
        return EXIT_OK
    for path in paths:
        print(_dump(path.to_dict(stats=args.stats)))
    return EXIT_OK


def _emit_poly(
    poly: LaurentPolynomial, fmt: str, record: Dict[str, Any]
) -> None:
    if fmt == "text":
        print(poly.fmt())
    elif fmt == "latex":
        print(poly.fmt(mode="latex"))
    elif fmt == "csv":
        sys.stdout.write(poly.to_frame().to_csv(index=False))
    else:
        print(_dump({**record, "terms": poly.to_records()}))


def cmd_superpoly(args: argparse.Namespace) -> int:
    shape = TorusShape(m=args.m, n=args.n)
    # fail on a malformed specialization before enumerating
    assignment = parse_specialization(args.specialize) if args.specialize else {}

    result = mellit_superpolynomial(shape)
    record: Dict[str, Any] = result.to_dict()
    if args.minus:
        poly = p_minus(shape)
        record["part"] = "minus"
    elif args.plus:
        poly = p_plus(shape)
        record["part"] = "plus"
    else:
        poly = result.poly
        record["part"] = "full"

    if args.primed:
        primed = convert_convention(poly, prefactor_degree=shape.alpha_min)
        if args.format == "json":
            record.update(prefactorDegree=shape.alpha_min, terms=primed.to_records())
            print(_dump(record))
        else:
            print(primed.fmt())
        return EXIT_OK

    if assignment:
        poly = poly.specialize(assignment)
        record["specialize"] = args.specialize
    _emit_poly(poly, args.format, record)
    return EXIT_OK


def _result_line(result) -> str:
    status = "PASS" if result.passed else "FAIL"
    line = f"{status} {result.check} ({result.m}, {result.n})"
    if result.detail:
        line += f" {result.detail}"
    if not result.passed and result.witness:
        line += f" {_dump(result.witness)}"
    return line


def cmd_verify(args: argparse.Namespace) -> int:
    spec = SweepSpec.parse(args.max_sum, args.checks)
    stream = args.format == "text"
    runner = SweepRunner(
        spec=spec,
        jobs=args.jobs if args.jobs is not None else default_jobs(),
        on_result=(lambda r: print(_result_line(r), flush=True)) if stream else None,
    )
    report = runner.run()

    if stream:
        print(report.summary.to_string())
    else:
        record = report.to_dict()
        if not args.timing:
            record.pop("wallTime")
        print(json.dumps(record, indent=2))
    logger.info(f"Verification took {report.wall_time:.2f}s")
    return EXIT_OK if report.passed else EXIT_FAILED


def shape_table(max_sum: int) -> pd.DataFrame:
    """One row per coprime shape with m + n <= `max_sum`."""
    rows: List[Dict[str, Any]] = []
    for shape in coprime_shapes(max_sum):
        result = mellit_superpolynomial(shape)
        lo, hi = result.poly.degree_range(Variable.ALPHA)
        rows.append(
            {
                "m": shape.m,
                "n": shape.n,
                "paths": result.path_count,
                "rugged": result.rugged_count,
                "alpha_min": lo,
                "alpha_max": hi,
                "terms": len(result.poly.terms),
                "full_twist": verify_full_twist(shape.m, shape.n).passed,
            }
        )
    return pd.DataFrame(rows)


def cmd_table(args: argparse.Namespace) -> int:
    df = shape_table(args.max_sum)
    if args.format == "csv":
        sys.stdout.write(df.to_csv(index=False))
    else:
        print(df.to_string(index=False))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yaspe",
        description="Superpolynomials of torus knots from rational Dyck paths",
    )
    parser.add_argument(
        "--verbose", "-v", action="store_true", help="Enable DEBUG-level logging to stderr"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("paths", help="Enumerate (m,n)-Dyck paths as JSON lines")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--rugged", action="store_true", help="Only rugged paths")
    p.add_argument("--stats", action="store_true", help="Include area, h and V")
    p.add_argument("--count", action="store_true", help="Print the number of paths")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("superpoly", help="Superpolynomial of the (m,n) torus knot")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    part = p.add_mutually_exclusive_group()
    part.add_argument("--minus", action="store_true", help="Lowest alpha coefficient")
    part.add_argument("--plus", action="store_true", help="Highest alpha coefficient")
    p.add_argument(
        "--specialize", default=None, help="Substitution such as T=-1,a=1 or T=-1,a=Q^2"
    )
    p.add_argument(
        "--format", choices=["json", "text", "latex", "csv"], default="text"
    )
    p.add_argument(
        "--primed", action="store_true", help="Print in the q', a', t' variables"
    )
    p.set_defaults(func=cmd_superpoly)

    p = sub.add_parser("verify", help="Run verification checks over a sweep")
    p.add_argument("--max-sum", type=int, required=True, help="Largest m + n")
    p.add_argument(
        "--checks",
        default=None,
        help=f"Comma separated subset of {','.join(CHECKS)} "
        f"(default {','.join(DEFAULT_CHECKS)})",
    )
    p.add_argument(
        "--jobs", type=int, default=None, help="Worker processes (default $YASPE_JOBS or 1)"
    )
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--timing", action="store_true", help="Include wall time in JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="Summary table of shapes")
    p.add_argument("--max-sum", type=int, required=True, help="Largest m + n")
    p.add_argument("--format", choices=["csv", "text"], default="text")
    p.set_defaults(func=cmd_table)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    if args.command == "superpoly" and args.primed:
        if args.specialize or args.minus or args.plus:
            parser.error("--primed applies to the full superpolynomial only")
        if args.format not in ("json", "text"):
            parser.error("--primed supports the json and text formats only")

    try:
        return args.func(args)
    except SpecializationError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_SPECIALIZATION
    except (ShapeError, ValueError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
