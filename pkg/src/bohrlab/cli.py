"""Command-line interface: ``bohrlab radius|table|verify|sharpness|sweep``.

Exit codes: 0 success, 1 a checked inequality or sharpness claim failed,
2 usage error (bad parameters, no root, unknown table).
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import List, Optional


from . import reports
from .radius import (
    DEFAULT_TOL,
    FAMILIES,
    TABLE_IDS,
    DomainError,
    NoRootError,
    RadiusProblem,
    make_table,
    smallest_positive_root,
)
from .series import from_coefficients
from .sharpness import (
    DEFAULT_A,
    DEFAULT_DELTA,
    SHARPNESS_FAMILIES,
    closed_form_sweep,
    figure_sweep,
    sharpness_sweep,
)
from .suites import edge_functions, run_inequality_suite, sample_functions

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

SHARP_GAP_BELOW = 1e-6


class UsageError(Exception):
    pass


def _precision(text: str) -> Optional[int]:
    if text == "full":
        return None
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("precision must be a positive integer or 'full'")
    return value


def _add_params(p: argparse.ArgumentParser):
    for name in ("m", "p", "k", "N"):
        p.add_argument(f"--{name}", type=int, default=1, help=f"integer parameter {name} (default 1)")


def _add_output(p: argparse.ArgumentParser, default_fmt: str):
    p.add_argument("--format", choices=reports.FORMATS + (("text",) if default_fmt == "text" else ()),
                   default=default_fmt)
    p.add_argument("--precision", type=_precision, default=6,
                   help="significant digits, or 'full' for round-trip floats (default 6)")


def _problem(args, families=FAMILIES) -> RadiusProblem:
    if args.theorem not in families:
        raise UsageError(f"theorem must be one of {', '.join(families)}")
    try:
        return RadiusProblem(args.theorem, args.m, args.p, args.k, args.N)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_coeffs(text: str):
    try:
        return [complex(tok.strip().replace(" ", "")) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot parse coefficients {text!r}") from exc


def cmd_radius(args) -> int:
    problem = _problem(args)
    try:
        res = smallest_positive_root(problem, args.tol)
    except (DomainError, NoRootError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    row = {**problem.params, "radius": res.radius, "residual": res.residual,
           "bracket_lo": res.bracket[0], "bracket_hi": res.bracket[1],
           "iterations": res.iterations}
    if args.format == "text":
        fmt = lambda x: reports.format_number(x, args.precision)  # noqa: E731
        print(f"problem: {problem.label()}")
        print(f"radius: {fmt(res.radius)}")
        print(f"residual: {fmt(res.residual)}")
        print(f"bracket: [{fmt(res.bracket[0])}, {fmt(res.bracket[1])}]")
        print(f"iterations: {res.iterations}")
    else:
        sys.stdout.write(reports.render([row], args.format, args.precision))
    return EXIT_OK


def cmd_table(args) -> int:
    if args.id not in TABLE_IDS:
        raise UsageError(f"unknown table id {args.id!r}")
    rows = make_table(args.id, args.tol)
    sys.stdout.write(reports.render(rows, args.format, args.precision))
    return EXIT_OK


def cmd_verify(args) -> int:
    problem = _problem(args, SHARPNESS_FAMILIES)
    if args.samples < 0:
        raise UsageError("samples must be nonnegative")
    if not 0 < args.r_margin < 1:
        raise UsageError("r-margin must lie in (0, 1)")
    if args.coeffs is not None:
        f = from_coefficients(_parse_coeffs(args.coeffs))
        if not f.ball_certified:
            raise UsageError("input coefficients are not certified to lie in the unit ball "
                             "(need sum |a_n| <= 1)")
        functions = [f]
    else:
        functions = sample_functions(args.samples, args.seed)
        if not args.no_edges:
            functions = edge_functions() + functions
    try:
        result = run_inequality_suite(problem, functions, args.seed, args.r_margin)
    except (DomainError, NoRootError) as exc:
        raise UsageError(str(exc)) from exc
    status = "PASS" if result.passed else "FAIL"
    print(f"problem: {problem.label()}")
    print(f"radius: {result.radius:.6g}")
    print(f"r: {result.r:.6g}")
    print(f"evaluations: {result.evaluated}")
    print(f"max lhs+err: {result.max_upper!r}")
    for line in result.failures[:10]:
        print(f"violation: {line}")
    print(status)
    return EXIT_OK if result.passed else EXIT_FAIL


def cmd_sharpness(args) -> int:
    problem = _problem(args, SHARPNESS_FAMILIES)
    try:
        below, above = sharpness_sweep(problem, args.a, args.delta)
    except (DomainError, NoRootError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    rows = [below.as_row(), above.as_row()]
    sys.stdout.write(reports.render(rows, args.format, args.precision))
    ok = below.gap <= SHARP_GAP_BELOW and above.gap > 0
    print(f"{'PASS' if ok else 'FAIL'}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def _grid(start: float, end: float, step: float) -> List[float]:
    if not (math.isfinite(start) and math.isfinite(end) and math.isfinite(step)):
        raise UsageError("sweep bounds must be finite")
    if step <= 0 or end < start:
        raise UsageError("empty sweep range (need step > 0 and r-end >= r-start)")
    count = int(math.floor((end - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(count)]


def cmd_sweep(args) -> int:
    problem = _problem(args)
    grid = _grid(args.r_start, args.r_end, args.step)
    if args.a is not None:
        if args.theorem not in SHARPNESS_FAMILIES:
            raise UsageError("--a needs one of the theorem families")
        records = closed_form_sweep(problem, args.a, grid)
    else:
        records = figure_sweep(problem, grid)
    if not records:
        raise UsageError("no grid point lies inside the equation's domain")
    text = reports.to_csv([r.as_row() for r in records], args.precision)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
        print(f"wrote {len(records)} rows to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bohrlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", help="solve one radius equation")
    p.add_argument("--theorem", required=True, choices=FAMILIES)
    _add_params(p)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    _add_output(p, "text")
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("table", help="reproduce one of the radius tables")
    p.add_argument("--id", required=True, help="table id: 1, 2, 3, 3p or 5")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    _add_output(p, "csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="sample unit-ball functions and check an inequality")
    p.add_argument("--theorem", required=True, choices=SHARPNESS_FAMILIES)
    _add_params(p)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--r-margin", type=float, default=0.01)
    p.add_argument("--coeffs", help="check one polynomial instead, e.g. '0.5,0.25j,0.2'")
    p.add_argument("--no-edges", action="store_true", help="omit f = 1 and f = z")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sharpness", help="extremal Moebius function just below/above the radius")
    p.add_argument("--theorem", required=True, choices=SHARPNESS_FAMILIES)
    _add_params(p)
    p.add_argument("--a", type=float, default=DEFAULT_A)
    p.add_argument("--delta", type=float, default=DEFAULT_DELTA)
    _add_output(p, "md")
    p.set_defaults(func=cmd_sharpness)

    p = sub.add_parser("sweep", help="write residual (or closed-form) rows over an r grid")
    p.add_argument("--theorem", required=True, choices=FAMILIES)
    _add_params(p)
    p.add_argument("--r-start", type=float, default=0.001)
    p.add_argument("--r-end", type=float, default=0.999)
    p.add_argument("--step", type=float, default=0.001)
    p.add_argument("--a", type=float, default=None,
                   help="emit the extremal function's closed-form lhs at this a instead")
    p.add_argument("--out", default="-")
    p.add_argument("--precision", type=_precision, default=6)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"bohrlab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
