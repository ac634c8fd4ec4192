"""Command-line interface for numerical radii and norms of compressed shifts.

Zeros are passed as one comma-separated list, e.g. ``--zeros 0,0.5`` or
``--zeros "0.2+0.3i, -0.1"``. Results go to standard output as canonical
JSON (``--json`` pretty-prints); diagnostics go to standard error.

Exit codes: 0 ok, 1 numerical failure, 2 input error, 3 failed cross-check,
4 I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any

from .blaschke import BlaschkeProduct
from .const import EXIT_CROSS_CHECK, EXIT_OK
from .exceptions import BlaschkeRadiusError, exit_code_for
from .formats import (
    BOUNDARY_CSV_HEADER,
    FT_TRACE_CSV_HEADER,
    boundary_rows,
    canonical_json,
    ft_trace_rows,
    parse_complex,
    parse_zeros,
    write_csv,
    write_csv_file,
)
from .methods import NORM_METHOD_NAMES, RADIUS_METHOD_NAMES
from .models import NormResult, RunConfig
from .solver import NumericalRadiusSolver

_Command = Callable[[NumericalRadiusSolver, argparse.Namespace], int]


def _product(args: argparse.Namespace) -> BlaschkeProduct:
    return BlaschkeProduct.from_zeros(parse_zeros(args.zeros))


def _emit(payload: Any, args: argparse.Namespace) -> None:
    print(canonical_json(payload, pretty=args.json))


def _emit_result(result: NormResult, args: argparse.Namespace) -> int:
    _emit(result.as_dict(), args)
    for warning in result.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return EXIT_OK if result.cross_checks_passed else EXIT_CROSS_CHECK


def cmd_numrad(solver: NumericalRadiusSolver, args: argparse.Namespace) -> int:
    """Numerical radius ``w(S_B)``."""
    return _emit_result(solver.numerical_radius(_product(args), args.method), args)


def cmd_norm(solver: NumericalRadiusSolver, args: argparse.Namespace) -> int:
    """``||I + t S_B||``."""
    return _emit_result(solver.norm(_product(args), parse_complex(args.t), args.method), args)


def cmd_range(solver: NumericalRadiusSolver, args: argparse.Namespace) -> int:
    """Boundary samples of the numerical range as CSV, radius summary as JSON."""
    samples, estimate = solver.boundary(_product(args), args.samples)
    write_csv_file(args.out, BOUNDARY_CSV_HEADER, boundary_rows(samples))
    _emit(
        {
            "value": estimate.value,
            "argmax_theta": estimate.argmax_theta,
            "samples": len(samples),
            "out": str(args.out),
        },
        args,
    )
    return EXIT_OK


def cmd_pick_check(solver: NumericalRadiusSolver, args: argparse.Namespace) -> int:
    """Positive semidefiniteness of the Pick matrix at one ``gamma``."""
    check = solver.pick_check(_product(args), parse_complex(args.t), args.gamma)
    _emit(check.as_dict(), args)
    return EXIT_OK


def cmd_ft_trace(solver: NumericalRadiusSolver, args: argparse.Namespace) -> int:
    """Foias-Tannenbaum defect along the ``rho`` scan as CSV."""
    scan = solver.ft_trace(_product(args), parse_complex(args.t), args.samples)
    rows = ft_trace_rows(scan)
    if args.out is None:
        write_csv(sys.stdout, FT_TRACE_CSV_HEADER, rows)
        return EXIT_OK
    write_csv_file(args.out, FT_TRACE_CSV_HEADER, rows)
    _emit({"samples": len(rows), "valid": int(scan.valid.sum()), "out": str(args.out)}, args)
    return EXIT_OK


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Pretty-print JSON output (indent 2)")
    common.add_argument("--config", type=Path, help="key=value file overriding run configuration defaults")
    common.add_argument("--strict", action="store_true", help="Fail instead of flagging a cross-check mismatch")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="blaschke",
        description="Numerical radius and norms of compressed shifts of finite Blaschke products",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_numrad = sub.add_parser("numrad", help="Numerical radius of S_B", parents=[common])
    p_numrad.add_argument("--zeros", required=True, help="Comma-separated zeros, e.g. 0,0.5")
    p_numrad.add_argument("--method", choices=["auto", *RADIUS_METHOD_NAMES], default="auto")
    p_numrad.set_defaults(func=cmd_numrad)

    p_norm = sub.add_parser("norm", help="||I + t S_B||", parents=[common])
    p_norm.add_argument("--zeros", required=True)
    p_norm.add_argument("--t", required=True, help="Real or complex t")
    p_norm.add_argument("--method", choices=list(NORM_METHOD_NAMES), default="svd")
    p_norm.set_defaults(func=cmd_norm)

    p_range = sub.add_parser("range", help="Numerical range boundary as CSV", parents=[common])
    p_range.add_argument("--zeros", required=True)
    p_range.add_argument("--samples", type=int, help="Boundary samples (default: theta_samples)")
    p_range.add_argument("--out", type=Path, required=True, help="CSV path")
    p_range.set_defaults(func=cmd_range)

    p_pick = sub.add_parser("pick-check", help="Pick matrix feasibility at one gamma", parents=[common])
    p_pick.add_argument("--zeros", required=True)
    p_pick.add_argument("--t", required=True)
    p_pick.add_argument("--gamma", type=float, required=True)
    p_pick.set_defaults(func=cmd_pick_check)

    p_ft = sub.add_parser("ft-trace", help="Foias-Tannenbaum defect scan as CSV", parents=[common])
    p_ft.add_argument("--zeros", required=True)
    p_ft.add_argument("--t", required=True, help="The perturbation a")
    p_ft.add_argument("--samples", type=int, help="rho samples (default: ft_scan_samples)")
    p_ft.add_argument("--out", type=Path, help="CSV path (default: stdout)")
    p_ft.set_defaults(func=cmd_ft_trace)

    return parser


def _load_config(path: Path | None) -> RunConfig:
    if path is None:
        return RunConfig()
    return RunConfig.from_file(path)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        solver = NumericalRadiusSolver(_load_config(args.config), strict=args.strict)
        func: _Command = args.func
        return func(solver, args)
    except (BlaschkeRadiusError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)


if __name__ == "__main__":
    raise SystemExit(main())
