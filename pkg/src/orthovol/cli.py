"""Command-line interface.

Subcommands mirror the library surface: kernel values, inner kernel
values, small-length constants, volume bounds, spectrum sums, kernel
tables, and the selftest suites.  Numbers print with 17 significant
digits by default so they re-parse to the same double.

Exit codes: 0 success, 1 selftest failures, 2 bad arguments or input
format, 3 quadrature or sampling non-convergence, 4 file I/O errors.
"""

from __future__ import annotations

import argparse
import csv
import sys

import numpy as np

from .bounds import collar_volume_factor, volume_bound
from .inner_kernel import inner_kernel, inner_kernel_integral
from .quadrature import NonConvergenceError, QuadratureConfig
from .selftest import run_selftest
from .spectrum import parse_spectrum, spectrum_volume
from .volume_kernel import small_length_constant, volume_kernel

__all__ = ["build_parser", "main", "app"]


def _config_from(args: argparse.Namespace) -> QuadratureConfig:
    return QuadratureConfig(
        rel_tol=args.rtol, abs_tol=args.atol, max_subdivisions=args.maxsub
    )


def _fmt(value: float, digits: int) -> str:
    return f"{value:.{digits}g}"


def cmd_fn(args: argparse.Namespace) -> int:
    kv = volume_kernel(args.dim, args.length, _config_from(args))
    print(_fmt(kv.value, args.digits), _fmt(kv.err_estimate, args.digits))
    return 0


def cmd_mn(args: argparse.Namespace) -> int:
    if args.oracle:
        kv = inner_kernel_integral(args.dim, args.ratio, _config_from(args))
        print(_fmt(kv.value, args.digits), _fmt(kv.err_estimate, args.digits))
    else:
        print(_fmt(inner_kernel(args.dim, args.ratio), args.digits))
    return 0


def cmd_kn(args: argparse.Namespace) -> int:
    if args.dim is not None:
        print(_fmt(small_length_constant(args.dim), args.digits))
    else:
        for n in range(3, 13):
            print(n, _fmt(small_length_constant(n), args.digits))
    return 0


def cmd_bound(args: argparse.Namespace) -> int:
    res = volume_bound(args.dim, args.area, _config_from(args))
    print("crossing_length", _fmt(res.crossing_length, args.digits))
    print("bound", _fmt(res.bound, args.digits))
    print("power_floor", _fmt(res.power_floor, args.digits))
    return 0


def cmd_sum(args: argparse.Namespace) -> int:
    with open(args.spectrum, "r", encoding="utf-8") as fh:
        text = fh.read()
    entries = parse_spectrum(text)
    if args.cutoff is not None:
        entries = [(length, mult) for length, mult in entries if length <= args.cutoff]
    total, total_err, rows = spectrum_volume(args.dim, entries, _config_from(args))
    if args.per_term:
        for length, mult, value, err in rows:
            print(
                _fmt(length, args.digits),
                mult,
                _fmt(value, args.digits),
                _fmt(err, args.digits),
            )
    print(_fmt(total, args.digits), _fmt(total_err, args.digits))
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    if args.steps < 2:
        raise ValueError("need at least 2 steps")
    if not 0.0 < args.lmin < args.lmax:
        raise ValueError("need 0 < lmin < lmax")
    if args.scale == "log":
        grid = np.geomspace(args.lmin, args.lmax, args.steps)
    else:
        grid = np.linspace(args.lmin, args.lmax, args.steps)
    cfg = _config_from(args)
    header = ["l", "kernel", "err_estimate"]
    if args.floor:
        header.append("small_length_approx")
    if args.collar is not None:
        header.append("collar_volume")
    rows = [header]
    for l in grid:
        l = float(l)
        kv = volume_kernel(args.dim, l, cfg)
        row = [
            _fmt(l, args.digits),
            _fmt(kv.value, args.digits),
            _fmt(kv.err_estimate, args.digits),
        ]
        if args.floor:
            approx = small_length_constant(args.dim) / l ** (args.dim - 2)
            row.append(_fmt(approx, args.digits))
        if args.collar is not None:
            row.append(
                _fmt(args.collar * collar_volume_factor(args.dim, 0.5 * l), args.digits)
            )
        rows.append(row)
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            csv.writer(fh).writerows(rows)
    else:
        csv.writer(sys.stdout).writerows(rows)
    return 0


def cmd_selftest(args: argparse.Namespace) -> int:
    failures = run_selftest(full=args.full)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--rtol", type=float, default=1e-9,
                        help="relative quadrature tolerance")
    shared.add_argument("--atol", type=float, default=1e-12,
                        help="absolute quadrature tolerance")
    shared.add_argument("--maxsub", type=int, default=2000,
                        help="max quadrature subdivisions")
    shared.add_argument("--digits", type=int, default=17,
                        help="significant digits in output")

    parser = argparse.ArgumentParser(
        prog="orthovol",
        description="Hyperbolic manifold volumes from orthospectra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fn", parents=[shared],
                       help="volume kernel at a given length")
    p.add_argument("-n", "--dim", type=int, required=True)
    p.add_argument("-l", "--length", type=float, required=True)
    p.set_defaults(func=cmd_fn)

    p = sub.add_parser("mn", parents=[shared],
                       help="inner kernel at a given ratio")
    p.add_argument("-n", "--dim", type=int, required=True)
    p.add_argument("-b", "--ratio", type=float, required=True)
    p.add_argument("--oracle", action="store_true",
                   help="evaluate the defining integral instead of the closed form")
    p.set_defaults(func=cmd_mn)

    p = sub.add_parser("kn", parents=[shared],
                       help="small-length kernel constants")
    p.add_argument("-n", "--dim", type=int)
    p.set_defaults(func=cmd_kn)

    p = sub.add_parser("bound", parents=[shared],
                       help="volume lower bound from boundary area")
    p.add_argument("-n", "--dim", type=int, required=True)
    p.add_argument("-A", "--area", type=float, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("sum", parents=[shared],
                       help="volume from an orthospectrum file")
    p.add_argument("-n", "--dim", type=int, required=True)
    p.add_argument("spectrum", help="file of 'length [multiplicity]' lines")
    p.add_argument("--per-term", action="store_true")
    p.add_argument("--cutoff", type=float,
                   help="ignore entries with length above this")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("table", parents=[shared],
                       help="CSV table of kernel values over a length grid")
    p.add_argument("-n", "--dim", type=int, required=True)
    p.add_argument("--lmin", type=float, required=True)
    p.add_argument("--lmax", type=float, required=True)
    p.add_argument("--steps", type=int, default=50)
    p.add_argument("--scale", choices=("linear", "log"), default="linear")
    p.add_argument("-o", "--out", help="write CSV here instead of stdout")
    p.add_argument("--floor", action="store_true",
                   help="add the small-length power-law column")
    p.add_argument("--collar", type=float, metavar="AREA",
                   help="add the collar volume column for this boundary area")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("selftest", parents=[shared],
                       help="run the built-in consistency checks")
    p.add_argument("--full", action="store_true",
                   help="include the slow oracle and sampling checks")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def app() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
