"""Experiment command line: heatseries <command> [options].

Commands
    error-curve   measured sup errors vs the rigorous and envelope bounds
    divergence    |u_k(0, t)| growth below the envelope width vs the bound
    eigen-compare truncated eigenfunction sums vs the moment expansion
    decomp-check  distributional decomposition residuals and L1 bounds
    moments       dump the Gaussian moment table

Exit codes: 0 success, 1 an asserted inequality failed, 2 usage error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import __version__
from .bounds import (
    divergence_lower_bound,
    envelope_bound_G,
    fit_divergence_prefactor,
)
from .decomposition import (
    decomposition_residual,
    gaussian_test_function,
    poly_gaussian_test_function,
    remainder_l1_norm,
)
from .eigen import SimilarityPoint, eigen_coeffs, eval_expansion, validity_integral
from .errors import HeatSeriesError
from .kernel_approx import ApproxConfig, eval_uk
from .moments import Gaussian, build_moment_table, gaussian_abs_moment
from .reference import GridSpec, default_grid, error_curve, exact_gaussian_solution
from .serial import f17, json_opt17, opt17
from .specfun import log_factorial
from .svg import line_plot

_ASSERT_SLACK = 1.0 + 1e-9


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heatseries",
        description="truncated heat-kernel derivative series experiments",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("error-curve", "sup errors against the rigorous bound"),
        ("divergence", "origin growth for t below the envelope width"),
        ("eigen-compare", "eigen expansion vs moment expansion"),
        ("decomp-check", "decomposition residual suite"),
        ("moments", "dump the moment table"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--dim", type=int, default=1)
        cmd.add_argument("--t0", type=float, default=1.0,
                        help="Gaussian datum width")
        cmd.add_argument("--t", type=float, default=2.0,
                        help="evaluation time")
        cmd.add_argument("--amplitude", type=float, default=1.0)
        cmd.add_argument("--kmax", type=int, default=40)
        cmd.add_argument("--grid-extent", type=float, default=None)
        cmd.add_argument("--grid-points", type=int, default=801)
        cmd.add_argument("--format", choices=("csv", "json"), default="csv")
        cmd.add_argument("--plot", action="store_true",
                        help="write an SVG next to --out")
        cmd.add_argument("--all-k", action="store_true",
                        help="include odd truncation orders")
        cmd.add_argument("--out", required=True, help="output path")
    return parser


def _validate(args) -> None:
    problems = []
    if args.dim < 1:
        problems.append("--dim must be >= 1")
    if args.t0 <= 0.0:
        problems.append("--t0 must be > 0")
    if args.t <= 0.0:
        problems.append("--t must be > 0")
    if args.amplitude <= 0.0:
        problems.append("--amplitude must be > 0")
    if args.kmax < 0 or args.kmax > 200:
        problems.append("--kmax must be in [0, 200]")
    if args.grid_points < 3 or args.grid_points % 2 == 0:
        problems.append("--grid-points must be odd and >= 3")
    if args.command == "error-curve" and args.dim > 2:
        problems.append("error-curve supports --dim 1 or 2")
    if args.command == "divergence" and not args.t < args.t0:
        problems.append("divergence requires --t < --t0")
    if args.command == "eigen-compare" and args.dim > 2:
        problems.append("eigen-compare supports --dim 1 or 2")
    if problems:
        raise UsageError("; ".join(problems))


class UsageError(Exception):
    pass


class AssertionFailure(Exception):
    pass


def _write(path: str, text: str) -> None:
    Path(path).write_text(text)


def _plot_path(out: str) -> str:
    p = Path(out)
    return str(p.with_suffix(".svg"))


def _ks(args) -> list[int]:
    step = 1 if args.all_k else 2
    return list(range(0, args.kmax + 1, step))


def cmd_error_curve(args) -> None:
    grid_extent = args.grid_extent
    if grid_extent is None:
        grid = default_grid(args.dim, args.t, args.t0, args.grid_points)
    else:
        grid = GridSpec(dim=args.dim, extent=grid_extent, points=args.grid_points)
    if args.t < args.t0:
        print(
            "warning: t below the envelope width; truncations diverge there",
            file=sys.stderr,
        )
    u0 = Gaussian(amplitude=args.amplitude, width=args.t0, dim=args.dim)
    table = build_moment_table(u0, args.kmax + 1)
    curve = error_curve(
        u0, table, args.dim, args.t, args.kmax, grid,
        even_only=not args.all_k,
    )
    text = curve.to_csv() if args.format == "csv" else curve.to_json()
    _write(args.out, text)
    if args.plot:
        ks = [p.k for p in curve.points]
        series = [
            ("sup_error", ks, [p.sup_error for p in curve.points]),
            ("F_k", ks, [p.F_k for p in curve.points]),
        ]
        if curve.points and curve.points[0].G_k is not None:
            series.append(("G_k", ks, [p.G_k for p in curve.points]))
        _write(
            _plot_path(args.out),
            line_plot(series, "sup error vs truncation order", "k", "error"),
        )
    bad = [p.k for p in curve.points if p.sup_error > p.F_k * _ASSERT_SLACK]
    if bad:
        raise AssertionFailure(
            f"sup error exceeded the rigorous bound at k={bad}"
        )


def cmd_divergence(args) -> None:
    u0 = Gaussian(amplitude=args.amplitude, width=args.t0, dim=args.dim)
    table = build_moment_table(u0, args.kmax)
    origin = (0.0,) * args.dim
    rows = []
    for k in _ks(args):
        cfg = ApproxConfig(dim=args.dim, k=k, t=args.t)
        result = eval_uk(table, cfg, origin)
        block = next(
            (c for j, c in result.terms if j == k), 0.0
        )
        lb = None
        if args.dim >= 2 or k // 2 >= 2:
            lb = divergence_lower_bound(
                args.amplitude, args.t0, cfg
            ).to_float()
        rows.append((k, result.value, abs(result.value), lb, block))
    header = "k,uk0,abs_uk0,lb,block"
    if args.format == "csv":
        lines = [header]
        for k, v, av, lb, block in rows:
            lines.append(
                ",".join((str(k), f17(v), f17(av), opt17(lb), f17(block)))
            )
        text = "\n".join(lines) + "\n"
    else:
        items = [
            '{"k":%d,"uk0":%s,"abs_uk0":%s,"lb":%s,"block":%s}'
            % (k, f17(v), f17(av), json_opt17(lb), f17(block))
            for k, v, av, lb, block in rows
        ]
        text = "[" + ",".join(items) + "]\n"
    _write(args.out, text)
    if args.plot:
        ks = [r[0] for r in rows]
        series = [("abs_uk0", ks, [r[2] for r in rows])]
        if any(r[3] is not None for r in rows):
            series.append(
                ("lb", [r[0] for r in rows if r[3] is not None],
                 [r[3] for r in rows if r[3] is not None])
            )
        _write(
            _plot_path(args.out),
            line_plot(series, "origin growth below the width", "k", "|u_k(0,t)|"),
        )
    if args.dim == 1:
        fit_rows = [(k, av) for k, _, av, _, _ in rows if k >= 20 and av > 0.0]
        if len(fit_rows) >= 2:
            prefactor, slope = fit_divergence_prefactor(
                [k for k, _ in fit_rows],
                [v for _, v in fit_rows],
                args.t0,
                args.t,
            )
            expected = 0.5 * math.log(args.t0 / args.t)
            print(
                "dim-1 shape fit: B=%s slope=%s expected_slope=%s"
                % (f17(prefactor), f17(slope), f17(expected))
            )
    else:
        bad = [
            k for k, _, av, lb, _ in rows
            if lb is not None and av * _ASSERT_SLACK < lb
        ]
        if bad:
            raise AssertionFailure(
                f"|u_k(0,t)| fell below the certified bound at k={bad}"
            )


def cmd_eigen_compare(args) -> None:
    u0 = Gaussian(amplitude=args.amplitude, width=args.t0, dim=args.dim)
    table = build_moment_table(u0, args.kmax)
    coeffs = eigen_coeffs(u0, 0.0, args.kmax)
    z_axis = [i * 0.5 for i in range(-6, 7)]
    tau = math.log(args.t)
    half_power = args.t ** (args.dim / 2.0)
    rows = []
    for k in _ks(args):
        cfg = ApproxConfig(dim=args.dim, k=k, t=args.t)
        worst = 0.0
        for z in z_axis:
            zs = (z,) + (0.0,) * (args.dim - 1)
            point = SimilarityPoint(z=zs, tau=tau)
            x = tuple(c * 2.0 * math.sqrt(args.t) for c in zs)
            lhs = eval_expansion(coeffs, point, k)
            rhs = half_power * eval_uk(table, cfg, x).value
            worst = max(worst, abs(lhs - rhs))
        rows.append((k, worst))
    sweep = []
    for factor in (0.5, 0.9, 1.1, 2.0):
        t_point = factor * args.t0
        value = validity_integral(
            lambda r, tt: exact_gaussian_solution(
                args.amplitude, args.t0, args.dim,
                (r,) + (0.0,) * (args.dim - 1), tt,
            ),
            t_point,
            args.dim,
        )
        sweep.append((t_point, math.isfinite(value)))
    if args.format == "csv":
        lines = ["k,discrepancy"]
        for k, worst in rows:
            lines.append("%d,%s" % (k, f17(worst)))
        _write(args.out, "\n".join(lines) + "\n")
        sweep_lines = ["t,finite"]
        for t_point, finite in sweep:
            sweep_lines.append("%s,%s" % (f17(t_point), "true" if finite else "false"))
        sweep_path = Path(args.out)
        sweep_path = sweep_path.with_name(sweep_path.stem + "-validity.csv")
        _write(str(sweep_path), "\n".join(sweep_lines) + "\n")
    else:
        text = '{"discrepancies":[%s],"validity":[%s]}\n' % (
            ",".join(
                '{"k":%d,"discrepancy":%s}' % (k, f17(w)) for k, w in rows
            ),
            ",".join(
                '{"t":%s,"finite":%s}'
                % (f17(t_point), "true" if finite else "false")
                for t_point, finite in sweep
            ),
        )
        _write(args.out, text)
    if args.plot:
        ks = [k for k, _ in rows]
        _write(
            _plot_path(args.out),
            line_plot(
                [("discrepancy", ks, [w for _, w in rows])],
                "eigen expansion vs moment expansion",
                "k",
                "max abs discrepancy",
            ),
        )
    bad = [k for k, w in rows if k <= 30 and w > 1e-10]
    if bad:
        raise AssertionFailure(
            f"expansion discrepancy above 1e-10 at k={bad}"
        )
    wrong = [
        t_point for t_point, finite in sweep
        if finite != (t_point > args.t0)
    ]
    if wrong:
        raise AssertionFailure(
            f"validity verdict disagrees with t > t0 at t={wrong}"
        )


def cmd_decomp_check(args) -> None:
    widths = (0.5, 1.0, 2.0)
    rows = []
    ok = True
    for width in widths:
        f = Gaussian(amplitude=args.amplitude, width=width, dim=1)
        for alpha in range(1, 6):
            measured = remainder_l1_norm(f, alpha)
            bound = (
                gaussian_abs_moment((alpha,), args.amplitude, width).logmag
                - log_factorial(alpha)
            )
            bound = math.exp(bound)
            good = measured <= bound * _ASSERT_SLACK
            ok = ok and good
            rows.append(
                ("l1_bound", "width=%s,alpha=%d" % (f17(width), alpha),
                 measured, bound, good)
            )
    tests = (
        ("gaussian", gaussian_test_function(1.0)),
        ("poly_gaussian", poly_gaussian_test_function((1.0, 0.0, 1.0), 1.0)),
    )
    for width in widths:
        f = Gaussian(amplitude=args.amplitude, width=width, dim=1)
        for label, phi in tests:
            for k in range(0, 5):
                residual = decomposition_residual(f, k, phi)
                good = residual <= 1e-8
                ok = ok and good
                rows.append(
                    ("residual", "width=%s,phi=%s,k=%d" % (f17(width), label, k),
                     residual, 1e-8, good)
                )
    if args.format == "csv":
        lines = ["check,case,value,bound,ok"]
        for check, case, value, bound, good in rows:
            lines.append(
                ",".join(
                    (check, '"%s"' % case, f17(value), f17(bound),
                     "true" if good else "false")
                )
            )
        _write(args.out, "\n".join(lines) + "\n")
    else:
        items = [
            '{"check":"%s","case":"%s","value":%s,"bound":%s,"ok":%s}'
            % (check, case, f17(value), f17(bound), "true" if good else "false")
            for check, case, value, bound, good in rows
        ]
        _write(args.out, "[" + ",".join(items) + "]\n")
    if not ok:
        raise AssertionFailure("decomposition checks failed")


def cmd_moments(args) -> None:
    u0 = Gaussian(amplitude=args.amplitude, width=args.t0, dim=args.dim)
    table = build_moment_table(u0, args.kmax)
    if args.format == "json":
        _write(args.out, table.to_json() + "\n")
    else:
        lines = ["alpha,sign,logmag"]
        for a in table.indices():
            m = table.entries[a]
            alpha_txt = " ".join(str(c) for c in a.components)
            lines.append(
                "%s,%d,%s"
                % (alpha_txt, m.sign, f17(m.logmag if m.sign != 0 else 0.0))
            )
        _write(args.out, "\n".join(lines) + "\n")


_COMMANDS = {
    "error-curve": cmd_error_curve,
    "divergence": cmd_divergence,
    "eigen-compare": cmd_eigen_compare,
    "decomp-check": cmd_decomp_check,
    "moments": cmd_moments,
}


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _validate(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    try:
        _COMMANDS[args.command](args)
    except AssertionFailure as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3
    except HeatSeriesError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
