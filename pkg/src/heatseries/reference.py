"""Reference solutions and measured error curves.

The Gaussian initial datum evolves to another Gaussian; that closed form is
normalised so that it equals the convolution of the heat kernel with the
datum (checked against convolve_oracle, which integrates the convolution
directly and shares no code with the closed form).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import i0e

from . import backend
from .bounds import divergence_lower_bound, envelope_bound_G, error_bound_F
from .errors import DomainError, UnsupportedVariantError
from .kernel_approx import ApproxConfig, SeriesGridEvaluator
from .moments import Gaussian, Generic1D, MomentTable, Radial, datum_dim
from .quadrature import integrate_halfline, integrate_line
from .serial import f17, json_opt17, opt17

CSV_HEADER = "k,sup_error,F_k,G_k,lb,ratio"


@dataclass(frozen=True)
class GridSpec:
    """Symmetric tensor grid: ``points`` per axis on [-extent, extent].

    ``points`` must be odd so the origin is a node.
    """

    dim: int
    extent: float
    points: int

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError("dim must be >= 1")
        if self.extent <= 0.0:
            raise DomainError("extent must be > 0")
        if self.points < 3 or self.points % 2 == 0:
            raise DomainError("points must be odd and >= 3")

    def axes(self) -> list[np.ndarray]:
        axis = np.linspace(-self.extent, self.extent, self.points)
        return [axis.copy() for _ in range(self.dim)]


def default_grid(dim: int, t_max: float, width: float, points: int = 801) -> GridSpec:
    """Extent 16 sqrt(t_max) + 4 sqrt(width): wide enough that both the
    solution and the truncations are negligible at the boundary."""
    extent = 2.0 * math.sqrt(t_max) * 8.0 + 4.0 * math.sqrt(width)
    return GridSpec(dim=dim, extent=extent, points=points)


def exact_gaussian_solution(
    amplitude: float, width: float, dim: int, x, t: float
) -> float:
    """Heat evolution of amplitude * e^{-|x|^2/4 width} at time t >= 0:

        u(x, t) = amplitude (t0 / (t + t0))^{d/2} e^{-|x|^2 / 4(t + t0)}.
    """
    if amplitude <= 0.0 or width <= 0.0:
        raise DomainError("exact_gaussian_solution needs positive amplitude/width")
    if t < 0.0:
        raise DomainError("t must be >= 0")
    pt = (float(x),) if np.isscalar(x) else tuple(float(c) for c in x)
    if len(pt) != dim:
        raise DomainError("point length does not match dim")
    sq = math.fsum(c * c for c in pt)
    spread = t + width
    return (
        amplitude
        * (width / spread) ** (dim / 2.0)
        * math.exp(-sq / (4.0 * spread))
    )


def _exact_gaussian_field(
    amplitude: float, width: float, axes, t: float
) -> np.ndarray:
    spread = t + width
    factors = [np.exp(-ax * ax / (4.0 * spread)) for ax in axes]
    scale = amplitude * (width / spread) ** (len(axes) / 2.0)
    if len(axes) == 1:
        return scale * factors[0]
    return scale * np.multiply.outer(factors[0], factors[1])


def convolve_oracle(u0, x, t: float) -> float:
    """Solution by direct quadrature of kernel * datum; the independent
    reference for everything else in this module.

    Generic1D integrates in the stretched variable u = (y - x)/(2 sqrt t),
    which keeps the integrand well scaled down to very small times.  Radial
    and Gaussian data in dim 2 and 3 reduce to half-line integrals against
    the kernel's angular average (a scaled Bessel term in dim 2, a
    reflection difference in dim 3).
    """
    if t <= 0.0:
        raise DomainError("convolve_oracle requires t > 0")
    d = datum_dim(u0)
    if isinstance(u0, Generic1D):
        x0 = float(x) if np.isscalar(x) else float(x[0])
        root = 2.0 * math.sqrt(t)
        # breakpoints past |u| = 40 sit under a weight < e^{-1600} and only
        # stretch the initial panel until quadrature can miss the bump
        breakpoints = [
            u
            for b in u0.breakpoints
            if abs(u := (b - x0) / root) <= 40.0
        ]
        return (1.0 / math.sqrt(math.pi)) * integrate_line(
            lambda u: math.exp(-u * u) * u0.func(x0 + root * u),
            breakpoints=breakpoints,
        )
    if isinstance(u0, Gaussian) and d == 1:
        x0 = float(x) if np.isscalar(x) else float(x[0])
        root = 2.0 * math.sqrt(t)
        return (1.0 / math.sqrt(math.pi)) * integrate_line(
            lambda u: math.exp(-u * u) * u0(x0 + root * u)
        )
    profile = u0 if isinstance(u0, Gaussian) else u0.profile
    r = abs(float(x)) if np.isscalar(x) else math.sqrt(
        math.fsum(float(c) ** 2 for c in x)
    )
    if d == 2:
        def integrand(rho):
            gap = r - rho
            return (
                profile(rho)
                * rho
                * math.exp(-gap * gap / (4.0 * t))
                * i0e(r * rho / (2.0 * t))
            )

        return integrate_halfline(integrand, breakpoints=(r,)) / (2.0 * t)
    if d == 3:
        if r < 1e-9:
            value = integrate_halfline(
                lambda rho: profile(rho)
                * rho
                * rho
                * math.exp(-rho * rho / (4.0 * t))
            )
            return 4.0 * math.pi * (4.0 * math.pi * t) ** -1.5 * value

        def integrand(rho):
            near = r - rho
            far = r + rho
            return (
                profile(rho)
                * rho
                * (
                    math.exp(-near * near / (4.0 * t))
                    - math.exp(-far * far / (4.0 * t))
                )
            )

        value = integrate_halfline(integrand, breakpoints=(r,))
        return value / (r * math.sqrt(4.0 * math.pi * t))
    raise UnsupportedVariantError(
        f"convolve_oracle supports dim 1 plus radial dim 2 and 3, got dim {d}"
    )


def _reference_field(u0, axes, t: float) -> np.ndarray:
    if isinstance(u0, Gaussian):
        return _exact_gaussian_field(u0.amplitude, u0.width, axes, t)
    # generic slow path: quadrature per node
    if len(axes) == 1:
        return np.array([convolve_oracle(u0, xi, t) for xi in axes[0]])
    out = np.empty((len(axes[0]), len(axes[1])))
    for i, xi in enumerate(axes[0]):
        for j, xj in enumerate(axes[1]):
            out[i, j] = convolve_oracle(u0, (xi, xj), t)
    return out


def _check_coverage(u0, grid: GridSpec, t: float) -> None:
    if not isinstance(u0, Gaussian):
        return
    edge = exact_gaussian_solution(
        u0.amplitude, u0.width, 1, grid.extent, t
    )
    peak = u0.amplitude * (u0.width / (t + u0.width)) ** (grid.dim / 2.0)
    if edge > 1e-16 * peak:
        warnings.warn(
            "grid extent may clip the solution support; sup errors can be "
            "underestimated",
            stacklevel=3,
        )


def sup_error(
    u0, table: MomentTable, cfg: ApproxConfig, grid: GridSpec
) -> float:
    """max over the grid of |reference - u_k|."""
    if grid.dim != cfg.dim:
        raise DomainError("grid dimension does not match config")
    _check_coverage(u0, grid, cfg.t)
    axes = grid.axes()
    evaluator = SeriesGridEvaluator(table, cfg.t, axes, k_cap=cfg.k)
    approx = evaluator.field_up_to(cfg.k)
    reference = _reference_field(u0, axes, cfg.t)
    return backend.max_abs_diff(reference, approx)


@dataclass
class ErrorPoint:
    """One truncation order: measured sup error plus applicable bounds.

    ``ratio`` is sup_error at k+2 over sup_error at k, present when both
    orders were measured and the denominator is positive.
    """

    k: int
    sup_error: float
    F_k: float
    G_k: float | None = None
    lb: float | None = None
    ratio: float | None = None


@dataclass
class ErrorCurve:
    points: list[ErrorPoint]

    def to_csv(self) -> str:
        lines = [CSV_HEADER]
        for p in self.points:
            lines.append(
                ",".join(
                    (
                        str(p.k),
                        f17(p.sup_error),
                        f17(p.F_k),
                        opt17(p.G_k),
                        opt17(p.lb),
                        opt17(p.ratio),
                    )
                )
            )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        rows = []
        for p in self.points:
            rows.append(
                '{"k":%d,"sup_error":%s,"F_k":%s,"G_k":%s,"lb":%s,"ratio":%s}'
                % (
                    p.k,
                    f17(p.sup_error),
                    f17(p.F_k),
                    json_opt17(p.G_k),
                    json_opt17(p.lb),
                    json_opt17(p.ratio),
                )
            )
        return "[" + ",".join(rows) + "]\n"


def error_curve(
    u0,
    table: MomentTable,
    dim: int,
    t: float,
    k_max: int,
    grid: GridSpec,
    even_only: bool = True,
) -> ErrorCurve:
    """Measured sup errors and bounds for k = 0..k_max.

    The table must extend to degree k_max + 1 so F is defined at the last
    order.  The truncation fields are accumulated incrementally, so the
    whole sweep costs about as much as the single largest k.
    """
    if table.k_max < k_max + 1:
        raise DomainError(
            f"error_curve to k_max={k_max} needs table degree {k_max + 1}"
        )
    if grid.dim != dim:
        raise DomainError("grid dimension does not match dim")
    _check_coverage(u0, grid, t)
    axes = grid.axes()
    evaluator = SeriesGridEvaluator(table, t, axes, k_cap=k_max)
    reference = _reference_field(u0, axes, t)
    ks = list(range(0, k_max + 1, 2 if even_only else 1))
    gaussian = isinstance(u0, Gaussian)
    raw: list[tuple[int, float, float, float | None, float | None]] = []
    for k in ks:
        cfg = ApproxConfig(dim=dim, k=k, t=t)
        approx = evaluator.field_up_to(k)
        sup = backend.max_abs_diff(reference, approx)
        f_k = error_bound_F(table, cfg).to_float()
        g_k = None
        lb = None
        if gaussian:
            g_k = envelope_bound_G(u0.amplitude, u0.width, cfg).to_float()
            if t < u0.width and (dim >= 2 or k // 2 >= 2):
                lb = divergence_lower_bound(u0.amplitude, u0.width, cfg).to_float()
        raw.append((k, sup, f_k, g_k, lb))
    points = []
    for i, (k, sup, f_k, g_k, lb) in enumerate(raw):
        ratio = None
        if i + 1 < len(raw) and raw[i + 1][0] == k + 2 and sup > 0.0:
            ratio = raw[i + 1][1] / sup
        points.append(
            ErrorPoint(k=k, sup_error=sup, F_k=f_k, G_k=g_k, lb=lb, ratio=ratio)
        )
    return ErrorCurve(points=points)
