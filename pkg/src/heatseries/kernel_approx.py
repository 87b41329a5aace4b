"""The heat kernel, its derivatives, and truncated moment expansions.

The order-k approximation to the Cauchy solution with initial datum u0 is

    u_k(x, t) = pi^{-d/2} e^{-|x|^2/4t}
        sum_{|alpha| <= k} (m_alpha / alpha!) (4t)^{-(|alpha|+d)/2}
        prod_i H_{alpha_i}(x_i / (2 sqrt(t)))

with m_alpha the moments of u0.  Point evaluation keeps every term in
SignedLog form and reduces by exponent alignment; grid evaluation goes
through the selected numeric backend with per-term double coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import backend
from .errors import DomainError, UnsupportedVariantError
from .moments import Gaussian, MomentTable, MultiIndex, constant_C
from .signedlog import ZERO, SignedLog, aligned_sum
from .specfun import hermite_weighted, hermite_weighted_sequence, laguerre, log_gamma

_LOG_PI = math.log(math.pi)


@dataclass(frozen=True)
class ApproxConfig:
    """Dimension, truncation order, and evaluation time."""

    dim: int
    k: int
    t: float

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError("dim must be >= 1")
        if self.k < 0:
            raise DomainError("truncation order k must be >= 0")
        if self.t <= 0.0:
            raise DomainError("evaluation time t must be > 0")


@dataclass
class ApproxResult:
    """Value of u_k at one point plus the per-degree partial contributions.

    ``terms`` lists (degree, contribution) pairs for every degree with a
    nonzero moment block, in ascending degree order.
    """

    value: float
    terms: list[tuple[int, float]] = field(default_factory=list)


def _as_point(x, dim: int) -> tuple[float, ...]:
    if np.isscalar(x):
        if dim != 1:
            raise DomainError(f"scalar point given for dim {dim}")
        return (float(x),)
    pt = tuple(float(c) for c in x)
    if len(pt) != dim:
        raise DomainError(f"point of length {len(pt)} given for dim {dim}")
    return pt


def heat_kernel(x, t: float, dim: int | None = None) -> float:
    """Fundamental solution (4 pi t)^{-d/2} exp(-|x|^2 / 4t)."""
    if t <= 0.0:
        raise DomainError("heat_kernel requires t > 0")
    if dim is None:
        dim = 1 if np.isscalar(x) else len(x)
    pt = _as_point(x, dim)
    sq = math.fsum(c * c for c in pt)
    return (4.0 * math.pi * t) ** (-dim / 2.0) * math.exp(-sq / (4.0 * t))


def kernel_derivative(alpha, x, t: float) -> SignedLog:
    """Mixed spatial derivative D^alpha of the heat kernel at (x, t).

    Assembled from Gaussian-weighted Hermite values,

        D^alpha G = pi^{-d/2} (4t)^{-(|alpha|+d)/2} (-1)^{|alpha|}
                    prod_i H_{alpha_i}(y_i) e^{-y_i^2},   y = x / (2 sqrt t).
    """
    if t <= 0.0:
        raise DomainError("kernel_derivative requires t > 0")
    a = MultiIndex.of(alpha)
    d = a.dim
    pt = _as_point(x, d)
    scale = 2.0 * math.sqrt(t)
    out = SignedLog.from_log(
        -0.5 * d * _LOG_PI - 0.5 * (a.degree + d) * math.log(4.0 * t),
        sign=-1 if a.degree % 2 else 1,
    )
    for ai, xi in zip(a.components, pt):
        out = out * hermite_weighted(ai, xi / scale)
    return out


def _term_scale(degree: int, cfg: ApproxConfig) -> float:
    """log of pi^{-d/2} (4t)^{-(degree+d)/2}."""
    return -0.5 * cfg.dim * _LOG_PI - 0.5 * (degree + cfg.dim) * math.log(4.0 * cfg.t)


def eval_uk(table: MomentTable, cfg: ApproxConfig, x) -> ApproxResult:
    """Evaluate u_k at one point with full SignedLog care.

    Terms are walked by ascending total degree and lexicographic order
    within a degree; the final reduction aligns every term to the largest
    exponent and sums the aligned mantissas with compensated arithmetic.
    Multi-indices whose moment is exactly zero are skipped.
    """
    if table.dim != cfg.dim:
        raise DomainError("table dimension does not match config")
    if cfg.k > table.k_max:
        raise DomainError(
            f"truncation order {cfg.k} exceeds table k_max {table.k_max}"
        )
    pt = _as_point(x, cfg.dim)
    scale = 2.0 * math.sqrt(cfg.t)
    weighted = [
        hermite_weighted_sequence(cfg.k, xi / scale) for xi in pt
    ]
    all_terms: list[SignedLog] = []
    by_degree: dict[int, list[SignedLog]] = {}
    for a in table.indices():
        if a.degree > cfg.k:
            break
        m = table.entries[a]
        if m.sign == 0:
            continue
        term = m * SignedLog.from_log(_term_scale(a.degree, cfg) - a.log_factorial())
        for axis, ai in enumerate(a.components):
            term = term * weighted[axis][ai]
        if term.sign == 0:
            continue
        all_terms.append(term)
        by_degree.setdefault(a.degree, []).append(term)
    value = aligned_sum(all_terms)
    partials = [
        (j, aligned_sum(terms).to_float()) for j, terms in sorted(by_degree.items())
    ]
    return ApproxResult(value=value.to_float(), terms=partials)


def eval_uk_radial_origin(table: MomentTable, cfg: ApproxConfig, r: float) -> float:
    """u_k at radius r for Gaussian data via the Laguerre form.

    For a Gaussian datum (amplitude C, width t0) in dimension d >= 2, the
    even-degree blocks of the expansion collapse radially to

        u_k(r, t) = (4 pi t)^{-d/2} e^{-r^2/4t} (C/2) (4 t0)^{d/2}
            sum_{j even <= k} (-2 t0/t)^{j/2} Gamma((j+d)/2) C(j, d)
            L_{j/2}^{((d-2)/2)}(r^2 / 4t).

    Must agree with :func:`eval_uk` at |x| = r; the two routes share no
    code beyond the special-function layer.
    """
    if not isinstance(table.source, Gaussian):
        raise UnsupportedVariantError(
            "eval_uk_radial_origin needs a table built from Gaussian data"
        )
    if cfg.dim < 2:
        raise DomainError("the radial Laguerre form applies in dim >= 2")
    if table.dim != cfg.dim:
        raise DomainError("table dimension does not match config")
    if cfg.k > table.k_max:
        raise DomainError("truncation order exceeds table k_max")
    if r < 0.0:
        raise DomainError("radius must be >= 0")
    u0 = table.source
    d, t, t0 = cfg.dim, cfg.t, u0.width
    arg = r * r / (4.0 * t)
    log_ratio = math.log(2.0 * t0 / t)
    terms = []
    for j in range(0, cfg.k + 1, 2):
        half = j // 2
        mag = (
            0.5 * j * log_ratio
            + log_gamma((j + d) / 2.0)
            + constant_C(j, d).logmag
        )
        lag = laguerre(half, (d - 2) / 2.0, arg)
        sign = -1 if half % 2 else 1
        terms.append(
            SignedLog.from_log(mag, sign) * SignedLog.from_float(lag)
        )
    series = aligned_sum(terms)
    prefactor = SignedLog.from_log(
        math.log(u0.amplitude / 2.0)
        + 0.5 * d * math.log(4.0 * t0)
        - 0.5 * d * math.log(4.0 * math.pi * t)
        - arg
    )
    return (prefactor * series).to_float()


# ---------------------------------------------------------------------------
# grid evaluation


class SeriesGridEvaluator:
    """Incremental evaluation of u_k over a tensor grid, one degree block at
    a time, so a sweep over k costs the same as the largest single k.

    Coefficients m_alpha/alpha! (4t)^{-(j+d)/2} pi^{-d/2} are assembled in
    log space and exponentiated into doubles, which is safe whenever each
    term fits the double range (true for every supported regime; the
    SignedLog point evaluator stays the overflow-proof reference).
    Supports dim 1 and 2.
    """

    def __init__(
        self,
        table: MomentTable,
        t: float,
        axes: Sequence[np.ndarray],
        k_cap: int | None = None,
    ):
        if table.dim not in (1, 2):
            raise DomainError("grid evaluation supports dim 1 and 2")
        if len(axes) != table.dim:
            raise DomainError("one axis array per dimension is required")
        if t <= 0.0:
            raise DomainError("t must be > 0")
        self.dim = table.dim
        self.t = t
        self.k_cap = table.k_max if k_cap is None else min(k_cap, table.k_max)
        cfg = ApproxConfig(dim=self.dim, k=self.k_cap, t=t)
        scale = 2.0 * math.sqrt(t)
        self._tables = [
            backend.weighted_hermite_table(np.asarray(ax, float) / scale, self.k_cap)
            for ax in axes
        ]
        # degree -> (per-axis index arrays, coefficient array)
        self._blocks: dict[int, tuple] = {}
        per_degree: dict[int, list] = {}
        for a in table.indices():
            if a.degree > self.k_cap:
                break
            m = table.entries[a]
            if m.sign == 0:
                continue
            logmag = m.logmag + _term_scale(a.degree, cfg) - a.log_factorial()
            if logmag > 700.0:
                raise DomainError(
                    "series coefficient exceeds the double range; "
                    "use eval_uk for this regime"
                )
            coeff = m.sign * math.exp(logmag)
            if coeff == 0.0:
                continue
            per_degree.setdefault(a.degree, []).append((a.components, coeff))
        for j, rows in per_degree.items():
            comps = np.array([r[0] for r in rows], dtype=np.int64)
            coeffs = np.array([r[1] for r in rows], dtype=np.float64)
            self._blocks[j] = (comps, coeffs)
        shape = tuple(len(ax) for ax in axes)
        self._field = np.zeros(shape, dtype=np.float64)
        self._built = -1

    def field_up_to(self, k: int) -> np.ndarray:
        """Cumulative field for truncation order k (read-only view)."""
        if k > self.k_cap:
            raise DomainError(f"k={k} exceeds evaluator cap {self.k_cap}")
        if k < self._built:
            raise DomainError("degrees must be requested in ascending order")
        for j in range(self._built + 1, k + 1):
            block = self._blocks.get(j)
            if block is None:
                continue
            comps, coeffs = block
            if self.dim == 1:
                backend.accumulate_series_1d(
                    self._field, self._tables[0], comps[:, 0].copy(), coeffs
                )
            else:
                backend.accumulate_series_2d(
                    self._field,
                    self._tables[0],
                    self._tables[1],
                    comps[:, 0].copy(),
                    comps[:, 1].copy(),
                    coeffs,
                )
        self._built = max(self._built, k)
        return self._field
