"""Initial data, multi-indices, and moment tables.

A moment table holds the signed moments ``integral of x^alpha * u0`` for all
multi-indices up to a degree cap, stored as SignedLog scalars.  Gaussian
data gets closed forms, radial data reduces to one half-line integral per
total degree, and generic one-dimensional data falls back to line
quadrature.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence, Union

from .errors import DomainError, IntegrabilityError, UnsupportedVariantError
from .quadrature import integrate_halfline, integrate_line
from .signedlog import ZERO, SignedLog, aligned_sum
from .specfun import log_factorial, log_gamma

_LOG_PI = math.log(math.pi)
_LOG_2PI = math.log(2.0 * math.pi)
_LOG2 = math.log(2.0)


# ---------------------------------------------------------------------------
# initial data


@dataclass(frozen=True)
class Gaussian:
    """u0(x) = amplitude * exp(-|x|^2 / (4 * width))."""

    amplitude: float
    width: float
    dim: int = 1

    def __post_init__(self):
        if self.amplitude <= 0.0:
            raise DomainError("Gaussian amplitude must be positive")
        if self.width <= 0.0:
            raise DomainError("Gaussian width must be positive")
        if self.dim < 1:
            raise DomainError("dimension must be >= 1")

    def __call__(self, r: float) -> float:
        return self.amplitude * math.exp(-r * r / (4.0 * self.width))


@dataclass(frozen=True)
class Radial:
    """Radially symmetric u0(x) = profile(|x|) in dimension >= 2."""

    profile: Callable[[float], float]
    dim: int

    def __post_init__(self):
        if self.dim < 2:
            raise DomainError("Radial data requires dim >= 2; use Generic1D")


@dataclass(frozen=True)
class Generic1D:
    """One-dimensional u0 given as a callable with integrable decay.

    ``breakpoints`` lists discontinuities or kinks handed to the quadrature.
    """

    func: Callable[[float], float]
    breakpoints: tuple[float, ...] = ()
    dim: int = 1


InitialDatum = Union[Gaussian, Radial, Generic1D]


def datum_dim(u0: InitialDatum) -> int:
    return u0.dim


# ---------------------------------------------------------------------------
# multi-indices


@dataclass(frozen=True)
class MultiIndex:
    """Nonnegative integer exponents, one per coordinate."""

    components: tuple[int, ...]
    degree: int = field(init=False, compare=False)

    def __post_init__(self):
        comps = tuple(int(c) for c in self.components)
        if not comps:
            raise DomainError("multi-index needs at least one component")
        if any(c < 0 for c in comps):
            raise DomainError(f"negative multi-index component in {comps}")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "degree", sum(comps))

    @staticmethod
    def of(value, dim: int | None = None) -> "MultiIndex":
        if isinstance(value, MultiIndex):
            return value
        if isinstance(value, int):
            return MultiIndex((value,) * 1 if dim in (None, 1) else _axis(value, dim))
        return MultiIndex(tuple(value))

    @property
    def dim(self) -> int:
        return len(self.components)

    @property
    def all_even(self) -> bool:
        return all(c % 2 == 0 for c in self.components)

    def log_factorial(self) -> float:
        """ln(alpha!) = sum of ln(component!)."""
        return math.fsum(log_factorial(c) for c in self.components)

    def __iter__(self):
        return iter(self.components)


def _axis(n: int, dim: int) -> tuple[int, ...]:
    return (n,) + (0,) * (dim - 1)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ways to write ``total`` as an ordered sum of ``parts`` nonnegative
    integers, in ascending lexicographic order.  Iterative odometer, no
    recursion."""
    if parts < 1:
        raise DomainError("parts must be >= 1")
    if total < 0:
        raise DomainError("total must be >= 0")
    if parts == 1:
        yield (total,)
        return
    comp = [0] * parts
    comp[-1] = total
    while True:
        yield tuple(comp)
        # move one unit of weight onto the rightmost index that has weight
        # strictly to its right, zeroing everything after it
        right_sum = 0
        pivot = -1
        for i in range(parts - 1, 0, -1):
            right_sum += comp[i]
            if right_sum > 0:
                pivot = i - 1
                break
        if pivot < 0:
            return
        comp[pivot] += 1
        for i in range(pivot + 1, parts):
            comp[i] = 0
        comp[-1] = right_sum - 1


def multi_indices_of_degree(degree: int, dim: int) -> Iterator[MultiIndex]:
    for comp in compositions(degree, dim):
        yield MultiIndex(comp)


def multi_indices_up_to(k_max: int, dim: int) -> Iterator[MultiIndex]:
    """Degrees ascending, lexicographic within a degree."""
    for j in range(k_max + 1):
        yield from multi_indices_of_degree(j, dim)


# ---------------------------------------------------------------------------
# moment operations


def gaussian_moment(alpha, amplitude: float, width: float) -> SignedLog:
    """Signed moment of a Gaussian datum.

    Odd components force exact zero; otherwise
    ``C * (4 t0)^{(|alpha|+d)/2} * prod Gamma((alpha_i + 1)/2)``.
    """
    a = MultiIndex.of(alpha)
    if amplitude <= 0.0 or width <= 0.0:
        raise DomainError("gaussian_moment requires positive amplitude and width")
    if not a.all_even:
        return ZERO
    return gaussian_abs_moment(a, amplitude, width)


def gaussian_abs_moment(alpha, amplitude: float, width: float) -> SignedLog:
    """L1 norm of x^alpha times a Gaussian datum (no parity shortcut)."""
    a = MultiIndex.of(alpha)
    if amplitude <= 0.0 or width <= 0.0:
        raise DomainError("gaussian_abs_moment requires positive amplitude and width")
    d = a.dim
    logmag = (
        math.log(amplitude)
        + 0.5 * (a.degree + d) * math.log(4.0 * width)
        + math.fsum(log_gamma((c + 1) / 2.0) for c in a.components)
    )
    return SignedLog(1, logmag)


def constant_C(j: int, dim: int) -> SignedLog:
    """Angular constant relating the order-j radial integral of a radial
    datum to its multi-index moments of total degree j (j even).

    Even dim:  (2 pi)^{d/2} / (2^{(j+d-2)/2} Gamma((j+d)/2))
    Odd dim:   (2 pi)^{(d-1)/2} 2^{(j+d+1)/2} Gamma((j+d+1)/2) / Gamma(j+d)
    """
    if j < 0 or j % 2 != 0:
        raise DomainError(f"constant_C needs even j >= 0, got {j}")
    if dim < 1:
        raise DomainError("dimension must be >= 1")
    if dim % 2 == 0:
        logmag = (
            0.5 * dim * _LOG_2PI
            - 0.5 * (j + dim - 2) * _LOG2
            - log_gamma((j + dim) / 2.0)
        )
    else:
        logmag = (
            0.5 * (dim - 1) * _LOG_2PI
            + 0.5 * (j + dim + 1) * _LOG2
            + log_gamma((j + dim + 1) / 2.0)
            - log_gamma(float(j + dim))
        )
    return SignedLog(1, logmag)


def radial_moment(
    alpha,
    profile: Callable[[float], float],
    dim: int,
    _radial_integral: float | None = None,
) -> SignedLog:
    """Moment of a radial datum via one half-line integral.

    For even alpha,

        integral x^alpha u0 = alpha! * C(|alpha|, d)
            / (2^{|alpha|/2} prod (alpha_i/2)!)
            * integral_0^inf r^{|alpha|+d-1} profile(r) dr

    and odd components give exact zero.  ``_radial_integral`` lets a table
    builder reuse the degree-j radial integral across multi-indices.
    """
    a = MultiIndex.of(alpha)
    if a.dim != dim:
        raise DomainError("multi-index dimension does not match dim")
    if not a.all_even:
        return ZERO
    j = a.degree
    if _radial_integral is None:
        _radial_integral = _radial_power_integral(profile, j + dim - 1, a)
    combinatorial = (
        a.log_factorial()
        - 0.5 * j * _LOG2
        - math.fsum(log_factorial(c // 2) for c in a.components)
    )
    return (
        SignedLog(1, combinatorial)
        * constant_C(j, dim)
        * SignedLog.from_float(_radial_integral)
    )


def radial_abs_moment(
    alpha,
    profile: Callable[[float], float],
    dim: int,
    _radial_integral: float | None = None,
) -> SignedLog:
    """L1 norm of x^alpha times |profile(|x|)| for any parity of alpha.

    Uses the surface-measure identity
    ``integral_{S^{d-1}} prod |w_i|^{a_i} dw
    = 2 prod Gamma((a_i+1)/2) / Gamma((|a|+d)/2)``.
    """
    a = MultiIndex.of(alpha)
    if a.dim != dim:
        raise DomainError("multi-index dimension does not match dim")
    j = a.degree
    if _radial_integral is None:
        _radial_integral = _radial_power_integral(
            lambda r: abs(profile(r)), j + dim - 1, a
        )
    angular = (
        _LOG2
        + math.fsum(log_gamma((c + 1) / 2.0) for c in a.components)
        - log_gamma((j + dim) / 2.0)
    )
    return SignedLog(1, angular) * SignedLog.from_float(_radial_integral)


def _radial_power_integral(profile, power: int, alpha: MultiIndex) -> float:
    try:
        return integrate_halfline(lambda r: r**power * profile(r))
    except IntegrabilityError as exc:
        raise IntegrabilityError(str(exc), alpha=alpha) from exc


def generic_moment_1d(
    alpha,
    func: Callable[[float], float],
    breakpoints: Sequence[float] = (),
) -> SignedLog:
    """Signed moment of a one-dimensional datum by line quadrature."""
    a = MultiIndex.of(alpha)
    if a.dim != 1:
        raise DomainError("generic_moment_1d is one-dimensional")
    n = a.degree
    try:
        value = integrate_line(lambda x: x**n * func(x), breakpoints=breakpoints)
    except IntegrabilityError as exc:
        raise IntegrabilityError(str(exc), alpha=a) from exc
    return SignedLog.from_float(value)


def generic_abs_moment_1d(
    alpha,
    func: Callable[[float], float],
    breakpoints: Sequence[float] = (),
) -> SignedLog:
    a = MultiIndex.of(alpha)
    if a.dim != 1:
        raise DomainError("generic_abs_moment_1d is one-dimensional")
    n = a.degree
    try:
        value = integrate_line(
            lambda x: abs(x**n * func(x)), breakpoints=breakpoints
        )
    except IntegrabilityError as exc:
        raise IntegrabilityError(str(exc), alpha=a) from exc
    return SignedLog.from_float(value)


def abs_moment(u0: InitialDatum, alpha) -> SignedLog:
    """Dispatch ``|| x^alpha u0 ||_{L1}`` on the datum variant."""
    a = MultiIndex.of(alpha)
    if isinstance(u0, Gaussian):
        return gaussian_abs_moment(a, u0.amplitude, u0.width)
    if isinstance(u0, Radial):
        return radial_abs_moment(a, u0.profile, u0.dim)
    if isinstance(u0, Generic1D):
        return generic_abs_moment_1d(a, u0.func, u0.breakpoints)
    raise UnsupportedVariantError(f"unknown initial-datum variant {type(u0)!r}")


# ---------------------------------------------------------------------------
# moment tables


@dataclass
class MomentTable:
    """Signed moments for every multi-index with degree <= k_max."""

    dim: int
    k_max: int
    entries: dict[MultiIndex, SignedLog]
    source: InitialDatum | None = None

    def moment(self, alpha) -> SignedLog:
        a = MultiIndex.of(alpha)
        try:
            return self.entries[a]
        except KeyError:
            raise DomainError(
                f"multi-index {a.components} outside table "
                f"(dim {self.dim}, k_max {self.k_max})"
            ) from None

    def indices(self) -> Iterator[MultiIndex]:
        """Degrees ascending, lexicographic within a degree."""
        return multi_indices_up_to(self.k_max, self.dim)

    def to_json(self) -> str:
        from .serial import f17

        rows = []
        for a in self.indices():
            m = self.entries[a]
            comps = ",".join(str(c) for c in a.components)
            rows.append(
                '{"alpha":[%s],"sign":%d,"logmag":%s}'
                % (comps, m.sign, f17(m.logmag if m.sign != 0 else 0.0))
            )
        return (
            '{"dim":%d,"kmax":%d,"entries":[%s]}'
            % (self.dim, self.k_max, ",".join(rows))
        )

    @classmethod
    def from_json(cls, text: str) -> "MomentTable":
        raw = json.loads(text)
        entries = {}
        for row in raw["entries"]:
            a = MultiIndex(tuple(row["alpha"]))
            sign = int(row["sign"])
            entries[a] = (
                ZERO if sign == 0 else SignedLog(sign, float(row["logmag"]))
            )
        return cls(dim=int(raw["dim"]), k_max=int(raw["kmax"]), entries=entries)


def build_moment_table(u0: InitialDatum, k_max: int) -> MomentTable:
    """Moments of u0 for every |alpha| <= k_max.

    Radial data computes one half-line integral per even total degree and
    reuses it across that degree's multi-indices.
    """
    if k_max < 0:
        raise DomainError("k_max must be >= 0")
    d = datum_dim(u0)
    entries: dict[MultiIndex, SignedLog] = {}
    if isinstance(u0, Gaussian):
        for a in multi_indices_up_to(k_max, d):
            entries[a] = gaussian_moment(a, u0.amplitude, u0.width)
    elif isinstance(u0, Radial):
        radial_cache: dict[int, float] = {}
        for a in multi_indices_up_to(k_max, d):
            if not a.all_even:
                entries[a] = ZERO
                continue
            j = a.degree
            if j not in radial_cache:
                radial_cache[j] = _radial_power_integral(
                    u0.profile, j + d - 1, a
                )
            entries[a] = radial_moment(
                a, u0.profile, d, _radial_integral=radial_cache[j]
            )
    elif isinstance(u0, Generic1D):
        for a in multi_indices_up_to(k_max, 1):
            entries[a] = generic_moment_1d(a, u0.func, u0.breakpoints)
    else:
        raise UnsupportedVariantError(f"unknown initial-datum variant {type(u0)!r}")
    return MomentTable(dim=d, k_max=k_max, entries=entries, source=u0)


def moments_at_time(table: MomentTable, t: float) -> MomentTable:
    """Moments of the heat evolution u(., t) from the initial moments.

    Under the heat flow, d/dt m_alpha = sum_i alpha_i (alpha_i - 1)
    m_{alpha - 2 e_i}, a lower-triangular linear system in total degree, so
    each evolved moment is a polynomial in t with coefficients assembled
    here by integrating the system degree by degree.
    """
    if t < 0.0:
        raise DomainError("moments_at_time requires t >= 0")
    d = table.dim
    polys: dict[MultiIndex, list[SignedLog]] = {}
    for a in table.indices():
        poly = [table.entries[a]]
        # derivative contribution from each axis, two degrees down
        sources = []
        for i, c in enumerate(a.components):
            if c >= 2:
                lower = MultiIndex(
                    a.components[:i] + (c - 2,) + a.components[i + 1 :]
                )
                sources.append((float(c * (c - 1)), polys[lower]))
        if sources:
            depth = max(len(p) for _, p in sources)
            for m in range(depth):
                terms = [
                    SignedLog.from_float(w) * p[m]
                    for w, p in sources
                    if m < len(p)
                ]
                # integrate t^m -> t^{m+1} / (m+1)
                coeff = aligned_sum(terms) * SignedLog.from_float(1.0 / (m + 1.0))
                poly.append(coeff)
        polys[a] = poly
    t_log = SignedLog.from_float(t)
    entries = {}
    for a, poly in polys.items():
        if t == 0.0:
            entries[a] = poly[0]
        else:
            entries[a] = aligned_sum(c * t_log**m for m, c in enumerate(poly))
    return MomentTable(dim=d, k_max=table.k_max, entries=entries, source=None)
