"""Distributional Taylor decomposition of an integrable function.

A function f with enough decay splits, in the sense of distributions, as

    f = sum_{j <= k} ((-1)^j / j!) m_j(f) (d/dx)^j delta
        + (d/dx)^{k+1} F_{k+1},

where m_j are the moments and the remainder density is

    F_a(x) = (-1)^a (x^a / a!) a integral_1^inf (1 - 1/s)^{a-1} s^{a-1}
             f(x s) ds

(one dimension, a = k+1).  Pairing both sides with a smooth test function
phi gives the identity checked by decomposition_residual:

    integral f phi = sum_{j <= k} m_j(f) phi^{(j)}(0) / j!
        + (-1)^{k+1} integral F_{k+1} phi^{(k+1)},

the (-1)^{k+1} coming from moving the k+1 derivatives onto phi.  The
remainder obeys ||F_a||_1 <= ||x^a f||_1 / a!.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import DomainError
from .quadrature import integrate_interval, integrate_line
from .specfun import hermite


@dataclass(frozen=True)
class RemainderFunction:
    """The order-a remainder density F_a for a fixed f, callable in x."""

    func: Callable[[float], float]
    alpha: int

    def __post_init__(self):
        if self.alpha < 1:
            raise DomainError("remainder order must be >= 1")

    def __call__(self, x: float) -> float:
        return remainder(self.func, self.alpha, x)


def remainder(f: Callable[[float], float], alpha: int, x: float) -> float:
    """Evaluate F_alpha(x).

    The defining integral over t in (0, 1] is taken in the substituted
    variable s = 1/t, which moves the singular endpoint to infinity where
    f's decay controls it; the s-integral is truncated adaptively by
    doubling until the increment is negligible.
    """
    if alpha < 1:
        raise DomainError("remainder order must be >= 1")
    if x == 0.0:
        return 0.0
    a = alpha
    k = a - 1

    def integrand(s: float) -> float:
        return (1.0 - 1.0 / s) ** k * s ** (a - 1) * f(x * s)

    total = 0.0
    lo, hi = 1.0, 2.0
    for _ in range(60):
        piece = integrate_interval(integrand, lo, hi)
        total += piece
        if abs(piece) <= 1e-16 * abs(total) + 1e-300:
            break
        lo, hi = hi, 2.0 * hi
    sign = -1.0 if a % 2 else 1.0
    return sign * (x**a / math.exp(_log_factorial(a))) * a * total


def _log_factorial(n: int) -> float:
    from .specfun import log_factorial

    return log_factorial(n)


def remainder_l1_norm(f: Callable[[float], float], alpha: int) -> float:
    """||F_alpha||_1 by outer quadrature over x (the inner integral is the
    remainder evaluation itself)."""
    if alpha < 1:
        raise DomainError("remainder order must be >= 1")
    return integrate_line(
        lambda x: abs(remainder(f, alpha, x)), breakpoints=(0.0,)
    )


@dataclass(frozen=True)
class TestFunction:
    """A smooth test function with analytically supplied derivatives.

    ``deriv(n, x)`` returns the n-th derivative; ``max_order`` bounds n.
    """

    deriv: Callable[[int, float], float]
    max_order: int

    def __call__(self, x: float) -> float:
        return self.deriv(0, x)


def gaussian_test_function(a: float = 1.0, max_order: int = 12) -> TestFunction:
    """phi(x) = e^{-a x^2}; derivatives via the Hermite closed form
    d^n/dx^n e^{-y^2} = (-1)^n H_n(y) e^{-y^2} with y = sqrt(a) x."""
    if a <= 0.0:
        raise DomainError("Gaussian test function needs a > 0")
    root = math.sqrt(a)

    def deriv(n: int, x: float) -> float:
        y = root * x
        sign = -1.0 if n % 2 else 1.0
        return sign * root**n * hermite(n, y) * math.exp(-y * y)

    return TestFunction(deriv=deriv, max_order=max_order)


def poly_gaussian_test_function(
    coeffs: Sequence[float], a: float = 1.0, max_order: int = 12
) -> TestFunction:
    """phi(x) = p(x) e^{-a x^2} with p given by ``coeffs`` (ascending powers).

    Derivatives come from the Leibniz rule; polynomial derivatives are
    exact, the Gaussian factor reuses the Hermite closed form.
    """
    if a <= 0.0:
        raise DomainError("test function needs a > 0")
    coeffs = tuple(float(c) for c in coeffs)
    gauss = gaussian_test_function(a, max_order)

    def poly_deriv(m: int, x: float) -> float:
        total = 0.0
        for power in range(m, len(coeffs)):
            fall = 1.0
            for i in range(m):
                fall *= power - i
            total += coeffs[power] * fall * x ** (power - m)
        return total

    def deriv(n: int, x: float) -> float:
        total = 0.0
        binom = 1.0
        for m in range(n + 1):
            if m > 0:
                binom = binom * (n - m + 1) / m
            total += binom * poly_deriv(m, x) * gauss.deriv(n - m, x)
        return total

    return TestFunction(deriv=deriv, max_order=max_order)


def decomposition_residual(
    f: Callable[[float], float],
    k: int,
    phi: TestFunction,
    breakpoints: Sequence[float] = (),
) -> float:
    """|<f, phi> - Taylor terms - remainder pairing|; zero up to quadrature
    error when the decomposition holds.

    Every integral here is independent quadrature: moments, the f-phi
    pairing, and the remainder pairing share no closed forms.
    """
    if k < 0:
        raise DomainError("k must be >= 0")
    if phi.max_order < k + 1:
        raise DomainError("test function derivatives do not reach order k+1")
    lhs = integrate_line(lambda x: f(x) * phi.deriv(0, x), breakpoints=breakpoints)
    taylor = 0.0
    for j in range(k + 1):
        moment = integrate_line(
            lambda x, j=j: x**j * f(x), breakpoints=breakpoints
        )
        taylor += moment * phi.deriv(j, 0.0) / math.factorial(j)
    pair_sign = -1.0 if (k + 1) % 2 else 1.0
    pairing = pair_sign * integrate_line(
        lambda x: remainder(f, k + 1, x) * phi.deriv(k + 1, x),
        breakpoints=(0.0,),
    )
    return abs(lhs - taylor - pairing)
