"""Adaptive quadrature on the line and half line with explicit tail control.

scipy's QUADPACK wrapper supplies the adaptive Gauss-Kronrod panels; this
module owns the unbounded-domain policy.  Integrals over R or [0, inf) are
accumulated over doubling shells until the newest shell contributes less
than a fixed fraction of the running total, which certifies the discarded
tail for integrands with Gaussian-type decay.
"""

from __future__ import annotations

import math
import warnings
from typing import Callable, Sequence

from scipy.integrate import IntegrationWarning, quad

from .errors import IntegrabilityError

#: A shell must fall below this fraction of the running integral to stop.
TAIL_FRACTION = 1e-14

_ABS_FLOOR = 1e-290


def integrate_interval(
    f: Callable[[float], float],
    a: float,
    b: float,
    breakpoints: Sequence[float] = (),
) -> float:
    """Integral of f over [a, b], splitting at the supplied breakpoints."""
    pts = sorted(p for p in breakpoints if a < p < b)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        value, _ = quad(
            f,
            a,
            b,
            points=pts or None,
            limit=250,
            epsabs=1e-13,
            epsrel=1e-12,
        )
    return value


def integrate_line(
    f: Callable[[float], float],
    initial_extent: float = 8.0,
    breakpoints: Sequence[float] = (),
    max_doublings: int = 40,
) -> float:
    """Integral of f over the whole line.

    Starts from a symmetric interval wide enough to contain every
    breakpoint, then appends doubling shells on both sides until the shell
    contribution is below TAIL_FRACTION of the running total.
    """
    extent = max(initial_extent, *(abs(p) + 1.0 for p in breakpoints)) \
        if breakpoints else initial_extent
    total = integrate_interval(f, -extent, extent, breakpoints)
    return _extend(
        total,
        lambda lo, hi: integrate_interval(f, lo, hi) + integrate_interval(f, -hi, -lo),
        extent,
        max_doublings,
    )


def integrate_halfline(
    f: Callable[[float], float],
    initial_extent: float = 8.0,
    breakpoints: Sequence[float] = (),
    max_doublings: int = 40,
) -> float:
    """Integral of f over [0, inf) with the same doubling-shell policy."""
    extent = max(initial_extent, *(abs(p) + 1.0 for p in breakpoints)) \
        if breakpoints else initial_extent
    total = integrate_interval(f, 0.0, extent, breakpoints)
    return _extend(
        total,
        lambda lo, hi: integrate_interval(f, lo, hi),
        extent,
        max_doublings,
    )


def _extend(total, shell, extent, max_doublings):
    recent: list[float] = []
    for _ in range(max_doublings):
        piece = shell(extent, 2.0 * extent)
        total += piece
        extent *= 2.0
        size = abs(piece)
        if size <= TAIL_FRACTION * abs(total) + _ABS_FLOOR:
            return total
        recent.append(size)
        if len(recent) >= 4 and recent[-1] >= 0.5 * recent[-4]:
            # shells stopped decaying; the tail cannot be certified
            raise IntegrabilityError(
                "shell contributions stopped decaying; integrand tail does "
                "not appear integrable"
            )
    raise IntegrabilityError(
        "tail still above the cutoff after exhausting interval doublings"
    )
