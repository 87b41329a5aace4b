"""Pure numpy implementations of the hot grid kernels.

Signatures mirror the compiled module ``heatseries._series`` exactly; the
backend layer picks whichever is importable.  All functions fill or update
caller-allocated arrays in place.
"""

import numpy as np


def weighted_hermite_table(y, nmax, out):
    """Fill out[n, i] = H_n(y[i]) * exp(-y[i]**2) for n = 0..nmax."""
    w = np.exp(-y * y)
    out[0] = w
    if nmax >= 1:
        np.multiply(2.0 * y, w, out=out[1])
    for n in range(1, nmax):
        out[n + 1] = 2.0 * y * out[n] - (2.0 * n) * out[n - 1]


def accumulate_series_1d(out, table, degrees, coeffs):
    """out[i] += sum_m coeffs[m] * table[degrees[m], i]."""
    for deg, c in zip(degrees, coeffs):
        out += c * table[deg]


def accumulate_series_2d(out, t1, t2, deg1, deg2, coeffs):
    """out[i, j] += sum_m coeffs[m] * t1[deg1[m], i] * t2[deg2[m], j]."""
    tmp = np.empty_like(out)
    for d1, d2, c in zip(deg1, deg2, coeffs):
        np.multiply.outer(c * t1[d1], t2[d2], out=tmp)
        out += tmp


def max_abs_diff(a, b):
    """Largest absolute elementwise difference of two flat arrays."""
    return float(np.max(np.abs(a - b)))
