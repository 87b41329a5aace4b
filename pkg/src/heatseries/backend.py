"""Numeric backend selection.

The compiled Cython kernels are used when the extension imported cleanly;
otherwise the numpy fallback takes over with identical semantics.  Set
``HEATSERIES_BACKEND=python`` to force the fallback (the benchmark and the
parity tests do this).
"""

from __future__ import annotations

import os

import numpy as np

from . import _series_fallback as _py

_impl = _py
BACKEND_NAME = "python"

if os.environ.get("HEATSERIES_BACKEND", "").lower() not in {"python", "fallback"}:
    try:
        from . import _series as _cy
    except ImportError:
        pass
    else:
        _impl = _cy
        BACKEND_NAME = "cython"


def weighted_hermite_table(y, nmax: int) -> np.ndarray:
    """Table T[n, i] = H_n(y[i]) * exp(-y[i]**2), n = 0..nmax."""
    y = np.ascontiguousarray(y, dtype=np.float64)
    out = np.empty((nmax + 1, y.shape[0]), dtype=np.float64)
    _impl.weighted_hermite_table(y, nmax, out)
    return out


def accumulate_series_1d(out, table, degrees, coeffs) -> None:
    _impl.accumulate_series_1d(
        out,
        table,
        np.ascontiguousarray(degrees, dtype=np.longlong),
        np.ascontiguousarray(coeffs, dtype=np.float64),
    )


def accumulate_series_2d(out, t1, t2, deg1, deg2, coeffs) -> None:
    _impl.accumulate_series_2d(
        out,
        t1,
        t2,
        np.ascontiguousarray(deg1, dtype=np.longlong),
        np.ascontiguousarray(deg2, dtype=np.longlong),
        np.ascontiguousarray(coeffs, dtype=np.float64),
    )


def max_abs_diff(a, b) -> float:
    a = np.ascontiguousarray(a, dtype=np.float64).ravel()
    b = np.ascontiguousarray(b, dtype=np.float64).ravel()
    return float(_impl.max_abs_diff(a, b))
