"""Timing comparison of the compiled series kernels vs the numpy fallback.

Run directly:  python benchmarks/bench_backends.py [--points N] [--kmax K]

Both code paths are imported explicitly (ignoring the import-time backend
choice), timed on the same inputs, and checked for agreement before the
numbers are printed, so a silently broken extension can't win.
"""

from __future__ import annotations

import argparse
import importlib
import math
import time

import numpy as np

from heatseries import Gaussian, build_moment_table
from heatseries import _series_fallback as fallback
from heatseries.kernel_approx import _term_scale, ApproxConfig
from heatseries.moments import multi_indices_up_to


def _load_compiled():
    try:
        return importlib.import_module("heatseries._series")
    except ImportError:
        return None


def _series_inputs(points: int, kmax: int, t: float):
    table = build_moment_table(Gaussian(amplitude=1.0, width=1.0, dim=1), kmax)
    y = np.linspace(-4.0, 4.0, points)
    degrees, coeffs = [], []
    cfg = ApproxConfig(dim=1, k=kmax, t=t)
    for a in multi_indices_up_to(kmax, 1):
        m = table.entries[a]
        if m.sign == 0:
            continue
        degrees.append(a.components[0])
        coeffs.append(
            m.sign * math.exp(m.logmag + _term_scale(a.degree, cfg) - a.log_factorial())
        )
    return y, np.asarray(degrees, dtype=np.longlong), np.asarray(coeffs)


def _time(fn, repeats: int = 7) -> float:
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=4001)
    parser.add_argument("--kmax", type=int, default=60)
    args = parser.parse_args()

    compiled = _load_compiled()
    if compiled is None:
        print("compiled extension not available; nothing to compare")
        return 0

    y, degrees, coeffs = _series_inputs(args.points, args.kmax, t=2.0)
    nmax = int(degrees.max())

    results = {}
    for name, mod in (("cython", compiled), ("python", fallback)):
        table = np.empty((nmax + 1, y.size))
        mod.weighted_hermite_table(y, nmax, table)
        out = np.zeros(y.size)
        mod.accumulate_series_1d(out, table, degrees, coeffs)
        results[name] = (table, out)
        t_table = _time(lambda: mod.weighted_hermite_table(y, nmax, table))
        t_series = _time(
            lambda: mod.accumulate_series_1d(np.zeros(y.size), table, degrees, coeffs)
        )
        print(
            f"{name:>7}: weighted_hermite_table {t_table * 1e3:8.3f} ms   "
            f"accumulate_series_1d {t_series * 1e3:8.3f} ms"
        )

    table_diff = float(np.max(np.abs(results["cython"][0] - results["python"][0])))
    out_diff = float(np.max(np.abs(results["cython"][1] - results["python"][1])))
    print(f"agreement: table {table_diff:.3e}   series {out_diff:.3e}")
    if table_diff > 1e-12 or out_diff > 1e-12:
        print("BACKEND MISMATCH")
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
