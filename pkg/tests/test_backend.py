"""Parity between the compiled kernels and the pure-python fallback."""

import math
import os
import subprocess
import sys

import numpy as np
import pytest

from heatseries import backend, hermite_weighted
from heatseries import _series_fallback as fallback

try:
    from heatseries import _series as compiled
except ImportError:
    compiled = None

needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled extension not built"
)


def test_backend_name_is_known():
    assert backend.BACKEND_NAME in {"cython", "python"}


def test_hermite_table_matches_point_evaluator():
    ys = np.linspace(-5.0, 5.0, 23)
    table = backend.weighted_hermite_table(ys, 40)
    assert table.shape == (41, 23)
    for n in (0, 1, 7, 40):
        for i in (0, 11, 22):
            want = hermite_weighted(n, float(ys[i])).to_float()
            assert math.isclose(table[n, i], want, rel_tol=1e-12, abs_tol=1e-280)


@needs_compiled
def test_hermite_table_parity():
    ys = np.linspace(-6.0, 6.0, 101)
    nmax = 60
    a = np.empty((nmax + 1, ys.size))
    b = np.empty((nmax + 1, ys.size))
    compiled.weighted_hermite_table(ys, nmax, a)
    fallback.weighted_hermite_table(ys, nmax, b)
    np.testing.assert_allclose(a, b, rtol=1e-13, atol=1e-300)


@needs_compiled
def test_accumulate_1d_parity():
    rng = np.random.default_rng(42)
    ys = np.linspace(-4.0, 4.0, 81)
    table = backend.weighted_hermite_table(ys, 30)
    degrees = np.arange(0, 31, 2, dtype=np.longlong)
    coeffs = rng.normal(size=degrees.size)
    out_a = np.zeros(ys.size)
    out_b = np.zeros(ys.size)
    compiled.accumulate_series_1d(out_a, table, degrees, coeffs)
    fallback.accumulate_series_1d(out_b, table, degrees, coeffs)
    np.testing.assert_allclose(out_a, out_b, rtol=1e-13, atol=1e-16)
    assert np.any(out_a != 0.0)


@needs_compiled
def test_accumulate_2d_parity():
    rng = np.random.default_rng(7)
    a1 = np.linspace(-3.0, 3.0, 19)
    a2 = np.linspace(-2.0, 2.0, 17)
    t1 = backend.weighted_hermite_table(a1, 12)
    t2 = backend.weighted_hermite_table(a2, 12)
    deg1 = np.array([0, 2, 4, 6, 1, 3], dtype=np.longlong)
    deg2 = np.array([0, 2, 0, 4, 1, 5], dtype=np.longlong)
    coeffs = rng.normal(size=deg1.size)
    out_a = np.zeros((a1.size, a2.size))
    out_b = np.zeros((a1.size, a2.size))
    compiled.accumulate_series_2d(out_a, t1, t2, deg1, deg2, coeffs)
    fallback.accumulate_series_2d(out_b, t1, t2, deg1, deg2, coeffs)
    np.testing.assert_allclose(out_a, out_b, rtol=1e-13, atol=1e-16)


def test_max_abs_diff_against_numpy():
    rng = np.random.default_rng(3)
    a = rng.normal(size=300)
    b = a + rng.normal(scale=1e-8, size=300)
    got = backend.max_abs_diff(a, b)
    assert got == pytest.approx(float(np.max(np.abs(a - b))), rel=1e-15)
    assert backend.max_abs_diff(a, a) == 0.0


def test_env_override_forces_fallback():
    env = dict(os.environ, HEATSERIES_BACKEND="python")
    out = subprocess.run(
        [sys.executable, "-c", "from heatseries import backend; print(backend.BACKEND_NAME)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


@needs_compiled
def test_default_import_prefers_compiled():
    env = {k: v for k, v in os.environ.items() if k != "HEATSERIES_BACKEND"}
    out = subprocess.run(
        [sys.executable, "-c", "from heatseries import backend; print(backend.BACKEND_NAME)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "cython"
