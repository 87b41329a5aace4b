"""Shared fixtures.

The expensive objects (moment tables, measured error curves) are built once
per session and cached by (dim, t); both the module tests and the
acceptance gate draw from the same cache so the full suite stays fast.
"""

import pytest

from heatseries import Gaussian, build_moment_table, default_grid, error_curve

UNIT_GAUSSIAN = {d: Gaussian(amplitude=1.0, width=1.0, dim=d) for d in (1, 2, 3)}


@pytest.fixture(scope="session")
def moment_table():
    """moment_table(dim) -> MomentTable of the unit Gaussian, degree >= 82."""
    cache = {}

    def get(dim: int):
        if dim not in cache:
            cache[dim] = build_moment_table(UNIT_GAUSSIAN[dim], 82)
        return cache[dim]

    return get


@pytest.fixture(scope="session")
def gaussian_curve(moment_table):
    """gaussian_curve(dim, t) -> measured ErrorCurve for even k <= 60."""
    cache = {}

    def get(dim: int, t: float):
        key = (dim, float(t))
        if key not in cache:
            grid = default_grid(dim, t, 1.0, points=801)
            cache[key] = error_curve(
                UNIT_GAUSSIAN[dim], moment_table(dim), dim, t, 60, grid
            )
        return cache[key]

    return get
