import math

import pytest

from heatseries import (
    DomainError,
    hermite,
    hermite_weighted,
    hermite_weighted_sequence,
    laguerre,
    log_factorial,
    log_gamma,
)
from heatseries.specfun import RECURRENCE_DEPTH_CAP


# --- Hermite -------------------------------------------------------------

@pytest.mark.parametrize(
    "n,x,expected",
    [
        (0, 1.7, 1.0),
        (1, 0.5, 1.0),        # 2x
        (2, 0.0, -2.0),       # 4x^2 - 2
        (3, 1.0, -4.0),       # 8x^3 - 12x
        (4, 0.0, 12.0),
    ],
)
def test_hermite_low_orders(n, x, expected):
    assert hermite(n, x) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("n", range(0, 12))
@pytest.mark.parametrize("x", [-2.3, -0.7, 0.4, 1.9])
def test_hermite_parity(n, x):
    sign = (-1.0) ** n
    assert hermite(n, -x) == pytest.approx(sign * hermite(n, x), rel=1e-12)


@pytest.mark.parametrize("n", range(1, 12))
def test_hermite_derivative_identity(n):
    # H_n'(x) = 2 n H_{n-1}(x), via central differences
    x, h = 0.83, 1e-6
    fd = (hermite(n, x + h) - hermite(n, x - h)) / (2.0 * h)
    assert fd == pytest.approx(2.0 * n * hermite(n - 1, x), rel=1e-7)


def test_weighted_hermite_frozen_value():
    # H_10(3) = -3093984 exactly; times e^{-9}
    got = hermite_weighted(10, 3.0).to_float()
    assert got == pytest.approx(-381.82795928732116, rel=1e-13)
    assert hermite(10, 3.0) == -3093984.0


@pytest.mark.parametrize("n", [0, 1, 5, 17, 25])
@pytest.mark.parametrize("x", [-3.0, -0.4, 0.0, 1.2, 4.5])
def test_weighted_matches_naive_product(n, x):
    naive = hermite(n, x) * math.exp(-x * x)
    got = hermite_weighted(n, x).to_float()
    assert math.isclose(got, naive, rel_tol=1e-11, abs_tol=1e-280)


def test_weighted_survives_extreme_order():
    # naive H_n overflows long before n = 400; the weighted value stays
    # finite in log form
    v = hermite_weighted(400, 12.0)
    assert v.sign != 0
    assert math.isfinite(v.logmag)
    assert not math.isfinite(hermite(400, 12.0))  # inf - inf -> nan


def test_weighted_sequence_consistent_with_single_calls():
    xs = [-2.5, 0.0, 0.3, 3.8]
    for x in xs:
        seq = hermite_weighted_sequence(60, x)
        assert len(seq) == 61
        for n in (0, 1, 7, 33, 60):
            single = hermite_weighted(n, x)
            assert seq[n].sign == single.sign
            if single.sign != 0:
                assert seq[n].logmag == pytest.approx(single.logmag, abs=1e-10)


def test_depth_cap_enforced():
    hermite(RECURRENCE_DEPTH_CAP, 0.5)  # at the cap: fine
    for call in (
        lambda: hermite(RECURRENCE_DEPTH_CAP + 1, 0.5),
        lambda: hermite_weighted(RECURRENCE_DEPTH_CAP + 1, 0.5),
        lambda: hermite_weighted_sequence(RECURRENCE_DEPTH_CAP + 1, 0.5),
        lambda: laguerre(RECURRENCE_DEPTH_CAP + 1, 0.0, 0.5),
    ):
        with pytest.raises(DomainError):
            call()
    with pytest.raises(DomainError):
        hermite(-1, 0.5)


# --- log-Gamma -----------------------------------------------------------

@pytest.mark.parametrize(
    "z",
    [0.5, 1.0, 1.5, 2.0, 2.5, 3.7, 7.3, 10.0, 31.5, 100.1, 171.5, 300.0],
)
def test_log_gamma_against_lgamma(z):
    # math.lgamma is an independent implementation
    assert math.isclose(log_gamma(z), math.lgamma(z), rel_tol=1e-12, abs_tol=1e-12)


def test_log_gamma_half_integer_closed_form():
    # Gamma(1/2) = sqrt(pi)
    assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-14)


@pytest.mark.parametrize("z", [0.3, 1.1, 4.6, 40.2])
def test_log_gamma_duplication(z):
    # Legendre: lgamma(2z) = lgamma(z) + lgamma(z + 1/2) + (2z-1) ln 2 - ln(pi)/2
    left = log_gamma(2.0 * z)
    right = (
        log_gamma(z)
        + log_gamma(z + 0.5)
        + (2.0 * z - 1.0) * math.log(2.0)
        - 0.5 * math.log(math.pi)
    )
    assert math.isclose(left, right, rel_tol=1e-12, abs_tol=1e-11)


def test_log_gamma_domain():
    with pytest.raises(DomainError):
        log_gamma(0.0)
    with pytest.raises(DomainError):
        log_gamma(-2.5)


def test_log_factorial():
    assert log_factorial(0) == pytest.approx(0.0, abs=1e-14)
    assert log_factorial(10) == pytest.approx(math.log(3628800.0), rel=1e-14)
    with pytest.raises(DomainError):
        log_factorial(-1)


# --- Laguerre ------------------------------------------------------------

def test_laguerre_low_orders():
    assert laguerre(0, 0.3, 2.0) == 1.0
    # L_1^{(a)}(x) = 1 + a - x
    assert laguerre(1, 0.25, 0.5) == pytest.approx(0.75, rel=1e-14)
    # frozen: L_2^{(-1/2)}(0) = (1/2)(3/2)/2 = 0.375
    assert laguerre(2, -0.5, 0.0) == pytest.approx(0.375, rel=1e-14)


def test_laguerre_domain():
    with pytest.raises(DomainError):
        laguerre(2, -1.0, 0.3)


@pytest.mark.parametrize("m", range(0, 9))
@pytest.mark.parametrize("x", [0.0, 0.6, 1.7])
def test_even_hermite_laguerre_link(m, x):
    # H_{2m}(x) = (-1)^m 2^{2m} m! L_m^{(-1/2)}(x^2)
    right = (-1.0) ** m * 4.0**m * math.factorial(m) * laguerre(m, -0.5, x * x)
    assert hermite(2 * m, x) == pytest.approx(right, rel=1e-11, abs=1e-9)
