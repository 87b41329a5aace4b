"""Sign/log-magnitude arithmetic: algebraic laws and float round-trips."""

import math

import pytest
from hypothesis import given, strategies as st

from heatseries import ONE, ZERO, SignedLog, aligned_sum

finite = st.floats(
    min_value=-1e12,
    max_value=1e12,
    allow_nan=False,
    allow_infinity=False,
).filter(lambda x: x == 0.0 or abs(x) > 1e-12)


def close(a: float, b: float, rel: float = 1e-12) -> bool:
    return math.isclose(a, b, rel_tol=rel, abs_tol=1e-300)


@given(finite)
def test_roundtrip(x):
    # exp(log x) costs about |log x| * eps relative
    assert close(SignedLog.from_float(x).to_float(), x, rel=1e-13)


def test_zero_and_one():
    assert ZERO.is_zero
    assert ZERO.to_float() == 0.0
    assert ONE.to_float() == 1.0
    assert (ONE * ZERO).is_zero
    assert (ZERO + ONE).to_float() == 1.0


@given(finite, finite)
def test_mul_matches_float(a, b):
    got = (SignedLog.from_float(a) * SignedLog.from_float(b)).to_float()
    assert close(got, a * b, rel=1e-13)


@given(finite, finite)
def test_add_matches_float(a, b):
    got = (SignedLog.from_float(a) + SignedLog.from_float(b)).to_float()
    # additive cancellation loses relative accuracy like ordinary floats do
    scale = max(abs(a), abs(b), 1e-300)
    assert math.isclose(got, a + b, rel_tol=1e-12, abs_tol=1e-12 * scale)


@given(finite, finite)
def test_commutativity(a, b):
    sa, sb = SignedLog.from_float(a), SignedLog.from_float(b)
    assert close((sa * sb).to_float(), (sb * sa).to_float(), rel=1e-15)
    assert close((sa + sb).to_float(), (sb + sa).to_float(), rel=1e-15)


@given(finite, finite, finite)
def test_mul_associativity(a, b, c):
    sa, sb, sc = (SignedLog.from_float(v) for v in (a, b, c))
    left = ((sa * sb) * sc).to_float()
    right = (sa * (sb * sc)).to_float()
    assert close(left, right, rel=1e-13)


def test_exact_cancellation():
    x = SignedLog.from_float(3.7)
    assert (x - x).is_zero
    assert (x + (-x)).is_zero


def test_huge_magnitudes():
    big = SignedLog.from_log(50_000.0)
    assert big.to_float() == math.inf  # overflow only on conversion
    ratio = big / SignedLog.from_log(49_999.0)
    assert close(ratio.to_float(), math.e, rel=1e-12)
    prod = big * SignedLog.from_log(-50_000.0)
    assert close(prod.to_float(), 1.0, rel=1e-12)


def test_pow():
    x = SignedLog.from_float(2.0)
    assert close((x**10).to_float(), 1024.0)
    y = SignedLog.from_float(-3.0)
    assert close((y**3).to_float(), -27.0)
    assert (ZERO**2).is_zero


@given(finite, finite)
def test_comparisons_match_floats(a, b):
    sa, sb = SignedLog.from_float(a), SignedLog.from_float(b)
    if not math.isclose(a, b, rel_tol=1e-13, abs_tol=1e-300):
        assert (sa < sb) == (a < b)
        assert (sa >= sb) == (a >= b)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


@given(st.lists(finite, min_size=1, max_size=40))
def test_aligned_sum_matches_fsum(values):
    got = aligned_sum(SignedLog.from_float(v) for v in values).to_float()
    want = math.fsum(values)
    scale = max((abs(v) for v in values), default=1.0)
    assert math.isclose(got, want, rel_tol=1e-12, abs_tol=1e-13 * scale)


def test_aligned_sum_extreme_spread():
    # terms spanning ~900 orders of magnitude: the small one is absorbed
    # without overflow, the big one survives exactly
    terms = [SignedLog.from_log(1000.0), SignedLog.from_log(-1000.0)]
    out = aligned_sum(terms)
    assert out.sign == 1
    assert close(out.logmag, 1000.0, rel=1e-15)


def test_aligned_sum_empty_is_zero():
    assert aligned_sum([]).is_zero
