"""Similarity-variable expansion: coefficient formulas, the identity with
the truncated series, and the weighted-energy validity criterion.

One deliberate pair of strict xfails lives here.  The displayed coefficient
recipe reads off a_alpha from the plain moments at a later base time, but
plain moments pair with z^alpha, not with the Hermite eigenfunctions, so
coefficients taken at different base times describe *different* expansions
(a_2 is 0.5 from base time 1 and 0.75 from base time 2 for the unit
Gaussian).  The consistency claims that would require base-time invariance
therefore fail by a fixed O(1) margin, and the companion tests right after
them pin down what *is* true: each base time's expansion converges to the
evolution restarted from that time, and the heat polynomials (the Appell
pairs of the eigenfunctions) recover the initial moments from any later
time.
"""

import json
import math

import pytest
from hypothesis import given, strategies as st
from scipy.integrate import quad

from heatseries import (
    DomainError,
    EigenCoeffs,
    Gaussian,
    SimilarityPoint,
    ApproxConfig,
    build_moment_table,
    eigen_coeffs,
    eval_expansion,
    eval_uk,
    exact_gaussian_solution,
    from_similarity,
    is_within_validity,
    to_similarity,
)
from heatseries.eigen import validity_integral

UNIT1 = Gaussian(amplitude=1.0, width=1.0, dim=1)
UNIT2 = Gaussian(amplitude=1.0, width=1.0, dim=2)


# --- similarity variables -------------------------------------------------

def test_similarity_map_basics():
    p = to_similarity((2.0,), 1.0)
    assert p.z == (1.0,)
    assert p.tau == 0.0
    x, t = from_similarity(SimilarityPoint(z=(1.0,), tau=0.0))
    assert x == (2.0,) and t == 1.0


@given(
    st.floats(-50.0, 50.0, allow_nan=False),
    st.floats(1e-6, 1e6, allow_nan=False),
)
def test_similarity_roundtrip(x, t):
    p = to_similarity((x,), t)
    back_x, back_t = from_similarity(p)
    assert math.isclose(back_x[0], x, rel_tol=1e-12, abs_tol=1e-12)
    assert math.isclose(back_t, t, rel_tol=1e-12)


def test_similarity_domain():
    with pytest.raises(DomainError):
        to_similarity((1.0,), 0.0)


# --- coefficients ---------------------------------------------------------

@pytest.mark.parametrize("t0c", [0.0, 1.0, 2.5])
def test_mass_coefficient_is_one(t0c):
    coeffs = eigen_coeffs(UNIT1, t0c, 4)
    assert coeffs.coeff((0,)).to_float() == pytest.approx(1.0, rel=1e-12)


def test_odd_coefficients_vanish():
    coeffs = eigen_coeffs(UNIT1, 1.0, 5)
    assert coeffs.coeff((1,)).sign == 0
    assert coeffs.coeff((3,)).sign == 0
    c2 = eigen_coeffs(UNIT2, 0.0, 4)
    assert c2.coeff((1, 2)).sign == 0


def test_quadratic_coefficient_frozen():
    # a_2 = 2^{-3} pi^{-1/2} m_2(t0') / 2; m_2(1) = 8 sqrt(pi) -> 0.5
    c1 = eigen_coeffs(UNIT1, 1.0, 2).coeff((2,)).to_float()
    assert c1 == pytest.approx(0.5, rel=1e-12)
    # and m_2(2) = 12 sqrt(pi) -> 0.75: the same index, another base time
    c2 = eigen_coeffs(UNIT1, 2.0, 2).coeff((2,)).to_float()
    assert c2 == pytest.approx(0.75, rel=1e-12)


def test_quadratic_coefficient_vs_quadrature():
    # independent route: a_2 = 2^{-3} pi^{-1/2} / 2! * int x^2 u(x, 1) dx
    m2, _ = quad(
        lambda x: x * x * exact_gaussian_solution(1.0, 1.0, 1, x, 1.0),
        -math.inf,
        math.inf,
    )
    want = 2.0**-3 * math.pi**-0.5 * m2 / 2.0
    got = eigen_coeffs(UNIT1, 1.0, 2).coeff((2,)).to_float()
    assert got == pytest.approx(want, rel=1e-9)


def test_coeff_out_of_table():
    coeffs = eigen_coeffs(UNIT1, 0.0, 4)
    with pytest.raises(DomainError):
        coeffs.coeff((5,))
    with pytest.raises(DomainError):
        eigen_coeffs(UNIT1, -1.0, 4)


def test_coeffs_json_roundtrip():
    coeffs = eigen_coeffs(UNIT2, 1.5, 3)
    raw = json.loads(coeffs.to_json())
    assert set(raw) == {"dim", "kmax", "t0_coeff", "entries"}
    assert raw["t0_coeff"] == 1.5
    assert len(raw["entries"]) == math.comb(3 + 2, 2)
    back = EigenCoeffs.from_json(coeffs.to_json())
    assert back.t0_coeff == coeffs.t0_coeff
    for a, c in coeffs.entries.items():
        assert back.entries[a].sign == c.sign
        if c.sign != 0:
            assert back.entries[a].logmag == pytest.approx(c.logmag, abs=1e-15)


# --- expansion vs truncated series ----------------------------------------

def test_order_zero_expansion_is_weighted_mass():
    coeffs = eigen_coeffs(UNIT1, 0.0, 0)
    for tau in (-1.0, 0.0, 2.0):
        got = eval_expansion(coeffs, SimilarityPoint(z=(0.0,), tau=tau), 0)
        assert got == pytest.approx(1.0, rel=1e-12)
    # away from the origin the ground eigenfunction is the Gaussian weight
    got = eval_expansion(coeffs, SimilarityPoint(z=(1.3,), tau=0.5), 0)
    assert got == pytest.approx(math.exp(-1.69), rel=1e-12)


@pytest.mark.parametrize("dim", [1, 2])
@pytest.mark.parametrize("t", [0.7, 2.0, 4.0])
def test_expansion_equals_scaled_truncation(dim, t):
    # with initial-datum coefficients the truncated expansion *is*
    # t^{d/2} u_k, identically in (x, t) — including t below the width
    u0 = UNIT1 if dim == 1 else UNIT2
    k = 30
    coeffs = eigen_coeffs(u0, 0.0, k)
    table = build_moment_table(u0, k)
    cfg = ApproxConfig(dim=dim, k=k, t=t)
    tau = math.log(t)
    root = 2.0 * math.sqrt(t)
    zs = [(-2.5,), (-0.6,), (0.0,), (1.1,), (3.0,)] if dim == 1 else [
        (-1.5, 0.4), (0.0, 0.0), (0.7, -0.7), (2.0, 1.0)
    ]
    for z in zs:
        x = tuple(c * root for c in z)
        lhs = eval_expansion(coeffs, SimilarityPoint(z=z, tau=tau), k)
        rhs = t ** (dim / 2.0) * eval_uk(table, cfg, x).value
        assert math.isclose(lhs, rhs, rel_tol=1e-10, abs_tol=1e-12)


def test_expansion_argument_checks():
    coeffs = eigen_coeffs(UNIT1, 0.0, 4)
    with pytest.raises(DomainError):
        eval_expansion(coeffs, SimilarityPoint(z=(0.0, 0.0), tau=0.0), 2)
    with pytest.raises(DomainError):
        eval_expansion(coeffs, SimilarityPoint(z=(0.0,), tau=0.0), 6)


# --- base-time (in)consistency --------------------------------------------

@pytest.mark.xfail(
    strict=True,
    reason=(
        "plain moments at a later base time are not the Hermite expansion "
        "coefficients of the evolved solution (z^alpha pairs with H_beta "
        "for beta <= alpha too); coefficients from base times 1 and 2 give "
        "expansions that differ by O(0.1), not 1e-8"
    ),
)
def test_base_time_consistency_claim():
    t = 4.0
    k = 40
    c1 = eigen_coeffs(UNIT1, 1.0, k)
    c2 = eigen_coeffs(UNIT1, 2.0, k)
    tau = math.log(t)
    for z in (-1.0, 0.0, 0.5, 1.5):
        a = eval_expansion(c1, SimilarityPoint(z=(z,), tau=tau), k)
        b = eval_expansion(c2, SimilarityPoint(z=(z,), tau=tau), k)
        assert abs(a - b) < 1e-8


@pytest.mark.xfail(
    strict=True,
    reason=(
        "same root cause: the base-time-1 expansion converges to the "
        "restart of the evolution from time 1, not to the original "
        "solution, so it misses t^{1/2} u(x, t) by an O(0.01) margin"
    ),
)
def test_later_base_time_matches_original_solution_claim():
    t, k = 4.0, 40
    coeffs = eigen_coeffs(UNIT1, 1.0, k)
    tau = math.log(t)
    for z in (0.0, 0.5, 1.0):
        x = 2.0 * math.sqrt(t) * z
        got = eval_expansion(coeffs, SimilarityPoint(z=(z,), tau=tau), k)
        want = t**0.5 * exact_gaussian_solution(1.0, 1.0, 1, x, t)
        assert abs(got - want) < 1e-6


@pytest.mark.parametrize("t_base", [1.0, 2.0])
def test_base_time_expansion_converges_to_restarted_evolution(t_base):
    # what the later-base-time coefficients *do* represent: u(., t_base)
    # is a Gaussian of width 1 + t_base, and the expansion built from its
    # plain moments converges (for t above that width) to the evolution
    # restarted from it
    t, k = 4.0, 120
    coeffs = eigen_coeffs(UNIT1, t_base, k)
    amp = (1.0 / (1.0 + t_base)) ** 0.5
    width = 1.0 + t_base
    tau = math.log(t)
    for z in (-1.5, -0.5, 0.0, 0.8, 2.0):
        x = 2.0 * math.sqrt(t) * z
        got = eval_expansion(coeffs, SimilarityPoint(z=(z,), tau=tau), k)
        want = t**0.5 * exact_gaussian_solution(amp, width, 1, x, t)
        assert got == pytest.approx(want, abs=1e-6)


@pytest.mark.parametrize("t_base", [1.0, 2.0])
def test_heat_polynomials_recover_initial_moments(t_base):
    # the Appell pairing that *is* base-time invariant: heat polynomials
    # against the evolved solution return the initial moments
    u = lambda x: exact_gaussian_solution(1.0, 1.0, 1, x, t_base)
    p2 = lambda x: x * x - 2.0 * t_base
    p4 = lambda x: x**4 - 12.0 * t_base * x * x + 12.0 * t_base * t_base
    m2, _ = quad(lambda x: p2(x) * u(x), -math.inf, math.inf)
    m4, _ = quad(lambda x: p4(x) * u(x), -math.inf, math.inf)
    assert m2 == pytest.approx(7.0898154036220644, rel=1e-9)    # 4 sqrt(pi)
    assert m4 == pytest.approx(42.538892421732385, rel=1e-9)    # 24 sqrt(pi)


# --- validity criterion ---------------------------------------------------

def _solution_evaluator(dim):
    return lambda r, t: exact_gaussian_solution(
        1.0, 1.0, dim, (r,) + (0.0,) * (dim - 1), t
    )


def test_validity_integral_frozen_values():
    got1 = validity_integral(_solution_evaluator(1), 2.0, 1)
    assert got1 == pytest.approx(2.0466534158929770, rel=1e-9)  # 2 sqrt(3 pi)/3
    got2 = validity_integral(_solution_evaluator(2), 2.0, 2)
    assert got2 == pytest.approx(4.1887902047863905, rel=1e-9)  # 4 pi / 3


@pytest.mark.parametrize("dim", [1, 2])
@pytest.mark.parametrize("factor", [0.5, 0.9, 1.0, 1.1, 2.0, 4.0])
def test_validity_verdict_matches_time_threshold(dim, factor):
    # finite exactly when t > t0; the t = t0 boundary diverges
    t = factor * 1.0
    value = validity_integral(_solution_evaluator(dim), t, dim)
    assert math.isfinite(value) == (factor > 1.0)


def test_validity_domain():
    with pytest.raises(DomainError):
        validity_integral(_solution_evaluator(1), 0.0, 1)
    with pytest.raises(DomainError):
        validity_integral(_solution_evaluator(1), 1.0, 0)


def test_is_within_validity():
    coeffs = eigen_coeffs(UNIT1, 1.0, 2)
    assert is_within_validity(coeffs, SimilarityPoint(z=(0.0,), tau=math.log(2.0)))
    assert not is_within_validity(
        coeffs, SimilarityPoint(z=(0.0,), tau=math.log(0.5))
    )
    datum_coeffs = eigen_coeffs(UNIT1, 0.0, 2)
    assert is_within_validity(
        datum_coeffs, SimilarityPoint(z=(0.0,), tau=-30.0)
    )
