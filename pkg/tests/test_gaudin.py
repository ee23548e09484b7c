from math import factorial

import pytest
from sympy import Rational

from src.core.gaudin import (DiffOpPoly, EvaluationData, check_evaluate_sites,
                             check_qh_commute, check_qh_naturality, check_trig_algebra,
                             check_trig_limit, classical_poisson, evaluate_sites,
                             expand_at_infinity, h_components, parse_sites, qh_element,
                             qh_series, tau_expansion, tau_leading_order, tau_series,
                             trig_algebra, trig_relation_matrix)
from src.core.ncalg import as_polynomial
from src.core.operators import LegOperator
from src.core.scalars import FIELD, u
from src.core.yangian import braided_yangian


@pytest.fixture(scope="module")
def two_sites():
    return EvaluationData(2, parse_sites("1,2"))


@pytest.fixture(scope="module")
def yangian_dj2(dj2):
    return braided_yangian(dj2, 2)


# --- Limit Lie algebra ---
def test_trig_algebra_is_pbw():
    algebra = trig_algebra(2, 2)
    assert algebra.strategy == "pbw"
    assert len(algebra.generators) == 8


def test_trig_algebra_rejects_small_input():
    with pytest.raises(ValueError):
        trig_algebra(1, 2)
    with pytest.raises(ValueError):
        trig_algebra(2, 0)


def test_trig_bracket_is_lie():
    assert check_trig_algebra(2, 2).passed


def test_relation_matrix_vanishes_at_level_zero():
    assert trig_relation_matrix(2, 0, 1, 2).is_zero()
    assert trig_relation_matrix(2, 1, 0, 2).is_zero()


def test_trig_limit_dj(dj2):
    assert check_trig_limit(dj2, 2).passed


def test_trig_limit_needs_hecke(flip2):
    with pytest.raises(ValueError):
        check_trig_limit(flip2, 2)


@pytest.mark.parametrize("k", [1, 2])
def test_tau_leading_order(yangian_dj2, k):
    assert tau_leading_order(yangian_dj2, k).passed


@pytest.mark.parametrize("k", [1, 2])
def test_tau_shift_is_exponential_of_theta(yangian_dj2, k):
    order = 2
    unshifted = tau_series(yangian_dj2, k)
    parts = [h_components(c, order) for c in unshifted.coefficients]
    shifted = tau_expansion(yangian_dj2, k, order)
    identity = LegOperator.identity(1, 1)

    def in_u(coefficients):
        return sum((c * u**-s for s, c in enumerate(coefficients)), as_polynomial(FIELD.zero))

    for total in range(order + 1):
        expected = as_polynomial(FIELD.zero)
        for n in range(total + 1):
            f = LegOperator(1, 1, {((1,), (1,)): in_u([p[total - n] for p in parts])})
            theta_n = (DiffOpPoly({n: identity}) * DiffOpPoly({0: f})).apply_to_one(1, 1)
            weight = FIELD((-1) ** n) / factorial(n)
            expected = expected + as_polynomial(theta_n.entry((1,), (1,))) * weight
        assert expected == in_u(shifted[total].coefficients)


def test_tau_range(yangian_dj2):
    with pytest.raises(ValueError):
        tau_leading_order(yangian_dj2, 3)
    with pytest.raises(ValueError):
        tau_leading_order(yangian_dj2, 2, h_order=1)


# --- Differential operators ---
def test_theta_commutation():
    identity = LegOperator.identity(2, 1)
    d = DiffOpPoly({1: identity})
    f = DiffOpPoly({0: identity.scale(u)})
    product = d * f
    assert set(product.terms) == {0, 1}
    assert product.terms[1].equals(identity.scale(u))
    assert product.terms[0].equals(identity.scale(u))


def test_apply_to_one_keeps_constant_part():
    identity = LegOperator.identity(2, 1)
    op = DiffOpPoly({0: identity.scale(u), 1: identity})
    assert op.apply_to_one(2, 1).equals(identity.scale(u))
    assert DiffOpPoly({1: identity}).apply_to_one(2, 1).is_zero()


def test_expand_at_infinity():
    assert expand_at_infinity(1 / (u - 1), 3) == [0, 1, 1, 1]
    assert expand_at_infinity(FIELD(3), 2) == [3, 0, 0]
    with pytest.raises(ValueError):
        expand_at_infinity(u, 2)


# --- Evaluation at sites ---
def test_parse_sites():
    assert [p.as_expr() for p in parse_sites("1, 2,3/2")] == [1, 2, Rational(3, 2)]
    assert parse_sites("") == ()


@pytest.mark.parametrize("points", [(0, 1), (1, 1)])
def test_evaluation_points_must_be_distinct_and_nonzero(points):
    with pytest.raises(ValueError):
        EvaluationData(2, points)


def test_evaluation_points_must_be_numbers():
    with pytest.raises(ValueError):
        EvaluationData(2, (u,))


def test_site_labels(two_sites):
    assert two_sites.sites == 2
    assert two_sites.describe() == "1,2"
    assert [two_sites.site_id(a) for a in range(2)] == [1, 2]
    assert EvaluationData(2, (1,)).site_id(0) == 0


def test_evaluated_matrix_has_poles_at_sites(two_sites):
    evaluated = evaluate_sites(two_sites)
    assert evaluated.legs == 1
    assert len(evaluated.entries) == 4


@pytest.mark.parametrize("sites", ["1", "1,2"])
def test_evaluate_sites(sites):
    assert check_evaluate_sites(EvaluationData(2, parse_sites(sites))).passed


# --- Bethe elements ---
def test_qh_range(two_sites):
    with pytest.raises(ValueError):
        qh_element(two_sites, 3)
    with pytest.raises(ValueError):
        qh_series(2, 0, 2)


@pytest.mark.parametrize("k", [1, 2])
def test_qh_naturality(two_sites, k):
    assert check_qh_naturality(two_sites, k, 2).passed


def test_qh_commute(two_sites):
    assert check_qh_commute(two_sites, 1, 2).passed


@pytest.mark.slow
def test_qh_commute_top(two_sites):
    assert check_qh_commute(two_sites, 2, 2).passed


def test_classical_poisson(two_sites):
    assert classical_poisson(two_sites, 2, 2).passed


def test_classical_poisson_without_sites():
    assert classical_poisson(EvaluationData(2, ()), 1, 1).passed


def test_classical_poisson_rejects_zero_power(two_sites):
    with pytest.raises(ValueError):
        classical_poisson(two_sites, 0, 1)
