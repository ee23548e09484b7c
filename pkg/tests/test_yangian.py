import pytest

from src.core.ncalg import Generator, NCPolynomial
from src.core.operators import LegOperator
from src.core.rmatrix import baxterize
from src.core.scalars import FIELD, q
from src.core.yangian import (BRAIDED, RTT, CurrentSeries, bethe_element, braided_yangian,
                              check_bethe_commute, check_chn,
                              check_chn_newton_trace, check_evaluation,
                              check_level_grading, check_newton, check_qdet_central,
                              check_rtt_yang, current_matrix, e_via_skew_power,
                              ehat_scaling_failures, matrix_power, rtt_yangian, skew_power,
                              yangian_generators)


@pytest.fixture(scope="module")
def yangian_dj2(dj2):
    return braided_yangian(dj2, 2)


@pytest.fixture(scope="module")
def yangian_flip2(flip2):
    return braided_yangian(flip2, 2)


def test_series_shift_scales_levels():
    series = CurrentSeries((NCPolynomial.constant(1), NCPolynomial.constant(1),
                            NCPolynomial.constant(1)))
    shifted = series.shifted(1)
    assert [c.constant_term() for c in shifted.coefficients] == [1, q**2, q**4]
    assert series.shifted(1, FIELD.one).coefficients[2] == 1


def test_series_product_truncates():
    one = NCPolynomial.constant(1)
    series = CurrentSeries((one, one, one))
    square = series * series
    assert square.cutoff == 2
    assert [c.constant_term() for c in square.coefficients] == [1, 2, 3]


def test_constant_series():
    series = CurrentSeries.constant(LegOperator.identity(2, 1), 3)
    assert series.cutoff == 3
    assert series[3].is_zero()


def test_current_matrix_levels():
    series = current_matrix(2, 2)
    assert series[0].equals(LegOperator.identity(2, 1))
    assert {g.level for g in yangian_generators(2, 2)} == {1, 2}


def test_yangian_contexts(yangian_dj2, yangian_flip2):
    assert yangian_dj2.flavor == BRAIDED
    assert yangian_dj2.algebra.strategy == "graded"
    assert yangian_flip2.algebra.strategy == "filtered"
    assert yangian_dj2.algebra.relations
    assert check_level_grading(yangian_dj2) == []
    assert check_level_grading(yangian_flip2) == []


def test_negative_cutoff(dj2):
    with pytest.raises(ValueError):
        braided_yangian(dj2, -1)


def test_matrix_power_zero_and_one(yangian_dj2):
    zero = matrix_power(yangian_dj2, 0)
    assert zero[0].equals(LegOperator.identity(2, 1))
    assert zero[1].is_zero()
    one = matrix_power(yangian_dj2, 1)
    assert one[1].equals(yangian_dj2.series()[1])


def test_skew_power_range(yangian_dj2):
    with pytest.raises(ValueError):
        skew_power(yangian_dj2, 3)
    with pytest.raises(ValueError):
        bethe_element(yangian_dj2, "f", 1)


def test_e_via_skew_power(yangian_dj2):
    difference = e_via_skew_power(yangian_dj2, 2) - bethe_element(yangian_dj2, "e", 2)
    assert not any(difference.coefficients)


def test_ehat_scaling(yangian_dj2):
    assert ehat_scaling_failures(yangian_dj2) == []


def test_qdet_leading_coefficient(yangian_dj2):
    assert bethe_element(yangian_dj2, "e", 2)[0] == q**-4


@pytest.mark.parametrize("k", [1, 2])
def test_chn(yangian_dj2, k):
    report = check_chn(yangian_dj2, k)
    assert report.passed, report.witness


@pytest.mark.parametrize("k", [1, 2])
def test_newton(yangian_dj2, k):
    report = check_newton(yangian_dj2, k)
    assert report.passed, report.witness


def test_newton_starts_at_one(yangian_dj2):
    with pytest.raises(ValueError):
        check_newton(yangian_dj2, 0)


@pytest.mark.parametrize("k,l", [(1, 1), (1, 2), (2, 2)])
def test_bethe_commute(yangian_dj2, k, l):
    report = check_bethe_commute(yangian_dj2, k, l)
    assert report.passed, report.witness


def test_qdet_central(yangian_dj2, yangian_flip2):
    assert check_qdet_central(yangian_dj2).passed
    assert check_qdet_central(yangian_flip2).passed


@pytest.mark.parametrize("family", ["dj", "flip"])
def test_evaluation(family, request):
    braiding = request.getfixturevalue(f"{family}2")
    report = check_evaluation(braiding)
    assert report.passed, report.witness


def test_rtt_yang(flip2, dj2):
    report = check_rtt_yang(flip2)
    assert report.passed, report.witness
    with pytest.raises(ValueError):
        check_rtt_yang(dj2)


def test_rtt_flavor(flip2):
    ctx = rtt_yangian(baxterize(flip2), 2)
    assert ctx.flavor == RTT
    assert ctx.algebra.relations
    assert set(ctx.relation_levels) <= {1, 2}


@pytest.mark.parametrize("cutoff", [0, 1])
def test_yang_rtt_relations_start_at_level_two(flip2, cutoff):
    ctx = rtt_yangian(baxterize(flip2), cutoff)
    assert ctx.algebra.relations == []
    assert ctx.relation_levels == []


def test_q_yangian_rtt_relations(dj2):
    ctx = rtt_yangian(baxterize(dj2), 2)
    assert ctx.flavor == RTT
    assert ctx.algebra.strategy == "graded"
    for relation in ctx.algebra.relations:
        assert len(relation.split_by_weight(ctx.algebra.word_weight)) == 1
    # with L[0] = I the u^-1 v^1 coefficient reads R L_1[1] = L_2[1] R
    l11, l12, l21, l22 = (NCPolynomial.generator(Generator("l", i, j, 1))
                          for i, j in ((1, 1), (1, 2), (2, 1), (2, 2)))
    for element in (l12, l21, l11 - l22):
        assert not ctx.reduce(element)
    assert ctx.reduce(l11)


def test_chn_traces_to_newton(yangian_dj2):
    report = check_chn_newton_trace(yangian_dj2)
    assert report.passed, report.witness
    assert report.params["k"] == 2
