import pytest

from src.core.errors import BudgetExceededError
from src.core.operators import LegOperator
from src.core.projectors import (BiRank, bi_rank, check_skew_trace_reduction, check_tower,
                                 fit_rank_series, poincare_ranks, skew_symmetrizer,
                                 tower_for, trace_reduction_factor)
from src.core.rmatrix import build_braiding
from src.core.scalars import FIELD, q


def test_p2_of_flip_is_antisymmetrizer(flip2):
    expected = (LegOperator.identity(2, 2) - flip2.r).scale(FIELD.one / 2)
    assert skew_symmetrizer(flip2, 2).equals(expected)


def test_projectors_are_idempotent(dj2):
    for k in (1, 2, 3):
        proj = skew_symmetrizer(dj2, k)
        assert (proj @ proj).equals(proj)


def test_order_must_be_positive(dj2):
    with pytest.raises(ValueError):
        skew_symmetrizer(dj2, 0)


@pytest.mark.parametrize("family,n,ranks", [
    ("flip", 2, [2, 1, 0, 0]),
    ("dj", 2, [2, 1, 0, 0]),
    ("dj", 3, [3, 3, 1, 0]),
    ("superflip", 2, [2, 2, 2, 2]),
])
def test_poincare_ranks(family, n, ranks):
    assert poincare_ranks(build_braiding(family, n), 4) == ranks


@pytest.mark.parametrize("ranks,expected", [
    ([2, 1, 0, 0, 0, 0], BiRank(2, 0)),
    ([3, 3, 1, 0, 0, 0, 0], BiRank(3, 0)),
    ([2, 2, 2, 2, 2, 2], BiRank(1, 1)),
])
def test_fit_rank_series(ranks, expected):
    assert fit_rank_series(ranks) == expected


def test_fit_needs_confirmation_terms():
    with pytest.raises(BudgetExceededError):
        fit_rank_series([2, 1])


@pytest.mark.parametrize("family,n,expected", [
    ("dj", 2, BiRank(2, 0)),
    ("dj", 3, BiRank(3, 0)),
    ("superflip", 2, BiRank(1, 1)),
])
def test_bi_rank(family, n, expected):
    assert bi_rank(build_braiding(family, n), 6) == expected


def test_bi_rank_str():
    assert str(BiRank(1, 1)) == "(1|1)"


def test_trace_reduction_factor_endpoints(dj2):
    assert trace_reduction_factor(dj2, 2, 2) == 1
    assert trace_reduction_factor(dj2, 2, 0) == q**-4


@pytest.mark.parametrize("m,k", [(m, k) for m in (1, 2, 3) for k in range(m + 1)])
def test_skew_trace_reduction(m, k):
    report = check_skew_trace_reduction(build_braiding("dj", m), m, k)
    assert report.passed, report.witness


def test_skew_trace_reduction_range(dj2):
    with pytest.raises(ValueError):
        check_skew_trace_reduction(dj2, 2, 3)


@pytest.mark.parametrize("family", ["flip", "superflip", "dj"])
def test_tower(family):
    report = check_tower(build_braiding(family, 2), 3)
    assert report.passed, report.witness


def test_towers_are_shared_per_braiding(dj2, flip2):
    assert tower_for(dj2) is tower_for(dj2)
    assert tower_for(dj2) is not tower_for(flip2)
    assert tower_for(dj2).braiding is dj2
    assert tower_for(build_braiding("dj", 2)).braiding is not dj2
