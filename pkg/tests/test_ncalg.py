import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import BudgetExceededError
from src.core.ncalg import (Generator, NCPolynomial, PresentedAlgebra,
                            classical_dimension_failures, commutator, enveloping_gl,
                            ideal_self_check_failures, pbw_self_check_failures, span_rank)
from src.core.realgebra import re_algebra
from src.core.rmatrix import build_braiding
from src.core.scalars import FIELD, q

X, Y = Generator("x", 1, 1), Generator("y", 1, 1)
x, y = NCPolynomial.generator(X), NCPolynomial.generator(Y)


def m(i, j, site=0):
    return NCPolynomial.generator(Generator("m", i, j, 0, site))


def test_polynomial_arithmetic():
    p = (x + y) * (x - y)
    assert p == x * x - x * y + y * x - y * y
    assert (x * 2 - x - x) == 0
    assert commutator(x, y) == x * y - y * x
    assert (x + 1).constant_term() == 1
    assert (x * y * x).degree() == 3
    assert str(NCPolynomial()) == "0"


def test_substitute_is_a_morphism():
    image = {X: y + 1, Y: x * q}
    p = x * y - y * x
    assert p.substitute(image.get) == (y + 1) * (x * q) - (x * q) * (y + 1)


def test_graded_commutative_quotient():
    algebra = PresentedAlgebra([X, Y], [x * y - y * x], strategy="graded", max_degree=3)
    assert algebra.contains(x * x * y - x * y * x)
    assert not algebra.contains(x * y)
    assert algebra.reduce(x * y) == algebra.reduce(y * x)
    assert [algebra.graded_dimension(d) for d in range(4)] == [1, 2, 3, 4]
    assert classical_dimension_failures(algebra, 3) == []


def test_graded_rejects_inhomogeneous_relation():
    with pytest.raises(ValueError):
        PresentedAlgebra([X, Y], [x * y - x], strategy="graded")


def test_filtered_quotient():
    algebra = PresentedAlgebra([X, Y], [x * y - y * x - x], strategy="filtered", max_degree=3)
    assert algebra.contains(x * y - y * x - x)
    assert algebra.contains(x * x * y - x * y * x - x * x)
    assert not algebra.contains(x)


def test_budget_is_enforced():
    algebra = PresentedAlgebra([X, Y], [x * y - y * x], strategy="graded", max_degree=2)
    with pytest.raises(BudgetExceededError):
        algebra.reduce(x * y * x)


def test_unknown_strategy():
    with pytest.raises(ValueError):
        PresentedAlgebra([X], strategy="free")


def test_pbw_normal_form_example():
    algebra = enveloping_gl(2)
    assert algebra.reduce(m(1, 2) * m(2, 1)) == m(2, 1) * m(1, 2) + m(1, 1) - m(2, 2)


def test_pbw_sites_commute():
    algebra = enveloping_gl(2, sites=2)
    assert algebra.reduce(m(1, 2, 2) * m(2, 1, 1)) == m(2, 1, 1) * m(1, 2, 2)


def test_pbw_rejects_nonlinear_tail():
    with pytest.raises(ValueError):
        PresentedAlgebra([X, Y], strategy="pbw", commutators={(X, Y): x * x})


def test_pbw_reduce_needs_pbw_strategy():
    algebra = PresentedAlgebra([X, Y], [x * y - y * x], strategy="graded")
    with pytest.raises(ValueError):
        algebra.pbw_reduce(x)


def test_pbw_self_check():
    assert pbw_self_check_failures(enveloping_gl(2), 3) == []


def test_span_rank():
    assert span_rank([x, y, x + y, x * y]) == 3
    assert span_rank([]) == 0


def test_random_products_are_reproducible():
    algebra = re_algebra(build_braiding("flip", 2)).algebra
    first = algebra.random_products(5, seed=7, max_weight=3)
    second = algebra.random_products(5, seed=7, max_weight=3)
    assert all(a == b for a, b in zip(first, second))
    assert ideal_self_check_failures(algebra, 20, 7, 3) == []


FLIP_RE = re_algebra(build_braiding("flip", 2)).algebra
GENS = list(FLIP_RE.generators)


@given(st.sampled_from(FLIP_RE.relations), st.lists(st.sampled_from(GENS), max_size=1),
       st.lists(st.sampled_from(GENS), max_size=1), st.integers(1, 9))
@settings(max_examples=25, deadline=None)
def test_word_relation_word_in_ideal(relation, left, right, coeff):
    element = NCPolynomial.word(left, coeff) * relation * NCPolynomial.word(right)
    assert FLIP_RE.contains(element)
    assert FLIP_RE.contains(element * FIELD(3) + relation)
