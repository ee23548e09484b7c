import pytest

from src.core.operators import LegOperator
from src.core.scalars import FIELD, q


def test_identity_and_flip():
    flip = LegOperator.flip(2)
    assert (flip @ flip).equals(LegOperator.identity(2, 2))
    assert flip.rank() == 4


def test_product_convention():
    x = LegOperator.from_matrix([[1, 2], [0, 1]])
    y = LegOperator.from_matrix([[0, 1], [1, 0]])
    xy = x @ y
    assert xy.matrix_entry(1, 1) == 2
    assert xy.matrix_entry(1, 2) == 1
    assert xy.matrix_entry(2, 1) == 1
    assert xy.matrix_entry(2, 2) == 0


def test_embed_commutes_on_disjoint_legs():
    x = LegOperator.from_matrix([[q, 1], [0, 2]])
    y = LegOperator.from_matrix([[0, 1], [1, q]])
    a, b = x.embed(1, 2), y.embed(2, 2)
    assert (a @ b).equals(b @ a)


def test_embed_out_of_range():
    with pytest.raises(ValueError):
        LegOperator.flip(2).embed(2, 2)


def test_partial_trace():
    ident = LegOperator.identity(3, 2)
    traced = ident.partial_trace([2])
    assert traced.equals(LegOperator.identity(3, 1).scale(FIELD(3)))
    assert LegOperator.flip(3).partial_trace([2]).equals(LegOperator.identity(3, 1))


def test_weighted_trace():
    weight = LegOperator.from_matrix([[q, 0], [0, q**-1]])
    value = LegOperator.identity(2, 1).partial_trace([1], weight).entry((), ())
    assert value == q + q**-1


def test_witness_names_first_entry():
    op = LegOperator(2, 1, {((2,), (1,)): q, ((1,), (2,)): FIELD(5)})
    assert op.witness() == "entry (1,)->(2,): 5"
    assert LegOperator.zero(2, 1).witness() == ""


def test_index_validation():
    with pytest.raises(ValueError):
        LegOperator(2, 1, {((3,), (1,)): FIELD.one})
    with pytest.raises(ValueError):
        LegOperator(2, 2, {((1,), (1,)): FIELD.one})
