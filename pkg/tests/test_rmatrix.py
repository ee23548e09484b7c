import pytest

from src.core.errors import BraidingValidationError, NotSkewInvertibleError
from src.core.operators import LegOperator
from src.core.rmatrix import (HECKE, INVOLUTIVE, RATIONAL, TRIG_RATIONAL, baxterize,
                              build_braiding, check_braiding, check_current_ybe,
                              check_trace_identities, make_braiding, r_trace, skew_inverse_residual)
from src.core.ncalg import Generator, NCPolynomial, generating_matrix
from src.core.scalars import FIELD, q


@pytest.mark.parametrize("family,n,kind", [
    ("flip", 2, INVOLUTIVE),
    ("flip", 3, INVOLUTIVE),
    ("superflip", 2, INVOLUTIVE),
    ("dj", 2, HECKE),
    ("dj", 3, HECKE),
])
def test_builtin_braidings_validate(family, n, kind):
    braiding = build_braiding(family, n)
    assert braiding.kind == kind
    assert skew_inverse_residual(braiding).is_zero()
    assert check_braiding(braiding).passed


def test_build_braiding_rejects_bad_input():
    with pytest.raises(ValueError):
        build_braiding("nope", 2)
    with pytest.raises(ValueError):
        build_braiding("flip", 0)


def test_scalar_multiple_is_not_a_braiding():
    with pytest.raises(BraidingValidationError) as info:
        make_braiding(LegOperator.identity(2, 2).scale(FIELD(2)))
    assert info.value.witness


def test_identity_is_not_skew_invertible():
    with pytest.raises(NotSkewInvertibleError):
        make_braiding(LegOperator.identity(2, 2))


def test_involutive_parameters(flip2):
    assert flip2.q == 1
    assert flip2.omega == 0
    assert flip2.qint(3) == 3


def test_hecke_parameters(dj2):
    assert dj2.q == q
    assert dj2.omega == q - q**-1
    assert (dj2.r @ dj2.r_inverse).equals(LegOperator.identity(2, 2))


def test_flip_b_and_c_are_identity(flip2):
    assert flip2.b.equals(LegOperator.identity(2, 1))
    assert flip2.c.equals(LegOperator.identity(2, 1))


def test_superflip_c_is_parity(superflip2):
    assert superflip2.c.equals(LegOperator.from_matrix([[FIELD(1), FIELD(0)], [FIELD(0), FIELD(-1)]]))


@pytest.mark.parametrize("family,n,bi_rank", [
    ("flip", 2, (2, 0)),
    ("superflip", 2, (1, 1)),
    ("dj", 2, (2, 0)),
    ("dj", 3, (3, 0)),
])
def test_trace_identities(family, n, bi_rank):
    report = check_trace_identities(build_braiding(family, n), bi_rank)
    assert report.passed, report.witness


def test_trace_identities_detect_wrong_bi_rank(dj2):
    report = check_trace_identities(dj2, (1, 0))
    assert report.status == "fail"
    assert "BC" in report.witness or "Tr" in report.witness


def test_dj_trace_weights(dj2):
    assert dj2.c.equals(LegOperator.from_matrix([[q**-3, FIELD(0)], [FIELD(0), q**-1]]))
    assert dj2.b.equals(LegOperator.from_matrix([[q**-1, FIELD(0)], [FIELD(0), q**-3]]))


def test_r_trace_of_generating_matrix(dj2):
    l11, l22 = (NCPolynomial.generator(Generator("l", i, i)) for i in (1, 2))
    assert r_trace(generating_matrix(2, "l"), dj2) == l11 * q**-3 + l22 * q**-1
    assert r_trace(generating_matrix(2, "l"), dj2, "right") == l11 * q**-1 + l22 * q**-3


def test_baxterize_forms(flip2, dj2):
    assert baxterize(flip2).form == RATIONAL
    assert baxterize(dj2).form == TRIG_RATIONAL
    with pytest.raises(ValueError):
        baxterize(dj2, form=RATIONAL)


@pytest.mark.parametrize("family", ["flip", "superflip", "dj"])
def test_current_ybe(family):
    assert check_current_ybe(build_braiding(family, 2)).passed
