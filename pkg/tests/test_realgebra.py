import pytest

from src.core.ncalg import Generator, NCPolynomial
from src.core.realgebra import (RIGHT, affine_cocycle_check, braided_jacobi_check, capelli_check,
                                capelli_polynomial, characteristic_poly, check_cayley_hamilton,
                                check_centrality, check_char_poly_forms, check_modified_char_poly,
                                check_overline_form, check_shift_isomorphism, check_sl_projection,
                                elementary_symmetric, power_sum, re_algebra, representation_check,
                                representation_matrices, sigma_identity_residual, sl_projection)
from src.core.rmatrix import build_braiding
from src.core.scalars import q


def l(i, j):
    return NCPolynomial.generator(Generator("l", i, j))


@pytest.fixture(scope="module")
def re_dj2(dj2):
    return re_algebra(dj2)


@pytest.fixture(scope="module")
def mre_dj2(dj2):
    return re_algebra(dj2, modified=True)


def test_plain_right_algebra_is_rejected(dj2):
    with pytest.raises(ValueError):
        re_algebra(dj2, modified=False, side=RIGHT)
    with pytest.raises(ValueError):
        re_algebra(dj2, side="middle")


def test_flip_symmetric_polynomials(flip2):
    ctx = re_algebra(flip2)
    assert elementary_symmetric(ctx, 0) == 1
    assert elementary_symmetric(ctx, 1) == l(1, 1) + l(2, 2)
    assert power_sum(ctx, 1) == elementary_symmetric(ctx, 1)
    with pytest.raises(ValueError):
        elementary_symmetric(ctx, 3)


def test_flip_algebra_is_commutative(flip2):
    ctx = re_algebra(flip2)
    assert ctx.reduce(l(1, 2) * l(2, 1) - l(2, 1) * l(1, 2)) == 0


@pytest.mark.parametrize("kind,k", [("e", 1), ("e", 2), ("p", 1), ("p", 2)])
def test_centrality(re_dj2, kind, k):
    element = elementary_symmetric(re_dj2, k) if kind == "e" else power_sum(re_dj2, k)
    report = check_centrality(re_dj2, element, f"{kind}_{k}")
    assert report.passed, report.witness


def test_generator_is_not_central(re_dj2):
    report = check_centrality(re_dj2, l(1, 2), "l_1^2")
    assert report.status == "fail"
    assert "l_1^2" in report.witness


def test_cayley_hamilton_dj2(re_dj2):
    report = check_cayley_hamilton(re_dj2)
    assert report.passed, report.witness


def test_cayley_hamilton_flip2(flip2):
    assert check_cayley_hamilton(re_algebra(flip2)).passed


@pytest.mark.slow
def test_cayley_hamilton_dj3():
    assert check_cayley_hamilton(re_algebra(build_braiding("dj", 3))).passed


def test_cayley_hamilton_needs_even_bi_rank(superflip2):
    with pytest.raises(ValueError):
        check_cayley_hamilton(re_algebra(superflip2))


def test_characteristic_poly_leading_coefficient(re_dj2):
    by_sum = characteristic_poly(re_dj2, "sum")
    assert by_sum[2] == 1
    with pytest.raises(ValueError):
        characteristic_poly(re_dj2, "modified")
    with pytest.raises(ValueError):
        characteristic_poly(re_dj2, "spectral")


@pytest.mark.parametrize("m", [1, 2, 3])
def test_sigma_identity(m):
    assert all(not sigma_identity_residual(m, k) for k in range(m + 1))


def test_char_poly_forms(re_dj2):
    report = check_char_poly_forms(re_dj2)
    assert report.passed, report.witness


@pytest.mark.parametrize("family", ["dj", "flip"])
def test_modified_char_poly(family):
    report = check_modified_char_poly(re_algebra(build_braiding(family, 2), modified=True))
    assert report.passed, report.witness


def test_modified_char_poly_needs_modified_context(re_dj2):
    with pytest.raises(ValueError):
        check_modified_char_poly(re_dj2)


def test_capelli_polynomial_degree_one():
    coefficients = capelli_polynomial(1)
    assert coefficients[1] == 1
    assert coefficients[0] == -NCPolynomial.generator(Generator("m", 1, 1))


@pytest.mark.parametrize("n", [2, 3])
def test_capelli(n):
    report = capelli_check(n)
    assert report.passed, report.witness


def test_shift_isomorphism(dj2, flip2):
    assert check_shift_isomorphism(dj2).passed
    with pytest.raises(ValueError):
        check_shift_isomorphism(flip2)


def test_overline_form(re_dj2):
    report = check_overline_form(re_dj2)
    assert report.passed, report.witness


@pytest.mark.parametrize("which", ["vector", "covector", "adjoint"])
def test_representations(dj2, which):
    report = representation_check(dj2, which)
    assert report.passed, report.witness


def test_vector_representation_shape(dj2):
    matrices = representation_matrices(dj2, "vector")
    assert len(matrices) == 4
    assert all(op.dim == 2 for op in matrices.values())


def test_unknown_representation(dj2):
    with pytest.raises(ValueError):
        representation_matrices(dj2, "spinor")


@pytest.mark.parametrize("family", ["flip", "superflip"])
def test_braided_jacobi(family):
    report = braided_jacobi_check(build_braiding(family, 2))
    assert report.passed, report.witness


@pytest.mark.parametrize("family", ["flip", "superflip"])
def test_affine_cocycle(family):
    report = affine_cocycle_check(build_braiding(family, 2))
    assert report.passed, report.witness


def test_jacobi_needs_involutive_braiding(dj2):
    with pytest.raises(ValueError):
        braided_jacobi_check(dj2)


def test_sl_projection(re_dj2, superflip2):
    report = check_sl_projection(re_dj2)
    assert report.passed, report.witness
    assert len(sl_projection(re_dj2)) == 4
    with pytest.raises(ValueError):
        sl_projection(re_algebra(superflip2))


def test_trace_weight_of_dj(dj2):
    assert dj2.c.matrix_entry(1, 1) * dj2.c.matrix_entry(2, 2) != 0
    assert dj2.c.matrix_entry(1, 1) != dj2.c.matrix_entry(2, 2)
    assert dj2.c.matrix_entry(1, 1) in (q**-3, q**-1)
