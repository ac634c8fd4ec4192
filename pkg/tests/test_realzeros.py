"""Root method and closed forms for real zeros."""

from __future__ import annotations

import math

import numpy as np
import pytest

from blaschke_radius.blaschke import BlaschkeProduct, shift_matrix
from blaschke_radius.exceptions import DomainError, NotRealZerosError, WrongDegreeError
from blaschke_radius.models import Method
from blaschke_radius.numrange_oracle import numerical_radius
from blaschke_radius.realzeros import (
    ClosedFormCoefficients,
    closed_form_coeffs,
    closed_form_degree1,
    closed_form_degree2,
    closed_form_degree3,
    closed_form_degree4,
    closed_form_radius,
    closed_form_repeated,
    closed_form_with_origin,
    is_self_inversive,
    numerical_radius_root_method,
    real_part_quadratic_residual,
    root_certificates,
    root_equation,
    sign_polynomial,
    trivial_roots_for,
)


def _oracle(zeros):
    return numerical_radius(shift_matrix(BlaschkeProduct(zeros)).matrix).value


# ---------------------------------------------------------------------------
# Sign equations
# ---------------------------------------------------------------------------


def test_sign_polynomial_origin_half():
    b = BlaschkeProduct((0, 0.5))
    # z * z(z - 1/2) - (1 - z/2)
    assert sign_polynomial(b, 1).coefficients == pytest.approx((-1, 0.5, -0.5, 1))
    assert sign_polynomial(b, -1).coefficients == pytest.approx((1, -0.5, -0.5, 1))


def test_sign_must_be_unit():
    with pytest.raises(DomainError):
        sign_polynomial(BlaschkeProduct((0.1,)), 0)


@pytest.mark.parametrize(
    "degree,sign,expected",
    [(2, 1, (1.0,)), (2, -1, (-1.0,)), (3, 1, (1.0, -1.0)), (3, -1, ()), (4, 1, (1.0,)), (1, 1, (1.0, -1.0))],
)
def test_trivial_roots_for(degree, sign, expected):
    assert trivial_roots_for(degree, sign) == expected


def test_root_equation_origin_half():
    plus, minus = root_certificates(BlaschkeProduct((0, 0.5)))
    assert plus.equation_sign == 1
    assert [r.real for r in plus.trivial_roots] == pytest.approx([1.0])
    assert plus.candidate_real_parts == pytest.approx((-0.25,))
    assert [r.real for r in minus.trivial_roots] == pytest.approx([-1.0])
    assert minus.candidate_real_parts == pytest.approx((0.75,))
    assert minus.max_candidate == pytest.approx(0.75)


def test_root_equation_needs_real_zeros():
    with pytest.raises(NotRealZerosError):
        root_equation(BlaschkeProduct((0.1j, 0.2)), 1)


def test_unimodularity_and_self_inversive_suite():
    rng = np.random.default_rng(2024)
    for _ in range(100):
        degree = int(rng.integers(1, 11))
        b = BlaschkeProduct(tuple(rng.uniform(-0.95, 0.95, degree)))
        for sign in (1, -1):
            assert is_self_inversive(sign_polynomial(b, sign), sign)
            certificate = root_equation(b, sign)
            assert certificate.max_unimodularity_residual <= 1e-8
            assert len(certificate.roots.roots) == degree + 1


def test_is_self_inversive_rejects_generic_polynomial():
    from blaschke_radius.polyroots import ComplexPolynomial

    assert not is_self_inversive(ComplexPolynomial((1, 2, 3)), 1)


# ---------------------------------------------------------------------------
# Root method
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 9))
def test_root_method_jordan_family(n):
    result = numerical_radius_root_method(BlaschkeProduct.power(0, n))
    assert result.value == pytest.approx(math.cos(math.pi / (n + 1)), abs=1e-9)
    assert result.method is Method.ROOT_METHOD


def test_root_method_origin_half_diagnostics():
    result = numerical_radius_root_method(BlaschkeProduct((0, 0.5)))
    assert result.value == pytest.approx(0.75, abs=1e-12)
    assert result.diagnostics["candidates_plus"] == 1
    assert result.diagnostics["candidates_minus"] == 1
    assert result.diagnostics["rotation"] == 0.0
    assert result.diagnostics["max_unimodularity_residual"] <= 1e-12
    assert not result.warnings


def test_root_method_rotates_collinear_zeros():
    b = BlaschkeProduct((0, 0.5)).rotated(math.pi / 3)
    result = numerical_radius_root_method(b)
    assert result.value == pytest.approx(0.75, abs=1e-10)
    assert result.diagnostics["rotation"] == pytest.approx(math.pi / 3)


def test_root_method_rejects_scattered_zeros():
    with pytest.raises(NotRealZerosError):
        numerical_radius_root_method(BlaschkeProduct((0.2 + 0.3j, -0.1)))


@pytest.mark.parametrize("seed", range(5))
def test_root_method_matches_oracle_above_degree_4(seed):
    rng = np.random.default_rng(seed)
    zeros = tuple(rng.uniform(-0.9, 0.9, 5 + seed))
    assert numerical_radius_root_method(BlaschkeProduct(zeros)).value == pytest.approx(_oracle(zeros), abs=1e-8)


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------


def test_closed_form_degree1():
    assert closed_form_degree1(-0.6) == 0.6


@pytest.mark.parametrize(
    "a1,a2,expected",
    [(0.0, 0.5, 0.75), (0.4, -0.4, 0.58), (0.0, 0.0, 0.5), (0.5, 0.5, 0.875)],
)
def test_closed_form_degree2_values(a1, a2, expected):
    assert closed_form_degree2(a1, a2) == pytest.approx(expected)


def test_degree2_grid_agrees_with_root_method_and_oracle():
    grid = (-0.8, -0.4, 0.0, 0.4, 0.8)
    for a1 in grid:
        for a2 in grid:
            closed = closed_form_degree2(a1, a2)
            roots = numerical_radius_root_method(BlaschkeProduct((a1, a2))).value
            assert closed == pytest.approx(roots, abs=1e-8)
            assert closed == pytest.approx(_oracle((a1, a2)), abs=1e-8)


def test_degree3_closed_form_specialisations():
    for a in np.linspace(-0.9, 0.9, 13):
        assert closed_form_degree3(0.0, a, a) == pytest.approx(closed_form_repeated(a), abs=1e-12)
        assert closed_form_degree3(0.0, a, -a / 2) == pytest.approx(closed_form_with_origin(a, -a / 2), abs=1e-12)


def test_closed_form_repeated_half():
    assert closed_form_repeated(0.5) == pytest.approx(0.25 + math.sqrt(1.75) / 2)


def test_degree3_grid_agrees_with_root_method_and_oracle():
    grid = np.linspace(-0.8, 0.8, 5)
    for a in grid:
        for b in grid:
            for c in grid:
                closed = closed_form_degree3(a, b, c)
                zeros = (a, b, c)
                assert closed == pytest.approx(numerical_radius_root_method(BlaschkeProduct(zeros)).value, abs=1e-8)
                assert closed == pytest.approx(_oracle(zeros), abs=1e-8)


def test_degree4_random_agrees_with_root_method_and_oracle():
    rng = np.random.default_rng(4)
    for _ in range(30):
        zeros = tuple(rng.uniform(-0.9, 0.9, 4))
        closed = closed_form_degree4(*zeros)
        assert closed == pytest.approx(numerical_radius_root_method(BlaschkeProduct(zeros)).value, abs=1e-8)
        assert closed == pytest.approx(_oracle(zeros), abs=1e-8)


@pytest.mark.parametrize("zeros", [(0.1, -0.3, 0.6, 0.2), (0.0, 0.0, 0.0, 0.0), (0.5, -0.5, 0.25, 0.7)])
def test_degree4_coefficient_extraction_matches_expansion(zeros):
    b = BlaschkeProduct(zeros)
    expected = closed_form_degree4(*zeros)
    from_coeffs = max(
        abs(x) for sign in (1, -1) for x in closed_form_coeffs(b, sign).candidates()
    )
    assert from_coeffs == pytest.approx(expected, abs=1e-12)


def test_closed_form_coeffs_degree3_minus_equation():
    coeffs = closed_form_coeffs(BlaschkeProduct((0.1, 0.2, 0.3)), -1)
    assert coeffs.alpha == pytest.approx(0.1 + 0.2 + 0.3 + 0.1 * 0.2 * 0.3)
    assert coeffs.beta == pytest.approx(0.1 * 0.2 + 0.1 * 0.3 + 0.2 * 0.3)
    for x in coeffs.candidates():
        assert real_part_quadratic_residual(coeffs, x) == pytest.approx(0.0, abs=1e-14)


def test_closed_form_coeffs_wrong_degree():
    with pytest.raises(WrongDegreeError):
        closed_form_coeffs(BlaschkeProduct((0.1,)), 1)


def test_quadratic_cofactor_has_unit_beta():
    coeffs = closed_form_coeffs(BlaschkeProduct((0.0, 0.5)), -1)
    assert coeffs.beta == 1.0
    assert max(abs(x) for x in coeffs.candidates()) == pytest.approx(0.75)


def test_candidates_order():
    assert ClosedFormCoefficients(alpha=1.0, beta=1.0, degree=2).candidates() == (0.5, 0.0)


def test_closed_form_radius_dispatch():
    result = closed_form_radius(BlaschkeProduct((0, 0.5)))
    assert result.value == pytest.approx(0.75)
    assert result.method is Method.CLOSED_FORM
    rotated = closed_form_radius(BlaschkeProduct((0, 0.5)).rotated(2.0))
    assert rotated.value == pytest.approx(0.75, abs=1e-12)
    with pytest.raises(WrongDegreeError):
        closed_form_radius(BlaschkeProduct(tuple([0.1] * 5)))
