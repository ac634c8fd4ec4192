"""Pick-matrix feasibility and the critical gamma."""

from __future__ import annotations

import cmath

import numpy as np
import pytest

from blaschke_radius.blaschke import BlaschkeProduct, shift_matrix
from blaschke_radius.exceptions import DomainError, NodesTooCloseError
from blaschke_radius.linalg import operator_norm
from blaschke_radius.models import Method
from blaschke_radius.pick import (
    PickProblem,
    critical_gamma,
    diagonal_bound,
    generalized_critical_gamma,
    is_feasible,
    monotonicity_certificate,
    node_multiplicities,
    norm_via_pick,
    pick_closed_form_gamma,
    pick_matrix,
    pick_problem_from_blaschke,
    radius_via_pick,
)

ORIGIN_HALF = (0.0, 0.5)


def _svd_norm(zeros, t):
    a = shift_matrix(BlaschkeProduct(zeros)).matrix
    return operator_norm(np.eye(a.shape[0]) + t * a)


# ---------------------------------------------------------------------------
# PickProblem
# ---------------------------------------------------------------------------


def test_problem_coerces_fields():
    problem = PickProblem(nodes=[0, 0.5], t=0.1, gamma=1.2)
    assert problem.nodes == (0j, 0.5 + 0j)
    assert problem.t == 0.1 + 0j


@pytest.mark.parametrize("gamma", [0.0, -1.0])
def test_problem_rejects_non_positive_gamma(gamma):
    with pytest.raises(DomainError):
        PickProblem(nodes=ORIGIN_HALF, t=0.1, gamma=gamma)


def test_problem_rejects_nodes_outside_disk():
    with pytest.raises(DomainError):
        PickProblem(nodes=(0.0, 1.0), t=0.1, gamma=1.2)


def test_problem_rejects_close_nodes():
    with pytest.raises(NodesTooCloseError) as excinfo:
        PickProblem(nodes=(0.0, 1e-10), t=0.1, gamma=1.2)
    assert excinfo.value.details["separation"] == pytest.approx(1e-10)


def test_diagonal_bound():
    assert diagonal_bound(ORIGIN_HALF, 0.1) == pytest.approx(1.05)
    problem = PickProblem(nodes=ORIGIN_HALF, t=0.1, gamma=1.0)
    assert problem.diagonal_bound == pytest.approx(1.05)
    assert problem.below_diagonal_bound


def test_pick_matrix_decomposition():
    problem = pick_problem_from_blaschke(BlaschkeProduct(ORIGIN_HALF), 0.1, 1.2)
    parts = pick_matrix(problem)
    assert np.allclose(parts.E, [[1.0, 1.0], [1.0, 1 / 0.75]])
    assert parts.F[1, 1] == pytest.approx(1.05**2 / 0.75)
    assert np.allclose(parts.assembled, parts.E - parts.F / 1.2**2)
    assert np.allclose(parts.assembled, parts.assembled.conj().T)


# ---------------------------------------------------------------------------
# Feasibility
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "nodes,t,gamma,expected",
    [
        (ORIGIN_HALF, 0.1, 1.2, True),
        (ORIGIN_HALF, 0.1, 1.0, False),
        ((0.0,), 0.3, 1.0, True),
    ],
)
def test_feasibility_examples(nodes, t, gamma, expected):
    result = is_feasible(PickProblem(nodes=nodes, t=t, gamma=gamma))
    assert result.feasible is expected


def test_feasibility_backends_agree():
    problem = PickProblem(nodes=(0.2 + 0.1j, -0.4, 0.6j), t=0.2, gamma=1.1)
    lapack = is_feasible(problem)
    jacobi = is_feasible(problem, method="jacobi")
    assert lapack.feasible is jacobi.feasible
    assert lapack.min_eigenvalue == pytest.approx(jacobi.min_eigenvalue, abs=1e-10)


def test_monotonicity_certificate():
    nodes = (0.3, -0.5 + 0.2j, 0.1j)
    assert monotonicity_certificate(nodes, 0.1, 1.0, 1.2)
    assert monotonicity_certificate(nodes, 0.1j, 1.3, 1.05)


# ---------------------------------------------------------------------------
# Critical gamma
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("t", [0.4, 0.2, 0.1, 0.05, 0.025])
def test_origin_half_closed_form(t):
    result = critical_gamma(ORIGIN_HALF, t)
    assert result.value == pytest.approx(pick_closed_form_gamma(t), abs=1e-9)
    assert result.value == pytest.approx(_svd_norm(ORIGIN_HALF, t), abs=1e-8)
    assert result.method is Method.PICK
    assert result.diagnostics["trivial_bracket"] == 0.0


def test_closed_form_gamma_at_one_tenth():
    assert pick_closed_form_gamma(0.1) == pytest.approx(1.0759142, abs=1e-7)
    assert pick_closed_form_gamma(0.0) == pytest.approx(1.0)


def test_trivial_bracket_returns_lower_end():
    result = critical_gamma((0.0,), 0.3)
    assert result.value == pytest.approx(1.0)
    assert result.diagnostics["trivial_bracket"] == 1.0
    assert result.diagnostics["iterations"] == 0.0


def test_critical_gamma_matches_svd_for_complex_t():
    rng = np.random.default_rng(8)
    for _ in range(10):
        zeros = tuple(0.85 * rng.uniform(0, 1, 3) * np.exp(2j * np.pi * rng.uniform(0, 1, 3)))
        t = 0.1 * cmath.exp(-1j * rng.uniform(0, 2 * np.pi))
        assert critical_gamma(zeros, t).value == pytest.approx(_svd_norm(zeros, t), abs=1e-8)


def test_generalized_eigenproblem_agrees():
    nodes = (0.3, -0.5 + 0.2j, 0.1j)
    assert generalized_critical_gamma(nodes, 0.1) == pytest.approx(critical_gamma(nodes, 0.1).value, abs=1e-8)


def test_jacobi_backend_bisection():
    result = critical_gamma(ORIGIN_HALF, 0.1, method="jacobi")
    assert result.value == pytest.approx(pick_closed_form_gamma(0.1), abs=1e-9)


# ---------------------------------------------------------------------------
# Repeated zeros and the radius route
# ---------------------------------------------------------------------------


def test_node_multiplicities():
    assert node_multiplicities((0.0, 0.5, 0.0)) == ((0j, 2), (0.5 + 0j, 1))
    assert node_multiplicities((0.3, 0.3 + 1e-12, 0.3)) == ((0.3 + 0j, 3),)
    with pytest.raises(DomainError):
        node_multiplicities(())


@pytest.mark.parametrize("t", [0.1, 0.3j, -0.25 + 0.1j])
def test_jordan_block_of_two(t):
    # ||I + t J|| for the 2x2 Jordan block
    expected = (abs(t) + (abs(t) ** 2 + 4) ** 0.5) / 2
    result = critical_gamma((0.0, 0.0), t)
    assert result.value == pytest.approx(expected, abs=1e-9)
    assert result.diagnostics["max_multiplicity"] == 2.0


@pytest.mark.parametrize(
    "zeros",
    [(0.0, 0.0, 0.0), (0.3, 0.3, -0.2), (0.4j, 0.4j, 0.1, 0.4j), (0.5 - 0.2j, 0.5 - 0.2j, -0.3 + 0.3j, -0.3 + 0.3j)],
)
@pytest.mark.parametrize("t", [0.1, 0.2 * cmath.exp(1.1j)])
def test_repeated_zeros_match_svd(zeros, t):
    assert critical_gamma(zeros, t).value == pytest.approx(_svd_norm(zeros, t), abs=1e-8)


def test_generalized_eigenproblem_with_repeated_nodes():
    zeros = (0.3, 0.3, -0.2)
    assert generalized_critical_gamma(zeros, 0.1) == pytest.approx(_svd_norm(zeros, 0.1), abs=1e-8)


@pytest.mark.parametrize("zeros", [(0.0, 0.0), (0.0, 0.0, 0.0)])
def test_norm_via_pick_repeated_zeros(zeros):
    result = norm_via_pick(BlaschkeProduct(zeros), 0.1)
    assert result.value == pytest.approx(_svd_norm(zeros, 0.1), abs=1e-8)
    assert not result.warnings


def test_norm_via_pick_distinct_zeros():
    result = norm_via_pick(BlaschkeProduct(ORIGIN_HALF), 0.1)
    assert not result.warnings
    assert result.diagnostics["max_multiplicity"] == 1.0


@pytest.mark.slow
def test_radius_via_pick_origin_half():
    estimate = radius_via_pick(BlaschkeProduct(ORIGIN_HALF))
    assert estimate.value == pytest.approx(0.75, abs=1e-4)
    assert estimate.ladder is not None


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3])
def test_radius_via_pick_jordan_blocks(n):
    estimate = radius_via_pick(BlaschkeProduct.power(0, n))
    assert estimate.value == pytest.approx(np.cos(np.pi / (n + 1)), abs=1e-4)
