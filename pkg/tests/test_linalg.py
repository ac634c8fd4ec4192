"""Hermitian eigen-solvers, norms and PSD helpers."""

from __future__ import annotations

import numpy as np
import pytest

from blaschke_radius.blaschke import BlaschkeProduct, shift_matrix
from blaschke_radius.exceptions import DomainError, NonConvergenceError, NotHermitianError
from blaschke_radius.linalg import (
    as_complex_matrix,
    batched_max_eigenvalue,
    hermitian_eigen,
    hermitian_part,
    loewner_step_certificate,
    min_eigenvalue,
    operator_norm,
    rank_one_defect_check,
    reconstruction_residual,
    trace_minor_axis,
)


def _random_hermitian(n, seed):
    rng = np.random.default_rng(seed)
    x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return hermitian_part(x)


# ---------------------------------------------------------------------------
# Input coercion
# ---------------------------------------------------------------------------


def test_as_complex_matrix_promotes_scalar():
    assert as_complex_matrix(2.5).shape == (1, 1)


def test_as_complex_matrix_rejects_non_square():
    with pytest.raises(DomainError):
        as_complex_matrix(np.ones((2, 3)))
    assert as_complex_matrix(np.ones((2, 3)), square=False).shape == (2, 3)


def test_hermitian_part():
    x = np.array([[1, 2j], [0, 3]])
    h = hermitian_part(x)
    assert np.allclose(h, h.conj().T)
    assert h[0, 1] == 1j


# ---------------------------------------------------------------------------
# hermitian_eigen
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n,seed", [(1, 0), (2, 1), (5, 2), (8, 3)])
def test_jacobi_matches_lapack(n, seed):
    a = _random_hermitian(n, seed)
    jacobi = hermitian_eigen(a, method="jacobi")
    lapack = hermitian_eigen(a, method="lapack")
    assert np.allclose(jacobi.eigenvalues, lapack.eigenvalues, atol=1e-10)
    assert reconstruction_residual(a, jacobi) < 1e-12
    assert np.all(np.diff(jacobi.eigenvalues) <= 0)


def test_jacobi_eigenvectors_are_orthonormal():
    a = _random_hermitian(6, 7)
    result = hermitian_eigen(a)
    v = result.eigenvectors
    assert np.allclose(v.conj().T @ v, np.eye(6), atol=1e-12)
    assert result.offdiag_residual <= 1e-13 * np.linalg.norm(a)


def test_diagonal_matrix_needs_no_sweeps():
    result = hermitian_eigen(np.diag([3.0, -1.0, 2.0]))
    assert result.sweeps == 0
    assert list(result.eigenvalues) == [3.0, 2.0, -1.0]
    assert result.max_eigenvalue == 3.0
    assert result.min_eigenvalue == -1.0


def test_top_eigenvector():
    a = np.array([[2.0, 1j], [-1j, 2.0]])
    result = hermitian_eigen(a)
    v = result.top_eigenvector
    assert result.max_eigenvalue == pytest.approx(3.0)
    assert np.allclose(a @ v, 3.0 * v)


def test_not_hermitian_raises():
    with pytest.raises(NotHermitianError) as excinfo:
        hermitian_eigen(np.array([[0.0, 1.0], [0.0, 0.0]]))
    assert excinfo.value.code == "not_hermitian"


def test_unknown_method_raises():
    with pytest.raises(DomainError):
        hermitian_eigen(np.eye(2), method="qr")


def test_sweep_cap_raises():
    with pytest.raises(NonConvergenceError):
        hermitian_eigen(_random_hermitian(6, 11), max_sweeps=1)


# ---------------------------------------------------------------------------
# Derived quantities
# ---------------------------------------------------------------------------


def test_min_eigenvalue_backends_agree():
    a = _random_hermitian(4, 5)
    assert min_eigenvalue(a, method="jacobi") == pytest.approx(min_eigenvalue(a), abs=1e-10)


def test_batched_max_eigenvalue():
    stack = np.stack([np.diag([1.0, 4.0]), np.diag([-2.0, -3.0])])
    assert list(batched_max_eigenvalue(stack)) == [4.0, -2.0]


def test_operator_norm_matches_numpy():
    rng = np.random.default_rng(3)
    x = rng.normal(size=(3, 5)) + 1j * rng.normal(size=(3, 5))
    assert operator_norm(x) == pytest.approx(np.linalg.norm(x, 2), rel=1e-12)


def test_rank_one_defect_of_compressed_shift():
    a = shift_matrix(BlaschkeProduct((0.3, -0.5 + 0.2j, 0.1j, 0.7))).matrix
    assert rank_one_defect_check(a) <= 1e-10
    assert rank_one_defect_check(np.array([[0.5]])) == 0.0


def test_rank_one_defect_detects_generic_matrix():
    assert rank_one_defect_check(0.5 * np.eye(3)) == pytest.approx(0.75)


def test_loewner_step_certificate():
    a = _random_hermitian(4, 9)
    assert loewner_step_certificate(a, np.diag([0.0, 0.1, 0.2, 0.0]))
    assert not loewner_step_certificate(a, -np.eye(4))


def test_trace_minor_axis_of_triangular_2x2():
    a = np.array([[0.2, 0.6j], [0.0, -0.4]])
    assert trace_minor_axis(a) == pytest.approx(0.6)
    assert trace_minor_axis(a, eigenvalues=[0.2, -0.4]) == pytest.approx(0.6)
