"""Small dense Hermitian eigenproblems, PSD tests and norms.

Two eigen backends share one result type:

* ``"jacobi"`` -- cyclic Jacobi with complex 2x2 rotations. Each pivot is
  first turned real by a diagonal phase, then annihilated by the classical
  real rotation ``t = sgn(tau) / (|tau| + sqrt(1 + tau^2))``.
* ``"lapack"`` -- :func:`numpy.linalg.eigh`, used by the angle and
  bisection sweeps where thousands of small problems are solved.

Callers hermitize explicitly with :func:`hermitian_part`; nothing in this
module symmetrizes a matrix on its own.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Literal

import numpy as np
import numpy.typing as npt

from .const import HERMITIAN_TOL, JACOBI_MAX_SWEEPS, TOL_EIG
from .exceptions import DomainError, NonConvergenceError, NotHermitianError

_LOGGER = logging.getLogger(__name__)

ComplexMatrix = npt.NDArray[np.complex128]
RealVector = npt.NDArray[np.float64]
EigenMethod = Literal["jacobi", "lapack"]

# Jacobi stops once the off-diagonal Frobenius norm drops below this share of ||A||_F.
_JACOBI_OFFDIAG_TOL = 1e-13


@dataclass(frozen=True, slots=True)
class EigenResult:
    """Spectral decomposition ``A = V diag(eigenvalues) V*`` with descending eigenvalues."""

    eigenvalues: RealVector
    eigenvectors: ComplexMatrix
    offdiag_residual: float
    sweeps: int = 0

    @property
    def max_eigenvalue(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def min_eigenvalue(self) -> float:
        return float(self.eigenvalues[-1])

    @property
    def top_eigenvector(self) -> npt.NDArray[np.complex128]:
        return self.eigenvectors[:, 0]


def as_complex_matrix(values: Any, *, square: bool = True) -> ComplexMatrix:
    """Coerce ``values`` to a 2-D complex array, optionally requiring it square."""
    matrix = np.array(values, dtype=complex, ndmin=2)
    if matrix.ndim != 2 or matrix.size == 0:
        raise DomainError(f"expected a non-empty 2-D matrix, got shape {matrix.shape}")
    if square and matrix.shape[0] != matrix.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {matrix.shape}")
    return matrix


def hermitian_part(matrix: Any) -> ComplexMatrix:
    """``(X + X*) / 2``."""
    x = as_complex_matrix(matrix)
    return (x + x.conj().T) / 2.0


def _check_hermitian(a: ComplexMatrix) -> None:
    scale = float(np.linalg.norm(a))
    skew = float(np.linalg.norm(a - a.conj().T))
    if skew > HERMITIAN_TOL * scale:
        raise NotHermitianError(
            f"matrix is not Hermitian: ||A - A*||_F = {skew:.3e}",
            details={"skew": skew, "scale": scale},
        )


def _offdiag_norm(a: ComplexMatrix) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _jacobi(a: ComplexMatrix, max_sweeps: int) -> tuple[RealVector, ComplexMatrix, float, int]:
    n = a.shape[0]
    work = a.copy()
    vectors = np.eye(n, dtype=complex)
    scale = float(np.linalg.norm(work))
    target = _JACOBI_OFFDIAG_TOL * scale

    off = _offdiag_norm(work)
    sweep = 0
    while off > target:
        if sweep == max_sweeps:
            raise NonConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal {off:.3e})",
                details={"sweeps": sweep, "offdiag": off},
            )
        sweep += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = work[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                phase = apq / r
                tau = (work[q, q].real - work[p, p].real) / (2.0 * r)
                t = 1.0 if tau == 0.0 else float(np.sign(tau)) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                rot = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]], dtype=complex)
                idx = [p, q]
                work[:, idx] = work[:, idx] @ rot
                work[idx, :] = rot.conj().T @ work[idx, :]
                vectors[:, idx] = vectors[:, idx] @ rot
                work[p, q] = work[q, p] = 0.0
                work[p, p] = work[p, p].real
                work[q, q] = work[q, q].real
        off = _offdiag_norm(work)

    _LOGGER.debug("Jacobi converged in %s sweeps (n=%s, off=%.2e)", sweep, n, off)
    return np.diag(work).real.copy(), vectors, off, sweep


def hermitian_eigen(
    matrix: Any,
    *,
    method: EigenMethod = "jacobi",
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> EigenResult:
    """Full eigen-decomposition of a Hermitian matrix, eigenvalues descending.

    Raises :class:`NotHermitianError` when ``||A - A*||_F`` exceeds
    ``HERMITIAN_TOL * ||A||_F``.
    """
    a = as_complex_matrix(matrix)
    _check_hermitian(a)
    if method == "jacobi":
        values, vectors, off, sweeps = _jacobi(a, max_sweeps)
    elif method == "lapack":
        values, vectors = np.linalg.eigh(a)
        off = _offdiag_norm(vectors.conj().T @ a @ vectors)
        sweeps = 0
    else:
        raise DomainError(f"unknown eigensolver {method!r}")
    order = np.argsort(-values, kind="stable")
    return EigenResult(
        eigenvalues=np.asarray(values[order], dtype=float),
        eigenvectors=np.asarray(vectors[:, order], dtype=complex),
        offdiag_residual=off,
        sweeps=sweeps,
    )


def reconstruction_residual(matrix: Any, result: EigenResult) -> float:
    """``||AV - V Lambda||_F / ||A||_F`` (0 for the zero matrix)."""
    a = as_complex_matrix(matrix)
    scale = float(np.linalg.norm(a))
    residual = float(np.linalg.norm(a @ result.eigenvectors - result.eigenvectors * result.eigenvalues))
    return residual / scale if scale else residual


def min_eigenvalue(matrix: Any, *, method: EigenMethod = "lapack") -> float:
    """Smallest eigenvalue; PSD exactly when this is ``>= 0``."""
    a = as_complex_matrix(matrix)
    if method == "jacobi":
        return hermitian_eigen(a, method="jacobi").min_eigenvalue
    _check_hermitian(a)
    return float(np.linalg.eigvalsh(a)[0])


def batched_max_eigenvalue(stack: Any) -> RealVector:
    """Largest eigenvalue of every matrix in a ``(k, n, n)`` Hermitian stack."""
    return np.asarray(np.linalg.eigvalsh(np.asarray(stack, dtype=complex))[..., -1], dtype=float)


def operator_norm(matrix: Any) -> float:
    """Largest singular value, as ``sqrt(lambda_max(A* A))``."""
    a = as_complex_matrix(matrix, square=False)
    gram = a.conj().T @ a
    return float(np.sqrt(max(float(np.linalg.eigvalsh(gram)[-1]), 0.0)))


def rank_one_defect_check(matrix: Any) -> float:
    """Second-largest eigenvalue magnitude of ``I - A A*`` (0 for a 1x1 matrix)."""
    a = as_complex_matrix(matrix)
    n = a.shape[0]
    if n == 1:
        return 0.0
    defect = np.eye(n, dtype=complex) - a @ a.conj().T
    magnitudes = np.sort(np.abs(np.linalg.eigvalsh(defect)))[::-1]
    return float(magnitudes[1])


def loewner_step_certificate(matrix: Any, increment: Any, *, tol: float = TOL_EIG) -> bool:
    """Check ``P >= 0`` and ``lambda_min(A + P) >= lambda_min(A) - tol`` (Weyl)."""
    a = as_complex_matrix(matrix)
    p = as_complex_matrix(increment)
    if min_eigenvalue(p) < -tol:
        return False
    return min_eigenvalue(a + p) >= min_eigenvalue(a) - tol


def trace_minor_axis(matrix: Any, eigenvalues: Any | None = None) -> float:
    """``sqrt(tr(A* A) - sum |lambda|^2)``, the minor axis of an elliptical numerical range."""
    a = as_complex_matrix(matrix)
    spectrum = np.linalg.eigvals(a) if eigenvalues is None else np.asarray(eigenvalues, dtype=complex)
    gap = float(np.linalg.norm(a) ** 2 - np.sum(np.abs(spectrum) ** 2))
    return float(np.sqrt(max(gap, 0.0)))
