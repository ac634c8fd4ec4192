"""Eigenvalue-sweep ground truth for numerical ranges and norms.

The support function of the numerical range in direction ``theta`` is the
largest eigenvalue of ``H(theta) = (e^{-i theta} A + e^{i theta} A*) / 2``;
the numerical radius is its maximum over ``theta``. A uniform grid is
evaluated in one batched LAPACK call, then the best local maxima are refined
with bounded Brent search.

The same angle maximiser drives the limit route: the difference quotient
``(||I + t e^{-i theta} A|| - 1) / t`` tends to the support function as
``t -> 0+`` and is extrapolated over a decreasing ladder of ``t``.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np
import numpy.typing as npt
from scipy.optimize import minimize_scalar

from .const import ANGULAR_TOL, LIMIT_THETA_SAMPLES, LIMIT_TOL, REFINED_MAXIMA, T_LADDER, THETA_SAMPLES, TIE_TOL, TWO_PI
from .exceptions import DomainError, ExtrapolationUnstableError
from .linalg import (
    ComplexMatrix,
    EigenMethod,
    as_complex_matrix,
    batched_max_eigenvalue,
    hermitian_eigen,
    hermitian_part,
    operator_norm,
)

_LOGGER = logging.getLogger(__name__)

RealVector = npt.NDArray[np.float64]


@dataclass(frozen=True, slots=True)
class BoundarySample:
    """Support value in direction ``theta`` and the boundary point attaining it."""

    theta: float
    support_value: float
    boundary_point: complex


@dataclass(frozen=True, slots=True)
class LimitLadder:
    """Difference quotients over a ``t`` ladder and their linear extrapolants to ``t = 0``."""

    t_values: tuple[float, ...]
    quotients: tuple[float, ...]
    extrapolants: tuple[float, ...]

    @property
    def limit(self) -> float:
        return self.extrapolants[-1]

    @property
    def spread(self) -> float:
        """Disagreement of the last two extrapolants."""
        if len(self.extrapolants) < 2:
            return 0.0
        return abs(self.extrapolants[-1] - self.extrapolants[-2])


@dataclass(frozen=True, slots=True)
class RadiusEstimate:
    value: float
    argmax_theta: float
    refinement_width: float
    ladder: LimitLadder | None = field(default=None)


def _hermitian_stack(a: ComplexMatrix, thetas: RealVector) -> npt.NDArray[np.complex128]:
    rotated = np.exp(-1j * thetas)[:, None, None] * a[None, :, :]
    return (rotated + np.conj(np.swapaxes(rotated, -1, -2))) / 2.0


def support_values(matrix: Any, thetas: Sequence[float] | RealVector) -> RealVector:
    """Support function at many angles (batched LAPACK)."""
    a = as_complex_matrix(matrix)
    return batched_max_eigenvalue(_hermitian_stack(a, np.asarray(thetas, dtype=float)))


def support_function(matrix: Any, theta: float, *, method: EigenMethod = "jacobi") -> BoundarySample:
    """Support value at ``theta`` and the boundary point ``v* A v`` of the top eigenvector."""
    a = as_complex_matrix(matrix)
    result = hermitian_eigen(hermitian_part(np.exp(-1j * theta) * a), method=method)
    v = result.top_eigenvector
    point = complex(np.vdot(v, a @ v))
    return BoundarySample(theta=float(theta) % TWO_PI, support_value=result.max_eigenvalue, boundary_point=point)


def boundary_samples(matrix: Any, samples: int) -> list[BoundarySample]:
    """``samples`` uniformly spaced boundary samples over ``[0, 2 pi)``."""
    if samples < 1:
        raise DomainError(f"samples must be positive, got {samples}")
    a = as_complex_matrix(matrix)
    thetas = TWO_PI * np.arange(samples) / samples
    values, vectors = np.linalg.eigh(_hermitian_stack(a, thetas))
    top = vectors[..., -1]
    points = np.einsum("ki,ij,kj->k", np.conj(top), a, top)
    return [
        BoundarySample(theta=float(th), support_value=float(val), boundary_point=complex(pt))
        for th, val, pt in zip(thetas, values[:, -1], points)
    ]


def maximize_over_angle(
    objective: Callable[[float], float],
    thetas: RealVector,
    values: RealVector,
    *,
    angular_tol: float = ANGULAR_TOL,
    refined: int = REFINED_MAXIMA,
) -> tuple[float, float]:
    """Refine the best grid maxima of a ``2 pi``-periodic objective; returns ``(value, theta)``.

    Equal values (within ``TIE_TOL``) resolve to the smallest angle.
    """
    step = TWO_PI / len(thetas)
    is_peak = (values >= np.roll(values, 1)) & (values >= np.roll(values, -1))
    peaks = np.flatnonzero(is_peak)
    if peaks.size == 0:
        peaks = np.arange(len(thetas))
    order = peaks[np.argsort(-values[peaks], kind="stable")][:refined]

    candidates: list[tuple[float, float]] = []
    for index in order:
        center = float(thetas[index])
        best_value, best_theta = float(values[index]), center
        outcome = minimize_scalar(
            lambda offset, c=center: -objective(c + offset),
            bounds=(-step, step),
            method="bounded",
            options={"xatol": angular_tol},
        )
        if -outcome.fun > best_value + TIE_TOL:
            best_value, best_theta = float(-outcome.fun), center + float(outcome.x)
        candidates.append((best_value, best_theta % TWO_PI))

    top = max(value for value, _ in candidates)
    return min(((v, th) for v, th in candidates if v >= top - TIE_TOL), key=lambda item: item[1])


def numerical_radius(
    matrix: Any,
    *,
    samples: int = THETA_SAMPLES,
    angular_tol: float = ANGULAR_TOL,
) -> RadiusEstimate:
    """``w(A) = max_theta lambda_max(H(theta))``."""
    a = as_complex_matrix(matrix)
    thetas = TWO_PI * np.arange(samples) / samples
    values = support_values(a, thetas)
    value, theta = maximize_over_angle(
        lambda th: float(support_values(a, [th])[0]),
        thetas,
        values,
        angular_tol=angular_tol,
    )
    _LOGGER.debug("numerical radius %.15g at theta=%.12f", value, theta)
    return RadiusEstimate(value=max(value, 0.0), argmax_theta=theta, refinement_width=angular_tol)


def norm_I_plus_tA(matrix: Any, t: complex) -> float:
    """``||I + t A||``."""
    a = as_complex_matrix(matrix)
    return operator_norm(np.eye(a.shape[0], dtype=complex) + t * a)


def richardson_ladder(t_values: Sequence[float], quotients: Sequence[float]) -> LimitLadder:
    """Extrapolate each consecutive pair of quotients linearly to ``t = 0``.

    For a halving ladder this is ``2 q_{k+1} - q_k``.
    """
    ts = [float(t) for t in t_values]
    qs = [float(q) for q in quotients]
    extrapolants = tuple(
        (ts[k] * qs[k + 1] - ts[k + 1] * qs[k]) / (ts[k] - ts[k + 1]) for k in range(len(ts) - 1)
    )
    return LimitLadder(t_values=tuple(ts), quotients=tuple(qs), extrapolants=extrapolants)


def _ladder_norms(a: ComplexMatrix, thetas: RealVector, ladder: Sequence[float]) -> npt.NDArray[np.float64]:
    n = a.shape[0]
    steps = np.asarray(ladder, dtype=float)
    factors = steps[None, :] * np.exp(-1j * thetas)[:, None]
    perturbed = np.eye(n, dtype=complex) + factors[:, :, None, None] * a
    gram = np.conj(np.swapaxes(perturbed, -1, -2)) @ perturbed
    return np.sqrt(np.maximum(np.linalg.eigvalsh(gram)[..., -1], 0.0))


def limit_ladder(matrix: Any, theta: float, ladder: Sequence[float] = T_LADDER) -> LimitLadder:
    """Quotients ``(||I + t e^{-i theta} A|| - 1) / t`` and their extrapolants."""
    a = as_complex_matrix(matrix)
    norms = _ladder_norms(a, np.array([theta]), ladder)[0]
    quotients = (norms - 1.0) / np.asarray(ladder, dtype=float)
    return richardson_ladder(ladder, quotients)


def radius_via_limit(
    matrix: Any,
    *,
    ladder: Sequence[float] = T_LADDER,
    samples: int = LIMIT_THETA_SAMPLES,
    angular_tol: float = ANGULAR_TOL,
    stability_tol: float = LIMIT_TOL,
) -> RadiusEstimate:
    """Numerical radius as ``max_theta lim_{t->0+} (||I + t e^{-i theta} A|| - 1) / t``.

    Raises :class:`ExtrapolationUnstableError` when the last two extrapolants
    at the winning angle differ by more than ``stability_tol``.
    """
    a = as_complex_matrix(matrix)
    steps = np.asarray(ladder, dtype=float)
    thetas = TWO_PI * np.arange(samples) / samples
    quotients = (_ladder_norms(a, thetas, ladder) - 1.0) / steps[None, :]
    grid = np.array([richardson_ladder(steps, row).limit for row in quotients])

    value, theta = maximize_over_angle(
        lambda th: limit_ladder(a, th, ladder).limit,
        thetas,
        grid,
        angular_tol=angular_tol,
    )
    winner = limit_ladder(a, theta, ladder)
    if winner.spread > stability_tol:
        raise ExtrapolationUnstableError(
            f"extrapolants disagree by {winner.spread:.3e} at theta={theta:.6f}",
            details={"theta": theta, "spread": winner.spread},
        )
    return RadiusEstimate(value=max(value, 0.0), argmax_theta=theta, refinement_width=angular_tol, ladder=winner)
