"""Nevanlinna–Pick route to ``||I + t S_B||``.

``||I + t S_B|| <= gamma`` exactly when the interpolation
``h(z_k) = (1 + t z_k) / gamma`` has a solution bounded by one, i.e. when

    M_jk = (1 - (1 + t z_j)(1 + conj(t z_k)) / gamma^2) / (1 - z_j conj(z_k))

is positive semidefinite. Writing ``M = E - F / gamma^2`` with the Szegő
kernel ``E`` and ``F = D E D*`` (``D = diag(1 + t z_k)``) shows ``M`` is
Loewner-nondecreasing in ``gamma``, so the critical ``gamma`` is found by
bisection on the smallest eigenvalue.

A node of multiplicity ``m`` contributes the derivative kernels
``z^j / (1 - conj(z_k) z)^(j + 1)`` for ``j < m``, and ``D`` becomes block
lower-bidiagonal with ``t`` below the diagonal. This is the limit of the
separated-node matrix, without its ill-conditioning.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from math import comb
from typing import Any

import numpy as np
from scipy.linalg import eigh
from scipy.optimize import bisect

from .blaschke import BlaschkeProduct
from .const import (
    ANGULAR_TOL,
    LIMIT_THETA_SAMPLES,
    LIMIT_TOL,
    NODE_SEPARATION,
    PSD_BAND,
    T_LADDER,
    TOL_BISECT,
    TWO_PI,
)
from .exceptions import BracketFailureError, DomainError, ExtrapolationUnstableError, NodesTooCloseError
from .linalg import ComplexMatrix, EigenMethod, hermitian_part, loewner_step_certificate, min_eigenvalue
from .models import Method, NormResult
from .numrange_oracle import LimitLadder, RadiusEstimate, maximize_over_angle, richardson_ladder

_LOGGER = logging.getLogger(__name__)

# Upper bracket slack above the contraction bound 1 + |t|.
_UPPER_SLACK = 1e-9
_DIAGONAL_SLACK = 1e-12


def _check_nodes(nodes: Sequence[complex]) -> np.ndarray:
    z = np.asarray(nodes, dtype=complex)
    if z.ndim != 1 or z.size == 0:
        raise DomainError("a Pick problem needs at least one node")
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("Pick nodes must lie inside the unit disk")
    gaps = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(gaps, np.inf)
    closest = float(np.min(gaps))
    if closest < NODE_SEPARATION:
        raise NodesTooCloseError(
            f"Pick nodes are {closest:.1e} apart (need >= {NODE_SEPARATION:.0e})",
            details={"separation": closest},
        )
    return z


@dataclass(frozen=True, slots=True)
class PickProblem:
    nodes: tuple[complex, ...]
    t: complex
    gamma: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", tuple(complex(z) for z in self.nodes))
        object.__setattr__(self, "t", complex(self.t))
        if not self.gamma > 0:
            raise DomainError(f"gamma must be positive, got {self.gamma}")
        _check_nodes(self.nodes)

    @property
    def diagonal_bound(self) -> float:
        """``max_k |1 + t z_k|``: no smaller ``gamma`` can be feasible."""
        return diagonal_bound(self.nodes, self.t)

    @property
    def below_diagonal_bound(self) -> bool:
        return self.gamma < self.diagonal_bound - _DIAGONAL_SLACK


@dataclass(frozen=True, slots=True)
class PickMatrixDecomposition:
    """``E`` (Szegő kernel), ``F = D E D*`` and ``assembled = E - F / gamma^2``."""

    E: ComplexMatrix
    F: ComplexMatrix
    assembled: ComplexMatrix


@dataclass(frozen=True, slots=True)
class Feasibility:
    feasible: bool
    min_eigenvalue: float


def diagonal_bound(nodes: Sequence[complex], t: complex) -> float:
    return float(np.max(np.abs(1.0 + t * np.asarray(nodes, dtype=complex))))


def _kernels(z: np.ndarray, t: complex) -> tuple[ComplexMatrix, ComplexMatrix]:
    szego = hermitian_part(1.0 / (1.0 - z[:, None] * np.conj(z)[None, :]))
    d = 1.0 + t * z
    weighted = hermitian_part(d[:, None] * szego * np.conj(d)[None, :])
    return szego, weighted


def node_multiplicities(nodes: Sequence[complex]) -> tuple[tuple[complex, int], ...]:
    """Group nodes closer than ``NODE_SEPARATION``; each group keeps its first node."""
    z = np.asarray(nodes, dtype=complex)
    if z.ndim != 1 or z.size == 0:
        raise DomainError("a Pick problem needs at least one node")
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("Pick nodes must lie inside the unit disk")
    groups: list[list[Any]] = []
    for node in z:
        for group in groups:
            if abs(node - group[0]) < NODE_SEPARATION:
                group[1] += 1
                break
        else:
            groups.append([complex(node), 1])
    return tuple((center, count) for center, count in groups)


def _derivative_kernel(zp: complex, rows: int, zq: complex, cols: int) -> ComplexMatrix:
    # Entry (i, j) is <k_{zq, j}, k_{zp, i}> for k_{w, j}(z) = z^j / (1 - conj(w) z)^(j + 1).
    u = np.conj(zq)
    base = 1.0 / (1.0 - zp * u)
    block = np.zeros((rows, cols), dtype=complex)
    for i in range(rows):
        for j in range(cols):
            block[i, j] = sum(
                comb(j, k) * comb(i + j - k, i - k) * zp ** (j - k) * u ** (i - k) * base ** (i + j + 1 - k)
                for k in range(min(i, j) + 1)
            )
    return block


def _confluent_kernels(groups: Sequence[tuple[complex, int]], t: complex) -> tuple[ComplexMatrix, ComplexMatrix]:
    """Kernels for nodes with multiplicity; a node of multiplicity ``m`` adds derivative conditions up to ``m - 1``."""
    if all(count == 1 for _, count in groups):
        return _kernels(np.array([center for center, _ in groups], dtype=complex), t)
    sizes = [count for _, count in groups]
    offsets = np.concatenate(([0], np.cumsum(sizes)))
    n = int(offsets[-1])
    szego = np.zeros((n, n), dtype=complex)
    taylor = np.zeros((n, n), dtype=complex)
    for p, (zp, mp) in enumerate(groups):
        rows = slice(offsets[p], offsets[p + 1])
        for q, (zq, mq) in enumerate(groups):
            szego[rows, offsets[q] : offsets[q + 1]] = _derivative_kernel(zp, mp, zq, mq)
        start = int(offsets[p])
        for i in range(mp):
            taylor[start + i, start + i] = 1.0 + t * zp
            if i:
                taylor[start + i, start + i - 1] = t
    szego = hermitian_part(szego)
    return szego, hermitian_part(taylor @ szego @ taylor.conj().T)


def pick_matrix(problem: PickProblem) -> PickMatrixDecomposition:
    z = _check_nodes(problem.nodes)
    szego, weighted = _kernels(z, problem.t)
    return PickMatrixDecomposition(E=szego, F=weighted, assembled=szego - weighted / problem.gamma**2)


def pick_problem_from_blaschke(b: BlaschkeProduct, t: complex, gamma: float) -> PickProblem:
    """Pick problem with the zeros of ``B`` as nodes."""
    return PickProblem(nodes=b.zeros, t=t, gamma=gamma)


def is_feasible(problem: PickProblem, *, method: EigenMethod = "lapack", band: float = PSD_BAND) -> Feasibility:
    """PSD test of the assembled matrix with acceptance band ``-band``."""
    lowest = min_eigenvalue(pick_matrix(problem).assembled, method=method)
    return Feasibility(feasible=lowest >= -band, min_eigenvalue=lowest)


def monotonicity_certificate(nodes: Sequence[complex], t: complex, gamma1: float, gamma2: float) -> bool:
    """Check ``M(gamma2) - M(gamma1) = (1/gamma1^2 - 1/gamma2^2) F >= 0`` and the Weyl bound."""
    low, high = sorted((gamma1, gamma2))
    szego, weighted = _kernels(_check_nodes(nodes), t)
    base = szego - weighted / low**2
    step = (1.0 / low**2 - 1.0 / high**2) * weighted
    return loewner_step_certificate(base, step)


def critical_gamma(
    nodes: Sequence[complex],
    t: complex,
    *,
    tol_bisect: float = TOL_BISECT,
    band: float = PSD_BAND,
    method: EigenMethod = "lapack",
) -> NormResult:
    """Smallest ``gamma`` with a PSD Pick matrix, which is ``||I + t S_B||``.

    Bisects on ``[max_k |1 + t z_k|, 1 + |t| + 1e-9]``. When the lower end is
    already feasible it is returned with ``trivial_bracket = 1``. Repeated nodes
    carry derivative conditions, so the zeros of ``B`` can be passed as they are.
    """
    groups = node_multiplicities(nodes)
    z = np.array([center for center, _ in groups], dtype=complex)
    szego, weighted = _confluent_kernels(groups, t)

    def lowest(gamma: float) -> float:
        return min_eigenvalue(szego - weighted / gamma**2, method=method)

    lower = diagonal_bound(z, t)
    upper = 1.0 + abs(t) + _UPPER_SLACK
    at_lower = lowest(lower)
    diagnostics = {
        "lower": lower,
        "upper": upper,
        "iterations": 0.0,
        "trivial_bracket": 0.0,
        "max_multiplicity": float(max(count for _, count in groups)),
    }

    if at_lower >= -band:
        _LOGGER.debug("Pick bracket is trivial at gamma=%.15g", lower)
        return NormResult(
            value=lower,
            method=Method.PICK,
            diagnostics={**diagnostics, "min_eigenvalue": at_lower, "trivial_bracket": 1.0},
        )

    at_upper = lowest(upper)
    if at_upper < -band:
        raise BracketFailureError(
            f"Pick matrix is not PSD at the upper bracket gamma={upper:.15g}",
            details={"lower": lower, "upper": upper, "min_eigenvalue": at_upper},
        )
    if at_upper <= 0.0:
        gamma, iterations = upper, 0
    else:
        gamma, info = bisect(lowest, lower, upper, xtol=tol_bisect, full_output=True)
        iterations = info.iterations
    residual = lowest(gamma)
    if residual < -band:
        gamma += tol_bisect
        residual = lowest(gamma)
    _LOGGER.debug("critical gamma %.15g after %s bisection steps", gamma, iterations)
    return NormResult(
        value=gamma,
        method=Method.PICK,
        diagnostics={**diagnostics, "iterations": float(iterations), "min_eigenvalue": residual},
    )


def generalized_critical_gamma(nodes: Sequence[complex], t: complex) -> float:
    """``sqrt(lambda_max)`` of the generalized problem ``F v = lambda E v``."""
    szego, weighted = _confluent_kernels(node_multiplicities(nodes), t)
    values = eigh(weighted, szego, eigvals_only=True)
    return float(np.sqrt(max(float(values[-1]), 0.0)))


def pick_closed_form_gamma(t: float) -> float:
    """Critical ``gamma`` for nodes ``{0, 1/2}`` and real ``t``: the larger root in ``gamma^2``."""
    s = 2.0 + t + t * t
    disc = max(s * s - 4.0 * (1.0 + t + t * t / 4.0), 0.0)
    return float(np.sqrt((s + np.sqrt(disc)) / 2.0))


def norm_via_pick(
    b: BlaschkeProduct,
    t: complex,
    *,
    tol_bisect: float = TOL_BISECT,
    method: EigenMethod = "lapack",
) -> NormResult:
    """``||I + t S_B||`` from the Pick matrix at the zeros of ``B``, repeated zeros included."""
    if b.has_repeated_zeros:
        _LOGGER.debug("repeated zeros enter the Pick matrix through derivative conditions")
    return critical_gamma(b.zeros, t, tol_bisect=tol_bisect, method=method)


def pick_ladder(
    nodes: Sequence[complex],
    theta: float,
    ladder: Sequence[float] = T_LADDER,
    *,
    tol_bisect: float = TOL_BISECT,
) -> LimitLadder:
    """Quotients ``(gamma*(t e^{-i theta}) - 1) / t`` and their extrapolants."""
    turn = np.exp(-1j * theta)
    quotients = [(critical_gamma(nodes, t * turn, tol_bisect=tol_bisect).value - 1.0) / t for t in ladder]
    return richardson_ladder(ladder, quotients)


def radius_via_pick(
    b: BlaschkeProduct,
    *,
    ladder: Sequence[float] = T_LADDER,
    samples: int = LIMIT_THETA_SAMPLES,
    angular_tol: float = ANGULAR_TOL,
    stability_tol: float = LIMIT_TOL,
    tol_bisect: float = TOL_BISECT,
) -> RadiusEstimate:
    """Numerical radius from the slope of ``gamma*(t e^{-i theta})`` at ``t = 0``, maximised over ``theta``."""
    nodes = b.zeros
    thetas = TWO_PI * np.arange(samples) / samples
    grid = np.array([pick_ladder(nodes, th, ladder, tol_bisect=tol_bisect).limit for th in thetas])
    value, theta = maximize_over_angle(
        lambda th: pick_ladder(nodes, th, ladder, tol_bisect=tol_bisect).limit,
        thetas,
        grid,
        angular_tol=angular_tol,
    )
    winner = pick_ladder(nodes, theta, ladder, tol_bisect=tol_bisect)
    if winner.spread > stability_tol:
        raise ExtrapolationUnstableError(
            f"Pick extrapolants disagree by {winner.spread:.3e} at theta={theta:.6f}",
            details={"theta": theta, "spread": winner.spread},
        )
    return RadiusEstimate(value=max(value, 0.0), argmax_theta=theta, refinement_width=angular_tol, ladder=winner)
