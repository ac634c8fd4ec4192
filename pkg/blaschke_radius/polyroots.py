"""Complex polynomial arithmetic and simultaneous root finding.

Coefficients are stored in ascending degree order (``c[0] + c[1] z + ...``),
the convention of :mod:`numpy.polynomial.polynomial`, which does the actual
arithmetic. Roots come from an Aberth–Ehrlich iteration started on a circle of
Cauchy-bound radius, followed by guarded Newton polishing. Two post-passes keep
the output well-behaved for the polynomials this package produces:

* roots closer than :data:`~blaschke_radius.const.ROOT_CLUSTER_RADIUS` are
  reported as a repeated root at their mean (doubled Blaschke zeros and the
  trivial ``±1`` roots must not split);
* when every coefficient is real the returned multiset is closed under
  conjugation exactly, by matching upper and lower half-plane roots and
  averaging each pair.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt
from numpy.polynomial import polynomial as P
from scipy.cluster.hierarchy import fclusterdata
from scipy.optimize import linear_sum_assignment

from .const import ABERTH_MAX_SWEEPS, NEWTON_POLISH_STEPS, ROOT_CLUSTER_RADIUS, TOL_ROOT
from .exceptions import NonConvergenceError, WrongDegreeError

_LOGGER = logging.getLogger(__name__)

ComplexArray = npt.NDArray[np.complex128]

# Rotates the starting circle off the real axis so real-coefficient inputs do
# not start with iterates pinned to it.
_START_ANGLE_OFFSET = 0.4
_STEP_TOL = 4.0 * float(np.finfo(float).eps)
_REAL_AXIS_TOL = 1e-10


@dataclass(frozen=True, slots=True)
class ComplexPolynomial:
    """Immutable complex polynomial, ascending coefficients, trailing zeros trimmed."""

    coefficients: tuple[complex, ...]

    def __post_init__(self) -> None:
        coeffs = [complex(c) for c in self.coefficients]
        if not coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def from_array(cls, coefficients: Iterable[Any]) -> ComplexPolynomial:
        return cls(tuple(complex(c) for c in coefficients))

    @classmethod
    def from_roots(cls, roots: Iterable[complex]) -> ComplexPolynomial:
        """Monic polynomial with the given roots (with multiplicity)."""
        return cls.from_array(P.polyfromroots(np.asarray(list(roots), dtype=complex)))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def array(self) -> ComplexArray:
        return np.asarray(self.coefficients, dtype=complex)

    @property
    def max_abs_coefficient(self) -> float:
        return float(np.max(np.abs(self.array)))

    @property
    def is_real(self) -> bool:
        return all(c.imag == 0 for c in self.coefficients)

    def __call__(self, z: Any) -> Any:
        return P.polyval(z, self.array)

    def derivative(self) -> ComplexPolynomial:
        if self.degree == 0:
            return ComplexPolynomial((0j,))
        return ComplexPolynomial.from_array(P.polyder(self.array))

    def conj_reversed(self) -> ComplexPolynomial:
        """``z^n conj(p(1/conj z))``: coefficients conjugated and reversed."""
        return ComplexPolynomial(tuple(c.conjugate() for c in reversed(self.coefficients)))

    def divide_by_root(self, root: complex) -> tuple[ComplexPolynomial, complex]:
        """Synthetic division by ``(z - root)``; returns ``(quotient, remainder)``."""
        if self.degree < 1:
            raise WrongDegreeError("cannot divide a constant by a linear factor")
        quotient, remainder = P.polydiv(self.array, np.array([-root, 1.0], dtype=complex))
        return ComplexPolynomial.from_array(quotient), complex(remainder[0])


@dataclass(frozen=True, slots=True)
class RootSet:
    """All roots of a polynomial with their absolute residuals ``|p(root)|``."""

    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    iterations: int

    @property
    def array(self) -> ComplexArray:
        return np.asarray(self.roots, dtype=complex)

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)


def evaluate(p: ComplexPolynomial, z: complex) -> complex:
    """Evaluate ``p`` at ``z`` by Horner's scheme."""
    return complex(p(z))


def multiply(p: ComplexPolynomial, q: ComplexPolynomial) -> ComplexPolynomial:
    """Coefficient convolution."""
    return ComplexPolynomial.from_array(P.polymul(p.array, q.array))


def evaluation_scale(p: ComplexPolynomial, z: ComplexArray) -> npt.NDArray[np.float64]:
    """``max(max|c_i|, sum |c_i| |z|^i)``, the yardstick for backward-error residuals."""
    magnitudes = np.abs(p.array)
    return np.maximum(np.max(magnitudes), P.polyval(np.abs(z), magnitudes))


def find_roots(
    p: ComplexPolynomial,
    *,
    tol: float = TOL_ROOT,
    max_sweeps: int = ABERTH_MAX_SWEEPS,
    polish_steps: int = NEWTON_POLISH_STEPS,
) -> RootSet:
    """Return every root of ``p`` with multiplicity.

    Raises :class:`NonConvergenceError` when a residual stays above
    ``tol * evaluation_scale`` after the sweep cap.
    """
    if p.degree < 1:
        raise WrongDegreeError("find_roots needs a polynomial of degree >= 1", details={"degree": p.degree})

    coeffs = p.array
    if p.degree == 1:
        roots = np.array([-coeffs[0] / coeffs[1]], dtype=complex)
        sweeps = 0
    else:
        roots, sweeps = _aberth(coeffs, max_sweeps)
        roots = _polish(coeffs, roots, polish_steps)
        roots = _merge_clusters(roots)
    if p.is_real:
        roots = _pair_conjugates(roots)
    roots = np.sort_complex(roots)

    residuals = np.abs(P.polyval(roots, coeffs))
    limit = tol * evaluation_scale(p, roots)
    if np.any(residuals > limit):
        worst = int(np.argmax(residuals / limit))
        raise NonConvergenceError(
            f"root finder stopped after {sweeps} sweeps with residual {residuals[worst]:.3e}",
            details={"degree": p.degree, "sweeps": sweeps, "residual": float(residuals[worst])},
        )
    _LOGGER.debug("degree %s roots found in %s Aberth sweeps", p.degree, sweeps)
    return RootSet(
        roots=tuple(complex(r) for r in roots),
        residuals=tuple(float(r) for r in residuals),
        iterations=sweeps,
    )


def _aberth(coeffs: ComplexArray, max_sweeps: int) -> tuple[ComplexArray, int]:
    n = len(coeffs) - 1
    radius = 1.0 + float(np.max(np.abs(coeffs[:-1] / coeffs[-1])))
    angles = 2.0 * np.pi * np.arange(n) / n + _START_ANGLE_OFFSET
    z = radius * np.exp(1j * angles)
    dcoeffs = P.polyder(coeffs)

    sweep = 0
    for sweep in range(1, max_sweeps + 1):
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            ratio = P.polyval(z, coeffs) / P.polyval(z, dcoeffs)
            gaps = z[:, None] - z[None, :]
            np.fill_diagonal(gaps, np.inf)
            repulsion = np.sum(1.0 / gaps, axis=1)
            step = ratio / (1.0 - ratio * repulsion)
        step = np.where(np.isfinite(step), step, 0.0)
        z = z - step
        if np.all(np.abs(step) <= _STEP_TOL * (1.0 + np.abs(z))):
            break
    return z, sweep


def _polish(coeffs: ComplexArray, roots: ComplexArray, steps: int) -> ComplexArray:
    """Newton steps that never increase ``|p|`` and never move half-way to a neighbour."""
    dcoeffs = P.polyder(coeffs)
    polished = roots.copy()
    for i, start in enumerate(roots):
        others = np.delete(roots, i)
        reach = 0.5 * float(np.min(np.abs(others - start))) if others.size else np.inf
        z = complex(start)
        fz = abs(P.polyval(z, coeffs))
        for _ in range(steps):
            derivative = P.polyval(z, dcoeffs)
            if fz == 0.0 or derivative == 0:
                break
            candidate = z - P.polyval(z, coeffs) / derivative
            if not np.isfinite(candidate) or abs(candidate - start) >= reach:
                break
            fc = abs(P.polyval(candidate, coeffs))
            if fc >= fz:
                break
            z, fz = complex(candidate), fc
        polished[i] = z
    return polished


def _merge_clusters(roots: ComplexArray) -> ComplexArray:
    if roots.size < 2:
        return roots
    points = np.column_stack([roots.real, roots.imag])
    labels = fclusterdata(points, t=ROOT_CLUSTER_RADIUS, criterion="distance", method="single")
    merged = roots.copy()
    for label in np.unique(labels):
        members = labels == label
        if np.count_nonzero(members) > 1:
            merged[members] = np.mean(roots[members])
    return merged


def _pair_conjugates(roots: ComplexArray) -> ComplexArray:
    threshold = _REAL_AXIS_TOL * np.maximum(1.0, np.abs(roots))
    upper = list(roots[roots.imag > threshold])
    lower = list(roots[roots.imag < -threshold])
    real = list(roots[np.abs(roots.imag) <= threshold].real)

    # An unbalanced split means a near-real root landed off the axis.
    while len(upper) != len(lower):
        bigger = upper if len(upper) > len(lower) else lower
        nearest = min(range(len(bigger)), key=lambda k: abs(bigger[k].imag))
        real.append(bigger.pop(nearest).real)

    paired: list[complex] = [complex(x, 0.0) for x in real]
    if upper:
        up = np.asarray(upper, dtype=complex)
        low = np.asarray(lower, dtype=complex)
        rows, cols = linear_sum_assignment(np.abs(up[:, None] - np.conj(low)[None, :]))
        for center in (up[rows] + np.conj(low[cols])) / 2.0:
            paired.append(complex(center.real, center.imag))
            paired.append(complex(center.real, -center.imag))
    return np.asarray(paired, dtype=complex)
