"""Finite Blaschke products and the matrix of their compressed shift.

``B(z) = prod_k (z - a_k) / (1 - conj(a_k) z)`` with no unimodular prefactor.
The compressed shift ``S_B`` on the model space is represented in the
orthonormal basis built from the reproducing kernels at the zeros, where it is
upper triangular with the zeros on the diagonal. Zero order is taken as given;
any other order yields a unitarily equivalent matrix.
"""

from __future__ import annotations

import cmath
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import reduce
from typing import Any

import numpy as np
import numpy.typing as npt
from scipy.optimize import minimize_scalar

from .const import NODE_SEPARATION, POLE_TOL, REAL_ZERO_TOL, ZERO_MODULUS_MARGIN
from .exceptions import InvalidZeroError, NotRealZerosError, PoleHitError, WrongDegreeError
from .linalg import ComplexMatrix, trace_minor_axis
from .polyroots import ComplexPolynomial, multiply

_LOGGER = logging.getLogger(__name__)

_ELLIPSE_SAMPLES = 720
_COLLINEAR_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class BlaschkeProduct:
    """Zeros of a finite Blaschke product, each strictly inside the unit disk."""

    zeros: tuple[complex, ...]

    def __post_init__(self) -> None:
        zeros = tuple(complex(a) for a in self.zeros)
        if not zeros:
            raise InvalidZeroError("a Blaschke product needs at least one zero")
        for a in zeros:
            if not cmath.isfinite(a) or abs(a) >= 1.0 - ZERO_MODULUS_MARGIN:
                raise InvalidZeroError(
                    f"zero {a} is not strictly inside the unit disk",
                    details={"zero": str(a), "modulus": abs(a)},
                )
        object.__setattr__(self, "zeros", zeros)

    @classmethod
    def from_zeros(cls, zeros: Iterable[complex]) -> BlaschkeProduct:
        return cls(tuple(zeros))

    @classmethod
    def power(cls, a: complex, n: int) -> BlaschkeProduct:
        """``((z - a) / (1 - conj(a) z))^n``; ``power(0, n)`` is ``z^n``."""
        if n < 1:
            raise WrongDegreeError(f"power needs n >= 1, got {n}")
        return cls((complex(a),) * n)

    @property
    def degree(self) -> int:
        return len(self.zeros)

    @property
    def array(self) -> npt.NDArray[np.complex128]:
        return np.asarray(self.zeros, dtype=complex)

    @property
    def is_real(self) -> bool:
        return all(abs(a.imag) <= REAL_ZERO_TOL for a in self.zeros)

    @property
    def has_repeated_zeros(self) -> bool:
        zeros = self.array
        gaps = np.abs(zeros[:, None] - zeros[None, :])
        np.fill_diagonal(gaps, np.inf)
        return bool(np.any(gaps < NODE_SEPARATION))

    def real_zeros(self) -> tuple[float, ...]:
        if not self.is_real:
            raise NotRealZerosError("zeros are not all real", details={"zeros": [str(a) for a in self.zeros]})
        return tuple(a.real for a in self.zeros)

    def rotated(self, phi: float) -> BlaschkeProduct:
        """Zeros multiplied by ``e^{i phi}``; the numerical range rotates by the same angle."""
        turn = cmath.exp(1j * phi)
        return BlaschkeProduct(tuple(a * turn for a in self.zeros))

    def collinear_angle(self) -> float | None:
        """Angle ``phi`` in ``[0, pi)`` with every zero on the line ``e^{i phi} R``, else ``None``."""
        anchor = max(self.zeros, key=abs)
        if abs(anchor) == 0.0:
            return 0.0
        phi = cmath.phase(anchor) % np.pi
        turn = cmath.exp(-1j * phi)
        if all(abs((a * turn).imag) <= _COLLINEAR_TOL for a in self.zeros):
            return phi
        return None

    def __call__(self, z: Any) -> npt.NDArray[np.complex128]:
        """Vectorised evaluation; raises :class:`PoleHitError` if any point is a pole."""
        points = np.asarray(z, dtype=complex)
        zeros = self.array
        denominators = 1.0 - np.conj(zeros) * points[..., None]
        if np.any(np.abs(denominators) < POLE_TOL):
            raise PoleHitError("evaluation point is a pole of the Blaschke product")
        return np.asarray(np.prod((points[..., None] - zeros) / denominators, axis=-1))


@dataclass(frozen=True, slots=True)
class CompressedShiftMatrix:
    """Upper-triangular matrix of ``S_B`` and the zero order it was built from."""

    matrix: ComplexMatrix
    zero_order: tuple[complex, ...]

    @property
    def size(self) -> int:
        return int(self.matrix.shape[0])


@dataclass(frozen=True, slots=True)
class EllipseParams:
    """Elliptical disk described by its foci and axis lengths."""

    foci: tuple[complex, complex]
    minor_axis: float
    major_axis: float
    center: complex

    def boundary_point(self, theta: float | npt.NDArray[np.float64]) -> Any:
        f1, f2 = self.foci
        gap = f2 - f1
        direction = gap / abs(gap) if abs(gap) > 0 else 1.0 + 0j
        return self.center + direction * (
            0.5 * self.major_axis * np.cos(theta) + 0.5j * self.minor_axis * np.sin(theta)
        )

    def max_modulus(self) -> float:
        """Numerical radius of the elliptical disk (largest boundary modulus)."""
        f1, f2 = self.foci
        gap = f2 - f1
        aligned = abs(gap) == 0 or abs(self.center) == 0 or abs((self.center * np.conj(gap)).imag) <= (
            _COLLINEAR_TOL * abs(self.center) * abs(gap)
        )
        if aligned:
            return abs(self.center) + 0.5 * self.major_axis

        thetas = np.linspace(0.0, 2.0 * np.pi, _ELLIPSE_SAMPLES, endpoint=False)
        moduli = np.abs(self.boundary_point(thetas))
        best = int(np.argmax(moduli))
        width = 2.0 * np.pi / _ELLIPSE_SAMPLES
        refined = minimize_scalar(
            lambda th: -abs(self.boundary_point(th)),
            bounds=(thetas[best] - width, thetas[best] + width),
            method="bounded",
            options={"xatol": 1e-12},
        )
        return max(float(moduli[best]), float(-refined.fun))


def eval_blaschke(b: BlaschkeProduct, z: complex) -> complex:
    """``B(z)``; raises :class:`PoleHitError` if some ``|1 - conj(a_k) z| < 1e-14``."""
    return complex(b(z))


def numerator_denominator(b: BlaschkeProduct) -> tuple[ComplexPolynomial, ComplexPolynomial]:
    """``prod (z - a_k)`` and ``prod (1 - conj(a_k) z)`` as expanded polynomials."""
    numerator = ComplexPolynomial.from_roots(b.zeros)
    factors = (ComplexPolynomial((1.0 + 0j, -a.conjugate())) for a in b.zeros)
    denominator = reduce(multiply, factors, ComplexPolynomial((1.0 + 0j,)))
    return numerator, denominator


def shift_matrix(b: BlaschkeProduct) -> CompressedShiftMatrix:
    """Matrix of the compressed shift.

    Diagonal ``a_j``; above it
    ``(prod_{i<k<j} -conj(a_k)) * sqrt(1 - |a_i|^2) * sqrt(1 - |a_j|^2)``.
    """
    zeros = b.array
    n = b.degree
    weights = np.sqrt(1.0 - np.abs(zeros) ** 2)
    matrix = np.diag(zeros).astype(complex)
    for i in range(n):
        chain = 1.0 + 0j
        for j in range(i + 1, n):
            matrix[i, j] = chain * weights[i] * weights[j]
            chain *= -np.conj(zeros[j])
    return CompressedShiftMatrix(matrix=matrix, zero_order=b.zeros)


def ellipse_with_foci(b: BlaschkeProduct, foci: Sequence[complex]) -> EllipseParams:
    """Elliptical range data for ``S_B`` with the given foci and the trace minor axis."""
    if len(foci) != 2:
        raise WrongDegreeError("an ellipse needs exactly two foci")
    f1, f2 = complex(foci[0]), complex(foci[1])
    minor = trace_minor_axis(shift_matrix(b).matrix, eigenvalues=b.zeros)
    major = float(np.hypot(minor, abs(f1 - f2)))
    return EllipseParams(foci=(f1, f2), minor_axis=minor, major_axis=major, center=(f1 + f2) / 2.0)


def ellipse_for_degree2(b: BlaschkeProduct) -> EllipseParams:
    """Elliptical range of a 2x2 compressed shift: foci at the zeros."""
    if b.degree != 2:
        raise WrongDegreeError(f"ellipse_for_degree2 needs degree 2, got {b.degree}", details={"degree": b.degree})
    return ellipse_with_foci(b, b.zeros)
