"""Foias–Tannenbaum route to ``||I + a S_B||`` without an eigensolver.

For ``rho > 0`` let ``z1, z2`` be the roots of

    a z^2 - (4 rho^2 - 1 - |a|^2) z + conj(a) = 0,

ordered by imaginary part then real part, so ``z1 z2 = conj(a) / a``. The
norm is ``2 rho_bar`` where ``rho_bar`` is the largest ``rho`` at which

    z2 B(z2) - z1 B(z1) + conj(a) (B(z2) - B(z1)) = 0.

Only ``rho`` with ``|4 rho^2 - 1 - |a|^2| <= 2|a|`` are scanned; there both
roots are unimodular and ``2 rho`` runs over ``[1 - |a|, 1 + |a|]``. At either
end of that window the roots coincide and the defect vanishes trivially, so
brackets are taken strictly inside it.

Swapping ``z1`` and ``z2`` negates the defect, so the scan labels the roots
continuously in ``rho``: with ``w = z a / |a|`` the quadratic becomes
``w^2 - (s / |a|) w + 1`` with real coefficients, and ``z1`` is the root with
``Im w <= 0``. For real positive ``a`` this is the imaginary-part ordering;
for purely imaginary ``a`` the imaginary parts tie and only this labelling
stays consistent between samples.

For real ``a`` and real zeros the defect is purely imaginary and its
imaginary part changes sign at the root. Otherwise the scan looks for interior
minima of ``|defect|`` and bisects the real part after rotating away the local
phase of the defect's slope, falling back to a bounded minimisation of
``|defect|`` when the zero is a touching one.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy.optimize import brentq, minimize_scalar

from .blaschke import BlaschkeProduct
from .const import FT_DEFECT_TOL, FT_SCAN_MARGIN, FT_SCAN_SAMPLES, REAL_ZERO_TOL
from .exceptions import DomainError, NoRootFoundError
from .models import Method, NormResult

_LOGGER = logging.getLogger(__name__)

_RHO_XTOL = 1e-12
_LOWER_FRACTION = 1e-3
_IMAG_TIE = 1e-12

ComplexVector = npt.NDArray[np.complex128]


@dataclass(frozen=True, slots=True)
class FTState:
    a: complex
    rho: float
    z1: complex
    z2: complex
    defect: complex

    @property
    def product_residual(self) -> float:
        return abs(self.z1 * self.z2 - self.a.conjugate() / self.a)

    @property
    def sum_residual(self) -> float:
        return float(abs(self.z1 + self.z2 - complex(_coefficient(self.a, self.rho)) / self.a))


@dataclass(frozen=True, slots=True)
class FTScan:
    """Defect values on a descending ``rho`` grid; ``valid`` marks unimodular-root samples."""

    a: complex
    rhos: npt.NDArray[np.float64]
    defects: ComplexVector
    valid: npt.NDArray[np.bool_]


@dataclass(frozen=True, slots=True)
class FTResult:
    rho_bar: float
    norm: float
    bracket: tuple[float, float]
    defect_residual: float
    path: str = "real"

    def as_norm_result(self) -> NormResult:
        return NormResult(
            value=self.norm,
            method=Method.FT,
            diagnostics={
                "rho_bar": self.rho_bar,
                "bracket_low": self.bracket[0],
                "bracket_high": self.bracket[1],
                "defect_residual": self.defect_residual,
            },
        )


def _coefficient(a: complex, rho: float | npt.NDArray[np.float64]) -> float | npt.NDArray[np.float64]:
    return 4.0 * np.asarray(rho) ** 2 - 1.0 - abs(a) ** 2


def _framed_roots(a: complex, rho: npt.NDArray[np.float64]) -> tuple[ComplexVector, ComplexVector]:
    """Roots labelled continuously in ``rho`` (``Im(z1 a) <= Im(z2 a)`` inside the window)."""
    k = np.asarray(_coefficient(a, rho), dtype=float) / abs(a)
    disc = k * k - 4.0
    root = np.where(disc >= 0.0, np.sqrt(np.abs(disc)) + 0j, 1j * np.sqrt(np.abs(disc)))
    back = np.conj(a) / abs(a)
    return (k - root) / 2.0 * back, (k + root) / 2.0 * back


def ft_quadratic_roots(a: complex, rho: float) -> tuple[complex, complex]:
    """Roots of ``a z^2 - (4 rho^2 - 1 - |a|^2) z + conj(a)``, ascending imaginary then real part.

    Imaginary parts within ``1e-12`` count as equal.
    """
    if a == 0:
        raise DomainError("the perturbation a must be nonzero")
    if not rho > 0:
        raise DomainError(f"rho must be positive, got {rho}")
    first, second = _framed_roots(complex(a), np.array([rho]))
    z1, z2 = complex(first[0]), complex(second[0])
    gap = z1.imag - z2.imag
    if gap > _IMAG_TIE or (abs(gap) <= _IMAG_TIE and z1.real > z2.real):
        z1, z2 = z2, z1
    return z1, z2


def ft_real_part(a: float, delta: float) -> float:
    """``Re z1`` for real ``a`` and ``rho = (1 + delta) / 2``."""
    return (2.0 * delta + delta * delta - a * a) / (2.0 * a)


def _defects(b: BlaschkeProduct, a: complex, z1: ComplexVector, z2: ComplexVector) -> ComplexVector:
    b1 = b(z1)
    b2 = b(z2)
    return np.asarray(z2 * b2 - z1 * b1 + np.conj(a) * (b2 - b1))


def ft_defect(b: BlaschkeProduct, a: complex, rho: float) -> complex:
    z1, z2 = ft_quadratic_roots(a, rho)
    return complex(_defects(b, a, np.array([z1]), np.array([z2]))[0])


def _defect_along(b: BlaschkeProduct, a: complex, rho: float) -> complex:
    """Defect with the scan's continuous root labelling."""
    z1, z2 = _framed_roots(a, np.array([rho]))
    return complex(_defects(b, a, z1, z2)[0])


def ft_state(b: BlaschkeProduct, a: complex, rho: float) -> FTState:
    z1, z2 = ft_quadratic_roots(a, rho)
    defect = complex(_defects(b, a, np.array([z1]), np.array([z2]))[0])
    return FTState(a=complex(a), rho=float(rho), z1=z1, z2=z2, defect=defect)


def ft_scan(b: BlaschkeProduct, a: complex, samples: int = FT_SCAN_SAMPLES) -> FTScan:
    """Defects on ``samples`` points of ``(|a| 1e-3, (1 + |a|)/2 + margin]``, largest ``rho`` first."""
    a = complex(a)
    if a == 0:
        raise DomainError("the perturbation a must be nonzero")
    top = (1.0 + abs(a)) / 2.0 + FT_SCAN_MARGIN
    rhos = np.linspace(top, abs(a) * _LOWER_FRACTION, samples, endpoint=False)
    valid = np.abs(np.asarray(_coefficient(a, rhos))) <= 2.0 * abs(a)
    defects = np.full(samples, np.nan + 0j, dtype=complex)
    if np.any(valid):
        z1, z2 = _framed_roots(a, rhos[valid])
        defects[valid] = _defects(b, a, z1, z2)
    return FTScan(a=complex(a), rhos=rhos, defects=defects, valid=valid)


def _real_path(b: BlaschkeProduct, a: complex, scan: FTScan) -> FTResult | None:
    def objective(rho: float) -> float:
        return _defect_along(b, a, rho).imag

    indices = np.flatnonzero(scan.valid)
    values = scan.defects.imag
    for left, right in zip(indices, indices[1:]):
        if right != left + 1:
            continue
        f_hi, f_lo = values[left], values[right]
        if f_hi == 0.0 and left != indices[0]:
            rho = float(scan.rhos[left])
            return FTResult(rho, 2.0 * rho, (rho, rho), 0.0, "real")
        if f_hi * f_lo < 0.0:
            lo, hi = float(scan.rhos[right]), float(scan.rhos[left])
            rho = float(brentq(objective, lo, hi, xtol=_RHO_XTOL))
            return FTResult(rho, 2.0 * rho, (lo, hi), abs(ft_defect(b, a, rho)), "real")
    return None


def _general_path(b: BlaschkeProduct, a: complex, scan: FTScan) -> FTResult | None:
    indices = np.flatnonzero(scan.valid)
    magnitude = np.abs(scan.defects)
    scale = max(float(np.nanmax(magnitude[indices])), 1.0) if indices.size else 1.0
    for position in range(1, indices.size - 1):
        prev_i, here, next_i = indices[position - 1], indices[position], indices[position + 1]
        if next_i != here + 1 or prev_i != here - 1:
            continue
        if not (magnitude[here] <= magnitude[prev_i] and magnitude[here] <= magnitude[next_i]):
            continue
        slope = scan.defects[prev_i] - scan.defects[next_i]
        if slope == 0:
            continue
        phase = slope / abs(slope)

        def aligned(rho: float, phase: complex = phase) -> float:
            return float((np.conj(phase) * _defect_along(b, a, rho)).real)

        lo, hi = float(scan.rhos[next_i]), float(scan.rhos[prev_i])
        if aligned(lo) * aligned(hi) <= 0.0:
            rho = float(brentq(aligned, lo, hi, xtol=_RHO_XTOL))
        else:
            touching = minimize_scalar(
                lambda r: abs(_defect_along(b, a, r)),
                bounds=(lo, hi),
                method="bounded",
                options={"xatol": _RHO_XTOL},
            )
            rho = float(touching.x)
        residual = abs(ft_defect(b, a, rho))
        if residual <= FT_DEFECT_TOL * scale:
            return FTResult(rho, 2.0 * rho, (lo, hi), residual, "general")
    return None


def ft_norm(b: BlaschkeProduct, a: complex, *, samples: int = FT_SCAN_SAMPLES) -> FTResult:
    """``||I + a S_B|| = 2 rho_bar`` for the largest root ``rho_bar`` of the defect.

    Degree one is exact (``|1 + a z_1|``) and ``a = 0`` gives 1.
    """
    a = complex(a)
    if a == 0:
        return FTResult(0.5, 1.0, (0.5, 0.5), 0.0, "trivial")
    if b.degree == 1:
        norm = abs(1.0 + a * b.zeros[0])
        return FTResult(norm / 2.0, norm, (norm / 2.0, norm / 2.0), 0.0, "degree1")

    scan = ft_scan(b, a, samples)
    real_case = abs(a.imag) <= REAL_ZERO_TOL and b.is_real
    result = _real_path(b, a, scan) if real_case else _general_path(b, a, scan)
    if result is None:
        raise NoRootFoundError(
            "no root of the Foias-Tannenbaum defect inside the scan window",
            details={"a": str(a), "samples": samples},
        )
    _LOGGER.debug("FT rho_bar=%.15g via %s path, bracket %s", result.rho_bar, result.path, result.bracket)
    return result
