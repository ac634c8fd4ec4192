"""Numerical radius of ``S_B`` for real zeros via the equations ``z B(z) = +-1``.

With every zero real, ``W(S_B)`` is symmetric about the real axis and its
numerical radius is attained on the real line. The roots of
``p(z) = z num(z) - sign den(z)`` all lie on the unit circle, and the
vertical support lines of ``W(S_B)`` are chords joining conjugate pairs of
them. Roots at ``+-1`` are always present for one parity (``sign = +1`` has
``1`` for even degree and both ``+-1`` for odd degree, ``sign = -1`` has
``-1`` for even degree) and never realise the maximum, so they are excluded.

For degree <= 4 the nontrivial cofactor is palindromic,
``1 - alpha z + 2 beta z^2 - alpha z^3 + z^4``, and its unimodular roots have
real parts solving ``2x^2 - alpha x + (beta - 1) = 0``. A quadratic cofactor
``1 - alpha z + z^2`` is the same formula with ``beta = 1``.
"""

from __future__ import annotations

import cmath
import logging
import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .blaschke import BlaschkeProduct, numerator_denominator
from .const import TOL_ROOT, TRIVIAL_ROOT_TOL, UNIMODULAR_TOL
from .exceptions import DomainError, NoRootFoundError, NotRealZerosError, WrongDegreeError
from .models import Method, NormResult
from .polyroots import ComplexPolynomial, RootSet, find_roots

_LOGGER = logging.getLogger(__name__)

_SELF_INVERSIVE_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class RootCertificate:
    """Roots of ``z B(z) = sign`` classified into trivial (``+-1``) and candidate roots."""

    equation_sign: int
    polynomial: ComplexPolynomial
    roots: RootSet
    unimodularity_residuals: tuple[float, ...]
    trivial_roots: tuple[complex, ...]
    candidate_real_parts: tuple[float, ...]

    @property
    def max_unimodularity_residual(self) -> float:
        return max(self.unimodularity_residuals, default=0.0)

    @property
    def max_candidate(self) -> float:
        return max((abs(x) for x in self.candidate_real_parts), default=0.0)


@dataclass(frozen=True, slots=True)
class ClosedFormCoefficients:
    alpha: float
    beta: float
    degree: int
    sign: int = -1

    def candidates(self) -> tuple[float, float]:
        """Both roots ``x`` of ``2x^2 - alpha x + (beta - 1) = 0``."""
        spread = math.sqrt(max(self.alpha**2 - 8.0 * (self.beta - 1.0), 0.0))
        return (self.alpha + spread) / 4.0, (self.alpha - spread) / 4.0


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise DomainError(f"equation sign must be +1 or -1, got {sign}")


def sign_polynomial(b: BlaschkeProduct, sign: int) -> ComplexPolynomial:
    """``z num(z) - sign den(z)``."""
    _check_sign(sign)
    numerator, denominator = numerator_denominator(b)
    shifted = P.polymulx(numerator.array)
    return ComplexPolynomial.from_array(P.polysub(shifted, sign * denominator.array))


def trivial_roots_for(degree: int, sign: int) -> tuple[float, ...]:
    """The roots among ``+-1`` that ``z B(z) = sign`` always has for real zeros."""
    _check_sign(sign)
    if degree % 2 == 0:
        return (1.0,) if sign == 1 else (-1.0,)
    return (1.0, -1.0) if sign == 1 else ()


def is_self_inversive(p: ComplexPolynomial, sign: int, *, tol: float = _SELF_INVERSIVE_TOL) -> bool:
    """``c_k = -sign * c_{m-k}`` for every coefficient (``m`` = degree), relative to ``max|c|``."""
    _check_sign(sign)
    coeffs = p.array
    gap = np.max(np.abs(coeffs + sign * coeffs[::-1]))
    return bool(gap <= tol * p.max_abs_coefficient)


def _real_axis_product(b: BlaschkeProduct) -> tuple[BlaschkeProduct, float]:
    phi = b.collinear_angle()
    if phi is None:
        raise NotRealZerosError(
            "zeros do not lie on a line through the origin",
            details={"zeros": [str(a) for a in b.zeros]},
        )
    if b.is_real:
        return BlaschkeProduct(tuple(complex(a.real, 0.0) for a in b.zeros)), 0.0
    turn = cmath.exp(-1j * phi)
    return BlaschkeProduct(tuple(complex((a * turn).real, 0.0) for a in b.zeros)), phi


def root_equation(b: BlaschkeProduct, sign: int, *, tol_root: float = TOL_ROOT) -> RootCertificate:
    """Solve ``z B(z) = sign`` and classify its roots.

    Candidates are the real parts of the nontrivial roots in the closed upper
    half-plane (one per conjugate pair).
    """
    if not b.is_real:
        raise NotRealZerosError("root_equation needs real zeros", details={"zeros": [str(a) for a in b.zeros]})
    p = sign_polynomial(BlaschkeProduct(tuple(complex(a.real, 0.0) for a in b.zeros)), sign)
    roots = find_roots(p, tol=tol_root)

    trivial: list[complex] = []
    candidates: list[float] = []
    for root in roots.roots:
        if min(abs(root - 1.0), abs(root + 1.0)) <= TRIVIAL_ROOT_TOL:
            trivial.append(root)
        elif root.imag >= 0.0:
            candidates.append(root.real)
    residuals = tuple(abs(1.0 - abs(root)) for root in roots.roots)

    worst = max(residuals, default=0.0)
    if worst > UNIMODULAR_TOL:
        _LOGGER.warning("roots of z B(z) = %+d leave the unit circle by %.2e", sign, worst)
    return RootCertificate(
        equation_sign=sign,
        polynomial=p,
        roots=roots,
        unimodularity_residuals=residuals,
        trivial_roots=tuple(trivial),
        candidate_real_parts=tuple(sorted(candidates)),
    )


def root_certificates(b: BlaschkeProduct, *, tol_root: float = TOL_ROOT) -> tuple[RootCertificate, RootCertificate]:
    """Certificates for ``sign = +1`` and ``sign = -1``."""
    return root_equation(b, 1, tol_root=tol_root), root_equation(b, -1, tol_root=tol_root)


def numerical_radius_root_method(b: BlaschkeProduct, *, tol_root: float = TOL_ROOT) -> NormResult:
    """``w(S_B)`` as the largest ``|Re z|`` over nontrivial roots of both sign equations.

    Zeros on any line through the origin are rotated onto the real axis first.
    """
    real_b, phi = _real_axis_product(b)
    plus, minus = root_certificates(real_b, tol_root=tol_root)
    candidates = plus.candidate_real_parts + minus.candidate_real_parts
    if not candidates:
        raise NoRootFoundError("no nontrivial roots of z B(z) = +-1", details={"degree": b.degree})

    result = NormResult(
        value=max(abs(x) for x in candidates),
        method=Method.ROOT_METHOD,
        diagnostics={
            "max_root_residual": max(plus.roots.max_residual, minus.roots.max_residual),
            "max_unimodularity_residual": max(plus.max_unimodularity_residual, minus.max_unimodularity_residual),
            "candidates_plus": float(len(plus.candidate_real_parts)),
            "candidates_minus": float(len(minus.candidate_real_parts)),
            "rotation": phi,
        },
    )
    if max(plus.max_unimodularity_residual, minus.max_unimodularity_residual) > UNIMODULAR_TOL:
        result = result.with_warning("roots of z B(z) = +-1 are not all unimodular")
    return result


# --- closed forms ----------------------------------------------------------


def _max_modulus(values: tuple[float, ...] | list[float]) -> float:
    return max(abs(v) for v in values)


def closed_form_degree1(a: float) -> float:
    """``S_B = [a]``, so ``w = |a|``."""
    return abs(a)


def closed_form_degree2(a1: float, a2: float) -> float:
    return max(abs((a1 + a2 - a1 * a2 + 1.0) / 2.0), abs((a1 + a2 + a1 * a2 - 1.0) / 2.0))


def closed_form_degree3(a: float, b: float, c: float) -> float:
    """Largest ``|x|`` with ``alpha = a+b+c+abc`` and ``beta = ab+ac+bc``."""
    coeffs = ClosedFormCoefficients(alpha=a + b + c + a * b * c, beta=a * b + a * c + b * c, degree=3)
    return _max_modulus(coeffs.candidates())


def closed_form_with_origin(a: float, b: float) -> float:
    """Zeros ``{0, a, b}``: ``x = (a + b +- sqrt((a+b)^2 - 8(ab - 1))) / 4``."""
    spread = math.sqrt(max((a + b) ** 2 - 8.0 * (a * b - 1.0), 0.0))
    return _max_modulus([(a + b + spread) / 4.0, (a + b - spread) / 4.0])


def closed_form_repeated(a: float) -> float:
    """Zeros ``{0, a, a}``: ``max |a/2 +- sqrt(2 - a^2)/2|``."""
    half = math.sqrt(2.0 - a * a) / 2.0
    return _max_modulus([a / 2.0 + half, a / 2.0 - half])


def _elementary_symmetric(zeros: tuple[float, ...]) -> tuple[float, ...]:
    # Coefficients of prod (z - a_k), highest power first after the leading 1.
    monic = P.polyfromroots(zeros)[::-1]
    return tuple(float(((-1) ** k) * monic[k]) for k in range(1, len(monic)))


def closed_form_degree4(a: float, b: float, c: float, d: float) -> float:
    """Largest ``|x|`` over the quartic cofactors of both sign equations."""
    e1, e2, e3, e4 = _elementary_symmetric((a, b, c, d))
    plus = ClosedFormCoefficients(alpha=e1 + e4 - 1.0, beta=(1.0 - e1 + e2 + e3 - e4) / 2.0, degree=4, sign=1)
    minus = ClosedFormCoefficients(alpha=1.0 + e1 - e4, beta=(1.0 + e1 + e2 - e3 - e4) / 2.0, degree=4, sign=-1)
    return _max_modulus([*plus.candidates(), *minus.candidates()])


def closed_form_coeffs(b: BlaschkeProduct, sign: int) -> ClosedFormCoefficients:
    """Read ``alpha`` and ``beta`` off the expanded sign equation after dividing out ``z -+ 1``.

    ``alpha`` is minus the ``z`` coefficient and ``beta`` half the ``z^2``
    coefficient of the normalised palindromic cofactor (``beta = 1`` when the
    cofactor is quadratic).
    """
    if b.degree not in (2, 3, 4):
        raise WrongDegreeError(f"closed forms cover degrees 2 to 4, got {b.degree}", details={"degree": b.degree})
    zeros = b.real_zeros()
    cofactor = sign_polynomial(BlaschkeProduct(tuple(complex(a, 0.0) for a in zeros)), sign)
    for root in trivial_roots_for(b.degree, sign):
        cofactor, _ = cofactor.divide_by_root(root)
    coeffs = cofactor.array.real / cofactor.array.real[0]
    alpha = float(-coeffs[1])
    beta = float(coeffs[2] / 2.0) if cofactor.degree == 4 else 1.0
    return ClosedFormCoefficients(alpha=alpha, beta=beta, degree=b.degree, sign=sign)


def real_part_quadratic_residual(coeffs: ClosedFormCoefficients, x: float) -> float:
    """``2x^2 - alpha x + (beta - 1)``."""
    return 2.0 * x * x - coeffs.alpha * x + (coeffs.beta - 1.0)


def closed_form_radius(b: BlaschkeProduct) -> NormResult:
    """Closed-form ``w(S_B)`` for real (or collinear) zeros and degree <= 4."""
    real_b, phi = _real_axis_product(b)
    zeros = real_b.real_zeros()
    formulas: dict[int, Callable[..., float]] = {
        1: closed_form_degree1,
        2: closed_form_degree2,
        3: closed_form_degree3,
        4: closed_form_degree4,
    }
    if real_b.degree not in formulas:
        raise WrongDegreeError(f"closed forms cover degrees 1 to 4, got {b.degree}", details={"degree": b.degree})
    value = formulas[real_b.degree](*zeros)
    return NormResult(value=value, method=Method.CLOSED_FORM, diagnostics={"rotation": phi})
