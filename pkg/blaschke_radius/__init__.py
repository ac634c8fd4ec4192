"""Numerical radius and norms of compressed shifts of finite Blaschke products.

See :class:`~blaschke_radius.solver.NumericalRadiusSolver` for the entry
point. The lower-level routes live in their own modules: ``realzeros``
(closed forms and the root method), ``numrange_oracle`` (eigenvalue sweep
and the ``t -> 0`` limit), ``pick`` (Nevanlinna-Pick bisection) and
``foias_tannenbaum`` (``rho`` scan for ``||I + a S_B||``).

A note on zeros: the real-zero routes also accept zeros on any line through
the origin and rotate them onto the real axis first; the numerical radius
does not change under that rotation.
"""

from .blaschke import BlaschkeProduct, CompressedShiftMatrix, EllipseParams, ellipse_for_degree2, shift_matrix
from .exceptions import (
    BlaschkeRadiusError,
    BracketFailureError,
    ConfigError,
    DomainError,
    ExtrapolationUnstableError,
    InvalidZeroError,
    NodesTooCloseError,
    NonConvergenceError,
    NoRootFoundError,
    NotHermitianError,
    NotRealZerosError,
    NumericalError,
    OracleMismatchError,
    PoleHitError,
    WrongDegreeError,
    ZeroParseError,
)
from .formats import canonical_json, format_complex, parse_complex, parse_zeros
from .methods import MethodCapabilities, capabilities_for, select_radius_method
from .models import CrossCheck, Method, NormResult, RunConfig
from .solver import NumericalRadiusSolver, PickCheck

__all__ = [
    "NumericalRadiusSolver",
    "PickCheck",
    "BlaschkeProduct",
    "CompressedShiftMatrix",
    "EllipseParams",
    "shift_matrix",
    "ellipse_for_degree2",
    "MethodCapabilities",
    "capabilities_for",
    "select_radius_method",
    "Method",
    "NormResult",
    "CrossCheck",
    "RunConfig",
    "parse_complex",
    "parse_zeros",
    "format_complex",
    "canonical_json",
    "BlaschkeRadiusError",
    "DomainError",
    "ZeroParseError",
    "InvalidZeroError",
    "WrongDegreeError",
    "NotRealZerosError",
    "NodesTooCloseError",
    "NotHermitianError",
    "PoleHitError",
    "ConfigError",
    "NumericalError",
    "NonConvergenceError",
    "ExtrapolationUnstableError",
    "BracketFailureError",
    "NoRootFoundError",
    "OracleMismatchError",
]
