"""Exceptions for blaschke-radius."""

from __future__ import annotations

from typing import Any

from .const import EXIT_CROSS_CHECK, EXIT_INPUT, EXIT_IO, EXIT_NUMERICAL


class BlaschkeRadiusError(Exception):
    """Base exception for blaschke-radius.

    Attributes:
        code: Stable machine-readable identifier (e.g. ``pole_hit``).
        exit_code: Process exit code the CLI uses for this failure.
        details: Optional structured context (never large arrays).
    """

    code: str = "error"
    exit_code: int = EXIT_NUMERICAL

    def __init__(
        self,
        message: str,
        *,
        code: str | None = None,
        exit_code: int | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message)
        if code is not None:
            self.code = code
        if exit_code is not None:
            self.exit_code = exit_code
        self.details = details or {}


class DomainError(BlaschkeRadiusError):
    """Input outside the domain of an operation."""

    code = "domain_error"
    exit_code = EXIT_INPUT


class ZeroParseError(DomainError):
    """A zero list or complex literal could not be parsed."""

    code = "parse_error"


class InvalidZeroError(DomainError):
    """A Blaschke zero is not strictly inside the unit disk (or the list is empty)."""

    code = "invalid_zero"


class WrongDegreeError(DomainError):
    """The operation is only defined for particular degrees."""

    code = "wrong_degree"


class NotRealZerosError(DomainError):
    """The root method needs zeros on a line through the origin."""

    code = "not_real_zeros"


class NodesTooCloseError(DomainError):
    """Pick nodes closer than the separation threshold."""

    code = "nodes_too_close"


class NotHermitianError(DomainError):
    """Matrix handed to a Hermitian routine is not Hermitian."""

    code = "not_hermitian"


class PoleHitError(DomainError):
    """Evaluation point sits on a pole of the Blaschke product."""

    code = "pole_hit"


class ConfigError(DomainError):
    """A run configuration file or value is invalid."""

    code = "config_error"


class NumericalError(BlaschkeRadiusError):
    """A computation did not reach its accuracy target."""

    code = "numerical_error"
    exit_code = EXIT_NUMERICAL


class NonConvergenceError(NumericalError):
    """Iteration cap reached with a residual above tolerance."""

    code = "non_convergence"


class ExtrapolationUnstableError(NumericalError):
    """Successive Richardson extrapolants disagree by more than the stability band."""

    code = "extrapolation_unstable"


class BracketFailureError(NumericalError):
    """Bisection endpoints do not straddle the PSD boundary."""

    code = "bracket_failure"


class NoRootFoundError(NumericalError):
    """The rho scan found no root of the key equation."""

    code = "no_root_found"


class OracleMismatchError(BlaschkeRadiusError):
    """A method disagrees with the eigenvalue oracle beyond tolerance.

    Only raised in strict mode; the default path records the mismatch on the
    result instead.
    """

    code = "oracle_mismatch"
    exit_code = EXIT_CROSS_CHECK

    def __init__(self, method: str, delta: float, tolerance: float) -> None:
        self.method = method
        self.delta = delta
        self.tolerance = tolerance
        super().__init__(
            f"{method} disagrees with the oracle by {delta:.3e} (tolerance {tolerance:.1e})",
            details={"method": method, "delta": delta, "tolerance": tolerance},
        )


def exit_code_for(exc: BaseException) -> int:
    """Map an exception to the CLI exit code."""
    if isinstance(exc, BlaschkeRadiusError):
        return exc.exit_code
    if isinstance(exc, OSError):
        return EXIT_IO
    return EXIT_NUMERICAL
