from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from .blaschke import BlaschkeProduct, CompressedShiftMatrix, shift_matrix
from .const import NORM_TOL
from .exceptions import DomainError, OracleMismatchError
from .foias_tannenbaum import FTScan, ft_norm, ft_scan
from .formats import format_complex
from .linalg import operator_norm
from .methods import (
    CLOSED_FORM_MAX_DEGREE,
    NORM_METHOD_NAMES,
    MethodCapabilities,
    capabilities_for,
    resolve_radius_method,
)
from .models import Method, NormResult, RunConfig
from .numrange_oracle import BoundarySample, RadiusEstimate, boundary_samples, numerical_radius, radius_via_limit
from .pick import PickProblem, is_feasible, norm_via_pick, pick_matrix, radius_via_pick
from .realzeros import closed_form_radius, numerical_radius_root_method

_LOGGER = logging.getLogger(__name__)


def _coerce_product(b: BlaschkeProduct | Any) -> BlaschkeProduct:
    if isinstance(b, BlaschkeProduct):
        return b
    return BlaschkeProduct.from_zeros(b)


def _estimate_result(method: Method, estimate: RadiusEstimate) -> NormResult:
    diagnostics = {"argmax_theta": estimate.argmax_theta, "refinement_width": estimate.refinement_width}
    if estimate.ladder is not None:
        diagnostics["extrapolant_spread"] = estimate.ladder.spread
        diagnostics["smallest_t"] = estimate.ladder.t_values[-1]
    return NormResult(value=estimate.value, method=method, diagnostics=diagnostics)


@dataclass(frozen=True, slots=True)
class PickCheck:
    """Feasibility of one Pick problem together with the assembled matrix."""

    problem: PickProblem
    feasible: bool
    min_eigenvalue: float
    matrix: np.ndarray

    def as_dict(self) -> dict[str, Any]:
        return {
            "feasible": self.feasible,
            "min_eigenvalue": self.min_eigenvalue,
            "gamma": self.problem.gamma,
            "t": self.problem.t,
            "nodes": list(self.problem.nodes),
            "diagonal_bound": self.problem.diagonal_bound,
            "below_diagonal_bound": self.problem.below_diagonal_bound,
            "matrix": [[format_complex(entry) for entry in row] for row in self.matrix.tolist()],
        }


class NumericalRadiusSolver:
    """Entry point for numerical radii and ``||I + t S_B||`` of compressed shifts."""

    def __init__(self, config: RunConfig | None = None, *, strict: bool = False) -> None:
        """Initialize the solver.

        Cross-checks are centralised on :meth:`_cross_checked`:

        * exact radius routes (closed form, root method) are compared with the
          eigenvalue oracle at ``oracle_tol``; the oracle itself is compared
          with the exact route when the zeros are collinear;
        * limit-type radius routes (``limit``, ``pick``) are compared with the
          oracle at ``limit_tol``;
        * norm routes are compared with each other at ``1e-8``.

        A failed check is recorded on the result with a warning. With
        ``strict=True`` it raises :class:`OracleMismatchError` instead. Root
        method results above degree 4 are always checked and fall back to the
        oracle value on a mismatch.
        """
        self._config = config or RunConfig()
        self._strict = bool(strict)

    @property
    def config(self) -> RunConfig:
        return self._config

    @property
    def strict(self) -> bool:
        return self._strict

    def capabilities_for(self, b: BlaschkeProduct | Any) -> MethodCapabilities:
        return capabilities_for(_coerce_product(b))

    def shift_matrix(self, b: BlaschkeProduct | Any) -> CompressedShiftMatrix:
        return shift_matrix(_coerce_product(b))

    # --- radius routes ----------------------------------------------------

    def _oracle(self, b: BlaschkeProduct) -> NormResult:
        estimate = numerical_radius(
            shift_matrix(b).matrix,
            samples=self._config.theta_samples,
            angular_tol=self._config.angular_tol,
        )
        return _estimate_result(Method.ORACLE, estimate)

    def _radius_route(self, b: BlaschkeProduct, method: Method) -> NormResult:
        cfg = self._config
        if method is Method.CLOSED_FORM:
            return closed_form_radius(b)
        if method is Method.ROOT_METHOD:
            return numerical_radius_root_method(b, tol_root=cfg.tol_root)
        if method is Method.ORACLE:
            return self._oracle(b)
        if method is Method.LIMIT:
            estimate = radius_via_limit(
                shift_matrix(b).matrix,
                ladder=cfg.t_ladder,
                samples=cfg.limit_theta_samples,
                angular_tol=cfg.angular_tol,
                stability_tol=cfg.limit_tol,
            )
            return _estimate_result(Method.LIMIT, estimate)
        if method is Method.PICK:
            estimate = radius_via_pick(
                b,
                ladder=cfg.t_ladder,
                samples=cfg.limit_theta_samples,
                angular_tol=cfg.angular_tol,
                stability_tol=cfg.limit_tol,
                tol_bisect=cfg.tol_bisect,
            )
            return _estimate_result(Method.PICK, estimate)
        raise DomainError(f"{method.value} does not compute a numerical radius")

    def _radius_reference(self, b: BlaschkeProduct, method: Method) -> tuple[Method, float, float] | None:
        """``(reference method, value, tolerance)`` used to check ``method``."""
        cfg = self._config
        if method in (Method.CLOSED_FORM, Method.ROOT_METHOD):
            return Method.ORACLE, self._oracle(b).value, cfg.oracle_tol
        if method in (Method.LIMIT, Method.PICK):
            return Method.ORACLE, self._oracle(b).value, cfg.limit_tol
        caps = capabilities_for(b)
        if caps.closed_form:
            return Method.CLOSED_FORM, closed_form_radius(b).value, cfg.oracle_tol
        if caps.root_method:
            return Method.ROOT_METHOD, numerical_radius_root_method(b, tol_root=cfg.tol_root).value, cfg.oracle_tol
        return None

    def _cross_checked(self, result: NormResult, reference: tuple[Method, float, float] | None) -> NormResult:
        if reference is None:
            return result
        name, value, tolerance = reference
        checked = result.with_cross_check(name, value, tolerance)
        check = checked.cross_checks[name.value]
        if check.passed:
            return checked
        _LOGGER.warning(
            "%s disagrees with %s by %.3e (tolerance %.1e)",
            result.method.value,
            name.value,
            check.delta,
            tolerance,
        )
        if self._strict:
            raise OracleMismatchError(result.method.value, check.delta, tolerance)
        return checked.with_warning(
            f"{result.method.value} disagrees with {name.value} by {check.delta:.3e} (tolerance {tolerance:.1e})"
        )

    def numerical_radius(self, b: BlaschkeProduct | Any, method: Method | str = "auto") -> NormResult:
        """``w(S_B)`` by ``method`` (a :class:`Method` or a CLI name such as ``auto``)."""
        b = _coerce_product(b)
        route = method if isinstance(method, Method) else resolve_radius_method(method, b)
        result = self._radius_route(b, route)

        forced = route is Method.ROOT_METHOD and b.degree > CLOSED_FORM_MAX_DEGREE
        if self._config.cross_check or forced:
            reference = self._radius_reference(b, route)
            result = self._cross_checked(result, reference)
            if forced and reference is not None and not result.cross_checks_passed:
                _LOGGER.warning("root method result for degree %s replaced by the oracle value", b.degree)
                result = result.model_copy(update={"value": reference[1], "method": Method.ORACLE}).with_warning(
                    "root method rejected; value taken from the eigenvalue oracle"
                )

        _LOGGER.debug("w(S_B) = %.15g via %s", result.value, result.method.value)
        return result.with_echo(
            inputs={
                "zeros": [format_complex(a) for a in b.zeros],
                "method": method.value if isinstance(method, Method) else method,
            },
            config=self._config.as_dict(),
        )

    # --- norm routes ------------------------------------------------------

    def _norm_route(self, b: BlaschkeProduct, t: complex, method: str) -> NormResult:
        cfg = self._config
        if method == "svd":
            matrix = shift_matrix(b).matrix
            value = operator_norm(np.eye(b.degree, dtype=complex) + t * matrix)
            return NormResult(value=value, method=Method.ORACLE)
        if method == "pick":
            return norm_via_pick(b, t, tol_bisect=cfg.tol_bisect, method=cfg.eigensolver)
        if method == "ft":
            return ft_norm(b, t, samples=cfg.ft_scan_samples).as_norm_result()
        choices = ", ".join(NORM_METHOD_NAMES)
        raise DomainError(f"unknown norm method {method!r} (choose from {choices})")

    def norm(self, b: BlaschkeProduct | Any, t: complex, method: str = "svd") -> NormResult:
        """``||I + t S_B||`` by ``svd`` (singular values), ``pick`` or ``ft``.

        The ``svd`` value is checked against the Pick route; the other two
        are checked against ``svd``.
        """
        b = _coerce_product(b)
        t = complex(t)
        result = self._norm_route(b, t, method)
        if self._config.cross_check:
            if method == "svd":
                reference = (Method.PICK, self._norm_route(b, t, "pick").value, NORM_TOL)
            else:
                reference = (Method.ORACLE, self._norm_route(b, t, "svd").value, NORM_TOL)
            result = self._cross_checked(result, reference)
        _LOGGER.debug("||I + t S_B|| = %.15g via %s", result.value, method)
        return result.with_echo(
            inputs={"zeros": [format_complex(a) for a in b.zeros], "t": format_complex(t), "method": method},
            config=self._config.as_dict(),
        )

    # --- data exports -----------------------------------------------------

    def boundary(
        self, b: BlaschkeProduct | Any, samples: int | None = None
    ) -> tuple[list[BoundarySample], RadiusEstimate]:
        """Boundary samples of ``W(S_B)`` and the oracle radius estimate."""
        b = _coerce_product(b)
        count = samples if samples is not None else self._config.theta_samples
        if count < 8:
            raise DomainError(f"samples must be at least 8, got {count}")
        matrix = shift_matrix(b).matrix
        estimate = numerical_radius(matrix, samples=self._config.theta_samples, angular_tol=self._config.angular_tol)
        return boundary_samples(matrix, count), estimate

    def pick_check(self, b: BlaschkeProduct | Any, t: complex, gamma: float) -> PickCheck:
        """Feasibility of ``h(z_k) = (1 + t z_k) / gamma`` at the zeros of ``B``."""
        b = _coerce_product(b)
        problem = PickProblem(nodes=b.zeros, t=complex(t), gamma=float(gamma))
        verdict = is_feasible(problem, method=self._config.eigensolver)
        return PickCheck(
            problem=problem,
            feasible=verdict.feasible,
            min_eigenvalue=verdict.min_eigenvalue,
            matrix=pick_matrix(problem).assembled,
        )

    def ft_trace(self, b: BlaschkeProduct | Any, a: complex, samples: int | None = None) -> FTScan:
        """The ``rho`` scan of the Foias-Tannenbaum defect for plotting."""
        b = _coerce_product(b)
        return ft_scan(b, complex(a), samples if samples is not None else self._config.ft_scan_samples)
