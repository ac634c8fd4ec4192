from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .const import (
    ANGULAR_TOL,
    FT_SCAN_SAMPLES,
    LIMIT_THETA_SAMPLES,
    LIMIT_TOL,
    ORACLE_TOL,
    T_LADDER,
    THETA_SAMPLES,
    TOL_BISECT,
    TOL_EIG,
    TOL_ROOT,
)
from .exceptions import ConfigError


class Method(str, Enum):
    """Route that produced a :class:`NormResult` value."""

    CLOSED_FORM = "closed_form"
    ROOT_METHOD = "root_method"
    ORACLE = "oracle"
    PICK = "pick"
    FT = "ft"
    LIMIT = "limit"


class CrossCheck(BaseModel):
    """Comparison of a result against an independent reference value."""

    model_config = ConfigDict(frozen=True)

    reference: float
    delta: float
    tolerance: float
    passed: bool

    @classmethod
    def compare(cls, value: float, reference: float, tolerance: float) -> CrossCheck:
        delta = abs(value - reference)
        return cls(reference=reference, delta=delta, tolerance=tolerance, passed=delta <= tolerance)


class NormResult(BaseModel):
    """A numerical radius or norm value with its provenance.

    ``cross_checks`` is keyed by the method name of the reference route.
    Field order is the serialisation order.
    """

    model_config = ConfigDict(frozen=True)

    value: float
    method: Method
    cross_checks: dict[str, CrossCheck] = Field(default_factory=dict)
    warnings: list[str] = Field(default_factory=list)
    inputs_echo: dict[str, Any] = Field(default_factory=dict)
    diagnostics: dict[str, float] = Field(default_factory=dict)
    config_echo: dict[str, Any] = Field(default_factory=dict)

    @field_validator("value")
    @classmethod
    def _non_negative(cls, value: float) -> float:
        if not value >= 0.0:
            raise ValueError(f"value must be >= 0, got {value}")
        return value

    @property
    def cross_checks_passed(self) -> bool:
        return all(check.passed for check in self.cross_checks.values())

    def with_cross_check(self, reference: Method | str, reference_value: float, tolerance: float) -> NormResult:
        key = reference.value if isinstance(reference, Method) else reference
        check = CrossCheck.compare(self.value, reference_value, tolerance)
        return self.model_copy(update={"cross_checks": {**self.cross_checks, key: check}})

    def with_warning(self, message: str) -> NormResult:
        return self.model_copy(update={"warnings": [*self.warnings, message]})

    def with_echo(self, *, inputs: dict[str, Any] | None = None, config: dict[str, Any] | None = None) -> NormResult:
        update: dict[str, Any] = {}
        if inputs is not None:
            update["inputs_echo"] = inputs
        if config is not None:
            update["config_echo"] = config
        return self.model_copy(update=update)

    def as_dict(self) -> dict[str, Any]:
        """JSON-ready mapping in schema order."""
        return {
            "value": self.value,
            "method": self.method.value,
            "cross_checks": {name: check.model_dump() for name, check in sorted(self.cross_checks.items())},
            "warnings": list(self.warnings),
            "inputs_echo": dict(self.inputs_echo),
            "diagnostics": dict(sorted(self.diagnostics.items())),
            "config_echo": dict(self.config_echo),
        }


class RunConfig(BaseModel):
    """Tolerances and sampling knobs shared by every route.

    Loaded from ``key=value`` files with :meth:`from_file`; ``t_ladder`` is
    written as comma-separated floats.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    tol_root: float = Field(TOL_ROOT, gt=0)
    tol_eig: float = Field(TOL_EIG, gt=0)
    tol_bisect: float = Field(TOL_BISECT, gt=0)
    theta_samples: int = Field(THETA_SAMPLES, ge=8)
    t_ladder: tuple[float, ...] = T_LADDER
    cross_check: bool = True
    angular_tol: float = Field(ANGULAR_TOL, gt=0)
    limit_theta_samples: int = Field(LIMIT_THETA_SAMPLES, ge=8)
    oracle_tol: float = Field(ORACLE_TOL, gt=0)
    limit_tol: float = Field(LIMIT_TOL, gt=0)
    ft_scan_samples: int = Field(FT_SCAN_SAMPLES, ge=100)
    eigensolver: Literal["jacobi", "lapack"] = "lapack"

    @field_validator("t_ladder", mode="before")
    @classmethod
    def _split_ladder(cls, value: Any) -> Any:
        if isinstance(value, str):
            return tuple(part.strip() for part in value.split(",") if part.strip())
        return value

    @field_validator("t_ladder")
    @classmethod
    def _check_ladder(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        if len(value) < 2:
            raise ValueError("t_ladder needs at least two steps")
        if any(t <= 0 for t in value):
            raise ValueError("t_ladder steps must be positive")
        if any(later >= earlier for earlier, later in zip(value, value[1:])):
            raise ValueError("t_ladder must be strictly decreasing")
        return value

    @classmethod
    def from_mapping(cls, values: dict[str, Any]) -> RunConfig:
        try:
            return cls.model_validate(values)
        except ValidationError as exc:
            problems = "; ".join(
                f"{'.'.join(str(p) for p in err['loc']) or 'config'}: {err['msg']}" for err in exc.errors()
            )
            raise ConfigError(f"invalid configuration: {problems}", details={"keys": sorted(values)}) from exc

    @classmethod
    def from_file(cls, path: str | Path) -> RunConfig:
        """Parse ``key=value`` lines (``#`` comments and blank lines skipped).

        ``OSError`` from reading the file propagates unchanged.
        """
        values: dict[str, str] = {}
        text = Path(path).read_text(encoding="utf-8")
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep or not key.strip():
                raise ConfigError(f"{path}:{number}: expected key=value, got {raw.strip()!r}")
            values[key.strip()] = value.strip()
        return cls.from_mapping(values)

    def merged(self, **overrides: Any) -> RunConfig:
        """Copy with ``overrides`` applied and re-validated (``None`` values ignored)."""
        update = {key: value for key, value in overrides.items() if value is not None}
        return self.from_mapping({**self.model_dump(), **update})

    def as_dict(self) -> dict[str, Any]:
        return self.model_dump(mode="json")
