"""Which numerical-radius and norm routes apply to a Blaschke product.

Callers (the solver facade, the CLI's ``auto`` method) should consult these
flags instead of re-deriving degree and realness rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .blaschke import BlaschkeProduct
from .exceptions import DomainError
from .models import Method

# Largest degree with a closed-form numerical radius.
CLOSED_FORM_MAX_DEGREE = 4

# CLI spellings of the radius routes.
RADIUS_METHOD_NAMES: dict[str, Method] = {
    "closed": Method.CLOSED_FORM,
    "roots": Method.ROOT_METHOD,
    "oracle": Method.ORACLE,
    "limit": Method.LIMIT,
    "pick": Method.PICK,
}

NORM_METHOD_NAMES = ("svd", "pick", "ft")


@dataclass(frozen=True)
class MethodCapabilities:
    """Routes available for one product.

    ``real`` is true for zeros on any line through the origin; the real-zero
    routes rotate such products onto the real axis first.
    """

    degree: int
    real: bool
    distinct: bool
    closed_form: bool
    root_method: bool
    oracle: bool = True
    limit: bool = True
    pick: bool = True
    ft: bool = True

    def radius_methods(self) -> list[Method]:
        """Radius routes in preference order."""
        methods: list[Method] = []
        if self.closed_form:
            methods.append(Method.CLOSED_FORM)
        if self.root_method:
            methods.append(Method.ROOT_METHOD)
        methods.extend([Method.ORACLE, Method.LIMIT, Method.PICK])
        return methods

    def as_dict(self) -> dict[str, Any]:
        return {
            "degree": self.degree,
            "real": self.real,
            "distinct": self.distinct,
            "closed_form": self.closed_form,
            "root_method": self.root_method,
            "oracle": self.oracle,
            "limit": self.limit,
            "pick": self.pick,
            "ft": self.ft,
            "radius_methods": [m.value for m in self.radius_methods()],
            "auto": select_radius_method(self.degree, self.real).value,
        }


def select_radius_method(degree: int, real: bool) -> Method:
    """The ``auto`` decision table: closed form, then root method, then oracle."""
    if degree < 1:
        raise DomainError(f"degree must be positive, got {degree}")
    if real and degree <= CLOSED_FORM_MAX_DEGREE:
        return Method.CLOSED_FORM
    if real:
        return Method.ROOT_METHOD
    return Method.ORACLE


def resolve_radius_method(name: str, b: BlaschkeProduct) -> Method:
    """Map a CLI method name (or ``auto``) to a route for ``b``."""
    if name == "auto":
        return select_radius_method(b.degree, b.collinear_angle() is not None)
    try:
        return RADIUS_METHOD_NAMES[name]
    except KeyError:
        choices = ", ".join(["auto", *RADIUS_METHOD_NAMES])
        raise DomainError(f"unknown method {name!r} (choose from {choices})") from None


def capabilities_for(b: BlaschkeProduct) -> MethodCapabilities:
    real = b.collinear_angle() is not None
    return MethodCapabilities(
        degree=b.degree,
        real=real,
        distinct=not b.has_repeated_zeros,
        closed_form=real and b.degree <= CLOSED_FORM_MAX_DEGREE,
        root_method=real,
    )
