"""Rings of T-fixed components against quiver Grassmannians of preprojective modules."""

from ._mvq import (
    BoundExceeded,
    InputError,
    Module,
    PavingViolation,
    UnsupportedInput,
    ValidationError,
    chamber_weights,
    check_admissibility,
    count_points,
    euler_cc,
    factor_check,
    poincare,
    ring,
    scan,
    verify,
    weyl_group_order,
)

__all__ = [
    "BoundExceeded",
    "InputError",
    "Module",
    "PavingViolation",
    "UnsupportedInput",
    "ValidationError",
    "chamber_weights",
    "check_admissibility",
    "count_points",
    "euler_cc",
    "factor_check",
    "poincare",
    "ring",
    "scan",
    "verify",
    "weyl_group_order",
]
