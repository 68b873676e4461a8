"""
Bounds Module - Closed-form upper bounds of the standard normal CDF

This module provides:
- The nine formulas and their metadata
- A registry keyed by BoundKind
- Q and erf counterparts of each bound
"""

from .base import BaseBound, BoundKind, BoundValue, ValidityInterval
from .coefficients import (
    EIDOUS,
    EidousCoefficients,
    exponent_polynomial,
    exponent_polynomial_derivative,
)
from .polya_family import polya_form, simplified_eidous
from .registry import (
    BoundRegistry,
    default_registry,
    erf_bound_upper,
    eval_bound,
    eval_bound_checked,
    q_bound_lower,
)

__all__ = [
    "BaseBound",
    "BoundKind",
    "BoundRegistry",
    "BoundValue",
    "EIDOUS",
    "EidousCoefficients",
    "ValidityInterval",
    "default_registry",
    "erf_bound_upper",
    "eval_bound",
    "eval_bound_checked",
    "exponent_polynomial",
    "exponent_polynomial_derivative",
    "polya_form",
    "q_bound_lower",
    "simplified_eidous",
]
