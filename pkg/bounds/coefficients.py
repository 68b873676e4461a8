"""
Exponent Polynomial - Coefficients of the quartic-corrected Polya exponent

p(x) = 1 + c2*x^2 + c4*x^4 multiplies -2x^2/pi inside the Polya form.
"""

import math

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from reference.base import ArrayLike, as_finite_array, as_output

# Rounded forms quoted alongside the bound; never used by the bound itself
ROUNDED_C2 = -0.015023
ROUNDED_C4 = 0.000666
# The approximation Phi*_EI
STAR_C2 = -0.01506
STAR_C4 = 0.00063


class EidousCoefficients(BaseModel):
    """Coefficients of the exponent polynomial."""

    model_config = ConfigDict(frozen=True)

    c2: float
    c4: float

    @model_validator(mode="after")
    def _check_signs(self) -> "EidousCoefficients":
        # c4 > 0 makes the exponent -> -inf, so the bound tends to 1
        if not self.c2 < 0.0:
            raise ValueError("c2 must be negative")
        if not self.c4 > 0.0:
            raise ValueError("c4 must be positive")
        return self

    @classmethod
    def exact(cls) -> "EidousCoefficients":
        """Coefficients from their rational-in-pi expressions."""
        pi = math.pi
        c2 = (3.0 - pi) / (3.0 * pi)
        c4 = 7.0 / 90.0 + 40001.0 / (30000.0 * pi * pi) - 2.0 / (3.0 * pi)
        return cls(c2=c2, c4=c4)

    @property
    def vertex_square(self) -> float:
        """x^2 at which p attains its minimum."""
        return -self.c2 / (2.0 * self.c4)


EIDOUS = EidousCoefficients.exact()
ROUNDED = EidousCoefficients(c2=ROUNDED_C2, c4=ROUNDED_C4)
STAR = EidousCoefficients(c2=STAR_C2, c4=STAR_C4)


def polynomial_values(x: np.ndarray, coefficients: EidousCoefficients) -> np.ndarray:
    x2 = x * x
    return 1.0 + x2 * (coefficients.c2 + coefficients.c4 * x2)


def exponent_polynomial(x: ArrayLike, coefficients: EidousCoefficients = EIDOUS) -> ArrayLike:
    """
    p(x) = 1 + c2*x^2 + c4*x^4.

    Args:
        x: Finite scalar or array (any sign)
        coefficients: Defaults to the exact coefficients

    Returns:
        p(x), strictly positive for the exact coefficients
    """
    arr, scalar = as_finite_array(x)
    with np.errstate(over="ignore"):
        return as_output(polynomial_values(arr, coefficients), scalar)


def exponent_polynomial_derivative(x: ArrayLike, coefficients: EidousCoefficients = EIDOUS) -> ArrayLike:
    """p'(x) = 2*c2*x + 4*c4*x^3."""
    arr, scalar = as_finite_array(x)
    with np.errstate(over="ignore"):
        return as_output(arr * (2.0 * coefficients.c2 + 4.0 * coefficients.c4 * arr * arr), scalar)
