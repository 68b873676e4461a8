"""
Polya Family - Bounds of the form (1 + sqrt(1 - exp(-2x^2 p(x)/pi))) / 2
"""

import math

import numpy as np

from reference.base import ArrayLike, as_finite_array, as_output
from .base import BaseBound, BoundKind
from .coefficients import EIDOUS, ROUNDED, STAR, EidousCoefficients, polynomial_values

TWO_OVER_PI = 2.0 / math.pi


def polya_form(x: np.ndarray, p: np.ndarray) -> np.ndarray:
    """
    (1 + sqrt(1 - exp(-u))) / 2 with u = (2/pi) x^2 p.

    1 - exp(-u) is taken as -expm1(-u) so the radicand keeps full
    relative accuracy for small u.
    """
    u = TWO_OVER_PI * (x * x) * p
    return 0.5 + 0.5 * np.sqrt(-np.expm1(-u))


class PolyaBound(BaseBound):
    """Phi_PO(x) = (1 + sqrt(1 - exp(-2x^2/pi))) / 2."""

    kind = BoundKind.POLYA

    def formula(self, x: np.ndarray) -> np.ndarray:
        return polya_form(x, np.ones_like(x))


class EidousBound(BaseBound):
    """Polya form with the exponent multiplied by the quartic p(x)."""

    kind = BoundKind.EIDOUS

    def __init__(self, coefficients: EidousCoefficients = EIDOUS):
        super().__init__()
        self.coefficients = coefficients

    def formula(self, x: np.ndarray) -> np.ndarray:
        return polya_form(x, polynomial_values(x, self.coefficients))


class EidousStarBound(EidousBound):
    """Two-coefficient approximation; crosses Phi, so not a bound."""

    kind = BoundKind.EIDOUS_STAR

    def __init__(self):
        super().__init__(STAR)


def simplified_eidous(x: ArrayLike) -> ArrayLike:
    """Polya form with the rounded coefficients (-0.015023, 0.000666)."""
    arr, scalar = as_finite_array(x)
    with np.errstate(over="ignore"):
        return as_output(polya_form(arr, polynomial_values(arr, ROUNDED)), scalar)
