"""
Elementary Bounds - 1/2 plus an odd elementary function of x
"""

import math

import numpy as np

from reference.base import INV_SQRT_2PI, SQRT2, SQRT_PI
from .base import BaseBound, BoundKind

# Taken as exact
ALZER_SCALE = 1.0407
SQRT_TWO_OVER_PI = math.sqrt(2.0 / math.pi)


class AlzerBound(BaseBound):
    """Phi_AL(x) = 1/2 + 1.0407 * tanh(sqrt(2/pi) x) / 2."""

    kind = BoundKind.ALZER

    def formula(self, x: np.ndarray) -> np.ndarray:
        return 0.5 + 0.5 * ALZER_SCALE * np.tanh(SQRT_TWO_OVER_PI * x)


class NeumannBound(BaseBound):
    """Phi_NE(x) = 1/2 + x (2 + exp(-x^2/2)) / (3 sqrt(2 pi))."""

    kind = BoundKind.NEUMANN

    def formula(self, x: np.ndarray) -> np.ndarray:
        return 0.5 + (x / 3.0) * (2.0 + np.exp(-0.5 * x * x)) * INV_SQRT_2PI


class YangBound(BaseBound):
    """Phi_YA(x) = 1/2 + x (4 + 5 exp(-0.3 x^2)) / (9 sqrt(2 pi))."""

    kind = BoundKind.YANG

    def formula(self, x: np.ndarray) -> np.ndarray:
        return 0.5 + (x / 9.0) * (4.0 + 5.0 * np.exp(-0.3 * x * x)) * INV_SQRT_2PI


class BercuBound(BaseBound):
    """
    Rational bound in y = x / sqrt(2):

        Phi_BE(x) = 1/2 + 113400 y / (sqrt(pi) D(y)),
        D(y) = 29y^8 - 660y^6 + 1260y^4 + 37800y^2 + 113400.

    D has no real zeros, but the bound is only claimed for x <= 6.248;
    beyond that it drops below Phi.
    """

    kind = BoundKind.BERCU

    def formula(self, x: np.ndarray) -> np.ndarray:
        y = x / SQRT2
        s = y * y
        denominator = (((29.0 * s - 660.0) * s + 1260.0) * s + 37800.0) * s + 113400.0
        return 0.5 + 113400.0 * y / (SQRT_PI * denominator)
