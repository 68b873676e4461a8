"""
Mills-Ratio Bounds - 1 - phi(x) * r(x) forms
"""

import numpy as np

from reference.normal import std_normal_pdf
from .base import BaseBound, BoundKind


class KoubaBound(BaseBound):
    """Phi_KO(x) = 1 - phi(x) / (sqrt(1 + x^2/4) + x/2)."""

    kind = BoundKind.KOUBA

    def formula(self, x: np.ndarray) -> np.ndarray:
        half = 0.5 * x
        return 1.0 - std_normal_pdf(x) / (np.hypot(1.0, half) + half)


class AbreuBound(BaseBound):
    """Phi_AB(x) = 1 - exp(-x^2)/12 - phi(x)/(1 + x)."""

    kind = BoundKind.ABREU

    def formula(self, x: np.ndarray) -> np.ndarray:
        return 1.0 - np.exp(-x * x) / 12.0 - std_normal_pdf(x) / (1.0 + x)
