"""
Reference Base - Accuracy settings, constants and input validation for the oracle
"""

import math
from typing import Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from config import defaults
from errors import DomainError

ArrayLike = Union[float, np.ndarray]

EPS = float(np.finfo(np.float64).eps)

SQRT2 = math.sqrt(2.0)
SQRT_PI = math.sqrt(math.pi)
SQRT_2PI = math.sqrt(2.0 * math.pi)
INV_SQRT_2PI = 1.0 / SQRT_2PI
TWO_OVER_SQRT_PI = 2.0 / SQRT_PI


class ReferenceAccuracy(BaseModel):
    """Accuracy target and algorithm switch of the reference oracle."""

    model_config = ConfigDict(frozen=True)

    target_relative_error: float = Field(4.0 * EPS, gt=0.0)
    # In erf-argument units: the series is used for y < switch, the tail algorithm above
    series_tail_switch: float = Field(defaults.erf_switch, gt=0.0)

    @property
    def stop_tolerance(self) -> float:
        """Relative size of the last accepted series term / continued-fraction step."""
        return self.target_relative_error / 8.0

    @classmethod
    def create(cls, **kwargs) -> "ReferenceAccuracy":
        """Build an accuracy object, reporting invalid fields as DomainError."""
        try:
            return cls(**kwargs)
        except ValidationError as e:
            raise DomainError(f"Invalid reference accuracy: {e.errors()[0]['msg']}") from e


DEFAULT_ACCURACY = ReferenceAccuracy()


def as_finite_array(x: ArrayLike, name: str = "x") -> Tuple[np.ndarray, bool]:
    """
    Convert input to a float64 array and reject non-finite values.

    Args:
        x: Scalar or array input
        name: Argument name used in the error message

    Returns:
        (array, was_scalar)

    Raises:
        DomainError: If any value is NaN or infinite
    """
    arr = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite")
    return arr, arr.ndim == 0


def as_output(values: np.ndarray, was_scalar: bool) -> ArrayLike:
    """Return a Python float for scalar input, the array otherwise."""
    if was_scalar:
        return float(values)
    return values
