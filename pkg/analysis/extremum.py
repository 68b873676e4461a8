"""
Extremum Search - Maximum absolute error, the derivative of h_EI and its root
"""

import math
from typing import List, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel, model_validator
from scipy.optimize import brentq

from bounds import BoundKind, EIDOUS, default_registry, exponent_polynomial, exponent_polynomial_derivative
from bounds.registry import KindLike
from config import defaults
from errors import DomainError, PreconditionError
from reference import std_normal_pdf
from reference.base import SQRT_2PI, ArrayLike, as_finite_array, as_output
from .curves import GridLike, error_at, error_values, grid_points

INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
MAX_GOLDEN_ITERATIONS = 200

# Below this h' is taken from its leading Taylor term 5*A*x^4; the closed
# form cancels to zero there.
_SMALL_X = 1e-3
# h_EI(x) = A x^5 + O(x^7) near 0
_QUINTIC = 1.0 / (30000.0 * math.pi**2) / (2.0 * SQRT_2PI)
# exp underflows to 0 below this
_EXP_UNDERFLOW = -746.0


class ExtremumReport(BaseModel):
    """Location and signed error of a refined extremum or root."""

    kind: BoundKind
    location: float
    value: float
    bracket: Tuple[float, float]
    x_tolerance: float
    iterations: int
    converged: bool

    @model_validator(mode="after")
    def _check_bracket(self) -> "ExtremumReport":
        low, high = self.bracket
        if not low <= self.location <= high:
            raise ValueError(f"location {self.location} outside bracket {self.bracket}")
        return self


class RatioReport(BaseModel):
    """Ratio of the maximum absolute errors of Phi_EI and Phi*_EI."""

    numerator: ExtremumReport
    denominator: ExtremumReport
    ratio: float


def _check_interval(interval: Tuple[float, float]) -> Tuple[float, float]:
    low, high = (float(v) for v in interval)
    if not (math.isfinite(low) and math.isfinite(high)):
        raise DomainError("interval bounds must be finite")
    if low < 0.0:
        raise DomainError(f"interval must lie in x >= 0, got [{low}, {high}]")
    if not high > low:
        raise DomainError(f"empty or degenerate interval [{low}, {high}]")
    return low, high


def _golden_section_max(f, low: float, high: float, x_tolerance: float) -> Tuple[float, float, float, int]:
    """Maximize a unimodal f on [low, high]; ties keep the left part."""
    a, b = low, high
    c = b - INV_GOLDEN * (b - a)
    d = a + INV_GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    iterations = 0
    while b - a > x_tolerance and iterations < MAX_GOLDEN_ITERATIONS:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_GOLDEN * (b - a)
            fd = f(d)
        iterations += 1
    return 0.5 * (a + b), a, b, iterations


def max_abs_error(
    kind: KindLike,
    interval: Tuple[float, float] = (0.0, defaults.x_max),
    x_tolerance: float = defaults.x_tolerance,
    coarse_points: int = defaults.coarse_points,
) -> ExtremumReport:
    """
    Locate the global maximizer of |h_U| on an interval.

    A coarse scan picks the best cell (ties within tie_tolerance go to the
    smaller x); golden-section search then refines the two cells around it.

    Args:
        kind: BoundKind or CLI name
        interval: (low, high) with 0 <= low < high
        x_tolerance: Target bracket width, > 0
        coarse_points: Points in the coarse scan

    Returns:
        ExtremumReport whose value is the signed error at the location

    Raises:
        DomainError: For an empty/degenerate interval or x_tolerance <= 0
    """
    resolved = default_registry.resolve(kind)
    low, high = _check_interval(interval)
    if not x_tolerance > 0.0:
        raise DomainError("x_tolerance must be > 0")
    if coarse_points < 3:
        raise DomainError("coarse_points must be >= 3")
    validity = resolved.validity_interval
    if low < validity.lower or high > validity.upper:
        logger.warning("{}: interval [{}, {}] leaves the validity interval", resolved.value, low, high)

    xs = np.linspace(low, high, coarse_points)
    magnitude = np.abs(error_values(resolved, xs))
    peak = magnitude.max()
    best = int(np.argmax(magnitude >= peak - defaults.tie_tolerance))
    left = float(xs[max(best - 1, 0)])
    right = float(xs[min(best + 1, coarse_points - 1)])
    logger.debug("{}: coarse peak {:.6e} at x={}, refining [{}, {}]", resolved.value, peak, xs[best], left, right)

    def objective(x: float) -> float:
        return float(abs(error_values(resolved, np.array([x]))[0]))

    location, a, b, iterations = _golden_section_max(objective, left, right, x_tolerance)
    converged = b - a <= x_tolerance
    if not converged:
        logger.warning("{}: golden-section stopped at width {:.3e}", resolved.value, b - a)

    return ExtremumReport(
        kind=resolved,
        location=location,
        value=error_at(resolved, location).error,
        bracket=(a, b),
        x_tolerance=x_tolerance,
        iterations=iterations,
        converged=converged,
    )


def h_prime(x: ArrayLike) -> ArrayLike:
    """
    Derivative of h_EI(x) = Phi_EI(x) - Phi(x), from the closed form.

    With E(x) = -(2x^2/pi) p(x),

        h'(x) = exp(E) (-E') / (4 sqrt(1 - exp(E))) - phi(x),

    and h'(0) = 0.

    Args:
        x: Finite x >= 0, scalar or array

    Raises:
        DomainError: For negative or non-finite x
    """
    arr, scalar = as_finite_array(x)
    if np.any(arr < 0.0):
        raise DomainError("h_prime is defined for x >= 0")

    flat = arr.reshape(-1)
    result = np.zeros_like(flat)
    small = flat < _SMALL_X
    result[small] = 5.0 * _QUINTIC * flat[small] ** 4

    regular = ~small
    if regular.any():
        xr = flat[regular]
        p = np.asarray(exponent_polynomial(xr, EIDOUS))
        dp = np.asarray(exponent_polynomial_derivative(xr, EIDOUS))
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            exponent = -(2.0 / math.pi) * xr * xr * p
            slope = (2.0 / math.pi) * (2.0 * xr * p + xr * xr * dp)
            radical = np.exp(exponent) * slope / (4.0 * np.sqrt(-np.expm1(exponent)))
            radical = np.where(exponent > _EXP_UNDERFLOW, radical, 0.0)
        result[regular] = radical - np.asarray(std_normal_pdf(xr))
    return as_output(result.reshape(arr.shape), scalar)


def h_prime_root(
    bracket: Tuple[float, float] = (2.0, 4.0),
    x_tolerance: float = defaults.x_tolerance,
) -> ExtremumReport:
    """
    Root of h_EI' inside a sign-changing bracket (Brent's method).

    Args:
        bracket: (low, high)
        x_tolerance: Absolute tolerance on the root

    Returns:
        ExtremumReport with value = h_EI at the root

    Raises:
        PreconditionError: If h' does not change sign over the bracket
    """
    low, high = _check_interval(bracket)
    if not x_tolerance > 0.0:
        raise DomainError("x_tolerance must be > 0")
    f_low, f_high = h_prime(low), h_prime(high)
    if f_low * f_high > 0.0:
        raise PreconditionError(
            f"h' does not change sign on [{low}, {high}] (h'={f_low:.3e}, {f_high:.3e})"
        )

    root, result = brentq(h_prime, low, high, xtol=x_tolerance, full_output=True)
    logger.debug("h' root {} after {} iterations", root, result.iterations)
    half = 0.5 * x_tolerance
    return ExtremumReport(
        kind=BoundKind.EIDOUS,
        location=root,
        value=error_at(BoundKind.EIDOUS, root).error,
        bracket=(max(low, root - half), min(high, root + half)),
        x_tolerance=x_tolerance,
        iterations=result.iterations,
        converged=bool(result.converged),
    )


def turning_points(
    kind: KindLike,
    grid: GridLike,
    noise_floor: float = 1e-14,
) -> List[float]:
    """
    Grid abscissae where the trend of h_U reverses.

    Consecutive differences smaller than noise_floor are ignored; h sits at
    the rounding floor near x = 0 and in the far tail.
    """
    points = grid_points(grid)
    delta = np.diff(error_values(kind, points))
    kept = np.flatnonzero(np.abs(delta) >= noise_floor)
    signs = np.sign(delta[kept])
    flips = np.flatnonzero(signs[1:] != signs[:-1])
    return [float(0.5 * (points[kept[i] + 1] + points[kept[i + 1]])) for i in flips]


def error_ratio_report(x_tolerance: float = defaults.x_tolerance) -> RatioReport:
    """Both maximum absolute errors over [0, x_max] and their ratio."""
    numerator = max_abs_error(BoundKind.EIDOUS, (0.0, defaults.x_max), x_tolerance)
    denominator = max_abs_error(BoundKind.EIDOUS_STAR, (0.0, defaults.x_max), x_tolerance)
    return RatioReport(
        numerator=numerator,
        denominator=denominator,
        ratio=abs(numerator.value) / abs(denominator.value),
    )


def error_ratio_ei_vs_star() -> float:
    """max|Phi_EI - Phi| / max|Phi*_EI - Phi| over [0, x_max]."""
    return error_ratio_report().ratio
