"""
Reference Kernels - Vectorized series and continued-fraction evaluators

All kernels work on float64 arrays of non-negative arguments and never
touch the closed-form bounds.
"""

import math

import numpy as np
from loguru import logger

from .base import EPS, INV_SQRT_2PI, TWO_OVER_SQRT_PI

# Beyond this the Gaussian factor is 0 in double precision anyway
_EXP_ARG_CLIP = 64.0
_SPLIT_SCALE = 4096.0
_FPMIN = 1e-300
# The continued fraction is used for Q from here on (x^2/2 >= a + 1 with a = 1/2)
TAIL_CF_MIN_X = math.sqrt(3.0)


def split_square(t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Split t**2 into an exactly representable head and a small tail.

    t is cut to 12 fractional bits (t_hi); t_hi**2 then fits in 53 bits
    for t <= 64 and t - t_hi is exact, so t**2 = hi + lo with lo tiny.

    Args:
        t: Non-negative array, at most 64

    Returns:
        (hi, lo) with hi exact
    """
    t_hi = np.floor(t * _SPLIT_SCALE) / _SPLIT_SCALE
    t_lo = t - t_hi
    return t_hi * t_hi, t_lo * (t + t_hi)


def exp_neg_half_square(x: np.ndarray) -> np.ndarray:
    """exp(-x**2/2) without the rounding error of forming x**2."""
    ax = np.minimum(np.abs(x), _EXP_ARG_CLIP)
    hi, lo = split_square(ax)
    return np.exp(-0.5 * hi) * np.exp(-0.5 * lo)


def erf_series(y: np.ndarray, tolerance: float, max_terms: int) -> np.ndarray:
    """
    erf(y) for 0 <= y below the tail switch.

    Uses the exponentially weighted Maclaurin form
        erf(y) = 2/sqrt(pi) * exp(-y^2) * sum_n (2y^2)^n y / (1*3*...*(2n+1))
    whose terms are all positive, summed with Kahan compensation. The
    same rounded y^2 feeds the series and the exponential, so its
    rounding error cancels to first order.

    Args:
        y: Non-negative arguments
        tolerance: Stop once every new term is below tolerance * partial sum
        max_terms: Hard cap on the number of terms

    Returns:
        erf(y), same shape as y
    """
    y2 = y * y
    ratio = 2.0 * y2
    term = y.copy()
    total = y.copy()
    compensation = np.zeros_like(y)

    for n in range(1, max_terms + 1):
        term = term * ratio / (2 * n + 1)
        adjusted = term - compensation
        new_total = total + adjusted
        compensation = (new_total - total) - adjusted
        total = new_total
        if np.all(term <= tolerance * total):
            logger.debug("erf series converged after {} terms on {} points", n, y.size)
            break
    else:
        logger.warning("erf series hit the {}-term cap", max_terms)

    return TWO_OVER_SQRT_PI * np.exp(-y2) * total


def upper_tail_continued_fraction(x: np.ndarray, tolerance: float, max_iterations: int) -> np.ndarray:
    """
    Q(x) = 1 - Phi(x) for large positive x, computed directly.

    Evaluates the even continued fraction of the upper incomplete gamma
    function Gamma(1/2, x^2/2) with the modified Lentz algorithm, then
        Q(x) = phi(x) * x * cf / 2.
    phi(x) comes from exp_neg_half_square, so Q keeps its relative
    accuracy down to the underflow threshold, where it becomes 0.

    Args:
        x: Positive arguments, in practice at least TAIL_CF_MIN_X
        tolerance: Convergence threshold on |step - 1|
        max_iterations: Hard cap on Lentz iterations

    Returns:
        Q(x), same shape as x
    """
    a = 0.5
    tol = max(tolerance, 2.0 * EPS)
    w = 0.5 * x * x

    b = w + 1.0 - a
    c = np.full_like(x, 1.0 / _FPMIN)
    d = 1.0 / b
    cf = d.copy()
    active = np.ones(x.shape, dtype=bool)

    for i in range(1, max_iterations + 1):
        an = -i * (i - a)
        b = b + 2.0
        d = an * d + b
        d = np.where(np.abs(d) < _FPMIN, _FPMIN, d)
        c = b + an / c
        c = np.where(np.abs(c) < _FPMIN, _FPMIN, c)
        d = 1.0 / d
        step = d * c
        cf = np.where(active, cf * step, cf)
        active &= np.abs(step - 1.0) > tol
        if not active.any():
            logger.debug("Lentz tail converged after {} iterations on {} points", i, x.size)
            break
    else:
        logger.warning("Lentz tail hit the {}-iteration cap", max_iterations)

    return INV_SQRT_2PI * exp_neg_half_square(x) * x * cf * 0.5
