"""
Reference Oracle - Standard normal pdf, Phi, Q, erf and erfc

This module is the ground truth every bound is measured against. It
must never import from `bounds`.
"""

import numpy as np

from config import defaults
from .base import (
    DEFAULT_ACCURACY,
    INV_SQRT_2PI,
    SQRT2,
    ArrayLike,
    ReferenceAccuracy,
    as_finite_array,
    as_output,
)
from .kernels import TAIL_CF_MIN_X, erf_series, exp_neg_half_square, upper_tail_continued_fraction


def std_normal_pdf(x: ArrayLike) -> ArrayLike:
    """
    Standard normal density exp(-x^2/2)/sqrt(2*pi).

    Args:
        x: Finite scalar or array

    Returns:
        Density values; 0 where the value underflows (|x| > ~38.6)
    """
    arr, scalar = as_finite_array(x)
    return as_output(INV_SQRT_2PI * exp_neg_half_square(arr), scalar)


def _erf_small(y: np.ndarray, accuracy: ReferenceAccuracy) -> np.ndarray:
    return erf_series(y, accuracy.stop_tolerance, defaults.max_series_terms)


def _tail(x: np.ndarray, accuracy: ReferenceAccuracy) -> np.ndarray:
    return upper_tail_continued_fraction(x, accuracy.stop_tolerance, defaults.max_cf_iterations)


def _upper_and_lower(ax: np.ndarray, accuracy: ReferenceAccuracy) -> tuple[np.ndarray, np.ndarray]:
    """Return (Phi(ax), Q(ax)) for ax >= 0.

    The continued fraction takes over from min(TAIL_CF_MIN_X, sqrt(2) *
    switch) and feeds both sides, so Q keeps its relative accuracy and
    Phi + Q rounds to 1. Below that both sides come from the series.
    """
    shape = ax.shape
    ax = ax.reshape(-1)
    direct_tail = (ax >= TAIL_CF_MIN_X) | (ax / SQRT2 >= accuracy.series_tail_switch)
    series = ~direct_tail

    half_erf = np.zeros_like(ax)
    tail = np.zeros_like(ax)
    if series.any():
        half_erf[series] = 0.5 * _erf_small(ax[series] / SQRT2, accuracy)
    if direct_tail.any():
        tail[direct_tail] = _tail(ax[direct_tail], accuracy)

    upper = np.where(direct_tail, 1.0 - tail, 0.5 + half_erf)
    lower = np.where(direct_tail, tail, 0.5 - half_erf)
    return upper.reshape(shape), lower.reshape(shape)


def phi_ref(x: ArrayLike, accuracy: ReferenceAccuracy = DEFAULT_ACCURACY) -> ArrayLike:
    """
    Standard normal CDF Phi(x).

    Negative arguments use the reflection Phi(-x) = Q(x), so the lower
    tail is as accurate as the upper one.

    Args:
        x: Finite scalar or array
        accuracy: Oracle accuracy settings

    Returns:
        Phi(x) in [0, 1]
    """
    arr, scalar = as_finite_array(x)
    upper, lower = _upper_and_lower(np.abs(arr), accuracy)
    return as_output(np.where(arr >= 0.0, upper, lower), scalar)


def q_ref(x: ArrayLike, accuracy: ReferenceAccuracy = DEFAULT_ACCURACY) -> ArrayLike:
    """
    Gaussian tail Q(x) = 1 - Phi(x), computed tail-stably.

    For large x the continued fraction gives Q directly, so the result
    keeps its relative accuracy down to ~1e-300 and is 0 past underflow.

    Args:
        x: Finite scalar or array
        accuracy: Oracle accuracy settings

    Returns:
        Q(x) in [0, 1]
    """
    arr, scalar = as_finite_array(x)
    upper, lower = _upper_and_lower(np.abs(arr), accuracy)
    return as_output(np.where(arr >= 0.0, lower, upper), scalar)


def erf_ref(y: ArrayLike, accuracy: ReferenceAccuracy = DEFAULT_ACCURACY) -> ArrayLike:
    """
    Error function, equal to 2*Phi(sqrt(2)*y) - 1.

    Small arguments return the series value directly instead of going
    through Phi, which keeps relative accuracy near y = 0.
    """
    arr, scalar = as_finite_array(y, "y")
    ay = np.abs(arr).reshape(-1)
    small = ay < accuracy.series_tail_switch

    magnitude = np.zeros_like(ay)
    if small.any():
        magnitude[small] = _erf_small(ay[small], accuracy)
    if (~small).any():
        magnitude[~small] = 1.0 - 2.0 * _tail(SQRT2 * ay[~small], accuracy)
    return as_output(np.copysign(magnitude.reshape(arr.shape), arr), scalar)


def erfc_ref(y: ArrayLike, accuracy: ReferenceAccuracy = DEFAULT_ACCURACY) -> ArrayLike:
    """Complementary error function, equal to 2*Q(sqrt(2)*y); values in (0, 2)."""
    arr, scalar = as_finite_array(y, "y")
    ay = np.abs(arr).reshape(-1)
    small = ay < accuracy.series_tail_switch

    x = SQRT2 * ay
    direct_tail = (x >= TAIL_CF_MIN_X) | ~small

    upper_side = np.zeros_like(ay)
    if (~direct_tail).any():
        upper_side[~direct_tail] = 1.0 - _erf_small(ay[~direct_tail], accuracy)
    if direct_tail.any():
        upper_side[direct_tail] = 2.0 * _tail(x[direct_tail], accuracy)
    upper_side = upper_side.reshape(arr.shape)
    return as_output(np.where(arr >= 0.0, upper_side, 2.0 - upper_side), scalar)
