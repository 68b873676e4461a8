"""
Error Curves - Signed errors h_U(x) = Phi_U(x) - Phi(x)
"""

from typing import List, Sequence, Union

import numpy as np
from loguru import logger
from pydantic import BaseModel

from bounds import BoundKind, default_registry, eval_bound_checked
from bounds.registry import KindLike
from errors import DomainError
from reference import phi_ref
from reference.base import as_finite_array
from .grid import Grid

GridLike = Union[Grid, Sequence[float], np.ndarray]


class ErrorRow(BaseModel):
    """One bound evaluation next to the reference value."""

    x: float
    kind: BoundKind
    bound_value: float
    reference_value: float
    error: float
    out_of_validity: bool


def grid_points(grid: GridLike) -> np.ndarray:
    """Abscissae of a Grid, or of a plain sequence of one or more points."""
    if isinstance(grid, Grid):
        return grid.points
    points, _ = as_finite_array(grid)
    points = points.reshape(-1)
    if points.size == 0:
        raise DomainError("at least one abscissa is required")
    return points


def error_values(kind: KindLike, x: np.ndarray) -> np.ndarray:
    """Vectorized h_U(x) as a float64 array."""
    bound = default_registry.get_bound(kind)
    values = np.asarray(bound.evaluate(x), dtype=np.float64)
    return values - np.asarray(phi_ref(x), dtype=np.float64)


def _rows(kind: BoundKind, x: np.ndarray) -> List[ErrorRow]:
    bound = default_registry.get_bound(kind)
    values = np.atleast_1d(np.asarray(bound.evaluate(x), dtype=np.float64))
    reference = np.atleast_1d(np.asarray(phi_ref(x), dtype=np.float64))
    outside = np.atleast_1d(bound.out_of_validity(x))
    if outside.any():
        logger.warning("{}: {} of {} points outside the validity interval", kind.value, int(outside.sum()), outside.size)
    return [
        ErrorRow(
            x=float(xi),
            kind=kind,
            bound_value=float(b),
            reference_value=float(r),
            error=float(b - r),
            out_of_validity=bool(o),
        )
        for xi, b, r, o in zip(np.atleast_1d(x), values, reference, outside)
    ]


def error_at(kind: KindLike, x: float) -> ErrorRow:
    """
    Signed error of one bound at one point.

    Args:
        kind: BoundKind or CLI name
        x: Finite x >= 0

    Returns:
        ErrorRow with error = bound_value - reference_value

    Raises:
        DomainError: For negative or non-finite x
    """
    as_finite_array(x)
    checked = eval_bound_checked(kind, x)
    reference = float(phi_ref(checked.x))
    return ErrorRow(
        x=checked.x,
        kind=checked.kind,
        bound_value=checked.value,
        reference_value=reference,
        error=checked.value - reference,
        out_of_validity=checked.out_of_validity,
    )


def scan_errors(kind: KindLike, grid: GridLike) -> List[ErrorRow]:
    """
    Signed errors over a grid, one row per point in grid order.

    Args:
        kind: BoundKind or CLI name
        grid: Grid, or a plain sequence of abscissae

    Returns:
        List of ErrorRow
    """
    resolved = default_registry.resolve(kind)
    points = grid_points(grid)
    logger.debug("Scanning {} over {} points", resolved.value, points.size)
    return _rows(resolved, points)
