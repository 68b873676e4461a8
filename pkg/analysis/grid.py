"""
Grid - Validated, strictly increasing sets of non-negative abscissae
"""

from enum import Enum
from typing import Any, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from errors import DomainError


class GridSpacing(str, Enum):
    """Point spacing of a constructed grid."""

    LINEAR = "linear"
    LOG = "log"


class GridSummary(BaseModel):
    """Compact description of a grid for reports."""

    start: float
    stop: float
    count: int


class Grid(BaseModel):
    """Strictly increasing, finite, non-negative abscissae; at least two of them."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    points: np.ndarray

    @field_validator("points", mode="before")
    @classmethod
    def _validate_points(cls, value: Any) -> np.ndarray:
        points = np.array(value, dtype=np.float64).reshape(-1)
        if points.size < 2:
            raise ValueError("a grid needs at least 2 points")
        if not np.all(np.isfinite(points)):
            raise ValueError("grid points must be finite")
        if np.any(points < 0.0):
            raise ValueError("grid points must be >= 0")
        if np.any(np.diff(points) <= 0.0):
            raise ValueError("grid points must be strictly increasing")
        points.flags.writeable = False
        return points

    @classmethod
    def from_points(cls, points: Sequence[float]) -> "Grid":
        """
        Build a grid from an explicit list.

        Raises:
            DomainError: If the points violate any grid invariant
        """
        try:
            return cls(points=points)
        except ValidationError as e:
            raise DomainError(f"Invalid grid: {e.errors()[0]['msg']}") from e

    @classmethod
    def build(
        cls,
        start: float,
        stop: float,
        count: int,
        spacing: GridSpacing = GridSpacing.LINEAR,
    ) -> "Grid":
        """
        Build a linear or logarithmic grid on [start, stop].

        Args:
            start: First point (> 0 for log spacing)
            stop: Last point
            count: Number of points, at least 2
            spacing: linear or log

        Raises:
            DomainError: For a degenerate range or invalid count
        """
        if count < 2:
            raise DomainError("Invalid grid: count must be >= 2")
        if not (np.isfinite(start) and np.isfinite(stop)) or stop <= start:
            raise DomainError(f"Invalid grid: need finite start < stop, got [{start}, {stop}]")
        if GridSpacing(spacing) is GridSpacing.LOG:
            if start <= 0.0:
                raise DomainError("Invalid grid: log spacing needs start > 0")
            points = np.geomspace(start, stop, count)
        else:
            points = np.linspace(start, stop, count)
        return cls.from_points(points)

    @property
    def count(self) -> int:
        return int(self.points.size)

    @property
    def start(self) -> float:
        return float(self.points[0])

    @property
    def stop(self) -> float:
        return float(self.points[-1])

    def summary(self) -> GridSummary:
        return GridSummary(start=self.start, stop=self.stop, count=self.count)
