"""
Graph Series - Data behind the h', h and h* curves
"""

from enum import Enum
from typing import List, Tuple

import numpy as np

from bounds import BoundKind
from .curves import GridLike, error_values, grid_points
from .extremum import h_prime


class GraphKind(str, Enum):
    """Curves with published plots."""

    HPRIME = "hprime"
    H = "h"
    HSTAR = "hstar"


def graph_series(graph: GraphKind, grid: GridLike) -> List[Tuple[float, float]]:
    """
    (x, value) pairs of one curve.

    hprime is the derivative of h_EI, h is h_EI itself and hstar is the
    signed error of the approximation Phi*_EI.
    """
    points = grid_points(grid)
    graph = GraphKind(graph)
    if graph is GraphKind.HPRIME:
        values = np.asarray(h_prime(points), dtype=np.float64)
    elif graph is GraphKind.H:
        values = error_values(BoundKind.EIDOUS, points)
    else:
        values = error_values(BoundKind.EIDOUS_STAR, points)
    return [(float(x), float(v)) for x, v in zip(points, values)]
