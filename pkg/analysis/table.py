"""
Table Regeneration - Signed errors of all eight bounds on the published abscissae
"""

from enum import Enum
from typing import Dict, List, Sequence, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel

from bounds import BoundKind
from errors import DomainError
from reference.base import EPS
from .curves import ErrorRow, grid_points, scan_errors

TABLE1_ABSCISSAE: Tuple[float, ...] = (
    0.1, 0.3, 0.5, 0.7, 0.9, 1.1, 1.3, 1.5, 1.7, 1.9, 2.1, 2.3, 2.5, 2.7, 2.9, 3.1,
    3.3, 3.5, 3.7, 3.9, 4.1, 4.4, 4.7, 5.0, 5.5, 6.0, 6.5, 7.0, 7.5, 8.0, 8.5,
)

TABLE1_KINDS: Tuple[BoundKind, ...] = (
    BoundKind.KOUBA,
    BoundKind.ALZER,
    BoundKind.ABREU,
    BoundKind.NEUMANN,
    BoundKind.YANG,
    BoundKind.BERCU,
    BoundKind.POLYA,
    BoundKind.EIDOUS,
)

# Published h_U values, columns in TABLE1_KINDS order
PRINTED_TABLE1: Dict[float, Tuple[float, ...]] = {
    0.1: (1.11e-2, 1.60e-3, 1.68e-2, 6.63e-8, 1.90e-11, 0.0, 2.98e-6, 4.63e-11),
    0.3: (9.13e-3, 4.32e-3, 1.26e-2, 1.58e-5, 4.08e-8, 3.11e-12, 7.72e-5, 1.48e-9),
    0.5: (6.77e-3, 5.77e-3, 8.93e-3, 1.96e-4, 1.41e-6, 8.05e-10, 3.29e-4, 1.29e-8),
    0.7: (4.66e-3, 5.72e-3, 7.23e-3, 9.96e-4, 1.41e-5, 2.96e-8, 7.96e-4, 4.21e-8),
    0.9: (3.03e-3, 4.46e-3, 6.94e-3, 3.25e-3, 7.66e-5, 4.16e-7, 1.43e-3, 8.92e-8),
    1.1: (1.88e-3, 2.64e-3, 7.08e-3, 8.10e-3, 2.87e-4, 3.25e-6, 2.11e-3, 2.29e-7),
    1.3: (1.12e-3, 1.01e-3, 6.92e-3, 1.68e-2, 8.38e-4, 1.71e-5, 2.70e-3, 8.14e-7),
    1.5: (6.40e-4, 9.57e-5, 6.22e-3, 3.05e-2, 2.04e-3, 6.80e-5, 3.06e-3, 2.65e-6),
    1.7: (3.53e-4, 1.63e-4, 5.10e-3, 5.00e-2, 4.31e-3, 2.17e-4, 3.14e-3, 6.85e-6),
    1.9: (1.88e-4, 1.19e-3, 3.84e-3, 7.56e-2, 8.18e-3, 5.86e-4, 2.94e-3, 1.43e-5),
    2.1: (9.67e-5, 2.98e-3, 2.66e-3, 1.07e-1, 1.42e-2, 1.38e-3, 2.54e-3, 2.48e-5),
    2.3: (4.82e-5, 5.23e-3, 1.72e-3, 1.44e-1, 2.28e-2, 2.92e-3, 2.03e-3, 3.70e-5),
    2.5: (2.32e-5, 7.65e-3, 1.04e-3, 1.86e-1, 3.45e-2, 5.65e-3, 1.51e-3, 4.82e-5),
    2.7: (1.08e-5, 1.00e-2, 5.94e-4, 2.31e-1, 4.94e-2, 1.01e-2, 1.05e-3, 5.57e-5),
    2.9: (4.88e-6, 1.21e-2, 3.21e-4, 2.79e-1, 6.76e-2, 1.71e-2, 6.82e-4, 5.78e-5),
    3.1: (2.13e-6, 1.4e-2, 1.65e-4, 3.29e-1, 8.91e-2, 2.75e-2, 4.17e-4, 5.41e-5),
    3.3: (9.00e-7, 1.55e-2, 8.13e-5, 3.80e-1, 1.13e-1, 4.23e-2, 2.40e-4, 4.61e-5),
    3.5: (3.68e-7, 1.67e-2, 3.83e-5, 4.32e-1, 1.4e-1, 6.30e-2, 1.30e-4, 3.58e-5),
    3.7: (1.45e-7, 1.76e-2, 1.73e-5, 4.85e-1, 1.7e-1, 9.12e-2, 6.68e-5, 2.53e-5),
    3.9: (5.56e-8, 1.83e-2, 7.53e-6, 5.38e-1, 2.01e-1, 1.29e-1, 3.25e-5, 1.63e-5),
    4.1: (2.05e-8, 1.89e-2, 3.15e-6, 5.91e-1, 2.33e-1, 1.80e-1, 1.50e-5, 9.57e-6),
    4.4: (4.33e-9, 1.94e-2, 7.93e-7, 6.70e-1, 2.83e-1, 2.86e-1, 4.30e-6, 3.60e-6),
    4.7: (8.43e-10, 1.98e-2, 1.83e-7, 7.50e-1, 3.35e-1, 4.37e-1, 1.11e-6, 1.09e-6),
    5.0: (1.52e-10, 2.00e-2, 3.89e-8, 8.30e-1, 3.87e-1, 6.21e-1, 2.56e-7, 2.71e-7),
    5.5: (7.33e-12, 2.02e-2, 2.42e-9, 9.63e-1, 4.75e-1, 7.00e-1, 1.79e-8, 1.89e-8),
    6.0: (2.83e-13, 2.03e-2, 1.19e-10, 1.10, 5.64e-1, 1.83e-1, 9.59e-10, 9.87e-10),
    6.5: (8.66e-15, 2.03e-2, 4.57e-12, 1.23, 6.53e-1, -2.14e-1, 3.96e-11, 4.02e-11),
    7.0: (2.22e-16, 2.03e-2, 1.38e-13, 1.36, 7.41e-1, -3.75e-1, 1.27e-12, 1.28e-12),
    7.5: (1.11e-16, 2.03e-2, 3.33e-15, 1.49, 8.3e-1, -4.40e-1, 3.19e-14, 3.19e-14),
    8.0: (0.0, 2.03e-2, 1.11e-16, 1.63, 9.18e-1, -4.68e-1, 6.66e-16, 6.66e-16),
    8.5: (0.0, 2.04e-2, 0.0, 1.76, 1.01, -4.82e-1, 0.0, 0.0),
}

RELATIVE_TOLERANCE = 0.02
# One unit in the last place at 1.0
ABSOLUTE_TOLERANCE = EPS

# The printed Kouba column does not follow from its printed formula, and the
# two smallest Eidous entries sit well above the exact-coefficient values.
EXCLUDED_CELLS = frozenset(
    [(x, BoundKind.KOUBA) for x in TABLE1_ABSCISSAE] + [(0.1, BoundKind.EIDOUS), (0.3, BoundKind.EIDOUS)]
)


class CellStatus(str, Enum):
    """Outcome of comparing one regenerated cell with the printed one."""

    MATCH = "match"
    MISMATCH = "mismatch"
    EXCLUDED = "excluded"


class TableComparison(BaseModel):
    """One regenerated cell next to its printed value."""

    x: float
    kind: BoundKind
    computed: float
    printed: float
    relative_deviation: float
    status: CellStatus
    sign_only: bool = False


def make_table1(xs: Sequence[float] = TABLE1_ABSCISSAE) -> List[ErrorRow]:
    """
    Regenerate the error table.

    Args:
        xs: Non-empty abscissae, each >= 0

    Returns:
        ErrorRow per (x, kind), x-major, kinds in TABLE1_KINDS order
    """
    points = grid_points(xs)
    if np.any(points < 0.0):
        raise DomainError("table abscissae must be >= 0")
    columns = {kind: scan_errors(kind, points) for kind in TABLE1_KINDS}
    return [columns[kind][i] for i in range(points.size) for kind in TABLE1_KINDS]


def _compare_cell(row: ErrorRow, printed: float) -> TableComparison:
    computed = row.error
    deviation = abs(computed - printed) / abs(printed) if printed != 0.0 else abs(computed)
    sign_only = row.out_of_validity
    if (row.x, row.kind) in EXCLUDED_CELLS:
        status = CellStatus.EXCLUDED
    elif sign_only:
        status = CellStatus.MATCH if np.sign(computed) == np.sign(printed) else CellStatus.MISMATCH
    else:
        within = abs(computed - printed) <= max(RELATIVE_TOLERANCE * abs(printed), ABSOLUTE_TOLERANCE)
        status = CellStatus.MATCH if within else CellStatus.MISMATCH
    return TableComparison(
        x=row.x,
        kind=row.kind,
        computed=computed,
        printed=printed,
        relative_deviation=deviation,
        status=status,
        sign_only=sign_only,
    )


def compare_table1() -> List[TableComparison]:
    """Every regenerated cell of the published table against its printed value."""
    comparisons = []
    for row in make_table1(TABLE1_ABSCISSAE):
        printed = PRINTED_TABLE1[row.x][TABLE1_KINDS.index(row.kind)]
        comparisons.append(_compare_cell(row, printed))

    mismatches = [c for c in comparisons if c.status is CellStatus.MISMATCH]
    for cell in mismatches:
        logger.warning("Table mismatch {} x={}: computed {:.3e}, printed {:.3e}", cell.kind.value, cell.x, cell.computed, cell.printed)
    logger.debug("{} table cells compared, {} mismatches", len(comparisons), len(mismatches))
    return comparisons
