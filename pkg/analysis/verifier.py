"""
Verifier - Checks the upper-bound inequality and the Polya crossover
"""

import math

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field
from scipy.optimize import brentq

from bounds import BoundKind, EIDOUS, default_registry
from bounds.registry import KindLike
from config import defaults
from errors import DomainError
from .curves import error_values
from .grid import Grid, GridSummary

PRINTED_CROSSOVER = 4.74915
_CHECK_POINTS = 4001


class VerificationReport(BaseModel):
    """Result of scanning h_U over a grid."""

    kind: BoundKind
    grid: GridSummary
    passed: bool = Field(description="worst_violation >= -slack")
    worst_violation: float = Field(description="Most negative h over the grid, 0 if none")
    worst_location: float = Field(description="Abscissa of the smallest h")
    slack: float


class CrossoverReport(BaseModel):
    """Where Phi_EI stops being tighter than Phi_PO."""

    exact: float = Field(description="sqrt(-c2/c4) from the exact coefficients")
    printed: float = PRINTED_CROSSOVER
    below_ok: bool = Field(description="Phi_EI <= Phi_PO + slack below exact")
    above_ok: bool = Field(description="Phi_EI >= Phi_PO - slack above exact")
    flip_location: float = Field(description="Sign change of Phi_EI - Phi_PO found by root bracketing")
    printed_consistent: bool = Field(description="Whether the printed value passes the same sign-flip check")


def verify_upper_bound(kind: KindLike, grid: Grid, slack: float = defaults.slack) -> VerificationReport:
    """
    Check Phi(x) <= Phi_U(x) + slack on every grid point.

    Args:
        kind: BoundKind or CLI name
        grid: Points to check; meaningful only inside the validity interval
        slack: Non-negative tolerance

    Returns:
        VerificationReport; passed iff min h >= -slack
    """
    resolved = default_registry.resolve(kind)
    if not slack >= 0.0:
        raise DomainError("slack must be >= 0")
    validity = resolved.validity_interval
    if grid.start < validity.lower or grid.stop > validity.upper:
        logger.warning("{}: grid [{}, {}] leaves the validity interval", resolved.value, grid.start, grid.stop)

    h = error_values(resolved, grid.points)
    worst = int(np.argmin(h))
    violation = min(float(h[worst]), 0.0)
    passed = violation >= -slack
    logger.debug("{}: min h {:.3e} at x={} over {} points", resolved.value, h[worst], grid.points[worst], grid.count)
    return VerificationReport(
        kind=resolved,
        grid=grid.summary(),
        passed=passed,
        worst_violation=violation,
        worst_location=float(grid.points[worst]),
        slack=slack,
    )


def _polya_gap(x: np.ndarray) -> np.ndarray:
    """Phi_EI(x) - Phi_PO(x)."""
    eidous = np.asarray(default_registry.get_bound(BoundKind.EIDOUS).evaluate(x), dtype=np.float64)
    polya = np.asarray(default_registry.get_bound(BoundKind.POLYA).evaluate(x), dtype=np.float64)
    return eidous - polya


def sign_flip_check(point: float, slack: float = defaults.slack) -> tuple[bool, bool]:
    """(gap <= slack on [0, point], gap >= -slack on [point, x_max])."""
    below = _polya_gap(np.linspace(0.0, point, _CHECK_POINTS))
    above = _polya_gap(np.linspace(point, defaults.x_max, _CHECK_POINTS))
    return bool(np.all(below <= slack)), bool(np.all(above >= -slack))


def _exact_crossover() -> float:
    pi = math.pi
    return math.sqrt((pi - 3.0) / (7.0 * pi / 30.0 + 40001.0 / (10000.0 * pi) - 2.0))


def lemma2_crossover() -> float:
    """
    Abscissa below which Phi_EI <= Phi_PO.

    Phi_EI <= Phi_PO exactly when p(x) <= 1, i.e. x^2 <= -c2/c4. The value
    is checked numerically for the sign flip before it is returned.
    """
    crossover = _exact_crossover()
    below_ok, above_ok = sign_flip_check(crossover)
    if not (below_ok and above_ok):
        logger.warning("Crossover {} failed the sign-flip check (below={}, above={})", crossover, below_ok, above_ok)
    return crossover


def crossover_report() -> CrossoverReport:
    """Exact crossover, the printed value and both sign-flip checks."""
    exact = lemma2_crossover()
    below_ok, above_ok = sign_flip_check(exact)
    printed_below, printed_above = sign_flip_check(PRINTED_CROSSOVER)
    flip = brentq(lambda x: float(_polya_gap(np.array([x]))[0]), 1.0, 6.0, xtol=1e-12)
    logger.debug("c2/c4 vertex at x^2={}, flip at {}", EIDOUS.vertex_square, flip)
    return CrossoverReport(
        exact=exact,
        below_ok=below_ok,
        above_ok=above_ok,
        flip_location=flip,
        printed_consistent=printed_below and printed_above,
    )
