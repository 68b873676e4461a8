"""
Claims - Every headline numeric statement about Phi_EI, re-derived in one pass
"""

from typing import Callable, List

from loguru import logger
from pydantic import BaseModel, Field

from bounds import BoundKind
from config import defaults
from .extremum import error_ratio_report, h_prime_root, max_abs_error
from .grid import Grid
from .table import CellStatus, compare_table1
from .verifier import PRINTED_CROSSOVER, crossover_report, verify_upper_bound

PUBLISHED_ARGMAX = 2.86991
PUBLISHED_CROSSOVER_EXACT = 4.7372


class ClaimResult(BaseModel):
    """One checked claim."""

    name: str
    expected: str = Field(description="Human-readable acceptance condition")
    observed: float
    passed: bool


def _claim(name: str, expected: str, observed: float, predicate: Callable[[float], bool]) -> ClaimResult:
    passed = bool(predicate(observed))
    logger.info("{}: observed {:.6g} ({}) -> {}", name, observed, expected, "pass" if passed else "FAIL")
    return ClaimResult(name=name, expected=expected, observed=observed, passed=passed)


def check_claims() -> List[ClaimResult]:
    """
    Re-derive each claim and report pass/fail.

    Covers the maximum error and its location, the root of h', the
    approximation error and the ratio, the upper-bound property on
    [0, x_max], the crossover and the tail maxima, and agreement with the
    published table.
    """
    results: List[ClaimResult] = []

    ratio = error_ratio_report()
    peak = ratio.numerator
    results.append(_claim("max_error_value", "5.70e-5 <= max|h_EI| <= 5.90e-5", abs(peak.value), lambda v: 5.70e-5 <= v <= 5.90e-5))
    results.append(_claim("max_error_location", "|argmax - 2.86991| <= 1e-2", peak.location, lambda v: abs(v - PUBLISHED_ARGMAX) <= 1e-2))

    root = h_prime_root((2.0, 4.0))
    results.append(_claim("h_prime_root", "|root - 2.86991| <= 1e-4", root.location, lambda v: abs(v - PUBLISHED_ARGMAX) <= 1e-4))

    star = ratio.denominator
    results.append(_claim("approximation_error", "3.00e-5 <= max|h*_EI| <= 3.35e-5", abs(star.value), lambda v: 3.00e-5 <= v <= 3.35e-5))
    results.append(_claim("error_ratio", "1.75 <= ratio <= 1.90", ratio.ratio, lambda v: 1.75 <= v <= 1.90))

    grid = Grid.build(0.0, defaults.x_max, defaults.verify_points)
    bound = verify_upper_bound(BoundKind.EIDOUS, grid)
    results.append(_claim("upper_bound", "min h_EI >= -1e-15 on [0, 40]", bound.worst_violation, lambda v: v >= -defaults.slack))
    not_bound = verify_upper_bound(BoundKind.EIDOUS_STAR, grid, slack=0.0)
    results.append(_claim("approximation_crosses", "min h*_EI < 0 on [0, 40]", not_bound.worst_violation, lambda v: v < 0.0))

    crossover = crossover_report()
    results.append(_claim("crossover", "|crossover - 4.7372| <= 1e-3", crossover.exact, lambda v: abs(v - PUBLISHED_CROSSOVER_EXACT) <= 1e-3))
    results.append(
        _claim(
            "crossover_sign_flip",
            "flip within 1e-3 of the exact crossover, both sides consistent",
            crossover.flip_location,
            lambda v: abs(v - crossover.exact) <= 1e-3 and crossover.below_ok and crossover.above_ok,
        )
    )

    tail = (PRINTED_CROSSOVER, defaults.x_max)
    results.append(_claim("polya_tail", "max h_PO < 9.15e-7 beyond 4.74915", abs(max_abs_error(BoundKind.POLYA, tail).value), lambda v: v < 9.15e-7))
    results.append(_claim("eidous_tail", "max h_EI < 9.16e-7 beyond 4.74915", abs(max_abs_error(BoundKind.EIDOUS, tail).value), lambda v: v < 9.16e-7))
    far = (5.0, defaults.x_max)
    results.append(_claim("polya_far_tail", "max h_PO < 2.6e-7 for x >= 5", abs(max_abs_error(BoundKind.POLYA, far).value), lambda v: v < 2.6e-7))
    results.append(_claim("eidous_far_tail", "max h_EI < 2.8e-7 for x >= 5", abs(max_abs_error(BoundKind.EIDOUS, far).value), lambda v: v < 2.8e-7))

    cells = compare_table1()
    mismatches = sum(1 for c in cells if c.status is CellStatus.MISMATCH)
    results.append(_claim("table_agreement", "no mismatching table cell", float(mismatches), lambda v: v == 0))

    return results
