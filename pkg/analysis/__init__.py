"""
Analysis Module - Tightness of the bounds against the reference oracle

This module provides:
- Signed error curves and grid scans
- Maximum-error search, h' and its root
- Upper-bound verification and the Polya crossover
- Table regeneration and the claim checklist
"""

from .claims import ClaimResult, check_claims
from .curves import ErrorRow, error_at, error_values, scan_errors
from .extremum import (
    ExtremumReport,
    RatioReport,
    error_ratio_ei_vs_star,
    error_ratio_report,
    h_prime,
    h_prime_root,
    max_abs_error,
    turning_points,
)
from .grid import Grid, GridSpacing, GridSummary
from .series import GraphKind, graph_series
from .table import (
    PRINTED_TABLE1,
    TABLE1_ABSCISSAE,
    TABLE1_KINDS,
    CellStatus,
    TableComparison,
    compare_table1,
    make_table1,
)
from .verifier import (
    PRINTED_CROSSOVER,
    CrossoverReport,
    VerificationReport,
    crossover_report,
    lemma2_crossover,
    verify_upper_bound,
)

__all__ = [
    "CellStatus",
    "ClaimResult",
    "CrossoverReport",
    "ErrorRow",
    "ExtremumReport",
    "GraphKind",
    "Grid",
    "GridSpacing",
    "GridSummary",
    "PRINTED_CROSSOVER",
    "PRINTED_TABLE1",
    "RatioReport",
    "TABLE1_ABSCISSAE",
    "TABLE1_KINDS",
    "TableComparison",
    "VerificationReport",
    "check_claims",
    "compare_table1",
    "crossover_report",
    "error_at",
    "error_ratio_ei_vs_star",
    "error_ratio_report",
    "error_values",
    "graph_series",
    "h_prime",
    "h_prime_root",
    "lemma2_crossover",
    "make_table1",
    "max_abs_error",
    "scan_errors",
    "turning_points",
    "verify_upper_bound",
]
