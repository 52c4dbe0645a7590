"""oracle/__init__.py"""

from .scan import (
    CSV_COLUMNS,
    EmptyScan,
    Inapplicable,
    OracleError,
    OracleReport,
    ScanConfig,
    scan_convex,
    scan_ctc,
    scan_family,
    scan_starlike,
)
from .sharpness import check_sharpness, determinant_of, minimize_G_direct, reduced_determinant

__all__ = [
    "ScanConfig",
    "OracleReport",
    "OracleError",
    "EmptyScan",
    "Inapplicable",
    "CSV_COLUMNS",
    "scan_starlike",
    "scan_convex",
    "scan_ctc",
    "scan_family",
    "check_sharpness",
    "determinant_of",
    "minimize_G_direct",
    "reduced_determinant",
]
