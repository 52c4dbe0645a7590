"""toeplitz/__init__.py"""

from .determinants import (
    InsufficientCoefficients,
    ToeplitzSpec,
    abs_det_T22,
    det_general,
    det_T21,
    det_T22,
    det_T31,
)

__all__ = [
    "ToeplitzSpec",
    "InsufficientCoefficients",
    "det_T21",
    "det_T31",
    "det_T22",
    "abs_det_T22",
    "det_general",
]
