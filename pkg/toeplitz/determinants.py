"""toeplitz/determinants.py — T_{m,n}(f) and its determinant.

    T_{m,n}(f) = [ a_n        a_{n+1}    ...  a_{n+m-1} ]
                 [ ā_{n+1}    a_n        ...  a_{n+m-2} ]
                 [ ...                                  ]
                 [ ā_{n+m-1}  ...             a_n       ]

For n = 1 (a_1 = 1) the matrix is Hermitian and the determinant is real.
Closed forms below are exact for m <= 3 and are what the bounds compare against.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from scipy.linalg import lu_factor, toeplitz

from series import TruncatedSeries

logger = logging.getLogger(__name__)


class InsufficientCoefficients(ValueError):
    pass


@dataclass(kw_only=True, frozen=True)
class ToeplitzSpec:
    """Size m, start index n, and coeffs[k] = a_{k+1} (so coeffs[0] = a_1)."""

    m: int
    n: int
    coeffs: tuple[complex, ...]

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"need m >= 1 and n >= 1, got m={self.m}, n={self.n}")
        needed = self.n + self.m - 1
        if len(self.coeffs) < needed:
            raise InsufficientCoefficients(
                f"T_{{{self.m},{self.n}}} needs a_1..a_{needed}, got {len(self.coeffs)} coefficient(s)"
            )

    @classmethod
    def from_series(cls, f: TruncatedSeries, m: int, n: int = 1) -> "ToeplitzSpec":
        """Use a_1.. from a normalised f(z) = z + a_2 z^2 + ..."""
        return cls(m=m, n=n, coeffs=tuple(complex(c) for c in f.coeffs[1:]))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[complex], m: int, n: int = 1) -> "ToeplitzSpec":
        return cls(m=m, n=n, coeffs=tuple(complex(c) for c in coeffs))

    def a(self, k: int) -> complex:
        return self.coeffs[k - 1]

    def matrix(self) -> np.ndarray:
        row = np.array([self.a(self.n + k) for k in range(self.m)], dtype=np.complex128)
        col = np.conj(row)
        col[0] = row[0]
        return toeplitz(col, row)


def det_T21(a2: complex) -> float:
    return 1.0 - abs(a2) ** 2


def det_T31(a2: complex, a3: complex) -> float:
    return 2.0 * (a2 * a2 * np.conj(a3)).real - 2.0 * abs(a2) ** 2 - abs(a3) ** 2 + 1.0


def det_T22(a2: complex, a3: complex) -> complex:
    return complex(a2 * a2 - abs(a3) ** 2)


def abs_det_T22(a2: complex, a3: complex) -> float:
    # array-friendly, the oracle calls it on whole chunks
    return np.abs(a2 * a2 - np.abs(a3) ** 2)


def det_general(spec: ToeplitzSpec) -> complex:
    """Determinant by LU with partial pivoting."""
    mat = spec.matrix()
    lu, piv = lu_factor(mat, check_finite=True)
    swaps = int(np.count_nonzero(piv != np.arange(spec.m)))
    det = complex(np.prod(np.diag(lu)))
    if swaps % 2:
        det = -det
    if spec.n == 1 and abs(det.imag) > 1e-10:
        logger.warning("T_{%d,1} determinant has imaginary part %.3g", spec.m, det.imag)
    return det
