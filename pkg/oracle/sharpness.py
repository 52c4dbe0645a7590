"""oracle/sharpness.py — extremal gaps and independent checks of the T31 dispatch."""

import logging
from collections.abc import Iterable
from typing import Literal

import numpy as np
from numpy.polynomial import Polynomial

from bounds import BoundReport, convex_quadratic, starlike_quadratic
from classes import FamilySpec, extremal
from toeplitz import abs_det_T22, det_T21, det_T31

logger = logging.getLogger(__name__)


def determinant_of(quantity: str, a2: complex, a3: complex) -> float:
    if quantity == "T21":
        return float(det_T21(a2))
    if quantity == "T31":
        return float(det_T31(a2, a3))
    return float(abs_det_T22(a2, a3))


def check_sharpness(family: FamilySpec, reports: Iterable[BoundReport]) -> dict[str, float]:
    """|det(extremal) - bound| keyed `extremal:quantity:side`."""
    gaps: dict[str, float] = {}
    cache = {}
    for report in reports:
        eid = report.extremal_id
        if eid is None:
            continue
        if eid not in cache:
            cache[eid] = extremal(eid, family)
        f = cache[eid]
        value = determinant_of(report.quantity, f[2], f[3])
        gap = abs(value - report.value)
        gaps[f"{eid}:{report.name}"] = gap
        if report.sharp and gap > 1e-9:
            logger.warning("%s: %s misses %s by %.3g", family.label, eid, report.name, gap)
    return gaps


def minimize_G_direct(
    B1: float,
    B2: float,
    family: Literal["starlike", "convex"] = "starlike",
) -> tuple[float, float]:
    """Minimise the reduced quadratic over x in [0, 4] without the case dispatch."""
    coeffs = starlike_quadratic(B1, B2) if family == "starlike" else convex_quadratic(B1, B2)
    G = Polynomial(coeffs)
    candidates = [0.0, 4.0]
    for root in G.deriv().trim().roots():
        if abs(root.imag) < 1e-12 and 0.0 < root.real < 4.0:
            candidates.append(float(root.real))
    values = [float(G(x)) for x in candidates]
    best = int(np.argmin(values))
    return candidates[best], values[best]


def reduced_determinant(B1: float, B2: float, x, zeta):
    """det T31 on the starlike body for real p1 = √x, as a function of (x, |ζ|, Re ζ)."""
    zeta = np.asarray(zeta)
    s = B1**2 + B2
    a2_sq = B1**2 * x / 4.0
    re_a3 = (s * x + B1 * (4.0 - x) * zeta.real) / 8.0
    abs_a3_sq = (s**2 * x**2 + 2.0 * s * x * B1 * (4.0 - x) * zeta.real + B1**2 * (4.0 - x) ** 2 * np.abs(zeta) ** 2) / 64.0
    return 1.0 - 2.0 * a2_sq + 2.0 * a2_sq * re_a3 - abs_a3_sq
