"""bounds/sharp.py — sharp determinant bounds for S*(φ), C(φ) and K(g).

Starlike and convex T31 lower bounds reduce to minimising a quadratic
G(x), x = |p1|^2 in [0, 4], at ζ = -1. The critical point of G is μ
(starlike) or σ (convex); the case dispatch below picks G(0), G(4) or
the vertex value.
"""

import logging
import math

from classes import FamilySpec

from .spec import BadB1, BadCoefficient, Bound, BoundReport, BoundSet

logger = logging.getLogger(__name__)

_PRE_TOL = 1e-12
_MU_AT_4_TOL = 1e-12
_DEGENERATE_DEN = 1e-14


def _check_b1(B1: float) -> None:
    if not math.isfinite(B1) or not 0.0 < B1 <= 2.0 + _PRE_TOL:
        raise BadB1(f"B1 must lie in (0, 2], got {B1}")


def _check_b2(B2: float) -> None:
    if not math.isfinite(B2):
        raise BadCoefficient(f"B2 must be finite, got {B2}")


def _check_abs(name: str, value: float) -> None:
    if not math.isfinite(value) or value < 0.0:
        raise BadCoefficient(f"{name} must be a finite non-negative real, got {value}")


# ── the reduced quadratics ────────────────────────────────────────────────────


def starlike_quadratic(B1: float, B2: float) -> tuple[float, float, float]:
    """(c0, c1, c2) with G(x) = c0 + c1 x + c2 x^2 for S*(φ)."""
    D = (3 * B1**2 - B2) * (B1**2 + B2) + B1 * (2 * B1**2 - 2 * B2 - B1)
    return 1.0 - B1**2 / 4.0, -B1 * (B1**2 + 3 * B1 - B2) / 8.0, D / 64.0


def convex_quadratic(B1: float, B2: float) -> tuple[float, float, float]:
    """(c0, c1, c2) with G(x) = c0 + c1 x + c2 x^2 for C(φ)."""
    E = 2 * B1**4 + B1**3 - B1**2 - 2 * B1 * B2 + B1**2 * B2 - B2**2
    return 1.0 - B1**2 / 36.0, -B1 * (B1**2 + 16 * B1 - 2 * B2) / 144.0, E / 576.0


def starlike_mu(B1: float, B2: float) -> tuple[float, float]:
    """(μ, denominator); μ is inf when the denominator vanishes."""
    D = (3 * B1**2 - B2) * (B1**2 + B2) + B1 * (2 * B1**2 - 2 * B2 - B1)
    if abs(D) < _DEGENERATE_DEN:
        return math.inf, D
    return 4 * B1 * (B1**2 + 3 * B1 - B2) / D, D


def convex_sigma(B1: float, B2: float) -> tuple[float, float]:
    E = 2 * B1**4 + B1**3 - B1**2 - 2 * B1 * B2 + B1**2 * B2 - B2**2
    if abs(E) < _DEGENERATE_DEN:
        return math.inf, E
    return 2 * B1 * (B1**2 + 16 * B1 - 2 * B2) / E, E


def starlike_G0(B1: float) -> float:
    return 1.0 - B1**2 / 4.0


def starlike_G4(B1: float, B2: float) -> float:
    return 1.0 - 2 * B1**2 + 3 * B1**4 / 4.0 + B1**2 * B2 / 2.0 - B2**2 / 4.0


def starlike_Gmu(B1: float, B2: float, D: float) -> float:
    return 1.0 - B1**2 / 4.0 - B1**2 * (B1**2 + 3 * B1 - B2) ** 2 / (4.0 * D)


def convex_G0(B1: float) -> float:
    return 1.0 - B1**2 / 36.0


def convex_G4(B1: float, B2: float) -> float:
    return 1.0 - B1**2 / 2.0 + B1**4 / 18.0 + B1**2 * B2 / 36.0 - B2**2 / 36.0


def convex_Gsigma(B1: float, B2: float, E: float) -> float:
    return 1.0 - B1**2 / 36.0 - B1**2 * (B1**2 + 16 * B1 - 2 * B2) ** 2 / (144.0 * E)


def starlike_discriminant(B1: float, B2: float) -> float:
    return 3 * B1**4 - 8 * B1**2 + 2 * B1**2 * B2 - B2**2


def starlike_upper_value(B1: float, B2: float) -> float:
    s = B1**2 + B2
    return B1**2 * s - s**2 / 4.0 - 2 * B1**2 + 1.0


def _sum_condition(B1: float, B2: float) -> tuple[str, bool]:
    return "B1 <= |B2 + B1^2|", B1 <= abs(B2 + B1**2) + _PRE_TOL


def _lower_dispatch(
    *,
    prefix: str,
    crit: float,
    den: float,
    g0: float,
    g4: float,
    g_vertex,
    extremal_g4: str,
    extremal_g0: str,
    label: str,
    degenerate_case: str,
) -> tuple[float, dict]:
    details: dict = {"mu_or_sigma": crit}
    if abs(den) < _DEGENERATE_DEN:
        # G is linear: the minimum sits at an endpoint
        details["notes"] = f"vanishing {label} denominator, G taken as linear"
        if g4 <= g0:
            details.update(case=degenerate_case, sharp=True, extremal=extremal_g4)
            return g4, details
        details.update(case=degenerate_case, sharp=True, extremal=extremal_g0)
        return g0, details
    if abs(crit - 4.0) <= _MU_AT_4_TOL:
        details.update(case=f"{prefix}-at-4", sharp=True, extremal=extremal_g4)
        return g4, details
    if 0.0 < crit < 4.0:
        details.update(case=f"{prefix}-interior", sharp=False, extremal=None)
        details["notes"] = f"{label} inside (0, 4): vertex value, sharpness not asserted"
        return g_vertex(den), details
    if g4 <= g0:
        details.update(case=f"{prefix}-outside", sharp=True, extremal=extremal_g4)
        return g4, details
    details.update(case=f"{prefix}-outside", sharp=True, extremal=extremal_g0)
    return g0, details


# ── S*(φ) ─────────────────────────────────────────────────────────────────────


class StarlikeT21Lower(Bound):
    quantity = "T21"
    side = "lower"

    @classmethod
    def compute(cls, B1: float) -> tuple[float, dict]:
        return 1.0 - B1**2, {"case": "starlike-t21", "sharp": True, "extremal": "f1"}


class StarlikeT21Upper(Bound):
    quantity = "T21"
    side = "upper"

    @classmethod
    def compute(cls, B1: float) -> tuple[float, dict]:
        return 1.0, {"case": "starlike-t21", "sharp": True, "extremal": "f2"}


class StarlikeT31Upper(Bound):
    quantity = "T31"
    side = "upper"

    @classmethod
    def preconditions(cls, B1: float, B2: float) -> list[tuple[str, bool]]:
        return [_sum_condition(B1, B2)]

    @classmethod
    def compute(cls, B1: float, B2: float) -> tuple[float, dict]:
        disc = starlike_discriminant(B1, B2)
        if disc < 0:
            return 1.0, {"case": "starlike-t31-unit", "sharp": True, "extremal": "identity"}
        return starlike_upper_value(B1, B2), {"case": "starlike-t31-extremal", "sharp": True, "extremal": "f1"}


class StarlikeT31Lower(Bound):
    quantity = "T31"
    side = "lower"

    @classmethod
    def preconditions(cls, B1: float, B2: float) -> list[tuple[str, bool]]:
        return [("B1^2 >= B2", B1**2 >= B2 - _PRE_TOL)]

    @classmethod
    def compute(cls, B1: float, B2: float) -> tuple[float, dict]:
        mu, D = starlike_mu(B1, B2)
        return _lower_dispatch(
            prefix="starlike-lower-mu",
            crit=mu,
            den=D,
            g0=starlike_G0(B1),
            g4=starlike_G4(B1, B2),
            g_vertex=lambda d: starlike_Gmu(B1, B2, d),
            extremal_g4="f1",
            extremal_g0="f2",
            label="μ",
            degenerate_case="starlike-lower-degenerate",
        )


def t21_starlike(B1: float) -> tuple[BoundReport, BoundReport]:
    _check_b1(B1)
    return StarlikeT21Lower.report(B1=B1), StarlikeT21Upper.report(B1=B1)


def t31_upper_starlike(B1: float, B2: float) -> BoundReport:
    _check_b1(B1)
    _check_b2(B2)
    return StarlikeT31Upper.report(B1=B1, B2=B2)


def t31_lower_starlike(B1: float, B2: float) -> BoundReport:
    _check_b1(B1)
    _check_b2(B2)
    return StarlikeT31Lower.report(B1=B1, B2=B2)


# ── C(φ) ──────────────────────────────────────────────────────────────────────


class ConvexT21Lower(Bound):
    quantity = "T21"
    side = "lower"

    @classmethod
    def compute(cls, B1: float) -> tuple[float, dict]:
        return 1.0 - B1**2 / 4.0, {"case": "convex-t21", "sharp": True, "extremal": "f3"}


class ConvexT21Upper(Bound):
    quantity = "T21"
    side = "upper"

    @classmethod
    def compute(cls, B1: float) -> tuple[float, dict]:
        return 1.0, {"case": "convex-t21", "sharp": True, "extremal": "f4"}


class ConvexT31Upper(Bound):
    quantity = "T31"
    side = "upper"

    @classmethod
    def preconditions(cls, B1: float, B2: float) -> list[tuple[str, bool]]:
        return [_sum_condition(B1, B2)]

    @classmethod
    def compute(cls, B1: float, B2: float) -> tuple[float, dict]:
        return 1.0, {"case": "convex-t31-unit", "sharp": True, "extremal": "identity"}


class ConvexT31Lower(Bound):
    quantity = "T31"
    side = "lower"

    @classmethod
    def preconditions(cls, B1: float, B2: float) -> list[tuple[str, bool]]:
        return [("B1^2 >= 2 B2", B1**2 >= 2 * B2 - _PRE_TOL)]

    @classmethod
    def compute(cls, B1: float, B2: float) -> tuple[float, dict]:
        sigma, E = convex_sigma(B1, B2)
        return _lower_dispatch(
            prefix="convex-lower-sigma",
            crit=sigma,
            den=E,
            g0=convex_G0(B1),
            g4=convex_G4(B1, B2),
            g_vertex=lambda e: convex_Gsigma(B1, B2, e),
            extremal_g4="f3",
            extremal_g0="f4",
            label="σ",
            degenerate_case="convex-lower-degenerate",
        )


def t21_convex(B1: float) -> tuple[BoundReport, BoundReport]:
    _check_b1(B1)
    return ConvexT21Lower.report(B1=B1), ConvexT21Upper.report(B1=B1)


def t31_upper_convex(B1: float, B2: float) -> BoundReport:
    _check_b1(B1)
    _check_b2(B2)
    return ConvexT31Upper.report(B1=B1, B2=B2)


def t31_lower_convex(B1: float, B2: float) -> BoundReport:
    _check_b1(B1)
    _check_b2(B2)
    return ConvexT31Lower.report(B1=B1, B2=B2)


# ── K(g) ──────────────────────────────────────────────────────────────────────


def ctc_hypo(b: float, c: float) -> float:
    return 6 * b**3 - 4 * b * (c - 1) - 4 * (c - 1) ** 2 + b**2 * (3 * c + 5)


def ctc_t31_value(b: float, c: float) -> float:
    return (6 * b**3 + b**2 * (3 * c + 13) + 4 * b * (c - 1) - 2 * (1 - c) ** 2) / 18.0


def ctc_condi(b: float, c: float) -> float:
    return 18.0 * ctc_t31_value(b, c) - 18.0


class CtcT21Lower(Bound):
    quantity = "T21"
    side = "lower"

    @classmethod
    def compute(cls, b: float, c: float) -> tuple[float, dict]:
        return 1.0 - (1.0 + b / 2.0) ** 2, {"case": "ctc-t21", "sharp": True, "extremal": "f5"}


class CtcT21Upper(Bound):
    quantity = "T21"
    side = "upper"

    @classmethod
    def compute(cls, b: float, c: float) -> tuple[float, dict]:
        # f6 = z + z^2 + z^3 + ... has a2 = 1, so det T21(f6) = 0
        return 1.0, {
            "case": "ctc-t21",
            "sharp": False,
            "extremal": None,
            "notes": "f6 gives det T21 = 0, not 1; equality needs a2 = 0",
        }


class CtcT31Upper(Bound):
    quantity = "T31"
    side = "upper"

    @classmethod
    def preconditions(cls, b: float, c: float) -> list[tuple[str, bool]]:
        return [("6b^3 - 4b(c-1) - 4(c-1)^2 + b^2(3c+5) >= 0", ctc_hypo(b, c) >= -_PRE_TOL)]

    @classmethod
    def compute(cls, b: float, c: float) -> tuple[float, dict]:
        notes = "the maximisation over the coefficient body bounds det T31 from above"
        if ctc_condi(b, c) <= 0:
            return 1.0, {"case": "ctc-t31-unit", "sharp": False, "extremal": None, "notes": notes}
        return ctc_t31_value(b, c), {"case": "ctc-t31-excess", "sharp": True, "extremal": "f5", "notes": notes}


class CtcT22Upper(Bound):
    quantity = "ABS_T22"
    side = "upper"

    @classmethod
    def compute(cls, b: float, c: float) -> tuple[float, dict]:
        value = (2.0 + b) ** 2 / 4.0 + (c + 2 * b + 2.0) ** 2 / 9.0
        return value, {"case": "ctc-t22", "sharp": True, "extremal": "f7"}


def t_bounds_ctc(b2_abs: float, b3_abs: float) -> list[BoundReport]:
    """[T21 lower, T21 upper, T31 upper, ABS_T22 upper] for K(g)."""
    _check_abs("|b2|", b2_abs)
    _check_abs("|b3|", b3_abs)
    return [
        CtcT21Lower.report(b=b2_abs, c=b3_abs),
        CtcT21Upper.report(b=b2_abs, c=b3_abs),
        CtcT31Upper.report(b=b2_abs, c=b3_abs),
        CtcT22Upper.report(b=b2_abs, c=b3_abs),
    ]


# ── family dispatch ───────────────────────────────────────────────────────────


def bounds_for_family(family: FamilySpec) -> BoundSet:
    if family.kind == "starlike":
        B1, B2 = family.generator.B1, family.generator.B2
        reports = (*t21_starlike(B1), t31_upper_starlike(B1, B2), t31_lower_starlike(B1, B2))
    elif family.kind == "convex":
        B1, B2 = family.generator.B1, family.generator.B2
        reports = (*t21_convex(B1), t31_upper_convex(B1, B2), t31_lower_convex(B1, B2))
    else:
        reports = tuple(t_bounds_ctc(abs(family.b2), abs(family.b3)))
    return BoundSet(family=family.label, reports=reports)


def primary_t31(bounds: BoundSet, kind: str) -> BoundReport:
    """The T31 bound a scan is judged on: lower for S*/C, upper for K(g)."""
    side = "upper" if kind == "ctc" else "lower"
    return bounds.get("T31", side)
