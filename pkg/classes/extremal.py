"""classes/extremal.py — the extremal functions f1..f7 that make the bounds sharp."""

import logging

import numpy as np

from series import (
    TruncatedSeries,
    antiderivative,
    div,
    exp_series,
    integrate_shifted,
    mul,
    substitute_power,
    times_z,
)

from .families import FamilySpec, coeffs_close_to_convex
from .generators import ClassError

logger = logging.getLogger(__name__)


class IncompatibleExtremal(ClassError):
    pass


# id -> family kind it belongs to
EXTREMAL_KINDS: dict[str, str] = {
    "f1": "starlike",
    "f2": "starlike",
    "f3": "convex",
    "f4": "convex",
    "f5": "ctc",
    "f6": "ctc",
    "f7": "ctc",
}

EXTREMAL_DESCRIPTIONS: dict[str, str] = {
    "f1": "z exp ∫ (φ(t) - 1)/t dt",
    "f2": "z exp ∫ (φ(t²) - 1)/t dt",
    "f3": "1 + z f''/f' = φ(z)",
    "f4": "1 + z f''/f' = φ(z²)",
    "f5": "z f'/g = (1 + z)/(1 - z)",
    "f6": "f' = (1 + z³)/((1 - z³)(1 - z)²)",
    "f7": "z f'/g̃ = (1 + i z)/(1 - i z), g̃ = Σ i^(n-1) b_n z^n",
    "identity": "f(z) = z",
}


def _log_derivative_exp(psi: TruncatedSeries) -> TruncatedSeries:
    """exp ∫_0^z (ψ(t) - 1)/t dt."""
    return exp_series(integrate_shifted(psi))


def _starlike_from(psi: TruncatedSeries, order: int) -> TruncatedSeries:
    return times_z(_log_derivative_exp(psi)).truncate(order)


def _convex_from(psi: TruncatedSeries, order: int) -> TruncatedSeries:
    return antiderivative(_log_derivative_exp(psi)).truncate(order)


def _mobius(a: complex, order: int) -> TruncatedSeries:
    """(1 + a z)/(1 - a z)."""
    num = TruncatedSeries.from_coeffs([1.0, a], order)
    den = TruncatedSeries.from_coeffs([1.0, -a], order)
    return div(num, den)


def _twist(g: TruncatedSeries) -> TruncatedSeries:
    n = np.arange(g.order + 1)
    return TruncatedSeries(g.coeffs * (1j ** (n - 1)))


def _f6(order: int) -> TruncatedSeries:
    m = order - 1
    num = TruncatedSeries.from_coeffs([1.0, 0.0, 0.0, 1.0], m)
    den = mul(
        TruncatedSeries.from_coeffs([1.0, 0.0, 0.0, -1.0], m),
        TruncatedSeries.from_coeffs([1.0, -2.0, 1.0], m),
    )
    return antiderivative(div(num, den))


def _family_order(family: FamilySpec) -> int:
    if family.kind == "ctc":
        return family.base.order
    return family.generator.series.order


def extremal(eid: str, family: FamilySpec, order: int | None = None) -> TruncatedSeries:
    """Build extremal function `eid` for `family`, truncated at `order`."""
    key = eid.strip().lower()
    n = order if order is not None else _family_order(family)

    if key == "identity":
        return TruncatedSeries.variable(n)

    kind = EXTREMAL_KINDS.get(key)
    if kind is None:
        raise IncompatibleExtremal(f"unknown extremal {eid!r}; known: {sorted(EXTREMAL_KINDS)} or identity")
    if kind != family.kind:
        raise IncompatibleExtremal(f"{key} belongs to the {kind} family, not {family.label}")

    if key in ("f1", "f2", "f3", "f4"):
        phi = family.generator.series.truncate(n)
        if key in ("f2", "f4"):
            phi = substitute_power(phi, 2)
        f = _starlike_from(phi, n) if key in ("f1", "f2") else _convex_from(phi, n)
    elif key == "f5":
        f = coeffs_close_to_convex(family.base.truncate(n), _mobius(1.0, n))
    elif key == "f6":
        f = _f6(n)
    else:
        f = coeffs_close_to_convex(_twist(family.base.truncate(n)), _mobius(1j, n))

    logger.debug("%s for %s: a2=%s a3=%s", key, family.label, f[2], f[3])
    return f
