"""classes/families.py — S*(φ), C(φ) and K(g): sample points and coefficient maps.

A function in each family is parameterised by a Carathéodory function
p(z) = 1 + p1 z + p2 z^2 + ... with positive real part. Only (p1, p2)
reach a2 and a3, and p2 is pinned down by

    2 p2 = p1^2 + (4 - |p1|^2) ζ,   |ζ| <= 1.

Everything below works on (p1, p2) so scalar and vectorised callers share
one set of formulas.
"""

import cmath
import logging
from dataclasses import dataclass
from typing import Literal

import numpy as np

from series import (
    TruncatedSeries,
    antiderivative,
    compose,
    derivative,
    div,
    divide_by_z,
    mul,
)

from .generators import BadParams, InvalidGenerator, MindaGenerator

logger = logging.getLogger(__name__)

FamilyKind = Literal["starlike", "convex", "ctc"]

_RANGE_TOL = 1e-12


@dataclass(kw_only=True, frozen=True)
class FamilySpec:
    """One of S*(φ), C(φ) or K(g)."""

    kind: FamilyKind
    generator: MindaGenerator | None = None
    base: TruncatedSeries | None = None
    base_name: str = ""

    def __post_init__(self):
        if self.kind in ("starlike", "convex"):
            if self.generator is None:
                raise InvalidGenerator(f"{self.kind} family needs a generator φ")
        elif self.kind == "ctc":
            if self.base is None:
                raise InvalidGenerator("close-to-convex family needs a base curve g")
        else:
            raise BadParams(f"unknown family kind {self.kind!r}")

    @classmethod
    def starlike(cls, generator: MindaGenerator) -> "FamilySpec":
        return cls(kind="starlike", generator=generator)

    @classmethod
    def convex(cls, generator: MindaGenerator) -> "FamilySpec":
        return cls(kind="convex", generator=generator)

    @classmethod
    def close_to_convex(cls, base: TruncatedSeries, name: str = "g") -> "FamilySpec":
        return cls(kind="ctc", base=base, base_name=name)

    @property
    def label(self) -> str:
        if self.kind == "starlike":
            return f"S*({self.generator.label})"
        if self.kind == "convex":
            return f"C({self.generator.label})"
        return f"K({self.base_name})"

    @property
    def b2(self) -> complex:
        return self.base[2]

    @property
    def b3(self) -> complex:
        return self.base[3]


@dataclass(frozen=True)
class SamplePoint:
    """A point of the body: p1 in [0, 2], |ζ| <= 1, optional rotation of p1."""

    p1: float
    zeta: complex
    p1_phase: float = 0.0

    def __post_init__(self):
        if not -_RANGE_TOL <= self.p1 <= 2.0 + _RANGE_TOL:
            raise BadParams(f"p1 = {self.p1} outside [0, 2]")
        if abs(self.zeta) > 1.0 + _RANGE_TOL:
            raise BadParams(f"|ζ| = {abs(self.zeta)} > 1")

    @property
    def p1_complex(self) -> complex:
        return self.p1 * cmath.exp(1j * self.p1_phase)

    @property
    def p2(self) -> complex:
        return caratheodory_p2(self.p1_complex, self.zeta)


def caratheodory_p2(p1, zeta):
    """p2 from (p1, ζ); accepts scalars or numpy arrays."""
    return (p1 * p1 + (4.0 - np.abs(p1) ** 2) * zeta) / 2.0


# ── (a2, a3) on the body ──────────────────────────────────────────────────────


def _starlike(B1: float, B2: float, p1, p2):
    a2 = B1 * p1 / 2.0
    a3 = ((B1 * B1 - B1 + B2) * p1 * p1 + 2.0 * B1 * p2) / 8.0
    return a2, a3


def _convex(B1: float, B2: float, p1, p2):
    a2 = B1 * p1 / 4.0
    a3 = ((B1 * B1 - B1 + B2) * p1 * p1 + 2.0 * B1 * p2) / 24.0
    return a2, a3


def a2a3_starlike(B1: float, B2: float, s: SamplePoint) -> tuple[complex, complex]:
    return _starlike(B1, B2, s.p1_complex, s.p2)


def a2a3_convex(B1: float, B2: float, s: SamplePoint) -> tuple[complex, complex]:
    return _convex(B1, B2, s.p1_complex, s.p2)


def a2a3_ctc(b2: complex, b3: complex, p1, p2):
    """(a2, a3) for K(g) from the Carathéodory pair; accepts numpy arrays."""
    a2 = (b2 + p1) / 2.0
    a3 = (b3 + b2 * p1 + p2) / 3.0
    return a2, a3


def body_a2a3(kind: FamilyKind, params: tuple[complex, complex], p1, p2):
    """(a2, a3) over arrays of (p1, p2); params is (B1, B2) or (b2, b3)."""
    if kind == "starlike":
        return _starlike(params[0].real, params[1].real, p1, p2)
    if kind == "convex":
        return _convex(params[0].real, params[1].real, p1, p2)
    return a2a3_ctc(params[0], params[1], p1, p2)


# ── full series ───────────────────────────────────────────────────────────────


def caratheodory_series(s: SamplePoint, order: int = 2) -> TruncatedSeries:
    """p(z) = 1 + p1 z + p2 z^2 (higher coefficients zero)."""
    return TruncatedSeries.from_coeffs([1.0, s.p1_complex, s.p2], order)


def schwarz_from_sample(s: SamplePoint, order: int = 2) -> TruncatedSeries:
    """ω = (p - 1)/(p + 1) for the sample's Carathéodory function."""
    p = caratheodory_series(s, order)
    return div(p - 1.0, p + 1.0)


def coeffs_starlike(phi: MindaGenerator, omega: TruncatedSeries) -> TruncatedSeries:
    """f with z f'/f = φ(ω) = 1 + Σ c_k z^k; f carries one degree more than φ∘ω.

    (n - 1) a_n = Σ_{k=1}^{n-1} c_k a_{n-k},  a_1 = 1.
    """
    c = compose(phi.series, omega).coeffs
    n = c.size - 1
    a = np.zeros(n + 2, dtype=np.complex128)
    a[1] = 1.0
    for m in range(2, n + 2):
        a[m] = np.dot(c[1:m], a[m - 1 : 0 : -1]) / (m - 1)
    return TruncatedSeries(a)


def coeffs_convex(phi: MindaGenerator, omega: TruncatedSeries) -> TruncatedSeries:
    """f with 1 + z f''/f' = φ(ω) = 1 + Σ c_k z^k.

    f' = Σ q_m z^m with q_0 = 1 and m q_m = Σ_{k=1}^{m} c_k q_{m-k}.
    """
    c = compose(phi.series, omega).coeffs
    n = c.size - 1
    q = np.zeros(n + 1, dtype=np.complex128)
    q[0] = 1.0
    for m in range(1, n + 1):
        q[m] = np.dot(c[1 : m + 1], q[m - 1 :: -1]) / m
    return antiderivative(TruncatedSeries(q))


def coeffs_close_to_convex(g: TruncatedSeries, p: TruncatedSeries) -> TruncatedSeries:
    """f with z f'/g = p."""
    n = min(g.order, p.order)
    gp = divide_by_z(g.truncate(n))
    return antiderivative(mul(gp, p.truncate(n - 1)))


def rotate(f: TruncatedSeries, theta: float) -> TruncatedSeries:
    """e^{-iθ} f(e^{iθ} z): a_n -> e^{i(n-1)θ} a_n."""
    n = np.arange(f.order + 1)
    return TruncatedSeries(f.coeffs * np.exp(1j * (n - 1) * theta))


def check_starlike_identity(f: TruncatedSeries, phi: MindaGenerator, omega: TruncatedSeries, atol: float = 1e-9) -> bool:
    """z f'/f == φ∘ω up to the common order."""
    # z f'/f = f' / (f/z)
    lhs = div(derivative(f), divide_by_z(f))
    rhs = compose(phi.series, omega)
    ok = lhs.allclose(rhs, atol=atol)
    if not ok:
        logger.debug("starlike identity mismatch: lhs=%r rhs=%r", lhs, rhs)
    return ok
