"""series/truncated.py — truncated complex power series.

A TruncatedSeries holds c_0..c_N of an analytic germ at the origin. Every
binary operation truncates to the smaller order of its operands, so results
never claim more precision than their inputs carry.

Serialized form (used by --phi-file / --g-file): a JSON array of [re, im]
pairs, index = degree.
"""

import json
import logging
import os
from collections.abc import Sequence
from pathlib import Path

import numpy as np

logger = logging.getLogger(__name__)

DEFAULT_ORDER = int(os.getenv("TOEPLITZ_SHARP_ORDER", "12"))

# |c_0| below this counts as "zero" for compose / divide_by_z
_ZERO_TOL = 1e-14
# |c_0 - 1| below this counts as "one" for log / sqrt / power
_UNIT_TOL = 1e-12


class SeriesError(ValueError):
    """Base class for power-series domain errors."""


class ZeroConstantTerm(SeriesError):
    pass


class NonzeroInnerConstant(SeriesError):
    pass


class BadConstantTerm(SeriesError):
    pass


class TruncatedSeries:
    """Immutable coefficient vector c_0..c_N (complex128)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[complex] | np.ndarray):
        arr = np.array(coeffs, dtype=np.complex128).reshape(-1)
        if arr.size == 0:
            raise ValueError("a truncated series needs at least the constant term")
        arr.setflags(write=False)
        self._coeffs = arr

    # ── constructors ─────────────────────────────────────────────────────────

    @classmethod
    def constant(cls, value: complex, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        coeffs = np.zeros(order + 1, dtype=np.complex128)
        coeffs[0] = value
        return cls(coeffs)

    @classmethod
    def monomial(cls, degree: int, order: int = DEFAULT_ORDER, coeff: complex = 1.0) -> "TruncatedSeries":
        coeffs = np.zeros(order + 1, dtype=np.complex128)
        if degree <= order:
            coeffs[degree] = coeff
        return cls(coeffs)

    @classmethod
    def variable(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        """The series z."""
        return cls.monomial(1, order)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[complex], order: int | None = None) -> "TruncatedSeries":
        """Build from leading coefficients, zero-padding (or truncating) to `order`."""
        arr = np.array(coeffs, dtype=np.complex128).reshape(-1)
        if order is None:
            return cls(arr)
        out = np.zeros(order + 1, dtype=np.complex128)
        n = min(order + 1, arr.size)
        out[:n] = arr[:n]
        return cls(out)

    # ── accessors ────────────────────────────────────────────────────────────

    @property
    def order(self) -> int:
        return self._coeffs.size - 1

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    def __getitem__(self, degree: int) -> complex:
        if degree < 0 or degree > self.order:
            raise IndexError(f"degree {degree} outside 0..{self.order}")
        return complex(self._coeffs[degree])

    def __len__(self) -> int:
        return self._coeffs.size

    def __repr__(self) -> str:
        shown = ", ".join(f"{c:.6g}" for c in self._coeffs[:6])
        tail = ", ..." if self.order >= 6 else ""
        return f"TruncatedSeries(order={self.order}, [{shown}{tail}])"

    def truncate(self, order: int) -> "TruncatedSeries":
        if order >= self.order:
            return self
        return TruncatedSeries(self._coeffs[: order + 1])

    def is_real(self, atol: float = _UNIT_TOL) -> bool:
        return bool(np.all(np.abs(self._coeffs.imag) <= atol))

    def allclose(self, other: "TruncatedSeries", atol: float = 1e-12) -> bool:
        n = min(self.order, other.order)
        return bool(np.all(np.abs(self._coeffs[: n + 1] - other.coeffs[: n + 1]) <= atol))

    # ── operator sugar ───────────────────────────────────────────────────────

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return TruncatedSeries(self._coeffs[: n + 1] + other.coeffs[: n + 1])
        coeffs = self._coeffs.copy()
        coeffs[0] += other
        return TruncatedSeries(coeffs)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self._coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return TruncatedSeries(self._coeffs * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return div(self, other)
        return TruncatedSeries(self._coeffs / other)

    # ── serialization ────────────────────────────────────────────────────────

    def to_pairs(self) -> list[list[float]]:
        return [[float(c.real), float(c.imag)] for c in self._coeffs]

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[float]]) -> "TruncatedSeries":
        coeffs = []
        for idx, pair in enumerate(pairs):
            if isinstance(pair, (int, float)):
                coeffs.append(complex(pair, 0.0))
                continue
            if len(pair) != 2:
                raise ValueError(f"coefficient {idx}: expected [re, im], got {pair!r}")
            coeffs.append(complex(float(pair[0]), float(pair[1])))
        return cls(coeffs)


def load_series(path: str | Path) -> TruncatedSeries:
    """Read a series stored as a JSON array of [re, im] pairs."""
    path = Path(path)
    data = json.loads(path.read_text(encoding="utf-8"))
    if not isinstance(data, list):
        raise ValueError(f"{path}: expected a JSON array of [re, im] pairs")
    series = TruncatedSeries.from_pairs(data)
    logger.info("loaded series of order %d from %s", series.order, path)
    return series


def dump_series(series: TruncatedSeries, path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(series.to_pairs()) + "\n", encoding="utf-8")


# ── arithmetic ────────────────────────────────────────────────────────────────


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at min(order(a), order(b))."""
    n = min(a.order, b.order)
    return TruncatedSeries(np.convolve(a.coeffs[: n + 1], b.coeffs[: n + 1])[: n + 1])


def div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """q with mul(q, b) == a up to truncation."""
    b0 = b.coeffs[0]
    if b0 == 0:
        raise ZeroConstantTerm("divisor has zero constant term")
    n = min(a.order, b.order)
    num = a.coeffs
    den = b.coeffs
    q = np.zeros(n + 1, dtype=np.complex128)
    for k in range(n + 1):
        acc = num[k] - np.dot(den[1 : k + 1], q[k - 1 :: -1][:k]) if k else num[0]
        q[k] = acc / b0
    return TruncatedSeries(q)


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(z)) by Horner's scheme; inner must vanish at the origin."""
    if abs(inner.coeffs[0]) > _ZERO_TOL:
        raise NonzeroInnerConstant(f"inner series has constant term {inner[0]!r}")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    result = TruncatedSeries.constant(outer.coeffs[n], n)
    for k in range(n - 1, -1, -1):
        result = mul(result, inner) + outer.coeffs[k]
    return result


def exp_series(a: TruncatedSeries) -> TruncatedSeries:
    n = a.order
    c = a.coeffs
    k = np.arange(n + 1)
    out = np.zeros(n + 1, dtype=np.complex128)
    out[0] = np.exp(c[0])
    for m in range(1, n + 1):
        # m b_m = sum_{k=1}^{m} k a_k b_{m-k}
        out[m] = np.dot(k[1 : m + 1] * c[1 : m + 1], out[m - 1 :: -1][:m]) / m
    return TruncatedSeries(out)


def _require_unit(a: TruncatedSeries, op: str) -> None:
    if abs(a.coeffs[0] - 1.0) > _UNIT_TOL:
        raise BadConstantTerm(f"{op} needs constant term 1, got {a[0]!r}")


def log_series(a: TruncatedSeries) -> TruncatedSeries:
    _require_unit(a, "log_series")
    n = a.order
    c = a.coeffs
    k = np.arange(n + 1)
    out = np.zeros(n + 1, dtype=np.complex128)
    for m in range(1, n + 1):
        # m a_m = sum_{k=1}^{m} k l_k a_{m-k}, a_0 = 1
        acc = np.dot(k[1:m] * out[1:m], c[m - 1 : 0 : -1]) if m > 1 else 0.0
        out[m] = (m * c[m] - acc) / m
    return TruncatedSeries(out)


def sqrt_series(a: TruncatedSeries) -> TruncatedSeries:
    _require_unit(a, "sqrt_series")
    n = a.order
    c = a.coeffs
    out = np.zeros(n + 1, dtype=np.complex128)
    out[0] = 1.0
    for m in range(1, n + 1):
        acc = np.dot(out[1:m], out[m - 1 : 0 : -1]) if m > 1 else 0.0
        out[m] = (c[m] - acc) / 2.0
    return TruncatedSeries(out)


def power_series(a: TruncatedSeries, alpha: float) -> TruncatedSeries:
    """a**alpha on the principal branch; a must start with 1."""
    _require_unit(a, "power_series")
    return exp_series(log_series(a) * alpha)


def integrate_shifted(a: TruncatedSeries) -> TruncatedSeries:
    """∫_0^z (a(t) - a(0)) / t dt, same order as `a`."""
    out = np.zeros(a.order + 1, dtype=np.complex128)
    k = np.arange(1, a.order + 1)
    out[1:] = a.coeffs[1:] / k
    return TruncatedSeries(out)


def antiderivative(a: TruncatedSeries) -> TruncatedSeries:
    """∫_0^z a(t) dt; the order grows by one."""
    out = np.zeros(a.order + 2, dtype=np.complex128)
    out[1:] = a.coeffs / np.arange(1, a.order + 2)
    return TruncatedSeries(out)


def derivative(a: TruncatedSeries) -> TruncatedSeries:
    if a.order == 0:
        return TruncatedSeries([0.0])
    return TruncatedSeries(a.coeffs[1:] * np.arange(1, a.order + 1))


def times_z(a: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(np.concatenate(([0.0], a.coeffs)))


def divide_by_z(a: TruncatedSeries) -> TruncatedSeries:
    if abs(a.coeffs[0]) > _ZERO_TOL:
        raise BadConstantTerm(f"cannot divide by z: constant term is {a[0]!r}")
    if a.order == 0:
        raise ValueError("divide_by_z needs order >= 1")
    return TruncatedSeries(a.coeffs[1:])


def substitute_power(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """a(z**k) at the same order."""
    return compose(a, TruncatedSeries.monomial(k, a.order))
