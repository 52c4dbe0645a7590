"""classes/generators.py — Ma–Minda generators φ and close-to-convex base curves g.

Two registries, both read-only after import:
  _GENERATORS : name -> builder for φ(z) = 1 + B1 z + B2 z^2 + ...
  _BASES      : name -> builder for g(z) = z + b2 z^2 + b3 z^3 + ...

Custom entries come from JSON series files (see series.load_series).
"""

import logging
import math
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from series import (
    DEFAULT_ORDER,
    TruncatedSeries,
    div,
    exp_series,
    load_series,
    mul,
    power_series,
    sqrt_series,
)

logger = logging.getLogger(__name__)

_REAL_TOL = 1e-12


class ClassError(ValueError):
    """Base class for generator / family errors."""


class UnknownClass(ClassError):
    pass


class BadParams(ClassError):
    pass


class InvalidGenerator(ClassError):
    pass


@dataclass(kw_only=True, frozen=True, eq=False)
class MindaGenerator:
    """φ with φ(0) = 1, real coefficients and B1 = φ'(0) in (0, 2]."""

    series: TruncatedSeries
    name: str
    params: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        c = self.series
        if c.order < 2:
            raise InvalidGenerator(f"{self.name}: need coefficients up to B2, got order {c.order}")
        if abs(c[0] - 1.0) > _REAL_TOL:
            raise InvalidGenerator(f"{self.name}: φ(0) must be 1, got {c[0]!r}")
        if not c.is_real(_REAL_TOL):
            raise InvalidGenerator(f"{self.name}: coefficients must be real")
        if not 0.0 < self.B1 <= 2.0 + _REAL_TOL:
            raise InvalidGenerator(f"{self.name}: B1 = {self.B1} outside (0, 2]")
        if abs(self.B2) > 2.0 + _REAL_TOL:
            raise InvalidGenerator(f"{self.name}: B2 = {self.B2} outside [-2, 2]")

    @property
    def B1(self) -> float:
        return self.series[1].real

    @property
    def B2(self) -> float:
        return self.series[2].real

    @property
    def B3(self) -> float:
        # stored for completeness; no bound depends on it
        return self.series[3].real if self.series.order >= 3 else 0.0

    @property
    def label(self) -> str:
        if not self.params:
            return self.name
        args = ",".join(f"{k}={v:g}" for k, v in self.params.items())
        return f"{self.name}:{args}"


# ── φ builders ────────────────────────────────────────────────────────────────


def janowski_b1_b2(A: float, B: float) -> tuple[float, float]:
    """(B1, B2) of (1 + A z)/(1 + B z)."""
    return A - B, -B * (A - B)


def _janowski(order: int, A: float, B: float) -> TruncatedSeries:
    if not -1.0 <= B < A <= 1.0:
        raise BadParams(f"janowski needs -1 <= B < A <= 1, got A={A}, B={B}")
    num = TruncatedSeries.from_coeffs([1.0, A], order)
    den = TruncatedSeries.from_coeffs([1.0, B], order)
    return div(num, den)


def _order_alpha(order: int, a: float) -> TruncatedSeries:
    if not 0.0 <= a < 1.0:
        raise BadParams(f"order needs 0 <= a < 1, got a={a}")
    return _janowski(order, 1.0 - 2.0 * a, -1.0)


def _strongly(order: int, a: float) -> TruncatedSeries:
    if not 0.0 < a <= 1.0:
        raise BadParams(f"strongly needs 0 < a <= 1, got a={a}")
    return power_series(_janowski(order, 1.0, -1.0), a)


def _sine(order: int) -> TruncatedSeries:
    coeffs = [0.0] * (order + 1)
    coeffs[0] = 1.0
    for k in range(1, order + 1, 2):
        coeffs[k] = (-1) ** ((k - 1) // 2) / math.factorial(k)
    return TruncatedSeries(coeffs)


def _parabolic(order: int) -> TruncatedSeries:
    # (log((1+√z)/(1-√z)))^2 = 4 z (Σ z^k/(2k+1))^2
    h = TruncatedSeries([1.0 / (2 * k + 1) for k in range(order + 1)])
    z = TruncatedSeries.variable(order)
    return 1.0 + mul(z, mul(h, h)) * (8.0 / math.pi**2)


def _sigmoid(order: int) -> TruncatedSeries:
    e = exp_series(TruncatedSeries.monomial(1, order, coeff=-1.0))
    return div(TruncatedSeries.constant(2.0, order), 1.0 + e)


def _nephroid(order: int) -> TruncatedSeries:
    return TruncatedSeries.from_coeffs([1.0, 1.0, 0.0, -1.0 / 3.0], order)


def _lemniscate(order: int) -> TruncatedSeries:
    return sqrt_series(TruncatedSeries.from_coeffs([1.0, 1.0], order))


@dataclass(frozen=True)
class _Entry:
    build: Callable[..., TruncatedSeries]
    params: tuple[str, ...]
    description: str
    defaults: dict[str, float] = field(default_factory=dict)


_GENERATORS: dict[str, _Entry] = {
    "janowski": _Entry(_janowski, ("A", "B"), "(1 + A z)/(1 + B z), -1 <= B < A <= 1", {"A": 1.0, "B": -1.0}),
    "order": _Entry(_order_alpha, ("a",), "(1 + (1 - 2a) z)/(1 - z), starlike/convex of order a", {"a": 0.5}),
    "strongly": _Entry(_strongly, ("a",), "((1 + z)/(1 - z))^a, strongly starlike/convex", {"a": 0.5}),
    "sin": _Entry(_sine, (), "1 + sin z"),
    "parabolic": _Entry(_parabolic, (), "1 + (2/π²)(log((1 + √z)/(1 - √z)))²"),
    "sigmoid": _Entry(_sigmoid, (), "2/(1 + e^(-z))"),
    "nephroid": _Entry(_nephroid, (), "1 + z - z³/3"),
    "lemniscate": _Entry(_lemniscate, (), "√(1 + z)"),
}

_PARAM_ALIASES = {"alpha": "a"}


def _bind_params(name: str, entry: _Entry, params: Mapping[str, float] | Sequence[float]) -> dict[str, float]:
    if isinstance(params, Mapping):
        given = {_PARAM_ALIASES.get(k, k): float(v) for k, v in params.items()}
    else:
        values = [float(v) for v in params]
        if len(values) > len(entry.params):
            raise BadParams(f"{name} takes {len(entry.params)} parameter(s), got {len(values)}")
        given = dict(zip(entry.params, values))

    unknown = set(given) - set(entry.params)
    if unknown:
        raise BadParams(f"{name}: unknown parameter(s) {sorted(unknown)}; expected {list(entry.params)}")

    bound = {}
    for pname in entry.params:
        if pname in given:
            bound[pname] = given[pname]
        elif pname in entry.defaults:
            bound[pname] = entry.defaults[pname]
        else:
            raise BadParams(f"{name}: missing parameter {pname}")
    return bound


def phi_named(
    name: str,
    params: Mapping[str, float] | Sequence[float] = (),
    order: int = DEFAULT_ORDER,
    *,
    path: str | Path | None = None,
) -> MindaGenerator:
    """Look up a registry generator; `custom` reads `path`."""
    key = name.strip().lower()
    if key == "custom":
        if path is None:
            raise BadParams("custom generator needs a series file")
        return phi_from_file(path, order)

    entry = _GENERATORS.get(key)
    if entry is None:
        raise UnknownClass(f"unknown generator {name!r}; known: {sorted(_GENERATORS)} or custom")
    bound = _bind_params(key, entry, params)
    series = entry.build(order, **bound)
    return MindaGenerator(series=series, name=key, params=bound)


def phi_from_file(path: str | Path, order: int | None = None) -> MindaGenerator:
    series = load_series(path)
    if order is not None:
        series = series.truncate(order)
    gen = MindaGenerator(series=series, name=f"custom:{Path(path).stem}")
    logger.info("custom generator %s: B1=%.6g B2=%.6g", gen.name, gen.B1, gen.B2)
    return gen


# ── close-to-convex base curves g ─────────────────────────────────────────────


def _base_f1(order: int) -> TruncatedSeries:
    return div(TruncatedSeries.variable(order), TruncatedSeries.from_coeffs([1.0, -1.0], order))


def _base_f2(order: int) -> TruncatedSeries:
    return div(TruncatedSeries.variable(order), TruncatedSeries.from_coeffs([1.0, 0.0, -1.0], order))


def _base_f3(order: int) -> TruncatedSeries:
    return div(TruncatedSeries.variable(order), TruncatedSeries.from_coeffs([1.0, -2.0, 1.0], order))


def _base_f4(order: int) -> TruncatedSeries:
    return div(TruncatedSeries.variable(order), TruncatedSeries.from_coeffs([1.0, -1.0, 1.0], order))


def _base_id(order: int) -> TruncatedSeries:
    return TruncatedSeries.variable(order)


_BASES: dict[str, tuple[Callable[[int], TruncatedSeries], str]] = {
    "f1-base": (_base_f1, "z/(1 - z)"),
    "f2-base": (_base_f2, "z/(1 - z²)"),
    "f3-base": (_base_f3, "z/(1 - z)², the Koebe function"),
    "f4-base": (_base_f4, "z/(1 - z + z²)"),
    "id": (_base_id, "z"),
}

_BASE_ALIASES = {
    "koebe": "f3-base",
    "f1": "f1-base",
    "f2": "f2-base",
    "f3": "f3-base",
    "f4": "f4-base",
    "r": "id",
}


def validate_base(series: TruncatedSeries, name: str) -> TruncatedSeries:
    if series.order < 3:
        raise InvalidGenerator(f"{name}: need coefficients up to b3, got order {series.order}")
    if abs(series[0]) > _REAL_TOL or abs(series[1] - 1.0) > _REAL_TOL:
        raise InvalidGenerator(f"{name}: base curve must start z + b2 z^2 + ...")
    return series


def base_named(name: str, order: int = DEFAULT_ORDER) -> tuple[str, TruncatedSeries]:
    """Return (canonical name, g) for a registry base curve."""
    key = name.strip().lower()
    key = _BASE_ALIASES.get(key, key)
    if key not in _BASES:
        raise UnknownClass(f"unknown base curve {name!r}; known: {sorted(_BASES)} (+ {sorted(_BASE_ALIASES)})")
    build, _ = _BASES[key]
    return key, validate_base(build(order), key)


def base_from_file(path: str | Path, order: int | None = None) -> tuple[str, TruncatedSeries]:
    series = load_series(path)
    if order is not None:
        series = series.truncate(order)
    name = f"custom:{Path(path).stem}"
    logger.info("custom base curve %s loaded", name)
    return name, validate_base(series, name)


def list_registry(order: int = DEFAULT_ORDER) -> list[dict[str, Any]]:
    """Rows for `classes list`: every generator (at default params) and base curve."""
    rows: list[dict[str, Any]] = []
    for name, entry in _GENERATORS.items():
        gen = phi_named(name, {}, order)
        rows.append(
            {
                "kind": "generator",
                "name": name,
                "params": list(entry.params),
                "description": entry.description,
                "B1": gen.B1,
                "B2": gen.B2,
                "B3": gen.B3,
            }
        )
    rows.append(
        {
            "kind": "generator",
            "name": "custom",
            "params": ["file"],
            "description": "JSON array of [re, im] pairs via --phi-file",
        }
    )
    for name, (build, description) in _BASES.items():
        g = build(order)
        aliases = sorted(alias for alias, target in _BASE_ALIASES.items() if target == name)
        rows.append(
            {
                "kind": "base",
                "name": name,
                "aliases": aliases,
                "description": description,
                "b2": g[2].real,
                "b3": g[3].real,
            }
        )
    return rows
