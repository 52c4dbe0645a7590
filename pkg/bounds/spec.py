"""bounds/spec.py — BoundReport, BoundSet, and Bound base class.

A Bound subclass computes one side of one determinant bound and returns
(value, details); Bound.report() wraps that into a frozen BoundReport.
Precondition failures never raise: the report carries ok=False entries and
`applicable` turns false.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Literal

logger = logging.getLogger(__name__)

Quantity = Literal["T21", "T31", "ABS_T22"]
Side = Literal["lower", "upper"]

QUANTITIES: tuple[str, ...] = ("T21", "T31", "ABS_T22")
SIDES: tuple[str, ...] = ("lower", "upper")

CASE_LABELS: frozenset[str] = frozenset(
    {
        "starlike-t21",
        "starlike-t31-unit",
        "starlike-t31-extremal",
        "starlike-lower-mu-outside",
        "starlike-lower-mu-at-4",
        "starlike-lower-mu-interior",
        "starlike-lower-degenerate",
        "convex-t21",
        "convex-t31-unit",
        "convex-lower-sigma-outside",
        "convex-lower-sigma-at-4",
        "convex-lower-sigma-interior",
        "convex-lower-degenerate",
        "ctc-t21",
        "ctc-t31-unit",
        "ctc-t31-excess",
        "ctc-t22",
    }
)


class BoundError(ValueError):
    pass


class BadB1(BoundError):
    pass


class BadCoefficient(BoundError):
    pass


def validate_case_label(label: str) -> str:
    if label not in CASE_LABELS:
        raise ValueError(f"unknown case label {label!r}")
    return label


@dataclass(kw_only=True, frozen=True)
class Precondition:
    name: str
    ok: bool

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "ok": self.ok}


@dataclass(kw_only=True, frozen=True)
class BoundReport:
    quantity: Quantity
    side: Side
    value: float
    case_label: str
    mu_or_sigma: float | None = None
    preconditions: tuple[Precondition, ...] = ()
    sharp: bool = False
    extremal_id: str | None = None
    notes: str = ""

    def __post_init__(self):
        if self.quantity not in QUANTITIES:
            raise ValueError(f"unknown quantity {self.quantity!r}")
        if self.side not in SIDES:
            raise ValueError(f"unknown side {self.side!r}")
        validate_case_label(self.case_label)
        if not math.isfinite(self.value):
            raise ValueError(f"{self.quantity} {self.side} bound is not finite: {self.value}")

    @property
    def applicable(self) -> bool:
        return all(p.ok for p in self.preconditions)

    @property
    def name(self) -> str:
        return f"{self.quantity}:{self.side}"

    def admits(self, value: float, tol: float = 0.0) -> bool:
        """True when `value` lies on the allowed side of this bound."""
        if self.side == "upper":
            return value <= self.value + tol
        return value >= self.value - tol

    def margin(self, value: float) -> float:
        """Signed distance inside the bound (negative = violation)."""
        return self.value - value if self.side == "upper" else value - self.value

    def to_dict(self) -> dict[str, Any]:
        mu = self.mu_or_sigma
        return {
            "quantity": self.quantity,
            "side": self.side,
            "value": self.value,
            "case": self.case_label,
            # JSON has no infinity; an unbounded critical point is reported as null
            "mu_or_sigma": mu if mu is not None and math.isfinite(mu) else None,
            "preconditions": [p.to_dict() for p in self.preconditions],
            "applicable": self.applicable,
            "sharp": self.sharp,
            "extremal": self.extremal_id,
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "BoundReport":
        mu = data.get("mu_or_sigma")
        if mu is None and data["case"].endswith("-degenerate"):
            mu = math.inf
        return cls(
            quantity=data["quantity"],
            side=data["side"],
            value=float(data["value"]),
            case_label=data["case"],
            mu_or_sigma=mu,
            preconditions=tuple(Precondition(name=p["name"], ok=bool(p["ok"])) for p in data.get("preconditions", [])),
            sharp=bool(data.get("sharp", False)),
            extremal_id=data.get("extremal"),
            notes=data.get("notes", ""),
        )


@dataclass(kw_only=True, frozen=True)
class BoundSet:
    """All reports for one family, keyed by `quantity:side`."""

    family: str
    reports: tuple[BoundReport, ...] = field(default_factory=tuple)

    def get(self, quantity: str, side: str) -> BoundReport | None:
        for r in self.reports:
            if r.quantity == quantity and r.side == side:
                return r
        return None

    def applicable(self) -> list[BoundReport]:
        return [r for r in self.reports if r.applicable]

    def to_dict(self) -> dict[str, Any]:
        return {"family": self.family, "reports": [r.to_dict() for r in self.reports]}


class Bound:
    quantity: Quantity = "T21"
    side: Side = "upper"

    @classmethod
    def report(cls, **kwargs) -> BoundReport:
        """Compute and wrap into a BoundReport."""
        result = cls.compute(**kwargs)
        if isinstance(result, tuple):
            value, details = result
        else:
            value, details = result, {}

        preconditions = tuple(Precondition(name=n, ok=bool(ok)) for n, ok in cls.preconditions(**kwargs))
        report = BoundReport(
            quantity=cls.quantity,
            side=cls.side,
            value=float(value),
            case_label=details["case"],
            mu_or_sigma=details.get("mu_or_sigma"),
            preconditions=preconditions,
            sharp=details.get("sharp", False),
            extremal_id=details.get("extremal"),
            notes=details.get("notes", ""),
        )
        if not report.applicable:
            failed = [p.name for p in preconditions if not p.ok]
            logger.info("%s %s bound inapplicable: %s", cls.__name__, report.name, ", ".join(failed))
        return report

    @classmethod
    def preconditions(cls, **kwargs) -> list[tuple[str, bool]]:
        return []

    @classmethod
    def compute(cls, **kwargs) -> float | tuple[float, dict[str, Any]]:
        raise NotImplementedError("Subclasses must implement compute")
