"""oracle/scan.py — brute-force scans of the (p1, ζ) coefficient body.

Every sample is mapped through the family's (a2, a3) formulas and the
determinants are checked against each applicable bound. Work is split into
fixed chunks; random chunks get their own stream from SeedSequence(seed), and
chunk results are merged in chunk order, so the report does not depend on
the thread count.
"""

import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

import numpy as np

from bounds import (
    BoundReport,
    BoundSet,
    bounds_for_family,
    primary_t31,
    t21_convex,
    t21_starlike,
    t31_lower_convex,
    t31_lower_starlike,
    t31_upper_convex,
    t31_upper_starlike,
    t_bounds_ctc,
)
from classes import FamilySpec, SamplePoint, body_a2a3, caratheodory_p2
from toeplitz import abs_det_T22, det_T21, det_T31

from .sharpness import check_sharpness

logger = logging.getLogger(__name__)

MAX_THREADS = int(os.getenv("TOEPLITZ_SHARP_THREADS", "0")) or (os.cpu_count() or 1)

CHUNK_SIZE = 65_536
MAX_RECORDED_VIOLATIONS = 50

CSV_COLUMNS = ("p1", "re_zeta", "im_zeta", "re_a2", "im_a2", "re_a3", "im_a3", "det31", "p1_phase")


class OracleError(ValueError):
    pass


class EmptyScan(OracleError):
    pass


class Inapplicable(OracleError):
    def __init__(self, report: BoundReport, family: str = ""):
        failed = ", ".join(p.name for p in report.preconditions if not p.ok)
        super().__init__(f"{family or 'family'}: {report.name} bound inapplicable ({failed})")
        self.report = report


@dataclass(kw_only=True, frozen=True)
class ScanConfig:
    grid_p1: int = 200
    grid_zeta_radius: int = 64
    grid_zeta_phase: int = 64
    random_samples: int = 1_000_000
    seed: int = 0
    tolerance: float = 1e-9
    p1_phase_checks: int = 10_000

    def __post_init__(self):
        for name in ("grid_p1", "grid_zeta_radius", "grid_zeta_phase", "random_samples", "p1_phase_checks"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)}")
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be > 0, got {self.tolerance}")

    @property
    def grid_samples(self) -> int:
        return self.grid_p1 * self.grid_zeta_radius * self.grid_zeta_phase


def _point_dict(s: SamplePoint) -> dict[str, float]:
    return {"p1": s.p1, "re_zeta": s.zeta.real, "im_zeta": s.zeta.imag, "p1_phase": s.p1_phase}


@dataclass(kw_only=True, frozen=True)
class OracleReport:
    family: str
    samples: int
    emp_min: float
    emp_max: float
    argmin: SamplePoint
    argmax: SamplePoint
    violation_count: int = 0
    violations: tuple[dict[str, Any], ...] = ()
    sharp_gaps: dict[str, float] = field(default_factory=dict)
    margins: dict[str, float] = field(default_factory=dict)
    extrema: dict[str, tuple[float, float]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "samples": self.samples,
            "passed": self.passed,
            "emp_min": self.emp_min,
            "emp_max": self.emp_max,
            "argmin": _point_dict(self.argmin),
            "argmax": _point_dict(self.argmax),
            "violation_count": self.violation_count,
            "violations": list(self.violations),
            "sharp_gaps": dict(self.sharp_gaps),
            "margins": dict(self.margins),
            "extrema": {k: {"min": lo, "max": hi} for k, (lo, hi) in self.extrema.items()},
        }


# ── chunk plan ────────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class _Chunk:
    index: int
    kind: str  # grid | random | phase
    start: int = 0
    stop: int = 0
    count: int = 0
    seed: np.random.SeedSequence | None = None


def _plan(cfg: ScanConfig, with_phase_checks: bool) -> list[_Chunk]:
    chunks: list[_Chunk] = []
    total = cfg.grid_samples
    for start in range(0, total, CHUNK_SIZE):
        chunks.append(_Chunk(index=len(chunks), kind="grid", start=start, stop=min(start + CHUNK_SIZE, total)))

    sizes: list[tuple[str, int]] = []
    for kind, n in (("random", cfg.random_samples), ("phase", cfg.p1_phase_checks if with_phase_checks else 0)):
        full, rest = divmod(n, CHUNK_SIZE)
        sizes.extend([(kind, CHUNK_SIZE)] * full)
        if rest:
            sizes.append((kind, rest))

    streams = np.random.SeedSequence(cfg.seed).spawn(len(sizes))
    for (kind, n), ss in zip(sizes, streams):
        chunks.append(_Chunk(index=len(chunks), kind=kind, count=n, seed=ss))
    return chunks


def _draw(chunk: _Chunk, cfg: ScanConfig, random_phase: bool) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(p1 in [0,2], ζ, p1 phase) for one chunk."""
    if chunk.kind == "grid":
        idx = np.arange(chunk.start, chunk.stop)
        i, j, k = np.unravel_index(idx, (cfg.grid_p1, cfg.grid_zeta_radius, cfg.grid_zeta_phase))
        p1_axis = np.linspace(0.0, 2.0, cfg.grid_p1)
        r_axis = np.linspace(0.0, 1.0, cfg.grid_zeta_radius)
        t_axis = 2.0 * np.pi * np.arange(cfg.grid_zeta_phase) / cfg.grid_zeta_phase
        return p1_axis[i], r_axis[j] * np.exp(1j * t_axis[k]), np.zeros(idx.size)

    rng = np.random.default_rng(chunk.seed)
    n = chunk.count
    p1 = rng.uniform(0.0, 2.0, n)
    # uniform in the closed disk
    zeta = np.sqrt(rng.uniform(0.0, 1.0, n)) * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, n))
    if chunk.kind == "phase" or random_phase:
        phase = rng.uniform(0.0, 2.0 * np.pi, n)
    else:
        phase = np.zeros(n)
    return p1, zeta, phase


# ── evaluation ────────────────────────────────────────────────────────────────


@dataclass
class _ChunkResult:
    index: int
    count: int
    values: dict[str, tuple[float, float]]
    argmin: SamplePoint
    argmax: SamplePoint
    emp_min: float
    emp_max: float
    max_abs_p2: float
    margins: dict[str, float]
    violation_count: int
    violations: list[dict[str, Any]]
    rows: np.ndarray | None = None


def _evaluate(
    chunk: _Chunk,
    *,
    kind: str,
    params: tuple[complex, complex],
    checks: list[BoundReport],
    cfg: ScanConfig,
    keep_rows: bool,
) -> _ChunkResult:
    p1, zeta, phase = _draw(chunk, cfg, random_phase=kind == "ctc")
    p1c = p1 * np.exp(1j * phase)
    p2 = caratheodory_p2(p1c, zeta)
    a2, a3 = body_a2a3(kind, params, p1c, p2)

    dets = {"T21": det_T21(a2), "T31": det_T31(a2, a3), "ABS_T22": abs_det_T22(a2, a3)}
    d31 = dets["T31"]

    lo, hi = int(np.argmin(d31)), int(np.argmax(d31))
    margins: dict[str, float] = {}
    violation_count = 0
    violations: list[dict[str, Any]] = []
    for report in checks:
        values = dets[report.quantity]
        margin = report.margin(values)
        margins[report.name] = float(np.min(margin))
        bad = np.flatnonzero(margin < -cfg.tolerance)
        violation_count += bad.size
        for i in bad[: MAX_RECORDED_VIOLATIONS - len(violations)]:
            violations.append(
                {
                    "sample": {
                        "p1": float(p1[i]),
                        "re_zeta": float(zeta[i].real),
                        "im_zeta": float(zeta[i].imag),
                        "p1_phase": float(phase[i]),
                    },
                    "value": float(values[i]),
                    "bound": report.name,
                    "bound_value": report.value,
                }
            )

    rows = None
    if keep_rows:
        rows = np.column_stack([p1, zeta.real, zeta.imag, a2.real, a2.imag, a3.real, a3.imag, d31, phase])

    logger.debug("chunk %d (%s): %d samples, T31 in [%.6g, %.6g]", chunk.index, chunk.kind, p1.size, d31[lo], d31[hi])
    return _ChunkResult(
        index=chunk.index,
        count=int(p1.size),
        values={q: (float(np.min(v)), float(np.max(v))) for q, v in dets.items()},
        argmin=SamplePoint(float(p1[lo]), complex(zeta[lo]), float(phase[lo])),
        argmax=SamplePoint(float(p1[hi]), complex(zeta[hi]), float(phase[hi])),
        emp_min=float(d31[lo]),
        emp_max=float(d31[hi]),
        max_abs_p2=float(np.max(np.abs(p2))),
        margins=margins,
        violation_count=int(violation_count),
        violations=violations,
        rows=rows,
    )


def _merge(label: str, results: list[_ChunkResult]) -> OracleReport:
    results = sorted(results, key=lambda r: r.index)
    emp_min, argmin = math.inf, None
    emp_max, argmax = -math.inf, None
    extrema: dict[str, tuple[float, float]] = {}
    margins: dict[str, float] = {}
    violations: list[dict[str, Any]] = []
    violation_count = 0
    max_abs_p2 = 0.0

    for r in results:
        # strict comparisons keep the earliest chunk on ties
        if r.emp_min < emp_min:
            emp_min, argmin = r.emp_min, r.argmin
        if r.emp_max > emp_max:
            emp_max, argmax = r.emp_max, r.argmax
        for q, (lo, hi) in r.values.items():
            old = extrema.get(q, (math.inf, -math.inf))
            extrema[q] = (min(old[0], lo), max(old[1], hi))
        for name, m in r.margins.items():
            margins[name] = min(margins.get(name, math.inf), m)
        violation_count += r.violation_count
        violations.extend(r.violations[: MAX_RECORDED_VIOLATIONS - len(violations)])
        max_abs_p2 = max(max_abs_p2, r.max_abs_p2)

    extrema["ABS_P2"] = (0.0, max_abs_p2)
    return OracleReport(
        family=label,
        samples=sum(r.count for r in results),
        emp_min=emp_min,
        emp_max=emp_max,
        argmin=argmin,
        argmax=argmax,
        violation_count=violation_count,
        violations=tuple(violations),
        margins=margins,
        extrema=extrema,
    )


def _write_rows(path: str | Path, results: list[_ChunkResult]) -> None:
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        fh.write(",".join(CSV_COLUMNS) + "\n")
        for r in sorted(results, key=lambda r: r.index):
            np.savetxt(fh, r.rows, delimiter=",", fmt="%.17g")
    logger.info("wrote %s", path)


def _run(
    *,
    kind: str,
    params: tuple[complex, complex],
    bounds: BoundSet,
    cfg: ScanConfig,
    dump_samples: str | Path | None = None,
) -> OracleReport:
    primary = primary_t31(bounds, kind)
    if not primary.applicable:
        raise Inapplicable(primary, bounds.family)

    chunks = _plan(cfg, with_phase_checks=kind != "ctc")
    if not chunks:
        raise EmptyScan(f"{bounds.family}: scan configuration yields no samples")

    checks = bounds.applicable()
    workers = max(1, min(MAX_THREADS, len(chunks)))
    logger.info("scanning %s: %d chunk(s) on %d thread(s)", bounds.family, len(chunks), workers)

    def job(chunk: _Chunk) -> _ChunkResult:
        return _evaluate(chunk, kind=kind, params=params, checks=checks, cfg=cfg, keep_rows=dump_samples is not None)

    if workers == 1:
        results = [job(c) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(job, chunks))

    if dump_samples is not None:
        _write_rows(dump_samples, results)

    report = _merge(bounds.family, results)
    if report.violation_count:
        logger.warning("%s: %d violation(s) in %d samples", bounds.family, report.violation_count, report.samples)
    logger.info("%s: %d samples, T31 in [%.12g, %.12g]", bounds.family, report.samples, report.emp_min, report.emp_max)
    return report


# ── public entry points ───────────────────────────────────────────────────────


def scan_starlike(B1: float, B2: float, cfg: ScanConfig, *, dump_samples: str | Path | None = None) -> OracleReport:
    bounds = BoundSet(
        family=f"S*(B1={B1:g}, B2={B2:g})",
        reports=(*t21_starlike(B1), t31_upper_starlike(B1, B2), t31_lower_starlike(B1, B2)),
    )
    return _run(kind="starlike", params=(B1, B2), bounds=bounds, cfg=cfg, dump_samples=dump_samples)


def scan_convex(B1: float, B2: float, cfg: ScanConfig, *, dump_samples: str | Path | None = None) -> OracleReport:
    bounds = BoundSet(
        family=f"C(B1={B1:g}, B2={B2:g})",
        reports=(*t21_convex(B1), t31_upper_convex(B1, B2), t31_lower_convex(B1, B2)),
    )
    return _run(kind="convex", params=(B1, B2), bounds=bounds, cfg=cfg, dump_samples=dump_samples)


def scan_ctc(b2: complex, b3: complex, cfg: ScanConfig, *, dump_samples: str | Path | None = None) -> OracleReport:
    bounds = BoundSet(family=f"K(b2={b2:g}, b3={b3:g})", reports=tuple(t_bounds_ctc(abs(b2), abs(b3))))
    return _run(kind="ctc", params=(complex(b2), complex(b3)), bounds=bounds, cfg=cfg, dump_samples=dump_samples)


def scan_family(family: FamilySpec, cfg: ScanConfig, *, dump_samples: str | Path | None = None) -> OracleReport:
    """Scan plus sharpness gaps for every bound with a named extremal."""
    bounds = bounds_for_family(family)
    if family.kind == "ctc":
        params = (family.b2, family.b3)
    else:
        params = (family.generator.B1, family.generator.B2)
    report = _run(kind=family.kind, params=params, bounds=bounds, cfg=cfg, dump_samples=dump_samples)
    return replace(report, sharp_gaps=check_sharpness(family, bounds.applicable()))
