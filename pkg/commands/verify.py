"""commands/verify.py — `verify`: scan the coefficient body and check sharpness."""

import argparse
import logging

from bounds import bounds_for_family
from oracle import ScanConfig, scan_family

from .common import (
    EXIT_OK,
    EXIT_VIOLATION,
    UsageError,
    add_family_arguments,
    add_format_argument,
    emit,
    family_from_args,
)

logger = logging.getLogger(__name__)

COLUMNS = ("family", "samples", "passed", "emp_min", "emp_max", "violation_count", "T31_margin", "max_sharp_gap")


def parse_grid(text: str) -> tuple[int, int, int]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--grid expects three integers, got {text!r}") from exc
    if len(parts) != 3:
        raise UsageError(f"--grid expects p1,radius,phase counts, got {text!r}")
    return parts


def config_from_args(args: argparse.Namespace) -> ScanConfig:
    n_p1, n_r, n_t = parse_grid(args.grid)
    return ScanConfig(
        grid_p1=n_p1,
        grid_zeta_radius=n_r,
        grid_zeta_phase=n_t,
        random_samples=args.random,
        seed=args.seed,
        tolerance=args.tolerance,
        p1_phase_checks=args.phase_checks,
    )


def run(args: argparse.Namespace) -> int:
    family = family_from_args(args)
    cfg = config_from_args(args)
    report = scan_family(family, cfg, dump_samples=args.dump_samples)
    bounds = bounds_for_family(family)

    payload = report.to_dict()
    payload["config"] = {
        "grid": [cfg.grid_p1, cfg.grid_zeta_radius, cfg.grid_zeta_phase],
        "random_samples": cfg.random_samples,
        "p1_phase_checks": cfg.p1_phase_checks,
        "seed": cfg.seed,
        "tolerance": cfg.tolerance,
    }
    payload["bounds"] = [r.to_dict() for r in bounds.reports]

    t31_margins = [m for name, m in report.margins.items() if name.startswith("T31:")]
    row = {
        "family": report.family,
        "samples": report.samples,
        "passed": report.passed,
        "emp_min": report.emp_min,
        "emp_max": report.emp_max,
        "violation_count": report.violation_count,
        "T31_margin": min(t31_margins) if t31_margins else None,
        "max_sharp_gap": max(report.sharp_gaps.values()) if report.sharp_gaps else None,
    }
    emit(payload, [row], COLUMNS, args.format)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="brute-force check the bounds over the coefficient body")
    add_family_arguments(parser)
    add_format_argument(parser)
    defaults = ScanConfig()
    parser.add_argument(
        "--grid",
        default=f"{defaults.grid_p1},{defaults.grid_zeta_radius},{defaults.grid_zeta_phase}",
        help="p1,|ζ|,arg ζ grid counts",
    )
    parser.add_argument("--random", type=int, default=defaults.random_samples, help="uniform random samples")
    parser.add_argument("--phase-checks", type=int, default=defaults.p1_phase_checks, help="complex-p1 spot checks")
    parser.add_argument("--seed", type=int, default=defaults.seed)
    parser.add_argument("--tolerance", type=float, default=defaults.tolerance)
    parser.add_argument("--dump-samples", metavar="PATH", default=None, help="write every sample as CSV")
    parser.set_defaults(handler=run)
