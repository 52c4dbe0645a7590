import csv
import json

import numpy as np
import pytest

import oracle.scan as scan_mod
from bounds import bounds_for_family, convex_G0, convex_G4, primary_t31, starlike_G0, starlike_G4, starlike_quadratic
from classes import FamilySpec, SamplePoint, a2a3_starlike, base_named, extremal, phi_named
from oracle import (
    CSV_COLUMNS,
    EmptyScan,
    Inapplicable,
    ScanConfig,
    check_sharpness,
    minimize_G_direct,
    reduced_determinant,
    scan_family,
    scan_starlike,
)
from toeplitz import det_T31

SMALL = ScanConfig(
    grid_p1=21,
    grid_zeta_radius=8,
    grid_zeta_phase=16,
    random_samples=5_000,
    p1_phase_checks=1_000,
)

REGISTRY = [
    ("janowski", {"A": 1, "B": -1}),
    ("janowski", {"A": 0.5, "B": -0.5}),
    ("order", {"a": 0.5}),
    ("strongly", {"a": 0.5}),
    ("sin", {}),
    ("parabolic", {}),
    ("sigmoid", {}),
    ("nephroid", {}),
    ("lemniscate", {}),
]

BASES = ["f1-base", "f2-base", "f3-base", "f4-base"]


def _families():
    for name, params in REGISTRY:
        phi = phi_named(name, params)
        yield FamilySpec.starlike(phi)
        yield FamilySpec.convex(phi)
    for name in BASES:
        canonical, g = base_named(name)
        yield FamilySpec.close_to_convex(g, canonical)


def _applicable(fam):
    return primary_t31(bounds_for_family(fam), fam.kind).applicable


APPLICABLE = [f for f in _families() if _applicable(f)]


def test_scan_starlike_half_order():
    report = scan_starlike(1.0, 1.0, SMALL)
    assert report.passed
    assert report.emp_min == pytest.approx(0.0, abs=1e-9)
    assert report.argmin.p1 == pytest.approx(2.0)


def test_scan_starlike_koebe_extrema():
    report = scan_starlike(2.0, 2.0, SMALL)
    assert report.passed
    assert report.emp_max == pytest.approx(8.0, abs=1e-9)
    assert report.argmax.p1 == pytest.approx(2.0)
    # p1 = 1, ζ = -1 is on the grid
    assert report.emp_min == pytest.approx(-1.0, abs=1e-9)


def test_scan_degenerate_quadratic():
    report = scan_starlike(1.0, -2.0, SMALL)
    assert report.passed
    assert report.margins["T31:lower"] >= -1e-12


def test_empty_scan():
    cfg = ScanConfig(grid_p1=0, random_samples=0, p1_phase_checks=0)
    with pytest.raises(EmptyScan):
        scan_starlike(1.0, 1.0, cfg)


def test_inapplicable_scan():
    with pytest.raises(Inapplicable):
        scan_starlike(0.5, 1.0, SMALL)


def test_bad_config():
    with pytest.raises(ValueError):
        ScanConfig(tolerance=0.0)
    with pytest.raises(ValueError):
        ScanConfig(random_samples=-1)


@pytest.mark.parametrize("fam", APPLICABLE, ids=lambda f: f.label)
def test_registry_has_no_violations(fam):
    report = scan_family(fam, SMALL)
    assert report.passed, report.violations[:3]
    assert report.emp_min <= report.emp_max
    assert report.extrema["ABS_P2"][1] <= 2 + 1e-12
    for gap in report.sharp_gaps.values():
        assert gap <= 1e-9


def test_inapplicable_registry_entries_exist():
    # order 1/2 has B1^2 < 2 B2, so its convex T31 lower bound does not apply
    fam = FamilySpec.convex(phi_named("order", {"a": 0.5}))
    assert not _applicable(fam)
    with pytest.raises(Inapplicable):
        scan_family(fam, SMALL)


def test_sharp_lower_bound_is_reached():
    fam = FamilySpec.starlike(phi_named("order", {"a": 0.5}))
    report = scan_family(fam, SMALL)
    assert report.margins["T31:lower"] <= 5e-3


def test_deterministic_and_thread_independent(monkeypatch):
    fam = FamilySpec.starlike(phi_named("sin"))
    cfg = ScanConfig(grid_p1=11, grid_zeta_radius=4, grid_zeta_phase=8, random_samples=150_000, seed=42)
    monkeypatch.setattr(scan_mod, "MAX_THREADS", 1)
    one = json.dumps(scan_family(fam, cfg).to_dict(), sort_keys=True)
    monkeypatch.setattr(scan_mod, "MAX_THREADS", 4)
    four = json.dumps(scan_family(fam, cfg).to_dict(), sort_keys=True)
    again = json.dumps(scan_family(fam, cfg).to_dict(), sort_keys=True)
    assert one == four == again


def test_seed_changes_random_samples():
    cfg_a = ScanConfig(grid_p1=0, random_samples=2_000, p1_phase_checks=0, seed=1)
    cfg_b = ScanConfig(grid_p1=0, random_samples=2_000, p1_phase_checks=0, seed=2)
    a = scan_starlike(1.0, 0.0, cfg_a)
    b = scan_starlike(1.0, 0.0, cfg_b)
    assert a.argmin != b.argmin


def test_dump_samples(tmp_path):
    cfg = ScanConfig(grid_p1=3, grid_zeta_radius=2, grid_zeta_phase=4, random_samples=10, p1_phase_checks=5)
    path = tmp_path / "samples.csv"
    report = scan_starlike(1.0, 1.0, cfg, dump_samples=path)
    with path.open() as fh:
        rows = list(csv.reader(fh))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) - 1 == report.samples == 3 * 2 * 4 + 10 + 5
    p1, re_zeta, im_zeta = (float(v) for v in rows[1][:3])
    a2, a3 = a2a3_starlike(1.0, 1.0, SamplePoint(p1, complex(re_zeta, im_zeta)))
    assert float(rows[1][7]) == pytest.approx(det_T31(a2, a3))


# ── sharpness ─────────────────────────────────────────────────────────────────


def test_check_sharpness_koebe():
    fam = FamilySpec.starlike(phi_named("janowski", {"A": 1, "B": -1}))
    gaps = check_sharpness(fam, bounds_for_family(fam).applicable())
    assert gaps["f1:T31:upper"] == pytest.approx(0.0, abs=1e-9)
    assert gaps["f1:T21:lower"] == pytest.approx(0.0, abs=1e-9)


def test_check_sharpness_ctc():
    canonical, g = base_named("f1-base")
    fam = FamilySpec.close_to_convex(g, canonical)
    gaps = check_sharpness(fam, bounds_for_family(fam).applicable())
    assert gaps["f5:T31:upper"] == pytest.approx(0.0, abs=1e-9)
    assert gaps["f7:ABS_T22:upper"] == pytest.approx(0.0, abs=1e-9)


@pytest.mark.parametrize("name,params", REGISTRY)
def test_extremal_determinants(name, params):
    phi = phi_named(name, params)
    B1, B2 = phi.B1, phi.B2
    starlike, convex = FamilySpec.starlike(phi), FamilySpec.convex(phi)

    f1, f2 = extremal("f1", starlike), extremal("f2", starlike)
    assert det_T31(f1[2], f1[3]) == pytest.approx(starlike_G4(B1, B2), abs=1e-9)
    assert det_T31(f2[2], f2[3]) == pytest.approx(starlike_G0(B1), abs=1e-9)

    f3, f4 = extremal("f3", convex), extremal("f4", convex)
    assert det_T31(f3[2], f3[3]) == pytest.approx(convex_G4(B1, B2), abs=1e-9)
    assert det_T31(f4[2], f4[3]) == pytest.approx(convex_G0(B1), abs=1e-9)


# ── direct minimisation ───────────────────────────────────────────────────────


@pytest.mark.parametrize(
    "B1,B2,x,g",
    [(1.0, 1.0, 4.0, 0.0), (0.5, 0.0, 4.0, 35 / 64), (2.0, 2.0, 1.0, -1.0)],
)
def test_minimize_G_direct(B1, B2, x, g):
    xmin, gmin = minimize_G_direct(B1, B2)
    assert xmin == pytest.approx(x, abs=1e-12)
    assert gmin == pytest.approx(g, abs=1e-12)


def test_minimize_G_direct_convex():
    xmin, gmin = minimize_G_direct(2.0, 2.0, family="convex")
    assert (xmin, gmin) == pytest.approx((4.0, 0.0), abs=1e-12)


def test_reduced_determinant_matches_coefficients():
    rng = np.random.default_rng(4)
    for _ in range(500):
        B1, B2 = rng.uniform(0.1, 2.0), rng.uniform(-2.0, 2.0)
        x = rng.uniform(0, 4)
        zeta = complex(np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform()))
        a2, a3 = a2a3_starlike(B1, B2, SamplePoint(float(np.sqrt(x)), zeta))
        assert reduced_determinant(B1, B2, x, zeta) == pytest.approx(det_T31(a2, a3), abs=1e-12)


def test_reduced_determinant_at_minus_one_is_G():
    B1, B2 = 1.3, 0.4
    c0, c1, c2 = starlike_quadratic(B1, B2)
    for x in np.linspace(0, 4, 9):
        assert reduced_determinant(B1, B2, x, -1.0) == pytest.approx(c0 + c1 * x + c2 * x**2, abs=1e-12)


# ── full resolution ───────────────────────────────────────────────────────────


@pytest.mark.slow
@pytest.mark.parametrize("fam", APPLICABLE, ids=lambda f: f.label)
def test_full_resolution_scan(fam):
    report = scan_family(fam, ScanConfig())
    assert report.passed
    assert report.samples == 200 * 64 * 64 + 1_000_000 + (0 if fam.kind == "ctc" else 10_000)
