import json
import math

import numpy as np
import pytest

from bounds import (
    CASE_LABELS,
    BadB1,
    BadCoefficient,
    BoundReport,
    bounds_for_family,
    convex_sigma,
    starlike_discriminant,
    starlike_mu,
    starlike_upper_value,
    t21_convex,
    t21_starlike,
    t31_lower_convex,
    t31_lower_starlike,
    t31_upper_convex,
    t31_upper_starlike,
    t_bounds_ctc,
)
from classes import FamilySpec, base_named, janowski_b1_b2, phi_named
from oracle import minimize_G_direct

PI = math.pi
PARABOLIC = (8 / PI**2, 16 / (3 * PI**2))


def _ctc_values(b, c):
    return {r.name: r for r in t_bounds_ctc(b, c)}


# ── S*(φ) ─────────────────────────────────────────────────────────────────────


@pytest.mark.parametrize(
    "B1,lower",
    [(2.0, -3.0), (8 / PI**2, 1 - 64 / PI**4), (0.5, 0.75), (1.0, 0.0)],
)
def test_t21_starlike(B1, lower):
    lo, hi = t21_starlike(B1)
    assert lo.value == pytest.approx(lower, abs=1e-12)
    assert hi.value == 1.0
    assert (lo.extremal_id, hi.extremal_id) == ("f1", "f2")


@pytest.mark.parametrize(
    "B1,B2,value,case",
    [
        (2.0, 2.0, 8.0, "starlike-t31-extremal"),
        (1.0, 1.0, 1.0, "starlike-t31-unit"),
        (1.0, 0.0, 1.0, "starlike-t31-unit"),
    ],
)
def test_t31_upper_starlike(B1, B2, value, case):
    r = t31_upper_starlike(B1, B2)
    assert r.value == pytest.approx(value, abs=1e-12)
    assert r.case_label == case
    assert r.applicable


def test_starlike_discriminant_sign():
    assert starlike_discriminant(2, 2) == pytest.approx(28)
    assert starlike_discriminant(1, 1) == pytest.approx(-4)
    # UB - 1 is a quarter of the discriminant
    for B1, B2 in [(2, 2), (1.5, 1), (0.7, -0.3)]:
        assert starlike_upper_value(B1, B2) - 1 == pytest.approx(starlike_discriminant(B1, B2) / 4)


def test_t31_upper_starlike_inapplicable_keeps_value():
    r = t31_upper_starlike(0.5, 0.0)
    assert not r.applicable
    assert math.isfinite(r.value)


@pytest.mark.parametrize(
    "B1,B2,mu,value,case",
    [
        (2.0, 2.0, 1.0, -1.0, "starlike-lower-mu-interior"),
        (1.0, 1.0, 4.0, 0.0, "starlike-lower-mu-at-4"),
        (0.5, 0.0, 56 / 3, 35 / 64, "starlike-lower-mu-outside"),
        (1.0, 0.0, 4.0, -0.25, "starlike-lower-mu-at-4"),
        (0.5, -0.125, 16.0, 135 / 256, "starlike-lower-mu-outside"),
    ],
)
def test_t31_lower_starlike(B1, B2, mu, value, case):
    r = t31_lower_starlike(B1, B2)
    assert r.mu_or_sigma == pytest.approx(mu, abs=1e-12)
    assert r.value == pytest.approx(value, abs=1e-12)
    assert r.case_label == case
    assert r.sharp == (case != "starlike-lower-mu-interior")


def test_t31_lower_parabolic():
    expected = 1 - 64 * (19 * PI**4 - 24 * PI**2 - 432) / (9 * PI**8)
    r = t31_lower_starlike(*PARABOLIC)
    assert r.value == pytest.approx(expected, abs=1e-12)
    assert r.mu_or_sigma == pytest.approx(6.64, abs=0.01)
    assert r.extremal_id == "f1"


def test_t31_lower_starlike_inapplicable():
    r = t31_lower_starlike(0.5, 1.0)
    assert not r.applicable
    assert r.preconditions[0].ok is False


@pytest.mark.parametrize("B1", [0.0, -1.0, 2.5, math.nan])
def test_bad_b1(B1):
    with pytest.raises(BadB1):
        t21_starlike(B1)
    with pytest.raises(BadB1):
        t31_lower_convex(B1, 0.0)


def test_bad_b2():
    with pytest.raises(BadCoefficient):
        t31_upper_starlike(1.0, math.inf)


@pytest.mark.parametrize("A,B", [(1.0, -1.0), (0.5, -0.5), (0.0, -1.0), (0.3, -0.9), (1.0, 0.0), (-0.5, -1.0)])
def test_janowski_mu_closed_form(A, B):
    mu, _ = starlike_mu(*janowski_b1_b2(A, B))
    den = 3 * A**2 - 8 * A * B + 4 * B**2 + 2 * A - 1
    assert mu == pytest.approx(4 * (A + 3) / den, rel=1e-12)


@pytest.mark.parametrize("A,B", [(1.0, -1.0), (0.5, -0.5), (0.3, -0.9), (-0.5, -1.0)])
def test_janowski_sigma_closed_form(A, B):
    sigma, _ = convex_sigma(*janowski_b1_b2(A, B))
    den = 2 * A**2 + 2 * B**2 + A + B - 5 * A * B - 1
    assert sigma == pytest.approx(2 * (A + B + 16) / den, rel=1e-12)


@pytest.mark.parametrize(
    "A,B,critical",
    [(0.0, -1.0, convex_sigma), (-1 / 3, -1.0, starlike_mu)],
)
def test_janowski_vanishing_denominator(A, B, critical):
    # (0, -1) zeroes the σ denominator, (-1/3, -1) the μ denominator
    crit, den = critical(*janowski_b1_b2(A, B))
    assert crit == math.inf
    assert abs(den) < 1e-14


@pytest.mark.parametrize(
    "bound,B1,B2,value,case,extremal",
    [
        (t31_lower_starlike, 1.0, -2.0, -2.25, "starlike-lower-degenerate", "f1"),
        (t31_lower_convex, 1.0, 1.0, 5 / 9, "convex-lower-degenerate", "f3"),
    ],
)
def test_t31_lower_degenerate(bound, B1, B2, value, case, extremal):
    r = bound(B1, B2)
    assert r.value == pytest.approx(value, abs=1e-12)
    assert r.case_label == case
    assert r.mu_or_sigma == math.inf
    assert r.sharp
    assert r.extremal_id == extremal
    assert BoundReport.from_dict(json.loads(json.dumps(r.to_dict()))) == r


def test_t31_lower_degenerate_matches_direct_minimum():
    r = t31_lower_starlike(1.0, -2.0)
    assert r.applicable
    assert r.value == pytest.approx(minimize_G_direct(1.0, -2.0)[1], abs=1e-12)


def test_convex_half_order_bounds():
    fam = FamilySpec.convex(phi_named("order", {"a": 0.5}))
    lower = bounds_for_family(fam).get("T31", "lower")
    assert lower.case_label == "convex-lower-degenerate"
    assert not lower.applicable


def test_branch_continuity_at_mu_4():
    # walk towards (1, 1), where μ = 4, from inside the interior branch
    target = t31_lower_starlike(1.0, 1.0).value
    for eps in (1e-3, 1e-5, 1e-7):
        r = t31_lower_starlike(1.0 + eps, 1.0)
        assert r.case_label == "starlike-lower-mu-interior"
        assert r.value == pytest.approx(target, abs=10 * eps)


def test_dispatch_equals_direct_minimum():
    for B1 in np.linspace(0.02, 2.0, 100):
        for B2 in np.linspace(-2.0, 2.0, 100):
            r = t31_lower_starlike(B1, B2)
            if not r.applicable:
                continue
            _, gmin = minimize_G_direct(B1, B2)
            assert r.value == pytest.approx(gmin, abs=1e-12)


def test_convex_dispatch_equals_direct_minimum():
    for B1 in np.linspace(0.02, 2.0, 60):
        for B2 in np.linspace(-2.0, 2.0, 60):
            r = t31_lower_convex(B1, B2)
            if not r.applicable:
                continue
            _, gmin = minimize_G_direct(B1, B2, family="convex")
            assert r.value == pytest.approx(gmin, abs=1e-12)


def test_lower_not_above_upper():
    for B1 in np.linspace(0.01, 2.0, 200):
        for B2 in np.linspace(-2.0, 2.0, 200):
            lo, up = t31_lower_starlike(B1, B2), t31_upper_starlike(B1, B2)
            if lo.applicable and up.applicable:
                assert lo.value <= up.value + 1e-12
            clo, cup = t31_lower_convex(B1, B2), t31_upper_convex(B1, B2)
            if clo.applicable and cup.applicable:
                assert clo.value <= cup.value + 1e-12


# ── C(φ) ──────────────────────────────────────────────────────────────────────


@pytest.mark.parametrize("B1,lower", [(2.0, 0.0), (1.0, 0.75), (1e-9, 1.0)])
def test_t21_convex(B1, lower):
    lo, hi = t21_convex(B1)
    assert lo.value == pytest.approx(lower, abs=1e-12)
    assert hi.value == 1.0


@pytest.mark.parametrize("B1,B2", [(2, 2), (1, 1), (1, 0)])
def test_t31_upper_convex(B1, B2):
    r = t31_upper_convex(B1, B2)
    assert r.value == 1.0
    assert r.extremal_id == "identity"


def test_t31_lower_convex_examples():
    koebe = t31_lower_convex(2.0, 2.0)
    assert koebe.mu_or_sigma == pytest.approx(4.0)
    assert koebe.value == pytest.approx(0.0, abs=1e-12)
    assert koebe.case_label == "convex-lower-sigma-at-4"

    sine = t31_lower_convex(1.0, 0.0)
    assert sine.mu_or_sigma == pytest.approx(17.0)
    assert sine.value == pytest.approx(5 / 9, abs=1e-12)
    assert sine.extremal_id == "f3"

    edge = t31_lower_convex(1.0, 0.5)
    assert edge.applicable


def test_t31_lower_convex_inapplicable():
    assert not t31_lower_convex(1.0, 0.6).applicable


# ── K(g) ──────────────────────────────────────────────────────────────────────


@pytest.mark.parametrize(
    "b,c,t21_lower,t31,t22",
    [
        (1, 1, -1.25, 11 / 9, 181 / 36),
        (0, 1, 0.0, 1.0, 2.0),
        (2, 3, -3.0, 8.0, 13.0),
        (1, 0, -1.25, 1.0, 145 / 36),
        (0, 0, 0.0, 1.0, 13 / 9),
    ],
)
def test_t_bounds_ctc(b, c, t21_lower, t31, t22):
    r = _ctc_values(b, c)
    assert r["T21:lower"].value == pytest.approx(t21_lower, abs=1e-12)
    assert r["T21:upper"].value == 1.0
    assert r["T31:upper"].value == pytest.approx(t31, abs=1e-12)
    assert r["ABS_T22:upper"].value == pytest.approx(t22, abs=1e-12)


def test_ctc_identity_base_fails_hypothesis():
    r = _ctc_values(0, 0)["T31:upper"]
    assert not r.applicable
    assert r.case_label == "ctc-t31-unit"


def test_ctc_t31_notes_direction():
    r = _ctc_values(1, 1)["T31:upper"]
    assert r.side == "upper"
    assert "above" in r.notes


def test_bad_ctc_coefficients():
    with pytest.raises(BadCoefficient):
        t_bounds_ctc(-1, 0)


# ── reports ───────────────────────────────────────────────────────────────────


def test_case_labels_enumerated():
    fams = [
        FamilySpec.starlike(phi_named("janowski", {"A": 1, "B": -1})),
        FamilySpec.convex(phi_named("sin")),
        FamilySpec.close_to_convex(base_named("koebe")[1], "koebe"),
    ]
    for fam in fams:
        for r in bounds_for_family(fam).reports:
            assert r.case_label in CASE_LABELS


def test_report_json_round_trip():
    fam = FamilySpec.starlike(phi_named("janowski", {"A": 1, "B": -1}))
    for r in bounds_for_family(fam).reports:
        again = BoundReport.from_dict(json.loads(json.dumps(r.to_dict())))
        assert again == r


def test_admits_and_margin():
    lo = t31_lower_starlike(1.0, 1.0)
    assert lo.admits(0.0)
    assert not lo.admits(-1e-6)
    assert lo.margin(0.5) == pytest.approx(0.5)
    up = t31_upper_starlike(2.0, 2.0)
    assert up.admits(8.0)
    assert up.margin(9.0) == pytest.approx(-1.0)
