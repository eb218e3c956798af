"""Disk-sampling verifier tests: membership, radii, admissibility, scans."""

import math

import numpy as np
import pytest

from janbessel import (
    AdmissibilityProbe,
    CheckOutcome,
    JanowskiPair,
    SampleGrid,
    ScanRow,
    ZeroC,
    admissibility_scan,
    check_corollary,
    check_subordination_theorem,
    eval_psi,
    make_params,
    property_radius,
    region_scan,
    scan_conflicts,
    verify_membership,
)

HALF_PAIR = JanowskiPair(0.0, -1.0)
SMALL_GRID = SampleGrid(radii=tuple(np.geomspace(0.05, 0.999, 6)), angles=16)

# Frozen expectations for the pinned fixtures (values recorded from the
# first validated run and cross-checked against a 40-digit series oracle).
I0_MIN_MARGIN = 0.3416215769019355
CEX_MIN_MARGIN = -0.473242154632326
CEX_WITNESS = 0.9461472719864245 + 0.32063427719544735j
RADIUS_FIXTURE = 0.4317012939453125
GAP_CELL_MARGIN = 0.26541772621418214
UNSOUND_CELL_MARGIN = -0.12005867698433714


def test_default_grid_shape():
    grid = SampleGrid.default()
    assert len(grid.radii) == 24 and grid.angles == 256
    assert grid.radii[0] == 0.05 and grid.radii[-1] == 0.999
    assert all(b > a for a, b in zip(grid.radii, grid.radii[1:]))
    assert grid.max_radius == 0.999


def test_grid_validation():
    with pytest.raises(ValueError):
        SampleGrid(radii=(0.5, 0.3), angles=16)
    with pytest.raises(ValueError):
        SampleGrid(radii=(0.5, 1.0), angles=16)
    with pytest.raises(ValueError):
        SampleGrid(radii=(0.5,), angles=4)
    with pytest.raises(ValueError):
        SampleGrid(radii=(), angles=16)
    with pytest.raises(ValueError):
        SampleGrid(radii=(0.5,), angles=16, max_radius=1.0)


def test_grid_points_are_radius_major():
    grid = SampleGrid(radii=(0.25, 0.75), angles=8)
    pts = grid.points()
    assert pts.shape == (16,)
    assert np.allclose(np.abs(pts[:8]), 0.25) and np.allclose(np.abs(pts[8:]), 0.75)
    assert pts[0] == 0.25 + 0j  # angle zero first


def test_modified_spherical_base_case_holds():
    report = verify_membership("u", HALF_PAIR, make_params(0.0, 2.0, -1.0))
    assert report.verdict == "holds-on-grid"
    assert abs(report.min_margin - I0_MIN_MARGIN) < 1e-14
    assert abs(report.witness.real - (-0.999)) < 1e-12
    assert abs(report.witness.imag) < 1e-12
    assert report.degeneracy_hits == []
    assert report.grid == SampleGrid.default()


def test_spherical_base_case_matches_modified_one():
    # sin(sqrt z)/sqrt z on +r equals sinh(sqrt z)/sqrt z on -r, so the two
    # grid minima coincide exactly (the grid is symmetric under negation).
    ri = verify_membership("u", HALF_PAIR, make_params(0.0, 2.0, -1.0))
    rj = verify_membership("u", HALF_PAIR, make_params(0.0, 2.0, 1.0))
    assert rj.verdict == "holds-on-grid"
    assert rj.min_margin == ri.min_margin
    assert abs(rj.witness.real - 0.999) < 1e-12


def test_constant_function_margin_is_margin_of_one():
    rep = verify_membership("u", JanowskiPair(1.0, -1.0), make_params(0.0, 2.0, 0.0))
    assert rep.verdict == "holds-on-grid" and rep.min_margin == 1.0
    rep2 = verify_membership("u", JanowskiPair(0.5, 0.0), make_params(0.0, 2.0, 0.0))
    assert rep2.min_margin == 0.5


def test_counterexample_detection_frozen_case():
    report = verify_membership("u", JanowskiPair(0.1, -1.0), make_params(-0.5, 2.0, 6.0))
    assert report.verdict == "counterexample"
    assert abs(report.min_margin - CEX_MIN_MARGIN) < 1e-14
    assert abs(report.witness - CEX_WITNESS) < 1e-12
    assert report.degeneracy_hits == []


def test_report_invariant():
    for report in (
        verify_membership("u", HALF_PAIR, make_params(0.0, 2.0, -1.0), SMALL_GRID),
        verify_membership("u", JanowskiPair(0.1, -1.0), make_params(-0.5, 2.0, 6.0), SMALL_GRID),
        verify_membership("convexity", JanowskiPair(1.0, -1.0), make_params(1.5, 2.0, 0.0), SMALL_GRID),
    ):
        is_cex = report.verdict == "counterexample"
        assert is_cex == (report.min_margin < 0.0 or bool(report.degeneracy_hits))


def test_corollary_conclusion_fails_at_strongly_negative_c():
    # Documented divergence: the printed shortcut condition (kappa >= 1 for
    # c <= 0) accepts this cell, the sampled conclusion Re u > 1/2 fails on
    # the disk, and the full theorem checker correctly rejects it.  Pinned
    # so the three verdicts cannot drift apart silently.
    assert check_corollary("re-half", 1.0, -3.0).satisfied
    assert not check_subordination_theorem(HALF_PAIR, 1.0, -3.0).satisfied
    report = verify_membership("u", HALF_PAIR, make_params(-0.5, 2.0, -3.0))
    assert report.verdict == "counterexample"
    assert abs(report.min_margin - UNSOUND_CELL_MARGIN) < 1e-14
    assert abs(report.witness.real - (-0.999)) < 1e-12


def test_documented_gap_cell_triple_verdict():
    # kappa=1, c=-1: corollary satisfied, theorem-literal not satisfied,
    # sampled membership holds.
    assert check_corollary("re-half", 1.0, -1.0).satisfied
    assert not check_subordination_theorem(HALF_PAIR, 1.0, -1.0).satisfied
    report = verify_membership("u", HALF_PAIR, make_params(-0.5, 2.0, -1.0))
    assert report.verdict == "holds-on-grid"
    assert abs(report.min_margin - GAP_CELL_MARGIN) < 1e-14


def test_convexity_selector_degenerates_wholesale_at_c_zero():
    # u' vanishes identically at c=0, so the convexity functional is
    # undefined at every sample: the report must show wall-to-wall
    # degeneracy hits and a counterexample verdict with no witness.
    report = verify_membership(
        "convexity", JanowskiPair(1.0, -1.0), make_params(1.5, 2.0, 0.0), SMALL_GRID
    )
    assert report.verdict == "counterexample"
    assert math.isnan(report.min_margin) and report.witness is None
    assert len(report.degeneracy_hits) == 6 * 16
    assert {reason for _, reason in report.degeneracy_hits} == {"zero-derivative"}


def test_deriv_selector_rejects_c_zero():
    with pytest.raises(ZeroC):
        verify_membership("deriv-normalized", HALF_PAIR, make_params(0.0, 2.0, 0.0), SMALL_GRID)


def test_unknown_selector_rejected():
    with pytest.raises(ValueError):
        verify_membership("tangent", HALF_PAIR, make_params(0.0, 2.0, -1.0), SMALL_GRID)


def test_all_selectors_on_a_well_behaved_tuple():
    params = make_params(0.5, 2.0, -1.0)  # kappa 2
    for selector in ("u", "deriv-normalized", "convexity", "starlike-zu"):
        report = verify_membership(selector, HALF_PAIR, params, SMALL_GRID)
        assert report.verdict == "holds-on-grid"
        assert report.min_margin > 0.0


def test_margins_only_sharpen_on_denser_grids():
    base = SampleGrid(radii=tuple(np.geomspace(0.05, 0.999, 12)), angles=64)
    dense_angles = SampleGrid(radii=base.radii, angles=128)
    params = make_params(-0.5, 2.0, -1.0)
    for pair in (HALF_PAIR, JanowskiPair(0.1, -1.0)):
        m0 = verify_membership("u", pair, params, base).min_margin
        m1 = verify_membership("u", pair, params, dense_angles).min_margin
        assert m1 <= m0 + 1e-9
    # Radius refinement through a superset radius list.
    extra = tuple(sorted(set(base.radii) | {0.3, 0.6, 0.9}))
    dense_radii = SampleGrid(radii=extra, angles=64)
    m0 = verify_membership("u", HALF_PAIR, params, base).min_margin
    m1 = verify_membership("u", HALF_PAIR, params, dense_radii).min_margin
    assert m1 <= m0 + 1e-9


def test_verify_membership_is_deterministic():
    a = verify_membership("u", JanowskiPair(0.1, -1.0), make_params(-0.5, 2.0, 6.0))
    b = verify_membership("u", JanowskiPair(0.1, -1.0), make_params(-0.5, 2.0, 6.0))
    assert a == b


# -------------------------------------------------------------------- radius


def test_property_radius_interior_fixture():
    r = property_radius("u", JanowskiPair(0.1, -1.0), make_params(-0.5, 2.0, 6.0), tol=1e-4)
    assert abs(r - RADIUS_FIXTURE) < 1e-12
    assert 0.1 < r < 0.9
    again = property_radius("u", JanowskiPair(0.1, -1.0), make_params(-0.5, 2.0, 6.0), tol=1e-4)
    assert again == r


def test_property_radius_cap_and_cap_monotonicity():
    params = make_params(0.0, 2.0, -1.0)
    assert property_radius("u", HALF_PAIR, params, tol=1e-4) == 0.999
    assert property_radius("u", HALF_PAIR, params, tol=1e-4, max_radius=0.9) == 0.9


def test_property_radius_zero_when_base_circle_fails():
    r = property_radius(
        "convexity", JanowskiPair(1.0, -1.0), make_params(0.5, 2.0, 0.0), grid_density=64, tol=1e-3
    )
    assert r == 0.0


def test_property_radius_denser_angles_never_grow_it():
    args = ("u", JanowskiPair(0.1, -1.0), make_params(-0.5, 2.0, 6.0))
    r256 = property_radius(*args, grid_density=256, tol=1e-4)
    r512 = property_radius(*args, grid_density=512, tol=1e-4)
    assert r512 <= r256 + 2e-4


# -------------------------------------------------------------- admissibility


def test_admissibility_scan_satisfied_tuple():
    mx, arg = admissibility_scan("subordination", HALF_PAIR, 2.0, -1.0)
    assert abs(mx - (-0.2625)) < 1e-15
    assert mx < 0.0
    assert arg.rho == 0.0 and arg.sigma == -0.5 and arg.mu == 0.5
    assert abs(arg.z.real - (-0.95)) < 1e-12 and abs(arg.z.imag) < 1e-12


def test_admissibility_scan_large_kappa():
    mx, _ = admissibility_scan("subordination", HALF_PAIR, 50.0, -1.0)
    assert mx < -20.0
    assert abs(mx - (-24.2625)) < 1e-12


def test_admissibility_reference_probe_is_on_grid():
    # The scan grid contains (rho=0, sigma=-1/2, mu=0, z=0), whose Psi value
    # is exactly -1; the scan maximum can therefore never sit below -1.
    probe = AdmissibilityProbe(rho=0.0, sigma=-0.5, mu=0.0, nu=0.0, z=0j)
    assert eval_psi("subordination", HALF_PAIR, 2.0, -1.0, probe) == (-1 + 0j)
    mx, _ = admissibility_scan("subordination", HALF_PAIR, 2.0, -1.0)
    assert mx >= -1.0


def test_admissibility_scan_convexity_form():
    mx, arg = admissibility_scan("convexity", JanowskiPair(1.0, -1.0), 3.0, 0.0)
    assert mx == -2.5
    assert arg.rho == 0.0 and arg.sigma == -0.5 and arg.mu == 0.0 and arg.z == 0j


def test_admissibility_scan_validation():
    with pytest.raises(ValueError):
        admissibility_scan("subordination", HALF_PAIR, 2.0, -1.0, rho_max=0.0)
    with pytest.raises(ValueError):
        admissibility_scan("subordination", HALF_PAIR, 2.0, -1.0, sigma_depth=1)


def test_satisfied_tuples_are_admissible():
    # The proof route behind the membership checker: whenever the closed-form
    # condition holds, the Psi functional must stay strictly negative.
    rng = np.random.default_rng(97)
    found = 0
    while found < 20:
        B = rng.uniform(-1.0, 0.8)
        A = rng.uniform(B + 0.05, 1.0)
        pair = JanowskiPair(A, B)
        kappa = rng.uniform(1.0, 8.0)
        c = rng.uniform(-3.0, 3.0)
        if not check_subordination_theorem(pair, kappa, c).satisfied:
            continue
        found += 1
        mx, _ = admissibility_scan("subordination", pair, kappa, c)
        assert mx < 0.0, (A, B, kappa, c, mx)


# --------------------------------------------------------------------- scans


def test_region_scan_cardinality_and_row_order():
    rows = region_scan("u", HALF_PAIR, (1.0, 2.0, 3), (-1.0, 0.0, 2), SMALL_GRID)
    assert [(r.kappa, r.c) for r in rows] == [
        (1.0, -1.0),
        (1.0, 0.0),
        (1.5, -1.0),
        (1.5, 0.0),
        (2.0, -1.0),
        (2.0, 0.0),
    ]
    assert scan_conflicts(rows) == []


def test_region_scan_headline_sweep():
    rows = region_scan("u", HALF_PAIR, (1.0, 5.0, 9), (-3.0, 0.0, 7), SMALL_GRID)
    assert len(rows) == 63
    assert scan_conflicts(rows) == []
    cell = next(r for r in rows if r.kappa == 1.0 and r.c == -1.0)
    assert not cell.checker.satisfied
    assert cell.corollary_id == "re-half" and cell.corollary.satisfied
    assert cell.report.verdict == "holds-on-grid"


def test_region_scan_worker_determinism():
    kwargs = dict(
        selector="u",
        pair=HALF_PAIR,
        kappa_range=(1.0, 3.0, 5),
        c_range=(-2.0, -0.5, 4),
        grid=SMALL_GRID,
    )
    serial = region_scan(**kwargs, workers=1)
    threaded = region_scan(**kwargs, workers=4)
    assert serial == threaded


def test_region_scan_corollary_matching():
    rows = region_scan(
        "deriv-normalized", HALF_PAIR, (0.5, 1.5, 2), (-2.0, -1.0, 2), SMALL_GRID
    )
    assert all(r.corollary_id == "deriv-re-half" for r in rows)
    rows2 = region_scan(
        "u", JanowskiPair(0.5, -0.5), (1.0, 2.0, 2), (-2.0, -1.0, 2), SMALL_GRID
    )
    assert all(r.corollary_id is None and r.corollary is None for r in rows2)


def test_region_scan_validates_steps():
    with pytest.raises(ValueError):
        region_scan("u", HALF_PAIR, (1.0, 2.0, 1), (-1.0, 0.0, 2), SMALL_GRID)


def test_scan_conflicts_flags_satisfied_counterexamples():
    rows = region_scan("u", HALF_PAIR, (1.0, 2.0, 2), (-3.0, -1.0, 2), SMALL_GRID)
    assert scan_conflicts(rows) == []  # checker is honest on these cells
    fake = ScanRow(
        kappa=1.0,
        c=-3.0,
        checker=CheckOutcome(satisfied=True, branch="synthetic", slacks=[]),
        corollary_id=None,
        corollary=None,
        report=next(r for r in rows if r.c == -3.0 and r.kappa == 1.0).report,
    )
    assert scan_conflicts(rows + [fake]) == [fake]
