"""Sampling-based ground truth for the membership claims.

The checkers in `checks` assert sufficient conditions; this module tests the
conclusions themselves by brute force.  Four property functionals of the
series u are supported, all normalized to 1 at z = 0:

    u               the function itself,
    deriv-normalized  (-4 kappa / c) u',
    convexity       1 + z u'' / u',
    starlike-zu     z (z u)' / (z u) = 1 + z u' / u.

verify_membership samples a polar grid of the unit disk, maps every sample
through the functional, and reports the minimum signed margin against the
pair's target region together with the witness point attaining it.  Points
where a functional denominator (u' for convexity, u for starlike-zu) falls
below DEGENERACY_TOL, or where the proof-side denominator (1+B) w - (1+A)
does, are recorded as degeneracy hits and excluded from the margin; any hit
makes the verdict "counterexample" because a nondegeneracy hypothesis failed.

property_radius bisects for the largest sampled radius on which membership
holds.  Testing one circle per radius suffices: over a closed sub-disk the
margin's minimum is attained on the bounding circle (Re w is harmonic and
|w - center| is subharmonic), so the circle is the binding set.

admissibility_scan maximizes Re Psi over a grid of the admissible set
(sigma at depth multiples of its bound, mu between 0 and -sigma, nu = 0
since Re Psi never depends on nu); a negative maximum corroborates the sufficient
conditions' engine.  region_scan sweeps a (kappa, c) rectangle and pairs the
checker verdict, any applicable corollary verdict, and the sampled verdict
cell by cell.

Determinism: grids are fixed by their parameters, ties resolve to the first
grid point in radius-major order, and thread workers only partition whole
cells, so identical inputs give bit-identical results at any worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bessel import BesselParams, EvalConfig, DEFAULT_CONFIG, eval_u_many
from .checks import (
    COROLLARY_CC_ORDER,
    COROLLARY_DERIV_RE_HALF,
    COROLLARY_HALFPLANE_C_RATIO,
    COROLLARY_RE_HALF,
    MODE_CONSERVATIVE,
    PSI_FORMS,
    PSI_SUBORDINATION,
    AdmissibilityProbe,
    CheckOutcome,
    ZeroC,
    check_convexity_theorem,
    check_corollary,
    check_derivative_theorem,
    check_starlike_theorem,
    check_subordination_theorem,
)
from .geometry import JanowskiPair, TargetRegion, region_margin_many, target_region

SELECTOR_U = "u"
SELECTOR_DERIV = "deriv-normalized"
SELECTOR_CONVEXITY = "convexity"
SELECTOR_STARLIKE = "starlike-zu"
SELECTORS = (SELECTOR_U, SELECTOR_DERIV, SELECTOR_CONVEXITY, SELECTOR_STARLIKE)

VERDICT_HOLDS = "holds-on-grid"
VERDICT_COUNTEREXAMPLE = "counterexample"

# Denominators (functional or proof-side) below this are degeneracies.
DEGENERACY_TOL = 1e-13

# The witness neighbourhood is resampled at this fraction of the angular step.
REFINE_FACTOR = 16


@dataclass(frozen=True)
class SampleGrid:
    """Polar sampling grid: every radius crossed with equispaced angles."""

    radii: tuple[float, ...]
    angles: int
    max_radius: float = 0.999

    def __post_init__(self) -> None:
        radii = tuple(float(r) for r in self.radii)
        if not radii:
            raise ValueError("grid needs at least one radius")
        if any(not (0.0 < r < 1.0) for r in radii):
            raise ValueError("grid radii must lie strictly inside (0, 1)")
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise ValueError("grid radii must be strictly increasing")
        if int(self.angles) != self.angles or self.angles < 8:
            raise ValueError(f"need at least 8 angles, got {self.angles}")
        if not (0.0 < self.max_radius < 1.0):
            raise ValueError(f"max_radius must lie in (0, 1), got {self.max_radius}")
        object.__setattr__(self, "radii", radii)
        object.__setattr__(self, "angles", int(self.angles))
        object.__setattr__(self, "max_radius", float(self.max_radius))

    @staticmethod
    def default() -> "SampleGrid":
        return SampleGrid(radii=tuple(np.geomspace(0.05, 0.999, 24)), angles=256)

    def points(self) -> np.ndarray:
        """All grid points, radius-major (all angles of radii[0] first)."""
        theta = 2.0 * np.pi * np.arange(self.angles) / self.angles
        ring = np.exp(1j * theta)
        return (np.asarray(self.radii)[:, None] * ring[None, :]).ravel()


@dataclass
class VerificationReport:
    """Outcome of one sampled membership test.

    verdict is "counterexample" exactly when min_margin < 0 or any
    degeneracy was hit; otherwise "holds-on-grid".  witness is the sample
    attaining min_margin (None only if every sample was degenerate).
    """

    selector: str
    pair: JanowskiPair
    params: BesselParams
    verdict: str
    min_margin: float
    witness: complex | None
    grid: SampleGrid
    degeneracy_hits: list[tuple[complex, str]]


def _functional_values(
    selector: str,
    params: BesselParams,
    zs: np.ndarray,
    cfg: EvalConfig,
) -> tuple[np.ndarray, np.ndarray, str]:
    """Map samples through the selected functional.

    Returns (w, degenerate_mask, reason).  Degenerate entries of w carry the
    placeholder 1 and must be ignored by the caller.
    """
    if selector == SELECTOR_U:
        values, _ = eval_u_many(params, zs, order=0, cfg=cfg)
        return values[0], np.zeros(zs.size, dtype=bool), ""
    if selector == SELECTOR_DERIV:
        if params.c == 0.0:
            raise ZeroC("the deriv-normalized functional is undefined at c = 0")
        values, _ = eval_u_many(params, zs, order=1, cfg=cfg)
        return (-4.0 * params.kappa / params.c) * values[1], np.zeros(zs.size, dtype=bool), ""
    if selector == SELECTOR_CONVEXITY:
        values, _ = eval_u_many(params, zs, order=2, cfg=cfg)
        den = values[1]
        mask = np.abs(den) < DEGENERACY_TOL
        safe = np.where(mask, 1.0, den)
        w = np.where(mask, 1.0, 1.0 + zs * values[2] / safe)
        return w, mask, "zero-derivative"
    if selector == SELECTOR_STARLIKE:
        values, _ = eval_u_many(params, zs, order=1, cfg=cfg)
        den = values[0]
        mask = np.abs(den) < DEGENERACY_TOL
        safe = np.where(mask, 1.0, den)
        w = np.where(mask, 1.0, 1.0 + zs * values[1] / safe)
        return w, mask, "zero-value"
    raise ValueError(f"unknown selector {selector!r}; expected one of {SELECTORS}")


def _margins_and_hits(
    selector: str,
    pair: JanowskiPair,
    region: TargetRegion,
    params: BesselParams,
    zs: np.ndarray,
    cfg: EvalConfig,
) -> tuple[np.ndarray, list[tuple[complex, str]]]:
    """Margins with degenerate samples excluded (set to +inf) and recorded."""
    w, mask, reason = _functional_values(selector, params, zs, cfg)
    hits = [(complex(z), reason) for z in zs[mask]]
    # Denominator of the proof-side transformed function; a zero would void
    # the nondegeneracy hypothesis behind the checkers.
    proof_mask = (np.abs((1.0 + pair.B) * w - (1.0 + pair.A)) < DEGENERACY_TOL) & ~mask
    hits.extend((complex(z), "proof-map-pole") for z in zs[proof_mask])
    margins = region_margin_many(region, w)
    margins = np.where(mask | proof_mask, np.inf, margins)
    return margins, hits


def verify_membership(
    selector: str,
    pair: JanowskiPair,
    params: BesselParams,
    grid: SampleGrid | None = None,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Test the functional's region membership on a polar sample of the disk.

    The minimum margin and its witness come from the base grid (ties resolve
    to the first point in radius-major order); one angular refinement pass
    then resamples the witness circle at 1/REFINE_FACTOR of the angular step
    and keeps whatever smaller margin it finds.
    """
    if grid is None:
        grid = SampleGrid.default()
    region = target_region(pair)
    zs = grid.points()
    margins, hits = _margins_and_hits(selector, pair, region, params, zs, cfg)

    if not np.isfinite(margins).any():
        return VerificationReport(
            selector=selector,
            pair=pair,
            params=params,
            verdict=VERDICT_COUNTEREXAMPLE,
            min_margin=math.nan,
            witness=None,
            grid=grid,
            degeneracy_hits=hits,
        )

    idx = int(np.argmin(margins))
    min_margin = float(margins[idx])
    witness = complex(zs[idx])

    # Local angular refinement around the witness.
    i_radius, i_angle = divmod(idx, grid.angles)
    theta = 2.0 * np.pi * i_angle / grid.angles
    dtheta = 2.0 * np.pi / grid.angles
    offsets = np.array([k for k in range(-REFINE_FACTOR, REFINE_FACTOR + 1) if k != 0])
    local = grid.radii[i_radius] * np.exp(1j * (theta + offsets * dtheta / REFINE_FACTOR))
    local_margins, _ = _margins_and_hits(selector, pair, region, params, local, cfg)
    j = int(np.argmin(local_margins))
    if local_margins[j] < min_margin:
        min_margin = float(local_margins[j])
        witness = complex(local[j])

    verdict = VERDICT_COUNTEREXAMPLE if (hits or min_margin < 0.0) else VERDICT_HOLDS
    return VerificationReport(
        selector=selector,
        pair=pair,
        params=params,
        verdict=verdict,
        min_margin=min_margin,
        witness=witness,
        grid=grid,
        degeneracy_hits=hits,
    )


def property_radius(
    selector: str,
    pair: JanowskiPair,
    params: BesselParams,
    grid_density: int = 256,
    tol: float = 1e-4,
    max_radius: float = 0.999,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> float:
    """Largest sampled radius (within tol) on which membership holds.

    Bisects on the circle radius; a circle is feasible when no sample is
    degenerate and every margin is strictly positive.  Returns 0.0 when even
    r = 0.01 fails and max_radius when the cap itself is feasible.
    """
    if grid_density < 8:
        raise ValueError(f"need at least 8 angles per circle, got {grid_density}")
    if not (0.0 < tol < 1.0):
        raise ValueError(f"tol must lie in (0, 1), got {tol}")
    if not (0.01 < max_radius < 1.0):
        raise ValueError(f"max_radius must lie in (0.01, 1), got {max_radius}")
    region = target_region(pair)
    ring = np.exp(2j * np.pi * np.arange(grid_density) / grid_density)

    def feasible(r: float) -> bool:
        margins, hits = _margins_and_hits(selector, pair, region, params, r * ring, cfg)
        if hits:
            return False
        return float(np.min(margins)) > 0.0

    if not feasible(0.01):
        return 0.0
    if feasible(max_radius):
        return max_radius
    lo, hi = 0.01, max_radius
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if feasible(mid):
            lo = mid
        else:
            hi = mid
    return lo


def admissibility_scan(
    which: str,
    pair: JanowskiPair,
    kappa: float,
    c: float,
    rho_max: float = 8.0,
    sigma_depth: int = 4,
    z_grid: SampleGrid | None = None,
) -> tuple[float, AdmissibilityProbe]:
    """Maximize Re Psi over a grid of the admissible set.

    rho runs over 201 uniform points of [-rho_max, rho_max]; sigma takes the
    values -s (1 + rho^2)/2 for s = 1, 1.5, ..., (sigma_depth values); for the
    subordination form mu runs over {0, -sigma/2, -sigma}; nu is fixed at 0
    since Re Psi does not involve it.  The z samples are the origin plus the
    points of z_grid (default: radii 0.25/0.5/0.75/0.95 with 16 angles).
    Returns (max Re Psi, probe attaining it).
    """
    if which not in PSI_FORMS:
        raise ValueError(f"unknown functional {which!r}; expected one of {PSI_FORMS}")
    if not (rho_max > 0.0):
        raise ValueError(f"rho_max must be positive, got {rho_max}")
    if sigma_depth < 2:
        raise ValueError(f"sigma_depth must be at least 2, got {sigma_depth}")
    if z_grid is None:
        z_grid = SampleGrid(radii=(0.25, 0.5, 0.75, 0.95), angles=16)

    kappa = float(kappa)
    c = float(c)
    A, B = pair.A, pair.B
    rhos = np.linspace(-rho_max, rho_max, 201)
    zs = np.concatenate([np.zeros(1, dtype=complex), z_grid.points()])
    R = 1j * rhos[:, None]
    Z = zs[None, :]
    s_factors = [1.0 + 0.5 * i for i in range(sigma_depth)]
    m_factors = [0.0, 0.5, 1.0] if which == PSI_SUBORDINATION else [0.0]

    best = -math.inf
    best_probe: AdmissibilityProbe | None = None
    for s_fac in s_factors:
        sigma = -s_fac * (1.0 + rhos**2) / 2.0
        S = sigma[:, None]
        for m_fac in m_factors:
            if which == PSI_SUBORDINATION:
                den = (1.0 - B) + (1.0 + B) * R
                psi = (
                    (-m_fac) * S
                    - 2.0 * (1.0 + B) * S * S / den
                    + kappa * S
                    + den * ((1.0 - A) + (1.0 + A) * R) * c * Z / (8.0 * (A - B))
                )
            else:
                f1 = (A - B) / 2.0 + kappa * (1.0 + B) / 2.0 + c * Z * (1.0 + B) ** 2 / (8.0 * (A - B))
                f2 = -(A - B) - kappa * B + c * (1.0 - B * B) * Z / (4.0 * (A - B))
                f3 = (A - B) / 2.0 - kappa * (1.0 - B) / 2.0 + c * Z * (1.0 - B) ** 2 / (8.0 * (A - B))
                psi = S + f1 * R * R + f2 * R + f3
            re = np.real(psi)
            flat = int(np.argmax(re))
            value = float(re.flat[flat])
            if value > best:
                i, j = divmod(flat, re.shape[1])
                best = value
                best_probe = AdmissibilityProbe(
                    rho=float(rhos[i]),
                    sigma=float(sigma[i]),
                    mu=float(-m_fac * sigma[i]),
                    nu=0.0,
                    z=complex(zs[j]),
                )
    assert best_probe is not None
    return best, best_probe


@dataclass
class ScanRow:
    """One cell of a region scan: checker vs corollary vs sampled verdict."""

    kappa: float
    c: float
    checker: CheckOutcome
    corollary_id: str | None
    corollary: CheckOutcome | None
    report: VerificationReport


# b enters the series only through kappa, so scans fix the customary b = 2
# and recover p from the requested kappa.
SCAN_B = 2.0


def _params_for_kappa(kappa: float, c: float) -> BesselParams:
    return BesselParams(p=kappa - (SCAN_B + 1.0) / 2.0, b=SCAN_B, c=c)


def _matching_corollary(selector: str, pair: JanowskiPair, c: float) -> str | None:
    """Corollary whose implied half-plane region coincides with the pair.

    Fixed-pair corollaries (re-half family) take precedence over the
    c-dependent ones when both would match.
    """
    if pair.B != -1.0:
        return None
    if selector == SELECTOR_U:
        if abs(pair.A) < 1e-12:
            return COROLLARY_RE_HALF
        if c <= 0.0 and abs(pair.A - (-(c + 1.0) / (c - 1.0))) < 1e-12:
            return COROLLARY_HALFPLANE_C_RATIO
    elif selector == SELECTOR_DERIV:
        if abs(pair.A) < 1e-12:
            return COROLLARY_DERIV_RE_HALF
        if c <= -1.0 and abs(pair.A - (-(c + 2.0) / c)) < 1e-12:
            return COROLLARY_CC_ORDER
    return None


def _checker_outcome(
    selector: str, pair: JanowskiPair, kappa: float, c: float, mode: str
) -> CheckOutcome:
    if selector == SELECTOR_U:
        return check_subordination_theorem(pair, kappa, c)
    if selector == SELECTOR_DERIV:
        return check_derivative_theorem(pair, kappa, c)
    if selector == SELECTOR_CONVEXITY:
        return check_convexity_theorem(pair, kappa, c, mode=mode)
    if selector == SELECTOR_STARLIKE:
        return check_starlike_theorem(pair, kappa, c, mode=mode)
    raise ValueError(f"unknown selector {selector!r}; expected one of {SELECTORS}")


def region_scan(
    selector: str,
    pair: JanowskiPair,
    kappa_range: tuple[float, float, int],
    c_range: tuple[float, float, int],
    grid: SampleGrid | None = None,
    cfg: EvalConfig = DEFAULT_CONFIG,
    workers: int = 1,
    mode: str = MODE_CONSERVATIVE,
) -> list[ScanRow]:
    """Sweep a (kappa, c) rectangle; rows are row-major (kappa outer, c inner).

    Each range is (lo, hi, steps) mapped to numpy.linspace.  Worker threads
    partition whole cells and results are collected in submission order, so
    the row list is identical at any worker count.
    """
    if grid is None:
        grid = SampleGrid.default()
    k_lo, k_hi, k_steps = kappa_range
    c_lo, c_hi, c_steps = c_range
    if int(k_steps) < 2 or int(c_steps) < 2:
        raise ValueError("ranges need at least two steps per axis")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    kappas = np.linspace(float(k_lo), float(k_hi), int(k_steps))
    cs = np.linspace(float(c_lo), float(c_hi), int(c_steps))
    cells = [(float(k), float(c)) for k in kappas for c in cs]

    def run_cell(cell: tuple[float, float]) -> ScanRow:
        kappa, c = cell
        checker = _checker_outcome(selector, pair, kappa, c, mode)
        corollary_id = _matching_corollary(selector, pair, c)
        corollary = (
            check_corollary(corollary_id, kappa, c) if corollary_id is not None else None
        )
        report = verify_membership(
            selector, pair, _params_for_kappa(kappa, c), grid=grid, cfg=cfg
        )
        return ScanRow(
            kappa=kappa,
            c=c,
            checker=checker,
            corollary_id=corollary_id,
            corollary=corollary,
            report=report,
        )

    if workers == 1:
        return [run_cell(cell) for cell in cells]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_cell, cells))


def scan_conflicts(rows: list[ScanRow]) -> list[ScanRow]:
    """Rows where a satisfied checker met a sampled counterexample (unsound)."""
    return [
        row
        for row in rows
        if row.checker.satisfied and row.report.verdict == VERDICT_COUNTEREXAMPLE
    ]
