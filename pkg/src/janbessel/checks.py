"""Closed-form sufficient conditions for Janowski membership of the series.

Every checker here evaluates finitely many inequalities in (A, B, kappa, c)
and reports a per-inequality slack (>= 0 means the inequality holds), the
branch of the condition set that applied, and free-form notes.  Checkers are
sufficient conditions: `satisfied` guarantees the geometric conclusion, while
`not satisfied` is silent, and the sampling verifier is the ground truth on
the other side.

Condition families
------------------
* Membership of u itself (check_subordination_theorem) and of the normalized
  derivative (-4 kappa / c) u' (check_derivative_theorem) share one condition
  family.  It splits into two regimes at B = 3 - 2*sqrt(2) (low-B / high-B),
  and inside each regime a guard inequality selects between an endpoint and a
  vertex bound for the same quadratic minimum.  The derivative version is the
  family with kappa in place of kappa - 1, absorbing the order shift that
  differentiation applies to the series.
* Janowski convexity of u (check_convexity_theorem) and starlikeness of
  z * u (check_starlike_theorem) share a product-versus-coupling condition.
  Both accept a `mode`:

  - "conservative" (default) demands  product >= envelope + |coupling|,
    which is what the underlying quadratic-maximum argument needs;
  - "as-printed" keeps the weaker literal variant of each condition
    (a subtracted coupling term for convexity, an unsquared envelope
    denominator for starlikeness) for comparison studies.

  The starlike condition set equals the convexity set with kappa lowered by
  one, matching the identity z (z u_p)' / (z u_p) = 1 + z u''_{p-1} / u'_{p-1}.
* check_corollary evaluates four ready-made half-plane specializations.
* mccarty_bounds evaluates three classical pointwise bounds for the modified
  spherical case (b = 2, c = -1).

The admissibility functional
----------------------------
eval_psi exposes the functional Psi whose negativity on the admissible set
{ (i rho, sigma, mu + i nu; z) : sigma <= -(1 + rho^2)/2, sigma + mu <= 0 }
is the engine behind the membership conditions: if Re Psi < 0 there, the
transformed function has positive real part, which is membership.  The
numeric verifier scans it directly; here it is a pure formula evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .bessel import BesselParams, EvalConfig, DEFAULT_CONFIG, eval_u
from .geometry import DegenerateDenominator, JanowskiPair

# The two condition regimes meet here; the boundary itself is served by the
# low-B branch (the high-B set covers it as well).
REGIME_SPLIT_B = 3.0 - 2.0 * math.sqrt(2.0)

# |observed - bound| within this counts as (boundary) equality for the
# pointwise bounds.
BOUNDARY_EQUALITY_TOL = 1e-12

# Probe invariants are checked with this much slack so probes built from
# rounded grid arithmetic are not rejected at the constraint boundary.
PROBE_SLACK = 1e-12

MODE_CONSERVATIVE = "conservative"
MODE_AS_PRINTED = "as-printed"
MODES = (MODE_CONSERVATIVE, MODE_AS_PRINTED)

PSI_SUBORDINATION = "subordination"
PSI_CONVEXITY = "convexity"
PSI_FORMS = (PSI_SUBORDINATION, PSI_CONVEXITY)

COROLLARY_HALFPLANE_C_RATIO = "halfplane-c-ratio"
COROLLARY_RE_HALF = "re-half"
COROLLARY_CC_ORDER = "cc-order"
COROLLARY_DERIV_RE_HALF = "deriv-re-half"
COROLLARY_IDS = (
    COROLLARY_HALFPLANE_C_RATIO,
    COROLLARY_RE_HALF,
    COROLLARY_CC_ORDER,
    COROLLARY_DERIV_RE_HALF,
)


class ZeroC(ValueError):
    """The derivative-side conditions are undefined at c = 0."""


class UnknownCorollary(ValueError):
    """Corollary identifier outside COROLLARY_IDS."""


@dataclass
class CheckOutcome:
    """Result of one condition checker.

    satisfied is True exactly when every slack recorded for the taken branch
    is >= 0.  branch names the condition branch that applied (for the
    two-regime family, "<regime>/<endpoint|vertex>").  implied_pair and
    conclusion_bound are filled by corollaries that fix their own region.
    """

    satisfied: bool
    branch: str
    slacks: list[tuple[str, float]]
    notes: list[str] = field(default_factory=list)
    implied_pair: JanowskiPair | None = None
    conclusion_bound: float | None = None


@dataclass(frozen=True)
class AdmissibilityProbe:
    """A point of the admissible set for eval_psi.

    Invariants (checked with PROBE_SLACK): sigma <= -(1 + rho^2)/2,
    sigma + mu <= 0, |z| < 1.  nu is unconstrained; Re Psi never depends
    on it.
    """

    rho: float
    sigma: float
    mu: float
    nu: float
    z: complex

    def __post_init__(self) -> None:
        for name in ("rho", "sigma", "mu", "nu"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"probe field {name} must be finite")
            object.__setattr__(self, name, value)
        z = complex(self.z)
        if abs(z) >= 1.0:
            raise ValueError(f"probe point z must satisfy |z| < 1, got |z| = {abs(z)}")
        object.__setattr__(self, "z", z)
        if self.sigma > -(1.0 + self.rho**2) / 2.0 + PROBE_SLACK:
            raise ValueError(
                f"probe violates sigma <= -(1 + rho^2)/2: sigma = {self.sigma}, rho = {self.rho}"
            )
        if self.sigma + self.mu > PROBE_SLACK:
            raise ValueError(
                f"probe violates sigma + mu <= 0: sigma = {self.sigma}, mu = {self.mu}"
            )


def _two_regime_conditions(
    A: float, B: float, kappa_eff: float, c: float
) -> tuple[str, list[tuple[str, float]], list[str]]:
    """Shared inequality family behind the membership checkers.

    kappa_eff is kappa - 1 for membership of u and kappa for the normalized
    derivative.  Returns (branch, slacks, notes); the guard slack is always
    >= 0 by construction (it measures distance to the branch boundary), so
    satisfaction rests on the base and main slacks.
    """
    notes: list[str] = []
    base = kappa_eff - max(0.0, (1.0 + B) * (1.0 + A) * abs(c) / (4.0 * (A - B)))
    if B <= REGIME_SPLIT_B:
        regime = "low-B"
        if B == REGIME_SPLIT_B:
            notes.append(
                "B sits exactly on the regime split; the low-B condition set is applied"
            )
        guard_lhs = abs(
            2.0 * kappa_eff * (1.0 - B) * (A + B) * c + (1.0 + B) ** 2 * (1.0 + A) * c
        )
        guard_rhs = 0.5 * (A - B) * (1.0 - B) * c * c
        mixed = (
            kappa_eff * (A + B) * c / (2.0 * (A - B))
            + (1.0 + B) ** 2 * (1.0 + A) * c / (4.0 * (1.0 - B) * (A - B))
        )
        quad = kappa_eff * kappa_eff + kappa_eff * (1.0 + B) / (1.0 - B)
    else:
        regime = "high-B"
        guard_lhs = abs(
            kappa_eff * (1.0 + B) ** 3 * (A + B) * c
            + 8.0 * B * (1.0 - B * B) * (1.0 + A) * c
        )
        guard_rhs = 0.25 * c * c * (A - B) * (1.0 + B) ** 3
        mixed = (
            kappa_eff * (A + B) * c / (2.0 * (A - B))
            + 4.0 * B * (1.0 - B * B) * (1.0 + A) * c / ((1.0 + B) ** 3 * (A - B))
        )
        quad = kappa_eff * kappa_eff + 16.0 * kappa_eff * B * (1.0 - B) / (1.0 + B) ** 3
    envelope = (1.0 - A * A) * (1.0 - B * B) * c * c / (16.0 * (A - B) ** 2)
    if guard_lhs >= guard_rhs:
        branch = "endpoint"
        guard_slack = guard_lhs - guard_rhs
        main = quad - abs(mixed) - envelope
    else:
        branch = "vertex"
        guard_slack = guard_rhs - guard_lhs
        main = 0.25 * c * c * (quad - (1.0 - A * B) ** 2 * c * c / (16.0 * (A - B) ** 2)) - mixed * mixed
    slacks = [("base", base), ("guard", guard_slack), ("main", main)]
    return f"{regime}/{branch}", slacks, notes


def _outcome_from_two_regime(
    pair: JanowskiPair, kappa_eff: float, c: float
) -> CheckOutcome:
    branch, slacks, notes = _two_regime_conditions(pair.A, pair.B, kappa_eff, c)
    satisfied = slacks[0][1] >= 0.0 and slacks[2][1] >= 0.0
    return CheckOutcome(satisfied=satisfied, branch=branch, slacks=slacks, notes=notes)


def check_subordination_theorem(
    pair: JanowskiPair, kappa: float, c: float
) -> CheckOutcome:
    """Sufficient condition for u itself to map the disk into the pair's region."""
    return _outcome_from_two_regime(pair, float(kappa) - 1.0, float(c))


def check_derivative_theorem(
    pair: JanowskiPair, kappa: float, c: float
) -> CheckOutcome:
    """Sufficient condition for (-4 kappa / c) u' to map the disk into the region.

    Same condition family as check_subordination_theorem with kappa in place
    of kappa - 1: the normalized derivative is itself a series of the same
    family with order raised by one, which shifts kappa up accordingly.
    """
    c = float(c)
    if c == 0.0:
        raise ZeroC("the normalized derivative (-4 kappa / c) u' is undefined at c = 0")
    return _outcome_from_two_regime(pair, float(kappa), c)


def _mode_guard(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def check_convexity_theorem(
    pair: JanowskiPair, kappa: float, c: float, mode: str = MODE_CONSERVATIVE
) -> CheckOutcome:
    """Sufficient condition for 1 + z u''/u' to map the disk into the region.

    Applies on pairs with -1 <= B <= 0 < A <= 1; other pairs report
    branch "out-of-regime" and are never satisfied.  The second inequality
    compares the factor product against envelope +/- |coupling| depending on
    mode; only "conservative" (envelope + |coupling|) is strong enough to
    carry the geometric conclusion.
    """
    _mode_guard(mode)
    kappa = float(kappa)
    c = float(c)
    A, B = pair.A, pair.B
    if not (B <= 0.0 < A):
        return CheckOutcome(
            satisfied=False,
            branch="out-of-regime",
            slacks=[],
            notes=[f"condition set requires -1 <= B <= 0 < A <= 1, got A={A}, B={B}"],
        )
    coeff_pos = kappa * (1.0 + B) - (
        (1.0 + B) ** 2 * abs(c) / (4.0 * (A - B)) - (1.0 + A - B)
    )
    product = (1.0 + A - B + kappa * (1.0 + B)) * (1.0 - A + B + kappa * (1.0 - B))
    envelope = (1.0 - B * B) ** 2 * c * c / (16.0 * (A - B) ** 2)
    coupling = abs(
        (B - (A - B) * (1.0 + B * B) + (1.0 - B * B) * B * kappa) * c / (2.0 * (A - B))
    )
    rhs = envelope - coupling if mode == MODE_AS_PRINTED else envelope + coupling
    slacks = [("coefficient-positivity", coeff_pos), ("product-domination", product - rhs)]
    satisfied = all(s >= 0.0 for _, s in slacks)
    return CheckOutcome(satisfied=satisfied, branch=mode, slacks=slacks)


def check_starlike_theorem(
    pair: JanowskiPair, kappa: float, c: float, mode: str = MODE_CONSERVATIVE
) -> CheckOutcome:
    """Sufficient condition for z * u to be Janowski starlike for the pair.

    Equivalent to the convexity condition set with kappa lowered by one,
    through z (z u_p)'/(z u_p) = 1 + z u''_{p-1}/u'_{p-1}; stated directly in
    (A, B, kappa, c) and valid for every admissible pair.  In "as-printed"
    mode the envelope term uses the weaker unsquared denominator 16(A - B);
    "conservative" uses 16(A - B)^2, which is what the kappa-shift of the
    convexity condition produces.
    """
    _mode_guard(mode)
    kappa = float(kappa)
    c = float(c)
    A, B = pair.A, pair.B
    coeff_pos = kappa * (1.0 + B) - (
        (1.0 + B) ** 2 * abs(c) / (4.0 * (A - B)) - (A - 2.0 * B)
    )
    product = (A - 2.0 * B + kappa * (1.0 + B)) * (2.0 * B - A + kappa * (1.0 - B))
    denom = (A - B) if mode == MODE_AS_PRINTED else (A - B) ** 2
    envelope = (1.0 - B * B) ** 2 * c * c / (16.0 * denom)
    coupling = abs(
        (B**3 - (A - B) * (1.0 + B * B) + (1.0 - B * B) * B * kappa)
        * c
        / (2.0 * (A - B))
    )
    slacks = [
        ("coefficient-positivity", coeff_pos),
        ("product-domination", product - (envelope + coupling)),
    ]
    satisfied = all(s >= 0.0 for _, s in slacks)
    return CheckOutcome(satisfied=satisfied, branch=mode, slacks=slacks)


def check_corollary(which: str, kappa: float, c: float) -> CheckOutcome:
    """Evaluate one of the four ready-made half-plane specializations.

    halfplane-c-ratio: c <= 0 and 2 kappa >= 2 + c^2  gives  Re u > c/(c-1).
    re-half:           kappa >= 1 (c <= 0) or kappa >= 1 + c/2 (c >= 0)
                       gives  Re u > 1/2.
    cc-order:          c <= -1 and kappa >= max{c(c+1)/2, c/(2(c+1))} gives
                       close-to-convexity of order (c+1)/c for the shifted
                       primitive, i.e. Re (-4 kappa/c) u' > (c+1)/c.
    deriv-re-half:     c != 0 and kappa >= |c|/2  gives  Re (-4 kappa/c) u' > 1/2.

    The implied half-plane is reported as implied_pair / conclusion_bound
    whenever it is well defined.
    """
    kappa = float(kappa)
    c = float(c)
    if which == COROLLARY_HALFPLANE_C_RATIO:
        slacks = [("c-sign", -c), ("kappa-margin", 2.0 * kappa - (2.0 + c * c))]
        satisfied = all(s >= 0.0 for _, s in slacks)
        notes: list[str] = []
        implied = None
        bound = None
        if c == 1.0:
            notes.append("implied half-plane undefined at c = 1 (bound c/(c-1) degenerates)")
        elif c <= 0.0:
            implied = JanowskiPair(A=-(c + 1.0) / (c - 1.0), B=-1.0)
            bound = c / (c - 1.0)
        else:
            notes.append("implied half-plane reported only for c <= 0")
        return CheckOutcome(
            satisfied=satisfied,
            branch="direct",
            slacks=slacks,
            notes=notes,
            implied_pair=implied,
            conclusion_bound=bound,
        )
    if which == COROLLARY_RE_HALF:
        if c <= 0.0:
            branch = "c<=0"
            slacks = [("kappa-margin", kappa - 1.0)]
        else:
            branch = "c>=0"
            slacks = [("kappa-margin", kappa - (1.0 + c / 2.0))]
        return CheckOutcome(
            satisfied=slacks[0][1] >= 0.0,
            branch=branch,
            slacks=slacks,
            implied_pair=JanowskiPair(A=0.0, B=-1.0),
            conclusion_bound=0.5,
        )
    if which == COROLLARY_CC_ORDER:
        if c > -1.0:
            return CheckOutcome(
                satisfied=False,
                branch="out-of-range",
                slacks=[("c-range", -1.0 - c)],
                notes=["requires c <= -1"],
            )
        notes = []
        if c == -1.0:
            branch = "c=-1"
            threshold = c * (c + 1.0) / 2.0
            notes.append(
                "kappa threshold term c/(2(c+1)) is undefined at c = -1 and was skipped"
            )
        else:
            branch = "c<-1"
            threshold = max(c * (c + 1.0) / 2.0, c / (2.0 * (c + 1.0)))
        slacks = [("kappa-margin", kappa - threshold)]
        return CheckOutcome(
            satisfied=slacks[0][1] >= 0.0,
            branch=branch,
            slacks=slacks,
            notes=notes,
            implied_pair=JanowskiPair(A=-(c + 2.0) / c, B=-1.0),
            conclusion_bound=(c + 1.0) / c,
        )
    if which == COROLLARY_DERIV_RE_HALF:
        if c == 0.0:
            return CheckOutcome(
                satisfied=False,
                branch="out-of-range",
                slacks=[],
                notes=["requires c != 0"],
            )
        return CheckOutcome(
            satisfied=kappa - abs(c) / 2.0 >= 0.0,
            branch="direct",
            slacks=[("kappa-margin", kappa - abs(c) / 2.0)],
            implied_pair=JanowskiPair(A=0.0, B=-1.0),
            conclusion_bound=0.5,
        )
    raise UnknownCorollary(f"unknown corollary {which!r}; expected one of {COROLLARY_IDS}")


@dataclass(frozen=True)
class BoundCheck:
    """One pointwise inequality: observed side vs closed-form bound."""

    label: str
    bound: float
    observed: float
    holds: bool


@dataclass
class McCartyBounds:
    """The three classical pointwise bounds for i_p = u_{p,2,-1}."""

    modulus: BoundCheck
    real_part: BoundCheck
    derivative: BoundCheck
    notes: list[str]

    def all_hold(self) -> bool:
        return self.modulus.holds and self.real_part.holds and self.derivative.holds


def mccarty_bounds(
    p: float, z: complex, cfg: EvalConfig = DEFAULT_CONFIG
) -> McCartyBounds:
    """Evaluate the three pointwise bounds for i_p at a disk point.

    With r = |z| and s = 2p + 3 the bounds are

        |i_p(z)|   <=  (4p + 6 + r) / (2 s (1 - r^2)),
        Re i_p(z)  >=  (p + 6 + r) / (4p + 6 + 2r + 2 s r^2),
        |i_p'(z)|  <=  (2 Re i_p(z) - 1) / (2 (1 - r^2))
                       * (r^2 + 4 s r + 1) / (s r^2 + r + s).

    The first numerator of the derivative bound is read as the balanced
    expression (2 Re i_p(z) - 1); it is positive because Re i_p > 1/2 on the
    disk for p >= -1/2.  Equality within BOUNDARY_EQUALITY_TOL counts as
    holding (all three are equalities at z = 0 when p = 0).
    """
    p = float(p)
    if p < -0.5:
        raise ValueError(f"bounds require p >= -1/2, got p = {p}")
    z = complex(z)
    r = abs(z)
    if r >= 1.0:
        raise ValueError(f"bounds require |z| < 1, got |z| = {r}")
    params = BesselParams(p=p, b=2.0, c=-1.0)
    values = eval_u(params, z, order=1, cfg=cfg).values
    ip, dip = values[0], values[1]
    s = 2.0 * p + 3.0

    bound1 = (4.0 * p + 6.0 + r) / (2.0 * s * (1.0 - r * r))
    obs1 = abs(ip)
    bound2 = (p + 6.0 + r) / (4.0 * p + 6.0 + 2.0 * r + 2.0 * s * r * r)
    obs2 = ip.real
    bound3 = (
        (2.0 * ip.real - 1.0)
        / (2.0 * (1.0 - r * r))
        * (r * r + 4.0 * s * r + 1.0)
        / (s * r * r + r + s)
    )
    obs3 = abs(dip)

    return McCartyBounds(
        modulus=BoundCheck("modulus-upper", bound1, obs1, obs1 <= bound1 + BOUNDARY_EQUALITY_TOL),
        real_part=BoundCheck("real-part-lower", bound2, obs2, obs2 >= bound2 - BOUNDARY_EQUALITY_TOL),
        derivative=BoundCheck("derivative-upper", bound3, obs3, obs3 <= bound3 + BOUNDARY_EQUALITY_TOL),
        notes=["derivative bound numerator read as the balanced (2 Re i_p(z) - 1)"],
    )


def eval_psi(
    which: str,
    pair: JanowskiPair,
    kappa: float,
    c: float,
    probe: AdmissibilityProbe,
) -> complex:
    """Evaluate the admissibility functional Psi at one probe.

    which = "subordination": the three-slot form

        Psi = t - 2(1+B) s^2 / ((1-B) + (1+B) r) + kappa s
              + ((1-B) + (1+B) r)((1-A) + (1+A) r) c z / (8 (A-B))

    at r = i rho, s = sigma, t = mu + i nu.  which = "convexity": the
    two-slot form

        Psi = s + F1 r^2 + F2 r + F3,
        F1 = (A-B)/2 + kappa (1+B)/2 + c z (1+B)^2 / (8 (A-B)),
        F2 = -(A-B) - kappa B + c (1-B^2) z / (4 (A-B)),
        F3 = (A-B)/2 - kappa (1-B)/2 + c z (1-B)^2 / (8 (A-B)),

    at r = i rho, s = sigma (mu and nu unused).  Membership conclusions rest
    on Re Psi < 0 across the whole admissible set.
    """
    kappa = float(kappa)
    c = float(c)
    A, B = pair.A, pair.B
    r = 1j * probe.rho
    z = probe.z
    if which == PSI_SUBORDINATION:
        den = (1.0 - B) + (1.0 + B) * r
        if abs(den) < 1e-14:
            raise DegenerateDenominator(
                f"subordination form has a pole at rho = {probe.rho} for B = {B}"
            )
        t = probe.mu + 1j * probe.nu
        s = probe.sigma
        return (
            t
            - 2.0 * (1.0 + B) * s * s / den
            + kappa * s
            + den * ((1.0 - A) + (1.0 + A) * r) * c * z / (8.0 * (A - B))
        )
    if which == PSI_CONVEXITY:
        f1 = (A - B) / 2.0 + kappa * (1.0 + B) / 2.0 + c * z * (1.0 + B) ** 2 / (8.0 * (A - B))
        f2 = -(A - B) - kappa * B + c * (1.0 - B * B) * z / (4.0 * (A - B))
        f3 = (A - B) / 2.0 - kappa * (1.0 - B) / 2.0 + c * z * (1.0 - B) ** 2 / (8.0 * (A - B))
        return probe.sigma + f1 * r * r + f2 * r + f3
    raise ValueError(f"unknown functional {which!r}; expected one of {PSI_FORMS}")
