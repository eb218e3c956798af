"""Generalized Bessel-type series and Janowski-class membership tools.

The package has four layers: `bessel` evaluates the series and its
derivatives, `geometry` describes the Janowski target regions, `checks`
evaluates closed-form sufficient conditions for membership, and `verify`
tests the same memberships by sampling the unit disk.  `cli` exposes all of
it as the `janbessel` command.
"""

from .bessel import (
    BesselParams,
    DEFAULT_CONFIG,
    EvalConfig,
    EvalResult,
    InvalidKappa,
    NoConvergence,
    eval_u,
    eval_u_many,
    make_params,
    ode_residual,
    recurrence_residual,
)
from .checks import (
    AdmissibilityProbe,
    BoundCheck,
    CheckOutcome,
    COROLLARY_IDS,
    McCartyBounds,
    MODE_AS_PRINTED,
    MODE_CONSERVATIVE,
    REGIME_SPLIT_B,
    UnknownCorollary,
    ZeroC,
    check_convexity_theorem,
    check_corollary,
    check_derivative_theorem,
    check_starlike_theorem,
    check_subordination_theorem,
    eval_psi,
    mccarty_bounds,
)
from .geometry import (
    DISK,
    DegenerateDenominator,
    HALF_PLANE,
    JanowskiPair,
    OrderOutOfRange,
    TargetRegion,
    contains,
    mobius,
    pair_from_order,
    region_margin,
    region_margin_many,
    target_region,
)
from .verify import (
    SELECTORS,
    SampleGrid,
    ScanRow,
    VerificationReport,
    admissibility_scan,
    property_radius,
    region_scan,
    scan_conflicts,
    verify_membership,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityProbe",
    "BesselParams",
    "BoundCheck",
    "CheckOutcome",
    "COROLLARY_IDS",
    "DEFAULT_CONFIG",
    "DISK",
    "DegenerateDenominator",
    "HALF_PLANE",
    "EvalConfig",
    "EvalResult",
    "InvalidKappa",
    "JanowskiPair",
    "McCartyBounds",
    "MODE_AS_PRINTED",
    "MODE_CONSERVATIVE",
    "NoConvergence",
    "OrderOutOfRange",
    "REGIME_SPLIT_B",
    "SELECTORS",
    "SampleGrid",
    "ScanRow",
    "TargetRegion",
    "UnknownCorollary",
    "VerificationReport",
    "ZeroC",
    "admissibility_scan",
    "check_convexity_theorem",
    "check_corollary",
    "check_derivative_theorem",
    "check_starlike_theorem",
    "check_subordination_theorem",
    "contains",
    "eval_psi",
    "eval_u",
    "eval_u_many",
    "make_params",
    "mccarty_bounds",
    "mobius",
    "ode_residual",
    "pair_from_order",
    "property_radius",
    "recurrence_residual",
    "region_margin",
    "region_margin_many",
    "region_scan",
    "scan_conflicts",
    "target_region",
    "verify_membership",
]
