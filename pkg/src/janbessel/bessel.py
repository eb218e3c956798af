"""Generalized Bessel-type power series on the closed unit disk.

The central object is the normalized analytic function

    u(z) = sum_{k>=0} (-c/4)^k / ((kappa)_k * k!) * z^k,   kappa = p + (b+1)/2,

where (kappa)_k is the rising factorial.  The series converges for every
finite z and every kappa outside {0, -1, -2, ...}; evaluation here is
restricted to |z| <= 1 where the library's geometric questions live.  u
solves the order-reduced differential equation

    4 z^2 u'' + 4 kappa z u' + c z u = 0

and satisfies the order-shift identity 4 kappa u_p' = -c u_{p+1}, where
u_{p+1} denotes the series with p replaced by p+1.  Both identities are
exposed as residuals so callers can cross-check an evaluation through an
independent route; neither is used as the evaluation path itself.

Two classical specializations pin down the normalization: for b = 2, c = 1
the series equals sin(sqrt(z))/sqrt(z) at p = 0, and for b = 2, c = -1 it
equals sinh(sqrt(z))/sqrt(z).  The parameter b enters only through kappa,
so triples with equal (kappa, c) define the same function.

Derivatives up to third order come from term-wise differentiation of one
pass over the series.  Truncation uses a two-consecutive-small-terms rule:
summation stops once every requested series has produced two successive
terms below rel_tol * max(1, |partial sum|).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Constructor rejects kappa this close to a non-positive integer (series poles).
KAPPA_EXCLUSION_TOL = 1e-9
# Evaluation admits a whisker beyond the closed disk so boundary studies at
# |z| = 1 survive rounding in the caller's radius arithmetic.
DISK_SLACK = 1e-9

MAX_ORDER = 3


class InvalidKappa(ValueError):
    """kappa = p + (b+1)/2 collides with a pole of the coefficient sequence."""


class NoConvergence(RuntimeError):
    """The truncation rule was not met within the configured term budget."""


@dataclass(frozen=True)
class BesselParams:
    """Parameter triple (p, b, c) with derived kappa = p + (b+1)/2.

    All three entries must be finite reals; complex input is rejected.
    Construction fails with InvalidKappa when kappa lies within
    KAPPA_EXCLUSION_TOL of {0, -1, -2, ...}.
    """

    p: float
    b: float
    c: float

    def __post_init__(self) -> None:
        for name in ("p", "b", "c"):
            value = getattr(self, name)
            if isinstance(value, complex):
                raise TypeError(f"parameter {name} must be real, got complex")
            value = float(value)
            if not math.isfinite(value):
                raise ValueError(f"parameter {name} must be finite, got {value}")
            object.__setattr__(self, name, value)
        kappa = self.kappa
        nearest = round(kappa)
        if nearest <= 0 and abs(kappa - nearest) <= KAPPA_EXCLUSION_TOL:
            raise InvalidKappa(
                f"kappa = {kappa} is within {KAPPA_EXCLUSION_TOL} of the "
                f"excluded value {nearest}"
            )

    @property
    def kappa(self) -> float:
        return self.p + (self.b + 1.0) / 2.0

    def shifted(self, delta: float = 1.0) -> "BesselParams":
        """Same (b, c) with p moved by delta; revalidates the new kappa."""
        return BesselParams(self.p + delta, self.b, self.c)


def make_params(p: float, b: float, c: float) -> BesselParams:
    """Validating factory for BesselParams."""
    return BesselParams(p, b, c)


@dataclass(frozen=True)
class EvalConfig:
    """Series truncation policy.

    rel_tol scales against max(1, |partial sum|), so near-zero sums are
    judged on an absolute scale.  max_terms caps the summation; hitting the
    cap raises NoConvergence rather than returning a silent truncation.
    """

    rel_tol: float = 1e-14
    max_terms: int = 300

    def __post_init__(self) -> None:
        if not (0.0 < self.rel_tol < 1.0):
            raise ValueError(f"rel_tol must lie in (0, 1), got {self.rel_tol}")
        if self.max_terms < 4:
            raise ValueError(f"max_terms must be at least 4, got {self.max_terms}")


DEFAULT_CONFIG = EvalConfig()


@dataclass
class EvalResult:
    """values[j] is the j-th derivative at z; terms_used counts summed terms."""

    values: list[complex]
    terms_used: int
    truncation_estimate: float


def _check_disk(z: complex) -> complex:
    z = complex(z)
    if abs(z) > 1.0 + DISK_SLACK:
        raise ValueError(f"evaluation is restricted to |z| <= 1, got |z| = {abs(z)}")
    return z


def eval_u(
    params: BesselParams,
    z: complex,
    order: int = 0,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> EvalResult:
    """Evaluate u and its derivatives up to `order` (0..3) at a disk point.

    A single pass accumulates all requested series; the term for the j-th
    derivative at index k is k(k-1)...(k-j+1) * a_k * z^(k-j) with a_k the
    series coefficient.  Stops after two consecutive indices whose terms are
    all below tolerance; raises NoConvergence at the term cap.
    """
    if order not in range(MAX_ORDER + 1):
        raise ValueError(f"order must be one of 0..{MAX_ORDER}, got {order}")
    z = _check_disk(z)
    kappa = params.kappa
    ratio_num = -params.c / 4.0

    sums = [0j] * (order + 1)
    # zpow[j] holds z^(k-j); entries are only read once k >= j.
    zpow = [1.0 + 0j, 0j, 0j, 0j]
    coef = 1.0
    below_streak = 0
    last_term0 = 1.0

    for k in range(cfg.max_terms):
        if k > 0:
            coef *= ratio_num / ((kappa + k - 1.0) * k)
            zpow[3] = zpow[2]
            zpow[2] = zpow[1]
            zpow[1] = zpow[0]
            zpow[0] = zpow[0] * z
        all_below = True
        for j in range(order + 1):
            if k < j:
                continue
            fall = 1.0
            for i in range(j):
                fall *= k - i
            term = (fall * coef) * zpow[j]
            sums[j] += term
            mag = abs(term)
            if j == 0:
                last_term0 = mag
            if mag > cfg.rel_tol * max(1.0, abs(sums[j])):
                all_below = False
        below_streak = below_streak + 1 if all_below else 0
        if below_streak >= 2:
            return EvalResult(
                values=list(sums),
                terms_used=k + 1,
                truncation_estimate=last_term0,
            )
    raise NoConvergence(
        f"series did not settle within {cfg.max_terms} terms "
        f"(kappa={kappa}, c={params.c}, |z|={abs(z)})"
    )


def eval_u_many(
    params: BesselParams,
    zs: np.ndarray,
    order: int = 0,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> tuple[np.ndarray, int]:
    """Vectorized eval_u over a 1-d array of disk points.

    Returns (values, terms_used) with values of shape (order+1, len(zs)).
    The stopping rule is applied jointly: summation continues until two
    consecutive indices are below tolerance at every point and every
    requested derivative, so all points share one truncation index and a
    fixed input array always produces bit-identical output.
    """
    if order not in range(MAX_ORDER + 1):
        raise ValueError(f"order must be one of 0..{MAX_ORDER}, got {order}")
    zs = np.asarray(zs, dtype=complex)
    if zs.ndim != 1:
        raise ValueError("zs must be a 1-d array")
    if zs.size == 0:
        raise ValueError("zs must be non-empty")
    if np.any(np.abs(zs) > 1.0 + DISK_SLACK):
        raise ValueError("evaluation is restricted to |z| <= 1")

    kappa = params.kappa
    ratio_num = -params.c / 4.0
    n = zs.size
    sums = np.zeros((order + 1, n), dtype=complex)
    zpow = np.zeros((MAX_ORDER + 1, n), dtype=complex)
    zpow[0] = 1.0
    coef = 1.0
    below_streak = 0

    for k in range(cfg.max_terms):
        if k > 0:
            coef *= ratio_num / ((kappa + k - 1.0) * k)
            zpow[3] = zpow[2]
            zpow[2] = zpow[1]
            zpow[1] = zpow[0]
            zpow[0] = zpow[0] * zs
        all_below = True
        for j in range(order + 1):
            if k < j:
                continue
            fall = 1.0
            for i in range(j):
                fall *= k - i
            term = (fall * coef) * zpow[j]
            sums[j] += term
            bound = cfg.rel_tol * np.maximum(1.0, np.abs(sums[j]))
            if np.any(np.abs(term) > bound):
                all_below = False
        below_streak = below_streak + 1 if all_below else 0
        if below_streak >= 2:
            return sums, k + 1
    raise NoConvergence(
        f"series did not settle within {cfg.max_terms} terms "
        f"(kappa={kappa}, c={params.c}, batch of {n} points)"
    )


def ode_residual(
    params: BesselParams,
    z: complex,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> complex:
    """Residual of 4 z^2 u'' + 4 kappa z u' + c z u at z (zero in exact arithmetic)."""
    z = _check_disk(z)
    result = eval_u(params, z, order=2, cfg=cfg)
    u0, u1, u2 = result.values
    return 4.0 * z * z * u2 + 4.0 * params.kappa * z * u1 + params.c * z * u0


def recurrence_residual(
    params: BesselParams,
    z: complex,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> complex:
    """Residual of the order-shift identity 4 kappa u_p' = -c u_{p+1} at z."""
    z = _check_disk(z)
    shifted = params.shifted(1.0)
    du = eval_u(params, z, order=1, cfg=cfg).values[1]
    u_next = eval_u(shifted, z, order=0, cfg=cfg).values[0]
    return 4.0 * params.kappa * du + params.c * u_next
