"""Command-line front end.

Verbs
-----
    eval           series values and derivatives at one disk point
    check          one sufficient-condition checker (theorem or corollary)
    verify         sampled membership test of a property functional
    radius         bisected property radius for a functional
    scan           (kappa, c) region sweep; JSON or CSV output
    admissibility  grid maximum of Re Psi over the admissible set
    bounds         the three pointwise bounds for i_p at a disk point

Every verb prints a JSON envelope {schema_version, command, timestamp,
payload} to stdout (or --output PATH); `scan --format csv` prints bare CSV
instead.  Complex values are written as "re,im"; ranges as "lo:hi:steps".
Values starting with a dash need the --flag=value form.

Exit codes: 0 success with a holding/satisfied verdict (or no verdict);
1 clean completion with a negative verdict (not satisfied, counterexample,
scan soundness conflicts, nonnegative admissibility maximum, zero radius);
2 usage errors; 3 numeric failures (invalid kappa, series non-convergence).

The payload for fixed flags is deterministic: reruns differ only in the
timestamp field.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Callable, TextIO

import numpy as np

from .bessel import (
    BesselParams,
    DEFAULT_CONFIG,
    EvalConfig,
    InvalidKappa,
    NoConvergence,
    eval_u,
)
from .checks import (
    COROLLARY_IDS,
    MODE_CONSERVATIVE,
    MODES,
    CheckOutcome,
    McCartyBounds,
    UnknownCorollary,
    ZeroC,
    check_convexity_theorem,
    check_corollary,
    check_derivative_theorem,
    check_starlike_theorem,
    check_subordination_theorem,
    mccarty_bounds,
)
from .geometry import DegenerateDenominator, JanowskiPair, OrderOutOfRange
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

SCHEMA_VERSION = "1"

THEOREM_NAMES = ("subordination", "derivative", "convexity", "starlike")

CSV_HEADER = "kappa,c,checker,branch,corollary,numeric,min_margin,witness_re,witness_im"


class UsageError(ValueError):
    """Bad flag combination or malformed flag value."""


@dataclass
class ReportEnvelope:
    """The JSON document every verb emits."""

    schema_version: str
    command: dict
    timestamp: str
    payload: dict

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema_version": self.schema_version,
                "command": self.command,
                "timestamp": self.timestamp,
                "payload": self.payload,
            },
            indent=2,
        )


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"complex values use the form 're,im', got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise UsageError(f"bad complex value {text!r}: {exc}") from exc


def _parse_range(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"ranges use the form 'lo:hi:steps', got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}: {exc}") from exc


def _complex_list(z: complex) -> list[float]:
    return [z.real, z.imag]


def _pair_list(pair: JanowskiPair) -> list[float]:
    return [pair.A, pair.B]


def _params_dict(params: BesselParams) -> dict:
    return {"p": params.p, "b": params.b, "c": params.c, "kappa": params.kappa}


def _outcome_dict(outcome: CheckOutcome) -> dict:
    return {
        "satisfied": outcome.satisfied,
        "branch": outcome.branch,
        "slacks": [[label, value] for label, value in outcome.slacks],
        "notes": list(outcome.notes),
        "implied_pair": None if outcome.implied_pair is None else _pair_list(outcome.implied_pair),
        "conclusion_bound": outcome.conclusion_bound,
    }


def _grid_dict(grid: SampleGrid) -> dict:
    return {
        "radii": list(grid.radii),
        "angles": grid.angles,
        "max_radius": grid.max_radius,
    }


def _report_dict(report: VerificationReport) -> dict:
    return {
        "selector": report.selector,
        "pair": _pair_list(report.pair),
        "params": _params_dict(report.params),
        "verdict": report.verdict,
        "min_margin": report.min_margin,
        "witness": None if report.witness is None else _complex_list(report.witness),
        "grid": _grid_dict(report.grid),
        "degeneracy_hits": [
            [_complex_list(z), reason] for z, reason in report.degeneracy_hits
        ],
    }


def _row_dict(row: ScanRow) -> dict:
    return {
        "kappa": row.kappa,
        "c": row.c,
        "checker": _outcome_dict(row.checker),
        "corollary_id": row.corollary_id,
        "corollary": None if row.corollary is None else _outcome_dict(row.corollary),
        "numeric": row.report.verdict,
        "min_margin": row.report.min_margin,
        "witness": None if row.report.witness is None else _complex_list(row.report.witness),
    }


def _g17(x: float) -> str:
    return format(float(x), ".17g")


def emit_scan_csv(rows: list[ScanRow], sink: TextIO) -> None:
    """Write scan rows as CSV with round-trip-exact floats.

    The full document is built before anything is written, so a failure
    cannot leave a partial file; an empty row list is an error.
    """
    if not rows:
        raise ValueError("refusing to emit a CSV with no scan rows")
    lines = [CSV_HEADER]
    for row in rows:
        if row.corollary is None:
            corollary = "n/a"
        else:
            corollary = "true" if row.corollary.satisfied else "false"
        witness = row.report.witness
        w_re = witness.real if witness is not None else math.nan
        w_im = witness.imag if witness is not None else math.nan
        lines.append(
            ",".join(
                [
                    _g17(row.kappa),
                    _g17(row.c),
                    "true" if row.checker.satisfied else "false",
                    row.checker.branch,
                    corollary,
                    row.report.verdict,
                    _g17(row.report.min_margin),
                    _g17(w_re),
                    _g17(w_im),
                ]
            )
        )
    sink.write("\n".join(lines) + "\n")


def _eval_config(ns: argparse.Namespace) -> EvalConfig:
    return EvalConfig(rel_tol=ns.rel_tol, max_terms=ns.max_terms)


def _add_eval_config_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--rel-tol", type=float, default=DEFAULT_CONFIG.rel_tol,
                     help="series truncation tolerance")
    sub.add_argument("--max-terms", type=int, default=DEFAULT_CONFIG.max_terms,
                     help="series term budget")


def _add_params_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p", type=float, required=True, help="series order parameter")
    sub.add_argument("--b", type=float, required=True, help="series family parameter")
    sub.add_argument("--c", type=float, required=True, help="series scale parameter")


def _add_pair_flags(sub: argparse.ArgumentParser, required: bool = True) -> None:
    sub.add_argument("--A", type=float, required=required, default=None,
                     help="region parameter A")
    sub.add_argument("--B", type=float, required=required, default=None,
                     help="region parameter B")


def _add_grid_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--radii", type=int, default=24,
                     help="number of geometrically spaced sample radii")
    sub.add_argument("--angles", type=int, default=256,
                     help="angles per sampled circle")
    sub.add_argument("--min-radius", type=float, default=0.05,
                     help="innermost sample radius")
    sub.add_argument("--max-radius", type=float, default=0.999,
                     help="outermost sample radius / radius cap")


def _grid_from_flags(ns: argparse.Namespace) -> SampleGrid:
    if ns.radii < 1:
        raise UsageError(f"--radii must be >= 1, got {ns.radii}")
    if not (0.0 < ns.min_radius <= ns.max_radius < 1.0):
        raise UsageError(
            f"need 0 < --min-radius <= --max-radius < 1, got {ns.min_radius}, {ns.max_radius}"
        )
    radii = tuple(np.geomspace(ns.min_radius, ns.max_radius, ns.radii))
    return SampleGrid(radii=radii, angles=ns.angles, max_radius=ns.max_radius)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="janbessel",
        description="Generalized Bessel series and Janowski-region membership tools",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_eval = sub.add_parser("eval", help="evaluate the series at a point")
    _add_params_flags(p_eval)
    p_eval.add_argument("--z", type=_parse_complex, required=True, help="point 're,im'")
    p_eval.add_argument("--order", type=int, default=0, help="highest derivative (0..3)")
    _add_eval_config_flags(p_eval)
    p_eval.add_argument("--output", default=None, help="write the report here instead of stdout")

    p_check = sub.add_parser("check", help="run one sufficient-condition checker")
    group = p_check.add_mutually_exclusive_group(required=True)
    group.add_argument("--theorem", choices=THEOREM_NAMES, default=None)
    group.add_argument("--corollary", choices=COROLLARY_IDS, default=None)
    _add_pair_flags(p_check, required=False)
    p_check.add_argument("--kappa", type=float, required=True)
    p_check.add_argument("--c", type=float, required=True)
    p_check.add_argument("--mode", choices=MODES, default=MODE_CONSERVATIVE,
                         help="condition variant for convexity/starlike")
    p_check.add_argument("--output", default=None)

    p_verify = sub.add_parser("verify", help="sampled membership test")
    p_verify.add_argument("--selector", choices=SELECTORS, required=True)
    _add_pair_flags(p_verify)
    _add_params_flags(p_verify)
    _add_grid_flags(p_verify)
    _add_eval_config_flags(p_verify)
    p_verify.add_argument("--output", default=None)

    p_radius = sub.add_parser("radius", help="bisected property radius")
    p_radius.add_argument("--selector", choices=SELECTORS, required=True)
    _add_pair_flags(p_radius)
    _add_params_flags(p_radius)
    p_radius.add_argument("--grid-density", type=int, default=256,
                          help="angles per tested circle")
    p_radius.add_argument("--tol", type=float, default=1e-4, help="bisection tolerance")
    p_radius.add_argument("--max-radius", type=float, default=0.999)
    _add_eval_config_flags(p_radius)
    p_radius.add_argument("--output", default=None)

    p_scan = sub.add_parser("scan", help="sweep a (kappa, c) rectangle")
    p_scan.add_argument("--selector", choices=SELECTORS, required=True)
    _add_pair_flags(p_scan)
    p_scan.add_argument("--kappa-range", type=_parse_range, required=True,
                        help="'lo:hi:steps'")
    p_scan.add_argument("--c-range", type=_parse_range, required=True,
                        help="'lo:hi:steps'")
    _add_grid_flags(p_scan)
    _add_eval_config_flags(p_scan)
    p_scan.add_argument("--workers", type=int, default=1)
    p_scan.add_argument("--mode", choices=MODES, default=MODE_CONSERVATIVE)
    p_scan.add_argument("--format", choices=("json", "csv"), default="json")
    p_scan.add_argument("--output", default=None)

    p_adm = sub.add_parser("admissibility", help="grid maximum of Re Psi")
    p_adm.add_argument("--which", choices=("subordination", "convexity"), required=True)
    _add_pair_flags(p_adm)
    p_adm.add_argument("--kappa", type=float, required=True)
    p_adm.add_argument("--c", type=float, required=True)
    p_adm.add_argument("--rho-max", type=float, default=8.0)
    p_adm.add_argument("--sigma-depth", type=int, default=4)
    p_adm.add_argument("--output", default=None)

    p_bounds = sub.add_parser("bounds", help="pointwise bounds for i_p")
    p_bounds.add_argument("--p", type=float, required=True)
    p_bounds.add_argument("--z", type=_parse_complex, required=True)
    _add_eval_config_flags(p_bounds)
    p_bounds.add_argument("--output", default=None)

    return parser


def _cmd_eval(ns: argparse.Namespace) -> tuple[dict, int]:
    params = BesselParams(ns.p, ns.b, ns.c)
    result = eval_u(params, ns.z, order=ns.order, cfg=_eval_config(ns))
    payload = {
        "params": _params_dict(params),
        "z": _complex_list(ns.z),
        "order": ns.order,
        "values": [_complex_list(v) for v in result.values],
        "terms_used": result.terms_used,
        "truncation_estimate": result.truncation_estimate,
    }
    return payload, 0


def _cmd_check(ns: argparse.Namespace) -> tuple[dict, int]:
    if ns.corollary is not None:
        if ns.A is not None or ns.B is not None:
            raise UsageError("corollaries fix their own pair; drop --A/--B")
        outcome = check_corollary(ns.corollary, ns.kappa, ns.c)
        payload = {
            "check": ns.corollary,
            "pair": None,
            "kappa": ns.kappa,
            "c": ns.c,
            "outcome": _outcome_dict(outcome),
        }
        return payload, 0 if outcome.satisfied else 1
    if ns.A is None or ns.B is None:
        raise UsageError("theorem checks need --A and --B")
    pair = JanowskiPair(A=ns.A, B=ns.B)
    if ns.theorem == "subordination":
        outcome = check_subordination_theorem(pair, ns.kappa, ns.c)
    elif ns.theorem == "derivative":
        outcome = check_derivative_theorem(pair, ns.kappa, ns.c)
    elif ns.theorem == "convexity":
        outcome = check_convexity_theorem(pair, ns.kappa, ns.c, mode=ns.mode)
    else:
        outcome = check_starlike_theorem(pair, ns.kappa, ns.c, mode=ns.mode)
    payload = {
        "check": ns.theorem,
        "pair": _pair_list(pair),
        "kappa": ns.kappa,
        "c": ns.c,
        "mode": ns.mode if ns.theorem in ("convexity", "starlike") else None,
        "outcome": _outcome_dict(outcome),
    }
    return payload, 0 if outcome.satisfied else 1


def _cmd_verify(ns: argparse.Namespace) -> tuple[dict, int]:
    pair = JanowskiPair(A=ns.A, B=ns.B)
    params = BesselParams(ns.p, ns.b, ns.c)
    report = verify_membership(
        ns.selector, pair, params, grid=_grid_from_flags(ns), cfg=_eval_config(ns)
    )
    return _report_dict(report), 0 if report.verdict == "holds-on-grid" else 1


def _cmd_radius(ns: argparse.Namespace) -> tuple[dict, int]:
    pair = JanowskiPair(A=ns.A, B=ns.B)
    params = BesselParams(ns.p, ns.b, ns.c)
    radius = property_radius(
        ns.selector,
        pair,
        params,
        grid_density=ns.grid_density,
        tol=ns.tol,
        max_radius=ns.max_radius,
        cfg=_eval_config(ns),
    )
    payload = {
        "selector": ns.selector,
        "pair": _pair_list(pair),
        "params": _params_dict(params),
        "radius": radius,
        "tol": ns.tol,
        "grid_density": ns.grid_density,
        "max_radius": ns.max_radius,
    }
    return payload, 0 if radius > 0.0 else 1


def _cmd_scan(ns: argparse.Namespace) -> tuple[dict | str, int]:
    pair = JanowskiPair(A=ns.A, B=ns.B)
    rows = region_scan(
        ns.selector,
        pair,
        ns.kappa_range,
        ns.c_range,
        grid=_grid_from_flags(ns),
        cfg=_eval_config(ns),
        workers=ns.workers,
        mode=ns.mode,
    )
    conflicts = scan_conflicts(rows)
    code = 1 if conflicts else 0
    if ns.format == "csv":
        sink = io.StringIO()
        emit_scan_csv(rows, sink)
        return sink.getvalue(), code
    payload = {
        "selector": ns.selector,
        "pair": _pair_list(pair),
        "mode": ns.mode,
        "kappa_range": list(ns.kappa_range),
        "c_range": list(ns.c_range),
        "workers": ns.workers,
        "conflicts": len(conflicts),
        "rows": [_row_dict(row) for row in rows],
    }
    return payload, code


def _cmd_admissibility(ns: argparse.Namespace) -> tuple[dict, int]:
    pair = JanowskiPair(A=ns.A, B=ns.B)
    max_re, probe = admissibility_scan(
        ns.which, pair, ns.kappa, ns.c, rho_max=ns.rho_max, sigma_depth=ns.sigma_depth
    )
    payload = {
        "which": ns.which,
        "pair": _pair_list(pair),
        "kappa": ns.kappa,
        "c": ns.c,
        "rho_max": ns.rho_max,
        "sigma_depth": ns.sigma_depth,
        "max_re": max_re,
        "argmax": {
            "rho": probe.rho,
            "sigma": probe.sigma,
            "mu": probe.mu,
            "nu": probe.nu,
            "z": _complex_list(probe.z),
        },
    }
    return payload, 0 if max_re < 0.0 else 1


def _bound_dict(bounds: McCartyBounds) -> dict:
    rows = [bounds.modulus, bounds.real_part, bounds.derivative]
    return {
        "checks": [
            {
                "label": row.label,
                "bound": row.bound,
                "observed": row.observed,
                "holds": row.holds,
            }
            for row in rows
        ],
        "notes": list(bounds.notes),
        "all_hold": bounds.all_hold(),
    }


def _cmd_bounds(ns: argparse.Namespace) -> tuple[dict, int]:
    bounds = mccarty_bounds(ns.p, ns.z, cfg=_eval_config(ns))
    payload = {"p": ns.p, "z": _complex_list(ns.z)}
    payload.update(_bound_dict(bounds))
    return payload, 0 if bounds.all_hold() else 1


_HANDLERS: dict[str, Callable[[argparse.Namespace], tuple[dict | str, int]]] = {
    "eval": _cmd_eval,
    "check": _cmd_check,
    "verify": _cmd_verify,
    "radius": _cmd_radius,
    "scan": _cmd_scan,
    "admissibility": _cmd_admissibility,
    "bounds": _cmd_bounds,
}


def run(argv: list[str] | None = None) -> int:
    """Parse argv, run the verb, emit the report; returns the exit code."""
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2

    try:
        result, code = _HANDLERS[ns.verb](ns)
    except (InvalidKappa, NoConvergence, DegenerateDenominator) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (UsageError, ZeroC, UnknownCorollary, OrderOutOfRange, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if isinstance(result, str):
        text = result
    else:
        envelope = ReportEnvelope(
            schema_version=SCHEMA_VERSION,
            command={"verb": ns.verb, "argv": argv},
            timestamp=datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"),
            payload=result,
        )
        text = envelope.to_json() + "\n"

    if ns.output is not None:
        with open(ns.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
