"""Command-line entry point: verify, expand, constants, theta.

Exit codes: 0 success, 1 at least one failed check, 2 bad input or domain
violation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import clifford, constants, gauge, invariants, theta
from .checks import LOWER, REGISTRY, run_suite
from .config import ConfigError, load_config
from .gauge import GaugeConfig, build_connection
from .geometry import TetradField, spin_connection
from .invariants import ChiOperator, vacuum_quadruplet
from .polyfield import PolyField
from .sampling import check_rng, probe_points

EXPAND_TARGETS = ("phi-L", "phi-R", "phi-V", "chi-U", "chi-V", "dirac")


def _emit(payload, as_json):
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2))
        return
    for row in payload.get("rows", []):
        print(row["text"])


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------

def cmd_verify(args):
    try:
        cfg = load_config(args.config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    if args.seed is not None:
        cfg["probes"]["seed"] = args.seed
    if args.trials is not None:
        cfg["trials"]["tetrads"] = args.trials
        cfg["trials"]["gauge_configs"] = args.trials
    only = args.only or None
    try:
        report = run_suite(cfg, only=only, tol_scale=args.tol_scale)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(report.to_json())
    else:
        print(report.render_text())
    return 0 if report.overall_pass else 1


# ----------------------------------------------------------------------
# expand
# ----------------------------------------------------------------------

def _series_rows(entries):
    rows = []
    for order, label, computed, predicted in entries:
        text = (f"order {order}  {label:<38} computed {computed:+.12e}"
                f"   predicted {predicted:+.12e}")
        rows.append({"order": order, "label": label,
                     "computed": computed, "predicted": predicted, "text": text})
    return rows


def _expand_phi(cfg, basis):
    rng = check_rng(cfg["probes"]["seed"], f"expand:phi-{basis}")
    flat = TetradField.flat()
    gs = clifford.build_gammas(flat, basis=basis)
    section = cfg["gauge"]
    gc = GaugeConfig.random(rng, degree=section["degree"], amplitude=section["amplitude"],
                            g1=section["g1"], g2=section["g2"])
    conn = build_connection(gc, spin_connection(flat), basis)
    rho = gauge.curvature_poly(conn)
    x = probe_points(rng, 1, cfg["probes"]["box"])[0]
    series = invariants.sqrt_phi_series_at(gs, rho, x, order=4)
    w_ab, b_ab = gauge.field_strengths(gc)
    wv = np.array([[[w_ab[k][a][b].evaluate(x).real for b in range(4)]
                    for a in range(4)] for k in range(3)])
    bv = np.array([[b_ab[a][b].evaluate(x).real for b in range(4)] for a in range(4)])
    ww = float(np.einsum("kab,kcd,ac,bd->", wv, wv, LOWER, LOWER))
    bb = float(np.einsum("ab,cd,ac,bd->", bv, bv, LOWER, LOWER))
    if basis == "L":
        predicted4 = (1.0 / 320.0) * (gc.g1**2 * ww + gc.g2**2 * bb)
    else:
        predicted4 = (1.0 / 80.0) * gc.g2**2 * bb
    entries = [
        (0, "volume density sqrt(-g)", series.coefficient(0).real, 1.0),
        (2, "curvature trace (EH slot, flat frame)", series.coefficient(2).real, 0.0),
        (4, "field-strength quadratic term", series.coefficient(4).real, predicted4),
    ]
    return {"target": f"phi-{basis}", "rows": _series_rows(entries)}


def _expand_phi_v(cfg):
    rng = check_rng(cfg["probes"]["seed"], "expand:phi-V")
    pts = probe_points(rng, 4, cfg["probes"]["box"])
    tet = TetradField.random_perturbation(rng, degree=cfg["tetrad"]["degree"],
                                          amplitude=cfg["tetrad"]["amplitude"],
                                          validate_points=pts)
    gs = clifford.build_gammas(tet, basis="V")
    x = pts[0]
    series = invariants.sqrt_phi_series_at(gs, None, x, order=4)
    sqrtg = math.sqrt(-np.linalg.det(tet.metric_at(x)).real)
    entries = [(0, "volume density sqrt(-g)", series.coefficient(0).real, sqrtg)]
    for k in range(1, 5):
        entries.append((k, "vanishing order", abs(series.coefficient(k)), 0.0))
    return {"target": "phi-V", "rows": _series_rows(entries)}


def _expand_chi_u(cfg):
    rng = check_rng(cfg["probes"]["seed"], "expand:chi-U")
    section = cfg["gauge"]
    w_vals = rng.uniform(-1.0, 1.0, size=(3, 4))
    b_vals = rng.uniform(-1.0, 1.0, size=4)
    gc = GaugeConfig.constant(w_vals, b_vals, g1=section["g1"], g2=section["g2"])
    conn = build_connection(gc, None, "U")
    p, q = cfg["scalars"]["p"], cfg["scalars"]["q"]
    series = ChiOperator(conn).sandwich(vacuum_quadruplet(p, q), order=4)
    got2 = series.coefficient(2)
    got2 = got2.evaluate((0, 0, 0, 0)).real if isinstance(got2, PolyField) else float(got2)

    def dot(u, v):
        return float(u @ LOWER @ v)

    part_w = -0.125 * gc.g1**2 * (dot(w_vals[0], w_vals[0]) + dot(w_vals[1], w_vals[1]))
    mixed = gc.g1 * w_vals[2] - gc.g2 * b_vals
    part_mix = -0.125 * dot(mixed, mixed)
    entries = [
        (0, "normalized vacuum sandwich", 1.0, 1.0),
        (2, "charged-boson mass group", got2 - part_mix, part_w),
        (2, "neutral mixing mass group", got2 - part_w, part_mix),
        (2, "total second-order coefficient", got2, part_w + part_mix),
    ]
    return {"target": "chi-U", "rows": _series_rows(entries)}


def _expand_chi_v(cfg):
    rng = check_rng(cfg["probes"]["seed"], "expand:chi-V")
    v_field = PolyField.random(rng, degree=cfg["scalars"]["v_degree"],
                               block_shape=(4,), amplitude=1.0)
    conn = build_connection(GaugeConfig.zero(), None, "V")
    series = ChiOperator(conn).sandwich(v_field, order=4, normalized=False)
    x = probe_points(rng, 1, cfg["probes"]["box"])[0]
    vbar = v_field.conjugate()
    lap = None
    for a in range(4):
        for b in range(4):
            if LOWER[a, b] == 0:
                continue
            term = LOWER[a, b] * (vbar * v_field.differentiate(a).differentiate(b))
            lap = term if lap is None else lap + term
    predicted0 = (vbar * v_field).evaluate(x).real
    predicted2 = 0.5 * lap.evaluate(x).real
    got0 = series.coefficient(0).evaluate(x).real
    got2 = series.coefficient(2).evaluate(x).real
    entries = [
        (0, "scalar norm times sqrt(-g)", got0, predicted0),
        (2, "half-Laplacian sandwich", got2, predicted2),
    ]
    return {"target": "chi-V", "rows": _series_rows(entries)}


def _expand_dirac(cfg):
    rng = check_rng(cfg["probes"]["seed"], "expand:dirac")
    flat = TetradField.flat()
    gs = clifford.build_gammas(flat, basis="R")
    psi = PolyField.random(rng, degree=cfg["spinors"]["degree"],
                           block_shape=(4,), amplitude=1.0)
    lhs, rhs, residual = invariants.dirac_leading_term(gs, None, psi)
    slope = invariants.dirac_slope_fit(gs, None, psi)
    entries = [
        (1, "kinetic-term match residual", residual, 0.0),
        (1, "fitted proportionality slope", slope, 2.0),
    ]
    return {"target": "dirac", "rows": _series_rows(entries)}


def cmd_expand(args):
    try:
        cfg = load_config(args.config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    if args.target not in EXPAND_TARGETS:
        print(f"unknown target {args.target!r}; choose from {EXPAND_TARGETS}",
              file=sys.stderr)
        return 2
    if args.target in ("phi-L", "phi-R"):
        payload = _expand_phi(cfg, args.target[-1])
    elif args.target == "phi-V":
        payload = _expand_phi_v(cfg)
    elif args.target == "chi-U":
        payload = _expand_chi_u(cfg)
    elif args.target == "chi-V":
        payload = _expand_chi_v(cfg)
    else:
        payload = _expand_dirac(cfg)
    _emit(payload, args.json)
    return 0


# ----------------------------------------------------------------------
# constants / theta
# ----------------------------------------------------------------------

def cmd_constants(args):
    try:
        inputs = constants.load_inputs(args.inputs)
        derived = constants.derive_constants(inputs)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    fields = ["ell_sq", "ell", "ell_over_planck", "lambda_l", "lambda_r",
              "lambda_u", "lambda_v", "p_sq_plus_q_sq"]
    if args.json:
        payload = {"inputs_version": inputs.version,
                   "values": {f: getattr(derived, f) for f in fields},
                   "units": constants.UNITS}
        print(json.dumps(payload, sort_keys=True, indent=2))
        return 0
    print(f"inputs: {inputs.version}")
    for f in fields:
        print(f"{f:<16} {getattr(derived, f):+.9e}  [{constants.UNITS[f]}]")
    return 0


def cmd_theta(args):
    try:
        if args.w3_inf is not None or args.b0_inf is not None:
            if None in (args.w3_inf, args.b0_inf, args.g1, args.g2, args.ell):
                raise ValueError("potential mode needs --w3-inf --b0-inf --g1 --g2 --ell")
            match = theta.theta_from_asymptotic_potentials(
                args.w3_inf, args.b0_inf, args.g1, args.g2, args.ell)
            payload = {"theta_left": match.theta_left, "theta_right": match.theta_right,
                       "consistent": match.consistent}
        else:
            if None in (args.energy, args.charge, args.theta):
                raise ValueError("transform mode needs --energy --charge --theta")
            state = theta.ChargeEnergyState(energy=args.energy, charge=args.charge,
                                            ell=args.ell or 1.0, hbar=args.hbar)
            out = theta.transform_energy_charge(state, args.theta)
            payload = {"energy": out.energy, "charge": out.charge,
                       "quadratic_form": out.quadratic_form(),
                       "quadratic_form_in": state.quadratic_form()}
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")
    return 0


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="biaction",
        description="Verify the identity suite of the Born-Infeld-type "
                    "gravity/electroweak action at desk scale.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the identity check suite")
    p_verify.add_argument("--config", default=None, help="JSON config path")
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--trials", type=int, default=None,
                          help="override per-check trial counts")
    p_verify.add_argument("--tol-scale", type=float, default=1.0)
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--only", action="append", metavar="CHECK_ID",
                          help=f"subset of: {', '.join(sorted(REGISTRY))}")
    p_verify.set_defaults(func=cmd_verify)

    p_expand = sub.add_parser("expand", help="print a density expansion table")
    p_expand.add_argument("target", choices=EXPAND_TARGETS)
    p_expand.add_argument("--config", default=None)
    p_expand.add_argument("--json", action="store_true")
    p_expand.set_defaults(func=cmd_expand)

    p_const = sub.add_parser("constants", help="print the derived constants")
    p_const.add_argument("--inputs", default=None, help="physical-inputs JSON path")
    p_const.add_argument("--json", action="store_true")
    p_const.set_defaults(func=cmd_constants)

    p_theta = sub.add_parser("theta", help="energy/charge rotation utilities")
    p_theta.add_argument("--energy", type=float, default=None)
    p_theta.add_argument("--charge", type=float, default=None)
    p_theta.add_argument("--theta", type=float, default=None)
    p_theta.add_argument("--ell", type=float, default=None)
    p_theta.add_argument("--hbar", type=float, default=1.0)
    p_theta.add_argument("--w3-inf", type=float, default=None, dest="w3_inf")
    p_theta.add_argument("--b0-inf", type=float, default=None, dest="b0_inf")
    p_theta.add_argument("--g1", type=float, default=None)
    p_theta.add_argument("--g2", type=float, default=None)
    p_theta.set_defaults(func=cmd_theta)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
