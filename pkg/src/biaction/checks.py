"""The identity-check registry behind the verification CLI.

Every check draws its own randomness from a seed derived off the master seed
and the check id, so adding or removing a check never perturbs another one's
draws.  Expected-value coefficients live in per-check expectation tables that
a config may override; that is the negative-control harness guarding against
vacuous checks.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field, replace

import numpy as np

from . import clifford, constants, gauge, geometry, invariants, theta
from .config import config_digest
from .gauge import GaugeConfig, build_connection
from .geometry import SpinConnection, TetradField, spin_connection
from .invariants import ChiOperator, vacuum_quadruplet
from .operators import gamma_operators, pi_operators
from .polyfield import PolyField
from .report import CheckRecord, VerificationReport
from .sampling import check_rng, probe_points

LOWER = np.diag([1.0, -1.0, -1.0, -1.0])


@dataclass
class CheckSpec:
    fn: object
    claim: str
    tolerance: float
    expectations: dict = field(default_factory=dict)


@dataclass
class CheckContext:
    cfg: dict
    rng: object
    tolerance: float
    expect: dict

    def probes(self, count=None):
        section = self.cfg["probes"]
        return probe_points(self.rng, count or section["count"], section["box"])


REGISTRY: dict[str, CheckSpec] = {}


def register(check_id, claim, tolerance, expectations=None):
    def deco(fn):
        REGISTRY[check_id] = CheckSpec(fn=fn, claim=claim, tolerance=tolerance,
                                       expectations=dict(expectations or {}))
        return fn

    return deco


# ----------------------------------------------------------------------
# shared draw helpers
# ----------------------------------------------------------------------

def _random_tetrad(ctx, pts):
    section = ctx.cfg["tetrad"]
    for _ in range(50):
        try:
            return TetradField.random_perturbation(
                ctx.rng, degree=section["degree"], amplitude=section["amplitude"],
                validate_points=pts)
        except geometry.DegenerateTetradError:
            continue
    raise RuntimeError("could not draw a nondegenerate tetrad")


def _geometry_tetrads(ctx, pts):
    eps = ctx.cfg["tetrad"]["conformal_eps"]
    out = [TetradField.flat(), TetradField.conformal(eps)]
    for _ in range(ctx.cfg["trials"]["geometry_tetrads"]):
        out.append(_random_tetrad(ctx, pts))
    return out


def _scalar_value(coeff):
    if isinstance(coeff, PolyField):
        return coeff.evaluate((0.0, 0.0, 0.0, 0.0))
    if isinstance(coeff, (int, float)) and coeff == 0:
        return 0j
    return complex(coeff)


def _eta_dot(u, v):
    return float(u @ LOWER @ v)


# ----------------------------------------------------------------------
# Clifford sector
# ----------------------------------------------------------------------

@register("clifford-anticommutator",
          "Dirac anticommutator reproduces the metric pointwise",
          tolerance=1e-10)
def _check_clifford(ctx):
    pts = ctx.probes()
    worst = 0.0
    n = ctx.cfg["trials"]["tetrads"]
    for i in range(n):
        tet = _random_tetrad(ctx, pts)
        basis = "L" if i % 5 == 0 else "R"
        gs = clifford.build_gammas(tet, basis=basis)
        worst = max(worst, max(clifford.clifford_residuals(gs, pts)))
    return n * len(pts), worst, {"tetrads": n}


@register("quartic-gamma-identity",
          "triple epsilon contraction equals 10 det(g) gamma^[h gamma^d]",
          tolerance=1e-9)
def _check_myform(ctx):
    pts = ctx.probes()
    worst = 0.0
    n = ctx.cfg["trials"]["tetrads"]
    for _ in range(n):
        tet = _random_tetrad(ctx, pts)
        gs = clifford.build_gammas(tet, basis="R")
        worst = max(worst, max(clifford.myform_residuals(gs, pts)))
    return n * len(pts), worst, {"tetrads": n}


@register("raised-index-contractions",
          "contravariant Dirac fields close the mixed contractions",
          tolerance=1e-11)
def _check_raised(ctx):
    pts = ctx.probes()
    worst = 0.0
    for _ in range(5):
        tet = _random_tetrad(ctx, pts)
        gs = clifford.build_gammas(tet, basis="R")
        worst = max(worst, max(clifford.raised_identity_residual_at(gs, x) for x in pts))
    return 5 * len(pts), worst, {}


# ----------------------------------------------------------------------
# geometry sector
# ----------------------------------------------------------------------

def _geometry_family(ctx, row_key):
    pts = ctx.probes()
    worst = 0.0
    count = 0
    for tet in _geometry_tetrads(ctx, pts):
        rows = geometry.verify_spin_curvature_identities(tet, pts)
        worst = max(worst, max(rows[row_key]))
        count += len(pts)
    return count, worst, {}


@register("spin-metricity", "covariant constancy of the Dirac fields",
          tolerance=1e-9)
def _check_metricity(ctx):
    return _geometry_family(ctx, "metricity")


@register("riemann-spin-transport",
          "Riemann contraction matches the curvature commutator",
          tolerance=1e-7)
def _check_transport(ctx):
    return _geometry_family(ctx, "riemann-transport")


@register("spin-curvature-quadratic",
          "connection curvature equals -(1/4) R_abcd gamma^a gamma^b",
          tolerance=1e-7)
def _check_quadratic(ctx):
    return _geometry_family(ctx, "curvature-quadratic")


@register("curvature-scalar-trace",
          "scalar curvature from the curvature trace formula",
          tolerance=1e-7)
def _check_scalar_trace(ctx):
    return _geometry_family(ctx, "scalar-trace")


@register("ricci-commutator-trace",
          "Ricci tensor from the commutator trace formula",
          tolerance=1e-7)
def _check_ricci_trace(ctx):
    return _geometry_family(ctx, "ricci-trace")


@register("bianchi-first", "first Bianchi identity of the Riemann tensor",
          tolerance=1e-9)
def _check_bianchi(ctx):
    pts = ctx.probes()
    worst = 0.0
    count = 0
    for tet in _geometry_tetrads(ctx, pts):
        bundle = geometry.CurvatureBundle(tet)
        for x in pts:
            worst = max(worst, geometry.bianchi_residual(bundle.at(x)))
            count += 1
    return count, worst, {}


@register("metric-compatibility", "vanishing covariant derivative of the metric",
          tolerance=1e-10)
def _check_metric_compat(ctx):
    pts = ctx.probes()
    worst = 0.0
    count = 0
    for tet in _geometry_tetrads(ctx, pts):
        bundle = geometry.CurvatureBundle(tet)
        for x in pts:
            worst = max(worst, geometry.metric_compatibility_residual(bundle.at(x)))
            count += 1
    return count, worst, {}


@register("gamma-divergence",
          "covariant divergence of the raised antisymmetric pair vanishes",
          tolerance=1e-8)
def _check_divergence(ctx):
    pts = ctx.probes()
    worst = 0.0
    count = 0
    for tet in _geometry_tetrads(ctx, pts):
        rows = geometry.verify_field_equation_identity(tet, pts)
        worst = max(worst, max(rows["gamma-divergence"]))
        count += len(pts)
    return count, worst, {}


@register("einstein-trace",
          "trace identity rebuilds the Einstein tensor",
          tolerance=1e-7, expectations={"normalization": 1.0})
def _check_einstein(ctx):
    pts = ctx.probes()
    norm = ctx.expect["normalization"]
    worst = 0.0
    count = 0
    for tet in _geometry_tetrads(ctx, pts):
        conn = SpinConnection(tet)
        for x in pts:
            worst = max(worst, geometry.einstein_trace_residual(conn.at(x), norm))
            count += 1
    return count, worst, {"normalization": norm}


# ----------------------------------------------------------------------
# gauge sector
# ----------------------------------------------------------------------

@register("gauge-curvature-crossroute",
          "connection curvature equals the field-strength reconstruction",
          tolerance=1e-10)
def _check_crossroute(ctx):
    worst = 0.0
    flat_spin = spin_connection(TetradField.flat())
    section = ctx.cfg["gauge"]
    for _ in range(4):
        gc = GaugeConfig.random(ctx.rng, degree=section["degree"],
                                amplitude=section["amplitude"],
                                g1=section["g1"], g2=section["g2"])
        for basis in ("L", "R", "U"):
            conn = build_connection(gc, flat_spin, basis)
            direct = gauge.curvature_poly(conn)
            rebuilt = gauge.curvature_from_field_strengths(gc, basis)
            for a in range(4):
                for b in range(4):
                    worst = max(worst, (direct[a][b] - rebuilt[a][b]).max_abs())
                    anti = (direct[a][b] + direct[b][a]).max_abs()
                    worst = max(worst, anti)
    # doublet basis with gravity on: curvature splits into commuting blocks
    pts = ctx.probes(4)
    tet = TetradField.conformal(ctx.cfg["tetrad"]["conformal_eps"])
    spin = spin_connection(tet)
    gc = GaugeConfig.random(ctx.rng, degree=1, amplitude=section["amplitude"],
                            g1=section["g1"], g2=section["g2"])
    conn_full = build_connection(gc, spin, "L")
    ew_only = gauge.ConnectionField(basis="L", dim=8, poly=conn_full.poly)
    rho_ew = gauge.curvature_poly(ew_only)
    for x in pts:
        full = gauge.curvature_at(conn_full, x)
        bar = spin.curvature_at(x)
        for a in range(4):
            for b in range(4):
                split = rho_ew[a][b].evaluate(x) + np.kron(np.eye(2), bar[a, b])
                worst = max(worst, float(np.max(np.abs(full[a, b] - split))))
    return 4, worst, {}


# ----------------------------------------------------------------------
# density expansions
# ----------------------------------------------------------------------

@register("mass-term-expansion",
          "scalar-sector sandwich reproduces the boson mass terms",
          tolerance=1e-10, expectations={"quad": -0.125})
def _check_mass_term(ctx):
    draws = ctx.cfg["trials"]["gauge_configs"]
    quad = ctx.expect["quad"]
    worst = 0.0
    for _ in range(draws):
        w_vals = ctx.rng.uniform(-1.0, 1.0, size=(3, 4))
        b_vals = ctx.rng.uniform(-1.0, 1.0, size=4)
        g1, g2 = ctx.rng.uniform(0.2, 1.0, size=2)
        p, q = ctx.rng.uniform(0.3, 1.2, size=2)
        gc = GaugeConfig.constant(w_vals, b_vals, g1=g1, g2=g2)
        conn = build_connection(gc, None, "U")
        series = ChiOperator(conn).sandwich(vacuum_quadruplet(p, q), order=4)
        got = _scalar_value(series.coefficient(2))
        mixed = g1 * w_vals[2] - g2 * b_vals
        expected = quad * (g1**2 * (_eta_dot(w_vals[0], w_vals[0])
                                    + _eta_dot(w_vals[1], w_vals[1]))
                           + _eta_dot(mixed, mixed))
        worst = max(worst, abs(got - expected), abs(_scalar_value(series.coefficient(1))))
    return draws, worst, {}


def _fieldstrength_body(ctx, basis, coeff_w, coeff_b):
    draws = ctx.cfg["trials"]["gauge_configs"]
    pts = ctx.probes()
    section = ctx.cfg["gauge"]
    flat = TetradField.flat()
    gs = clifford.build_gammas(flat, basis=basis)
    flat_spin = spin_connection(flat)
    worst = 0.0
    for _ in range(draws):
        g1, g2 = ctx.rng.uniform(0.3, 1.0, size=2)
        gc = GaugeConfig.random(ctx.rng, degree=section["degree"],
                                amplitude=section["amplitude"], g1=g1, g2=g2)
        conn = build_connection(gc, flat_spin, basis)
        rho = gauge.curvature_poly(conn)
        w_ab, b_ab = gauge.field_strengths(gc)
        for x in pts:
            series = invariants.sqrt_phi_series_at(gs, rho, x, order=4)
            wv = np.array([[[w_ab[k][a][b].evaluate(x).real for b in range(4)]
                            for a in range(4)] for k in range(3)])
            bv = np.array([[b_ab[a][b].evaluate(x).real for b in range(4)]
                           for a in range(4)])
            ww = np.einsum("kab,kcd,ac,bd->", wv, wv, LOWER, LOWER)
            bb = np.einsum("ab,cd,ac,bd->", bv, bv, LOWER, LOWER)
            expected = coeff_w * g1**2 * ww + coeff_b * g2**2 * bb
            got = series.coefficient(4)
            worst = max(worst, abs(got - expected))
            worst = max(worst, abs(series.coefficient(2)))
            worst = max(worst, abs(series.coefficient(1)), abs(series.coefficient(3)))
    return draws * len(pts), worst, {}


@register("fieldstrength-quartic-L",
          "doublet-basis quartic term carries both field strengths at 1/320",
          tolerance=1e-9, expectations={"w": 1.0 / 320.0, "b": 1.0 / 320.0})
def _check_fs_left(ctx):
    return _fieldstrength_body(ctx, "L", ctx.expect["w"], ctx.expect["b"])


@register("fieldstrength-quartic-R",
          "singlet-basis quartic term carries the abelian strength at 1/80",
          tolerance=1e-9, expectations={"b": 1.0 / 80.0})
def _check_fs_right(ctx):
    return _fieldstrength_body(ctx, "R", 0.0, ctx.expect["b"])


@register("volume-density-V",
          "inert-scalar density collapses to the volume density",
          tolerance=1e-12)
def _check_phi_v(ctx):
    pts = ctx.probes()
    worst = 0.0
    for _ in range(3):
        tet = _random_tetrad(ctx, pts)
        gs = clifford.build_gammas(tet, basis="V")
        for x in pts:
            series = invariants.sqrt_phi_series_at(gs, None, x, order=4)
            detg = np.linalg.det(tet.metric_at(x))
            expected = math.sqrt(-detg.real)
            worst = max(worst, abs(series.coefficient(0) - expected) / expected)
            for k in range(1, 5):
                worst = max(worst, abs(series.coefficient(k)))
    return 3 * len(pts), worst, {}


@register("eh-coefficient",
          "volume-weighted curvature appears at second order with weight 1/24",
          tolerance=1e-6, expectations={"curvature": 1.0 / 24.0})
def _check_eh(ctx):
    pts = ctx.probes()
    coeff = ctx.expect["curvature"]
    worst = 0.0
    count = 0
    tets = [TetradField.conformal(ctx.cfg["tetrad"]["conformal_eps"])]
    for _ in range(2):
        tets.append(_random_tetrad(ctx, pts))
    for tet in tets:
        res = invariants.sqrt_phi_gravity_residuals(tet, pts, coeff=coeff)
        worst = max(worst, max(res))
        count += len(pts)
    return count, worst, {}


@register("phi-series-closure",
          "kernel density series agrees with generic series arithmetic",
          tolerance=1e-11)
def _check_phi_closure(ctx):
    section = ctx.cfg["gauge"]
    flat = TetradField.flat()
    gs = clifford.build_gammas(flat, basis="L")
    flat_spin = spin_connection(flat)
    gc = GaugeConfig.random(ctx.rng, degree=1, amplitude=section["amplitude"],
                            g1=section["g1"], g2=section["g2"])
    rho = gauge.curvature_poly(build_connection(gc, flat_spin, "L"))
    pts = ctx.probes(2)
    worst = 0.0
    for x in pts:
        k8 = invariants.phi_density_series_at(gs, rho, x, order=8)
        k4 = invariants.phi_density_series_at(gs, rho, x, order=4)
        generic = invariants.phi_density_series_generic(gs, rho, x, order=8)
        for k in range(9):
            a = k8.coefficient(k)
            b = generic.coefficient(k)
            scale = max(abs(complex(a)), abs(complex(b)), 1.0)
            worst = max(worst, abs(complex(a) - complex(b)) / scale)
        for k in range(5):
            worst = max(worst, abs(complex(k8.coefficient(k)) - complex(k4.coefficient(k))))
        sqrt_series = invariants.sqrt_phi_series_at(gs, rho, x, order=8)
        for k in (1, 3, 5, 7):
            worst = max(worst, abs(complex(sqrt_series.coefficient(k))))
    return len(pts), worst, {}


@register("chi-symbol-determinant",
          "commuting-symbol contraction reproduces the rank-one determinant",
          tolerance=1e-12)
def _check_chi_symbol(ctx):
    worst = 0.0
    for _ in range(20):
        frame = np.eye(4) + 0.2 * ctx.rng.standard_normal((4, 4))
        g = frame @ LOWER @ frame.T
        p = ctx.rng.uniform(-0.4, 0.4, size=4)
        res = invariants.chi_symbol_determinant(p, g)
        scale = abs(res.det_value)
        worst = max(worst, abs(res.chi_value - res.det_value) / scale)
        worst = max(worst, abs(res.closed_form - res.det_value) / scale)
        worst = max(worst, res.inverse_residual)
    return 20, worst, {}


# ----------------------------------------------------------------------
# rotation sector
# ----------------------------------------------------------------------

def _theta_operator_setup(ctx, degree=1):
    section = ctx.cfg["gauge"]
    flat = TetradField.flat()
    gs = clifford.build_gammas(flat, basis="L")
    gc = GaugeConfig.random(ctx.rng, degree=degree, amplitude=0.6,
                            g1=section["g1"], g2=section["g2"])
    conn = build_connection(gc, spin_connection(flat), "L")
    gops = gamma_operators(gs.gammas)
    pops = pi_operators(conn.poly)
    return gops, pops


@register("theta-invariance",
          "invariant tensors are unchanged by the hyperbolic pair rotation",
          tolerance=1e-10)
def _check_theta_invariance(ctx):
    gops, pops = _theta_operator_setup(ctx)
    nfields = ctx.cfg["trials"]["theta_fields"]
    fields = [PolyField.random(ctx.rng, degree=2, block_shape=(8,), amplitude=1.0)
              for _ in range(nfields)]
    res = invariants.theta_invariance_residuals(gops, pops, fields,
                                                (-1.0, -0.3, 0.3, 1.0))
    worst = max(res.values())
    # zero rotation must be the identity exactly
    rg, rp = theta.rotate_pair(gops, pops, 0.0)
    from .operators import embed
    s = embed(fields[0], 4)
    ident = max((rg[a](s) - gops[a](s)).max_abs() for a in range(4))
    ident = max(ident, max((rp[a](s) - pops[a](s)).max_abs() for a in range(4)))
    worst = max(worst, 0.0 if ident == 0.0 else 1.0)
    return nfields, worst, {"families": {k: float(v) for k, v in res.items()}}


@register("theta-composition",
          "pair rotations compose additively and invert cleanly",
          tolerance=1e-11)
def _check_theta_composition(ctx):
    from .operators import embed

    gops, pops = _theta_operator_setup(ctx)
    fields = [PolyField.random(ctx.rng, degree=2, block_shape=(8,), amplitude=1.0)
              for _ in range(6)]
    g1, p1 = theta.rotate_pair(gops, pops, 0.3)
    g12, p12 = theta.rotate_pair(g1, p1, 0.5)
    gd, pd = theta.rotate_pair(gops, pops, 0.8)
    gi, pi_ = theta.rotate_pair(g1, p1, -0.3)
    worst = 0.0
    for f in fields:
        s = embed(f, 4)
        for a in range(4):
            worst = max(worst, (g12[a](s) - gd[a](s)).max_abs())
            worst = max(worst, (p12[a](s) - pd[a](s)).max_abs())
            worst = max(worst, (gi[a](s) - gops[a](s)).max_abs())
            worst = max(worst, (pi_[a](s) - pops[a](s)).max_abs())
    return len(fields), worst, {}


@register("dirac-leading-term",
          "density-weighted mixed tensor reduces to the kinetic term",
          tolerance=1e-9, expectations={"slope": 2.0})
def _check_dirac(ctx):
    slope = ctx.expect["slope"]
    count = ctx.cfg["spinors"]["count"]
    degree = ctx.cfg["spinors"]["degree"]
    section = ctx.cfg["gauge"]
    flat = TetradField.flat()
    gs = clifford.build_gammas(flat, basis="R")
    flat_spin = spin_connection(flat)
    zero = PolyField.zero()
    worst = 0.0
    for _ in range(count):
        psi = PolyField.random(ctx.rng, degree=degree, block_shape=(4,), amplitude=1.0)
        _, _, res = invariants.dirac_leading_term(gs, None, psi, slope=slope)
        worst = max(worst, res)
        b_fields = tuple(PolyField.random(ctx.rng, degree=1, amplitude=0.8, real=True)
                         for _ in range(4))
        gc = GaugeConfig(W=((zero,) * 4,) * 3, B=b_fields,
                         g1=section["g1"], g2=section["g2"])
        conn = build_connection(gc, flat_spin, "R")
        _, _, res = invariants.dirac_leading_term(gs, conn, psi, slope=slope)
        worst = max(worst, res)
    return count, worst, {}


@register("energy-charge-form",
          "energy/charge rotation preserves the boost quadratic form",
          tolerance=1e-12)
def _check_energy_charge(ctx):
    worst = 0.0
    for _ in range(30):
        state = theta.ChargeEnergyState(
            energy=float(ctx.rng.uniform(-2, 2)), charge=float(ctx.rng.uniform(-2, 2)),
            ell=float(ctx.rng.uniform(0.05, 1.0)), hbar=1.0)
        t = float(ctx.rng.uniform(-2, 2))
        out = theta.transform_energy_charge(state, t)
        scale = max(abs(state.quadratic_form()), 1.0)
        worst = max(worst, abs(out.quadratic_form() - state.quadratic_form()) / scale)
        back = theta.transform_energy_charge(out, -t)
        worst = max(worst, abs(back.energy - state.energy),
                    abs(back.charge - state.charge))
    # vanishing energy pins tanh(theta) from the transformed pair
    state = theta.ChargeEnergyState(energy=0.0, charge=1.0, ell=0.3, hbar=1.0)
    t = 0.4
    out = theta.transform_energy_charge(state, t)
    recovered = math.atanh((state.ell / state.hbar) * out.energy / out.charge)
    worst = max(worst, abs(recovered - t))
    return 30, worst, {}


@register("charge-shift-scaling",
          "charge shift under potential-derived rotations falls off quadratically",
          tolerance=0.0)
def _check_charge_scaling(ctx):
    ells = [0.2 / 2**k for k in range(7)]
    observed = theta.charge_shift_order(g1=0.65, g2=0.35, potential=0.4,
                                        charge=0.8, energy=1.3, hbar=1.0, ells=ells)
    residual = max(0.0, 1.9 - observed)
    return len(ells), residual, {"observed_order": observed}


@register("potential-consistency",
          "rotation parameter recovery from asymptotic potentials",
          tolerance=1e-12)
def _check_potentials(ctx):
    worst = 0.0
    ell = 0.21
    match = theta.theta_from_asymptotic_potentials(0.0, 0.0, 0.7, 0.4, ell)
    worst = max(worst, abs(match.theta_left), abs(match.theta_right),
                0.0 if match.consistent else 1.0)
    g1v, g2v, c = 0.7, 0.4, 0.5
    match = theta.theta_from_asymptotic_potentials(c / g1v, c / g2v, g1v, g2v, ell)
    worst = max(worst, abs(match.theta_left - math.atanh(ell * c)))
    worst = max(worst, abs(match.theta_right - match.theta_left))
    worst = max(worst, 0.0 if match.consistent else 1.0)
    match = theta.theta_from_asymptotic_potentials(0.9, 0.1, g1v, g2v, ell)
    worst = max(worst, 1.0 if match.consistent else 0.0)
    worst = max(worst, 0.0 if math.isfinite(match.theta_left)
                and math.isfinite(match.theta_right) else 1.0)
    try:
        theta.theta_from_asymptotic_potentials(1e9, 0.0, g1v, g2v, ell)
        worst = max(worst, 1.0)
    except ValueError:
        pass
    return 4, worst, {}


# ----------------------------------------------------------------------
# constants sector
# ----------------------------------------------------------------------

@register("constants-formulas",
          "constant formulas match the independent evaluation oracle",
          tolerance=1e-12,
          expectations={"ell_scale": 1.0, "lambda_l_scale": 1.0,
                        "lambda_r_scale": 1.0, "lambda_u_scale": 1.0,
                        "mass_scale": 1.0})
def _check_constants(ctx):
    inputs = constants.load_inputs()
    derived = constants.derive_constants(inputs)
    s2 = inputs.sin2_weak_angle
    alpha = inputs.fine_structure
    c = inputs.light_speed
    grav = inputs.gravitational_constant

    ell_sq = ctx.expect["ell_scale"] * (10.0 / (3.0 * alpha)) * (1 + 2 * s2) \
        * inputs.planck_length**2
    eh_scale = c**3 / (grav * ell_sq)
    lam_l = ctx.expect["lambda_l_scale"] * (-(6.0 / math.pi) * s2 / (1 + 2 * s2)) * eh_scale
    lam_r = ctx.expect["lambda_r_scale"] * (-(3.0 / (2 * math.pi)) * (1 - 2 * s2)
                                            / (1 + 2 * s2)) * eh_scale
    lam_u = ctx.expect["lambda_u_scale"] * (-1.0 / (8 * math.pi * c * ell_sq))
    e_w = inputs.w_boson_mass_gev * 1e9 * inputs.elementary_charge
    mass = ctx.expect["mass_scale"] * 4 * s2 * e_w**2 / inputs.elementary_charge**2

    def rel(a, b):
        return abs(a - b) / max(abs(a), abs(b))

    worst = max(rel(derived.ell_sq, ell_sq), rel(derived.lambda_l, lam_l),
                rel(derived.lambda_r, lam_r), rel(derived.lambda_u, lam_u),
                rel(derived.p_sq_plus_q_sq, mass))
    worst = max(worst, 0.0 if derived.lambda_u == derived.lambda_v else 1.0)

    prev = None
    for s2_grid in np.linspace(0.05, 0.45, 9):
        probe_inputs = replace(inputs, sin2_weak_angle=float(s2_grid))
        d = constants.derive_constants(probe_inputs)
        ratio = d.lambda_l / d.lambda_r
        expected_ratio = 4 * s2_grid / (1 - 2 * s2_grid)
        worst = max(worst, rel(ratio, expected_ratio))
        if prev is not None and d.ell_sq <= prev:
            worst = max(worst, 1.0)
        prev = d.ell_sq
    return 9, worst, {"inputs_version": inputs.version}


# ----------------------------------------------------------------------
# runner
# ----------------------------------------------------------------------

def run_suite(cfg, only=None, tol_scale=1.0, suite="identity-suite"):
    """Execute the registry (or a subset) and assemble the report."""
    seed = cfg["probes"]["seed"]
    ids = sorted(REGISTRY)
    if only:
        missing = [o for o in only if o not in REGISTRY]
        if missing:
            raise KeyError(f"unknown check ids: {missing}")
        ids = [i for i in ids if i in set(only)]
    records = []
    start = time.perf_counter()
    for check_id in ids:
        spec = REGISTRY[check_id]
        ctx = CheckContext(
            cfg=cfg,
            rng=check_rng(seed, check_id),
            tolerance=float(cfg["tolerances"].get(check_id, spec.tolerance)) * tol_scale,
            expect={**spec.expectations, **cfg["expectations"].get(check_id, {})},
        )
        probes, residual, detail = spec.fn(ctx)
        records.append(CheckRecord(
            check_id=check_id, claim=spec.claim, probes=int(probes),
            max_residual=float(residual), tolerance=ctx.tolerance,
            passed=bool(residual <= ctx.tolerance), detail=detail))
    elapsed = time.perf_counter() - start
    return VerificationReport(suite=suite, seed=seed, config_digest=config_digest(cfg),
                              records=records, wall_time_s=elapsed)
