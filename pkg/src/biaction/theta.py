"""Hyperbolic mixing of the (Dirac matrix, derivative) pair.

The rotation (g, p) -> (cosh t * g + sinh t * p, sinh t * g + cosh t * p)
leaves the three invariant tensors form-invariant; on conserved integrals it
acts as a boost mixing energy with electrical charge, and its parameter is
fixed by the asymptotic electroweak potentials.  Internal units keep hbar
explicit so the energy/charge formulas read exactly as stated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .operators import LOperator


def rotate_pair(gops, pops, theta):
    """Rotated operator pair; composition in theta is additive."""
    ch = math.cosh(theta)
    sh = math.sinh(theta)
    rotated_g = [ch * g + sh * p for g, p in zip(gops, pops)]
    rotated_p = [sh * g + ch * p for g, p in zip(gops, pops)]
    return rotated_g, rotated_p


@dataclass(frozen=True)
class ChargeEnergyState:
    """Energy and electrical charge with the scale constants they mix under."""

    energy: float
    charge: float
    ell: float
    hbar: float = 1.0

    def quadratic_form(self):
        """Boost invariant E^2 - (hbar/ell)^2 Q^2."""
        return self.energy**2 - (self.hbar / self.ell) ** 2 * self.charge**2


def transform_energy_charge(state: ChargeEnergyState, theta) -> ChargeEnergyState:
    """E' = cosh t E + (hbar/ell) sinh t Q;  Q' = cosh t Q + (ell/hbar) sinh t E."""
    ch = math.cosh(theta)
    sh = math.sinh(theta)
    scale = state.hbar / state.ell
    e_new = ch * state.energy + scale * sh * state.charge
    q_new = ch * state.charge + sh * state.energy / scale
    return replace(state, energy=e_new, charge=q_new)


@dataclass(frozen=True)
class ThetaMatch:
    """Rotation parameters recovered from the asymptotic potentials."""

    theta_left: float
    theta_right: float
    consistent: bool


def theta_from_asymptotic_potentials(w3_infinity, b0_infinity, g1, g2, ell,
                                     rel_tol=1e-9) -> ThetaMatch:
    """tanh t = (l/2)(g1 W + g2 B) doublet-side, tanh t = l g2 B singlet-side.

    The two agree exactly when g1 W = g2 B; the flag records that condition.
    """
    arg_left = 0.5 * ell * (g1 * w3_infinity + g2 * b0_infinity)
    arg_right = ell * g2 * b0_infinity
    for arg in (arg_left, arg_right):
        if abs(arg) >= 1.0:
            raise ValueError(f"tanh argument {arg:+.6g} outside (-1, 1)")
    lhs = g1 * w3_infinity
    rhs = g2 * b0_infinity
    scale = max(abs(lhs), abs(rhs), 1e-300)
    consistent = abs(lhs - rhs) <= rel_tol * scale or (lhs == 0.0 and rhs == 0.0)
    return ThetaMatch(theta_left=math.atanh(arg_left),
                      theta_right=math.atanh(arg_right),
                      consistent=consistent)


def charge_shift_order(g1, g2, potential, charge, energy, hbar, ells):
    """Observed scaling order of |Q' - Q| under halving of the length scale.

    theta is regenerated from the asymptotic potentials at each scale, so the
    shift should fall off quadratically; returns the minimum fitted order
    over consecutive halvings.
    """
    devs = []
    for ell in ells:
        match = theta_from_asymptotic_potentials(potential, potential * g1 / g2,
                                                 g1, g2, ell)
        state = ChargeEnergyState(energy=energy, charge=charge, ell=ell, hbar=hbar)
        out = transform_energy_charge(state, match.theta_left)
        devs.append(abs(out.charge - charge))
    orders = []
    for i in range(len(devs) - 1):
        if devs[i + 1] == 0.0:
            continue
        orders.append(math.log2(devs[i] / devs[i + 1]))
    if not orders:
        raise ValueError("degenerate sweep, no nonzero shifts")
    return min(orders)
