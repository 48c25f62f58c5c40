"""Physical-constant formulas tying the action scale to measured inputs.

All arithmetic is SI-internal to this module; the measured inputs ship in a
versioned data file so the numbers carry provenance instead of living in
code.  The coupling-scale formulas fix the length parameter from the fine
structure constant and the weak mixing angle, the sector weights from the
same angle, and the scalar vacuum magnitude from the vector-boson mass.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources

UNITS = {
    "ell_sq": "m^2",
    "ell": "m",
    "ell_over_planck": "1",
    "lambda_l": "kg m^-2 s^-1",
    "lambda_r": "kg m^-2 s^-1",
    "lambda_u": "s m^-3",
    "lambda_v": "s m^-3",
    "p_sq_plus_q_sq": "V^2",
}


@dataclass(frozen=True)
class PhysicalInputs:
    """Measured constants in SI (the boson mass is quoted in GeV)."""

    version: str
    fine_structure: float
    sin2_weak_angle: float
    planck_length: float          # m
    w_boson_mass_gev: float       # GeV
    elementary_charge: float      # C
    light_speed: float            # m/s
    hbar: float                   # J s
    gravitational_constant: float  # m^3 kg^-1 s^-2

    def __post_init__(self):
        numeric = {k: v for k, v in self.__dict__.items() if k != "version"}
        for name, value in numeric.items():
            if not value > 0:
                raise ValueError(f"{name} must be positive, got {value}")
        if not 0.0 < self.sin2_weak_angle < 1.0:
            raise ValueError("sin^2 of the mixing angle must sit in (0, 1)")


@dataclass(frozen=True)
class DerivedConstants:
    ell_sq: float
    ell: float
    ell_over_planck: float
    lambda_l: float
    lambda_r: float
    lambda_u: float
    lambda_v: float
    p_sq_plus_q_sq: float
    units = UNITS


def load_inputs(path=None) -> PhysicalInputs:
    """Read the versioned inputs file (package default when path is None)."""
    if path is None:
        text = resources.files("biaction").joinpath("data/physical_inputs.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    raw = json.loads(text)
    return PhysicalInputs(**raw)


def derive_constants(inputs: PhysicalInputs) -> DerivedConstants:
    """Evaluate the six printed constant formulas verbatim."""
    s2 = inputs.sin2_weak_angle
    alpha = inputs.fine_structure
    lp = inputs.planck_length
    c = inputs.light_speed
    grav = inputs.gravitational_constant

    ell_sq = (10.0 / (3.0 * alpha)) * (1.0 + 2.0 * s2) * lp**2
    ell = math.sqrt(ell_sq)
    eh_scale = c**3 / (grav * ell_sq)
    lambda_l = -(6.0 / math.pi) * s2 / (1.0 + 2.0 * s2) * eh_scale
    lambda_r = -(3.0 / (2.0 * math.pi)) * (1.0 - 2.0 * s2) / (1.0 + 2.0 * s2) * eh_scale
    lambda_u = -1.0 / (8.0 * math.pi * c * ell_sq)
    lambda_v = -1.0 / (8.0 * math.pi * c * ell_sq)

    boson_energy = inputs.w_boson_mass_gev * 1e9 * inputs.elementary_charge  # J
    p_sq_plus_q_sq = 4.0 * s2 * boson_energy**2 / inputs.elementary_charge**2

    return DerivedConstants(
        ell_sq=ell_sq, ell=ell, ell_over_planck=ell / lp,
        lambda_l=lambda_l, lambda_r=lambda_r,
        lambda_u=lambda_u, lambda_v=lambda_v,
        p_sq_plus_q_sq=p_sq_plus_q_sq,
    )


def potential_energy(sigma_u, kappa_u, sigma_v, ubar_u, vbar_v):
    """Quartic symmetry-breaking potential of the two scalar sectors."""
    return sigma_u * ubar_u + kappa_u * ubar_u**2 + sigma_v * vbar_v


def upsilon(lambda_l, lambda_r, v_p):
    """Volume-term weight: the two fermionic weights plus the potential."""
    return lambda_l + lambda_r + v_p


def vacuum_split(radius, angle):
    """One-parameter (p, q) family with p^2 + q^2 = radius^2.

    Only the sum of squares is pinned physically; the split angle is a free
    input.
    """
    return radius * math.cos(angle), radius * math.sin(angle)
