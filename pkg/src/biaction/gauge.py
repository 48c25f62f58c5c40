"""Electroweak connections per representation and their curvature.

Connection matrices are defined so that the dimensionless derivative acts as
pi_a = -i*l*(d_a - Gamma_a); the displayed derivative of each representation
then fixes the sign of the electroweak part.  The gravitational part enters
only for the fermionic bases and is polynomial only when the frame is
constant; otherwise it is evaluated pointwise through the geometry engine.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import SpinConnection
from .linalg import PAULI, Y_L, Y_R, Y_W, identity, kron
from .polyfield import PolyField

BASES = ("L", "R", "U", "V")
BASIS_DIM = {"L": 8, "R": 4, "U": 4, "V": 4}

# Epsilon structure constants on the flavor indices (raised/lowered with delta).
EPS3 = np.zeros((3, 3, 3))
EPS3[0, 1, 2] = EPS3[1, 2, 0] = EPS3[2, 0, 1] = 1.0
EPS3[0, 2, 1] = EPS3[2, 1, 0] = EPS3[1, 0, 2] = -1.0


@dataclass(frozen=True)
class GaugeConfig:
    """Electroweak potentials W_a^k, B_a and the two coupling constants."""

    W: tuple          # W[k][a] scalar PolyFields, k = 0..2
    B: tuple          # B[a] scalar PolyFields
    g1: float         # SU(2) coupling (g-prime)
    g2: float         # hypercharge coupling (g-double-prime)

    @classmethod
    def zero(cls, g1=0.65, g2=0.35):
        z = PolyField.zero()
        return cls(W=tuple((z,) * 4 for _ in range(3)), B=(z,) * 4, g1=g1, g2=g2)

    @classmethod
    def constant(cls, w_values, b_values, g1, g2):
        W = tuple(tuple(PolyField.constant(w_values[k][a]) for a in range(4))
                  for k in range(3))
        B = tuple(PolyField.constant(b_values[a]) for a in range(4))
        return cls(W=W, B=B, g1=g1, g2=g2)

    @classmethod
    def random(cls, rng, degree=2, amplitude=1.0, g1=0.65, g2=0.35, real=True):
        W = tuple(tuple(PolyField.random(rng, degree=degree, amplitude=amplitude, real=real)
                        for _ in range(4)) for _ in range(3))
        B = tuple(PolyField.random(rng, degree=degree, amplitude=amplitude, real=real)
                  for _ in range(4))
        return cls(W=W, B=B, g1=g1, g2=g2)

    def is_zero(self):
        return all(f.is_zero for row in self.W for f in row) and all(f.is_zero for f in self.B)


def sigma_generators(basis):
    """SU(2) generator embedding for the given representation."""
    if basis == "L":
        return [kron(s, identity(4)) for s in PAULI]
    if basis == "U":
        return [kron(identity(2), s) for s in PAULI]
    raise ValueError(f"no SU(2) action in basis {basis!r}")


def hypercharge(basis):
    if basis == "L":
        return kron(Y_L, identity(4))
    if basis == "R":
        return Y_R
    if basis == "U":
        return Y_W
    raise ValueError(f"no hypercharge in basis {basis!r}")


@dataclass(frozen=True)
class ConnectionField:
    """Total connection for one basis: polynomial part plus optional frame part."""

    basis: str
    dim: int
    poly: tuple                      # four matrix PolyFields (dim x dim)
    spin: SpinConnection | None = None

    @property
    def is_polynomial(self):
        return self.spin is None

    def _embed_spin(self, mat):
        if self.basis == "L":
            return np.kron(np.eye(2), mat)
        return mat

    def at(self, x):
        """Connection matrices Gamma_a at a point."""
        out = [self.poly[a].evaluate(x) if not self.poly[a].is_zero
               else np.zeros((self.dim, self.dim), dtype=complex) for a in range(4)]
        if self.spin is not None:
            bar = self.spin.matrices_at(x)
            out = [out[a] + self._embed_spin(bar[a]) for a in range(4)]
        return out

    def deriv_at(self, x):
        """d_c Gamma_a values at a point, indexed [c][a]."""
        out = [[self.poly[a].differentiate(c).evaluate(x) if not self.poly[a].is_zero
                else np.zeros((self.dim, self.dim), dtype=complex)
                for a in range(4)] for c in range(4)]
        if self.spin is not None:
            dbar = self.spin.dmatrices_at(x)
            out = [[out[c][a] + self._embed_spin(dbar[c][a]) for a in range(4)]
                   for c in range(4)]
        return out


def build_connection(gauge: GaugeConfig, spin, basis) -> ConnectionField:
    """Assemble Gamma_a for a basis tag; spin is required for L and R."""
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    dim = BASIS_DIM[basis]
    zero = PolyField.zero((dim, dim))
    if basis == "V":
        return ConnectionField(basis="V", dim=dim, poly=(zero,) * 4)

    if basis in ("L", "R") and spin is None:
        raise ValueError(f"basis {basis!r} needs a spin connection")

    y = hypercharge(basis)
    poly = []
    for a in range(4):
        gamma_a = PolyField.zero((dim, dim))
        if basis in ("L", "U"):
            for k, t in enumerate(sigma_generators(basis)):
                gamma_a = gamma_a + gauge.W[k][a] * ((-0.5j * gauge.g1) * t)
        gamma_a = gamma_a + gauge.B[a] * ((-0.5j * gauge.g2) * y)
        poly.append(gamma_a)

    spin_part = None
    if basis in ("L", "R") and not spin.is_trivial:
        spin_part = spin
    return ConnectionField(basis=basis, dim=dim, poly=tuple(poly), spin=spin_part)


def field_strengths(gauge: GaugeConfig):
    """Nonabelian and abelian field strengths as exact polynomials."""
    W_ab = [[[None] * 4 for _ in range(4)] for _ in range(3)]
    for k in range(3):
        for a in range(4):
            for b in range(4):
                val = gauge.W[k][b].differentiate(a) - gauge.W[k][a].differentiate(b)
                for l in range(3):
                    for m in range(3):
                        if EPS3[k, l, m]:
                            val = val - (gauge.g1 * EPS3[k, l, m]) * (gauge.W[l][a] * gauge.W[m][b])
                W_ab[k][a][b] = val
    B_ab = [[gauge.B[b].differentiate(a) - gauge.B[a].differentiate(b)
             for b in range(4)] for a in range(4)]
    return W_ab, B_ab


def curvature_poly(conn: ConnectionField):
    """Graded curvature coefficient rho'_ab as matrix polynomials.

    Only valid for purely polynomial connections (flat frame); rho_ab itself
    carries two powers of the expansion parameter on top of this.
    """
    if not conn.is_polynomial:
        raise ValueError("polynomial curvature needs a polynomial connection")
    rho = [[None] * 4 for _ in range(4)]
    for a in range(4):
        for b in range(4):
            val = conn.poly[b].differentiate(a) - conn.poly[a].differentiate(b)
            val = val - (conn.poly[a] * conn.poly[b] - conn.poly[b] * conn.poly[a])
            rho[a][b] = val
    return rho


def curvature_at(conn: ConnectionField, x):
    """Pointwise rho'_ab from values and exact derivatives of the connection."""
    gam = conn.at(x)
    dgam = conn.deriv_at(x)
    rho = np.empty((4, 4), dtype=object)
    for a in range(4):
        for b in range(4):
            rho[a, b] = dgam[a][b] - dgam[b][a] - (gam[a] @ gam[b] - gam[b] @ gam[a])
    return rho


def gauge_curvature(conn: ConnectionField):
    """rho'_ab (the grade-2 series coefficient) for a polynomial connection."""
    return curvature_poly(conn)


def curvature_from_field_strengths(gauge: GaugeConfig, basis):
    """Independent route: rho'_ab = -(i/2) (g1 T_k W^k_ab + g2 Y B_ab)."""
    dim = BASIS_DIM[basis]
    W_ab, B_ab = field_strengths(gauge)
    y = hypercharge(basis) if basis != "V" else np.zeros((dim, dim))
    rho = [[PolyField.zero((dim, dim)) for _ in range(4)] for _ in range(4)]
    for a in range(4):
        for b in range(4):
            val = PolyField.zero((dim, dim))
            if basis in ("L", "U"):
                for k, t in enumerate(sigma_generators(basis)):
                    val = val + W_ab[k][a][b] * ((-0.5j * gauge.g1) * t)
            if basis != "V":
                val = val + B_ab[a][b] * ((-0.5j * gauge.g2) * y)
            rho[a][b] = val
    return rho
