"""Dirac-matrix fields built from tetrads.

Construction contracts the frame with the constant 4x4 Dirac set; the
doublet basis doubles that by a Kronecker identity block.  The defining
anticommutator gate and the quartic epsilon identity are verified pointwise
on probe points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .geometry import TetradField
from .linalg import DELTA, ETA
from .polyfield import PolyField

BASIS_DIMS = {"L": 8, "R": 4, "U": 4, "V": 4}


@dataclass(frozen=True)
class GammaSet:
    """Four matrix-polynomial Dirac fields tied to their source tetrad."""

    basis: str
    tetrad: TetradField
    gammas: tuple      # N x N matrix PolyFields
    bar_gammas: tuple  # the 4 x 4 fields before any Kronecker embedding

    @property
    def dim(self):
        return BASIS_DIMS[self.basis]

    def gammas_at(self, x):
        return [g.evaluate(x) for g in self.gammas]

    def bar_gammas_at(self, x):
        return [g.evaluate(x) for g in self.bar_gammas]

    def metric_at(self, x):
        return self.tetrad.metric_at(x)

    def raised_at(self, x):
        """Contravariant matrices at a point; metric must be invertible there."""
        ginv = np.linalg.inv(self.metric_at(x))
        gam = self.gammas_at(x)
        return [sum(ginv[a, b] * gam[b] for b in range(4)) for a in range(4)]

    @property
    def has_constant_metric(self):
        return all(self.tetrad.g[a][b].degree <= 0 for a in range(4) for b in range(4))

    def raised_fields(self):
        """Contravariant fields for constant-metric tetrads (exact polynomials)."""
        if not self.has_constant_metric:
            raise ValueError("polynomial raising needs a constant metric")
        g0 = self.tetrad.metric_at((0.0, 0.0, 0.0, 0.0)).real
        ginv = np.linalg.inv(g0)
        return tuple(sum(ginv[a, b] * self.gammas[b] for b in range(4)) for a in range(4))


def build_gammas(tetrad: TetradField, basis="R", probes=None, gate_tol=1e-10) -> GammaSet:
    """Contract the tetrad with the Dirac set; optionally gate on probe points."""
    if basis not in BASIS_DIMS:
        raise ValueError(f"unknown basis {basis!r}")
    bar = tuple(sum(tetrad.e[a][A] * DELTA[A] for A in range(4)) for a in range(4))
    if basis == "L":
        gammas = tuple(g.kron_left(np.eye(2)) for g in bar)
    else:
        gammas = bar
    gs = GammaSet(basis=basis, tetrad=tetrad, gammas=gammas, bar_gammas=bar)
    if probes is not None:
        tetrad.validate(probes)
        worst = max(clifford_residual_at(gs, x) for x in np.atleast_2d(probes))
        if worst > gate_tol:
            raise ValueError(f"anticommutator residual {worst:.2e} above {gate_tol:.1e}")
    return gs


def clifford_residual_at(gs: GammaSet, x):
    """Max entry of gamma_(a gamma_b) - g_ab at one point."""
    gam = gs.gammas_at(x)
    g = gs.metric_at(x)
    eye = np.eye(gs.dim)
    worst = 0.0
    for a in range(4):
        for b in range(a, 4):
            res = 0.5 * (gam[a] @ gam[b] + gam[b] @ gam[a]) - g[a, b] * eye
            worst = max(worst, float(np.max(np.abs(res))))
    return worst


def clifford_residuals(gs: GammaSet, points):
    return [clifford_residual_at(gs, x) for x in np.atleast_2d(points)]


def myform_residual_at(gs: GammaSet, x):
    """Quartic epsilon identity residual over all 16 free index pairs.

    The triple contraction of antisymmetrized pair products must equal
    10 * det(g) * gamma^[h gamma^d] at every point.
    """
    if gs.dim != 4:
        raise ValueError("identity is stated for the 4x4 bases")
    gam = gs.gammas_at(x)
    gup = gs.raised_at(x)
    detg = np.linalg.det(gs.metric_at(x))
    T = np.empty((4, 4, 4, 4), dtype=complex)
    for a in range(4):
        for e in range(4):
            T[a, e] = 0.5 * (gam[a] @ gam[e] - gam[e] @ gam[a])
    lhs = kernels.triple_free(T)
    worst = 0.0
    for d in range(4):
        for h in range(4):
            rhs = 10.0 * detg * 0.5 * (gup[h] @ gup[d] - gup[d] @ gup[h])
            worst = max(worst, float(np.max(np.abs(lhs[d, h] - rhs))))
    return worst


def myform_residuals(gs: GammaSet, points):
    return [myform_residual_at(gs, x) for x in np.atleast_2d(points)]


def raised_identity_residual_at(gs: GammaSet, x):
    """Residuals of the mixed contractions gamma^a gamma_a = 4 and
    gamma^(a gamma^b) = g^{ab}."""
    gam = gs.gammas_at(x)
    gup = gs.raised_at(x)
    ginv = np.linalg.inv(gs.metric_at(x))
    eye = np.eye(gs.dim)
    mixed = sum(gup[a] @ gam[a] for a in range(4)) - 4.0 * eye
    worst = float(np.max(np.abs(mixed)))
    for a in range(4):
        for b in range(4):
            res = 0.5 * (gup[a] @ gup[b] + gup[b] @ gup[a]) - ginv[a, b] * eye
            worst = max(worst, float(np.max(np.abs(res))))
    return worst
