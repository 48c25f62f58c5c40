"""Born-Infeld-type scalar densities and their truncated expansions.

The antisymmetric tensor phi_ab = gamma_[a gamma_b] - (1/2) rho_ab feeds a
double-epsilon quartic trace whose square root reduces to the volume density
sqrt(-g) when the curvature is switched off.  Because the frame-side
connection is rational in the coordinates, the density series is evaluated
pointwise at probe points; with a flat frame everything collapses to exact
constants.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .clifford import GammaSet
from .gauge import ConnectionField
from .lseries import LSeries
from .operators import embed, gamma_operators, pi_operators, sigma_operator
from .polyfield import PolyField

FACT5 = 120.0


# ----------------------------------------------------------------------
# curvature-table adapters
# ----------------------------------------------------------------------

def rho_table_at(rho, x, dim):
    """Coerce any supported curvature carrier to a (4,4,N,N) value table."""
    if rho is None:
        return np.zeros((4, 4, dim, dim), dtype=complex)
    if hasattr(rho, "curvature_at"):
        rho = rho.curvature_at(x)
    elif callable(rho):
        rho = rho(x)
    if isinstance(rho, np.ndarray) and rho.dtype == object:
        out = np.empty((4, 4, dim, dim), dtype=complex)
        for a in range(4):
            for b in range(4):
                out[a, b] = rho[a, b]
        return out
    if isinstance(rho, np.ndarray):
        return np.ascontiguousarray(rho, dtype=complex)
    out = np.empty((4, 4, dim, dim), dtype=complex)
    for a in range(4):
        for b in range(4):
            entry = rho[a][b]
            out[a, b] = entry.evaluate(x) if isinstance(entry, PolyField) else entry
    return out


def phi_entry_tables(gammas: GammaSet, rho, x):
    """Order-0 and grade-2 entry tables of phi_ab at one point."""
    gam = gammas.gammas_at(x)
    n = gammas.dim
    A = np.empty((4, 4, n, n), dtype=complex)
    for a in range(4):
        for e in range(4):
            A[a, e] = 0.5 * (gam[a] @ gam[e] - gam[e] @ gam[a])
    B = -0.5 * rho_table_at(rho, x, n)
    return A, B


# ----------------------------------------------------------------------
# the scalar density and its square root
# ----------------------------------------------------------------------

def phi_density_series_at(gammas: GammaSet, rho, x, order=4) -> LSeries:
    """Density series at a point: quartic trace over 576 sign pairs / (5! N)."""
    A, B = phi_entry_tables(gammas, rho, x)
    eps_coeffs = kernels.quartic_series_trace(A, B) / (FACT5 * gammas.dim)
    coeffs = [0] * (order + 1)
    for m, val in enumerate(eps_coeffs):
        if 2 * m <= order:
            coeffs[2 * m] = complex(val)
    return LSeries(coeffs)


def sqrt_phi_series_at(gammas: GammaSet, rho, x, order=4) -> LSeries:
    """Square root of minus the density; order-0 term is sqrt(-g)."""
    phi = phi_density_series_at(gammas, rho, x, order)
    return (-phi).sqrt()


def sqrt_phi_series(gammas: GammaSet, rho, points, order=4):
    return [sqrt_phi_series_at(gammas, rho, x, order) for x in np.atleast_2d(points)]


@dataclass(frozen=True)
class PhiTensor:
    """phi_ab carrier: Dirac fields plus a curvature table provider."""

    gammas: GammaSet
    rho: object

    def entries_at(self, x):
        return phi_entry_tables(self.gammas, self.rho, x)

    def density_series_at(self, x, order=4):
        return phi_density_series_at(self.gammas, self.rho, x, order)

    def sqrt_density_series_at(self, x, order=4):
        return sqrt_phi_series_at(self.gammas, self.rho, x, order)


def phi_contra_order0(gamma_values):
    """Order-0 contravariant tensor phi^{dh} from the triple contraction."""
    n = gamma_values[0].shape[0]
    T = np.empty((4, 4, n, n), dtype=complex)
    for a in range(4):
        for e in range(4):
            T[a, e] = 0.5 * (gamma_values[a] @ gamma_values[e]
                             - gamma_values[e] @ gamma_values[a])
    phi0 = kernels.quartic_trace(T) / (FACT5 * n)
    return (4.0 / (FACT5 * phi0)) * kernels.triple_free(T)


def sqrt_phi_gravity_residuals(tetrad, points, coeff=1.0 / 24.0, order=4):
    """Grade-2 coefficient of sqrt(-phi) against coeff * sqrt(-g) * R.

    Electroweak potentials are off; the curvature is the frame-side one, and
    R comes from the independent coordinate-side construction.
    """
    from .clifford import build_gammas
    from .geometry import SpinConnection

    gs = build_gammas(tetrad, basis="R")
    conn = SpinConnection(tetrad)
    residuals = []
    for x in np.atleast_2d(points):
        series = sqrt_phi_series_at(gs, conn, x, order)
        pt = conn.at(x)
        detg = np.linalg.det(pt.g)
        expected = coeff * np.sqrt(float(-detg.real)) * pt.scalar_curvature
        got = series.coefficient(2)
        scale = max(abs(expected), abs(got))
        diff = abs(got - expected)
        residuals.append(diff if scale < 1e-12 else diff / scale)
    return residuals


# ----------------------------------------------------------------------
# the symmetric-density operator on scalars
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ChiOperator:
    """Action of sqrt(-chi) on scalar-sector fields, through second order.

    Restricted to the scalar bases over a constant metric; the result keeps
    the stated form sqrt(-g) (X - (1/2) pi_a pi^a X) with grades above two
    zeroed rather than pretending to know them.
    """

    conn: ConnectionField
    metric: np.ndarray = None

    def __post_init__(self):
        if self.conn.basis not in ("U", "V"):
            raise ValueError("scalar-density action is defined on the scalar bases")
        if not self.conn.is_polynomial:
            raise ValueError("scalar-density action needs a polynomial connection")
        if self.metric is None:
            object.__setattr__(self, "metric", np.diag([1.0, -1.0, -1.0, -1.0]))

    def apply(self, X: PolyField, order=4) -> LSeries:
        ginv = np.linalg.inv(self.metric)
        sqrtg = float(np.sqrt(-np.linalg.det(self.metric)))
        pops = pi_operators(self.conn.poly)
        s = embed(X, order)
        quad = None
        for a in range(4):
            for b in range(4):
                if ginv[a, b] == 0:
                    continue
                term = pops[a](pops[b](s)) * complex(ginv[a, b])
                quad = term if quad is None else quad + term
        coeffs = [0] * (order + 1)
        coeffs[0] = sqrtg * X
        if order >= 2 and quad is not None:
            c2 = quad.coefficient(2)
            if not (isinstance(c2, (int, float)) and c2 == 0):
                coeffs[2] = (-0.5 * sqrtg) * c2
        return LSeries(coeffs)

    def sandwich(self, U: PolyField, order=4, normalized=True) -> LSeries:
        """Row-conjugate sandwich of the applied series; optionally normalized."""
        series = self.apply(U, order)
        ubar = U.conjugate()
        out = []
        for c in series.coeffs:
            if isinstance(c, (int, float)) and c == 0:
                out.append(0)
            else:
                out.append(ubar * c)
        if normalized:
            norm = ubar * U
            if norm.degree > 0:
                raise ValueError("normalized sandwich needs a constant field")
            scale = 1.0 / norm.evaluate((0.0, 0.0, 0.0, 0.0)).real
            out = [0 if isinstance(c, (int, float)) and c == 0 else c * scale for c in out]
        return LSeries(out)


def vacuum_quadruplet(p, q):
    """Constant scalar quadruplet (0, p, 0, q) at the potential minimum."""
    return PolyField.constant(np.array([0.0, p, 0.0, q], dtype=complex))


# ----------------------------------------------------------------------
# commuting-symbol determinant structure
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ChiSymbolResult:
    chi_value: complex
    det_value: complex
    closed_form: complex
    chi_inv: np.ndarray
    inverse_residual: float
    expansion_residual: float


def chi_symbol_determinant(p, g) -> ChiSymbolResult:
    """Quartic contraction of chi_ab = g_ab - p_a p_b for commuting symbols.

    Returns the (1/4!)-normalized epsilon contraction, the determinant it
    must equal, the rank-one closed form det(g) (1 - p_a p^a), the inverse
    table and its defect, plus the residual of the second-order inverse
    expansion g^{ab} + p^a p^b.
    """
    p = np.asarray(p, dtype=float)
    g = np.asarray(g, dtype=float)
    chi = g - np.outer(p, p)
    table = chi.astype(complex).reshape(4, 4, 1, 1)
    chi_value = kernels.quartic_trace(table) / 24.0
    det_value = np.linalg.det(chi)
    ginv = np.linalg.inv(g)
    closed = np.linalg.det(g) * (1.0 - p @ ginv @ p)
    if abs(det_value) < 1e-14:
        raise ValueError("singular symbol table")
    chi_inv = np.linalg.inv(chi)
    inverse_residual = float(np.max(np.abs(chi_inv @ chi - np.eye(4))))
    p_up = ginv @ p
    expansion = ginv + np.outer(p_up, p_up)
    expansion_residual = float(np.max(np.abs(chi_inv - expansion)))
    return ChiSymbolResult(
        chi_value=complex(chi_value), det_value=complex(det_value),
        closed_form=complex(closed), chi_inv=chi_inv,
        inverse_residual=inverse_residual, expansion_residual=expansion_residual,
    )


# ----------------------------------------------------------------------
# leading fermion term
# ----------------------------------------------------------------------

def _require_flat(gs: GammaSet):
    if not gs.tetrad.is_constant or not gs.has_constant_metric:
        raise ValueError("leading-term comparison is set up on a constant frame")
    g0 = gs.tetrad.metric_at((0.0, 0.0, 0.0, 0.0)).real
    if not np.allclose(g0, np.diag([1.0, -1.0, -1.0, -1.0]), atol=1e-12):
        raise ValueError("leading-term comparison expects the orthonormal frame")


def dirac_leading_term(gs: GammaSet, conn, psi: PolyField, order=2, slope=2.0):
    """Left side sqrt(-phi) phi^{ab} Sigma_ab psi against slope * gamma^a pi_a psi.

    Runs on the constant orthonormal frame where both sides are exact
    polynomials; the connection may be None or any polynomial connection of
    matching dimension.  Returns (lhs, rhs, residual) series through the
    requested order.
    """
    _require_flat(gs)
    conn_fields = None
    if conn is not None:
        if not conn.is_polynomial:
            raise ValueError("needs a polynomial connection")
        conn_fields = conn.poly
    gops = gamma_operators(gs.gammas)
    pops = pi_operators(conn_fields)
    gam0 = gs.gammas_at((0.0, 0.0, 0.0, 0.0))
    contra = phi_contra_order0(gam0)

    s = embed(psi, order)
    lhs = None
    for a in range(4):
        for b in range(4):
            term = sigma_operator(gops, pops, a, b)(s)
            term = np.ascontiguousarray(contra[a, b]) * term
            lhs = term if lhs is None else lhs + term
    gup_ops = gamma_operators(gs.raised_fields())
    rhs = None
    for a in range(4):
        term = (gup_ops[a] @ pops[a])(s)
        rhs = term if rhs is None else rhs + term
    rhs = rhs * slope
    residual = (lhs - rhs).max_abs()
    return lhs, rhs, residual


def dirac_slope_fit(gs: GammaSet, conn, psi: PolyField, order=2):
    """Derivation oracle: least-squares slope between the two grade-1 sides."""
    lhs, rhs, _ = dirac_leading_term(gs, conn, psi, order, slope=1.0)
    l1 = lhs.coefficient(1)
    r1 = rhs.coefficient(1)
    num = 0.0
    den = 0.0
    keys = set(l1.terms) | set(r1.terms)
    for key in keys:
        lb = l1.terms.get(key)
        rb = r1.terms.get(key)
        if rb is None:
            continue
        if lb is None:
            lb = np.zeros_like(rb)
        num += float(np.real(np.sum(np.conj(rb) * lb)))
        den += float(np.real(np.sum(np.conj(rb) * rb)))
    if den == 0.0:
        raise ValueError("trivial test field cannot pin the slope")
    return num / den


# ----------------------------------------------------------------------
# rotation invariance of the three tensors
# ----------------------------------------------------------------------

def theta_invariance_residuals(gops, pops, fields, thetas, order=4):
    """Max residual per tensor family under the hyperbolic pair rotation."""
    from .operators import chi_operator, phi_operator
    from .theta import rotate_pair

    worst = {"phi": 0.0, "chi": 0.0, "sigma": 0.0}
    builders = {"phi": phi_operator, "chi": chi_operator, "sigma": sigma_operator}
    rotated = [rotate_pair(gops, pops, theta) for theta in thetas]
    for field in fields:
        s = embed(field, order)
        for a in range(4):
            for b in range(a, 4):
                for name, build in builders.items():
                    base = build(gops, pops, a, b)(s)
                    for rg, rp in rotated:
                        rot = build(rg, rp, a, b)(s)
                        worst[name] = max(worst[name], (rot - base).max_abs())
    return worst


def phi_density_series_generic(gammas: GammaSet, rho, x, order=4) -> LSeries:
    """Density series through generic truncated-series arithmetic.

    Independent of the contraction kernel (plain 24 x 24 sign-pair loop over
    series-valued entries); used to cross-check the kernel route and the
    even-grade structure of the density.
    """
    from .linalg import PERM4

    A, B = phi_entry_tables(gammas, rho, x)

    def entry_series(a, e):
        coeffs = [0] * (order + 1)
        coeffs[0] = A[a, e]
        if order >= 2:
            coeffs[2] = B[a, e]
        return LSeries(coeffs)

    entries = [[entry_series(a, e) for e in range(4)] for a in range(4)]
    total = LSeries.zero(order)
    for p, sp in PERM4:
        for q, sq in PERM4:
            prod = (entries[p[0]][q[0]] * entries[p[1]][q[1]]
                    * entries[p[2]][q[2]] * entries[p[3]][q[3]])
            total = total + prod * float(sp * sq)
    coeffs = []
    for c in total.coeffs:
        if isinstance(c, np.ndarray):
            coeffs.append(complex(np.trace(c)) / (FACT5 * gammas.dim))
        else:
            coeffs.append(0 if c == 0 else complex(c) / (FACT5 * gammas.dim))
    return LSeries(coeffs)
