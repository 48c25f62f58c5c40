"""Linear operators on truncated series of polynomial fields.

A Dirac matrix acts multiplicatively at grade zero; the dimensionless
derivative raises the grade by one and acts as -i(d_a - Gamma_a) on the
coefficient fields.  Repeated derivative application treats the intermediate
result as an internal-index object only, which matches the constant-frame
backgrounds these operators are used on.
"""

from __future__ import annotations

import numbers

from .lseries import LSeries
from .polyfield import PolyField


class LOperator:
    """Composable linear map on LSeries-of-PolyField values."""

    __slots__ = ("_fn",)

    def __init__(self, fn):
        self._fn = fn

    def __call__(self, series: LSeries) -> LSeries:
        return self._fn(series)

    def __matmul__(self, other):
        if not isinstance(other, LOperator):
            return NotImplemented
        return LOperator(lambda s: self(other(s)))

    def __add__(self, other):
        if not isinstance(other, LOperator):
            return NotImplemented
        return LOperator(lambda s: self(s) + other(s))

    def __sub__(self, other):
        if not isinstance(other, LOperator):
            return NotImplemented
        return LOperator(lambda s: self(s) - other(s))

    def __rmul__(self, scalar):
        if not isinstance(scalar, numbers.Number):
            return NotImplemented
        return LOperator(lambda s: self(s) * scalar)


def embed(value: PolyField, order: int) -> LSeries:
    """Grade-0 embedding of a field into the series carrier."""
    return LSeries.constant(value, order)


def gamma_operators(gammas):
    """Multiplication operators for the four Dirac-matrix fields."""

    def make(g):
        def act(series: LSeries) -> LSeries:
            return LSeries([0 if isinstance(c, numbers.Number) and c == 0 else g * c
                            for c in series.coeffs])

        return LOperator(act)

    return [make(g) for g in gammas]


def pi_operators(connection, order_guard=None):
    """Grade-raising derivative operators; connection may be None (pure d_a).

    connection: sequence of four matrix PolyFields or None.
    """

    def make(a):
        gam = None if connection is None else connection[a]

        def act(series: LSeries) -> LSeries:
            out = [0] * (series.order + 1)
            for k, c in enumerate(series.coeffs):
                if isinstance(c, numbers.Number) and c == 0:
                    continue
                if k + 1 > series.order:
                    continue
                val = c.differentiate(a)
                if gam is not None and not gam.is_zero:
                    val = val - gam * c
                nxt = -1j * val
                cur = out[k + 1]
                out[k + 1] = nxt if isinstance(cur, numbers.Number) and cur == 0 else cur + nxt
            return LSeries(out)

        return LOperator(act)

    return [make(a) for a in range(4)]


def pair_antisym(P, Q, a, b) -> LOperator:
    """Weight-1/2 antisymmetrized composition P_[a Q_b]."""
    return 0.5 * (P[a] @ Q[b] - P[b] @ Q[a])


def pair_sym(P, Q, a, b) -> LOperator:
    """Weight-1/2 symmetrized composition P_(a Q_b)."""
    return 0.5 * (P[a] @ Q[b] + P[b] @ Q[a])


def phi_operator(gops, pops, a, b) -> LOperator:
    """Antisymmetric invariant tensor: gamma_[a gamma_b] - pi_[a pi_b]."""
    return pair_antisym(gops, gops, a, b) - pair_antisym(pops, pops, a, b)


def chi_operator(gops, pops, a, b) -> LOperator:
    """Symmetric invariant tensor: gamma_(a gamma_b) - pi_(a pi_b)."""
    return pair_sym(gops, gops, a, b) - pair_sym(pops, pops, a, b)


def sigma_operator(gops, pops, a, b) -> LOperator:
    """Mixed invariant tensor: gamma_[a pi_b] - pi_[a gamma_b]."""
    return pair_antisym(gops, pops, a, b) - pair_antisym(pops, gops, a, b)
