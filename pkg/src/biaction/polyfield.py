"""Exact polynomial fields over the four spacetime coordinates.

Every coordinate-dependent object in the package (tetrad entries, gauge
potentials, spinor test fields) is a PolyField, so partial derivatives are
exact term-by-term operations and never finite differences.  Coefficient
blocks may be scalars, vectors, or square matrices; products follow the
natural rule for the shapes involved (matrix product, matrix-vector action,
or plain scaling) and preserve operand order.
"""

from __future__ import annotations

import itertools
import numbers

import numpy as np

NCOORDS = 4

# Products whose total degree would exceed this bound are refused instead of
# truncated: silently dropping terms could fake agreement downstream.
DEGREE_LIMIT = 24


class DegreeOverflowError(ArithmeticError):
    """A polynomial operation produced a degree above DEGREE_LIMIT."""


def _block(value):
    return np.asarray(value, dtype=complex)


def _block_mul(x, y):
    if x.ndim == 0 or y.ndim == 0:
        return x * y
    return x @ y


def monomial_exponents(max_degree):
    """All exponent tuples over 4 coordinates with total degree <= max_degree."""
    for exps in itertools.product(range(max_degree + 1), repeat=NCOORDS):
        if sum(exps) <= max_degree:
            yield exps


class PolyField:
    """Multivariate polynomial with scalar / vector / matrix coefficients."""

    __slots__ = ("terms", "block_shape")
    __array_ufunc__ = None  # keep numpy from broadcasting elementwise into us

    def __init__(self, terms=None, block_shape=()):
        clean = {}
        shape = None
        for exps, value in (terms or {}).items():
            blk = _block(value)
            if shape is None:
                shape = blk.shape
            elif blk.shape != shape:
                raise ValueError(f"inconsistent block shapes {blk.shape} vs {shape}")
            if sum(exps) > DEGREE_LIMIT:
                raise DegreeOverflowError(f"degree {sum(exps)} exceeds {DEGREE_LIMIT}")
            if np.any(blk != 0):
                clean[tuple(int(e) for e in exps)] = blk
        self.terms = clean
        self.block_shape = shape if shape is not None else tuple(block_shape)

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, block_shape=()):
        return cls({}, block_shape)

    @classmethod
    def constant(cls, value):
        blk = _block(value)
        return cls({(0, 0, 0, 0): blk}, blk.shape)

    @classmethod
    def monomial(cls, exps, value=1.0):
        blk = _block(value)
        return cls({tuple(exps): blk}, blk.shape)

    @classmethod
    def coordinate(cls, a):
        exps = [0, 0, 0, 0]
        exps[a] = 1
        return cls.monomial(exps)

    @classmethod
    def random(cls, rng, degree=2, block_shape=(), amplitude=1.0, real=False):
        """Dense random polynomial with uniform coefficients in the given box."""
        terms = {}
        for exps in monomial_exponents(degree):
            blk = rng.uniform(-1.0, 1.0, size=block_shape)
            if not real:
                blk = blk + 1j * rng.uniform(-1.0, 1.0, size=block_shape)
            terms[exps] = amplitude * blk
        return cls(terms, block_shape)

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, numbers.Number):
            if other == 0:
                return self
            other = PolyField.constant(other)
        elif isinstance(other, np.ndarray):
            other = PolyField.constant(other)
        if not isinstance(other, PolyField):
            return NotImplemented
        if self.block_shape != other.block_shape and self.terms and other.terms:
            raise ValueError("shape mismatch in PolyField addition")
        out = dict(self.terms)
        for exps, blk in other.terms.items():
            cur = out.get(exps)
            out[exps] = blk if cur is None else cur + blk
        shape = self.block_shape if self.terms else other.block_shape
        return PolyField(out, shape)

    __radd__ = __add__

    def __neg__(self):
        return PolyField({e: -b for e, b in self.terms.items()}, self.block_shape)

    def __sub__(self, other):
        return self + (-other if isinstance(other, PolyField) else -1 * other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return PolyField({e: b * other for e, b in self.terms.items()}, self.block_shape)
        if isinstance(other, np.ndarray):
            if other.ndim == 0:
                return self * complex(other)
            other = PolyField.constant(other)
        if not isinstance(other, PolyField):
            return NotImplemented
        out = {}
        for e1, b1 in self.terms.items():
            for e2, b2 in other.terms.items():
                exps = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                if sum(exps) > DEGREE_LIMIT:
                    raise DegreeOverflowError(
                        f"product degree {sum(exps)} exceeds {DEGREE_LIMIT}"
                    )
                blk = _block_mul(b1, b2)
                cur = out.get(exps)
                out[exps] = blk if cur is None else cur + blk
        shape = out and next(iter(out.values())).shape
        return PolyField(out, shape or ())

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return self * other
        if isinstance(other, np.ndarray):
            if other.ndim == 0:
                return self * complex(other)
            return PolyField.constant(other) * self
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Number):
            return self * (1.0 / other)
        return NotImplemented

    # ------------------------------------------------------------------
    # calculus and evaluation
    # ------------------------------------------------------------------

    def differentiate(self, a):
        """Exact partial derivative along coordinate a."""
        out = {}
        for exps, blk in self.terms.items():
            if exps[a] == 0:
                continue
            ne = list(exps)
            ne[a] -= 1
            key = tuple(ne)
            val = exps[a] * blk
            cur = out.get(key)
            out[key] = val if cur is None else cur + val
        return PolyField(out, self.block_shape)

    def evaluate(self, x):
        """Value at a point; returns a complex scalar or an ndarray block."""
        x = np.asarray(x, dtype=float)
        if not self.terms:
            if self.block_shape:
                return np.zeros(self.block_shape, dtype=complex)
            return 0j
        max_e = [0, 0, 0, 0]
        for exps in self.terms:
            for i in range(NCOORDS):
                if exps[i] > max_e[i]:
                    max_e[i] = exps[i]
        pows = [np.power(x[i], np.arange(max_e[i] + 1)) for i in range(NCOORDS)]
        acc = np.zeros(self.block_shape, dtype=complex)
        for exps, blk in self.terms.items():
            w = pows[0][exps[0]] * pows[1][exps[1]] * pows[2][exps[2]] * pows[3][exps[3]]
            acc = acc + w * blk
        if self.block_shape:
            return acc
        return complex(acc)

    # ------------------------------------------------------------------
    # structure helpers
    # ------------------------------------------------------------------

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    @property
    def is_zero(self):
        return not self.terms

    def conjugate(self):
        return PolyField({e: np.conj(b) for e, b in self.terms.items()}, self.block_shape)

    def transpose_blocks(self):
        return PolyField({e: b.T for e, b in self.terms.items()}, self.block_shape)

    def trace(self):
        if len(self.block_shape) != 2:
            raise ValueError("trace requires matrix blocks")
        return PolyField({e: np.trace(b) for e, b in self.terms.items()}, ())

    def kron_left(self, mat):
        """Kronecker embedding mat (x) self, applied block by block."""
        mat = _block(mat)
        out = {e: np.kron(mat, b) for e, b in self.terms.items()}
        shape = tuple(m * s for m, s in zip(mat.shape, self.block_shape)) if self.block_shape else mat.shape
        return PolyField(out, shape)

    def max_abs(self):
        return max((float(np.max(np.abs(b))) for b in self.terms.values()), default=0.0)

    def isclose(self, other, tol=1e-12):
        return (self - other).max_abs() <= tol

    def __repr__(self):
        return f"PolyField(shape={self.block_shape}, terms={len(self.terms)}, degree={self.degree})"
