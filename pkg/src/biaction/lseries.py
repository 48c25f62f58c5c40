"""Truncated power series in the expansion parameter.

Coefficients are ring-generic: plain numbers, numpy matrices, or PolyField
values all work, and products preserve operand order so matrix-valued series
stay honest about noncommutativity.  The integer 0 acts as a universal zero
coefficient, which keeps sparse series cheap.
"""

from __future__ import annotations

import numbers

import numpy as np

from .polyfield import PolyField


def _is_zero_scalar(v):
    return isinstance(v, numbers.Number) and v == 0


def elem_mul(a, b):
    """Ring product of two coefficients, order preserved."""
    if _is_zero_scalar(a) or _is_zero_scalar(b):
        return 0
    if isinstance(a, PolyField) or isinstance(b, PolyField):
        return a * b
    aa = np.asarray(a)
    bb = np.asarray(b)
    if aa.ndim >= 1 and bb.ndim >= 1:
        return aa @ bb
    return a * b


def elem_add(a, b):
    if _is_zero_scalar(a):
        return b
    if _is_zero_scalar(b):
        return a
    return a + b


def elem_abs(v):
    if _is_zero_scalar(v):
        return 0.0
    if isinstance(v, PolyField):
        return v.max_abs()
    return float(np.max(np.abs(v)))


class LSeries:
    """Series truncated at a fixed order; index k carries the k-th power."""

    __slots__ = ("coeffs",)
    __array_ufunc__ = None  # let ndarray * LSeries dispatch to __rmul__

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)
        if not self.coeffs:
            raise ValueError("series needs at least the order-0 coefficient")

    @property
    def order(self):
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order):
        return cls([0] * (order + 1))

    @classmethod
    def constant(cls, value, order):
        return cls([value] + [0] * order)

    @classmethod
    def from_coefficient(cls, k, value, order):
        coeffs = [0] * (order + 1)
        coeffs[k] = value
        return cls(coeffs)

    def coefficient(self, k):
        return self.coeffs[k]

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LSeries):
            return NotImplemented
        if other.order != self.order:
            raise ValueError("truncation orders differ")
        return LSeries([elem_add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LSeries([0 if _is_zero_scalar(c) else -c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, LSeries):
            if other.order != self.order:
                raise ValueError("truncation orders differ")
            out = [0] * (self.order + 1)
            for i, a in enumerate(self.coeffs):
                if _is_zero_scalar(a):
                    continue
                for j in range(self.order + 1 - i):
                    b = other.coeffs[j]
                    if _is_zero_scalar(b):
                        continue
                    out[i + j] = elem_add(out[i + j], elem_mul(a, b))
            return LSeries(out)
        return LSeries([0 if _is_zero_scalar(c) else elem_mul(c, other) for c in self.coeffs])

    def __rmul__(self, other):
        return LSeries([0 if _is_zero_scalar(c) else elem_mul(other, c) for c in self.coeffs])

    # ------------------------------------------------------------------
    # square root
    # ------------------------------------------------------------------

    def sqrt(self):
        """Series S with S*S == self through the truncation order.

        Requires a strictly positive scalar leading coefficient; the higher
        coefficients must commute (scalars or scalar fields).
        """
        a0 = self.coeffs[0]
        if isinstance(a0, PolyField):
            if a0.block_shape != () or a0.degree > 0:
                raise ValueError("leading coefficient must be a constant scalar")
            a0 = a0.evaluate((0.0, 0.0, 0.0, 0.0))
        if isinstance(a0, np.ndarray):
            if a0.ndim != 0:
                raise ValueError("leading coefficient must be scalar")
            a0 = complex(a0)
        a0 = complex(a0)
        if abs(a0.imag) > 1e-12 * max(1.0, abs(a0.real)) or a0.real <= 0:
            raise ValueError("leading coefficient must be a positive real scalar")
        for c in self.coeffs[1:]:
            if isinstance(c, np.ndarray) and c.ndim > 0:
                raise ValueError("sqrt defined for scalar-coefficient series only")
            if isinstance(c, PolyField) and c.block_shape != ():
                raise ValueError("sqrt defined for scalar-coefficient series only")
        s0 = np.sqrt(a0.real)
        out = [s0]
        inv = 1.0 / (2.0 * s0)
        for k in range(1, self.order + 1):
            acc = self.coeffs[k]
            for i in range(1, k):
                cross = elem_mul(out[i], out[k - i])
                if not _is_zero_scalar(cross):
                    acc = elem_add(acc, -cross)
            out.append(0 if _is_zero_scalar(acc) else elem_mul(acc, inv))
        return LSeries(out)

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    def max_abs(self):
        return max(elem_abs(c) for c in self.coeffs)

    def evaluate_fields(self, x):
        """Evaluate PolyField coefficients at a point, other kinds pass through."""
        return LSeries([c.evaluate(x) if isinstance(c, PolyField) else c for c in self.coeffs])

    def eval_at(self, value):
        """Numeric sum of coeff * value**k; coefficients must be numeric."""
        acc = 0
        for k, c in enumerate(self.coeffs):
            if _is_zero_scalar(c):
                continue
            acc = elem_add(acc, c * value**k)
        return acc

    def __repr__(self):
        return f"LSeries(order={self.order})"
