"""Numpy fallback for the quartic epsilon-contraction kernels.

All contractions iterate only over the 24 x 24 nonzero permutation pairs of
the two epsilon symbols; the 576 four-factor chains are assembled from 576
shared two-factor half products, which cuts the matrix-product count by an
order of magnitude.
"""

from __future__ import annotations

import itertools

import numpy as np


def _perm_sign(p):
    s = 1
    for i in range(4):
        for j in range(i + 1, 4):
            if p[i] > p[j]:
                s = -s
    return s


_PERMS = tuple(itertools.permutations(range(4)))
_SIGNS = np.array([_perm_sign(p) for p in _PERMS], dtype=np.float64)

# Flattened (sigma, tau) pair tables: row k = (sigma_k, tau_k) with
# sigma_k = _PERMS[k // 24], tau_k = _PERMS[k % 24].
_PI = np.array([p for p in _PERMS for _ in range(24)], dtype=np.intp)
_PJ = np.array([q for _ in range(24) for q in _PERMS], dtype=np.intp)
_PSIGN = np.array([si * sj for si in _SIGNS for sj in _SIGNS], dtype=np.float64)

# Ordered index pairs (i, j) with i != j, and the map from (i, j) to 0..11.
_PAIRS = [(i, j) for i in range(4) for j in range(4) if i != j]
_PAIR_ID = {}
for _n, _ij in enumerate(_PAIRS):
    _PAIR_ID[_ij] = _n

# Half-product bookkeeping: chain slots (0,1) and (2,3) of each of the 576
# permutation pairs point into a table of 12*12 two-factor products.
_LHALF = np.array([_PAIR_ID[(_PI[k][0], _PI[k][1])] * 12 + _PAIR_ID[(_PJ[k][0], _PJ[k][1])]
                   for k in range(576)], dtype=np.intp)
_RHALF = np.array([_PAIR_ID[(_PI[k][2], _PI[k][3])] * 12 + _PAIR_ID[(_PJ[k][2], _PJ[k][3])]
                   for k in range(576)], dtype=np.intp)
_HP_I1 = np.array([i for i, _ in _PAIRS for _ in _PAIRS], dtype=np.intp)
_HP_I2 = np.array([j for _, j in _PAIRS for _ in _PAIRS], dtype=np.intp)
_HP_J1 = np.array([i for _ in _PAIRS for i, _ in _PAIRS], dtype=np.intp)
_HP_J2 = np.array([j for _ in _PAIRS for _, j in _PAIRS], dtype=np.intp)


def _halves(T):
    """All 144 ordered two-factor products T[i1,j1] @ T[i2,j2]."""
    return T[_HP_I1, _HP_J1] @ T[_HP_I2, _HP_J2]


def quartic_trace(T):
    """sum sgn(s) sgn(t) tr(T[s0,t0] T[s1,t1] T[s2,t2] T[s3,t3])."""
    T = np.ascontiguousarray(T, dtype=complex)
    H = _halves(T)
    tr = np.einsum("kij,kji->k", H[_LHALF], H[_RHALF])
    return complex(_PSIGN @ tr)


def quartic_plain(T):
    """Same contraction without the trace; returns the N x N matrix."""
    T = np.ascontiguousarray(T, dtype=complex)
    H = _halves(T)
    M = H[_LHALF] @ H[_RHALF]
    return np.tensordot(_PSIGN, M, axes=(0, 0))


def quartic_series_trace(A, B):
    """Trace contraction of entries A + eps*B; coefficients of eps^0..eps^4.

    A and B are (4, 4, N, N) tables; the chain closes at eps^4 because each
    slot is affine in eps.
    """
    A = np.ascontiguousarray(A, dtype=complex)
    B = np.ascontiguousarray(B, dtype=complex)
    first = (A[_HP_I1, _HP_J1], B[_HP_I1, _HP_J1])
    second = (A[_HP_I2, _HP_J2], B[_HP_I2, _HP_J2])
    # Half products indexed by the two-bit mask of which slots carry B.
    H = [first[m & 1] @ second[(m >> 1) & 1] for m in range(4)]
    out = np.zeros(5, dtype=complex)
    for mask in range(16):
        L = H[mask & 3][_LHALF]
        R = H[(mask >> 2) & 3][_RHALF]
        tr = np.einsum("kij,kji->k", L, R)
        out[bin(mask).count("1")] += _PSIGN @ tr
    return out


def triple_free(T):
    """Three-factor contraction with the last slot of each epsilon left free.

    Returns out[d, h] = sum over completions sgn sgn T[a,e] T[b,f] T[c,g].
    """
    T = np.ascontiguousarray(T, dtype=complex)
    N = T.shape[2]
    H = _halves(T)
    M = H[_LHALF] @ T[_PI[:, 2], _PJ[:, 2]]
    W = _PSIGN[:, None, None] * M
    out = np.zeros((4, 4, N, N), dtype=complex)
    np.add.at(out, (_PI[:, 3], _PJ[:, 3]), W)
    return out
