"""Dense complex matrix helpers and Levi-Civita contraction entry points.

Holds the constant matrix zoo (Pauli blocks, the 4x4 Dirac set, hypercharge
operators) plus weighted (anti)symmetrization and the rank-4 epsilon symbol.
The heavy quartic contractions are delegated to the kernels subpackage.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import kernels

SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_1, SIGMA_2, SIGMA_3)

ETA = np.diag([1.0, -1.0, -1.0, -1.0])

# Standard 4x4 Dirac set built from Pauli blocks; squares to diag(1,-1,-1,-1).
_Z2 = np.zeros((2, 2), dtype=complex)
_I2 = np.eye(2, dtype=complex)
DELTA = (
    np.block([[_Z2, _I2], [_I2, _Z2]]),
    np.block([[_Z2, SIGMA_1], [-SIGMA_1, _Z2]]),
    np.block([[_Z2, SIGMA_2], [-SIGMA_2, _Z2]]),
    np.block([[_Z2, SIGMA_3], [-SIGMA_3, _Z2]]),
)

# Hypercharge operators for the doublet, right-handed, and scalar sectors.
Y_L = -np.eye(2, dtype=complex)
Y_R = -2.0 * np.eye(4, dtype=complex)
Y_W = np.eye(4, dtype=complex)


def identity(n):
    return np.eye(n, dtype=complex)


def kron(a, b):
    """Kronecker product; (A kron B)(C kron D) = (AC) kron (BD)."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def dagger(a):
    return np.conj(np.asarray(a)).T


def commutator(a, b):
    return a @ b - b @ a


def anticommutator(a, b):
    return a @ b + b @ a


def _perm_sign(p):
    sign = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


PERM4 = tuple((p, _perm_sign(p)) for p in itertools.permutations(range(4)))


def levi_civita4():
    """Rank-4 totally antisymmetric symbol with e[0,1,2,3] = 1."""
    eps = np.zeros((4, 4, 4, 4), dtype=np.int8)
    for p, s in PERM4:
        eps[p] = s
    return eps


def _pairwise(T, anti):
    sign = -1.0 if anti else 1.0
    if isinstance(T, np.ndarray):
        return 0.5 * (T + sign * np.swapaxes(T, 0, 1))
    out = []
    for a in range(4):
        row = []
        for b in range(4):
            row.append(0.5 * (T[a][b] + sign * T[b][a]))
        out.append(row)
    return out


def antisymmetrize_pair(T):
    """Weight-1/2 antisymmetric part over the leading (a, b) index pair."""
    return _pairwise(T, anti=True)


def symmetrize_pair(T):
    """Weight-1/2 symmetric part over the leading (a, b) index pair."""
    return _pairwise(T, anti=False)


def _as_entry_array(F):
    F = np.asarray(F, dtype=complex)
    if F.shape == (4, 4):
        return F.reshape(4, 4, 1, 1), True
    if F.ndim == 4 and F.shape[:2] == (4, 4) and F.shape[2] == F.shape[3]:
        return np.ascontiguousarray(F), False
    raise ValueError("expected a (4,4) scalar table or a (4,4,N,N) matrix table")


def epsilon_contract_quartic(F, mode="trace"):
    """Double epsilon contraction e^{abcd} e^{efgh} F_ae F_bf F_cg F_dh.

    Matrix entries multiply left-to-right in slot order.  mode="trace"
    returns the scalar trace, mode="plain" the uncontracted matrix.
    """
    T, scalar_in = _as_entry_array(F)
    if mode == "trace":
        val = kernels.quartic_trace(T)
        return val
    if mode == "plain":
        out = kernels.quartic_plain(T)
        return complex(out[0, 0]) if scalar_in else out
    raise ValueError(f"unknown mode {mode!r}")
