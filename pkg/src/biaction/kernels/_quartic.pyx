# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled quartic epsilon-contraction kernels.

Same contract as the numpy fallback in _pure (which also owns the shared
permutation bookkeeping); plain C loops over the 576 sign pairs with the
two-factor half-product reuse.
"""

import numpy as np

from . import _pure

_MAXN = 16

_PI32 = np.ascontiguousarray(_pure._PI, dtype=np.int32)
_PJ32 = np.ascontiguousarray(_pure._PJ, dtype=np.int32)
_SGN = np.ascontiguousarray(_pure._PSIGN, dtype=np.float64)
_LH = np.ascontiguousarray(_pure._LHALF, dtype=np.int32)
_RH = np.ascontiguousarray(_pure._RHALF, dtype=np.int32)
_HI1 = np.ascontiguousarray(_pure._HP_I1, dtype=np.int32)
_HI2 = np.ascontiguousarray(_pure._HP_I2, dtype=np.int32)
_HJ1 = np.ascontiguousarray(_pure._HP_J1, dtype=np.int32)
_HJ2 = np.ascontiguousarray(_pure._HP_J2, dtype=np.int32)
_POPCNT = np.array([bin(m).count("1") for m in range(16)], dtype=np.int32)

cdef int[:, ::1] PI = _PI32
cdef int[:, ::1] PJ = _PJ32
cdef double[::1] SGN = _SGN
cdef int[::1] LH = _LH
cdef int[::1] RH = _RH
cdef int[::1] HI1 = _HI1
cdef int[::1] HI2 = _HI2
cdef int[::1] HJ1 = _HJ1
cdef int[::1] HJ2 = _HJ2
cdef int[::1] POPCNT = _POPCNT


cdef inline void _matmul(double complex* C, const double complex* A,
                         const double complex* B, int N) noexcept nogil:
    cdef int i, j, k
    cdef double complex acc
    for i in range(N):
        for j in range(N):
            acc = 0
            for k in range(N):
                acc = acc + A[i * N + k] * B[k * N + j]
            C[i * N + j] = acc


cdef inline double complex _trdot(const double complex* A,
                                  const double complex* B, int N) noexcept nogil:
    # tr(A @ B) without forming the product
    cdef int i, j
    cdef double complex acc = 0
    for i in range(N):
        for j in range(N):
            acc = acc + A[i * N + j] * B[j * N + i]
    return acc


cdef int _check_dim(object T) except -1:
    cdef int N = T.shape[2]
    if T.shape[0] != 4 or T.shape[1] != 4 or T.shape[3] != N:
        raise ValueError("expected a (4,4,N,N) entry table")
    if N > _MAXN:
        raise ValueError(f"matrix dimension {N} above compiled limit {_MAXN}")
    return N


def quartic_trace(T):
    Ta = np.ascontiguousarray(T, dtype=np.complex128)
    cdef int N = _check_dim(Ta)
    cdef double complex[:, :, :, ::1] Tv = Ta
    H = np.empty((144, N, N), dtype=np.complex128)
    cdef double complex[:, :, ::1] Hv = H
    cdef int h, k
    cdef double complex acc = 0
    with nogil:
        for h in range(144):
            _matmul(&Hv[h, 0, 0], &Tv[HI1[h], HJ1[h], 0, 0],
                    &Tv[HI2[h], HJ2[h], 0, 0], N)
        for k in range(576):
            acc = acc + SGN[k] * _trdot(&Hv[LH[k], 0, 0], &Hv[RH[k], 0, 0], N)
    return complex(acc)


def quartic_plain(T):
    Ta = np.ascontiguousarray(T, dtype=np.complex128)
    cdef int N = _check_dim(Ta)
    cdef double complex[:, :, :, ::1] Tv = Ta
    H = np.empty((144, N, N), dtype=np.complex128)
    cdef double complex[:, :, ::1] Hv = H
    out = np.zeros((N, N), dtype=np.complex128)
    cdef double complex[:, ::1] Ov = out
    cdef double complex tmp[256]
    cdef int h, k, i, j
    with nogil:
        for h in range(144):
            _matmul(&Hv[h, 0, 0], &Tv[HI1[h], HJ1[h], 0, 0],
                    &Tv[HI2[h], HJ2[h], 0, 0], N)
        for k in range(576):
            _matmul(tmp, &Hv[LH[k], 0, 0], &Hv[RH[k], 0, 0], N)
            for i in range(N):
                for j in range(N):
                    Ov[i, j] = Ov[i, j] + SGN[k] * tmp[i * N + j]
    return out


def quartic_series_trace(A, B):
    Aa = np.ascontiguousarray(A, dtype=np.complex128)
    Ba = np.ascontiguousarray(B, dtype=np.complex128)
    cdef int N = _check_dim(Aa)
    if Ba.shape != Aa.shape:
        raise ValueError("entry tables must share a shape")
    cdef double complex[:, :, :, ::1] Av = Aa
    cdef double complex[:, :, :, ::1] Bv = Ba
    # half-product variants: bit0 = first factor from B, bit1 = second from B
    H = np.empty((4, 144, N, N), dtype=np.complex128)
    cdef double complex[:, :, :, ::1] Hv = H
    out = np.zeros(5, dtype=np.complex128)
    cdef double complex[::1] Ov = out
    cdef const double complex* f
    cdef const double complex* s
    cdef int m, h, k, mask
    with nogil:
        for m in range(4):
            for h in range(144):
                if m & 1:
                    f = &Bv[HI1[h], HJ1[h], 0, 0]
                else:
                    f = &Av[HI1[h], HJ1[h], 0, 0]
                if m & 2:
                    s = &Bv[HI2[h], HJ2[h], 0, 0]
                else:
                    s = &Av[HI2[h], HJ2[h], 0, 0]
                _matmul(&Hv[m, h, 0, 0], f, s, N)
        for k in range(576):
            for mask in range(16):
                Ov[POPCNT[mask]] = Ov[POPCNT[mask]] + SGN[k] * _trdot(
                    &Hv[mask & 3, LH[k], 0, 0], &Hv[(mask >> 2) & 3, RH[k], 0, 0], N)
    return out


def triple_free(T):
    Ta = np.ascontiguousarray(T, dtype=np.complex128)
    cdef int N = _check_dim(Ta)
    cdef double complex[:, :, :, ::1] Tv = Ta
    H = np.empty((144, N, N), dtype=np.complex128)
    cdef double complex[:, :, ::1] Hv = H
    out = np.zeros((4, 4, N, N), dtype=np.complex128)
    cdef double complex[:, :, :, ::1] Ov = out
    cdef double complex tmp[256]
    cdef int h, k, i, j, d, hh
    with nogil:
        for h in range(144):
            _matmul(&Hv[h, 0, 0], &Tv[HI1[h], HJ1[h], 0, 0],
                    &Tv[HI2[h], HJ2[h], 0, 0], N)
        for k in range(576):
            _matmul(tmp, &Hv[LH[k], 0, 0], &Tv[PI[k, 2], PJ[k, 2], 0, 0], N)
            d = PI[k, 3]
            hh = PJ[k, 3]
            for i in range(N):
                for j in range(N):
                    Ov[d, hh, i, j] = Ov[d, hh, i, j] + SGN[k] * tmp[i * N + j]
    return out
