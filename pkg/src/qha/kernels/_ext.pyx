# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels (direct typed loops).

Same contracts as the pure backend: plain complex arrays, cyclic-group
phases, no measure weights. Phases are read from exact integer-indexed
root-of-unity tables so the two backends agree to rounding.
"""
import numpy as np


cdef inline Py_ssize_t _posmod(Py_ssize_t v, Py_ssize_t n):
    v = v % n
    if v < 0:
        v += n
    return v


def weyl_table(const double complex[:, ::1] S):
    """t[m, k] = sum_n omega_N^{-kn} S[(n+m) % N, n]."""
    cdef Py_ssize_t N = S.shape[0]
    out_arr = np.empty((N, N), dtype=np.complex128)
    tab_arr = np.exp(-2j * np.pi * np.arange(N) / N)
    cdef double complex[:, ::1] out = out_arr
    cdef const double complex[::1] tab = tab_arr
    cdef Py_ssize_t m, k, n
    cdef double complex acc
    for m in range(N):
        for k in range(N):
            acc = 0
            for n in range(N):
                acc = acc + tab[(k * n) % N] * S[(n + m) % N, n]
            out[m, k] = acc
    return out_arr


def weyl_build(const double complex[:, ::1] fw):
    """out[a, b] = sum_k fw[(a-b)%N, k] omega_{2N}^{k(2a-(a-b)%N)}."""
    cdef Py_ssize_t N = fw.shape[0]
    out_arr = np.empty((N, N), dtype=np.complex128)
    tab_arr = np.exp(1j * np.pi * np.arange(2 * N) / N)
    cdef double complex[:, ::1] out = out_arr
    cdef const double complex[::1] tab = tab_arr
    cdef Py_ssize_t a, b, k, d, s
    cdef double complex acc
    for a in range(N):
        for b in range(N):
            d = _posmod(a - b, N)
            s = _posmod(2 * a - d, 2 * N)
            acc = 0
            for k in range(N):
                acc = acc + fw[d, k] * tab[(k * s) % (2 * N)]
            out[a, b] = acc
    return out_arr


def fn_op(const double complex[:, ::1] f, const double complex[:, ::1] S):
    """sum_{m,k} f[m, k] omega_N^{k(a-b)} S[(a-m)%N, (b-m)%N] at [a, b]."""
    cdef Py_ssize_t N = f.shape[0]
    fhat_arr = np.empty((N, N), dtype=np.complex128)
    out_arr = np.empty((N, N), dtype=np.complex128)
    tab_arr = np.exp(2j * np.pi * np.arange(N) / N)
    cdef double complex[:, ::1] fhat = fhat_arr
    cdef double complex[:, ::1] out = out_arr
    cdef const double complex[::1] tab = tab_arr
    cdef Py_ssize_t m, k, d, a, b
    cdef double complex acc
    for m in range(N):
        for d in range(N):
            acc = 0
            for k in range(N):
                acc = acc + f[m, k] * tab[(k * d) % N]
            fhat[m, d] = acc
    for a in range(N):
        for b in range(N):
            d = _posmod(a - b, N)
            acc = 0
            for m in range(N):
                acc = acc + fhat[m, d] * S[_posmod(a - m, N), _posmod(b - m, N)]
            out[a, b] = acc
    return out_arr


def op_op_table(const double complex[:, ::1] S, const double complex[:, ::1] W):
    """t[m, k] = tr(S alpha_{(m,k)}(W)) via per-diagonal cross-correlation."""
    cdef Py_ssize_t N = S.shape[0]
    g_arr = np.empty((N, N), dtype=np.complex128)
    out_arr = np.empty((N, N), dtype=np.complex128)
    tab_arr = np.exp(2j * np.pi * np.arange(N) / N)
    cdef double complex[:, ::1] g = g_arr
    cdef double complex[:, ::1] out = out_arr
    cdef const double complex[::1] tab = tab_arr
    cdef Py_ssize_t d, m, k, a
    cdef double complex acc
    for d in range(N):
        for m in range(N):
            acc = 0
            for a in range(N):
                acc = acc + S[a, (a + d) % N] * W[(_posmod(a - m, N) + d) % N,
                                                  _posmod(a - m, N)]
            g[d, m] = acc
    for m in range(N):
        for k in range(N):
            acc = 0
            for d in range(N):
                acc = acc + g[d, m] * tab[(k * d) % N]
            out[m, k] = acc
    return out_arr


def twisted(const double complex[:, ::1] f, const double complex[:, ::1] g):
    """Twisted convolution with exact wrap-corrected phase, unweighted."""
    cdef Py_ssize_t N = f.shape[0]
    out_arr = np.zeros((N, N), dtype=np.complex128)
    tab_arr = np.exp(1j * np.pi * np.arange(2 * N) / N)
    cdef double complex[:, ::1] out = out_arr
    cdef const double complex[::1] tab = tab_arr
    cdef Py_ssize_t mu, ku, m2, k2, m1, k1, aa, bb, E
    cdef double complex acc
    for mu in range(N):
        for ku in range(N):
            acc = 0
            for m2 in range(N):
                m1 = _posmod(mu - m2, N)
                aa = 1 if m1 + m2 >= N else 0
                for k2 in range(N):
                    k1 = _posmod(ku - k2, N)
                    bb = 1 if k1 + k2 >= N else 0
                    E = _posmod(m2 * k1 - m1 * k2 - bb * N * (m1 + m2)
                                - aa * N * (k1 + k2) + aa * bb * N * N, 2 * N)
                    acc = acc + f[m1, k1] * g[m2, k2] * tab[E]
            out[mu, ku] = acc
    return out_arr
