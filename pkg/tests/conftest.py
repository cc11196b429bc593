"""Shared brute-force oracles for the test suite.

Everything here is written from the defining sums with explicit loops and
dense matrices, independently of the package's FFT/diagonal reorganizations,
so the two routes cross-check each other. Keep these slow and literal.
"""
import numpy as np
import pytest

import qha


def crandom(rng, shape):
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def brute_pi(N, m, k, twist=False):
    """Dense matrix of the time-frequency shift M_k T_m."""
    P = np.zeros((N, N), dtype=complex)
    ph = np.exp(2j * np.pi * k * np.arange(N) / N)
    if twist:
        ph = ph * (-1.0) ** k
    for n in range(N):
        P[n, (n - m) % N] = ph[n]
    return P


def brute_parity(N):
    P = np.zeros((N, N), dtype=complex)
    for n in range(N):
        P[n, (-n) % N] = 1.0
    return P


def brute_alpha(N, m, k, A, twist=False):
    U = brute_pi(N, m, k, twist)
    return U @ A @ U.conj().T


def brute_rho(model, fvals):
    N = model.N
    twist = model.kind == qha.SAMPLED_LINE
    w2 = np.exp(-1j * np.pi / N)
    out = np.zeros((N, N), dtype=complex)
    for m in range(N):
        for k in range(N):
            out += fvals[m, k] * (w2 ** ((m * k) % (2 * N))) * brute_pi(N, m, k, twist)
    return out * model.weight


def brute_fourier_wigner(model, S):
    N = model.N
    twist = model.kind == qha.SAMPLED_LINE
    w2 = np.exp(-1j * np.pi / N)
    out = np.zeros((N, N), dtype=complex)
    for m in range(N):
        for k in range(N):
            out[m, k] = (w2 ** ((m * k) % (2 * N))) * np.trace(
                brute_pi(N, (-m) % N, (-k) % N, twist) @ S)
    return out


def brute_symplectic_fourier(model, fvals):
    N = model.N
    om = np.exp(2j * np.pi / N)
    out = np.zeros((N, N), dtype=complex)
    for m in range(N):
        for k in range(N):
            acc = 0.0
            for mp in range(N):
                for kp in range(N):
                    acc += fvals[mp, kp] * om ** (-((k * mp - kp * m) % N))
            out[m, k] = acc * model.weight
    return out


def brute_twisted_conv(model, f, g):
    N = model.N
    w2 = np.exp(1j * np.pi / N)
    out = np.zeros((N, N), dtype=complex)
    for mu in range(N):
        for ku in range(N):
            acc = 0.0
            for m2 in range(N):
                for k2 in range(N):
                    m1 = (mu - m2) % N
                    k1 = (ku - k2) % N
                    a = 1 if (m1 + m2) >= N else 0
                    b = 1 if (k1 + k2) >= N else 0
                    E = ((m2 * k1 - m1 * k2) - b * N * (m1 + m2)
                         - a * N * (k1 + k2) + a * b * N * N)
                    acc += f[m1, k1] * g[m2, k2] * w2 ** (E % (2 * N))
            out[mu, ku] = acc * model.weight
    return out


def brute_conv_fn_op(model, fvals, S):
    N = model.N
    out = np.zeros((N, N), dtype=complex)
    for m in range(N):
        for k in range(N):
            out += fvals[m, k] * brute_alpha(N, m, k, S)
    return out * model.weight


def brute_conv_op_op(model, S, T):
    N = model.N
    P = brute_parity(N)
    Tc = P @ T @ P
    out = np.zeros((N, N), dtype=complex)
    for m in range(N):
        for k in range(N):
            out[m, k] = np.trace(S @ brute_alpha(N, m, k, Tc))
    return out


def maxerr(a, b):
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


@pytest.fixture(params=[("FiniteCyclic", 5, None), ("FiniteCyclic", 8, None),
                        ("SampledLine", 8, 4.0)],
                ids=["cyclic5", "cyclic8", "line8"])
def any_model(request):
    kind, N, L = request.param
    return qha.build_model(kind, N, L)


@pytest.fixture
def cyclic8():
    return qha.build_model("FiniteCyclic", 8)
