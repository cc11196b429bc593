"""Pure numpy kernels (fallback backend).

Each kernel works on plain complex arrays with the cyclic-group phase
conventions; model-specific twists and measure weights are folded in by the
callers. The implementations here reorganize the defining sums into
per-diagonal FFTs, which keeps everything at O(N^2 log N) - O(N^3); the
compiled backend computes the same sums with direct typed loops.
"""
import numpy as np


def weyl_table(S):
    """t[m, k] = sum_n omega_N^{-kn} S[(n+m) % N, n]  (= tr(pi(-z) S))."""
    N = S.shape[0]
    n = np.arange(N)
    shifted = S[(n[:, None] + n[None, :]) % N, n[None, :]]
    return np.fft.fft(shifted, axis=1)


def weyl_build(fw):
    """sum_{m,k} fw[m, k] omega_{2N}^{-mk} pi(m, k), unweighted.

    Row d = (a-b) % N of the output only sees row d of fw; the combined
    phase omega_{2N}^{-dk} omega_N^{ka} = omega_{2N}^{k(2a-d)} makes each
    row a length-2N inverse DFT.
    """
    N = fw.shape[0]
    H = 2 * N * np.fft.ifft(fw, n=2 * N, axis=1)   # H[d, s] = sum_k fw[d,k] w_{2N}^{ks}
    a = np.arange(N)
    d = (a[:, None] - a[None, :]) % N
    s = (2 * a[:, None] - d) % (2 * N)
    return H[d, s]


def fn_op(f, S):
    """sum_{m,k} f[m, k] alpha_{(m,k)}(S), unweighted.

    alpha_{(m,k)}(S)[a, b] = omega_N^{k(a-b)} S[(a-m) % N, (b-m) % N], so on
    the diagonal d = (a-b) % N the sum over m is a circular convolution of
    f's row transform with S's d-th shifted diagonal.
    """
    N = f.shape[0]
    fhat = N * np.fft.ifft(f, axis=1)               # fhat[m, d] = sum_k f[m,k] w_N^{kd}
    a = np.arange(N)
    Sdiag = S[a[None, :], (a[None, :] - a[:, None]) % N]   # Sdiag[d, a] = S[a, (a-d)%N]
    out_diag = np.fft.ifft(
        np.fft.fft(fhat, axis=0).T * np.fft.fft(Sdiag, axis=1), axis=1)
    rows = np.broadcast_to(a[None, :], (N, N))
    cols = (a[None, :] - a[:, None]) % N
    out = np.empty_like(out_diag)
    out[rows, cols] = out_diag
    return out


def op_op_table(S, W):
    """t[m, k] = tr(S alpha_{(m,k)}(W)).

    Per shifted diagonal d the m-dependence is a circular cross-correlation
    of the two diagonals; the k-dependence is then a single DFT over d.
    """
    N = S.shape[0]
    a = np.arange(N)
    Sd = S[a[None, :], (a[None, :] + a[:, None]) % N]      # Sd[d, a] = S[a, (a+d)%N]
    Wd = W[(a[None, :] + a[:, None]) % N, a[None, :]]      # Wd[d, a] = W[(a+d)%N, a]
    g = np.fft.ifft(
        np.fft.fft(Sd, axis=1) * np.conj(np.fft.fft(np.conj(Wd), axis=1)),
        axis=1)                                            # g[d, m] = sum_a Sd[d,a] Wd[d,(a-m)%N]
    return N * np.fft.ifft(g.T, axis=1)                    # sum_d omega_N^{+kd} g[m,d]


def twisted(f, g):
    """Twisted convolution sum_{z2} f(z1) g(z2) omega_{2N}^{E}, unweighted.

    z1 = (u - z2) mod N componentwise; E carries the wrap corrections that
    make the product formula for the Weyl quantization exact:
    E = m2 k1 - m1 k2 - bN(m1+m2) - aN(k1+k2) + abN^2 with a = [m1+m2 >= N],
    b = [k1+k2 >= N].
    """
    N = f.shape[0]
    tab = np.exp(1j * np.pi * np.arange(2 * N) / N)
    out = np.zeros((N, N), dtype=np.complex128)
    mu = np.arange(N)[:, None]
    ku = np.arange(N)[None, :]
    for m2 in range(N):
        m1 = (mu - m2) % N
        a = (mu < m2).astype(np.int64)
        for k2 in range(N):
            k1 = (ku - k2) % N
            b = (ku < k2).astype(np.int64)
            E = (m2 * k1 - m1 * k2 - b * N * (m1 + m2) - a * N * (k1 + k2)
                 + a * b * N * N) % (2 * N)
            out += f[m1, k1] * g[m2, k2] * tab[E]
    return out
