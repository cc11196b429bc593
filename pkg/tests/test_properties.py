"""Property-based checks over randomly drawn lattice sizes and inputs."""
import numpy as np
from hypothesis import given, settings, strategies as st

import qha

from conftest import crandom, maxerr

_sizes = st.integers(min_value=2, max_value=12)
_seeds = st.integers(min_value=0, max_value=2 ** 31 - 1)


@settings(deadline=None, max_examples=25)
@given(N=_sizes, seed=_seeds, line=st.booleans())
def test_shift_composition_law(N, seed, line):
    if line:
        N += N % 2
        model = qha.build_model("SampledLine", N, L=float(N))
    else:
        model = qha.build_model("FiniteCyclic", N)
    rng = np.random.default_rng(seed)
    m1, k1, m2, k2 = (int(v) for v in rng.integers(0, N, size=4))
    U1 = qha.tf_shift((m1, k1), model).matrix
    U2 = qha.tf_shift((m2, k2), model).matrix
    U12 = qha.tf_shift((m1 + m2, k1 + k2), model).matrix
    phase = np.exp(-2j * np.pi * k2 * m1 / N)
    assert maxerr(U1 @ U2, phase * U12) < 1e-12


@settings(deadline=None, max_examples=25)
@given(N=st.integers(min_value=2, max_value=9), seed=_seeds)
def test_twisted_convolution_associative(N, seed):
    model = qha.build_model("FiniteCyclic", N)
    rng = np.random.default_rng(seed)
    f, g, h = (qha.PhaseFunction(crandom(rng, (N, N)), model) for _ in range(3))
    lhs = qha.twisted_conv(qha.twisted_conv(f, g), h)
    rhs = qha.twisted_conv(f, qha.twisted_conv(g, h))
    scale = qha.lp_norm(f, 2) * qha.lp_norm(g, 2) * qha.lp_norm(h, 2)
    assert maxerr(lhs.values, rhs.values) < 1e-11 * max(scale, 1.0)


@settings(deadline=None, max_examples=25)
@given(N=_sizes, seed=_seeds)
def test_zero_set_invariant_under_window_shift(N, seed):
    """Shifting the window with alpha_z only rotates phases of its
    transform, so the zero diagnostic must not change."""
    model = qha.build_model("FiniteCyclic", N)
    rng = np.random.default_rng(seed)
    sigma = qha.random_density(model, int(rng.integers(1, N + 1)), seed)
    m0, k0 = (int(v) for v in rng.integers(0, N, size=2))
    base = qha.zero_set(sigma, tol=0.2)
    moved = qha.zero_set(qha.alpha((m0, k0), sigma), tol=0.2)
    assert [(p.m, p.k) for p in base.zero_points] == [
        (p.m, p.k) for p in moved.zero_points]
    assert base.classification == moved.classification


@settings(deadline=None, max_examples=25)
@given(N=_sizes, seed=_seeds)
def test_symplectic_fourier_involutive(N, seed):
    model = qha.build_model("FiniteCyclic", N)
    rng = np.random.default_rng(seed)
    f = qha.PhaseFunction(crandom(rng, (N, N)), model)
    twice = qha.symplectic_fourier(qha.symplectic_fourier(f))
    assert maxerr(twice.values, f.values) < 1e-12 * max(qha.lp_norm(f, np.inf), 1.0)
