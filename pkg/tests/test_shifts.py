import numpy as np
import pytest

import qha

from conftest import (brute_alpha, brute_parity, brute_pi, crandom, maxerr)


def _is_line(model):
    return model.kind == qha.SAMPLED_LINE


class TestTranslateModulate:
    def test_translate_moves_basis(self):
        m = qha.build_model("FiniteCyclic", 4)
        e0 = qha.basis_vector(m, 0)
        assert maxerr(qha.translate(1, e0).values, qha.basis_vector(m, 1).values) == 0.0

    def test_translate_wraps(self, cyclic8):
        e7 = qha.basis_vector(cyclic8, 7)
        assert maxerr(qha.translate(2, e7).values, qha.basis_vector(cyclic8, 1).values) == 0.0

    def test_both_preserve_norm(self, any_model):
        rng = np.random.default_rng(0)
        psi = qha.StateVector(crandom(rng, any_model.N), any_model)
        assert qha.translate(3, psi).norm2() == pytest.approx(psi.norm2())
        assert qha.modulate(3, psi).norm2() == pytest.approx(psi.norm2())

    def test_modulate_cyclic_phase(self, cyclic8):
        rng = np.random.default_rng(1)
        psi = qha.StateVector(crandom(rng, 8), cyclic8)
        k = 3
        want = np.exp(2j * np.pi * k * np.arange(8) / 8) * psi.values
        assert maxerr(qha.modulate(k, psi).values, want) < 1e-14

    def test_modulate_line_is_plane_wave_on_grid(self):
        """On the sampled line, modulation by k multiplies by the plane wave
        e^{2 pi i k dw x} evaluated at the sample positions x_n = (n - N/2) dx
        of the monotone centered grid."""
        m = qha.build_model("SampledLine", 8, L=4.0)
        rng = np.random.default_rng(2)
        psi = qha.StateVector(crandom(rng, 8), m)
        x = (np.arange(8) - 4) * m.dx
        for k in (1, 3, 6):
            want = np.exp(2j * np.pi * k * m.dw * x) * psi.values
            assert maxerr(qha.modulate(k, psi).values, want) < 1e-13


class TestTfShift:
    def test_zero_point_is_identity(self, any_model):
        U = qha.tf_shift((0, 0), any_model)
        assert maxerr(U.matrix, np.eye(any_model.N)) == 0.0

    def test_matches_brute_matrix(self, any_model):
        N = any_model.N
        for m in range(N):
            for k in range(N):
                U = qha.tf_shift((m, k), any_model)
                assert maxerr(U.matrix, brute_pi(N, m, k, _is_line(any_model))) < 1e-13

    def test_unitary_exhaustive(self, any_model):
        N = any_model.N
        for m in range(N):
            for k in range(N):
                U = qha.tf_shift((m, k), any_model).matrix
                assert maxerr(U @ U.conj().T, np.eye(N)) < 1e-13

    def test_composition_law(self, any_model):
        """pi(z1) pi(z2) = omega_N^{-k2 m1} pi(z1 + z2) in both models."""
        N = any_model.N
        rng = np.random.default_rng(3)
        for _ in range(8):
            m1, k1, m2, k2 = rng.integers(0, N, size=4)
            U1 = qha.tf_shift((m1, k1), any_model).matrix
            U2 = qha.tf_shift((m2, k2), any_model).matrix
            U12 = qha.tf_shift((m1 + m2, k1 + k2), any_model).matrix
            phase = np.exp(-2j * np.pi * k2 * m1 / N)
            assert maxerr(U1 @ U2, phase * U12) < 1e-12

    def test_apply_matches_matrix(self, any_model):
        rng = np.random.default_rng(4)
        psi = qha.StateVector(crandom(rng, any_model.N), any_model)
        for m, k in ((1, 2), (3, 0), (0, 5), (4, 4)):
            z = qha.PhasePoint(m, k, any_model)
            via_matrix = qha.tf_shift(z).matrix @ psi.values
            assert maxerr(qha.tf_shift_apply(z, psi).values, via_matrix) < 1e-13

    def test_phase_point_carries_model(self, cyclic8):
        z = qha.PhasePoint(2, 3, cyclic8)
        U = qha.tf_shift(z)
        assert U.model == cyclic8
        with pytest.raises(qha.ConfigurationError):
            qha.tf_shift((2, 3))


class TestAlpha:
    def test_zero_is_identity_map(self, any_model):
        rng = np.random.default_rng(5)
        A = qha.Op(crandom(rng, (any_model.N,) * 2), any_model)
        assert maxerr(qha.alpha((0, 0), A).matrix, A.matrix) == 0.0

    def test_matches_brute_conjugation(self, any_model):
        rng = np.random.default_rng(6)
        N = any_model.N
        A = qha.Op(crandom(rng, (N, N)), any_model)
        for m, k in ((1, 1), (2, 5), (0, 3), (N - 1, N - 1)):
            want = brute_alpha(N, m % N, k % N, A.matrix, _is_line(any_model))
            assert maxerr(qha.alpha((m, k), A).matrix, want) < 1e-12

    def test_group_law(self, any_model):
        rng = np.random.default_rng(7)
        N = any_model.N
        A = qha.Op(crandom(rng, (N, N)), any_model)
        for _ in range(6):
            m1, k1, m2, k2 = rng.integers(0, N, size=4)
            lhs = qha.alpha((m1, k1), qha.alpha((m2, k2), A))
            rhs = qha.alpha((m1 + m2, k1 + k2), A)
            assert maxerr(lhs.matrix, rhs.matrix) < 1e-12

    def test_preserves_trace_and_norms(self, any_model):
        rng = np.random.default_rng(8)
        A = qha.Op(crandom(rng, (any_model.N,) * 2), any_model)
        B = qha.alpha((2, 3), A)
        assert abs(B.trace() - A.trace()) < 1e-12
        for p in (1, 2, np.inf):
            assert qha.schatten_norm(B, p) == pytest.approx(qha.schatten_norm(A, p))


class TestStft:
    def test_matches_brute_inner_products(self, any_model):
        rng = np.random.default_rng(9)
        N = any_model.N
        psi = qha.StateVector(crandom(rng, N), any_model)
        phi = qha.StateVector(crandom(rng, N), any_model)
        V = qha.stft(psi, phi).values
        tw = _is_line(any_model)
        for m in range(N):
            for k in range(N):
                want = (np.sum(psi.values * np.conj(brute_pi(N, m, k, tw) @ phi.values))
                        * any_model.vector_weight)
                assert abs(V[m, k] - want) < 1e-12

    def test_value_at_origin(self, any_model):
        rng = np.random.default_rng(10)
        psi = qha.StateVector(crandom(rng, any_model.N), any_model)
        phi = qha.StateVector(crandom(rng, any_model.N), any_model)
        assert abs(qha.stft(psi, phi).values[0, 0] - psi.inner(phi)) < 1e-13

    def test_sup_bound(self, any_model):
        rng = np.random.default_rng(11)
        psi = qha.StateVector(crandom(rng, any_model.N), any_model)
        phi = qha.StateVector(crandom(rng, any_model.N), any_model)
        V = qha.stft(psi, phi)
        assert qha.lp_norm(V, np.inf) <= psi.norm2() * phi.norm2() * (1 + 1e-12)

    def test_orthogonality_relation(self, any_model):
        """The weighted l^2 mass of the transform factors into the two norms
        exactly, in both models."""
        rng = np.random.default_rng(12)
        for _ in range(5):
            psi = qha.StateVector(crandom(rng, any_model.N), any_model)
            phi = qha.StateVector(crandom(rng, any_model.N), any_model)
            V = qha.stft(psi, phi)
            lhs = qha.lp_norm(V, 2) ** 2
            rhs = (psi.norm2() * phi.norm2()) ** 2
            assert abs(lhs - rhs) <= 1e-12 * rhs

    def test_basis_pair_concentrates_on_zero_shift(self, cyclic8):
        e0 = qha.basis_vector(cyclic8, 0)
        V = qha.stft(e0, e0).values
        want = np.zeros((8, 8))
        want[0, :] = 1.0
        assert maxerr(V, want) < 1e-13

    def test_covariance_modulus(self, any_model):
        rng = np.random.default_rng(13)
        psi = qha.StateVector(crandom(rng, any_model.N), any_model)
        phi = qha.StateVector(crandom(rng, any_model.N), any_model)
        base = np.abs(qha.stft(psi, phi).values)
        m0, k0 = 2, 3
        shifted = qha.tf_shift_apply((m0, k0), psi)
        moved = np.abs(qha.stft(shifted, phi).values)
        assert maxerr(moved, np.roll(base, (m0, k0), axis=(0, 1))) < 1e-12


class TestWigner:
    def test_real_and_mass(self, any_model):
        rng = np.random.default_rng(14)
        psi = qha.StateVector(crandom(rng, any_model.N), any_model)
        W = qha.wigner(psi)
        assert np.max(np.abs(W.values.imag)) < 1e-12 * max(psi.norm2() ** 2, 1)
        mass = np.sum(W.values.real) * any_model.weight
        assert mass == pytest.approx(psi.norm2() ** 2, rel=1e-11)

    @pytest.mark.parametrize("N", [4, 5])
    def test_cyclic_fourier_factorization(self, N):
        """The symplectic Fourier transform of the cyclic Wigner table equals
        the product of the Fourier-Wigner transforms of psi (x) psi and of the
        parity unitary, divided by the parity trace."""
        model = qha.build_model("FiniteCyclic", N)
        rng = np.random.default_rng(15)
        psi = qha.StateVector(crandom(rng, N), model)
        W = qha.wigner(psi)
        F = qha.symplectic_fourier(W)
        P = qha.Op(brute_parity(N), model)
        tr_parity = 1.0 if N % 2 else 2.0
        want = (qha.fourier_wigner(qha.rank_one(psi, psi)).values
                * qha.fourier_wigner(P).values / tr_parity)
        assert maxerr(F.values, want) < 1e-11 * max(psi.norm2() ** 2, 1)

    def test_line_gaussian_profile(self):
        """Wigner table of the standard Gaussian window against the closed
        form 2 e^{-2 pi |z|^2} inside |z| <= 3; the periodization ghost sits
        at distance L/2 = 6 and is negligible there."""
        model = qha.build_model("SampledLine", 128, L=12.0)
        phi = qha.gaussian_window(model)
        W = qha.wigner(phi).values.real
        n = np.arange(128)
        x = np.asarray(model.signed_index(n), dtype=float) * model.dx
        w = np.asarray(model.signed_index(n), dtype=float) * model.dw
        r2 = x[:, None] ** 2 + w[None, :] ** 2
        sel = r2 <= 9.0
        assert np.max(np.abs(W[sel] - 2.0 * np.exp(-2 * np.pi * r2[sel]))) < 1e-6

    def test_covariance_under_translation(self, any_model):
        """Shifting the state by pi(m0, 0) rolls the table along axis 0.

        Exact in both models, for arbitrary (full-band) states."""
        rng = np.random.default_rng(16)
        psi = qha.StateVector(crandom(rng, any_model.N), any_model)
        W = qha.wigner(psi).values
        for m0 in (3, 5):
            Ws = qha.wigner(qha.tf_shift_apply((m0, 0), psi)).values
            assert maxerr(Ws, np.roll(W, m0, axis=0)) < 1e-11 * max(
                psi.norm2() ** 2, 1)

    def test_cyclic_covariance_under_lattice_shift(self, cyclic8):
        """On the cyclic model the full shift pi(m0, k0) rolls the table
        along both axes, exactly, for any state."""
        rng = np.random.default_rng(16)
        psi = qha.StateVector(crandom(rng, 8), cyclic8)
        W = qha.wigner(psi).values
        m0, k0 = 3, 1
        Ws = qha.wigner(qha.tf_shift_apply((m0, k0), psi)).values
        assert maxerr(Ws, np.roll(W, (m0, k0), axis=(0, 1))) < 1e-11 * max(
            psi.norm2() ** 2, 1)

    def test_line_covariance_for_well_sampled_state(self):
        """On the line model modulation covariance relies on the state having
        negligible spectral weight in its top frequency bins (the interpolant
        onto the doubled grid cannot track content aliased past the original
        Nyquist rate). The Gaussian window satisfies this to rounding
        precision, so the full double roll holds there."""
        model = qha.build_model("SampledLine", 64, L=8.0)
        phi = qha.gaussian_window(model)
        W = qha.wigner(phi).values
        for z0 in [(3, 1), (7, 5), (10, 60)]:
            Ws = qha.wigner(qha.tf_shift_apply(z0, phi)).values
            assert maxerr(Ws, np.roll(W, z0, axis=(0, 1))) < 1e-12

    def test_line_modulation_breaks_for_full_band_state(self):
        """Converse of the previous test: a random state has order-one energy
        at the top of the band, so the modulated table visibly departs from
        the rolled one. This pins down the documented limitation rather than
        letting it pass silently."""
        model = qha.build_model("SampledLine", 8, L=4.0)
        rng = np.random.default_rng(16)
        psi = qha.StateVector(crandom(rng, 8), model)
        W = qha.wigner(psi).values
        Ws = qha.wigner(qha.tf_shift_apply((0, 1), psi)).values
        assert maxerr(Ws, np.roll(W, (0, 1), axis=(0, 1))) > 1e-3

    def test_parity_flips_table(self, cyclic8):
        rng = np.random.default_rng(17)
        psi = qha.StateVector(crandom(rng, 8), cyclic8)
        W = qha.wigner(psi).values
        Wp = qha.wigner(psi.parity()).values
        idx = (-np.arange(8)) % 8
        assert maxerr(Wp, W[np.ix_(idx, idx)]) < 1e-12 * max(psi.norm2() ** 2, 1)
