"""Weyl quantization, twisted convolution, the function/operator convolutions,
the operator Fourier transform, and the registered-identity verification
suite.

Weight conventions: every lattice "integral" carries the model weight (1/N in
both models), so rho, twisted_conv, conv_fn_fn and conv_fn_op multiply their
sums by it; conv_op_op is a pointwise trace and carries no weight (its
integral identities reintroduce the weight explicitly).
"""
import json
import time
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ConfigurationError
from .model import (PhaseFunction, PhaseSpaceModel, array_digest, build_model,
                    lp_norm, symplectic_fourier, FINITE_CYCLIC)
from .operators import Op, adjoint, parity_conj, schatten_norm


def _half_phase(model: PhaseSpaceModel):
    """The e^{-pi i x.w} prefactor table, including the fault-injection
    perturbation when QHA_PHASE_TWIST is set."""
    if model.half_corr is not None:
        return model.half_mk * model.half_corr
    return model.half_mk


def rho(f: PhaseFunction) -> Op:
    """Weyl quantization: weight * sum_z f(z) e^{-pi i x.w} pi(z)."""
    model = f.model
    fw = f.values * model.mod_twist[None, :]
    if model.half_corr is not None:
        fw = fw * model.half_corr
    return Op(model.weight * kernels.weyl_build(fw), model)


def fourier_wigner(S: Op) -> PhaseFunction:
    """Operator Fourier transform: F_W S(z) = e^{-pi i x.w} tr(pi(-z) S).

    Exact inverse of rho, and unitary from the Hilbert-Schmidt norm to the
    weighted lattice L^2 norm.
    """
    model = S.model
    vals = _half_phase(model) * model.mod_twist[None, :] * kernels.weyl_table(S.matrix)
    return PhaseFunction(vals, model)


def twisted_conv(f: PhaseFunction, g: PhaseFunction) -> PhaseFunction:
    """Twisted convolution; satisfies rho(f) rho(g) = rho(twisted_conv(f, g))
    exactly on the lattice (the phase carries wrap corrections)."""
    f.model.check_same(g.model)
    return PhaseFunction(f.model.weight * kernels.twisted(f.values, g.values),
                         f.model)


def conv_fn_fn(f: PhaseFunction, g: PhaseFunction) -> PhaseFunction:
    """Ordinary (untwisted) convolution of two lattice functions."""
    f.model.check_same(g.model)
    vals = np.fft.ifft2(np.fft.fft2(f.values) * np.fft.fft2(g.values))
    return PhaseFunction(f.model.weight * vals, f.model)


def conv_fn_op(f: PhaseFunction, S: Op) -> Op:
    """Function-operator convolution: weight * sum_z f(z) alpha_z(S)."""
    f.model.check_same(S.model)
    return Op(f.model.weight * kernels.fn_op(f.values, S.matrix), f.model)


def conv_op_op(S: Op, T: Op) -> PhaseFunction:
    """Operator-operator convolution (S * T)(z) = tr(S alpha_z(PTP))."""
    S.model.check_same(T.model)
    Tc = parity_conj(T)
    return PhaseFunction(kernels.op_op_table(S.matrix, Tc.matrix), S.model)


# ---------------------------------------------------------------------------
# Verification suite
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    identity: str
    N: int
    seed: int
    inputs_digest: str
    max_abs_error: float
    tolerance: float
    passed: bool
    runtime_ms: float

    def to_json_line(self) -> str:
        return json.dumps({
            "identity": self.identity,
            "N": self.N,
            "seed": self.seed,
            "max_abs_error": self.max_abs_error,
            "tolerance": self.tolerance,
            "passed": self.passed,
        })


def _rand_fn(model, rng) -> PhaseFunction:
    N = model.N
    return PhaseFunction(rng.normal(size=(N, N)) + 1j * rng.normal(size=(N, N)),
                         model)


def _rand_op(model, rng) -> Op:
    N = model.N
    return Op(rng.normal(size=(N, N)) + 1j * rng.normal(size=(N, N)), model)


def _maxerr(a, b):
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def _id_conv_fourier_1(model, rng):
    """F(S * T) = F_W(S) . F_W(T)   (pointwise product)."""
    S, T = _rand_op(model, rng), _rand_op(model, rng)
    lhs = symplectic_fourier(conv_op_op(S, T)).values
    rhs = fourier_wigner(S).values * fourier_wigner(T).values
    scale = schatten_norm(S, 2) * schatten_norm(T, 2)
    return _maxerr(lhs, rhs), scale, array_digest(S.matrix, T.matrix)


def _id_conv_fourier_2(model, rng):
    """F_W(f * S) = F(f) . F_W(S)."""
    f, S = _rand_fn(model, rng), _rand_op(model, rng)
    lhs = fourier_wigner(conv_fn_op(f, S)).values
    rhs = symplectic_fourier(f).values * fourier_wigner(S).values
    scale = lp_norm(f, 2) * schatten_norm(S, 2)
    return _maxerr(lhs, rhs), scale, array_digest(f.values, S.matrix)


def _id_twisted_product(model, rng):
    """rho(f) rho(g) = rho(f natural g)."""
    f, g = _rand_fn(model, rng), _rand_fn(model, rng)
    lhs = (rho(f) @ rho(g)).matrix
    rhs = rho(twisted_conv(f, g)).matrix
    scale = lp_norm(f, 2) * lp_norm(g, 2)
    return _maxerr(lhs, rhs), scale, array_digest(f.values, g.values)


def _id_trace_integral(model, rng):
    """weight * sum_z (S * T)(z) = tr(S) tr(T)."""
    S, T = _rand_op(model, rng), _rand_op(model, rng)
    lhs = np.sum(conv_op_op(S, T).values) * model.weight
    rhs = S.trace() * T.trace()
    scale = schatten_norm(S, 2) * schatten_norm(T, 2) * model.N
    return float(abs(lhs - rhs)), scale, array_digest(S.matrix, T.matrix)


def _id_associativity_ffo(model, rng):
    """(f conv g) * S = f * (g * S)."""
    f, g, S = _rand_fn(model, rng), _rand_fn(model, rng), _rand_op(model, rng)
    lhs = conv_fn_op(conv_fn_fn(f, g), S).matrix
    rhs = conv_fn_op(f, conv_fn_op(g, S)).matrix
    scale = lp_norm(f, 2) * lp_norm(g, 2) * schatten_norm(S, 2)
    return _maxerr(lhs, rhs), scale, array_digest(f.values, g.values, S.matrix)


def _id_associativity_foo(model, rng):
    """(f * S) * T = f conv (S * T)."""
    f, S, T = _rand_fn(model, rng), _rand_op(model, rng), _rand_op(model, rng)
    lhs = conv_op_op(conv_fn_op(f, S), T).values
    rhs = conv_fn_fn(f, conv_op_op(S, T)).values
    scale = lp_norm(f, 2) * schatten_norm(S, 2) * schatten_norm(T, 2)
    return _maxerr(lhs, rhs), scale, array_digest(f.values, S.matrix, T.matrix)


def _id_commutativity(model, rng):
    """f conv g = g conv f, and function factors commute through a
    mixed double convolution: f * (g * S) = g * (f * S)."""
    f, g, S = _rand_fn(model, rng), _rand_fn(model, rng), _rand_op(model, rng)
    e1 = _maxerr(conv_fn_fn(f, g).values, conv_fn_fn(g, f).values)
    e2 = _maxerr(conv_fn_op(f, conv_fn_op(g, S)).matrix,
                 conv_fn_op(g, conv_fn_op(f, S)).matrix)
    scale = lp_norm(f, 2) * lp_norm(g, 2) * max(schatten_norm(S, 2), 1.0)
    return max(e1, e2), scale, array_digest(f.values, g.values, S.matrix)


_YOUNG_TRIPLES = ((1, 1, 1), (1, 2, 2), (2, 2, np.inf))


def _id_young_norms(model, rng):
    """Young inequalities ||f*S||_r <= ||f||_p ||S||_q and
    ||S*T||_r <= ||S||_p ||T||_q; the reported error is the worst violation
    (0 when every inequality holds)."""
    f, S, T = _rand_fn(model, rng), _rand_op(model, rng), _rand_op(model, rng)
    worst = 0.0
    for p, q, r in _YOUNG_TRIPLES:
        worst = max(worst, schatten_norm(conv_fn_op(f, S), r)
                    - lp_norm(f, p) * schatten_norm(S, q))
        worst = max(worst, lp_norm(conv_op_op(S, T), r)
                    - schatten_norm(S, p) * schatten_norm(T, q))
    scale = max(lp_norm(f, 2), 1.0) * schatten_norm(S, 2) * schatten_norm(T, 2)
    return max(worst, 0.0), scale, array_digest(f.values, S.matrix, T.matrix)


def _id_parseval_trace(model, rng):
    """tr(S^* T) = weight * sum_z conj(F_W S) F_W T."""
    S, T = _rand_op(model, rng), _rand_op(model, rng)
    lhs = (adjoint(S) @ T).trace()
    rhs = np.sum(np.conj(fourier_wigner(S).values)
                 * fourier_wigner(T).values) * model.weight
    scale = schatten_norm(S, 2) * schatten_norm(T, 2)
    return float(abs(lhs - rhs)), scale, array_digest(S.matrix, T.matrix)


def _id_unitarity_fw(model, rng):
    """F_W is an isometry and rho is its two-sided inverse."""
    S, f = _rand_op(model, rng), _rand_fn(model, rng)
    e1 = abs(lp_norm(fourier_wigner(S), 2) - schatten_norm(S, 2))
    e2 = _maxerr(rho(fourier_wigner(S)).matrix, S.matrix)
    e3 = _maxerr(fourier_wigner(rho(f)).values, f.values)
    scale = max(schatten_norm(S, 2), lp_norm(f, 2), 1.0)
    return float(max(e1, e2, e3)), scale, array_digest(S.matrix, f.values)


IDENTITIES = {
    "conv-fourier-1": _id_conv_fourier_1,
    "conv-fourier-2": _id_conv_fourier_2,
    "twisted-product": _id_twisted_product,
    "trace-integral": _id_trace_integral,
    "associativity-ffo": _id_associativity_ffo,
    "associativity-foo": _id_associativity_foo,
    "commutativity": _id_commutativity,
    "young-norms": _id_young_norms,
    "parseval-trace": _id_parseval_trace,
    "unitarity-FW": _id_unitarity_fw,
}


def verify_identity(name: str, seed: int, N: int,
                    model: PhaseSpaceModel = None) -> VerificationReport:
    """Evaluate one registered identity on seeded random inputs.

    The tolerance is 1e-10 times the product of the input norms entering the
    identity (floored at 1), so reports stay meaningful under rescaling.
    """
    if name not in IDENTITIES:
        raise ConfigurationError(
            f"unknown identity {name!r}; registered: {sorted(IDENTITIES)}")
    if model is None:
        model = build_model(FINITE_CYCLIC, N)
    elif model.N != N:
        raise ConfigurationError(f"model has N={model.N}, asked to verify at N={N}")
    rng = np.random.default_rng(seed)
    start = time.perf_counter()
    err, scale, digest = IDENTITIES[name](model, rng)
    runtime_ms = (time.perf_counter() - start) * 1e3
    tolerance = 1e-10 * max(scale, 1.0)
    return VerificationReport(
        identity=name, N=N, seed=seed, inputs_digest=digest,
        max_abs_error=float(err), tolerance=float(tolerance),
        passed=bool(err <= tolerance), runtime_ms=runtime_ms)
