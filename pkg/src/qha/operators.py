"""Dense operator algebra on a phase-space model.

Operators are dense N x N complex matrices; the operator trace is the plain
matrix trace, and state-vector inner products carry the model's per-sample
measure (so rank-one operators include that measure in their entries, which
keeps trace(rank_one(xi, eta)) = <xi, eta> in both models).
"""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, HermiticityError
from .model import FINITE_CYCLIC, PhaseSpaceModel, build_model

HERMITIAN_TOL = 1e-10     # absolute, on the largest entry asymmetry
POSITIVE_TOL = 1e-10      # relative to the largest eigenvalue magnitude


@dataclass(frozen=True)
class StateVector:
    """A vector in the model's N-dimensional state space."""
    values: np.ndarray
    model: PhaseSpaceModel

    def __post_init__(self):
        v = np.array(self.values, dtype=np.complex128)
        if v.shape != (self.model.N,):
            raise ConfigurationError(
                f"values must have shape ({self.model.N},), got {v.shape}")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def inner(self, other: "StateVector") -> complex:
        """<self, other>, linear in the first argument, with measure."""
        self.model.check_same(other.model)
        return complex(np.sum(self.values * np.conj(other.values))
                       * self.model.vector_weight)

    def norm2(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2)
                             * self.model.vector_weight))

    def parity(self) -> "StateVector":
        """Reflection psi[n] -> psi[-n mod N] (x -> -x on the centered grid)."""
        idx = (-np.arange(self.model.N)) % self.model.N
        return StateVector(self.values[idx], self.model)

    def to_json_dict(self) -> dict:
        return {"N": self.model.N, "re": self.values.real.tolist(),
                "im": self.values.imag.tolist()}

    @classmethod
    def from_json_dict(cls, data: dict, model: PhaseSpaceModel) -> "StateVector":
        vals = np.asarray(data["re"], dtype=float) + 1j * np.asarray(data["im"], dtype=float)
        return cls(vals, model)


def basis_vector(model: PhaseSpaceModel, i: int) -> StateVector:
    v = np.zeros(model.N, dtype=np.complex128)
    v[int(i) % model.N] = 1.0
    return StateVector(v, model)


class Op:
    """A dense operator with lazily cached hermiticity/positivity flags."""

    def __init__(self, matrix, model: PhaseSpaceModel):
        m = np.array(matrix, dtype=np.complex128)
        if m.shape != (model.N, model.N):
            raise ConfigurationError(
                f"matrix must have shape ({model.N}, {model.N}), got {m.shape}")
        m.setflags(write=False)
        self.matrix = m
        self.model = model
        self._hermitian = None
        self._positive = None

    @property
    def is_hermitian(self) -> bool:
        if self._hermitian is None:
            asym = np.max(np.abs(self.matrix - self.matrix.conj().T)) if self.model.N else 0.0
            self._hermitian = bool(asym <= HERMITIAN_TOL)
        return self._hermitian

    @property
    def is_positive(self) -> bool:
        if self._positive is None:
            if not self.is_hermitian:
                self._positive = False
            else:
                sym = (self.matrix + self.matrix.conj().T) / 2
                eigs = np.linalg.eigvalsh(sym)
                top = float(np.max(np.abs(eigs))) if eigs.size else 0.0
                self._positive = bool(eigs.min() >= -POSITIVE_TOL * max(top, 1e-300))
        return self._positive

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def __matmul__(self, other: "Op") -> "Op":
        self.model.check_same(other.model)
        return Op(self.matrix @ other.matrix, self.model)

    def __repr__(self):
        return f"Op(N={self.model.N}, kind={self.model.kind})"

    def to_json_dict(self) -> dict:
        return {"N": self.model.N, "re": self.matrix.real.tolist(),
                "im": self.matrix.imag.tolist()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict, model: PhaseSpaceModel) -> "Op":
        if int(data["N"]) != model.N:
            raise ConfigurationError(
                f"operator dimension {data['N']} does not match model N={model.N}")
        m = np.asarray(data["re"], dtype=float) + 1j * np.asarray(data["im"], dtype=float)
        return cls(m, model)

    def eigenvalues_to_csv(self, fileobj):
        """Write index,eigenvalue rows (ascending; requires Hermitian)."""
        if not self.is_hermitian:
            raise HermiticityError("eigenvalue report requires a Hermitian operator")
        sym = (self.matrix + self.matrix.conj().T) / 2
        writer = csv.writer(fileobj)
        writer.writerow(["index", "eigenvalue"])
        for i, ev in enumerate(np.linalg.eigvalsh(sym)):
            writer.writerow([i, repr(float(ev))])


def identity_op(model: PhaseSpaceModel) -> Op:
    return Op(np.eye(model.N, dtype=np.complex128), model)


def rank_one(xi: StateVector, eta: StateVector) -> Op:
    """xi (x) eta, the operator zeta -> <zeta, eta> xi.

    Entries xi[i] conj(eta[j]) times the model's per-sample measure, so
    trace = <xi, eta> and schatten_norm(., p) = ||xi||_2 ||eta||_2 in both
    models (on FiniteCyclic the measure is 1 and entries are literal).
    """
    xi.model.check_same(eta.model)
    return Op(np.outer(xi.values, np.conj(eta.values)) * xi.model.vector_weight,
              xi.model)


def schatten_norm(A: Op, p) -> float:
    """l^p norm of the singular values; p = inf gives the largest one."""
    s = np.linalg.svd(A.matrix, compute_uv=False)
    if p == np.inf:
        return float(s[0]) if s.size else 0.0
    if not (isinstance(p, (int, float)) and p >= 1):
        raise ConfigurationError(f"p must be >= 1 or inf, got {p!r}")
    return float(np.sum(s ** p) ** (1.0 / p))


def adjoint(A: Op) -> Op:
    return Op(A.matrix.conj().T, A.model)


def parity_conj(A: Op) -> Op:
    """P A P with P the index-reversal permutation n -> (N - n) mod N."""
    idx = (-np.arange(A.model.N)) % A.model.N
    return Op(A.matrix[np.ix_(idx, idx)], A.model)


@dataclass(frozen=True)
class ConvexFunctional:
    """A positive, convex, continuous function applied via spectral calculus.

    Variants: exp (t -> e^{-beta t}), positive-part (t -> max(t, 0)),
    abs-power (t -> |t|^p with p >= 1).
    """
    kind: str
    param: float = 0.0

    def __post_init__(self):
        if self.kind not in ("exp", "positive-part", "abs-power"):
            raise ConfigurationError(f"unknown functional kind {self.kind!r}")
        if self.kind == "abs-power" and not self.param >= 1:
            raise ConfigurationError("abs-power requires exponent p >= 1")

    @classmethod
    def exp(cls, beta: float) -> "ConvexFunctional":
        return cls("exp", float(beta))

    @classmethod
    def positive_part(cls) -> "ConvexFunctional":
        return cls("positive-part")

    @classmethod
    def abs_power(cls, p: float) -> "ConvexFunctional":
        return cls("abs-power", float(p))

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind == "exp":
            return np.exp(-self.param * t)
        if self.kind == "positive-part":
            return np.maximum(t, 0.0)
        return np.abs(t) ** self.param

    def label(self) -> str:
        if self.kind == "exp":
            return f"Exp({self.param:g})"
        if self.kind == "positive-part":
            return "PositivePart"
        return f"AbsPower({self.param:g})"


def spectral_apply(phi: ConvexFunctional, A: Op) -> Op:
    """Apply phi to a Hermitian operator through its eigendecomposition."""
    asym = float(np.max(np.abs(A.matrix - A.matrix.conj().T)))
    if asym > HERMITIAN_TOL:
        raise HermiticityError(
            f"spectral_apply requires a Hermitian operator: max entry "
            f"asymmetry {asym:.3e} exceeds tolerance {HERMITIAN_TOL:.0e}")
    sym = (A.matrix + A.matrix.conj().T) / 2
    evals, evecs = np.linalg.eigh(sym)
    return Op((evecs * phi(evals)[None, :]) @ evecs.conj().T, A.model)


def _coerce_model(model_or_n) -> PhaseSpaceModel:
    if isinstance(model_or_n, PhaseSpaceModel):
        return model_or_n
    return build_model(FINITE_CYCLIC, int(model_or_n))


def random_density(model_or_n, rank: int, seed: int) -> Op:
    """Random positive operator of the given rank with trace exactly 1."""
    model = _coerce_model(model_or_n)
    if not 1 <= rank <= model.N:
        raise ConfigurationError(f"rank must be in 1..{model.N}, got {rank}")
    rng = np.random.default_rng(seed)
    G = rng.standard_normal((model.N, rank)) + 1j * rng.standard_normal((model.N, rank))
    M = G @ G.conj().T
    return Op(M / np.trace(M).real, model)


def random_hermitian(model_or_n, seed: int) -> Op:
    model = _coerce_model(model_or_n)
    rng = np.random.default_rng(seed)
    G = rng.standard_normal((model.N, model.N)) + 1j * rng.standard_normal((model.N, model.N))
    return Op((G + G.conj().T) / 2, model)
