"""Discrete phase-space models, lattice points, functions, and the
symplectic Fourier transform.

Two models of the one-dimensional phase plane are provided:

``FiniteCyclic``
    The N x N lattice over the cyclic group of order N. All phases are exact
    roots of unity, so the structural identities of the calculus hold to
    machine precision. Coordinates are reported as signed integers.

``SampledLine``
    N samples of the real line on the centered grid x_n = (n - N/2) dx with
    dx = L/N and frequency step dw = 1/L. Shares the FiniteCyclic algebra
    (N must be even) while giving quantities their physical scale, so
    Gaussian special cases can be compared against closed forms.

Lattice indices (m, k) always live in {0, ..., N-1}; the fixed mapping to
signed coordinates (used for reporting, CSV export, and radius cuts) is
signed(i) = ((i + N//2) mod N) - N//2.
"""
from __future__ import annotations

import csv
import hashlib
import json
import math
import os
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import ConfigurationError, ModelMismatchError

FINITE_CYCLIC = "FiniteCyclic"
SAMPLED_LINE = "SampledLine"

_KIND_ALIASES = {
    "finitecyclic": FINITE_CYCLIC,
    "finite-cyclic": FINITE_CYCLIC,
    "finite_cyclic": FINITE_CYCLIC,
    "cyclic": FINITE_CYCLIC,
    "sampledline": SAMPLED_LINE,
    "sampled-line": SAMPLED_LINE,
    "sampled_line": SAMPLED_LINE,
    "line": SAMPLED_LINE,
}


def _normalize_kind(kind: str) -> str:
    canon = _KIND_ALIASES.get(str(kind).lower())
    if canon is None:
        raise ConfigurationError(
            f"unknown model kind {kind!r}; expected {FINITE_CYCLIC} or {SAMPLED_LINE}")
    return canon


@dataclass(frozen=True, eq=False)
class PhaseSpaceModel:
    """Immutable description of the discretized phase space.

    weight is the per-lattice-point measure (1/N in both models; on
    SampledLine it arises as dx*dw). vector_weight is the per-sample
    measure for state vectors (1 or dx).
    """
    kind: str
    N: int
    L: Optional[float] = None
    weight: float = field(init=False)
    dx: float = field(init=False)
    dw: float = field(init=False)
    vector_weight: float = field(init=False)
    phase_twist: float = field(init=False)

    def __post_init__(self):
        if self.kind == SAMPLED_LINE:
            dx = self.L / self.N
            dw = 1.0 / self.L
            object.__setattr__(self, "dx", dx)
            object.__setattr__(self, "dw", dw)
            object.__setattr__(self, "weight", dx * dw)
            object.__setattr__(self, "vector_weight", dx)
        else:
            object.__setattr__(self, "dx", 1.0)
            object.__setattr__(self, "dw", 1.0)
            object.__setattr__(self, "weight", 1.0 / self.N)
            object.__setattr__(self, "vector_weight", 1.0)
        eps = float(os.environ.get("QHA_PHASE_TWIST", "0") or "0")
        object.__setattr__(self, "phase_twist", eps)
        N = self.N
        n = np.arange(N)
        root_n = np.exp(2j * np.pi * n / N)
        mk = np.outer(n, n)
        half_mk = np.exp(-1j * np.pi * (mk % (2 * N)) / N)
        if self.kind == SAMPLED_LINE:
            mod_twist = np.where(n % 2 == 0, 1.0, -1.0)
        else:
            mod_twist = np.ones(N)
        half_corr = np.exp(-1j * np.pi * eps * mk / N) if eps else None
        for name, arr in (("root_n", root_n), ("half_mk", half_mk),
                          ("mod_twist", mod_twist), ("half_corr", half_corr)):
            if arr is not None:
                arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def __eq__(self, other):
        return (isinstance(other, PhaseSpaceModel)
                and self.kind == other.kind and self.N == other.N
                and self.L == other.L)

    def __hash__(self):
        return hash((self.kind, self.N, self.L))

    def __repr__(self):
        if self.kind == SAMPLED_LINE:
            return f"PhaseSpaceModel({self.kind}, N={self.N}, L={self.L})"
        return f"PhaseSpaceModel({self.kind}, N={self.N})"

    def signed_index(self, idx):
        """Canonical index -> signed index in [-N//2, N - N//2)."""
        half = self.N // 2
        return (np.asarray(idx) + half) % self.N - half

    def coords(self, m, k):
        """Signed coordinates (x, omega) of lattice indices (m, k)."""
        return (float(self.signed_index(m)) * self.dx,
                float(self.signed_index(k)) * self.dw)

    def check_same(self, other: "PhaseSpaceModel"):
        if self != other:
            raise ModelMismatchError(
                f"operands live on different models: {self!r} vs {other!r}")


def build_model(kind, N, L=None) -> PhaseSpaceModel:
    """Construct a phase-space model.

    FiniteCyclic takes no L; SampledLine requires L > 0 and even N (the
    centered-grid modulation phase is N-periodic only for even N).
    """
    kind = _normalize_kind(kind)
    if not isinstance(N, (int, np.integer)) or isinstance(N, bool) or N < 2:
        raise ConfigurationError(f"N must be an integer >= 2, got {N!r}")
    N = int(N)
    if kind == FINITE_CYCLIC:
        if L is not None:
            raise ConfigurationError("L is only meaningful for SampledLine")
        return PhaseSpaceModel(kind, N)
    if L is None or not (float(L) > 0):
        raise ConfigurationError("SampledLine requires a period L > 0")
    if N % 2:
        raise ConfigurationError("SampledLine requires even N")
    return PhaseSpaceModel(kind, N, float(L))


@dataclass(frozen=True)
class PhasePoint:
    """A lattice point (m, k); indices are reduced mod N on construction."""
    m: int
    k: int
    model: PhaseSpaceModel

    def __post_init__(self):
        object.__setattr__(self, "m", int(self.m) % self.model.N)
        object.__setattr__(self, "k", int(self.k) % self.model.N)

    @property
    def x(self) -> float:
        return float(self.model.signed_index(self.m)) * self.model.dx

    @property
    def omega(self) -> float:
        return float(self.model.signed_index(self.k)) * self.model.dw

    def __neg__(self) -> "PhasePoint":
        return PhasePoint(-self.m, -self.k, self.model)

    def __iter__(self):
        return iter((self.m, self.k))


def as_indices(z, model: PhaseSpaceModel):
    """Accept a PhasePoint or an (m, k) pair; return canonical indices."""
    if isinstance(z, PhasePoint):
        model.check_same(z.model)
        return z.m, z.k
    m, k = z
    return int(m) % model.N, int(k) % model.N


@dataclass(frozen=True)
class PhaseFunction:
    """A complex function on the N x N phase-space lattice."""
    values: np.ndarray
    model: PhaseSpaceModel

    def __post_init__(self):
        v = np.array(self.values, dtype=np.complex128)
        if v.shape != (self.model.N, self.model.N):
            raise ConfigurationError(
                f"values must have shape ({self.model.N}, {self.model.N}), "
                f"got {v.shape}")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def to_json_dict(self) -> dict:
        out = {"kind": self.model.kind, "N": self.model.N,
               "re": self.values.real.tolist(), "im": self.values.imag.tolist()}
        if self.model.kind == SAMPLED_LINE:
            out["L"] = self.model.L
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "PhaseFunction":
        model = build_model(data["kind"], int(data["N"]), data.get("L"))
        vals = np.asarray(data["re"], dtype=float) + 1j * np.asarray(data["im"], dtype=float)
        return cls(vals, model)

    @classmethod
    def from_json(cls, text: str) -> "PhaseFunction":
        return cls.from_json_dict(json.loads(text))

    def to_csv(self, fileobj):
        """Write rows m,k,x,omega,re,im (m-major order)."""
        writer = csv.writer(fileobj)
        writer.writerow(["m", "k", "x", "omega", "re", "im"])
        md = self.model
        for m in range(md.N):
            x = float(md.signed_index(m)) * md.dx
            for k in range(md.N):
                omega = float(md.signed_index(k)) * md.dw
                v = self.values[m, k]
                writer.writerow([m, k, repr(x), repr(omega),
                                 repr(float(v.real)), repr(float(v.imag))])


def symplectic_fourier(f: PhaseFunction) -> PhaseFunction:
    """Symplectic Fourier transform
    (F f)(z) = weight * sum_{z'} f(z') e^{-2 pi i [z, z']}.

    Involutive and unitary on the weighted l2 space, exactly for all N.
    """
    v = f.values
    # [z,z'] = (k m' - k' m)/N: separable into a forward DFT over m' at
    # frequency k and an inverse DFT over k' at frequency m; the 1/N weight
    # cancels the forward-transform normalization.
    out = np.fft.fft(np.fft.ifft(v, axis=1), axis=0).T
    return PhaseFunction(np.ascontiguousarray(out), f.model)


def symplectic_form(z, zp) -> float:
    """The symplectic form of two lattice points, in signed coordinates.

    For points z=(x,omega), z'=(x',omega') the value is omega*x' - omega'*x,
    which on either model equals (sk*sm' - sk'*sm)/N with signed indices.
    """
    if not (isinstance(z, PhasePoint) and isinstance(zp, PhasePoint)):
        raise ConfigurationError("symplectic_form expects PhasePoint operands")
    z.model.check_same(zp.model)
    sm1 = int(z.model.signed_index(z.m))
    sk1 = int(z.model.signed_index(z.k))
    sm2 = int(zp.model.signed_index(zp.m))
    sk2 = int(zp.model.signed_index(zp.k))
    return (sk1 * sm2 - sk2 * sm1) / z.model.N


def lp_norm(f: PhaseFunction, p) -> float:
    """Weighted lattice L^p norm; p = inf gives the max modulus."""
    if p == math.inf:
        return float(np.max(np.abs(f.values))) if f.values.size else 0.0
    if not (isinstance(p, (int, float)) and p >= 1):
        raise ConfigurationError(f"p must be >= 1 or inf, got {p!r}")
    return float(np.sum(np.abs(f.values) ** p * f.model.weight) ** (1.0 / p))


def array_digest(*arrays) -> str:
    """Short stable digest of the given arrays (test/report provenance)."""
    h = hashlib.sha256()
    for a in arrays:
        h.update(np.ascontiguousarray(a).tobytes())
    return h.hexdigest()[:12]
