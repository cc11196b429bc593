"""Windowed phase-space representations and their inverses.

husimi(S, sigma) is the blurred (lower-symbol) picture tr(S alpha_z sigma);
glauber_sudarshan solves the opposite problem, finding a function whose
window-quantization is S. The map is a deconvolution, so it exists (and
reconstruct succeeds) exactly when the window's operator Fourier transform
has no zeros on the lattice; zero_set reports that diagnostic. The two
Berezin-Lieb evaluators bound a convex function of an operator between
phase-space integrals of its lower and upper symbols.
"""
import json
from dataclasses import dataclass
from typing import List, NamedTuple

import numpy as np

from .errors import ConfigurationError, HermiticityError, WindowZeroSetError
from .model import (SAMPLED_LINE, PhaseFunction, PhasePoint, PhaseSpaceModel,
                    array_digest, symplectic_fourier)
from .operators import (ConvexFunctional, Op, StateVector, adjoint,
                        parity_conj, schatten_norm, spectral_apply)
from .convolve import conv_fn_op, conv_op_op, fourier_wigner, rho

DENSITY_TRACE_TOL = 1e-8
REALNESS_TOL = 1e-10
BL_SLACK = 1e-9


def gaussian_window(model: PhaseSpaceModel) -> StateVector:
    """Samples of the normalized Gaussian 2^{1/4} e^{-pi x^2} on the centered
    grid. Only meaningful on the sampled line; the cyclic model has no
    canonical Gaussian."""
    if model.kind != SAMPLED_LINE:
        raise ConfigurationError(
            "gaussian_window requires a SampledLine model")
    x = (np.arange(model.N) - model.N / 2) * model.dx
    return StateVector(2.0 ** 0.25 * np.exp(-np.pi * x * x), model)


def husimi(S: Op, sigma: Op) -> PhaseFunction:
    """Windowed phase-space representation S_sigma(z) = tr(S alpha_z sigma),
    i.e. the operator convolution of S with the parity reflection of sigma."""
    return conv_op_op(S, parity_conj(sigma))


class GlauberResult(NamedTuple):
    f: PhaseFunction
    residual: float


def _zero_threshold(denom_vals, tol):
    if tol is not None:
        if tol <= 0:
            raise ConfigurationError("tol must be positive")
        return float(tol)
    peak = float(np.max(np.abs(denom_vals)))
    return 1e-8 * peak


def _zero_points(model, mask) -> List[PhasePoint]:
    ms, ks = np.nonzero(mask)
    return [PhasePoint(int(m), int(k), model) for m, k in zip(ms, ks)]


def glauber_sudarshan(S: Op, sigma: Op, mode: str = "strict",
                      tol: float = None) -> GlauberResult:
    """Recover a function f with conv_fn_op(f, adjoint(sigma)) = S.

    Works by dividing the operator Fourier transform of S by that of
    sigma^* and inverting the symplectic Fourier transform. The default
    threshold for treating a denominator value as zero is 1e-8 of its peak
    modulus.

    mode="strict" refuses to divide when the denominator has zeros (the
    symbol is not unique there) and raises WindowZeroSetError listing them;
    mode="pseudo" zeroes those frequencies and lets the returned residual
    ||f conv adjoint(sigma) - S||_HS quantify the information loss.
    """
    S.model.check_same(sigma.model)
    if mode not in ("strict", "pseudo"):
        raise ConfigurationError(f"unknown mode {mode!r}; use strict or pseudo")
    denom = fourier_wigner(adjoint(sigma)).values
    thr = _zero_threshold(denom, tol)
    mask = np.abs(denom) <= thr
    if mode == "strict" and mask.any():
        pts = _zero_points(S.model, mask)
        raise WindowZeroSetError(
            "window transform vanishes at {} lattice point(s) (threshold "
            "{:.3e}); the deconvolved symbol is not unique there. Use "
            "mode='pseudo' to zero those frequencies and get a residual "
            "estimate.".format(len(pts), thr), pts)
    q = np.zeros_like(denom)
    np.divide(fourier_wigner(S).values, denom, out=q, where=~mask)
    f = symplectic_fourier(PhaseFunction(q, S.model))
    recon = conv_fn_op(f, adjoint(sigma))
    residual = schatten_norm(Op(recon.matrix - S.matrix, S.model), 2)
    return GlauberResult(f, float(residual))


def berezin_quantize(f: PhaseFunction, sigma: Op) -> Op:
    """Window quantization f -> conv_fn_op(f, adjoint(sigma)); with a
    Gaussian rank-one window this is classic Berezin quantization."""
    f.model.check_same(sigma.model)
    return conv_fn_op(f, adjoint(sigma))


@dataclass(frozen=True)
class BerezinLiebResult:
    variant: str
    lhs: float
    rhs: float
    functional: ConvexFunctional
    passed: bool

    def to_json_dict(self) -> dict:
        return {"variant": self.variant, "lhs": self.lhs, "rhs": self.rhs,
                "functional": self.functional.label(), "passed": self.passed}


def _require_density(S: Op, who: str):
    if abs(S.trace() - 1.0) > DENSITY_TRACE_TOL:
        raise ConfigurationError(
            f"{who} must have trace 1 (got {S.trace():.6g})")
    if not S.is_positive:
        raise ConfigurationError(f"{who} must be positive semidefinite")


def _bl_result(variant, lhs, rhs, phi) -> BerezinLiebResult:
    slack = BL_SLACK * max(abs(lhs), abs(rhs), 1.0)
    return BerezinLiebResult(variant, float(lhs), float(rhs), phi,
                             bool(lhs <= rhs + slack))


def berezin_lieb_operator(T: Op, S: Op, phi: ConvexFunctional) -> BerezinLiebResult:
    """Lower-symbol inequality: the weighted lattice sum of phi((S*T)(z)) is
    at most tr(phi(T)) for Hermitian T and density S."""
    if not T.is_hermitian:
        raise HermiticityError(
            "berezin_lieb_operator needs a Hermitian observable")
    _require_density(S, "the density argument")
    vals = conv_op_op(S, T).values
    imax = float(np.max(np.abs(vals.imag)))
    if imax > REALNESS_TOL * max(1.0, float(np.max(np.abs(vals)))):
        raise HermiticityError(
            f"operator convolution is not real (max imag {imax:.3e}); "
            "inputs are too far from Hermitian/positive")
    model = S.model
    lhs = float(np.sum(phi(vals.real)) * model.weight)
    rhs = float(spectral_apply(phi, T).trace().real)
    return _bl_result("operator-side", lhs, rhs, phi)


def berezin_lieb_function(f: PhaseFunction, S: Op,
                          phi: ConvexFunctional) -> BerezinLiebResult:
    """Upper-symbol inequality: tr(phi(f * S)) is at most the weighted
    lattice sum of phi(f) for real f and density S."""
    fmax = float(np.max(np.abs(f.values)))
    if float(np.max(np.abs(f.values.imag))) > REALNESS_TOL * max(1.0, fmax):
        raise ConfigurationError(
            "berezin_lieb_function needs a real-valued function")
    _require_density(S, "the density argument")
    A = conv_fn_op(PhaseFunction(f.values.real.astype(np.complex128), f.model), S)
    lhs = float(spectral_apply(phi, A).trace().real)
    rhs = float(np.sum(phi(f.values.real)) * f.model.weight)
    return _bl_result("function-side", lhs, rhs, phi)


@dataclass(frozen=True)
class ZeroSetReport:
    window_digest: str
    tolerance: float
    zero_points: tuple
    min_modulus: float
    classification: str

    def to_json_dict(self) -> dict:
        return {
            "window_digest": self.window_digest,
            "tolerance": self.tolerance,
            "zero_points": [[p.m, p.k] for p in self.zero_points],
            "min_modulus": self.min_modulus,
            "classification": self.classification,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def zero_points_to_csv(self, fileobj):
        fileobj.write("m,k,x,omega\n")
        for p in self.zero_points:
            fileobj.write(f"{p.m},{p.k},{p.x:.17g},{p.omega:.17g}\n")


def _classify(zero_mask, selected):
    sel_zero = zero_mask & selected
    n_sel = int(np.count_nonzero(selected))
    n_zero = int(np.count_nonzero(sel_zero))
    if n_zero == 0:
        return "empty"
    if n_zero == n_sel:
        return "everywhere"
    row_sel = selected.any(axis=1)
    col_sel = selected.any(axis=0)
    row_full = (sel_zero.sum(axis=1) == selected.sum(axis=1)) & row_sel
    col_full = (sel_zero.sum(axis=0) == selected.sum(axis=0)) & col_sel
    if row_full.any() or col_full.any():
        return "full-row-or-column"
    return "nonempty-sparse"


def zero_set(sigma: Op, tol: float = None, radius: float = None) -> ZeroSetReport:
    """Locate the lattice points where the window's operator Fourier
    transform falls below the threshold.

    radius, when given, restricts the inspection (points, min_modulus and
    the classification) to the disk x^2 + omega^2 <= radius^2 in signed
    coordinates; otherwise the whole lattice is inspected. classification
    "empty" certifies that deconvolution against this window is
    well-conditioned at this threshold within the inspected region.
    """
    model = sigma.model
    vals = fourier_wigner(sigma).values
    thr = _zero_threshold(vals, tol)
    zero_mask = np.abs(vals) <= thr
    if radius is None:
        selected = np.ones_like(zero_mask, dtype=bool)
    else:
        x = model.signed_index(np.arange(model.N)) * model.dx
        w = model.signed_index(np.arange(model.N)) * model.dw
        selected = (x[:, None] ** 2 + w[None, :] ** 2) <= radius ** 2
    sel_zero = zero_mask & selected
    sel_abs = np.abs(vals)[selected]
    min_mod = float(sel_abs.min()) if sel_abs.size else float("nan")
    return ZeroSetReport(
        window_digest=array_digest(sigma.matrix),
        tolerance=thr,
        zero_points=tuple(_zero_points(model, sel_zero)),
        min_modulus=min_mod,
        classification=_classify(zero_mask, selected),
    )


def reconstruct(S_sigma: PhaseFunction, sigma: Op, tol: float = None) -> Op:
    """Invert the windowed representation: recover S from S_sigma = S * PsigmaP.

    Divides the symplectic Fourier transform of S_sigma by the operator
    Fourier transform of the reflected window and applies the Weyl
    quantization. Requires that transform to be zero-free at the threshold;
    otherwise the blur has erased those frequencies and no unique inverse
    exists, reported as WindowZeroSetError.
    """
    S_sigma.model.check_same(sigma.model)
    denom = fourier_wigner(parity_conj(sigma)).values
    thr = _zero_threshold(denom, tol)
    mask = np.abs(denom) <= thr
    if mask.any():
        pts = _zero_points(sigma.model, mask)
        raise WindowZeroSetError(
            "reconstruction is not guaranteed: the window transform has "
            "{} zero(s) at threshold {:.3e}, so the windowed representation "
            "is not injective at those frequencies".format(len(pts), thr),
            pts)
    fw = symplectic_fourier(S_sigma).values / denom
    return rho(PhaseFunction(fw, sigma.model))
