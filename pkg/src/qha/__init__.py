"""qha: numerical quantum harmonic analysis on a discrete phase space.

Two exact lattice models (a finite cyclic group and a centered sampled
line), the convolution algebra between functions and operators, Weyl
quantization and its inverse transform, windowed Husimi / Glauber-Sudarshan
representations with Berezin-Lieb inequality evaluators, and zero-set
diagnostics with reconstruction. See the README for conventions.
"""
from .kernels import BACKEND
from .errors import (ConfigurationError, HermiticityError, ModelMismatchError,
                     QhaError, WindowZeroSetError)
from .model import (FINITE_CYCLIC, SAMPLED_LINE, PhaseFunction, PhasePoint,
                    PhaseSpaceModel, build_model, lp_norm, symplectic_form,
                    symplectic_fourier)
from .operators import (ConvexFunctional, Op, StateVector, adjoint,
                        basis_vector, identity_op, parity_conj, random_density,
                        random_hermitian, rank_one, schatten_norm,
                        spectral_apply)
from .shifts import alpha, modulate, stft, tf_shift, tf_shift_apply, translate, wigner
from .convolve import (IDENTITIES, VerificationReport, conv_fn_fn, conv_fn_op,
                       conv_op_op, fourier_wigner, rho, twisted_conv,
                       verify_identity)
from .berezin import (BerezinLiebResult, GlauberResult, ZeroSetReport,
                      berezin_lieb_function, berezin_lieb_operator,
                      berezin_quantize, gaussian_window, glauber_sudarshan,
                      husimi, reconstruct, zero_set)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "__version__",
    "QhaError", "ConfigurationError", "ModelMismatchError", "HermiticityError",
    "WindowZeroSetError",
    "FINITE_CYCLIC", "SAMPLED_LINE", "PhaseSpaceModel", "PhasePoint",
    "PhaseFunction", "build_model", "symplectic_form", "symplectic_fourier",
    "lp_norm",
    "StateVector", "Op", "ConvexFunctional", "basis_vector", "identity_op",
    "rank_one", "schatten_norm", "adjoint", "parity_conj", "spectral_apply",
    "random_density", "random_hermitian",
    "translate", "modulate", "tf_shift", "tf_shift_apply", "alpha", "stft",
    "wigner",
    "rho", "twisted_conv", "conv_fn_fn", "conv_fn_op", "conv_op_op",
    "fourier_wigner", "verify_identity", "VerificationReport", "IDENTITIES",
    "gaussian_window", "husimi", "glauber_sudarshan", "GlauberResult",
    "berezin_quantize", "berezin_lieb_operator", "berezin_lieb_function",
    "BerezinLiebResult", "zero_set", "ZeroSetReport", "reconstruct",
]
