"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; setting
QHA_PURE_PYTHON=1 forces the numpy fallback. ``BACKEND`` records the choice
so callers (and the benchmark script) can report it.
"""
import os

import numpy as np

from . import _pure

_force_pure = os.environ.get("QHA_PURE_PYTHON", "").strip().lower() in (
    "1", "true", "yes", "on")

if _force_pure:
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from . import _ext as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _pure
        BACKEND = "pure"


def _c(x):
    return np.ascontiguousarray(np.asarray(x, dtype=np.complex128))


def weyl_table(S):
    """t[m, k] = sum_n omega_N^{-kn} S[(n+m) % N, n]."""
    return _impl.weyl_table(_c(S))


def weyl_build(fw):
    """sum_{m,k} fw[m, k] omega_{2N}^{-mk} pi(m, k), unweighted."""
    return _impl.weyl_build(_c(fw))


def fn_op(f, S):
    """sum_{m,k} f[m, k] alpha_{(m,k)}(S), unweighted."""
    return _impl.fn_op(_c(f), _c(S))


def op_op_table(S, W):
    """t[m, k] = tr(S alpha_{(m,k)}(W))."""
    return _impl.op_op_table(_c(S), _c(W))


def twisted(f, g):
    """sum_{z2} f(u - z2) g(z2) omega_{2N}^{E(u, z2)}, unweighted."""
    return _impl.twisted(_c(f), _c(g))
