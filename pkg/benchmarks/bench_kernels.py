"""Benchmark the compiled kernel extension against the pure numpy fallback.

Times the five hot kernels on random complex inputs across a range of
lattice sizes and prints a table of per-call medians plus the speedup. Run
from the repository root:

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --sizes 16,32,64,128 --repeats 7
"""
import argparse
import time

import numpy as np

from qha.kernels import _pure

try:
    from qha.kernels import _ext
except ImportError:
    _ext = None


def _inputs(N, seed):
    rng = np.random.default_rng(seed)

    def arr():
        return np.ascontiguousarray(rng.normal(size=(N, N))
                                    + 1j * rng.normal(size=(N, N)))

    f, g, S, W = arr(), arr(), arr(), arr()
    return {
        "weyl_table": (S,),
        "weyl_build": (f,),
        "fn_op": (f, S),
        "op_op_table": (S, W),
        "twisted": (f, g),
    }


def _median_time(fn, args, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return sorted(times)[len(times) // 2]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="8,16,32,64",
                        help="comma-separated lattice sizes")
    parser.add_argument("--repeats", type=int, default=5,
                        help="timed repeats per case (median reported)")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]

    if _ext is None:
        print("compiled extension not importable; timing the pure backend only")

    header = f"{'kernel':<12} {'N':>5} {'pure (ms)':>12}"
    if _ext is not None:
        header += f" {'compiled (ms)':>15} {'speedup':>9} {'max |diff|':>12}"
    print(header)
    print("-" * len(header))

    for N in sizes:
        named_args = _inputs(N, seed=N)
        for name, call_args in named_args.items():
            pure_fn = getattr(_pure, name)
            t_pure = _median_time(pure_fn, call_args, args.repeats)
            line = f"{name:<12} {N:>5} {1e3 * t_pure:>12.3f}"
            if _ext is not None:
                ext_fn = getattr(_ext, name)
                t_ext = _median_time(ext_fn, call_args, args.repeats)
                diff = float(np.max(np.abs(pure_fn(*call_args)
                                           - ext_fn(*call_args))))
                line += (f" {1e3 * t_ext:>15.3f} {t_pure / t_ext:>8.1f}x"
                         f" {diff:>12.2e}")
            print(line)
        print()


if __name__ == "__main__":
    main()
