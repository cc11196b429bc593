"""Command-line front end.

Commands: verify, repr, berezin-lieb, zeros, reconstruct. All randomness is
seeded, so every run is reproducible from its flags (or from --config JSON;
explicit flags win over config values, unknown config keys are rejected).
File outputs are written atomically (temp file + rename).

Exit codes: 0 success/pass, 1 identity or inequality violation, 2 usage or
configuration error, 3 mathematical infeasibility (the window transform has
zeros where an inverse was requested).
"""
import argparse
import io
import json
import os
import sys
import tempfile

import numpy as np

from .berezin import (berezin_lieb_function, berezin_lieb_operator,
                      gaussian_window, glauber_sudarshan, husimi, reconstruct,
                      zero_set)
from .convolve import IDENTITIES, fourier_wigner, rho, verify_identity
from .errors import QhaError, WindowZeroSetError
from .model import (FINITE_CYCLIC, SAMPLED_LINE, PhaseFunction, build_model)
from .operators import (ConvexFunctional, Op, StateVector, basis_vector,
                        identity_op, random_density, random_hermitian,
                        rank_one, schatten_norm)
from .shifts import stft, wigner

_MODEL_NAMES = {
    "cyclic": FINITE_CYCLIC, "finitecyclic": FINITE_CYCLIC,
    "line": SAMPLED_LINE, "sampledline": SAMPLED_LINE,
}

_STATE_ROLE, _WINDOW_ROLE = 0, 1


class _Usage(QhaError):
    pass


def _parse_n_values(text):
    """Accept '8', '2..16', or '2,3,5'."""
    text = str(text).strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        values = list(range(int(lo), int(hi) + 1))
    elif "," in text:
        values = [int(t) for t in text.split(",") if t.strip()]
    else:
        values = [int(text)]
    if not values:
        raise _Usage(f"empty N range {text!r}")
    return values


def _resolve_n(args, fallback):
    if args.n is not None:
        return str(args.n)
    env = os.environ.get("QHA_DEFAULT_N")
    if env:
        return env
    return fallback


def _build_model_from(args, default_model, default_n, default_l):
    kind_name = (args.model or default_model).lower()
    if kind_name not in _MODEL_NAMES:
        raise _Usage(f"unknown model {args.model!r}; use cyclic or line")
    kind = _MODEL_NAMES[kind_name]
    n_values = _parse_n_values(_resolve_n(args, default_n))
    if len(n_values) != 1:
        raise _Usage("this command takes a single N, not a range")
    L = args.l if args.l is not None else (default_l if kind == SAMPLED_LINE else None)
    return build_model(kind, n_values[0], L if kind == SAMPLED_LINE else None)


def _zero_line_window(model) -> Op:
    """Deterministic window whose transform vanishes exactly on the row m=0:
    quantize a function that is bounded away from zero off that row."""
    N = model.N
    m = np.arange(N)[:, None]
    k = np.arange(N)[None, :]
    g = 1.0 + 0.5 * np.exp(2j * np.pi * (m + k) / N)
    g[0, :] = 0.0
    return rho(PhaseFunction(g, model))


def _load_json(path):
    with open(path, "r") as fh:
        return json.load(fh)


def _parse_vector(spec, model, seed, role) -> StateVector:
    if spec == "gaussian":
        return gaussian_window(model)
    if spec == "random":
        rng = np.random.default_rng([seed, role])
        v = rng.normal(size=model.N) + 1j * rng.normal(size=model.N)
        v /= np.sqrt(np.sum(np.abs(v) ** 2) * model.vector_weight)
        return StateVector(v, model)
    if spec.startswith("basis:"):
        return basis_vector(model, int(spec.split(":", 1)[1]))
    if spec.startswith("vec:"):
        return StateVector.from_json_dict(_load_json(spec[4:]), model)
    raise _Usage(f"cannot interpret {spec!r} as a state vector; use "
                 "gaussian | random | basis:I | vec:PATH")


def _parse_op(spec, model, seed, role) -> Op:
    if spec == "identity":
        return identity_op(model)
    if spec == "gaussian":
        phi = gaussian_window(model)
        return rank_one(phi, phi)
    if spec == "zero-line":
        return _zero_line_window(model)
    if spec == "random-density" or spec.startswith("random-density:"):
        rank = model.N
        if ":" in spec:
            rank = int(spec.split(":", 1)[1])
        return random_density(model, rank, [seed, role])
    if spec == "random-hermitian":
        return random_hermitian(model, [seed, role])
    if spec.startswith("basis:"):
        e = basis_vector(model, int(spec.split(":", 1)[1]))
        return rank_one(e, e)
    if spec.startswith("op:"):
        return Op.from_json_dict(_load_json(spec[3:]), model)
    if spec.startswith("fn:"):
        f = PhaseFunction.from_json_dict(_load_json(spec[3:]))
        f.model.check_same(model)
        return rho(f)
    if spec.startswith("vec:"):
        v = StateVector.from_json_dict(_load_json(spec[4:]), model)
        return rank_one(v, v)
    raise _Usage(f"cannot interpret {spec!r} as an operator; use identity | "
                 "gaussian | zero-line | random-density[:RANK] | "
                 "random-hermitian | basis:I | op:PATH | fn:PATH | vec:PATH")


def _atomic_write(path, text):
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".qha-tmp-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text, path):
    if path:
        _atomic_write(path, text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _phase_function_text(f: PhaseFunction, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        f.to_csv(buf)
        return buf.getvalue()
    return f.to_json() + "\n"


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _cmd_verify(args):
    if args.suite != "all" and args.suite not in IDENTITIES:
        print(f"unknown suite {args.suite!r}; choose 'all' or one of "
              f"{sorted(IDENTITIES)}", file=sys.stderr)
        return 2
    names = sorted(IDENTITIES) if args.suite == "all" else [args.suite]
    n_values = _parse_n_values(_resolve_n(args, "2..16"))
    seeds = int(args.seeds if args.seeds is not None else 20)
    kind_name = (args.model or "cyclic").lower()
    if kind_name not in _MODEL_NAMES:
        raise _Usage(f"unknown model {args.model!r}; use cyclic or line")
    kind = _MODEL_NAMES[kind_name]
    lines = []
    n_pass = n_total = 0
    for N in n_values:
        L = args.l if args.l is not None else float(N)
        model = build_model(kind, N, L if kind == SAMPLED_LINE else None)
        for name in names:
            for seed in range(seeds):
                report = verify_identity(name, seed, N, model)
                lines.append(report.to_json_line())
                n_total += 1
                n_pass += int(report.passed)
    text = "\n".join(lines) + "\n"
    if args.output:
        _atomic_write(args.output, text)
    else:
        sys.stdout.write(text)
    print(f"verify: {n_pass}/{n_total} checks passed", file=sys.stderr)
    return 0 if n_pass == n_total else 1


def _cmd_repr(args):
    model = _build_model_from(args, default_model="line", default_n="256",
                              default_l=16.0)
    seed = int(args.seed or 0)
    fmt = args.format or "json"
    kind = args.kind
    if kind == "wigner":
        psi = _parse_vector(args.state or "gaussian", model, seed, _STATE_ROLE)
        out = wigner(psi)
    elif kind == "stft":
        psi = _parse_vector(args.state or "gaussian", model, seed, _STATE_ROLE)
        phi = _parse_vector(args.window or "gaussian", model, seed, _WINDOW_ROLE)
        out = stft(psi, phi)
    elif kind == "fourier-wigner":
        S = _parse_op(args.state or "random-density", model, seed, _STATE_ROLE)
        out = fourier_wigner(S)
    elif kind == "husimi":
        S = _parse_op(args.state or "random-density", model, seed, _STATE_ROLE)
        sigma = _parse_op(args.window or "gaussian", model, seed, _WINDOW_ROLE)
        out = husimi(S, sigma)
    elif kind == "gs":
        S = _parse_op(args.state or "random-density", model, seed, _STATE_ROLE)
        sigma = _parse_op(args.window or "gaussian", model, seed, _WINDOW_ROLE)
        mode = args.mode or "strict"
        try:
            result = glauber_sudarshan(S, sigma, mode=mode, tol=args.tol)
        except WindowZeroSetError as exc:
            payload = {"error": str(exc),
                       "zero_points": [[p.m, p.k] for p in exc.zero_points]}
            print(json.dumps(payload), file=sys.stderr)
            return 3
        report = zero_set(sigma, tol=args.tol)
        _emit(_phase_function_text(result.f, fmt), args.output)
        print(f"residual: {result.residual:.6e}", file=sys.stderr if args.output is None else sys.stdout)
        print(f"window zero set: {len(report.zero_points)} point(s), "
              f"classification {report.classification}",
              file=sys.stderr if args.output is None else sys.stdout)
        return 0
    else:
        raise _Usage(f"unknown representation {kind!r}")
    _emit(_phase_function_text(out, fmt), args.output)
    return 0


def _cmd_berezin_lieb(args):
    model = _build_model_from(args, default_model="cyclic", default_n="8",
                              default_l=8.0)
    trials = int(args.trials if args.trials is not None else 50)
    seed = int(args.seed or 0)
    phi_kind = args.phi or "exp"
    if phi_kind == "exp":
        functional = ConvexFunctional.exp(float(args.beta if args.beta is not None else 1.0))
    elif phi_kind == "positive-part":
        functional = ConvexFunctional.positive_part()
    elif phi_kind == "abs-power":
        functional = ConvexFunctional.abs_power(float(args.p if args.p is not None else 2.0))
    else:
        raise _Usage(f"unknown functional {args.phi!r}; use exp | "
                     "positive-part | abs-power")
    lines = []
    all_passed = True
    for t in range(trials):
        S = random_density(model, model.N, [seed, 2 * t])
        T = random_hermitian(model, [seed, 2 * t + 1])
        rng = np.random.default_rng([seed, t, 7])
        f = PhaseFunction(rng.normal(size=(model.N, model.N)).astype(np.complex128),
                          model)
        for result in (berezin_lieb_operator(T, S, functional),
                       berezin_lieb_function(f, S, functional)):
            record = result.to_json_dict()
            record["trial"] = t
            lines.append(json.dumps(record))
            all_passed = all_passed and result.passed
    text = "\n".join(lines) + "\n"
    if args.output:
        _atomic_write(args.output, text)
    else:
        sys.stdout.write(text)
    print(f"berezin-lieb: {2 * trials} checks, "
          f"{'all passed' if all_passed else 'VIOLATION found'}",
          file=sys.stderr)
    return 0 if all_passed else 1


def _cmd_zeros(args):
    model = _build_model_from(args, default_model="line", default_n="256",
                              default_l=16.0)
    seed = int(args.seed or 0)
    sigma = _parse_op(args.window or "gaussian", model, seed, _WINDOW_ROLE)
    report = zero_set(sigma, tol=args.tol, radius=args.radius)
    if (args.format or "json") == "csv":
        buf = io.StringIO()
        report.zero_points_to_csv(buf)
        _emit(buf.getvalue(), args.output)
    else:
        _emit(report.to_json() + "\n", args.output)
    print(f"zeros: classification {report.classification}, "
          f"min modulus {report.min_modulus:.6e}", file=sys.stderr)
    return 0


def _cmd_reconstruct(args):
    model = _build_model_from(args, default_model="cyclic", default_n="16",
                              default_l=16.0)
    seed = int(args.seed or 0)
    S = _parse_op(args.state or "random-density", model, seed, _STATE_ROLE)
    sigma = _parse_op(args.window or "random-density", model, seed, _WINDOW_ROLE)
    blurred = husimi(S, sigma)
    try:
        recovered = reconstruct(blurred, sigma, tol=args.tol)
    except WindowZeroSetError as exc:
        payload = {"error": str(exc),
                   "zero_points": [[p.m, p.k] for p in exc.zero_points]}
        print(json.dumps(payload), file=sys.stderr)
        return 3
    err = schatten_norm(Op(recovered.matrix - S.matrix, model), 2)
    if args.output:
        _atomic_write(args.output, recovered.to_json() + "\n")
    print(f"reconstruct: round-trip error {err:.6e}", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# Parser plumbing
# ---------------------------------------------------------------------------

_CONFIG_KEYS = {
    "verify": {"suite", "model", "n", "l", "seeds", "output"},
    "repr": {"kind", "model", "n", "l", "seed", "window", "state", "mode",
             "tol", "output", "format"},
    "berezin-lieb": {"model", "n", "l", "seed", "phi", "beta", "p", "trials",
                     "output"},
    "zeros": {"model", "n", "l", "seed", "window", "tol", "radius", "output",
              "format"},
    "reconstruct": {"model", "n", "l", "seed", "window", "state", "tol",
                    "output"},
}


def _add_common(p, *names):
    if "model" in names:
        p.add_argument("--model", help="cyclic or line")
    if "n" in names:
        p.add_argument("--n", help="lattice size N (verify accepts 2..16 or 2,3,5)")
    if "l" in names:
        p.add_argument("--l", type=float, help="spatial period (line model)")
    if "seed" in names:
        p.add_argument("--seed", type=int, help="base RNG seed (default 0)")
    if "output" in names:
        p.add_argument("--output", help="write results to this file atomically")
    if "format" in names:
        p.add_argument("--format", choices=("json", "csv"))
    p.add_argument("--config", help="JSON config file; flags override it")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qha",
        description="Numerical quantum harmonic analysis on a discrete "
                    "phase space: convolutions, Weyl quantization, windowed "
                    "representations, and identity verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the registered identity suite")
    p.add_argument("--suite", default="all",
                   help="'all' or one identity name")
    p.add_argument("--seeds", type=int, help="seeds per (identity, N)")
    _add_common(p, "model", "n", "l", "output")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("repr", help="compute a phase-space representation")
    p.add_argument("kind", choices=("husimi", "gs", "wigner", "stft",
                                    "fourier-wigner"))
    p.add_argument("--window", help="window spec (gaussian, random-density, "
                                    "zero-line, op:PATH, fn:PATH, vec:PATH, ...)")
    p.add_argument("--state", help="state spec (same grammar)")
    p.add_argument("--mode", choices=("strict", "pseudo"),
                   help="gs deconvolution mode")
    p.add_argument("--tol", type=float, help="zero threshold (absolute)")
    _add_common(p, "model", "n", "l", "seed", "output", "format")
    p.set_defaults(func=_cmd_repr)

    p = sub.add_parser("berezin-lieb", help="evaluate both convexity "
                                            "inequalities on random inputs")
    p.add_argument("--phi", help="exp | positive-part | abs-power")
    p.add_argument("--beta", type=float, help="exp parameter")
    p.add_argument("--p", type=float, help="abs-power exponent")
    p.add_argument("--trials", type=int, help="random trials (default 50)")
    _add_common(p, "model", "n", "l", "seed", "output")
    p.set_defaults(func=_cmd_berezin_lieb)

    p = sub.add_parser("zeros", help="locate zeros of a window transform")
    p.add_argument("--window", help="window spec")
    p.add_argument("--tol", type=float, help="zero threshold (absolute)")
    p.add_argument("--radius", type=float,
                   help="restrict inspection to |z| <= radius")
    _add_common(p, "model", "n", "l", "seed", "output", "format")
    p.set_defaults(func=_cmd_zeros)

    p = sub.add_parser("reconstruct", help="blur a state with a window and "
                                           "invert the blur (round trip)")
    p.add_argument("--window", help="window spec")
    p.add_argument("--state", help="state spec")
    p.add_argument("--tol", type=float, help="zero threshold (absolute)")
    _add_common(p, "model", "n", "l", "seed", "output")
    p.set_defaults(func=_cmd_reconstruct)
    return parser


def _apply_config(args):
    if not getattr(args, "config", None):
        return
    with open(args.config, "r") as fh:
        cfg = json.load(fh)
    if not isinstance(cfg, dict):
        raise _Usage("config file must contain a JSON object")
    allowed = _CONFIG_KEYS[args.command]
    unknown = set(cfg) - allowed
    if unknown:
        raise _Usage(f"unknown config key(s) {sorted(unknown)}; "
                     f"allowed: {sorted(allowed)}")
    for key, value in cfg.items():
        attr = key.replace("-", "_")
        if getattr(args, attr, None) in (None, "all" if key == "suite" else None):
            setattr(args, attr, value)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args)
        return args.func(args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except WindowZeroSetError as exc:
        payload = {"error": str(exc),
                   "zero_points": [[p.m, p.k] for p in exc.zero_points]}
        print(json.dumps(payload), file=sys.stderr)
        return 3
    except (QhaError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
