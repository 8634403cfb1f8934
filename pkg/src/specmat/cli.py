"""Command-line front end.

Subcommands:

* ``build``     realize one named matrix (or vector) on a node set and print
                it as JSON;
* ``verify``    run a named verification suite; exit 0 iff every check passed;
* ``zeros``     compute the zeros of a degree-N family polynomial;
* ``spectrum``  build the matrix of one spectral claim and report per-k
                eigenpair residuals.

Exit codes: 0 success, 1 verification failure, 2 numerical failure
(non-convergence, multiple roots, degenerate zero grids), 64 usage error.
Output is deterministic for a fixed configuration: the seed (flag
``--seed``, else ``SPECMAT_SEED``, else 0) fully determines random node
draws, and JSON is emitted with stable key order and formatting.

Scalar literals accept integers, rationals ``p/q``, decimals, and complex
forms like ``1+2i`` (rational parts stay on the exact backend).
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import List, Optional

from .askey import FamilyParams, family_map
from .errors import (
    DegenerateLeadingCoefficient,
    DegenerateZeros,
    MultipleRoot,
    NonConvergence,
    PoleAtNode,
    SpecmatError,
)
from .foundation import make_node_set, matrix_D, matrix_V, vector_w
from .serialize import (
    claim_report_to_json,
    dumps,
    matrix_to_json,
    parse_scalar_literal,
    vector_to_json,
    zero_set_to_json,
)
from .shift import delta_check, delta_hat, nabla_check, nabla_hat
from .spectra import (
    build_F_hat,
    build_K_check,
    build_K_hat,
    build_R_bar,
    build_R_hat,
    build_W_bar,
    build_W_hat,
    build_Y_bar,
    build_Y_check,
    verify_claim,
)
from .suites import SUITE_NAMES, default_params, draw_nodes, run_suite, _rng
from .zeros import find_zeros

__all__ = ["main"]

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_NUMERIC = 2
EXIT_USAGE = 64

_NUMERIC_ERRORS = (
    NonConvergence,
    MultipleRoot,
    DegenerateZeros,
    DegenerateLeadingCoefficient,
    PoleAtNode,
)

BUILD_OPS = (
    "delta-hat",
    "delta-check",
    "nabla-hat",
    "nabla-check",
    "D",
    "V",
    "w",
    "K-hat",
    "F-hat",
    "W-hat",
    "R-hat",
    "K-check",
    "Y-check",
    "W-bar",
    "R-bar",
    "Y-bar",
)

_FAMILY_OF_OP = {
    "W-hat": "wilson",
    "W-bar": "wilson",
    "R-hat": "racah",
    "R-bar": "racah",
    "Y-check": "askey-wilson",
    "Y-bar": "askey-wilson",
}

_PROP_FAMILY = {
    "3.3": "wilson",
    "3.4": "wilson",
    "3.5": "racah",
    "3.6": "racah",
    "3.8": "askey-wilson",
    "3.9": "askey-wilson",
}


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    pass


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="specmat",
        description="Build, verify, and analyze difference matrices "
        "with known spectra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--n", type=int, default=4, help="problem size N")
        p.add_argument(
            "--seed", type=int, default=None, help="RNG seed (SPECMAT_SEED)"
        )
        p.add_argument(
            "--backend",
            choices=("f64", "exact"),
            default="exact",
            help="scalar backend for node draws and arithmetic",
        )
        p.add_argument(
            "--nodes",
            default=None,
            help="comma-separated node literals (bypasses generation)",
        )
        p.add_argument("--a", default=None, help="additive shift step")
        p.add_argument("--q", default=None, help="multiplicative ratio")
        p.add_argument("--alpha", default=None, help="family parameter")
        p.add_argument("--beta", default=None, help="family parameter")
        p.add_argument("--gamma", default=None, help="family parameter")
        p.add_argument("--delta", default=None, help="family parameter")
        p.add_argument(
            "--c", default=None, help="offset parameter of the F-hat builder"
        )
        p.add_argument(
            "--tol", type=float, default=None, help="residual tolerance"
        )
        p.add_argument("--out", default=None, help="write JSON to this path")
        p.add_argument(
            "--pretty", action="store_true", help="indent the JSON output"
        )

    b = sub.add_parser("build", help="emit one matrix as JSON")
    b.add_argument("--op", required=True, choices=BUILD_OPS)
    add_common(b)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=SUITE_NAMES)
    add_common(v)

    z = sub.add_parser("zeros", help="compute family polynomial zeros")
    z.add_argument(
        "--family",
        choices=("wilson", "racah", "askey-wilson"),
        default="wilson",
    )
    add_common(z)

    s = sub.add_parser("spectrum", help="verify one spectral claim")
    s.add_argument("--prop", required=True, help="proposition id, e.g. 3.1")
    add_common(s)
    return parser


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("SPECMAT_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"SPECMAT_SEED is not an integer: {env!r}") from exc
    return 0


def _parse_literal(text: str, flag: str):
    try:
        return parse_scalar_literal(text)
    except ValueError as exc:
        raise UsageError(f"invalid {flag} literal {text!r}: {exc}") from exc


def _parse_nodes(text: str):
    items = [t.strip() for t in text.split(",")]
    if any(not t for t in items):
        raise UsageError(f"malformed --nodes list: {text!r}")
    return [_parse_literal(t, "--nodes") for t in items]


def _family_params(args, family: str) -> FamilyParams:
    base = default_params(family)
    fields = {}
    for name in ("alpha", "beta", "gamma", "delta"):
        raw = getattr(args, name)
        fields[name] = (
            _parse_literal(raw, f"--{name}")
            if raw is not None
            else getattr(base, name)
        )
    q = base.q
    if family == "askey-wilson" and args.q is not None:
        q = _parse_literal(args.q, "--q")
    try:
        return FamilyParams(family=family, q=q, **fields)
    except (ValueError, SpecmatError) as exc:
        raise UsageError(f"invalid {family} parameters: {exc}") from exc


def _config_params(args) -> dict:
    """Family parameter overrides shared by verify/spectrum."""
    config = {}
    for family in ("wilson", "racah", "askey-wilson"):
        try:
            config[family] = _family_params(args, family)
        except UsageError:
            # Overrides may be valid for one family only; families that
            # reject them fall back to their defaults.
            config[family] = default_params(family)
    if args.a is not None:
        config["a"] = _parse_literal(args.a, "--a")
    if args.q is not None:
        config["q"] = _parse_literal(args.q, "--q")
    if args.alpha is not None:
        config["alpha"] = _parse_literal(args.alpha, "--alpha")
    if args.c is not None:
        config["c"] = _parse_literal(args.c, "--c")
    return config


def _node_set_for(args, seed: int, family: Optional[str]):
    params = _family_params(args, family) if family else None
    if args.nodes is not None:
        nodes = _parse_nodes(args.nodes)
        vmap = family_map(params) if params else None
        try:
            if vmap is None:
                return make_node_set(nodes)
            return make_node_set(nodes, vmap)
        except (ValueError, SpecmatError) as exc:
            raise UsageError(f"invalid --nodes: {exc}") from exc
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    rng = _rng(seed, f"cli:{args.command}")
    return draw_nodes(args.n, rng, args.backend, params)


def _cmd_build(args, seed: int) -> dict:
    op = args.op
    a = _parse_literal(args.a, "--a") if args.a is not None else 1
    if args.q is not None:
        q = _parse_literal(args.q, "--q")
    else:
        q = Fraction(1, 2) if _FAMILY_OF_OP.get(op) == "askey-wilson" else 2

    if op in ("W-bar", "R-bar", "Y-bar"):
        if args.nodes is not None:
            raise UsageError(
                f"--nodes cannot be combined with {op}; its grid is the "
                "computed zeros"
            )
        if args.n < 1:
            raise UsageError("--n must be at least 1")
        params = _family_params(args, _FAMILY_OF_OP[op])
        builder = {
            "W-bar": build_W_bar,
            "R-bar": build_R_bar,
            "Y-bar": build_Y_bar,
        }[op]
        matrix, _ = builder(params, args.n)
        return matrix_to_json(matrix)

    ns = _node_set_for(args, seed, _FAMILY_OF_OP.get(op))
    if op == "delta-hat":
        return matrix_to_json(delta_hat(ns, a))
    if op == "delta-check":
        return matrix_to_json(delta_check(ns, q))
    if op == "nabla-hat":
        return matrix_to_json(nabla_hat(ns, a))
    if op == "nabla-check":
        return matrix_to_json(nabla_check(ns, q))
    if op == "D":
        return matrix_to_json(matrix_D(ns))
    if op == "V":
        return matrix_to_json(matrix_V(ns))
    if op == "w":
        return vector_to_json(vector_w(ns))
    if op == "K-hat":
        return matrix_to_json(build_K_hat(ns, a)[0])
    if op == "F-hat":
        alpha = (
            _parse_literal(args.alpha, "--alpha")
            if args.alpha is not None
            else 2
        )
        c = _parse_literal(args.c, "--c") if args.c is not None else 3
        return matrix_to_json(build_F_hat(ns, alpha, c)[0])
    if op == "K-check":
        return matrix_to_json(build_K_check(ns, q)[0])
    params = _family_params(args, _FAMILY_OF_OP[op])
    builder = {
        "W-hat": build_W_hat,
        "R-hat": build_R_hat,
        "Y-check": build_Y_check,
    }[op]
    return matrix_to_json(builder(ns, params)[0])


def _cmd_verify(args, seed: int) -> tuple:
    tol = args.tol if args.tol is not None else 1e-9
    report = run_suite(
        args.suite,
        n=args.n,
        seed=seed,
        backend=args.backend,
        tol=tol,
        config=_config_params(args),
    )
    return report, EXIT_OK if report["pass"] else EXIT_VERIFY


def _cmd_zeros(args, seed: int) -> dict:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    params = _family_params(args, args.family)
    return zero_set_to_json(find_zeros(params, args.n))


def _cmd_spectrum(args, seed: int) -> tuple:
    prop = args.prop
    if prop.startswith("prop-"):
        prop = prop[len("prop-"):]
    valid = {f"3.{i}" for i in range(1, 10)}
    if prop not in valid:
        raise UsageError(f"unknown proposition id: {args.prop!r}")
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    config = _config_params(args)
    base_tol = args.tol if args.tol is not None else 1e-7
    zero_grid = prop in ("3.4", "3.6", "3.9")
    tol = max(base_tol, 1e-6) if zero_grid else base_tol
    rng = _rng(seed, f"prop-{prop}")
    family = _PROP_FAMILY.get(prop)
    if zero_grid:
        params = config[family]
        builder = {
            "3.4": build_W_bar,
            "3.6": build_R_bar,
            "3.9": build_Y_bar,
        }[prop]
        matrix, claim = builder(params, args.n)
    elif prop == "3.1":
        ns = _node_set_for(args, seed, None)
        matrix, claim = build_K_hat(ns, config.get("a", 1))
    elif prop == "3.2":
        ns = _node_set_for(args, seed, None)
        matrix, claim = build_F_hat(
            ns, config.get("alpha", 2), config.get("c", 3)
        )
    elif prop == "3.7":
        ns = _node_set_for(args, seed, None)
        matrix, claim = build_K_check(ns, config.get("q", 2))
    else:
        params = config[family]
        ns = _node_set_for(args, seed, family)
        builder = {
            "3.3": build_W_hat,
            "3.5": build_R_hat,
            "3.8": build_Y_check,
        }[prop]
        matrix, claim = builder(ns, params)
    report = verify_claim(matrix, claim, tol=tol)
    payload = claim_report_to_json(report)
    return payload, EXIT_OK if report.passed else EXIT_VERIFY


def _emit(payload, args) -> None:
    text = dumps(payload, pretty=args.pretty) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        seed = _resolve_seed(args)
        if args.command == "build":
            payload = _cmd_build(args, seed)
            code = EXIT_OK
        elif args.command == "verify":
            payload, code = _cmd_verify(args, seed)
        elif args.command == "zeros":
            payload = _cmd_zeros(args, seed)
            code = EXIT_OK
        else:
            payload, code = _cmd_spectrum(args, seed)
    except UsageError as exc:
        print(f"specmat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _NUMERIC_ERRORS as exc:
        print(f"specmat: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except SpecmatError as exc:
        print(f"specmat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"specmat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(payload, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
