"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 ill-conditioned solver,
3 no local kernel at the requested interaction length, 4 suite failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Sequence

from .config import ToleranceConfig, from_environment
from .decomposer import IllConditionedError, decompose, decomposition_to_json, majorana_roots
from .hamiltonian import (
    PAPER_FAMILIES,
    NoKernelError,
    assemble_parent,
    paper_hamiltonian,
    rank_profile,
    verify_ground,
)
from .suites import DEFAULT_COUNTS, SUITES, run_suite
from .symstate import NAMED_FAMILIES, SymmetricState, build_named, complex_to_json, state_from_json

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_ILL_CONDITIONED = 2
EXIT_NO_KERNEL = 3
EXIT_SUITE = 4


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2, which is taken
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def parse_complex(text: str) -> complex:
    """Accept '0.5', '0.5,0.1', '[0.5, 0.1]' or Python's '0.5+0.1j'."""
    raw = text.strip()
    try:
        if raw.startswith("["):
            re_, im_ = json.loads(raw)
            return complex(float(re_), float(im_))
        if "," in raw:
            re_, im_ = raw.split(",")
            return complex(float(re_), float(im_))
        return complex(raw.replace(" ", ""))
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from exc


def _add_state_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("state")
    g.add_argument("--name", choices=NAMED_FAMILIES, help="named family")
    g.add_argument("--n", type=int, help="number of qubits")
    g.add_argument("--k", type=int, help="excitation number for --name dicke")
    g.add_argument("--z", type=parse_complex, help="parameter of --name x (default 2^(-1/6))")
    g.add_argument("--state", metavar="FILE", help="state JSON file ('-' for stdin)")


def _add_common_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("numerics and output")
    g.add_argument("--tol-rank", type=float, help="relative singular value threshold (default 1e-10)")
    g.add_argument("--tol-sep", type=float, help="chordal root separation threshold (default 1e-8)")
    g.add_argument("--tol-resid", type=float, help="relative resynthesis residual threshold (default 1e-10)")
    g.add_argument("--max-cond", type=float, help="Vandermonde condition cap for certification (default 1e5)")
    g.add_argument("--seed", type=int, help="seed for every random choice")
    g.add_argument("--max-full", type=int, help="largest N for dense 2^N objects (default 14, env SYMCLASS_MAX_FULL)")
    g.add_argument("--pretty", action="store_true", help="indented JSON")
    g.add_argument("--no-timings", action="store_true", help="omit wall-clock timings for byte-stable output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="symclass", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="bond dimension, decomposition and rank profile of a state")
    _add_state_args(p)
    _add_common_args(p)

    p = sub.add_parser("hamiltonian", help="parent Hamiltonian as Pauli strings")
    _add_state_args(p)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--n-local", type=int, help="interaction length of the constructive Hamiltonian")
    mode.add_argument("--paper", choices=PAPER_FAMILIES, help="explicit family Hamiltonian")
    p.add_argument("--J", type=float, default=1.0)
    p.add_argument("--Jz", type=float, default=None, help="default 3 for ghz and 1 for x")
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--lambda-sym", type=float, default=1.0, help="weight of the singlet terms")
    _add_common_args(p)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--count", type=int, help="corpus size; defaults " + ", ".join(f"{k}={v}" for k, v in DEFAULT_COUNTS.items()))
    _add_common_args(p)
    return parser


def _tolerances(args: argparse.Namespace) -> ToleranceConfig:
    base = from_environment()
    return base.with_overrides(
        tol_rank=args.tol_rank,
        tol_sep=args.tol_sep,
        tol_resid=args.tol_resid,
        max_cond=args.max_cond,
        seed=args.seed,
        n_full_cap=args.max_full,
    )


def _load_state(args: argparse.Namespace, fallback_name: str | None = None) -> tuple[SymmetricState, dict[str, Any]]:
    if args.state is not None:
        if args.name is not None:
            raise InputError("give either --state or --name, not both")
        try:
            text = sys.stdin.read() if args.state == "-" else open(args.state, encoding="utf-8").read()
        except OSError as exc:
            raise InputError(f"cannot read state file: {exc}") from exc
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed state JSON: {exc}") from exc
        return state_from_json(obj), {"state_file": args.state}
    name = args.name or fallback_name
    if name is None:
        raise InputError("no state given; use --name/--n or --state")
    if args.n is None:
        raise InputError("--n is required with --name")
    descriptor: dict[str, Any] = {"name": name, "n": args.n}
    if args.k is not None:
        descriptor["k"] = args.k
    if args.z is not None:
        descriptor["z"] = complex_to_json(args.z)
    return build_named(name, args.n, k=args.k, z=args.z), descriptor


def _emit(obj: dict[str, Any], args: argparse.Namespace) -> None:
    if args.no_timings:
        obj.pop("timings", None)
    text = json.dumps(obj, indent=2 if args.pretty else None, sort_keys=False, allow_nan=False)
    sys.stdout.write(text + "\n")


def cmd_classify(args: argparse.Namespace) -> int:
    tol = _tolerances(args)
    state, descriptor = _load_state(args)
    n = state.n_parties
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    dec = decompose(state, tol)
    timings["decompose_s"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    prof = rank_profile(state, tol)
    timings["rank_profile_s"] = time.perf_counter() - t0
    maj = majorana_roots(state)
    d = dec.bond_dim
    report = {
        "input": descriptor,
        "n": n,
        "d": d,
        "n_star": prof.n_star,
        "decomposition": decomposition_to_json(dec),
        "rank_profile": list(prof.ranks),
        "bounds": {
            "d_le_n_plus_1": d <= n + 1,
            "n_star_le_half_plus_1": prof.n_star <= n // 2 + 1,
            "rank_symmetric": all(prof.rank(m) == prof.rank(n - m) for m in range(1, n)),
            "rank_le_min_d_m_plus_1": all(prof.rank(m) <= min(d, m + 1) for m in range(1, n)),
        },
        "majorana_configuration": list(maj.configuration),
        "tolerances": {
            "tol_rank": tol.tol_rank,
            "tol_sep": tol.tol_sep,
            "tol_resid": tol.tol_resid,
            "max_cond": tol.max_cond,
            "seed": tol.seed,
        },
        "timings": timings,
    }
    _emit(report, args)
    return EXIT_OK


def cmd_hamiltonian(args: argparse.Namespace) -> int:
    tol = _tolerances(args)
    state, descriptor = _load_state(args, fallback_name=args.paper)
    t0 = time.perf_counter()
    if args.paper is not None:
        h = paper_hamiltonian(args.paper, state.n_parties, J=args.J, Jz=args.Jz, gamma=args.gamma)
    else:
        h = assemble_parent(state, args.n_local, lambda_sym=args.lambda_sym, tol=tol)
    body = h.to_json()
    build_s = time.perf_counter() - t0
    t0 = time.perf_counter()
    report = verify_ground(h, state, tol)
    out = {
        "input": descriptor,
        **body,
        "kind": h.kind,
        "interaction_length": h.interaction_length,
        "couplings": h.couplings,
        "verification": report.to_json(),
        "timings": {"build_s": build_s, "verify_s": time.perf_counter() - t0},
    }
    _emit(out, args)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    tol = _tolerances(args)
    t0 = time.perf_counter()
    result = run_suite(args.suite, seed=args.seed, count=args.count, tol=tol)
    out = result.to_json()
    out["timings"] = {"total_s": time.perf_counter() - t0}
    _emit(out, args)
    return EXIT_OK if result.ok else EXIT_SUITE


def _fail(code: int, kind: str, message: str, args: argparse.Namespace | None, **extra: Any) -> int:
    sys.stderr.write(f"symclass: {kind}: {message}\n")
    payload = {"error": kind, "message": message, "exit_code": code, **extra}
    sys.stdout.write(json.dumps(payload, indent=2 if args is not None and args.pretty else None) + "\n")
    return code


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"classify": cmd_classify, "hamiltonian": cmd_hamiltonian, "verify": cmd_verify}
    try:
        return handlers[args.command](args)
    except NoKernelError as exc:
        return _fail(EXIT_NO_KERNEL, "no-kernel", str(exc), args, n_star=exc.n_star)
    except IllConditionedError as exc:
        return _fail(EXIT_ILL_CONDITIONED, "ill-conditioned", str(exc), args, condition_number=exc.condition_number)
    except (ValueError, TypeError) as exc:
        return _fail(EXIT_INPUT, "input", str(exc), args)


if __name__ == "__main__":
    sys.exit(main())
