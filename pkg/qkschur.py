"""
Command-line entry point.

    python qkschur.py qschubert --n 3 --w 3,2,1
    python qkschur.py verify --n 4 --format json
"""
import argparse
import json
import sys
from typing import Callable, Dict, List, Optional

from algebra.affine import bounded_partition_of, d_element, d_word_from_tableau, lambda_of, reduced_word
from algebra.errors import AlgebraError, InternalInvariantError
from algebra.kschur import kschur_in_h, set_cache_client
from algebra.locring import loc_to_json, phi, render_loc
from algebra.polyring import XQ, render, to_json
from algebra.schubert import phi_of_quantum_schubert, quantum_schubert, quantum_schur, schubert_poly
from algebra.symfunc import expansion_to_json, partition_key, schur_expand
from algebra.toda import hamiltonians, render_hamiltonian, verify_kostant
from checks.suite import VerifySuite, default_checks
from checks.templates import render_suite
from store.cache_client import get_cache_client
from utils.log import log_debug, set_log_level, set_log_level_to_debug
from utils.reader import parse_partition, parse_perm, parse_polynomial
from utils.settings import Settings, get_settings

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


def _emit(args: argparse.Namespace, text: str, payload: Dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name, None) in (None, "")]
    if missing:
        raise UsageError(f"{args.command} needs {', '.join(missing)}")


# --- Subcommands ---

def cmd_schubert(args: argparse.Namespace) -> int:
    _require(args, "w")
    w = parse_perm(args.w, args.n)
    p = schubert_poly(w)
    _emit(args, render(p), {"w": list(w), "polynomial": render(p), "terms": to_json(p)})
    return EXIT_OK


def cmd_qschubert(args: argparse.Namespace) -> int:
    _require(args, "w")
    w = parse_perm(args.w, args.n)
    p = quantum_schubert(w)
    _emit(args, render(p), {"w": list(w), "polynomial": render(p), "terms": to_json(p)})
    return EXIT_OK


def cmd_qschur(args: argparse.Namespace) -> int:
    _require(args, "lambda_", "m")
    la = parse_partition(args.lambda_)
    p = quantum_schur(la, args.m, args.n)
    _emit(
        args,
        render(p),
        {"lambda": list(la), "m": args.m, "polynomial": render(p), "terms": to_json(p)},
    )
    return EXIT_OK


def cmd_phi(args: argparse.Namespace) -> int:
    if bool(args.w) == bool(args.poly):
        raise UsageError("phi needs exactly one of --w or --poly")
    if args.w:
        w = parse_perm(args.w, args.n)
        image = phi_of_quantum_schubert(w)
        source = {"w": list(w)}
    else:
        image = phi(parse_polynomial(args.poly, XQ(args.n)))
        source = {"poly": args.poly}
    _emit(args, render_loc(image), {**source, "image": render_loc(image), "value": loc_to_json(image)})
    return EXIT_OK


def cmd_kschur(args: argparse.Namespace) -> int:
    _require(args, "lambda_")
    la = parse_partition(args.lambda_)
    p = kschur_in_h(la, args.n)
    payload = {
        "lambda": list(la),
        "k": args.n - 1,
        "polynomial": render(p),
        "terms": to_json(p),
        "schur": expansion_to_json(schur_expand(p)),
    }
    _emit(args, render(p), payload)
    return EXIT_OK


def cmd_lambda_of(args: argparse.Namespace) -> int:
    _require(args, "w")
    w = parse_perm(args.w, args.n)
    la = lambda_of(w)
    _emit(args, partition_key(la), {"w": list(w), "lambda": list(la)})
    return EXIT_OK


def cmd_d_element(args: argparse.Namespace) -> int:
    indices = [args.i] if args.i is not None else list(range(1, args.n))
    rows, payload = [], []
    for i in indices:
        y = d_element(i, args.n)
        word = reduced_word(y)
        la = bounded_partition_of(y)
        rows.append(f"d_{i} = {y}  word {' '.join(f's{a}' for a in word)}  partition {partition_key(la)}")
        payload.append(
            {
                "i": i,
                "window": list(y.window),
                "word": word,
                "tableau_word": d_word_from_tableau(i, args.n),
                "partition": list(la),
            }
        )
    _emit(args, "\n".join(rows), {"n": args.n, "d": payload})
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        suite = VerifySuite(default_checks(jobs=args.jobs, spot=args.spot), only=args.only)
    except ValueError as e:
        raise UsageError(str(e))
    report = suite.execute(args.n)
    if args.format == "json":
        print(report.to_json())
    else:
        print(render_suite(report))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_toda_check(args: argparse.Namespace) -> int:
    report = verify_kostant(args.n)
    if args.format == "json":
        print(json.dumps({**report.model_dump(), "pass": report.passed}, indent=2))
    else:
        lines = [render_hamiltonian(ham) for ham in hamiltonians(args.n)]
        failed = [e for e in report.entries if not e.passed]
        lines.append(f"Ψ(g) = Φ(L) entrywise: {len(report.entries) - len(failed)}/{len(report.entries)}")
        for e in failed:
            lines.append(f"    ({e.i},{e.j}): {e.psi} != {e.phi}")
        lines.append(f"nilpotent: {report.nilpotent}  antitriangular: {report.antitriangular}")
        lines.append(f"Φ(H_k) = 0: {report.hamiltonians_vanish}  conservation: {report.conservation}")
        lines.append("OK" if report.passed else "FAILED")
        print("\n".join(lines))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "schubert": cmd_schubert,
    "qschubert": cmd_qschubert,
    "qschur": cmd_qschur,
    "phi": cmd_phi,
    "kschur": cmd_kschur,
    "lambda-of": cmd_lambda_of,
    "d-element": cmd_d_element,
    "verify": cmd_verify,
    "toda-check": cmd_toda_check,
}


# --- Argument parsing ---

def build_parser(settings: Settings) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="rank: permutations of 1..n")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--cache-dir", default=None, help="k-Schur cache directory (overrides QKSCHUR_CACHE_DIR)")
    common.add_argument("--jobs", type=int, default=settings.jobs, help="worker processes for sweeps")
    common.add_argument("--allow-large", action="store_true", help=f"accept n above {settings.max_rank}")
    common.add_argument("--log-level", default=settings.log_level)
    common.add_argument("--debug", action="store_true", help="shorthand for --log-level DEBUG")

    parser = argparse.ArgumentParser(
        prog="qkschur",
        description="Quantum Schubert polynomials, k-Schur functions and the substitution between them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schubert", parents=[common], help="classical Schubert polynomial of w")
    p.add_argument("--w", help="one-line notation, e.g. 1,3,2")

    p = sub.add_parser("qschubert", parents=[common], help="quantum Schubert polynomial of w")
    p.add_argument("--w")

    p = sub.add_parser("qschur", parents=[common], help="quantum Schur function of shape λ in m variables")
    p.add_argument("--lambda", dest="lambda_")
    p.add_argument("--m", type=int)

    p = sub.add_parser("phi", parents=[common], help="Φ of a quantum Schubert polynomial or of a polynomial in x, q")
    p.add_argument("--w")
    p.add_argument("--poly", help='e.g. "x1^2*x2 + q1*x1"')

    p = sub.add_parser("kschur", parents=[common], help="k-Schur function (k = n - 1) in the h basis")
    p.add_argument("--lambda", dest="lambda_")

    p = sub.add_parser("lambda-of", parents=[common], help="the partition attached to w")
    p.add_argument("--w")

    p = sub.add_parser("d-element", parents=[common], help="the affine Grassmannian elements d_i")
    p.add_argument("--i", type=int, default=None, help="a single index; all of 1..n-1 by default")

    p = sub.add_parser("verify", parents=[common], help="run the verification checks")
    p.add_argument("--only", action="append", default=None, metavar="NAME", help="repeatable; a check name")
    p.add_argument("--spot", action="store_true", help="restrict the theorem sweep to w(1)=1, w(2)=4")

    sub.add_parser("toda-check", parents=[common], help="Kostant map against Φ of the Lax matrix")
    return parser


def _validate(args: argparse.Namespace, settings: Settings) -> None:
    if args.n < 2:
        raise UsageError(f"--n must be at least 2, got {args.n}")
    if args.n > settings.max_rank and not args.allow_large:
        raise UsageError(f"n={args.n} is above the limit {settings.max_rank}; pass --allow-large to go on")
    if args.jobs < 1:
        raise UsageError(f"--jobs must be at least 1, got {args.jobs}")


def main(argv: Optional[List[str]] = None) -> int:
    try:
        settings = get_settings()
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    if args.debug:
        set_log_level_to_debug()
    else:
        set_log_level(args.log_level)

    try:
        _validate(args, settings)
        set_cache_client(get_cache_client(args.cache_dir))
        log_debug("running %s at n=%d", args.command, args.n)
        return COMMANDS[args.command](args)
    except (UsageError, AlgebraError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInvariantError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    finally:
        set_cache_client(None)


if __name__ == "__main__":
    sys.exit(main())
