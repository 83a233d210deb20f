"""Command-line front end.

    adjfactor verify  --ring int --n 4 --trials 50 --seed 42
    adjfactor factor  --n 4 --seed 7 [--input U.json] [--output cert.json]
    adjfactor lemmas  --n 3 [--max-order 3]
    adjfactor demo

Exit status: 0 when every check passed, 1 when a check failed, 2 on bad
usage, 3 on I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import calculus
from .errors import BadAlternatingDet, NotAlternating, OddSize
from .factor import factor_adjoint
from .matrix import Matrix, generic_matrix, hyperbolic
from .ring import QQ, ZZ, PolyRing, RingDescriptor, Zmod
from .sampling import random_matrix
from .serialize import SCHEMA_VERSION, matrix_from_dict
from .suite import AB_SWEEP, minus_ab_identity, run_verify

MAX_N_SYMBOLIC = 5
MAX_N_NUMERIC = 8

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    ring: RingDescriptor
    n: int
    trials: int = 1
    seed: int = 0
    input_path: str | None = None
    output_path: str | None = None
    symbolic: bool = False
    max_order: int | None = None
    allow_large: bool = False


def _ring_from_args(args) -> RingDescriptor:
    if args.ring is None:
        args.ring = "poly" if args.command == "lemmas" else "int"
    if args.symbolic or args.ring == "poly":
        return PolyRing(args.n)
    if args.ring == "int":
        return ZZ
    if args.ring == "rational":
        return QQ
    if args.modulus is None:
        raise UsageError("--ring mod needs --modulus")
    try:
        return Zmod(args.modulus)
    except ValueError as e:
        raise UsageError(str(e)) from None


def make_config(args) -> RunConfig:
    if args.command == "demo":
        return RunConfig("demo", ZZ, 2)
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    if not 0 <= args.seed < 2 ** 64:
        raise UsageError("--seed must be an unsigned 64-bit integer")
    ring = _ring_from_args(args)
    symbolic = ring.kind.value == "poly"
    limit = MAX_N_SYMBOLIC if symbolic else MAX_N_NUMERIC
    if args.n > limit:
        raise UsageError(f"n = {args.n} exceeds the {'symbolic' if symbolic else 'numeric'} limit {limit}")
    if args.command == "lemmas" and not symbolic:
        raise UsageError("lemmas runs on the generic matrix only; drop --ring or use --ring poly")
    if args.command == "factor" and args.n % 2 and args.input is None:
        raise UsageError(f"OddSize: factorization needs even n, got {args.n}")
    return RunConfig(
        command=args.command,
        ring=ring,
        n=args.n,
        trials=args.trials,
        seed=args.seed,
        input_path=args.input,
        output_path=args.output,
        symbolic=symbolic,
        max_order=args.max_order,
        allow_large=args.allow_large,
    )


def _emit(obj, cfg: RunConfig, out):
    text = json.dumps(obj, indent=2) + "\n"
    if cfg.output_path:
        with open(cfg.output_path, "w") as f:
            f.write(text)
    else:
        out.write(text)


def cmd_verify(cfg: RunConfig, out=sys.stdout) -> int:
    report = run_verify(cfg.ring, cfg.n, cfg.trials, cfg.seed)
    _emit(report, cfg, out)
    return EXIT_OK if report["all_passed"] else EXIT_FAIL


def _load_inputs(path: str):
    with open(path) as f:
        data = json.load(f)
    if "entries" in data:
        return matrix_from_dict(data), None, None
    U = matrix_from_dict(data["U"])
    A = matrix_from_dict(data["A"]) if "A" in data else None
    Ap = matrix_from_dict(data["Aprime"]) if "Aprime" in data else None
    return U, A, Ap


def cmd_factor(cfg: RunConfig, out=sys.stdout) -> int:
    A = Ap = None
    if cfg.input_path:
        try:
            U, A, Ap = _load_inputs(cfg.input_path)
        except (KeyError, ValueError) as e:
            raise UsageError(f"bad input file: {e}") from None
    elif cfg.symbolic:
        U = generic_matrix(cfg.n)
    else:
        U = random_matrix(cfg.ring, cfg.n, cfg.seed)
    if U.n % 2:
        raise UsageError(f"OddSize: factorization needs even n, got {U.n}")
    H = hyperbolic(U.n // 2, U.ring)
    try:
        cert = factor_adjoint(U, A if A is not None else H, Ap if Ap is not None else H, seed=cfg.seed)
    except (OddSize, BadAlternatingDet, NotAlternating) as e:
        raise UsageError(f"{type(e).__name__}: {e}") from None
    _emit(cert.to_dict(), cfg, out)
    return EXIT_OK if cert.all_passed else EXIT_FAIL


def _default_order(n: int) -> int:
    k = 1
    while k < n and n ** (2 * (k + 1)) <= calculus.MAX_TUPLES:
        k += 1
    return k


def cmd_lemmas(cfg: RunConfig, out=sys.stdout) -> int:
    n = cfg.n
    k = cfg.max_order if cfg.max_order is not None else _default_order(n)
    try:
        d3 = calculus.check_derdet3(n, k, allow_large=cfg.allow_large)
    except ValueError as e:
        raise UsageError(str(e)) from None
    reports = [
        calculus.check_diffdet(generic_matrix(n)),
        calculus.check_derdet1(n),
        calculus.check_derdet2(n),
        d3,
        calculus.check_phi(n),
    ]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "lemmas",
        "n": n,
        "max_order": k,
        "reports": [r.to_dict() for r in reports],
        "all_passed": all(r.all_passed for r in reports),
    }
    _emit(doc, cfg, out)
    return EXIT_OK if doc["all_passed"] else EXIT_FAIL


DEMO_U = [[2, 1, 0, 3], [1, 3, 1, 0], [0, 2, 1, 1], [4, 0, 1, 2]]


def cmd_demo(out=sys.stdout) -> int:
    ok = True
    w = out.write
    w("n = 2, generic X, A = [[0,a],[-a,0]], A' = [[0,b],[-b,0]]\n")
    for a in AB_SWEEP:
        for b in AB_SWEEP:
            good = minus_ab_identity(a, b)
            ok &= good
            w(f"  a={a:2d} b={b:2d}  A adj(X)^T A' = -ab X  {'verified' if good else 'FAILED'}\n")
    X = generic_matrix(2)
    w(f"  adj(X)^T =\n{_indent(X.adjoint().T)}\n")

    U = Matrix(ZZ, DEMO_U)
    H = hyperbolic(2)
    cert = factor_adjoint(U, H, H)
    w("\nn = 4, A = A' = hyperbolic(2)\n")
    w(f"  U =\n{_indent(U)}\n")
    w(f"  r = {cert.r}\n")
    w(f"  Y =\n{_indent(cert.Y)}\n")
    w(f"  Z =\n{_indent(cert.Z)}\n")
    w(f"  adj(U) = Y Z: {cert.checks['factor_YZ']}   adj(U) = Y' Z': {cert.checks['factor_YpZp']}\n")
    w(f"  det(U) = {U.det()}, det(Y) = {cert.Y.det()}, det(Z') = {cert.Zprime.det()}\n")
    ok &= cert.all_passed
    w(f"\nall checks {'passed' if ok else 'FAILED'}\n")
    return EXIT_OK if ok else EXIT_FAIL


def _indent(M: Matrix, pad: str = "    ") -> str:
    return "\n".join(pad + line for line in str(M).splitlines())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="adjfactor", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--ring", choices=("int", "rational", "mod", "poly"), help="default: poly for lemmas, int otherwise"
    )
    common.add_argument("--modulus", type=int)
    common.add_argument("--n", type=int, default=4)
    common.add_argument("--trials", type=int, default=10)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--symbolic", action="store_true", help="use the generic matrix over Z[x_ij]")
    common.add_argument("--input", help="matrix or {U, A, Aprime} JSON file")
    common.add_argument("--output", help="write the JSON result here instead of stdout")
    common.add_argument("--max-order", type=int, help="highest derivative order for lemmas")
    common.add_argument("--allow-large", action="store_true", help="lift the tuple cap for lemmas")

    sub.add_parser("verify", parents=[common], help="run the randomized identity grid")
    sub.add_parser("factor", parents=[common], help="emit a factorization certificate")
    sub.add_parser("lemmas", parents=[common], help="check the derivative identities on det X")
    sub.add_parser("demo", help="print the worked 2x2 identity and a 4x4 factorization")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = make_config(args)
        if cfg.command == "demo":
            return cmd_demo(out)
        return {"verify": cmd_verify, "factor": cmd_factor, "lemmas": cmd_lemmas}[cfg.command](cfg, out)
    except UsageError as e:
        print(f"adjfactor: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"adjfactor: I/O error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
