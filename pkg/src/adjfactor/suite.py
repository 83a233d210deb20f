"""Randomized verification grids behind ``adjfactor verify``.

Each trial draws a matrix U (or uses the generic matrix for symbolic runs),
runs every construction against the alternating basis plus one random
alternating A, pairs each with a random A', and records the outcome of
every identity. The report is a plain dict ready for ``json.dumps``.
"""

from __future__ import annotations

import random

from .factor import build_B, build_C, build_bundle, build_r, factor_adjoint, solve_for_B
from .matrix import Matrix, alternating_basis, generic_matrix, identity
from .ring import QQ, ZZ, Kind, RingDescriptor
from .sampling import random_matrix
from .serialize import PRNG_NAME, SCHEMA_VERSION, matrix_to_dict

AB_SWEEP = (-2, -1, 1, 3)


class _Check:
    def __init__(self):
        self.cases = 0
        self.counterexample = None

    def record(self, ok: bool, context):
        self.cases += 1
        if not ok and self.counterexample is None:
            self.counterexample = context() if callable(context) else context

    def to_dict(self) -> dict:
        return {
            "cases": self.cases,
            "passed": self.counterexample is None,
            "counterexample": self.counterexample,
        }


def _ctx(trial: int, **mats):
    return lambda: {"trial": trial, **{k: matrix_to_dict(v) for k, v in mats.items()}}


def minus_ab_identity(a: int, b: int) -> bool:
    """[[0,a],[-a,0]] adj(X)^T [[0,b],[-b,0]] = -ab X for the generic 2x2 X."""
    X = generic_matrix(2)
    A = Matrix(X.ring, [[0, a], [-a, 0]])
    Ap = Matrix(X.ring, [[0, b], [-b, 0]])
    return A @ X.adjoint().T @ Ap == X.scale(-a * b)


def run_verify(ring: RingDescriptor, n: int, trials: int, seed: int) -> dict:
    rng = random.Random(seed)
    symbolic = ring.kind is Kind.POLY
    names = [
        "eq_star", "eq_2star", "bilinearity", "eq_3star", "bifac",
        "trace_B", "trace_C", "uniqueness",
    ]
    if ring == ZZ:
        names.append("unique_solution")
    if n % 2 == 0:
        names.append("factor_adjoint")
    if n == 2:
        names.append("n2_C_vanishes")
        if symbolic:
            names.append("n2_minus_ab_identity")
    checks = {name: _Check() for name in names}

    basis = alternating_basis(ring, n)
    X = generic_matrix(n) if symbolic else None
    I = identity(ring, n)
    for t in range(trials):
        U = X if symbolic else random_matrix(ring, n, rng)
        adj = U.adjoint()
        d = U.det()
        checks["eq_star"].record(adj @ U == I.scale(d) == U @ adj, _ctx(t, U=U))

        A_rand = random_matrix(ring, n, rng, "alternating")
        Ap = random_matrix(ring, n, rng, "alternating")
        for A in basis + [A_rand]:
            b = build_bundle(A, Ap, U)
            ctx = _ctx(t, U=U, A=A, Aprime=Ap)
            checks["eq_2star"].record(b.B.is_alternating() and b.eq_2star(), ctx)
            checks["eq_3star"].record(b.eq_3star(), ctx)
            checks["bifac"].record(b.bifac(), ctx)
            checks["trace_B"].record(b.trace_B(), ctx)
            checks["trace_C"].record(b.trace_C(), ctx)
            checks["uniqueness"].record(b.uniqueness(), ctx)
            if n == 2:
                checks["n2_C_vanishes"].record(not any(any(row) for row in b.C.rows), ctx)

        A2 = random_matrix(ring, n, rng, "alternating")
        ctx = _ctx(t, U=U, A=A_rand, A2=A2, Aprime=Ap)
        additive = (
            build_B(A_rand + A2, U) == build_B(A_rand, U) + build_B(A2, U)
            and build_r(A_rand + A2, Ap, U) == build_r(A_rand, Ap, U) + build_r(A2, Ap, U)
            and build_r(Ap, A_rand + A2, U) == build_r(Ap, A_rand, U) + build_r(Ap, A2, U)
            and build_C(A_rand + A2, Ap, U) == build_C(A_rand, Ap, U) + build_C(A2, Ap, U)
            and build_C(Ap, A_rand + A2, U) == build_C(Ap, A_rand, U) + build_C(Ap, A2, U)
        )
        checks["bilinearity"].record(additive, ctx)

        if "unique_solution" in checks and d:
            checks["unique_solution"].record(
                solve_for_B(A_rand, U) == build_B(A_rand, U).over(QQ), _ctx(t, U=U, A=A_rand)
            )

        if "factor_adjoint" in checks:
            A1 = random_matrix(ring, n, rng, "alternating_det1")
            A1p = random_matrix(ring, n, rng, "alternating_det1")
            cert = factor_adjoint(U, A1, A1p, seed=seed)
            checks["factor_adjoint"].record(cert.all_passed, _ctx(t, U=U, A=A1, Aprime=A1p))

    if "n2_minus_ab_identity" in checks:
        for a in AB_SWEEP:
            for b in AB_SWEEP:
                checks["n2_minus_ab_identity"].record(minus_ab_identity(a, b), {"a": a, "b": b})

    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "ring": ring.to_dict(),
        "n": n,
        "trials": trials,
        "seed": seed,
        "prng": PRNG_NAME,
        "checks": {name: c.to_dict() for name, c in checks.items()},
    }
    report["all_passed"] = all(c["passed"] for c in report["checks"].values())
    return report

