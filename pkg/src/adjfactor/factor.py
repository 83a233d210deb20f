"""Alternating-matrix constructions around the transposed adjoint.

For U, A, A' of size n with A, A' alternating:

* ``build_B``:  b_rs = sum_{k<l} a_kl (-1)^(k+l+r+s) [kl ^| rs](U), so that
  A adj(U)^T = U B;
* ``build_r``:  r = -sum_{k<l, u<v} (-1)^(k+l+u+v) a_kl [kl ^| uv](U) a'_uv;
* ``build_C``:  c_wm = sum_{k<l, u<v} (-1)^(k+l+m+u+v+w) a_kl [klm ^| uvw](U) a'_uv,
  so that B A' = r I + C U and A adj(U)^T A' = r U + U C U.

For even n and det A = det A' = 1 this yields two factorizations of adj(U),
see :func:`factor_adjoint`.

All sums run over k < l and u < v exactly; complementary minors with
unsorted or repeated indices go through the alternating extension.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from .calculus import phi_matrix
from .errors import BadAlternatingDet, InvalidWitness, OddSize, RingMismatch
from .matrix import Matrix, generic_matrix, identity, normalize_indices, require_alternating, solve
from .ring import Kind, RingElement

__all__ = [
    "BCRBundle",
    "FactorizationCertificate",
    "CHECK_NAMES",
    "build_B",
    "build_r",
    "build_C",
    "build_bundle",
    "bifactor_check",
    "trace_checks",
    "uniqueness_check",
    "solve_for_B",
    "right_variant_check",
    "factor_adjoint",
    "IdentityViolation",
]

CHECK_NAMES = (
    "eq_star",
    "eq_2star",
    "eq_3star",
    "bifac",
    "trace_B",
    "trace_C",
    "uniqueness",
    "factor_YZ",
    "factor_YpZp",
    "det_Y",
    "det_Zp",
)


class IdentityViolation(AssertionError):
    """An identity that must hold for valid inputs failed (a library defect)."""


def _align(M: Matrix, U: Matrix, name: str) -> Matrix:
    if M.n != U.n:
        raise ValueError(f"{name} is {M.n}x{M.n} but U is {U.n}x{U.n}")
    if M.ring != U.ring:
        if M.ring.kind is Kind.INTEGER:
            return M.over(U.ring)
        raise RingMismatch(f"{name} is over {M.ring}, U over {U.ring}")
    return M


def _pairs(n: int):
    return list(itertools.combinations(range(1, n + 1), 2))


@functools.lru_cache(maxsize=None)
def _comp_lookup(n: int, width: int) -> dict:
    """Map every index tuple (k, l, m) with k < l (``width`` 3) or every
    pair (r, s) (``width`` 2), 1-based, to (sign, complement bitmask) of the
    symbol on those indices, or None on repetition."""
    full = (1 << n) - 1
    if width == 2:
        tuples = itertools.product(range(1, n + 1), repeat=2)
    else:
        tuples = (p + (m,) for p in _pairs(n) for m in range(1, n + 1))
    out = {}
    for idx in tuples:
        sign, s = normalize_indices(idx)
        if not sign:
            out[idx] = None
            continue
        mask = 0
        for i in s:
            mask |= 1 << (i - 1)
        out[idx] = (sign, full ^ mask)
    return out


def build_B(A: Matrix, U: Matrix) -> Matrix:
    A = _align(A, U, "A")
    require_alternating(A, "A")
    n = U.n
    ring = U.ring
    table = U.minor_table()
    pairs = _pairs(n)
    # every ordered pair (r, s), repeated ones included, through the sign convention
    lookup = _comp_lookup(n, 2)
    out = []
    for r in range(1, n + 1):
        row = []
        for s in range(1, n + 1):
            col = lookup[(r, s)]
            acc = ring.zero
            if col is not None:
                csign, cmask = col
                for k, l in pairs:
                    a = A.rows[k - 1][l - 1]
                    if not a:
                        continue
                    rsign, rmask = lookup[(k, l)]
                    v = table[(rmask, cmask)]
                    if not v:
                        continue
                    term = a * v
                    if (k + l + r + s) % 2 != (rsign * csign < 0):
                        acc = acc - term
                    else:
                        acc = acc + term
            row.append(acc)
        out.append(row)
    return Matrix._build(ring, out)


def build_r(A: Matrix, Aprime: Matrix, U: Matrix) -> RingElement:
    A = _align(A, U, "A")
    Aprime = _align(Aprime, U, "A'")
    require_alternating(A, "A")
    require_alternating(Aprime, "A'")
    n = U.n
    ring = U.ring
    table = U.minor_table()
    full = (1 << n) - 1
    acc = ring.zero
    for k, l in _pairs(n):
        a = A.rows[k - 1][l - 1]
        if not a:
            continue
        rmask = full ^ (1 << (k - 1)) ^ (1 << (l - 1))
        for u, v in _pairs(n):
            b = Aprime.rows[u - 1][v - 1]
            if not b:
                continue
            m = table[(rmask, full ^ (1 << (u - 1)) ^ (1 << (v - 1)))]
            if not m:
                continue
            term = a * m * b
            acc = acc + term if (k + l + u + v) % 2 else acc - term
    return RingElement(ring, ring.normalize(acc))


def build_C(A: Matrix, Aprime: Matrix, U: Matrix) -> Matrix:
    A = _align(A, U, "A")
    Aprime = _align(Aprime, U, "A'")
    require_alternating(A, "A")
    require_alternating(Aprime, "A'")
    n = U.n
    ring = U.ring
    table = U.minor_table()
    pairs = _pairs(n)
    lookup = _comp_lookup(n, 3)
    left = [(k, l, A.rows[k - 1][l - 1]) for k, l in pairs if A.rows[k - 1][l - 1]]
    right = [(u, v, Aprime.rows[u - 1][v - 1]) for u, v in pairs if Aprime.rows[u - 1][v - 1]]
    out = []
    for w in range(1, n + 1):
        row = []
        for m in range(1, n + 1):
            acc = ring.zero
            for k, l, a in left:
                rs = lookup[(k, l, m)]
                if rs is None:
                    continue
                rsign, rmask = rs
                for u, v, b in right:
                    cs = lookup[(u, v, w)]
                    if cs is None:
                        continue
                    csign, cmask = cs
                    minor = table[(rmask, cmask)]
                    if not minor:
                        continue
                    term = a * minor * b
                    if (k + l + m + u + v + w) % 2 != (rsign * csign < 0):
                        acc = acc - term
                    else:
                        acc = acc + term
            row.append(acc)
        out.append(row)
    return Matrix._build(ring, out)


@dataclass(frozen=True)
class BCRBundle:
    U: Matrix
    A: Matrix
    Aprime: Matrix
    B: Matrix
    C: Matrix
    r: RingElement

    @property
    def n(self) -> int:
        return self.U.n

    def eq_2star(self) -> bool:
        return self.A @ self.U.adjoint().T == self.U @ self.B

    def eq_3star(self) -> bool:
        I = identity(self.U.ring, self.n)
        return self.B @ self.Aprime == I.scale(self.r) + self.C @ self.U

    def bifac(self) -> bool:
        lhs = self.A @ self.U.adjoint().T @ self.Aprime
        return lhs == self.U.scale(self.r) + self.U @ self.C @ self.U

    def trace_B(self) -> bool:
        return (self.B @ self.Aprime).trace() == self.r * 2

    def trace_C(self) -> bool:
        return (self.C @ self.U).trace() == self.r * (2 - self.n)

    def uniqueness(self) -> bool:
        adj = self.U.adjoint()
        return adj @ self.A @ adj.T == self.B.scale(self.U.det())


def build_bundle(A: Matrix, Aprime: Matrix, U: Matrix) -> BCRBundle:
    A = _align(A, U, "A")
    Aprime = _align(Aprime, U, "A'")
    return BCRBundle(U, A, Aprime, build_B(A, U), build_C(A, Aprime, U), build_r(A, Aprime, U))


def bifactor_check(A: Matrix, Aprime: Matrix, U: Matrix) -> BCRBundle:
    """Build B, C, r and confirm A adj(U)^T A' = r U + U C U."""
    bundle = build_bundle(A, Aprime, U)
    if not bundle.bifac():
        raise IdentityViolation("A adj(U)^T A' != rU + UCU")
    return bundle


def trace_checks(bundle: BCRBundle) -> bool:
    """tr(B A') = 2r and tr(C U) = (2 - n) r."""
    return bundle.trace_B() and bundle.trace_C()


def uniqueness_check(A: Matrix, U: Matrix) -> bool:
    """adj(U) A adj(U)^T = det(U) B."""
    A = _align(A, U, "A")
    B = build_B(A, U)
    adj = U.adjoint()
    return adj @ A @ adj.T == B.scale(U.det())


def solve_for_B(A: Matrix, U: Matrix) -> Matrix:
    """The solution of A adj(U)^T = U W over Q, found by elimination rather
    than through the adjoint formula. U must be invertible over Q."""
    A = _align(A, U, "A")
    return solve(U, A @ U.adjoint().T)


def right_variant_check(A: Matrix, B: Matrix) -> bool:
    """Given alternating A, B over Poly(n) with A adj(X)^T = X B, confirm
    adj(X)^T phi(A) = phi(B) X, phi being x_ij -> x_ji."""
    n = A.n
    X = generic_matrix(n)
    A = _align(A, X, "A")
    B = _align(B, X, "B")
    require_alternating(A, "A")
    require_alternating(B, "B")
    adjT = X.adjoint().T
    if A @ adjT != X @ B:
        raise InvalidWitness("A adj(X)^T != X B")
    return adjT @ phi_matrix(A) == phi_matrix(B) @ X


@dataclass(frozen=True)
class FactorizationCertificate:
    U: Matrix
    A: Matrix
    Aprime: Matrix
    B: Matrix
    C: Matrix
    r: RingElement
    Y: Matrix
    Z: Matrix
    Yprime: Matrix
    Zprime: Matrix
    checks: dict
    seed: int | None = field(default=None)

    @property
    def all_passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        from .serialize import SCHEMA_VERSION, PRNG_NAME, matrix_to_dict

        return {
            "schema_version": SCHEMA_VERSION,
            "metadata": {
                "ring": self.U.ring.to_dict(),
                "n": self.U.n,
                "seed": self.seed,
                "prng": PRNG_NAME,
            },
            "inputs": {name: matrix_to_dict(getattr(self, name)) for name in ("U", "A", "Aprime")},
            "outputs": {
                **{name: matrix_to_dict(getattr(self, name)) for name in ("B", "C", "Y", "Z", "Yprime", "Zprime")},
                "r": str(self.r),
            },
            "checks": {name: self.checks[name] for name in CHECK_NAMES},
            "all_passed": self.all_passed,
        }


def factor_adjoint(U: Matrix, A: Matrix, Aprime: Matrix, *, seed: int | None = None) -> FactorizationCertificate:
    """Factor adj(U) = Y Z = Y' Z' with

        Y  = A'^-1 U^T,              Z  = (r I + C^T U^T) A^-1,
        Y' = A'^-1 (r I + U^T C^T),  Z' = U^T A^-1,

    and certify every identity along the way.
    """
    n = U.n
    if n % 2:
        raise OddSize(f"factorization needs even size, got n = {n}")
    A = _align(A, U, "A")
    Aprime = _align(Aprime, U, "A'")
    require_alternating(A, "A")
    require_alternating(Aprime, "A'")
    for name, M in (("A", A), ("A'", Aprime)):
        d = M.det()
        if d != 1:
            raise BadAlternatingDet(f"det({name}) = {d}, expected 1")

    bundle = build_bundle(A, Aprime, U)
    ring = U.ring
    I = identity(ring, n)
    adj = U.adjoint()
    dU = U.det()
    A_inv = A.inverse()
    Ap_inv = Aprime.inverse()
    UT = U.T
    CT = bundle.C.T
    Y = Ap_inv @ UT
    Z = (I.scale(bundle.r) + CT @ UT) @ A_inv
    Yp = Ap_inv @ (I.scale(bundle.r) + UT @ CT)
    Zp = UT @ A_inv

    checks = {
        "eq_star": adj @ U == I.scale(dU) and U @ adj == I.scale(dU),
        "eq_2star": bundle.eq_2star() and bundle.B.is_alternating(),
        "eq_3star": bundle.eq_3star(),
        "bifac": bundle.bifac(),
        "trace_B": bundle.trace_B(),
        "trace_C": bundle.trace_C(),
        "uniqueness": bundle.uniqueness(),
        "factor_YZ": Y @ Z == adj,
        "factor_YpZp": Yp @ Zp == adj,
        "det_Y": Y.det() == dU,
        "det_Zp": Zp.det() == dU,
    }
    return FactorizationCertificate(
        U, A, Aprime, bundle.B, bundle.C, bundle.r, Y, Z, Yp, Zp, checks, seed
    )
