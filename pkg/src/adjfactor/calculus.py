"""Executable checks of the derivation calculus on determinants.

Each ``check_*`` function verifies an identity about partial derivatives of
det(X) exhaustively over all index choices and returns a
:class:`DerivationReport`. These form the oracle layer for
:mod:`adjfactor.factor`: they never call into it.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .matrix import Matrix, generic_matrix
from .poly import Polynomial
from .ring import Kind

__all__ = [
    "Lemma",
    "DerivationReport",
    "partial",
    "check_diffdet",
    "check_derdet1",
    "check_derdet2",
    "check_derdet3",
    "check_phi",
    "transpose_automorphism",
    "phi_matrix",
    "MAX_TUPLES",
]

#: default cap on the number of index tuples check_derdet3 enumerates per order
MAX_TUPLES = 4 ** 6


class Lemma(enum.Enum):
    DIFFDET = "diffdet"
    DERDET1 = "derdet1"
    DERDET2 = "derdet2"
    DERDET3 = "derdet3"
    PHI = "phi"


@dataclass(frozen=True)
class DerivationReport:
    n: int
    lemma_id: Lemma
    cases_checked: int
    first_failure: tuple | None = field(default=None)

    @property
    def all_passed(self) -> bool:
        return self.first_failure is None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "lemma_id": self.lemma_id.value,
            "cases_checked": self.cases_checked,
            "all_passed": self.all_passed,
            "first_failure": None
            if self.first_failure is None
            else {
                "indices": list(self.first_failure[0]),
                "lhs": str(self.first_failure[1]),
                "rhs": str(self.first_failure[2]),
            },
        }


class _Tally:
    def __init__(self):
        self.count = 0
        self.failure = None

    def check(self, indices, lhs, rhs):
        self.count += 1
        if self.failure is None and lhs != rhs:
            self.failure = (tuple(indices), lhs, rhs)


def partial(i: int, j: int) -> Callable[[Polynomial], Polynomial]:
    """The derivation d/dx_ij as a callable on polynomials."""

    def d(p: Polynomial) -> Polynomial:
        return p.partial(i, j)

    d.__name__ = f"d_{i}{j}"
    return d


def _replace_row(U: Matrix, i: int, row) -> Matrix:
    rows = list(U.rows)
    rows[i] = tuple(row)
    return Matrix._wrap(U.ring, tuple(rows))


def check_diffdet(U: Matrix, derivations: Mapping[tuple, Callable] | None = None) -> DerivationReport:
    """D(det U) equals the sum of determinants with one row (resp. column)
    replaced by its image under D.

    ``derivations`` maps a label to a derivation of U's polynomial ring;
    by default every partial d/dx_kl is used.
    """
    if U.ring.kind is not Kind.POLY:
        raise ValueError("check_diffdet needs a matrix over a polynomial ring")
    n = U.n
    m = U.ring.n
    if derivations is None:
        derivations = {(k, l): partial(k, l) for k in range(1, m + 1) for l in range(1, m + 1)}
    tally = _Tally()
    d_U = U.det().value
    for label, D in derivations.items():
        DU = U.map(D)
        lhs = D(d_U)
        by_rows = sum((_replace_row(U, i, DU.rows[i]).det().value for i in range(n)), U.ring.zero)
        tally.check(tuple(label) + ("rows",), lhs, by_rows)
        T, DT = U.T, DU.T
        by_cols = sum((_replace_row(T, j, DT.rows[j]).det().value for j in range(n)), U.ring.zero)
        tally.check(tuple(label) + ("cols",), lhs, by_cols)
    return DerivationReport(n, Lemma.DIFFDET, tally.count, tally.failure)


def check_derdet1(n: int) -> DerivationReport:
    """d/dx_ij det X is the (i, j) entry of adj(X)^T, for all i, j."""
    X = generic_matrix(n)
    d = X.det().value
    adjT = X.adjoint().T
    tally = _Tally()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            tally.check((i, j), d.partial(i, j), adjT.rows[i - 1][j - 1])
    return DerivationReport(n, Lemma.DERDET1, tally.count, tally.failure)


def check_derdet2(n: int) -> DerivationReport:
    """sum_v x_iv d_jv det X = delta_ij det X = sum_v x_vi d_vj det X."""
    X = generic_matrix(n)
    d = X.det().value
    grads = {(i, j): d.partial(i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
    x = lambda i, j: X.rows[i - 1][j - 1]  # noqa: E731
    zero = X.ring.zero
    tally = _Tally()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            expected = d if i == j else zero
            left = sum((x(i, v) * grads[(j, v)] for v in range(1, n + 1)), zero)
            right = sum((x(v, i) * grads[(v, j)] for v in range(1, n + 1)), zero)
            tally.check((i, j, "rows"), left, expected)
            tally.check((i, j, "cols"), right, expected)
    return DerivationReport(n, Lemma.DERDET2, tally.count, tally.failure)


def check_derdet3(n: int, max_order: int, *, allow_large: bool = False) -> DerivationReport:
    """Iterated partials d_{i1 j1} ... d_{ik jk} det X equal
    (-1)^(sum i + sum j) [i1..ik ^| j1..jk](X) for every order k <= max_order
    and every index tuple, repeated and unsorted ones included.

    Orders whose tuple count n^(2k) exceeds :data:`MAX_TUPLES` are refused
    unless ``allow_large`` is set.
    """
    if not 1 <= max_order <= n:
        raise ValueError(f"order must lie in 1..{n}, got {max_order}")
    if not allow_large and n ** (2 * max_order) > MAX_TUPLES:
        raise ValueError(
            f"{n ** (2 * max_order)} tuples at n={n}, k={max_order}; pass allow_large=True to run"
        )
    X = generic_matrix(n)
    # derivative of det X along a prefix of (i, j) pairs, applied left to right
    cache: dict = {(): X.det().value}

    def derivative(pairs: tuple) -> Polynomial:
        if pairs not in cache:
            i, j = pairs[-1]
            cache[pairs] = derivative(pairs[:-1]).partial(i, j)
        return cache[pairs]

    idx = range(1, n + 1)
    tally = _Tally()
    for k in range(1, max_order + 1):
        for rows in itertools.product(idx, repeat=k):
            for cols in itertools.product(idx, repeat=k):
                lhs = derivative(tuple(zip(rows, cols)))
                rhs = X.signed_comp_minor_raw(rows, cols)
                if (sum(rows) + sum(cols)) % 2:
                    rhs = -rhs
                tally.check(rows + cols, lhs, rhs)
    return DerivationReport(n, Lemma.DERDET3, tally.count, tally.failure)


def transpose_automorphism(p: Polynomial) -> Polynomial:
    """The ring automorphism x_ij -> x_ji."""
    n = p.n
    perm = [(k % n) * n + k // n for k in range(n * n)]
    return p.permute_variables(perm)


def phi_matrix(M: Matrix) -> Matrix:
    """Apply x_ij -> x_ji to every entry of a polynomial matrix."""
    if M.ring.kind is not Kind.POLY:
        raise ValueError("phi acts on matrices over a polynomial ring")
    return M.map(transpose_automorphism)


def check_phi(n: int) -> DerivationReport:
    """phi(X) = X^T, phi(det X) = det X, phi(adj X) = adj(X)^T and phi is
    an involution on every entry involved."""
    X = generic_matrix(n)
    tally = _Tally()
    XT = X.T
    adj = X.adjoint()
    phi_adj = phi_matrix(adj)
    adjT = adj.T
    for i in range(n):
        for j in range(n):
            tally.check(("X", i + 1, j + 1), transpose_automorphism(X.rows[i][j]), XT.rows[i][j])
            tally.check(("adj", i + 1, j + 1), phi_adj.rows[i][j], adjT.rows[i][j])
            e = adj.rows[i][j]
            tally.check(("involution", i + 1, j + 1), transpose_automorphism(transpose_automorphism(e)), e)
    d = X.det().value
    tally.check(("det",), transpose_automorphism(d), d)
    return DerivationReport(n, Lemma.PHI, tally.count, tally.failure)
