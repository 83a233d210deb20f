import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from adjfactor.calculus import (
    Lemma,
    check_derdet1,
    check_derdet2,
    check_derdet3,
    check_diffdet,
    check_phi,
    partial,
    phi_matrix,
    transpose_automorphism,
)
from adjfactor.matrix import Matrix, generic_matrix
from adjfactor.poly import Polynomial
from adjfactor.ring import PolyRing
from adjfactor.sampling import random_matrix

from test_ring import polynomials


def x(n, i, j):
    return Polynomial.var(n, i, j)


def row_replaced_sum(U, D):
    """Sum over i of det(U with row i replaced by D applied to it)."""
    total = U.ring.zero
    for i in range(U.n):
        rows = list(U.rows)
        rows[i] = tuple(D(v) for v in rows[i])
        total = total + Matrix(U.ring, rows).det().value
    return total


def test_diffdet_n2_d11():
    X = generic_matrix(2)
    assert row_replaced_sum(X, partial(1, 1)) == x(2, 2, 2)
    assert X.det().value.partial(1, 1) == x(2, 2, 2)
    rep = check_diffdet(X, {(1, 1): partial(1, 1)})
    assert rep.all_passed and rep.cases_checked == 2


def test_diffdet_n1():
    rep = check_diffdet(generic_matrix(1))
    assert rep.all_passed and rep.lemma_id is Lemma.DIFFDET


def test_diffdet_n3_d22_is_cofactor():
    X = generic_matrix(3)
    cofactor = X.comp_minor([2], [2]).value
    assert row_replaced_sum(X, partial(2, 2)) == cofactor
    assert X.det().value.partial(2, 2) == cofactor


@pytest.mark.parametrize("n", [2, 3])
def test_diffdet_on_random_polynomial_matrices(n):
    rng = random.Random(n)
    for _ in range(3):
        U = random_matrix(PolyRing(n), n, rng)
        assert check_diffdet(U).all_passed


def test_diffdet_detects_non_derivation():
    def doubling(p):
        return p * 2

    rep = check_diffdet(generic_matrix(2), {("double",): doubling})
    assert not rep.all_passed
    assert rep.first_failure[0][0] == "double"


def test_diffdet_rejects_numeric():
    from adjfactor.ring import ZZ

    with pytest.raises(ValueError):
        check_diffdet(Matrix(ZZ, [[1]]))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_derdet1_and_2(n):
    for rep in (check_derdet1(n), check_derdet2(n)):
        assert rep.all_passed and rep.first_failure is None


def test_derdet1_counts():
    assert check_derdet1(3).cases_checked == 9
    assert check_derdet2(2).cases_checked == 8


def test_derdet2_worked_cases():
    X = generic_matrix(2)
    d = X.det().value
    lhs11 = x(2, 1, 1) * d.partial(1, 1) + x(2, 1, 2) * d.partial(1, 2)
    assert lhs11 == d
    lhs12 = x(2, 1, 1) * d.partial(2, 1) + x(2, 1, 2) * d.partial(2, 2)
    assert lhs12 == x(2, 1, 1) * -x(2, 1, 2) + x(2, 1, 2) * x(2, 1, 1) == 0


def test_derdet3_worked_tuples():
    X = generic_matrix(2)
    d = X.det().value
    assert d.partial(1, 1).partial(2, 2) == 1
    assert X.comp_minor([1, 2], [1, 2]) == 1
    # repeated rows
    assert d.partial(1, 1).partial(1, 2) == 0
    assert X.comp_minor([1, 1], [1, 2]) == 0


@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 2)])
def test_derdet3(n, k):
    rep = check_derdet3(n, k)
    assert rep.all_passed
    assert rep.cases_checked == sum(n ** (2 * t) for t in range(1, k + 1))


def test_derdet3_limits():
    with pytest.raises(ValueError):
        check_derdet3(2, 3)
    with pytest.raises(ValueError):
        check_derdet3(5, 3)
    assert check_derdet3(5, 2).all_passed


def test_phi_examples():
    assert transpose_automorphism(x(3, 1, 2)) == x(3, 2, 1)
    for n in (1, 2, 3):
        X = generic_matrix(n)
        d = X.det().value
        assert transpose_automorphism(d) == d
        assert phi_matrix(X.adjoint()) == X.adjoint().T
        assert phi_matrix(X) == X.T
        assert check_phi(n).all_passed


@given(polynomials(3), polynomials(3))
def test_phi_is_an_involutive_ring_map(p, q):
    phi = transpose_automorphism
    assert phi(phi(p)) == p
    assert phi(p + q) == phi(p) + phi(q)
    assert phi(p * q) == phi(p) * phi(q)


@pytest.mark.parametrize("n,k", [(3, 2), (3, 3), (4, 3)])
def test_mixed_partials_commute_on_det(n, k):
    d = generic_matrix(n).det().value
    rng = random.Random(k)
    for _ in range(10):
        pairs = [(rng.randint(1, n), rng.randint(1, n)) for _ in range(k)]
        results = set()
        for order in itertools.permutations(pairs):
            p = d
            for i, j in order:
                p = p.partial(i, j)
            results.add(p)
        assert len(results) == 1


def test_report_serializes():
    doc = check_derdet1(2).to_dict()
    assert doc == {"n": 2, "lemma_id": "derdet1", "cases_checked": 4, "all_passed": True, "first_failure": None}
