import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from adjfactor.errors import NotInvertible, RingMismatch
from adjfactor.matrix import (
    Matrix,
    MinorSymbol,
    adjoint,
    comp_minor,
    det,
    generic_matrix,
    hyperbolic,
    identity,
    is_alternating,
    matadd,
    matmul,
    matrix_inverse,
    minor,
    scalar_mul,
    solve,
    transpose,
    zero_matrix,
)
from adjfactor.poly import Polynomial
from adjfactor.ring import QQ, ZZ, PolyRing, Zmod
from adjfactor.sampling import random_matrix

from conftest import NUMERIC_RINGS
from oracles import cofactor_adjoint, delete, leibniz_det

M2 = Matrix(ZZ, [[1, 2], [3, 4]])


def x(n, i, j):
    return Polynomial.var(n, i, j)


def test_generic_matrix():
    assert generic_matrix(1).rows == ((x(1, 1, 1),),)
    X = generic_matrix(2)
    assert X.to_strings() == [["x1_1", "x1_2"], ["x2_1", "x2_2"]]
    X3 = generic_matrix(3)
    assert len({v for row in X3.rows for v in row}) == 9
    with pytest.raises(ValueError):
        generic_matrix(0)


def test_det_examples():
    assert det(M2) == -2
    X = generic_matrix(2)
    assert det(X).value == x(2, 1, 1) * x(2, 2, 2) - x(2, 1, 2) * x(2, 2, 1)
    for ring in NUMERIC_RINGS + [PolyRing(3)]:
        for n in (1, 3, 5):
            assert det(identity(ring, n)) == 1


def test_generic_det_shape():
    for n in range(1, 6):
        d = det(generic_matrix(n)).value
        assert len(d) == [1, 2, 6, 24, 120][n - 1]
        assert set(d.terms.values()) <= {1, -1}


def test_adjoint_examples():
    assert adjoint(Matrix(ZZ, [[5]])) == Matrix(ZZ, [[1]])
    X = generic_matrix(2)
    assert adjoint(X).T.to_strings() == [["x2_2", "-x2_1"], ["-x1_2", "x1_1"]]
    assert adjoint(M2) == Matrix(ZZ, [[4, -2], [-3, 1]])


def test_minor_examples():
    assert minor(M2, MinorSymbol((1,), (2,))) == 2
    assert minor(M2, MinorSymbol((1, 2), (1, 2))) == -2
    assert minor(M2, MinorSymbol((2, 1), (1, 2))) == 2
    assert minor(M2, MinorSymbol((1, 1), (1, 2))) == 0
    assert minor(M2, MinorSymbol((), ())) == 1
    with pytest.raises(IndexError):
        minor(M2, MinorSymbol((3,), (1,)))
    with pytest.raises(ValueError):
        MinorSymbol((1, 2), (1,))


def test_comp_minor_examples():
    assert comp_minor(M2, MinorSymbol((1,), (1,), True)) == 4
    assert comp_minor(M2, MinorSymbol((1, 2), (1, 2), True)) == 1
    X = generic_matrix(3)
    expected = x(3, 2, 1) * x(3, 3, 3) - x(3, 2, 3) * x(3, 3, 1)
    assert comp_minor(X, MinorSymbol((1,), (2,), True)).value == expected
    with pytest.raises(ValueError):
        comp_minor(M2, MinorSymbol((1,), (1,)))


def test_minor_symbol_normalize():
    assert MinorSymbol((3, 1, 2), (1, 2, 3)).normalize() == (1, (1, 2, 3), (1, 2, 3))
    assert MinorSymbol((2, 1), (1, 2)).normalize() == (-1, (1, 2), (1, 2))
    assert MinorSymbol((2, 1), (3, 1)).normalize() == (1, (1, 2), (1, 3))
    assert MinorSymbol((1, 1), (1, 2)).normalize()[0] == 0
    assert MinorSymbol((1, 2), (4, 4)).normalize()[0] == 0


@given(st.lists(st.integers(1, 6), min_size=2, max_size=5, unique=True), st.data())
def test_minor_symbol_transposition_negates(rows, data):
    cols = data.draw(st.permutations(range(1, len(rows) + 1)))
    sym = MinorSymbol(tuple(rows), tuple(cols))
    a, b = data.draw(st.lists(st.integers(0, len(rows) - 1), min_size=2, max_size=2, unique=True))
    swapped = list(rows)
    swapped[a], swapped[b] = swapped[b], swapped[a]
    assert MinorSymbol(tuple(swapped), tuple(cols)).normalize()[0] == -sym.normalize()[0]


def test_is_alternating_examples():
    assert is_alternating(Matrix(ZZ, [[0, 1], [-1, 0]]))
    assert not is_alternating(Matrix(Zmod(2), [[1, 1], [1, 1]]))
    assert Matrix(Zmod(2), [[1, 1], [1, 1]]).T == -Matrix(Zmod(2), [[1, 1], [1, 1]])
    for n in range(1, 5):
        assert is_alternating(zero_matrix(ZZ, n))
    assert not is_alternating(Matrix(ZZ, [[0, 1], [1, 0]]))


def test_hyperbolic():
    H1 = hyperbolic(1)
    assert H1 == Matrix(ZZ, [[0, 1], [-1, 0]])
    for m in (1, 2, 3):
        H = hyperbolic(m)
        assert det(H) == 1
        assert leibniz_det([list(r) for r in H.rows]) == 1
        assert is_alternating(H)
        assert H @ H == -identity(ZZ, 2 * m)
    assert det(hyperbolic(2, Zmod(2))) == 1
    with pytest.raises(ValueError):
        hyperbolic(0)


def test_matrix_inverse():
    assert matrix_inverse(hyperbolic(1)) == Matrix(ZZ, [[0, -1], [1, 0]])
    assert matrix_inverse(identity(ZZ, 3)) == identity(ZZ, 3)
    with pytest.raises(NotInvertible):
        matrix_inverse(M2)
    Q = Matrix(QQ, M2.rows)
    assert Q @ matrix_inverse(Q) == identity(QQ, 2)
    R = Matrix(Zmod(7), M2.rows)
    assert R @ matrix_inverse(R) == identity(Zmod(7), 2)


def test_plumbing():
    rng = random.Random(3)
    U = random_matrix(ZZ, 3, rng)
    V = random_matrix(ZZ, 3, rng)
    assert matmul(identity(ZZ, 3), U) == U
    assert transpose(transpose(U)) == U
    assert matmul(hyperbolic(1), hyperbolic(1)) == -identity(ZZ, 2)
    assert matadd(U, V) - V == U
    assert scalar_mul(2, U) == U + U
    assert (U @ V).T == V.T @ U.T
    with pytest.raises(RingMismatch):
        U + Matrix(QQ, U.rows)
    with pytest.raises(ValueError):
        U @ identity(ZZ, 2)


def test_matrix_construction_from_strings_and_validation():
    assert Matrix(QQ, [["1/2", "3"], ["-2/4", "0"]]).rows[1][0] == Fraction(-1, 2)
    assert Matrix(Zmod(5), [[7, -1], [0, 5]]).rows == ((2, 4), (0, 0))
    with pytest.raises(ValueError):
        Matrix(ZZ, [[1, 2]])
    with pytest.raises(RingMismatch):
        Matrix(ZZ, [[Fraction(1, 2)]])


# -- properties ---------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 7))
def test_adjoint_identity_numeric(numeric_ring, n):
    rng = random.Random(n)
    I = identity(numeric_ring, n)
    for _ in range(8):
        U = random_matrix(numeric_ring, n, rng)
        adj, d = adjoint(U), det(U)
        assert adj @ U == I.scale(d)
        assert U @ adj == I.scale(d)
        assert adjoint(U.T) == adj.T


@pytest.mark.parametrize("n", range(1, 5))
def test_adjoint_identity_symbolic(n):
    X = generic_matrix(n)
    I = identity(X.ring, n)
    d = det(X)
    assert adjoint(X) @ X == I.scale(d) == X @ adjoint(X)


@pytest.mark.parametrize("ring", [ZZ, Zmod(6), PolyRing(2)], ids=str)
@pytest.mark.parametrize("n", range(1, 6))
def test_det_matches_leibniz(ring, n):
    rng = random.Random(100 + n)
    for _ in range(3 if ring.kind.value == "poly" else 10):
        U = random_matrix(ring, n, rng)
        rows = [list(r) for r in U.rows]
        assert det(U).value == ring.normalize(leibniz_det(rows, ring.zero, ring.one))


@pytest.mark.parametrize("n", range(1, 5))
def test_adjoint_matches_cofactor_oracle(n):
    U = random_matrix(QQ, n, random.Random(n))
    oracle = cofactor_adjoint([list(r) for r in U.rows])
    assert adjoint(U) == Matrix(QQ, oracle)


@pytest.mark.parametrize("n", range(1, 5))
def test_complementary_duality_generic(n):
    X = generic_matrix(n)
    rows = [list(r) for r in X.rows]
    zero, one = X.ring.zero, X.ring.one
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            expected = leibniz_det(delete(rows, {i - 1}, {j - 1}), zero, one)
            assert X.comp_minor([i], [j]).value == X.ring.normalize(expected)
            keep_r = [r for r in range(1, n + 1) if r != i]
            keep_c = [c for c in range(1, n + 1) if c != j]
            assert X.comp_minor([i], [j]) == X.minor(keep_r, keep_c)


@given(st.integers(2, 5), st.integers(0, 10**6), st.data())
def test_minor_antisymmetry(n, seed, data):
    U = random_matrix(ZZ, n, seed)
    k = data.draw(st.integers(1, n))
    rows = data.draw(st.lists(st.integers(1, n), min_size=k, max_size=k))
    cols = data.draw(st.lists(st.integers(1, n), min_size=k, max_size=k))
    for f in (U.minor, U.comp_minor):
        v = f(rows, cols)
        if len(set(rows)) < k or len(set(cols)) < k:
            assert v == 0
            continue
        if k >= 2:
            a, b = data.draw(st.lists(st.integers(0, k - 1), min_size=2, max_size=2, unique=True))
            r2 = list(rows)
            r2[a], r2[b] = r2[b], r2[a]
            c2 = list(cols)
            c2[a], c2[b] = c2[b], c2[a]
            assert f(r2, cols) == -v
            assert f(rows, c2) == -v


@given(st.integers(1, 4), st.integers(0, 10**6))
def test_solve_over_q(n, seed):
    U = random_matrix(ZZ, n, seed)
    M = random_matrix(ZZ, n, seed + 1)
    if det(U) == 0:
        with pytest.raises(NotInvertible):
            solve(U, M)
        return
    W = solve(U, M)
    assert Matrix(QQ, U.rows) @ W == Matrix(QQ, M.rows)
