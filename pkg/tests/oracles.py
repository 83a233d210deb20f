"""Brute-force reference computations, kept independent of the library's
memoized algorithms. They work on plain nested lists of raw values."""

import itertools


def perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def leibniz_det(rows, zero=0, one=1):
    n = len(rows)
    total = zero
    for p in itertools.permutations(range(n)):
        term = one
        for i in range(n):
            term = term * rows[i][p[i]]
        total = total + term if perm_sign(p) > 0 else total - term
    return total


def delete(rows, drop_rows, drop_cols):
    """Submatrix with the given 0-based rows and columns removed."""
    return [
        [v for j, v in enumerate(row) if j not in drop_cols]
        for i, row in enumerate(rows)
        if i not in drop_rows
    ]


def cofactor_adjoint(rows, zero=0, one=1):
    n = len(rows)
    if n == 1:
        return [[one]]
    return [
        [(1 if (i + j) % 2 == 0 else -1) * leibniz_det(delete(rows, {j}, {i}), zero, one) for j in range(n)]
        for i in range(n)
    ]
