"""Seeded random inputs. Every generator takes a ``random.Random`` (or an
int seed) so runs are reproducible on any platform."""

from __future__ import annotations

import random

from .errors import OddSize
from .matrix import Matrix, hyperbolic
from .ring import ZZ, Kind, RingDescriptor

KINDS = ("general", "alternating", "alternating_det1")


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _alt_entry(ring: RingDescriptor, rng: random.Random):
    # symbolic runs use integer alternating matrices
    if ring.kind is Kind.POLY:
        return rng.randint(-9, 9)
    return ring.random_raw(rng)


def unimodular(n: int, seed, steps: int | None = None) -> Matrix:
    """Product of random elementary integer row operations (det = 1)."""
    rng = _rng(seed)
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    if n < 2:
        return Matrix(ZZ, rows)
    for _ in range(steps if steps is not None else 3 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-2, -1, 1, 2))
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    return Matrix(ZZ, rows)


def random_matrix(ring: RingDescriptor, n: int, seed, kind: str = "general") -> Matrix:
    rng = _rng(seed)
    if kind == "general":
        return Matrix._build(ring, [[ring.random_raw(rng) for _ in range(n)] for _ in range(n)])
    if kind == "alternating":
        rows = [[ring.zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = _alt_entry(ring, rng)
                rows[i][j] = v
                rows[j][i] = -v
        return Matrix._build(ring, rows)
    if kind == "alternating_det1":
        if n % 2:
            raise OddSize(f"no determinant-1 alternating matrix of odd size {n}")
        S = unimodular(n, rng)
        return (S @ hyperbolic(n // 2) @ S.T).over(ring)
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
