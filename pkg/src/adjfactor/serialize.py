"""JSON forms for matrices and certificates.

A matrix is stored as::

    {"ring": {"kind": "mod", "modulus": 6}, "n": 2, "entries": [["1", "0"], ["5", "3"]]}

with every entry written in its ring's text grammar. ``dumps`` output
round-trips bit-exactly through ``loads``.
"""

from __future__ import annotations

import json

from .matrix import Matrix
from .ring import RingDescriptor

SCHEMA_VERSION = 1
PRNG_NAME = "MT19937 (Python random.Random)"


def matrix_to_dict(M: Matrix) -> dict:
    return {"ring": M.ring.to_dict(), "n": M.n, "entries": M.to_strings()}


def matrix_from_dict(d: dict) -> Matrix:
    ring = RingDescriptor.from_dict(d["ring"])
    entries = d["entries"]
    n = d.get("n", len(entries))
    if len(entries) != n or any(len(row) != n for row in entries):
        raise ValueError(f"entries do not form a {n}x{n} grid")
    if not all(isinstance(v, str) for row in entries for v in row):
        raise ValueError("matrix entries must be strings")
    return Matrix(ring, entries)


def dumps(M: Matrix) -> str:
    return json.dumps(matrix_to_dict(M))


def loads(text: str) -> Matrix:
    return matrix_from_dict(json.loads(text))
