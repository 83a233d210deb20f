import json
import random

import pytest

from adjfactor.matrix import Matrix, generic_matrix
from adjfactor.ring import QQ, PolyRing, Zmod
from adjfactor.sampling import random_matrix
from adjfactor.serialize import dumps, loads, matrix_from_dict, matrix_to_dict

from conftest import NUMERIC_RINGS


def test_format_example():
    M = Matrix(Zmod(6), [[1, 0], [5, 3]])
    assert matrix_to_dict(M) == {"ring": {"kind": "mod", "modulus": 6}, "n": 2, "entries": [["1", "0"], ["5", "3"]]}
    X = generic_matrix(2)
    assert matrix_to_dict(X)["ring"] == {"kind": "poly", "n_vars": 2}
    assert matrix_to_dict(Matrix(QQ, [["1/2"]]))["entries"] == [["1/2"]]


@pytest.mark.parametrize("ring", NUMERIC_RINGS + [PolyRing(2), PolyRing(3)], ids=str)
def test_round_trip(ring):
    rng = random.Random(str(ring))
    for _ in range(20):
        M = random_matrix(ring, rng.randint(1, 4), rng)
        text = dumps(M)
        assert loads(text) == M
        assert dumps(loads(text)) == text


@pytest.mark.parametrize(
    "doc",
    [
        {"ring": {"kind": "int"}, "n": 2, "entries": [["1"]]},
        {"ring": {"kind": "int"}, "n": 1, "entries": [[1]]},
        {"ring": {"kind": "mod", "modulus": 5}, "n": 1, "entries": [["7"]]},
        {"ring": {"kind": "poly", "n_vars": 1}, "n": 1, "entries": [["x2_1"]]},
        {"ring": {"kind": "ring"}, "n": 1, "entries": [["1"]]},
    ],
)
def test_rejects_malformed(doc):
    with pytest.raises(ValueError):
        matrix_from_dict(json.loads(json.dumps(doc)))
