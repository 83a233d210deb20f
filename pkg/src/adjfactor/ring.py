"""Concrete commutative rings with exact, decidable equality.

Four rings are supported: the integers, the rationals, integers mod m
(composite m allowed) and Poly(n) = Z[x_ij]. A :class:`RingDescriptor` names
the ring and knows how to bring a raw Python value into canonical form;
:class:`RingElement` pairs a canonical value with its descriptor.

Raw values are plain Python objects (``int``, ``Fraction``, ``Polynomial``)
so matrix code can use native ``+`` and ``*`` and canonicalize once per entry.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import NotAUnit, RingMismatch
from .poly import Polynomial

__all__ = [
    "Kind",
    "RingDescriptor",
    "RingElement",
    "ZZ",
    "QQ",
    "Zmod",
    "PolyRing",
    "ring_add",
    "ring_mul",
    "ring_is_unit",
    "ring_inverse",
    "poly_eval",
    "poly_partial",
]


class Kind(enum.Enum):
    INTEGER = "int"
    RATIONAL = "rational"
    MODM = "mod"
    POLY = "poly"


@dataclass(frozen=True)
class RingDescriptor:
    kind: Kind
    modulus: int | None = None
    n: int | None = None

    def __post_init__(self):
        if self.kind is Kind.MODM:
            if self.modulus is None or self.modulus < 2:
                raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        elif self.modulus is not None:
            raise ValueError(f"{self.kind.value} ring takes no modulus")
        if self.kind is Kind.POLY:
            if self.n is None or self.n < 1:
                raise ValueError(f"polynomial grid size must be >= 1, got {self.n}")
        elif self.n is not None:
            raise ValueError(f"{self.kind.value} ring takes no variable grid")

    def __str__(self) -> str:
        if self.kind is Kind.MODM:
            return f"Z/{self.modulus}"
        if self.kind is Kind.POLY:
            return f"Z[x_ij; n={self.n}]"
        return {"int": "Z", "rational": "Q"}[self.kind.value]

    # -- canonical raw values --------------------------------------------

    @property
    def zero(self):
        return self.normalize(0)

    @property
    def one(self):
        return self.normalize(1)

    def normalize(self, v):
        """Canonical raw value for ``v`` (an int, or a value of this ring's type)."""
        kind = self.kind
        if kind is Kind.INTEGER:
            if type(v) is not int:
                if isinstance(v, Fraction) and v.denominator == 1:
                    return int(v)
                raise RingMismatch(f"{v!r} is not an integer")
            return v
        if kind is Kind.MODM:
            if type(v) is not int:
                raise RingMismatch(f"{v!r} is not a residue")
            return v % self.modulus
        if kind is Kind.RATIONAL:
            if isinstance(v, Fraction):
                return v
            if isinstance(v, int):
                return Fraction(v)
            raise RingMismatch(f"{v!r} is not rational")
        if isinstance(v, Polynomial):
            if v.n != self.n:
                raise RingMismatch(f"polynomial over grid {v.n} in {self}")
            return v
        if isinstance(v, int):
            return Polynomial.constant(self.n, v)
        raise RingMismatch(f"{v!r} is not a polynomial")

    def is_unit_raw(self, v) -> bool:
        kind = self.kind
        if kind is Kind.INTEGER:
            return v in (1, -1)
        if kind is Kind.RATIONAL:
            return v != 0
        if kind is Kind.MODM:
            return _gcd(v, self.modulus) == 1
        return v.is_constant() and v.constant_term() in (1, -1)

    def inverse_raw(self, v):
        if not self.is_unit_raw(v):
            raise NotAUnit(f"{self.format(v)} is not a unit of {self}")
        kind = self.kind
        if kind is Kind.RATIONAL:
            return 1 / v
        if kind is Kind.MODM:
            return pow(v, -1, self.modulus)
        # +-1 are self-inverse in Z and Z[x]
        return v

    # -- text form --------------------------------------------------------

    def format(self, v) -> str:
        return str(v)

    def parse(self, text: str):
        text = text.strip()
        if self.kind is Kind.POLY:
            return Polynomial.parse(text, self.n)
        if self.kind is Kind.RATIONAL:
            return Fraction(text)
        value = int(text)
        if self.kind is Kind.MODM and not (0 <= value < self.modulus):
            raise ValueError(f"residue {value} not in [0, {self.modulus})")
        return value

    def to_dict(self) -> dict:
        d: dict[str, Any] = {"kind": self.kind.value}
        if self.kind is Kind.MODM:
            d["modulus"] = self.modulus
        if self.kind is Kind.POLY:
            d["n_vars"] = self.n
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "RingDescriptor":
        kind = Kind(d["kind"])
        return cls(kind, modulus=d.get("modulus"), n=d.get("n_vars"))

    # -- sampling ---------------------------------------------------------

    def random_raw(self, rng: random.Random, *, bound: int = 9, max_terms: int = 4, max_degree: int = 3):
        """A random element: integers in [-bound, bound], uniform residues,
        fractions p/q with |p| <= bound and 1 <= q <= bound, or sparse
        polynomials of bounded degree."""
        kind = self.kind
        if kind is Kind.INTEGER:
            return rng.randint(-bound, bound)
        if kind is Kind.MODM:
            return rng.randrange(self.modulus)
        if kind is Kind.RATIONAL:
            return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        n = self.n
        terms: dict = {}
        for _ in range(rng.randint(0, max_terms)):
            exps = [0] * (n * n)
            for _ in range(rng.randint(0, max_degree)):
                exps[rng.randrange(n * n)] += 1
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + rng.randint(-bound, bound)
        return Polynomial(n, terms)

    def element(self, v) -> "RingElement":
        if isinstance(v, str):
            v = self.parse(v)
        return RingElement(self, self.normalize(v))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


ZZ = RingDescriptor(Kind.INTEGER)
QQ = RingDescriptor(Kind.RATIONAL)


def Zmod(m: int) -> RingDescriptor:
    return RingDescriptor(Kind.MODM, modulus=m)


def PolyRing(n: int) -> RingDescriptor:
    return RingDescriptor(Kind.POLY, n=n)


@dataclass(frozen=True)
class RingElement:
    """A canonical value tagged with its ring. Supports ``+ - *`` with
    elements of the same ring and with Python ints."""

    ring: RingDescriptor
    value: Any

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatch(f"cannot combine elements of {self.ring} and {other.ring}")
            return other.value
        if isinstance(other, int):
            return self.ring.normalize(other)
        return None

    def __add__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return RingElement(self.ring, self.ring.normalize(self.value + v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return RingElement(self.ring, self.ring.normalize(self.value - v))

    def __rsub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return RingElement(self.ring, self.ring.normalize(v - self.value))

    def __mul__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return RingElement(self.ring, self.ring.normalize(self.value * v))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring.normalize(-self.value))

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ring.normalize(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __bool__(self):
        return bool(self.value)

    def is_unit(self) -> bool:
        return self.ring.is_unit_raw(self.value)

    def inverse(self) -> "RingElement":
        return RingElement(self.ring, self.ring.inverse_raw(self.value))

    def __str__(self):
        return self.ring.format(self.value)

    def __repr__(self):
        return f"RingElement({self.ring}, {self.ring.format(self.value)!r})"


def ring_add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def ring_is_unit(a: RingElement) -> bool:
    return a.is_unit()


def ring_inverse(a: RingElement) -> RingElement:
    return a.inverse()


def poly_eval(p: Polynomial | RingElement, U) -> RingElement:
    """Image of ``p`` under the evaluation map x_ij -> U[i, j]."""
    if isinstance(p, RingElement):
        p = p.value
    if p.n != U.n:
        raise ValueError(f"polynomial over a {p.n}x{p.n} grid evaluated at a {U.n}x{U.n} matrix")
    ring = U.ring
    rows = U.rows
    raw = p.evaluate(lambda i, j: rows[i - 1][j - 1], one=ring.one)
    return RingElement(ring, ring.normalize(raw))


def poly_partial(p: Polynomial | RingElement, i: int, j: int):
    if isinstance(p, RingElement):
        return RingElement(p.ring, p.value.partial(i, j))
    return p.partial(i, j)
