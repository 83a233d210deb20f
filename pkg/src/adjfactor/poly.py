"""Sparse multivariate polynomials over the integers in the variables x_ij.

A polynomial of size ``n`` lives in Z[x_11, ..., x_nn]. Terms are stored as a
map from exponent vectors (length n*n, row-major variable order) to nonzero
integer coefficients, so two polynomials are equal exactly when their term
maps agree.
"""

from __future__ import annotations

import re
from typing import Callable, Iterable, Mapping

__all__ = ["Polynomial", "PolynomialSyntaxError"]


class PolynomialSyntaxError(ValueError):
    pass


def _add_exps(a: tuple, b: tuple) -> tuple:
    return tuple([x + y for x, y in zip(a, b)])


class Polynomial:
    """Immutable element of Z[x_ij], 1 <= i, j <= n."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[tuple, int] | None = None):
        if n < 1:
            raise ValueError(f"polynomial grid size must be >= 1, got {n}")
        self.n = n
        clean = {}
        if terms:
            width = n * n
            for exps, c in terms.items():
                if len(exps) != width:
                    raise ValueError(
                        f"exponent vector of length {len(exps)} in a ring with {width} variables"
                    )
                if c:
                    clean[tuple(exps)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, n: int, terms: dict) -> "Polynomial":
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.n = n
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._wrap(n, {})

    @classmethod
    def constant(cls, n: int, c: int) -> "Polynomial":
        if not c:
            return cls._wrap(n, {})
        return cls._wrap(n, {(0,) * (n * n): int(c)})

    @classmethod
    def var(cls, n: int, i: int, j: int) -> "Polynomial":
        """The indeterminate x_ij (1-based indices)."""
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"variable x{i}_{j} outside the {n}x{n} grid")
        exps = [0] * (n * n)
        exps[(i - 1) * n + (j - 1)] = 1
        return cls._wrap(n, {tuple(exps): 1})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_term(self) -> int:
        return self._terms.get((0,) * (self.n * self.n), 0)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        """Terms in descending graded-lex order (x_11 > x_12 > ... > x_nn)."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise ValueError(f"cannot combine polynomials over grids {self.n} and {other.n}")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.n, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for e, c in small.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._wrap(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._wrap(self.n, {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Polynomial._wrap(self.n, {})
            return Polynomial._wrap(self.n, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        get = out.get
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _add_exps(e1, e2)
                out[e] = get(e, 0) + c1 * c2
        return Polynomial._wrap(self.n, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Polynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, int):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # -- calculus and substitution ----------------------------------------

    def partial(self, i: int, j: int) -> "Polynomial":
        """Formal derivative with respect to x_ij (1-based)."""
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"partial d/dx{i}_{j} outside the {n}x{n} grid")
        k = (i - 1) * n + (j - 1)
        out = {}
        for e, c in self._terms.items():
            p = e[k]
            if p:
                d = list(e)
                d[k] = p - 1
                out[tuple(d)] = c * p
        return Polynomial._wrap(n, out)

    def permute_variables(self, perm: Iterable[int]) -> "Polynomial":
        """Rename variable slot ``k`` to slot ``perm[k]``."""
        perm = list(perm)
        out = {}
        for e, c in self._terms.items():
            d = [0] * len(e)
            for k, p in enumerate(e):
                d[perm[k]] = p
            out[tuple(d)] = c
        return Polynomial._wrap(self.n, out)

    def evaluate(self, value: Callable[[int, int], object], one=1):
        """Substitute ``value(i, j)`` for x_ij; arithmetic is done in the
        value's own type, starting from ``one`` for the empty product."""
        n = self.n
        powers: dict = {}
        total = None
        for e, c in self._terms.items():
            term = one
            for k, p in enumerate(e):
                if p:
                    key = (k, p)
                    if key not in powers:
                        base = value(k // n + 1, k % n + 1)
                        acc = base
                        for _ in range(p - 1):
                            acc = acc * base
                        powers[key] = acc
                    term = term * powers[key]
            term = term * c if c != 1 else term
            total = term if total is None else total + term
        return total if total is not None else one * 0

    # -- text form --------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        n = self.n
        out = []
        for idx, (e, c) in enumerate(self.sorted_terms()):
            factors = []
            for k, p in enumerate(e):
                if p:
                    name = f"x{k // n + 1}_{k % n + 1}"
                    factors.append(name if p == 1 else f"{name}^{p}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if idx == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({self.n}, {str(self)!r})"

    _TOKEN = re.compile(r"\s*(?:(\d+)|x(\d+)_(\d+)|([-+*^]))")

    @classmethod
    def parse(cls, text: str, n: int) -> "Polynomial":
        """Parse e.g. ``3*x1_2*x2_1 - x1_1^2``. Whitespace is ignored."""
        tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = cls._TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise PolynomialSyntaxError(f"unexpected input at {pos}: {text[pos:]!r}")
            pos = m.end()
            if m.group(1) is not None:
                tokens.append(("int", int(m.group(1))))
            elif m.group(2) is not None:
                tokens.append(("var", (int(m.group(2)), int(m.group(3)))))
            else:
                tokens.append(("op", m.group(4)))
        if not tokens:
            raise PolynomialSyntaxError("empty polynomial")

        width = n * n
        terms: dict = {}
        i = 0

        def expect_factor():
            nonlocal i
            if i >= len(tokens) or tokens[i][0] == "op":
                raise PolynomialSyntaxError(f"expected a number or variable in {text!r}")
            tok = tokens[i]
            i += 1
            power = 1
            if i < len(tokens) and tokens[i] == ("op", "^"):
                if i + 1 >= len(tokens) or tokens[i + 1][0] != "int":
                    raise PolynomialSyntaxError(f"bad exponent in {text!r}")
                power = tokens[i + 1][1]
                i += 2
            return tok, power

        first = True
        while i < len(tokens):
            sign = 1
            if tokens[i][0] == "op" and tokens[i][1] in "+-":
                sign = -1 if tokens[i][1] == "-" else 1
                i += 1
            elif not first:
                raise PolynomialSyntaxError(f"expected '+' or '-' in {text!r}")
            first = False
            coeff = sign
            exps = [0] * width
            while True:
                (kind, val), power = expect_factor()
                if kind == "int":
                    coeff *= val ** power
                else:
                    r, s = val
                    if not (1 <= r <= n and 1 <= s <= n):
                        raise PolynomialSyntaxError(f"variable x{r}_{s} outside the {n}x{n} grid")
                    exps[(r - 1) * n + (s - 1)] += power
                if i < len(tokens) and tokens[i] == ("op", "*"):
                    i += 1
                    continue
                break
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + coeff
        return cls(n, terms)
