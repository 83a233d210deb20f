"""Dense square matrices over the rings in :mod:`adjfactor.ring`.

Entries are kept as canonical raw values (row-major, 0-based internally);
everything on the public surface that names a row or column is 1-based.
Determinants and minors are computed by cofactor expansion with memoization
over column subsets, which needs no division and so is valid over any
commutative ring, zerodivisors included.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotAlternating, NotInvertible, RingMismatch
from .poly import Polynomial
from .ring import QQ, ZZ, Kind, PolyRing, RingDescriptor, RingElement

__all__ = [
    "Matrix",
    "MinorSymbol",
    "generic_matrix",
    "identity",
    "zero_matrix",
    "hyperbolic",
    "alternating_basis",
    "det",
    "adjoint",
    "minor",
    "comp_minor",
    "is_alternating",
    "matrix_inverse",
    "matmul",
    "matadd",
    "scalar_mul",
    "transpose",
    "solve",
    "normalize_indices",
]


def _popcount(x: int) -> int:
    return bin(x).count("1")


class Matrix:
    """Immutable n x n matrix with entries in ``ring``."""

    __slots__ = ("ring", "rows", "_minors", "_hash")

    def __init__(self, ring: RingDescriptor, rows: Iterable[Iterable]):
        norm = ring.normalize
        grid = tuple(
            tuple(norm(ring.parse(v) if isinstance(v, str) else _raw(v, ring)) for v in row)
            for row in rows
        )
        n = len(grid)
        if n < 1 or any(len(r) != n for r in grid):
            raise ValueError("matrix must be square and non-empty")
        self.ring = ring
        self.rows = grid
        self._minors = None
        self._hash = None

    @classmethod
    def _wrap(cls, ring: RingDescriptor, rows: tuple) -> "Matrix":
        m = cls.__new__(cls)
        m.ring = ring
        m.rows = rows
        m._minors = None
        m._hash = None
        return m

    @classmethod
    def _build(cls, ring: RingDescriptor, rows) -> "Matrix":
        norm = ring.normalize
        return cls._wrap(ring, tuple(tuple(norm(v) for v in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> RingElement:
        self._check_index(i)
        self._check_index(j)
        return RingElement(self.ring, self.rows[i - 1][j - 1])

    def _check_index(self, i: int):
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} outside 1..{self.n}")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.rows))
        return self._hash

    def __repr__(self):
        return f"Matrix({self.ring}, {self.to_strings()!r})"

    def __str__(self):
        cells = self.to_strings()
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells)

    def to_strings(self) -> list[list[str]]:
        fmt = self.ring.format
        return [[fmt(v) for v in row] for row in self.rows]

    # -- arithmetic -------------------------------------------------------

    def _same(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected a Matrix, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch(f"matrices over {self.ring} and {other.ring}")
        if other.n != self.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        return Matrix._build(
            self.ring, ([a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows))
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        return Matrix._build(
            self.ring, ([a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows))
        )

    def __neg__(self) -> "Matrix":
        return Matrix._build(self.ring, ([-a for a in r] for r in self.rows))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        cols = list(zip(*other.rows))
        zero = self.ring.zero
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix._build(self.ring, out)

    def scale(self, c) -> "Matrix":
        c = _raw(c, self.ring)
        return Matrix._build(self.ring, ([c * a for a in r] for r in self.rows))

    def transpose(self) -> "Matrix":
        return Matrix._wrap(self.ring, tuple(zip(*self.rows)))

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def trace(self) -> RingElement:
        acc = self.ring.zero
        for i, r in enumerate(self.rows):
            acc = acc + r[i]
        return RingElement(self.ring, self.ring.normalize(acc))

    def map(self, fn) -> "Matrix":
        """Apply ``fn`` to every raw entry (result stays in the same ring)."""
        return Matrix._build(self.ring, ([fn(a) for a in r] for r in self.rows))

    def over(self, ring: RingDescriptor) -> "Matrix":
        """Image of an integer matrix in ``ring`` (Z maps into every ring)."""
        if ring == self.ring:
            return self
        if self.ring != ZZ:
            raise RingMismatch(f"no canonical map from {self.ring} to {ring}")
        return Matrix._build(ring, self.rows)

    # -- determinants and minors ------------------------------------------

    def det(self) -> RingElement:
        return RingElement(self.ring, _det_raw(self.ring, self.rows))

    def minor_table(self) -> dict:
        """All minors, keyed by (row bitmask, col bitmask) over 0-based
        indices; memoized on the matrix."""
        if self._minors is None:
            self._minors = _all_minors(self.ring, self.rows)
        return self._minors

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> RingElement:
        return minor(self, MinorSymbol(tuple(rows), tuple(cols)))

    def comp_minor(self, rows: Sequence[int], cols: Sequence[int]) -> RingElement:
        return comp_minor(self, MinorSymbol(tuple(rows), tuple(cols), complementary=True))

    def signed_comp_minor_raw(self, rows: Sequence[int], cols: Sequence[int]):
        """Raw value of [rows ^| cols] under the alternating extension
        (0 on repeated indices); indices 1-based."""
        sign, r, c = MinorSymbol(tuple(rows), tuple(cols), True).normalize()
        if not sign:
            return self.ring.zero
        full = (1 << self.n) - 1
        v = self.minor_table()[(full ^ _mask(r, self.n), full ^ _mask(c, self.n))]
        return v if sign > 0 else self.ring.normalize(-v)

    def adjoint(self) -> "Matrix":
        n = self.n
        ring = self.ring
        if n == 1:
            return Matrix._wrap(ring, ((ring.one,),))
        table = self.minor_table()
        full = (1 << n) - 1
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                # delete row j, column i
                v = table[(full ^ (1 << j), full ^ (1 << i))]
                row.append(v if (i + j) % 2 == 0 else -v)
            out.append(row)
        return Matrix._build(ring, out)

    def is_alternating(self) -> bool:
        norm = self.ring.normalize
        rows = self.rows
        n = self.n
        for i in range(n):
            if rows[i][i]:
                return False
            for j in range(n):
                if rows[j][i] != norm(-rows[i][j]):
                    return False
        return True

    def inverse(self) -> "Matrix":
        d = self.det()
        if not d.is_unit():
            raise NotInvertible(f"determinant {d} is not a unit of {self.ring}")
        return self.adjoint().scale(d.inverse())


def _raw(v, ring: RingDescriptor):
    if isinstance(v, RingElement):
        if v.ring != ring:
            raise RingMismatch(f"element of {v.ring} in a matrix over {ring}")
        return v.value
    return v


def _mask(indices: Iterable[int], n: int) -> int:
    m = 0
    for i in indices:
        if not 1 <= i <= n:
            raise IndexError(f"index {i} outside 1..{n}")
        m |= 1 << (i - 1)
    return m


def _det_raw(ring: RingDescriptor, rows: tuple):
    n = len(rows)
    norm = ring.normalize
    # layer[mask]: minor on rows 0..t-1 and the columns in mask, |mask| = t
    layer = {0: ring.one}
    for t in range(n):
        row = rows[t]
        nxt: dict = {}
        for mask, val in layer.items():
            if not val:
                continue
            for c in range(n):
                bit = 1 << c
                a = row[c]
                if mask & bit or not a:
                    continue
                term = a * val
                if _popcount(mask >> (c + 1)) & 1:
                    term = -term
                key = mask | bit
                nxt[key] = nxt[key] + term if key in nxt else term
        layer = {m: norm(v) for m, v in nxt.items()}
    return layer.get((1 << n) - 1, ring.zero)


def _all_minors(ring: RingDescriptor, rows: tuple) -> dict:
    n = len(rows)
    norm = ring.normalize
    zero = ring.zero
    table = {(0, 0): ring.one}
    by_size = {0: [0]}
    for t in range(1, n + 1):
        by_size[t] = [m for m in range(1 << n) if _popcount(m) == t]
    for t in range(1, n + 1):
        for rmask in by_size[t]:
            last = rmask.bit_length() - 1
            rest = rmask ^ (1 << last)
            row = rows[last]
            for cmask in by_size[t]:
                acc = zero
                pos = 0
                for c in range(n):
                    bit = 1 << c
                    if not cmask & bit:
                        continue
                    a = row[c]
                    if a:
                        sub = table[(rest, cmask ^ bit)]
                        if sub:
                            term = a * sub
                            acc = acc + term if (t - 1 + pos) % 2 == 0 else acc - term
                    pos += 1
                table[(rmask, cmask)] = norm(acc)
    return table


@dataclass(frozen=True)
class MinorSymbol:
    """[rows | cols], or the complementary [rows ^| cols] when
    ``complementary`` is set, extended alternately to any index lists."""

    rows: tuple
    cols: tuple
    complementary: bool = False

    def __post_init__(self):
        if len(self.rows) != len(self.cols):
            raise ValueError(f"row and column lists differ in length: {self.rows} | {self.cols}")

    def normalize(self) -> tuple[int, tuple, tuple]:
        """(sign, sorted rows, sorted cols); sign is 0 on any repetition."""
        sr, r = normalize_indices(self.rows)
        sc, c = normalize_indices(self.cols)
        return sr * sc, r, c


def normalize_indices(seq: Sequence[int]) -> tuple[int, tuple]:
    """Sign of the permutation sorting ``seq`` (0 if an index repeats)
    together with the sorted tuple."""
    s = tuple(sorted(seq))
    if len(set(s)) != len(s):
        return 0, s
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return (-1 if inv % 2 else 1), s


def minor(U: Matrix, sym: MinorSymbol) -> RingElement:
    if sym.complementary:
        raise ValueError("use comp_minor for complementary symbols")
    n = U.n
    if len(sym.rows) > n:
        raise IndexError(f"{len(sym.rows)} indices in a {n}x{n} matrix")
    rmask, cmask = _mask(sym.rows, n), _mask(sym.cols, n)
    sign, _, _ = sym.normalize()
    if not sign:
        return RingElement(U.ring, U.ring.zero)
    v = U.minor_table()[(rmask, cmask)]
    return RingElement(U.ring, v if sign > 0 else U.ring.normalize(-v))


def comp_minor(U: Matrix, sym: MinorSymbol) -> RingElement:
    if not sym.complementary:
        raise ValueError("use minor for ordinary symbols")
    n = U.n
    _mask(sym.rows, n)
    _mask(sym.cols, n)
    return RingElement(U.ring, U.signed_comp_minor_raw(sym.rows, sym.cols))


def generic_matrix(n: int) -> Matrix:
    """The n x n matrix (x_ij) over Poly(n)."""
    if n < 1:
        raise ValueError(f"size must be >= 1, got {n}")
    ring = PolyRing(n)
    return Matrix._wrap(
        ring, tuple(tuple(Polynomial.var(n, i, j) for j in range(1, n + 1)) for i in range(1, n + 1))
    )


def identity(ring: RingDescriptor, n: int) -> Matrix:
    one, zero = ring.one, ring.zero
    return Matrix._wrap(ring, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))


def zero_matrix(ring: RingDescriptor, n: int) -> Matrix:
    zero = ring.zero
    return Matrix._wrap(ring, tuple(tuple(zero for _ in range(n)) for _ in range(n)))


def hyperbolic(m: int, ring: RingDescriptor = ZZ) -> Matrix:
    """[[0, I_m], [-I_m, 0]], alternating with determinant 1."""
    if m < 1:
        raise ValueError(f"block size must be >= 1, got {m}")
    n = 2 * m
    rows = [[0] * n for _ in range(n)]
    for i in range(m):
        rows[i][m + i] = 1
        rows[m + i][i] = -1
    return Matrix._build(ring, rows)


def alternating_basis(ring: RingDescriptor, n: int) -> list[Matrix]:
    """E_kl - E_lk for k < l, in lexicographic order of (k, l)."""
    basis = []
    for k in range(n):
        for l in range(k + 1, n):
            rows = [[0] * n for _ in range(n)]
            rows[k][l] = 1
            rows[l][k] = -1
            basis.append(Matrix._build(ring, rows))
    return basis


def solve(U: Matrix, M: Matrix) -> Matrix:
    """The unique W over Q with U W = M, by Gauss-Jordan elimination.
    Only for matrices over Z or Q."""
    if U.ring.kind not in (Kind.INTEGER, Kind.RATIONAL) or M.ring.kind not in (Kind.INTEGER, Kind.RATIONAL):
        raise RingMismatch("solve works over Z or Q only")
    n = U.n
    if M.n != n:
        raise ValueError(f"size mismatch: {n} vs {M.n}")
    aug = [[Fraction(v) for v in U.rows[i]] + [Fraction(v) for v in M.rows[i]] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise NotInvertible("singular system")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return Matrix._build(QQ, [row[n:] for row in aug])


def det(U: Matrix) -> RingElement:
    return U.det()


def adjoint(U: Matrix) -> Matrix:
    return U.adjoint()


def is_alternating(A: Matrix) -> bool:
    return A.is_alternating()


def require_alternating(A: Matrix, name: str = "A"):
    if not A.is_alternating():
        raise NotAlternating(f"{name} is not alternating")


def matrix_inverse(A: Matrix) -> Matrix:
    return A.inverse()


def matmul(A: Matrix, B: Matrix) -> Matrix:
    return A @ B


def matadd(A: Matrix, B: Matrix) -> Matrix:
    return A + B


def scalar_mul(c, A: Matrix) -> Matrix:
    return A.scale(c)


def transpose(A: Matrix) -> Matrix:
    return A.transpose()
