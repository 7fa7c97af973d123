"""Exact scalars (Q and GF(p)) and Gaussian elimination.

Rationals are ``fractions.Fraction``; elements of GF(p) are plain ``int``
residues in ``[0, p)``.  Nothing here ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import ArgumentError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class ScalarDomain:
    """Either the rationals (``p == 0``) or the prime field GF(p)."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not is_prime(self.p):
            raise ArgumentError(f"GF({self.p}) is not a prime field")

    @classmethod
    def rationals(cls) -> ScalarDomain:
        return cls(0)

    @classmethod
    def prime_field(cls, p: int) -> ScalarDomain:
        if p == 0:
            raise ArgumentError("a prime field needs p >= 2")
        return cls(p)

    @classmethod
    def of_characteristic(cls, char: int) -> ScalarDomain:
        """Q for characteristic 0, GF(char) otherwise."""
        return cls(char)

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    def characteristic(self) -> int:
        return self.p

    def __str__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    # element arithmetic -------------------------------------------------

    def element(self, x) -> Fraction | int:
        if self.p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            num = x.numerator % self.p
            den = x.denominator % self.p
            if den == 0:
                raise ArgumentError(f"{x} has no image in GF({self.p})")
            return num * pow(den, -1, self.p) % self.p
        return int(x) % self.p

    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.p == 0 else pow(a, -1, self.p)

    def is_valid(self, a) -> bool:
        if self.p == 0:
            return isinstance(a, Fraction)
        return isinstance(a, int) and 0 <= a < self.p


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix over a :class:`ScalarDomain`, stored row-major."""

    domain: ScalarDomain
    rows: int
    cols: int
    entries: tuple = field(repr=False)

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ArgumentError("entry count does not match the shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], domain: ScalarDomain,
                  cols: int | None = None) -> ExactMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ArgumentError("ragged rows")
        entries = tuple(domain.element(x) for r in rows for x in r)
        return cls(domain, len(rows), cols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], domain: ScalarDomain,
                     rows: int) -> ExactMatrix:
        columns = [list(c) for c in columns]
        if any(len(c) != rows for c in columns):
            raise ArgumentError("ragged columns")
        data = [[columns[j][i] for j in range(len(columns))] for i in range(rows)]
        return cls.from_rows(data, domain, cols=len(columns))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list[list]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix.from_columns(self.to_rows(), self.domain, self.cols)

    def with_column_scaled(self, j: int, factor) -> ExactMatrix:
        d = self.domain
        factor = d.element(factor)
        data = self.to_rows()
        for r in data:
            r[j] = d.mul(r[j], factor)
        return ExactMatrix.from_rows(data, d, cols=self.cols)

    def as_int_rows(self) -> list[list[int]]:
        """Entries as integers; rationals must be integral."""
        out = []
        for r in self.to_rows():
            row = []
            for x in r:
                if isinstance(x, Fraction):
                    if x.denominator != 1:
                        raise ArgumentError("matrix is not integral")
                    x = x.numerator
                row.append(int(x))
            out.append(row)
        return out

    def __str__(self):
        return "\n".join(" ".join(f"{str(x):>3}" for x in self.row(i))
                         for i in range(self.rows))


class Echelon:
    """Incrementally built reduced row-echelon basis of a subspace.

    Pivots are chosen as the first nonzero coordinate, so the basis only
    depends on the order vectors were inserted.  Over Q the rows are kept as
    primitive integer vectors (fraction-free elimination); over GF(p) they are
    monic residue vectors.
    """

    __slots__ = ("domain", "length", "basis")

    def __init__(self, domain: ScalarDomain, length: int):
        self.domain = domain
        self.length = length
        self.basis: dict[int, list] = {}

    def copy(self) -> Echelon:
        e = Echelon(self.domain, self.length)
        e.basis = dict(self.basis)
        return e

    @property
    def rank(self) -> int:
        return len(self.basis)

    @staticmethod
    def _integral(vec: Sequence) -> list[int]:
        if all(type(x) is int for x in vec):
            return list(vec)
        den = 1
        for x in vec:
            if isinstance(x, Fraction) and x.denominator != 1:
                den = den * x.denominator // gcd(den, x.denominator)
        return [int(x * den) for x in vec]

    def reduce(self, vec: Sequence) -> list:
        """Residue of ``vec`` modulo the basis (a scalar multiple over Q)."""
        p = self.domain.p
        if p:
            v = [x % p for x in vec]
            for piv, b in self.basis.items():
                c = v[piv]
                if c:
                    v = [(x - c * y) % p for x, y in zip(v, b)]
            return v
        v = self._integral(vec)
        for piv, b in self.basis.items():
            c = v[piv]
            if c:
                a = b[piv]
                v = [a * x - c * y for x, y in zip(v, b)]
                g = 0
                for x in v:
                    if x:
                        g = gcd(g, x)
                if g > 1:
                    v = [x // g for x in v]
        return v

    def contains(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))

    def insert(self, vec: Sequence) -> bool:
        """Add ``vec``; return False (and change nothing) if it is dependent."""
        v = self.reduce(vec)
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return False
        p = self.domain.p
        if p:
            inv = pow(v[piv], -1, p)
            v = [x * inv % p for x in v]
        elif v[piv] < 0:
            v = [-x for x in v]
        # keep the basis fully reduced
        for k, b in list(self.basis.items()):
            c = b[piv]
            if not c:
                continue
            if p:
                self.basis[k] = [(x - c * y) % p for x, y in zip(b, v)]
            else:
                a = v[piv]
                nb = [a * x - c * y for x, y in zip(b, v)]
                g = 0
                for x in nb:
                    if x:
                        g = gcd(g, x)
                if nb[k] < 0:
                    g = -g
                self.basis[k] = [x // g for x in nb]
        self.basis[piv] = v
        return True


def _check_columns(m: ExactMatrix, columns: Iterable[int] | None) -> list[int]:
    if columns is None:
        return list(range(m.cols))
    cols = list(columns)
    for j in cols:
        if not 0 <= j < m.cols:
            raise ArgumentError(f"column index {j} out of range 0..{m.cols - 1}")
    return cols


def rank(m: ExactMatrix, columns: Iterable[int] | None = None) -> int:
    """Rank of the submatrix on ``columns`` (0-based; all columns if None)."""
    cols = _check_columns(m, columns)
    ech = Echelon(m.domain, m.rows)
    for j in cols:
        ech.insert(m.column(j))
        if ech.rank == m.rows:
            break
    return ech.rank


def rref(m: ExactMatrix) -> tuple[list[list], list[int]]:
    """Reduced row-echelon form and its pivot columns."""
    d = m.domain
    a = m.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        pr = next((i for i in range(r, m.rows) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = d.inv(a[r][c])
        a[r] = [d.mul(x, inv) for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [d.sub(x, d.mul(f, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def kernel_basis(m: ExactMatrix) -> list[list]:
    """Basis of the right null space ``{x : m x = 0}``."""
    d = m.domain
    a, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [d.zero()] * m.cols
        v[f] = d.one()
        for i, pc in enumerate(pivots):
            v[pc] = d.neg(a[i][f])
        basis.append(v)
    return basis


def row_space_basis(m: ExactMatrix) -> list[list]:
    """Nonzero rows of the RREF: a basis of the row space."""
    a, pivots = rref(m)
    return a[:len(pivots)]


def sparse_rank(columns: list[dict[int, int]], p: int) -> int:
    """Exact rank of a sparse integer matrix over Q (p=0) or GF(p).

    Column reduction keyed on the largest row index, as in the standard
    persistence algorithm; over Q the updates are fraction-free.
    """
    owner: dict[int, dict[int, int]] = {}
    for col in columns:
        col = {r: v % p for r, v in col.items() if v % p} if p else dict(col)
        while col:
            low = max(col)
            other = owner.get(low)
            if other is None:
                owner[low] = col
                break
            a, b = other[low], col[low]
            if p:
                f = b * pow(a, -1, p) % p
                for r, v in other.items():
                    x = (col.get(r, 0) - f * v) % p
                    if x:
                        col[r] = x
                    else:
                        col.pop(r, None)
            else:
                merged = {r: a * col.get(r, 0) for r in col}
                for r, v in other.items():
                    merged[r] = merged.get(r, 0) - b * v
                col = {r: v for r, v in merged.items() if v}
                g = 0
                for v in col.values():
                    g = gcd(g, v)
                if g > 1:
                    col = {r: v // g for r, v in col.items()}
    return len(owner)
