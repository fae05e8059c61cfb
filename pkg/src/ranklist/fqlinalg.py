"""Dense linear algebra over a prime field F_p.

Matrices are tuples of row tuples. Subspaces of F_p^n are stored by their
RREF basis, which makes equality of Subspace values mean equality of spaces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from ranklist.errors import AmbientMismatch, BadParameters


@dataclass(frozen=True)
class FqMatrix:
    p: int
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], p: int, ncols: int | None = None) -> FqMatrix:
        rows = tuple(tuple(int(x) % p for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise BadParameters("ncols required for a matrix with no rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise BadParameters("ragged matrix rows")
        return cls(p, rows, ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, p: int) -> FqMatrix:
        return cls(p, tuple((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int, p: int) -> FqMatrix:
        return cls(p, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def transpose(self) -> FqMatrix:
        return FqMatrix(self.p, tuple(zip(*self.rows)) if self.rows else (), self.nrows)

    def __matmul__(self, other: FqMatrix) -> FqMatrix:
        if self.ncols != other.nrows or self.p != other.p:
            raise BadParameters("incompatible matrix product")
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        p = self.p
        rows = tuple(tuple(sum(a * b for a, b in zip(r, c)) % p for c in cols) for r in self.rows)
        return FqMatrix(p, rows, other.ncols)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(r, v)) % self.p for r in self.rows)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _rref_rows(rows: Sequence[Sequence[int]], ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    """RREF of the given rows; returns (all rows, pivot columns)."""
    a = [[x % p for x in r] for r in rows]
    pivots = []
    lead = 0
    for col in range(ncols):
        piv = next((i for i in range(lead, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[lead], a[piv] = a[piv], a[lead]
        inv = pow(a[lead][col], p - 2, p)
        if inv != 1:
            a[lead] = [x * inv % p for x in a[lead]]
        row = a[lead]
        for i in range(len(a)):
            c = a[i][col]
            if i != lead and c:
                a[i] = [(x - c * y) % p for x, y in zip(a[i], row)]
        pivots.append(col)
        lead += 1
        if lead == len(a):
            break
    return a, pivots


def rref(M: FqMatrix) -> FqMatrix:
    rows, _ = _rref_rows(M.rows, M.ncols, M.p)
    return FqMatrix(M.p, tuple(tuple(r) for r in rows), M.ncols)


def rank(M: FqMatrix) -> int:
    if M.p == 2:
        return rank_gf2_ints([sum(b << j for j, b in enumerate(r)) for r in M.rows])
    return len(_rref_rows(M.rows, M.ncols, M.p)[1])


def rank_gf2_ints(vectors: Sequence[int]) -> int:
    """Rank over F_2 of vectors given as bit-packed integers."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                break
    return len(basis)


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_p^n held as its RREF basis (no zero rows)."""

    p: int
    n: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, vectors: Sequence[Sequence[int]], n: int, p: int) -> Subspace:
        rows, pivots = _rref_rows(vectors, n, p)
        return cls(p, n, tuple(tuple(r) for r in rows[: len(pivots)]))

    @classmethod
    def zero(cls, n: int, p: int) -> Subspace:
        return cls(p, n, ())

    @classmethod
    def full(cls, n: int, p: int) -> Subspace:
        return cls(p, n, FqMatrix.identity(n, p).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> FqMatrix:
        return FqMatrix(self.p, self.basis, self.n)

    def __contains__(self, v: Sequence[int]) -> bool:
        return Subspace.span(self.basis + (tuple(v),), self.n, self.p).dim == self.dim

    def vectors(self) -> Iterator[tuple[int, ...]]:
        p, n = self.p, self.n
        for lam in itertools.product(range(p), repeat=self.dim):
            yield tuple(sum(c * b[j] for c, b in zip(lam, self.basis)) % p for j in range(n))


def row_space(M: FqMatrix) -> Subspace:
    return Subspace.span(M.rows, M.ncols, M.p)


def kernel_basis(M: FqMatrix) -> Subspace:
    """Right kernel {v : M v = 0} as a subspace of F_p^cols."""
    p, n = M.p, M.ncols
    rows, pivots = _rref_rows(M.rows, n, p)
    pivot_set = set(pivots)
    vecs = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [0] * n
        v[free] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-rows[i][free]) % p
        vecs.append(v)
    return Subspace.span(vecs, n, p)


def intersection_dim(U: Subspace, V: Subspace) -> int:
    if U.n != V.n or U.p != V.p:
        raise AmbientMismatch(f"ambient F_{U.p}^{U.n} vs F_{V.p}^{V.n}")
    stacked = Subspace.span(U.basis + V.basis, U.n, U.p)
    return U.dim + V.dim - stacked.dim


def enumerate_subspaces(n: int, s: int, q: int) -> Iterator[Subspace]:
    """Every s-dimensional subspace of F_q^n exactly once.

    Order: pivot-column patterns lexicographically, then the free RREF
    entries (row-major) lexicographically.
    """
    if not 0 <= s <= n:
        raise BadParameters(f"need 0 <= s <= n, got s={s}, n={n}")
    for pivots in itertools.combinations(range(n), s):
        pset = set(pivots)
        slots = [(i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pset]
        for vals in itertools.product(range(q), repeat=len(slots)):
            rows = [[0] * n for _ in range(s)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, c), x in zip(slots, vals):
                rows[i][c] = x
            yield Subspace(q, n, tuple(tuple(r) for r in rows))
