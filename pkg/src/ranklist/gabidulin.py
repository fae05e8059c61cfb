"""Gabidulin codes: evaluation of linearized polynomials of q-degree < k at
n F_q-independent points of F_{q^m}, plus the rank metric on F_{q^m}^n.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

from ranklist.errors import (
    BadParameters,
    ContextMismatch,
    DegreeTooHigh,
    DependentPoints,
    LengthMismatch,
)
from ranklist.ffield import FieldContext, FieldElement
from ranklist.fqlinalg import FqMatrix, rank, rank_gf2_ints, kernel_basis
from ranklist.linpoly import LinearizedPoly


def rank_of_values(ctx: FieldContext, values: Sequence[int]) -> int:
    """F_p-rank of the m x n expansion of a vector given by element values."""
    if ctx.p == 2:
        # element values are already the bit-packed columns
        return rank_gf2_ints(values)
    return rank(expansion_matrix(ctx, values))


def expansion_matrix(ctx: FieldContext, values: Sequence[int]) -> FqMatrix:
    """m x n matrix over F_p whose column j holds the coordinates of entry j."""
    cols = [ctx.to_coeffs(v) for v in values]
    return FqMatrix(ctx.p, tuple(zip(*cols)) if cols else ((),) * ctx.m, len(cols))


class RankVector:
    """A vector in F_{q^m}^n, compared and hashed by its element values."""

    __slots__ = ("ctx", "values")

    def __init__(self, ctx: FieldContext, entries: Sequence):
        self.ctx = ctx
        self.values = tuple(ctx(e).value for e in entries)

    @classmethod
    def _raw(cls, ctx: FieldContext, values) -> RankVector:
        v = cls.__new__(cls)
        v.ctx = ctx
        v.values = tuple(values)
        return v

    @classmethod
    def zero(cls, ctx: FieldContext, n: int) -> RankVector:
        return cls._raw(ctx, (0,) * n)

    def __len__(self):
        return len(self.values)

    @property
    def entries(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.ctx, v) for v in self.values)

    def _check(self, other: RankVector) -> None:
        if self.ctx != other.ctx:
            raise ContextMismatch("vectors over different fields")
        if len(self) != len(other):
            raise LengthMismatch(f"lengths {len(self)} and {len(other)}")

    def __add__(self, other: RankVector) -> RankVector:
        self._check(other)
        F = self.ctx
        return RankVector._raw(F, (F.add(a, b) for a, b in zip(self.values, other.values)))

    def __sub__(self, other: RankVector) -> RankVector:
        self._check(other)
        F = self.ctx
        return RankVector._raw(F, (F.sub(a, b) for a, b in zip(self.values, other.values)))

    def scale(self, lam: FieldElement) -> RankVector:
        F = self.ctx
        lv = F(lam).value
        return RankVector._raw(F, (F.mul(lv, a) for a in self.values))

    def expand(self) -> FqMatrix:
        return expansion_matrix(self.ctx, self.values)

    @property
    def rank_weight(self) -> int:
        return rank_of_values(self.ctx, self.values)

    def __eq__(self, other):
        return isinstance(other, RankVector) and self.ctx == other.ctx and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"RankVector({list(self.values)})"

    def tolist(self) -> list[int]:
        return list(self.values)


def rank_weight(v: RankVector) -> int:
    return v.rank_weight


def rank_distance(u: RankVector, v: RankVector) -> int:
    return (u - v).rank_weight


def kernel_dim(v: RankVector) -> int:
    return kernel_basis(v.expand()).dim


class GabidulinCode:
    def __init__(self, field: FieldContext, n: int, k: int, alphas: Sequence | None = None):
        if not (isinstance(n, int) and isinstance(k, int)):
            raise BadParameters("n and k must be integers")
        if n > field.m:
            raise BadParameters(f"need n <= m, got n={n}, m={field.m}")
        if not 1 <= k <= n:
            raise BadParameters(f"need 1 <= k <= n, got k={k}, n={n}")
        if alphas is None:
            alphas = [b.value for b in field.basis()[:n]]
        alphas = tuple(field(a).value for a in alphas)
        if len(alphas) != n:
            raise BadParameters(f"expected {n} evaluation points, got {len(alphas)}")
        if rank_of_values(field, alphas) != n:
            raise DependentPoints(f"evaluation points {list(alphas)} are F_{field.p}-dependent")
        self.field = field
        self.n = n
        self.k = k
        self.alpha_values = alphas
        # frob_table[i][j] = alpha_j^(q^i)
        self._frob_table = tuple(tuple(field.frob(a, i) for a in alphas) for i in range(k))

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def q(self) -> int:
        return self.field.p

    @property
    def alphas(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, a) for a in self.alpha_values)

    @classmethod
    def from_spec(cls, spec: dict) -> GabidulinCode:
        field = spec["field"]
        if not isinstance(field, FieldContext):
            field = FieldContext.from_spec(field)
        return cls(field, int(spec["n"]), int(spec["k"]), spec.get("alphas"))

    @classmethod
    def load(cls, path: str | Path) -> GabidulinCode:
        return cls.from_spec(json.loads(Path(path).read_text()))

    def to_spec(self) -> dict:
        return {"field": self.field.to_spec(), "n": self.n, "k": self.k, "alphas": list(self.alpha_values)}

    def __eq__(self, other):
        return (
            isinstance(other, GabidulinCode)
            and self.field == other.field
            and (self.n, self.k, self.alpha_values) == (other.n, other.k, other.alpha_values)
        )

    def __hash__(self):
        return hash((self.field, self.n, self.k, self.alpha_values))

    def __repr__(self):
        return f"GabidulinCode(q={self.q}, m={self.m}, n={self.n}, k={self.k}, alphas={list(self.alpha_values)})"

    def encode(self, f: LinearizedPoly) -> RankVector:
        if f.ctx != self.field:
            raise ContextMismatch("message polynomial over a different field")
        if f.q_degree >= self.k:
            raise DegreeTooHigh(f"q-degree {f.q_degree} >= k = {self.k}")
        return RankVector._raw(self.field, (f.eval_value(a) for a in self.alpha_values))

    def encode_message(self, msg: Sequence[int]) -> tuple[int, ...]:
        """Codeword values for message coefficient values f_0..f_{k-1}."""
        F = self.field
        out = [0] * self.n
        for fi, row in zip(msg, self._frob_table):
            if fi:
                for j, a in enumerate(row):
                    out[j] = F.add(out[j], F.mul(fi, a))
        return tuple(out)

    def is_codeword(self, v: RankVector) -> bool:
        """Solve sum_i f_i alpha_j^[i] = v_j over F_{q^m} and test consistency."""
        if v.ctx != self.field:
            raise ContextMismatch("vector over a different field")
        if len(v) != self.n:
            raise LengthMismatch(f"expected length {self.n}, got {len(v)}")
        F = self.field
        k = self.k
        aug = [[self._frob_table[i][j] for i in range(k)] + [v.values[j]] for j in range(self.n)]
        lead = 0
        for col in range(k + 1):
            piv = next((r for r in range(lead, self.n) if aug[r][col]), None)
            if piv is None:
                continue
            if col == k:
                # pivot in the right-hand side column: inconsistent system
                return False
            aug[lead], aug[piv] = aug[piv], aug[lead]
            inv = F.inv(aug[lead][col])
            aug[lead] = [F.mul(inv, x) for x in aug[lead]]
            for r in range(self.n):
                c = aug[r][col]
                if r != lead and c:
                    aug[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(aug[r], aug[lead])]
            lead += 1
        return True


def make_code(field: FieldContext, n: int, k: int, alphas: Sequence | None = None) -> GabidulinCode:
    return GabidulinCode(field, n, k, alphas)


def encode(code: GabidulinCode, f: LinearizedPoly) -> RankVector:
    return code.encode(f)


def is_codeword(code: GabidulinCode, v: RankVector) -> bool:
    return code.is_codeword(v)
