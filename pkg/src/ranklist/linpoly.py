"""Linearized polynomials sum_i f_i x^(p^i) over F_{p^m}.

Coefficients are kept as element values (ints); index i is the coefficient
of x^[i]. Polynomials are formal: nothing is reduced modulo x^[m] - x.
Multiplication of two polynomials is the symbolic product (composition).
"""

from __future__ import annotations

from typing import Iterable

from ranklist.errors import ContextMismatch
from ranklist.ffield import FieldContext, FieldElement, SubfieldEmbedding, embed
from ranklist.fqlinalg import FqMatrix, Subspace, kernel_basis

NEG_INFINITY = float("-inf")


class LinearizedPoly:
    __slots__ = ("ctx", "values")

    def __init__(self, ctx: FieldContext, coeffs: Iterable = ()):
        vals = [ctx(c).value if isinstance(c, FieldElement) else ctx.check(int(c)) for c in coeffs]
        while vals and vals[-1] == 0:
            vals.pop()
        self.ctx = ctx
        self.values = tuple(vals)

    @classmethod
    def _raw(cls, ctx: FieldContext, vals: list[int]) -> LinearizedPoly:
        while vals and vals[-1] == 0:
            vals.pop()
        f = cls.__new__(cls)
        f.ctx = ctx
        f.values = tuple(vals)
        return f

    @classmethod
    def monomial(cls, ctx: FieldContext, i: int, coeff=1) -> LinearizedPoly:
        return cls(ctx, [0] * i + [coeff])

    @classmethod
    def x(cls, ctx: FieldContext) -> LinearizedPoly:
        return cls(ctx, [1])

    @classmethod
    def zero(cls, ctx: FieldContext) -> LinearizedPoly:
        return cls(ctx)

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.ctx, v) for v in self.values)

    def coeff(self, i: int) -> FieldElement:
        return FieldElement(self.ctx, self.values[i] if 0 <= i < len(self.values) else 0)

    @property
    def q_degree(self) -> int | float:
        return len(self.values) - 1 if self.values else NEG_INFINITY

    def is_zero(self) -> bool:
        return not self.values

    def is_monic(self) -> bool:
        return bool(self.values) and self.values[-1] == 1

    def _same(self, other: LinearizedPoly) -> None:
        if self.ctx != other.ctx:
            raise ContextMismatch("polynomials over different fields")

    def __add__(self, other: LinearizedPoly) -> LinearizedPoly:
        self._same(other)
        a, b, F = self.values, other.values, self.ctx
        n = max(len(a), len(b))
        return LinearizedPoly._raw(
            F, [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
        )

    def __neg__(self) -> LinearizedPoly:
        return LinearizedPoly._raw(self.ctx, [self.ctx.neg(v) for v in self.values])

    def __sub__(self, other: LinearizedPoly) -> LinearizedPoly:
        return self + (-other)

    def scale(self, lam) -> LinearizedPoly:
        """Left scalar multiple lam * f."""
        F = self.ctx
        if isinstance(lam, FieldElement):
            lv = F(lam).value
            return LinearizedPoly._raw(F, [F.mul(lv, v) for v in self.values])
        return LinearizedPoly._raw(F, [F.scalar(int(lam), v) for v in self.values])

    def __mul__(self, other: LinearizedPoly) -> LinearizedPoly:
        """Symbolic product: (f * g)(x) = f(g(x))."""
        if not isinstance(other, LinearizedPoly):
            return NotImplemented
        self._same(other)
        F = self.ctx
        f, g = self.values, other.values
        if not f or not g:
            return LinearizedPoly._raw(F, [])
        out = [0] * (len(f) + len(g) - 1)
        for i, fi in enumerate(f):
            if not fi:
                continue
            for j, gj in enumerate(g):
                if gj:
                    out[i + j] = F.add(out[i + j], F.mul(fi, F.frob(gj, i)))
        return LinearizedPoly._raw(F, out)

    def eval_value(self, a: int) -> int:
        F = self.ctx
        acc = 0
        for i, fi in enumerate(self.values):
            if fi:
                acc = F.add(acc, F.mul(fi, F.frob(a, i)))
        return acc

    def __call__(self, a) -> FieldElement:
        if isinstance(a, FieldElement) and a.ctx != self.ctx:
            raise ContextMismatch("evaluation point from a different field")
        return FieldElement(self.ctx, self.eval_value(self.ctx(a).value))

    def frobenius_shift(self) -> LinearizedPoly:
        """x^[1] composed with f, i.e. f(x)^p."""
        F = self.ctx
        return LinearizedPoly._raw(F, [0] + [F.frob(v, 1) for v in self.values])

    def __eq__(self, other):
        return isinstance(other, LinearizedPoly) and self.ctx == other.ctx and self.values == other.values

    def __hash__(self):
        return hash((self.ctx, self.values))

    def __repr__(self):
        if not self.values:
            return "LinearizedPoly(0)"
        terms = [f"{v}*x^[{i}]" for i, v in enumerate(self.values) if v]
        return "LinearizedPoly(" + " + ".join(reversed(terms)) + ")"

    def tolist(self) -> list[int]:
        return list(self.values)


def q_degree(f: LinearizedPoly) -> int | float:
    return f.q_degree


def add(f: LinearizedPoly, g: LinearizedPoly) -> LinearizedPoly:
    return f + g


def scale(lam, f: LinearizedPoly) -> LinearizedPoly:
    return f.scale(lam)


def symbolic_product(f: LinearizedPoly, g: LinearizedPoly) -> LinearizedPoly:
    return f * g


def evaluate(f: LinearizedPoly, a) -> FieldElement:
    return f(a)


def _as_embedding(f: LinearizedPoly, domain) -> SubfieldEmbedding:
    if isinstance(domain, SubfieldEmbedding):
        if domain.target != f.ctx:
            raise ContextMismatch("domain embeds into a different field")
        return domain
    if isinstance(domain, FieldContext):
        return embed(domain, f.ctx)
    raise TypeError(f"domain must be a SubfieldEmbedding or FieldContext, not {type(domain).__name__}")


def root_space(f: LinearizedPoly, domain) -> Subspace:
    """Kernel of f restricted to the domain subfield.

    Returned in coordinates over the domain's image basis.
    """
    emb = _as_embedding(f, domain)
    F = f.ctx
    cols = [F.to_coeffs(f.eval_value(b)) for b in emb.basis_values]
    M = FqMatrix(F.p, tuple(zip(*cols)), len(cols))
    return kernel_basis(M)


def subspace_polynomial(U: Subspace, embedding: SubfieldEmbedding) -> LinearizedPoly:
    """Monic annihilator of U, of q-degree dim U, built one basis vector at a time."""
    F = embedding.target
    if U.p != F.p or U.n != embedding.n:
        raise ContextMismatch("subspace does not live in the embedded subfield")
    sigma = LinearizedPoly.x(F)
    q1 = F.p - 1
    for row in U.basis:
        u = embedding.map_coeffs(row)
        c = F.pow(sigma.eval_value(u), q1)
        sigma = sigma.frobenius_shift() - sigma.scale(FieldElement(F, c))
    return sigma

