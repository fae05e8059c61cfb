import pytest
from hypothesis import given
from hypothesis import strategies as st

from ranklist.errors import ContextMismatch
from ranklist.ffield import FieldContext, embed
from ranklist.fqlinalg import Subspace, enumerate_subspaces
from ranklist.linpoly import (
    NEG_INFINITY,
    LinearizedPoly,
    add,
    evaluate,
    q_degree,
    root_space,
    scale,
    subspace_polynomial,
    symbolic_product,
)

F16 = FieldContext(2, 4)
F27 = FieldContext(3, 3)


def polys(ctx, max_len=4):
    return st.lists(st.integers(0, ctx.order - 1), max_size=max_len).map(lambda c: LinearizedPoly(ctx, c))


def elems(ctx):
    return st.integers(0, ctx.order - 1).map(ctx)


fields = st.sampled_from([F16, F27])


# -- q-degree and normalization -----------------------------------------------


def test_q_degree_examples():
    x = LinearizedPoly.x(F16)
    assert q_degree(x) == 0
    assert q_degree(LinearizedPoly.zero(F16)) == NEG_INFINITY
    f = LinearizedPoly.monomial(F16, 3) + LinearizedPoly(F16, [5])
    assert q_degree(f) == 3


def test_trailing_zeros_are_stripped():
    assert LinearizedPoly(F16, [3, 0, 0]).values == (3,)
    assert LinearizedPoly(F16, [0, 0]).is_zero()


def test_addition_examples():
    f = LinearizedPoly(F27, [4, 0, 7])
    assert add(f, LinearizedPoly.zero(F27)) == f
    assert add(f, scale(-1, f)).is_zero()
    g = LinearizedPoly(F27, [1, 1, 1])  # x^[2] + x^[1] + x
    h = add(g, -LinearizedPoly.monomial(F27, 2))
    assert q_degree(h) == 1


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        LinearizedPoly.x(F16) + LinearizedPoly.x(F27)
    with pytest.raises(ContextMismatch):
        symbolic_product(LinearizedPoly.x(F16), LinearizedPoly.x(FieldContext(2, 3)))
    with pytest.raises(ContextMismatch):
        evaluate(LinearizedPoly.x(F16), FieldContext(2, 3).one)


# -- symbolic product ---------------------------------------------------------


def test_symbolic_product_identity_and_degrees():
    x = LinearizedPoly.x(F16)
    f = LinearizedPoly(F16, [3, 9, 1])
    assert symbolic_product(x, f) == f == symbolic_product(f, x)
    x1 = LinearizedPoly.monomial(F16, 1)
    assert symbolic_product(x1, x1) == LinearizedPoly.monomial(F16, 2)


def test_symbolic_product_not_commutative():
    a = F16.gen
    assert a.frobenius(1) != a
    ax = LinearizedPoly(F16, [a])
    x1 = LinearizedPoly.monomial(F16, 1)
    # a * x^[1] versus (a x)^q = a^q x^[1]
    assert symbolic_product(ax, x1) == LinearizedPoly.monomial(F16, 1, a)
    assert symbolic_product(x1, ax) == LinearizedPoly.monomial(F16, 1, a ** 2)


def test_symbolic_product_coefficient_formula():
    f = LinearizedPoly(F27, [2, 5])
    g = LinearizedPoly(F27, [7, 1, 11])
    h = symbolic_product(f, g)
    for k in range(4):
        expect = F27.zero
        for i in range(2):
            j = k - i
            if 0 <= j < 3:
                expect = expect + f.coeff(i) * g.coeff(j).frobenius(i)
        assert h.coeff(k) == expect


@given(fields.flatmap(lambda F: st.tuples(polys(F), polys(F), polys(F))))
def test_associativity_and_distributivity(fgh):
    f, g, h = fgh
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (g + h) * f == g * f + h * f


@given(fields.flatmap(lambda F: st.tuples(polys(F), polys(F), elems(F))))
def test_composition_matches_evaluation(fga):
    f, g, a = fga
    assert (f * g)(a) == f(g(a))
    if not f.is_zero() and not g.is_zero():
        assert q_degree(f * g) == q_degree(f) + q_degree(g)


# -- evaluation ---------------------------------------------------------------


def test_evaluation_examples():
    F4 = FieldContext(2, 2)
    g = F4.gen
    assert evaluate(LinearizedPoly.x(F4), g) == g
    assert evaluate(LinearizedPoly(F4, [1, 2, 3]), F4.zero) == F4.zero
    assert evaluate(LinearizedPoly.monomial(F4, 1), g) == g + 1


@given(fields.flatmap(lambda F: st.tuples(polys(F, 5), elems(F), elems(F), st.integers(0, F.p - 1), st.integers(0, F.p - 1))))
def test_evaluation_is_fq_linear(case):
    f, a, b, lam, mu = case
    assert f(a * lam + b * mu) == f(a) * lam + f(b) * mu


# -- root spaces --------------------------------------------------------------


def test_root_space_of_x_is_zero():
    for n in (1, 2, 4):
        src = FieldContext(2, n)
        assert root_space(LinearizedPoly.x(F16), embed(src, F16)).dim == 0


def test_root_space_of_field_polynomial_is_everything():
    F64 = FieldContext(2, 6)
    for n in (1, 2, 3, 6):
        e = embed(FieldContext(2, n), F64)
        field_poly = LinearizedPoly.monomial(F64, n) - LinearizedPoly.x(F64)
        assert root_space(field_poly, e) == Subspace.full(n, 2)


def test_root_space_accepts_field_context():
    x1 = LinearizedPoly.monomial(F16, 1) - LinearizedPoly.x(F16)
    # roots of x^2 - x in F_16 are F_2
    assert root_space(x1, F16).dim == 1


def _brute_roots(f, emb):
    """Coordinate vectors (over the image basis) of all domain elements killed by f."""
    out = set()
    for v in range(emb.source.order):
        coords = emb.source.to_coeffs(v)
        if f.eval_value(emb.map_coeffs(coords)) == 0:
            out.add(tuple(coords))
    return out


# -- subspace polynomials -----------------------------------------------------


def test_subspace_polynomial_examples():
    e = embed(F16, F16)
    assert subspace_polynomial(Subspace.zero(4, 2), e) == LinearizedPoly.x(F16)
    u_coords = (0, 1, 1, 0)
    u = F16(e.map_coeffs(u_coords))
    sigma = subspace_polynomial(Subspace.span([u_coords], 4, 2), e)
    assert sigma == LinearizedPoly.monomial(F16, 1) - LinearizedPoly(F16, [u ** (2 - 1)])
    assert sigma(u) == F16.zero
    full = subspace_polynomial(Subspace.full(4, 2), e)
    assert full == LinearizedPoly.monomial(F16, 4) - LinearizedPoly.x(F16)


def test_subspace_polynomial_of_embedded_subfield():
    F64 = FieldContext(2, 6)
    e = embed(FieldContext(2, 3), F64)
    sigma = subspace_polynomial(Subspace.full(3, 2), e)
    assert sigma == LinearizedPoly.monomial(F64, 3) - LinearizedPoly.x(F64)


@pytest.mark.parametrize("n,m", [(1, 1), (2, 2), (3, 3), (4, 4), (2, 4), (3, 6)])
def test_subspace_polynomial_round_trip_exhaustive(n, m):
    target = FieldContext(2, m)
    emb = embed(target if n == m else FieldContext(2, n), target)
    for s in range(n + 1):
        for U in enumerate_subspaces(n, s, 2):
            sigma = subspace_polynomial(U, emb)
            assert sigma.is_monic() and q_degree(sigma) == s
            assert root_space(sigma, emb) == U
            assert _brute_roots(sigma, emb) == set(U.vectors())


def test_subspace_polynomial_odd_characteristic():
    F9 = FieldContext(3, 2)
    emb = embed(F9, F9)
    for s in range(3):
        for U in enumerate_subspaces(2, s, 3):
            sigma = subspace_polynomial(U, emb)
            assert sigma.is_monic() and q_degree(sigma) == s
            assert _brute_roots(sigma, emb) == set(U.vectors())
