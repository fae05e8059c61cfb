import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ranklist.errors import (
    BadParameters,
    ContextMismatch,
    DegreeTooHigh,
    DependentPoints,
    LengthMismatch,
)
from ranklist.ffield import FieldContext
from ranklist.fqlinalg import FqMatrix, rank
from ranklist.gabidulin import (
    GabidulinCode,
    RankVector,
    encode,
    is_codeword,
    kernel_dim,
    make_code,
    rank_distance,
    rank_weight,
)
from ranklist.linpoly import LinearizedPoly

F4 = FieldContext(2, 2)
F16 = FieldContext(2, 4)
F27 = FieldContext(3, 3)


def weight_by_elimination(ctx, values):
    """Rank of the expansion computed without the bit-packed shortcut."""
    cols = [ctx.to_coeffs(v) for v in values]
    return rank(FqMatrix(ctx.p, tuple(zip(*cols)), len(cols)))


def message_polys(code):
    F = code.field
    for msg in itertools.product(range(F.order), repeat=code.k):
        yield LinearizedPoly(F, msg)


# -- construction -------------------------------------------------------------


def test_make_code_defaults():
    code = make_code(F16, 4, 2)
    assert (code.q, code.m, code.n, code.k, code.d) == (2, 4, 4, 2, 3)
    assert code.alpha_values == (1, 2, 4, 8)


@pytest.mark.parametrize("n,k", [(5, 2), (4, 0), (3, 4)])
def test_make_code_bad_parameters(n, k):
    with pytest.raises(BadParameters):
        make_code(F16, n, k)


def test_dependent_points_rejected():
    g = F16.gen
    with pytest.raises(DependentPoints):
        make_code(F16, 4, 2, [1, 1, g, g * g])
    with pytest.raises(BadParameters):
        make_code(F16, 3, 2, [1, 2])


def test_code_spec_round_trip(tmp_path):
    code = make_code(F27, 3, 2, [1, 5, 13])
    path = tmp_path / "code.json"
    path.write_text(json.dumps(code.to_spec()))
    assert GabidulinCode.load(path) == code


# -- encoding -----------------------------------------------------------------


def test_encode_examples():
    code = make_code(F16, 4, 2)
    x = LinearizedPoly.x(F16)
    assert encode(code, x).values == code.alpha_values
    x1 = LinearizedPoly.monomial(F16, 1)
    assert encode(code, x1).values == tuple(F16.mul(a, a) for a in code.alpha_values)
    assert encode(code, LinearizedPoly.zero(F16)) == RankVector.zero(F16, 4)


def test_encode_message_matches_encode():
    code = make_code(F16, 3, 2)
    for f in message_polys(code):
        assert code.encode_message(f.values + (0,) * (2 - len(f.values))) == encode(code, f).values


def test_encode_rejects_high_degree_and_other_fields():
    code = make_code(F16, 4, 2)
    with pytest.raises(DegreeTooHigh):
        encode(code, LinearizedPoly.monomial(F16, 2))
    with pytest.raises(ContextMismatch):
        encode(code, LinearizedPoly.x(F27))


def test_g42_exhaustive_minimum_rank():
    code = make_code(F16, 4, 2)
    words = {encode(code, f) for f in message_polys(code)}
    assert len(words) == 16**2
    nonzero = [w for w in words if any(w.values)]
    assert min(weight_by_elimination(F16, w.values) for w in nonzero) == code.d == 3


@pytest.mark.parametrize("field,n,k", [(FieldContext(2, 3), 3, 1), (FieldContext(2, 3), 3, 2), (FieldContext(3, 2), 2, 1), (FieldContext(2, 4), 3, 2)])
def test_mrd_exhaustive(field, n, k):
    code = make_code(field, n, k)
    weights = [rank_weight(encode(code, f)) for f in message_polys(code) if not f.is_zero()]
    assert min(weights) == n - k + 1


# -- rank metric --------------------------------------------------------------


def test_rank_weight_examples_f4():
    g = F4.gen
    assert rank_weight(RankVector(F4, [1, g])) == 2
    assert rank_weight(RankVector(F4, [1, 1])) == 1
    assert rank_weight(RankVector(F4, [g, g + 1])) == 2
    assert rank_weight(RankVector.zero(F4, 2)) == 0


def vectors(ctx, n):
    return st.lists(st.integers(0, ctx.order - 1), min_size=n, max_size=n).map(lambda v: RankVector(ctx, v))


field_n = st.sampled_from([(F16, 4), (F27, 3)])


@given(field_n.flatmap(lambda fn: st.tuples(vectors(*fn), vectors(*fn), vectors(*fn))))
def test_rank_distance_is_a_metric(uvw):
    u, v, w = uvw
    assert rank_distance(u, u) == 0
    assert rank_distance(u, v) == rank_distance(v, u)
    assert (rank_distance(u, v) == 0) == (u == v)
    assert rank_distance(u, w) <= rank_distance(u, v) + rank_distance(v, w)


@given(field_n.flatmap(lambda fn: st.tuples(vectors(*fn), st.integers(1, fn[0].order - 1))))
def test_weight_invariant_under_scaling_and_nullity(case):
    v, lam = case
    F = v.ctx
    assert rank_weight(v.scale(F(lam))) == rank_weight(v)
    assert rank_weight(v) == weight_by_elimination(F, v.values)
    assert kernel_dim(v) == len(v) - rank_weight(v)


@given(field_n.flatmap(lambda fn: st.tuples(st.just(fn), st.data())))
def test_code_is_linear(case):
    (F, n), data = case
    code = make_code(F, n, 2)
    elem = st.integers(0, F.order - 1)
    f = LinearizedPoly(F, [data.draw(elem), data.draw(elem)])
    g = LinearizedPoly(F, [data.draw(elem), data.draw(elem)])
    lam = F(data.draw(elem))
    assert encode(code, f + g) == encode(code, f) + encode(code, g)
    assert encode(code, f.scale(lam)) == encode(code, f).scale(lam)


def test_vector_length_and_field_checks():
    with pytest.raises(LengthMismatch):
        RankVector.zero(F16, 3) + RankVector.zero(F16, 4)
    with pytest.raises(ContextMismatch):
        RankVector.zero(F16, 3) - RankVector.zero(F27, 3)


# -- membership ---------------------------------------------------------------


def test_is_codeword_examples():
    code = make_code(F16, 4, 2)
    c = encode(code, LinearizedPoly(F16, [3, 7]))
    assert is_codeword(code, c)
    err = RankVector(F16, [1, 0, 0, 0])
    assert rank_weight(err) == 1
    assert not is_codeword(code, c + err)
    with pytest.raises(LengthMismatch):
        is_codeword(code, RankVector.zero(F16, 3))
    with pytest.raises(ContextMismatch):
        is_codeword(code, RankVector.zero(F27, 4))


@pytest.mark.parametrize("field,n,k", [(FieldContext(2, 2), 2, 1), (FieldContext(2, 3), 3, 2), (FieldContext(3, 2), 2, 1)])
def test_is_codeword_exhaustive(field, n, k):
    code = make_code(field, n, k)
    words = {encode(code, f) for f in message_polys(code)}
    for v in itertools.product(range(field.order), repeat=n):
        vec = RankVector(field, v)
        assert is_codeword(code, vec) == (vec in words)


def test_odd_characteristic_code():
    code = make_code(F27, 3, 1, [1, 3, 9])
    words = [encode(code, f) for f in message_polys(code)]
    assert len(set(words)) == 27
    assert all(rank_weight(w) == 3 for w in words if any(w.values))
    assert all(is_codeword(code, w) for w in words)
