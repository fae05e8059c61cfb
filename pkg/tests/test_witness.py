import json

import pytest

from ranklist.bounds import gaussian_binomial, lower_bound
from ranklist.errors import (
    BadParameters,
    BudgetExceeded,
    NonDivisibleDegrees,
    RadiusTooLarge,
)
from ranklist.ffield import FieldContext
from ranklist.fqlinalg import enumerate_subspaces
from ranklist.gabidulin import GabidulinCode, RankVector, kernel_dim, make_code, rank_distance
from ranklist.linpoly import root_space
from ranklist.witness import (
    Witness,
    build_witness,
    enumerate_annihilators,
    subfield_embedding,
    verify_witness,
    witness_code,
)

F8 = FieldContext(2, 3)
F16 = FieldContext(2, 4)


@pytest.fixture(scope="module")
def g42():
    return build_witness(witness_code(F16, 4, 2), 2)


# -- annihilators -------------------------------------------------------------


def test_annihilator_count_and_shape():
    pairs = list(enumerate_annihilators(2, 4, 2, F16))
    assert len(pairs) == 35 == gaussian_binomial(4, 2, 2)
    emb = subfield_embedding(2, 4, F16)
    for U, sigma in pairs:
        assert sigma.is_monic() and sigma.q_degree == 2
        assert root_space(sigma, emb) == U
    assert len({sigma for _, sigma in pairs}) == 35


def test_annihilators_inside_larger_field():
    F64 = FieldContext(2, 6)
    pairs = list(enumerate_annihilators(2, 3, 1, F64))
    assert len(pairs) == 7
    assert [U for U, _ in pairs] == list(enumerate_subspaces(3, 2, 2))


def test_annihilator_radius_range():
    with pytest.raises(BadParameters):
        list(enumerate_annihilators(2, 4, 5, F16))


# -- construction -------------------------------------------------------------


def test_g42_tight_witness(g42):
    assert len(g42.codeword_list) == 35
    assert g42.bucket_key == () and g42.bucket_count == 1 and g42.total == 35
    assert all(rank_distance(g42.r, c) == 2 for c in g42.codeword_list)
    assert len(set(g42.codeword_list)) == 35
    report = verify_witness(g42)
    assert report.passed and report.size == 35 and report.required == 35


def test_g31_witness():
    w = build_witness(witness_code(F8, 3, 1), 2)
    assert len(w.codeword_list) >= 7 == lower_bound(2, 3, 3, 1, 2).exact
    assert verify_witness(w).passed


def test_fractional_bound_still_yields_one_codeword():
    w = build_witness(witness_code(F16, 4, 2), 1)
    # 15 annihilators, keys are the x^[2] coefficient: 15 distinct buckets
    assert w.total == 15 and w.bucket_count == 15
    assert len(w.codeword_list) == 1
    # every bucket has size 1, so the tie goes to the smallest key
    keys = sorted((sigma.coeff(2).value,) for _, sigma in enumerate_annihilators(2, 4, 1, F16))
    assert w.bucket_key == keys[0]
    assert verify_witness(w).passed


@pytest.mark.parametrize("m,n,k,tau", [(4, 2, 1, 1), (6, 3, 1, 2), (6, 3, 2, 1), (6, 2, 1, 1)])
def test_witness_in_extension_field(m, n, k, tau):
    field = FieldContext(2, m)
    w = build_witness(witness_code(field, n, k), tau)
    assert verify_witness(w).passed
    assert len(w.codeword_list) >= lower_bound(2, m, n, k, tau).exact


def test_witness_odd_characteristic():
    F27 = FieldContext(3, 3)
    w = build_witness(witness_code(F27, 3, 1), 2)
    assert len(w.codeword_list) >= lower_bound(3, 3, 3, 1, 2).exact == 13
    assert verify_witness(w).passed


def test_witness_invariants(g42):
    code = g42.code
    assert code.alpha_values == tuple(subfield_embedding(2, 4, F16).basis_values)
    for g, c in zip(g42.bucket, g42.codeword_list):
        diff = g42.base_poly - g
        assert diff.q_degree < code.k
        assert code.encode(diff) == c
        assert kernel_dim(g42.r - c) == code.n - g42.tau


def test_largest_bucket_is_at_least_average():
    code = witness_code(FieldContext(2, 6), 6, 3)
    w = build_witness(code, 3)
    assert w.total == gaussian_binomial(6, 3, 2) == 1395
    assert len(w.bucket_key) == 0 and len(w.codeword_list) == 1395
    w = build_witness(witness_code(FieldContext(2, 5), 5, 2), 2)
    assert len(w.bucket_key) == 1
    assert len(w.codeword_list) * w.bucket_count >= w.total
    assert len(w.codeword_list) >= lower_bound(2, 5, 5, 2, 2).exact


def test_bucket_choice_is_largest_then_smallest_key():
    code = witness_code(FieldContext(2, 5), 5, 2)
    w = build_witness(code, 2)
    counts = {}
    for _, sigma in enumerate_annihilators(2, 5, 2, code.field):
        key = (sigma.coeff(2).value,)
        counts[key] = counts.get(key, 0) + 1
    best = max(counts.values())
    assert len(w.bucket) == best
    assert w.bucket_key == min(k for k, v in counts.items() if v == best)


def test_build_is_deterministic(g42):
    again = build_witness(witness_code(F16, 4, 2), 2)
    assert again.dumps() == g42.dumps()


# -- serialization ------------------------------------------------------------


def test_json_round_trip(g42, tmp_path):
    path = tmp_path / "w.json"
    g42.save(path, verify_witness(g42))
    data = json.loads(path.read_text())
    assert data["parameters"] == {"q": 2, "m": 4, "n": 4, "k": 2, "d": 3, "tau": 2}
    assert data["verification"]["passed"] is True
    loaded = Witness.load(path)
    assert loaded.codeword_list == g42.codeword_list and loaded.r == g42.r
    assert loaded.dumps() == g42.dumps()
    assert verify_witness(loaded).passed


# -- tampering ----------------------------------------------------------------


def test_tampered_codeword_fails_membership(g42):
    bad = Witness.from_dict(g42.to_dict())
    c = bad.codeword_list[0]
    bad.codeword_list[0] = c + RankVector(F16, [1, 0, 0, 0])
    report = verify_witness(bad)
    assert not report.passed and not report.checks["membership"]


def test_tampered_radius_fails_distance(g42):
    bad = Witness.from_dict(g42.to_dict())
    bad.tau = 1
    report = verify_witness(bad)
    assert not report.checks["distance"] and not report.passed


def test_duplicate_fails_distinctness(g42):
    bad = Witness.from_dict(g42.to_dict())
    bad.codeword_list.append(bad.codeword_list[0])
    report = verify_witness(bad)
    assert not report.checks["distinct"]


def test_truncated_list_fails_size(g42):
    bad = Witness.from_dict(g42.to_dict())
    del bad.codeword_list[5:]
    report = verify_witness(bad)
    assert report.checks["membership"] and not report.checks["size"]


# -- errors -------------------------------------------------------------------


def test_radius_must_be_below_distance():
    with pytest.raises(RadiusTooLarge):
        build_witness(witness_code(F16, 4, 2), 3)


def test_length_must_divide_extension_degree():
    with pytest.raises(NonDivisibleDegrees):
        witness_code(F16, 3, 1)


def test_non_basis_points_rejected():
    code = make_code(F16, 2, 1, [1, 3])
    with pytest.raises(BadParameters):
        build_witness(code, 1)


def test_work_limit():
    code = witness_code(FieldContext(2, 6), 6, 3)
    with pytest.raises(BudgetExceeded):
        build_witness(code, 3, work_limit=1000)


def test_witness_code_equals_explicit_code():
    code = witness_code(F16, 2, 1)
    emb = subfield_embedding(2, 2, F16)
    assert code == GabidulinCode(F16, 2, 1, emb.basis_values)
