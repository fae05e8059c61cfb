"""Explicit received word with many codewords at rank distance exactly tau.

Every (n - tau)-dim subspace U of F_{q^n} has a monic annihilator of q-degree
n - tau. Grouping the annihilators by their coefficients at q-degrees
k..n-tau-1 and keeping the largest group gives polynomials whose pairwise
differences have q-degree < k. Evaluating one member f at a basis of F_{q^n}
gives r; f - g for each g in the group evaluates to a codeword c with
r - c = g(basis), a vector of rank exactly tau.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from ranklist.bounds import gaussian_binomial, lower_bound
from ranklist.errors import (
    BadParameters,
    BudgetExceeded,
    NonDivisibleDegrees,
    RadiusTooLarge,
    VerificationFailed,
)
from ranklist.ffield import FieldContext, SubfieldEmbedding, embed
from ranklist.fqlinalg import Subspace, enumerate_subspaces
from ranklist.gabidulin import GabidulinCode, RankVector, kernel_dim, rank_distance
from ranklist.linpoly import LinearizedPoly, root_space, subspace_polynomial

DEFAULT_WORK_LIMIT = 1 << 22


def subfield_embedding(q: int, n: int, target: FieldContext) -> SubfieldEmbedding:
    if target.p != q:
        raise BadParameters(f"target field has characteristic {target.p}, not {q}")
    if target.m % n:
        raise NonDivisibleDegrees(f"n={n} does not divide m={target.m}")
    source = target if n == target.m else FieldContext(q, n)
    return embed(source, target)


def witness_code(field: FieldContext, n: int, k: int) -> GabidulinCode:
    """Code whose evaluation points are the embedded basis of F_{q^n}."""
    emb = subfield_embedding(field.p, n, field)
    return GabidulinCode(field, n, k, emb.basis_values)


def enumerate_annihilators(
    q: int, n: int, tau: int, target: FieldContext
) -> Iterator[tuple[Subspace, LinearizedPoly]]:
    """(U, annihilator of U) for every (n - tau)-dim subspace U of F_{q^n}."""
    if not 0 <= tau <= n:
        raise BadParameters(f"need 0 <= tau <= n, got tau={tau}, n={n}")
    emb = subfield_embedding(q, n, target)
    for U in enumerate_subspaces(n, n - tau, q):
        yield U, subspace_polynomial(U, emb)


@dataclass
class VerificationReport:
    passed: bool
    size: int
    required: int
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "size": self.size,
            "required": self.required,
            "checks": dict(self.checks),
            "failures": list(self.failures),
        }


@dataclass
class Witness:
    code: GabidulinCode
    tau: int
    r: RankVector
    base_poly: LinearizedPoly
    bucket: list[LinearizedPoly]
    codeword_list: list[RankVector]
    bucket_key: tuple[int, ...]
    bucket_count: int = 0  # number of nonempty buckets
    total: int = 0  # number of annihilators enumerated

    def to_dict(self, report: VerificationReport | None = None) -> dict:
        code = self.code
        out = {
            "parameters": {
                "q": code.q,
                "m": code.m,
                "n": code.n,
                "k": code.k,
                "d": code.d,
                "tau": self.tau,
            },
            "field": code.field.to_spec(),
            "alphas": list(code.alpha_values),
            "bucket_key": list(self.bucket_key),
            "bucket_count": self.bucket_count,
            "annihilators": self.total,
            "base_poly": self.base_poly.tolist(),
            "r": self.r.tolist(),
            "bucket": [g.tolist() for g in self.bucket],
            "codewords": [c.tolist() for c in self.codeword_list],
            "distances": [rank_distance(self.r, c) for c in self.codeword_list],
        }
        if report is not None:
            out["verification"] = report.to_dict()
        return out

    @classmethod
    def from_dict(cls, data: dict) -> Witness:
        field_ = FieldContext.from_spec(data["field"])
        prm = data["parameters"]
        code = GabidulinCode(field_, int(prm["n"]), int(prm["k"]), data["alphas"])
        return cls(
            code=code,
            tau=int(prm["tau"]),
            r=RankVector(field_, data["r"]),
            base_poly=LinearizedPoly(field_, data["base_poly"]),
            bucket=[LinearizedPoly(field_, g) for g in data.get("bucket", [])],
            codeword_list=[RankVector(field_, c) for c in data["codewords"]],
            bucket_key=tuple(data.get("bucket_key", ())),
            bucket_count=int(data.get("bucket_count", 0)),
            total=int(data.get("annihilators", 0)),
        )

    def dumps(self, report: VerificationReport | None = None) -> str:
        return json.dumps(self.to_dict(report), indent=2)

    def save(self, path: str | Path, report: VerificationReport | None = None) -> None:
        Path(path).write_text(self.dumps(report) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> Witness:
        return cls.from_dict(json.loads(Path(path).read_text()))


def build_witness(code: GabidulinCode, tau: int, work_limit: int = DEFAULT_WORK_LIMIT) -> Witness:
    q, m, n, k, d = code.q, code.m, code.n, code.k, code.d
    if not 0 <= tau:
        raise BadParameters(f"need tau >= 0, got {tau}")
    if tau >= d:
        raise RadiusTooLarge(f"tau={tau} must be smaller than d={d}")
    emb = subfield_embedding(q, n, code.field)
    if tuple(emb.basis_values) != code.alpha_values:
        raise BadParameters("evaluation points must be the embedded basis of F_{q^n}; use witness_code()")
    total = gaussian_binomial(n, n - tau, q)
    if total > work_limit:
        raise BudgetExceeded(f"{total} annihilators to enumerate exceeds the work limit {work_limit}")

    s = n - tau
    buckets: dict[tuple[int, ...], list[tuple[Subspace, LinearizedPoly]]] = {}
    for U, sigma in enumerate_annihilators(q, n, tau, code.field):
        key = tuple(sigma.coeff(i).value for i in range(k, s))
        buckets.setdefault(key, []).append((U, sigma))

    best_key = min(buckets, key=lambda key: (-len(buckets[key]), key))
    members = buckets[best_key]
    f = members[0][1]
    alphas = code.alpha_values
    r = RankVector._raw(code.field, (f.eval_value(a) for a in alphas))
    codewords = []
    for _, g in members:
        diff = f - g
        codewords.append(RankVector._raw(code.field, (diff.eval_value(a) for a in alphas)))

    w = Witness(
        code=code,
        tau=tau,
        r=r,
        base_poly=f,
        bucket=[g for _, g in members],
        codeword_list=codewords,
        bucket_key=best_key,
        bucket_count=len(buckets),
        total=total,
    )
    _check_construction(w, emb, [U for U, _ in members])
    return w


def _check_construction(w: Witness, emb: SubfieldEmbedding, spaces: list[Subspace]) -> None:
    code, tau = w.code, w.tau
    n, k = code.n, code.k
    problems = []
    need = lower_bound(code.q, code.m, n, k, tau).exact
    if len(w.bucket) < need:
        problems.append(f"bucket size {len(w.bucket)} < {need}")
    if len(w.bucket) * w.bucket_count < w.total:
        problems.append("largest bucket smaller than the average bucket")
    for U, g in zip(spaces, w.bucket):
        if not g.is_monic() or g.q_degree != n - tau:
            problems.append(f"annihilator {g} not monic of q-degree {n - tau}")
        if root_space(g, emb) != U:
            problems.append(f"root space of {g} differs from its subspace")
        if (w.base_poly - g).q_degree >= k:
            problems.append(f"f - g has q-degree >= k for g = {g}")
    for c in w.codeword_list:
        diff = w.r - c
        if diff.rank_weight != tau or kernel_dim(diff) != n - tau:
            problems.append(f"codeword {c} not at rank distance {tau}")
        if not code.is_codeword(c):
            problems.append(f"{c} is not a codeword")
    if len(set(w.codeword_list)) != len(w.codeword_list):
        problems.append("duplicate codewords")
    if problems:
        raise VerificationFailed("; ".join(problems[:5]))


def verify_witness(w: Witness) -> VerificationReport:
    """Re-check a witness using only its code, r, tau and codeword list."""
    code, tau = w.code, w.tau
    failures = []
    membership = distance = True
    for i, c in enumerate(w.codeword_list):
        if not code.is_codeword(c):
            membership = False
            failures.append(f"membership: entry {i} is not a codeword")
        t = rank_distance(w.r, c)
        if t != tau:
            distance = False
            failures.append(f"distance: entry {i} at rank distance {t}, expected {tau}")
    distinct = len(set(w.codeword_list)) == len(w.codeword_list)
    if not distinct:
        failures.append("distinct: repeated codewords")
    try:
        required = lower_bound(code.q, code.m, code.n, code.k, tau).exact
    except RadiusTooLarge as exc:
        required = math.inf
        failures.append(f"size: {exc}")
    size_ok = len(w.codeword_list) >= required
    if not size_ok and required != math.inf:
        failures.append(f"size: {len(w.codeword_list)} < {required}")
    checks = {"membership": membership, "distance": distance, "distinct": distinct, "size": size_ok}
    return VerificationReport(
        passed=all(checks.values()),
        size=len(w.codeword_list),
        required=required if required != math.inf else -1,
        checks=checks,
        failures=failures,
    )
