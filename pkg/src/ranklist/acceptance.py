"""Acceptance suite: one function per criterion, each returning (passed, detail).

Criteria call into the library through module attributes (``bounds.gaussian_binomial``
and so on) so a patched implementation is what actually gets exercised.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ranklist import bounds, ffield, fqlinalg, gabidulin, linpoly, oracle, witness


@dataclass
class CriterionResult:
    id: str
    title: str
    passed: bool
    detail: str
    seconds: float
    time_limit: float

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] {self.id:<16} {self.seconds:7.3f}s (limit {self.time_limit:g}s)  {self.detail}"

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 4),
            "time_limit": self.time_limit,
        }


CRITERIA: dict[str, tuple[str, float, Callable[[], tuple[bool, str]]]] = {}


def criterion(cid: str, title: str, time_limit: float):
    def deco(fn):
        CRITERIA[cid] = (title, time_limit, fn)
        return fn

    return deco


def _sweep(count: int, modulus: int, salt: int = 0) -> list[int]:
    """Deterministic, well-spread index sequence in [0, modulus)."""
    return [((i + salt) * 2654435761 + salt * 40503) % modulus for i in range(count)]


def _bisect_root(g: Callable[[float], float], lo: float, hi: float) -> float:
    for _ in range(200):
        mid = (lo + hi) / 2
        if (g(lo) < 0) == (g(mid) < 0):
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


# ---------------------------------------------------------------------------


@criterion("example-12-6", "Worked example G(12,6): radii 3 / 4 / 5", 1.0)
def check_example() -> tuple[bool, str]:
    n, k = 12, 6
    d = n - k + 1
    bmd = bounds.bmd_radius(d)
    lb, lb_ceil = bounds.tau_lb(n, d, 0.9)
    jr, jr_ceil = bounds.tau_lb(n, d, 0.0)

    # independent route: smallest root of 2n t - t^2 - n d + n eps in [0, n]
    def ref(eps):
        return _bisect_root(lambda t: 2 * n * t - t * t - n * d + n * eps, 0.0, float(n))

    ok = (
        d == 7
        and bmd == 3
        and abs(lb - ref(0.9)) <= 1e-9
        and abs(jr - ref(0.0)) <= 1e-9
        and lb_ceil == 4
        and jr_ceil == 5
        and math.floor(lb * 100) == 358
    )
    return ok, f"d={d} bmd={bmd} tau_lb={lb:.6f}->{lb_ceil} johnson={jr:.6f}->{jr_ceil}"


def _witness(m: int, n: int, k: int, tau: int) -> witness.Witness:
    F = ffield.FieldContext(2, m)
    return witness.build_witness(witness.witness_code(F, n, k), tau)


@criterion("tight-g42", "G(4,2) over F_16, tau=2: bounds, witness and oracle all give 35", 5.0)
def check_tight() -> tuple[bool, str]:
    lo = bounds.lower_bound(2, 4, 4, 2, 2).exact
    up = bounds.upper_bound(2, 4, 4, 2, 2)
    w = _witness(4, 4, 2, 2)
    rep = witness.verify_witness(w)
    res = oracle.list_size_at(w.code, w.r, 2)
    dists = {gabidulin.rank_distance(w.r, c) for c in w.codeword_list}
    contained = set(w.codeword_list) <= set(res.codewords)
    ok = (
        lo == 35
        and up.paper_exact == 35
        and len(w.codeword_list) == 35
        and rep.passed
        and dists == {2}
        and 35 <= res.count <= 36
        and res.count >= len(w.codeword_list)
        and contained
    )
    return ok, (
        f"lower={lo} upper_paper={up.paper_exact} safe={up.safe} witness={len(w.codeword_list)} "
        f"verified={rep.passed} oracle={res.count}"
    )


@criterion("witness-g31", "G(3,1) over F_8, tau=2: witness >= 7, exhaustive max in [7, safe]", 10.0)
def check_g31() -> tuple[bool, str]:
    w = _witness(3, 3, 1, 2)
    rep = witness.verify_witness(w)
    need = bounds.gaussian_binomial(3, 1, 2)
    safe = bounds.upper_bound(2, 3, 3, 1, 2).safe
    mx = oracle.max_list_size(w.code, 2)
    ok = rep.passed and len(w.codeword_list) >= need == 7 and 7 <= mx.max_size <= safe
    return ok, f"witness={len(w.codeword_list)} verified={rep.passed} oracle_max={mx.max_size} safe={safe}"


@criterion("gauss-sandwich", "q^{s(n-s)} <= [n s]_q <= 4 q^{s(n-s)}, n <= 8, q in {2,3}", 1.0)
def check_sandwich() -> tuple[bool, str]:
    bad = []
    cases = 0
    for q in (2, 3):
        for n in range(0, 9):
            for s in range(n + 1):
                cases += 1
                low = q ** (s * (n - s))
                g = bounds.gaussian_binomial(n, s, q)
                if not low <= g <= 4 * low:
                    bad.append((q, n, s, g))
    return not bad, f"{cases} cases, {len(bad)} violations" + (f" first={bad[0]}" if bad else "")


@criterion("subspace-count", "enumerate_subspaces count equals [n s]_2, n <= 5", 10.0)
def check_subspace_count() -> tuple[bool, str]:
    bad = []
    cases = 0
    for n in range(0, 6):
        for s in range(n + 1):
            cases += 1
            spaces = list(fqlinalg.enumerate_subspaces(n, s, 2))
            distinct = len(set(spaces)) == len(spaces)
            if len(spaces) != bounds.gaussian_binomial(n, s, 2) or not distinct:
                bad.append((n, s, len(spaces)))
    return not bad, f"{cases} (n, s) pairs, {len(bad)} mismatches"


@criterion("ball-volume", "ball_volume equals brute-force count, q=2, m, n <= 4", 30.0)
def check_ball_volume() -> tuple[bool, str]:
    bad = []
    cases = 0
    for m in range(1, 5):
        for n in range(1, 5):
            for tau in range(min(m, n) + 1):
                cases += 1
                a = bounds.ball_volume(m, n, tau, 2)
                b = oracle.ball_volume_brute(m, n, tau, 2)
                if a != b:
                    bad.append((m, n, tau, a, b))
    return not bad, f"{cases} cases, {len(bad)} mismatches"


@criterion("mrd", "exhaustive minimum rank = n - k + 1, q=2, n=m in {3,4}", 30.0)
def check_mrd() -> tuple[bool, str]:
    found = []
    ok = True
    for m in (3, 4):
        F = ffield.FieldContext(2, m)
        for k in range(1, m + 1):
            code = gabidulin.make_code(F, m, k)
            dmin = min(
                gabidulin.rank_of_values(F, code.encode_message(msg))
                for msg in oracle.iter_messages(code)
                if any(msg)
            )
            found.append(f"G({m},{k})={dmin}")
            ok &= dmin == m - k + 1
    return ok, " ".join(found)


@criterion("formula-chains", "lower and upper formula chains; lower <= safe upper", 30.0)
def check_chains() -> tuple[bool, str]:
    bad = []
    cases = 0
    for q in (2, 3):
        for n in range(1, 9):
            m = n
            for k in range(1, n + 1):
                d = n - k + 1
                for tau in range(d):
                    cases += 1
                    lo = bounds.lower_bound(q, m, n, k, tau)
                    up = bounds.upper_bound(q, m, n, k, tau)
                    if lo.rational < Fraction(q) ** (m + tau * (m + n) - tau * tau - m * d):
                        bad.append(("lower-chain", q, n, k, tau))
                    if up.terms and not (up.rational <= up.middle <= up.simplified):
                        bad.append(("upper-chain", q, n, k, tau))
                    if lo.exact > up.safe:
                        bad.append(("crossed", q, n, k, tau))
    return not bad, f"{cases} parameter sets, {len(bad)} violations" + (f" first={bad[0]}" if bad else "")


@criterion("augot-loidreau", "single-term upper bound equals (q^n-1)/(q^{d/2}-1), q=2, n <= 10", 5.0)
def check_al() -> tuple[bool, str]:
    bad = []
    cases = 0
    for n in range(2, 11):
        for d in range(2, n + 1, 2):
            k = n - d + 1
            up = bounds.upper_bound(2, n, n, k, d // 2)
            if len(up.terms) != 1:
                continue
            cases += 1
            closed = Fraction(2**n - 1, 2 ** (d // 2) - 1)
            if up.paper_exact != bounds.augot_loidreau_special(2, n, d) or up.paper_exact != math.floor(closed):
                bad.append((n, d))
    return not bad and cases > 0, f"{cases} (n, d) pairs, {len(bad)} mismatches"


@criterion("lemma1", "pairwise row-space intersections on both witnesses", 10.0)
def check_lemma1() -> tuple[bool, str]:
    parts = []
    ok = True
    for m, n, k, tau in ((4, 4, 2, 2), (3, 3, 1, 2)):
        w = _witness(m, n, k, tau)
        rep = oracle.lemma1_check(w.r, w.codeword_list, w.code.d)
        ok &= rep.passed and rep.pairs_checked > 0
        parts.append(f"G({n},{k}): {rep.pairs_checked} pairs, max dim {rep.max_intersection}")
    return ok, "; ".join(parts)


@criterion("algebra", "linearity, symbolic product, Frobenius, rank-nullity sweeps", 30.0)
def check_algebra() -> tuple[bool, str]:
    failures = []
    LP = linpoly.LinearizedPoly

    # Frobenius composition law and F_q-linearity, exhaustive on F_16 and F_9
    for F in (ffield.FieldContext(2, 4), ffield.FieldContext(3, 2)):
        for a in F.enumerate_elements():
            for i in range(-F.m, 2 * F.m + 1):
                for j in range(0, F.m + 1):
                    if a.frobenius(i).frobenius(j) != a.frobenius(i + j):
                        failures.append(("frobenius", F.p, a.value, i, j))

    # evaluation linearity, 1000 deterministic cases per field
    for F in (ffield.FieldContext(2, 4), ffield.FieldContext(3, 2)):
        N = F.order
        idx = _sweep(1000, N**4, salt=F.p)
        for t in idx:
            c0, c1, c2, a = t % N, t // N % N, t // N**2 % N, t // N**3 % N
            b = (t * 7 + 3) % N
            f = LP(F, [c0, c1, c2])
            for lam in range(F.p):
                for mu in range(F.p):
                    lhs = f(F(a) * lam + F(b) * mu)
                    rhs = f(F(a)) * lam + f(F(b)) * mu
                    if lhs != rhs:
                        failures.append(("linearity", F.p, t, lam, mu))

    # symbolic product: identity, associativity, distributivity, composition
    F = ffield.FieldContext(2, 4)
    N = F.order
    x = LP.x(F)
    for t in _sweep(1000, N**6, salt=5):
        digits = [t // N**e % N for e in range(6)]
        f, g, h = LP(F, digits[0:2]), LP(F, digits[2:4]), LP(F, digits[4:6])
        if x * f != f or f * x != f:
            failures.append(("identity", t))
        if (f * g) * h != f * (g * h):
            failures.append(("associativity", t))
        if f * (g + h) != f * g + f * h or (g + h) * f != g * f + h * f:
            failures.append(("distributivity", t))
        a = F(digits[5])
        if (f * g)(a) != f(g(a)):
            failures.append(("composition", t))
        if not f.is_zero() and not g.is_zero() and (f * g).q_degree != f.q_degree + g.q_degree:
            failures.append(("degree", t))
    a = F.gen
    left = LP(F, [a]) * LP.monomial(F, 1)
    right = LP.monomial(F, 1) * LP(F, [a])
    if not (left == LP.monomial(F, 1, a) and right == LP.monomial(F, 1, a ** 2) and left != right):
        failures.append(("non-commutativity",))

    # rank-nullity on 1000 deterministic matrices, m, n <= 6, q in {2, 3}
    for t in _sweep(1000, 1 << 40, salt=11):
        q = 2 + t % 2
        m, n = 1 + t // 2 % 6, 1 + t // 12 % 6
        rows = [[((t ^ (i * n + j) * 0x9E3779B9) * 2654435761 >> 20) % q for j in range(n)] for i in range(m)]
        M = fqlinalg.FqMatrix.from_rows(rows, q, n)
        K = fqlinalg.kernel_basis(M)
        if fqlinalg.rank(M) + K.dim != n or any(any(M.apply(v)) for v in K.basis):
            failures.append(("rank-nullity", t))

    return not failures, f"{len(failures)} failures" + (f" first={failures[0]}" if failures else "")


# ---------------------------------------------------------------------------


def run_criterion(cid: str) -> CriterionResult:
    title, limit, fn = CRITERIA[cid]
    start = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:  # a crash is a failed criterion, not a crashed suite
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    if elapsed > limit:
        passed = False
        detail += f" (over time limit {limit}s)"
    return CriterionResult(cid, title, passed, detail, elapsed, limit)


def run_suite(only: list[str] | None = None) -> list[CriterionResult]:
    ids = list(CRITERIA) if not only else only
    unknown = [c for c in ids if c not in CRITERIA]
    if unknown:
        raise KeyError(f"unknown criteria: {unknown}; known: {list(CRITERIA)}")
    return [run_criterion(cid) for cid in ids]

