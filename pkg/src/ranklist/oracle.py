"""Brute-force ground truth for list sizes, ball volumes and the pairwise
row-space intersection property.

Everything here enumerates; nothing calls into the bounds or witness code.
Each routine computes its iteration count up front and refuses to start
when it exceeds the budget.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from ranklist.errors import BudgetExceeded, RadiusTooLarge
from ranklist.fqlinalg import FqMatrix, intersection_dim, rank, row_space
from ranklist.gabidulin import GabidulinCode, RankVector, rank_of_values

DEFAULT_BUDGET = 1 << 26


def default_budget() -> int:
    env = os.environ.get("RANKLIST_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass
class OracleBudget:
    max_enumerations: int = field(default_factory=default_budget)
    used: int = 0

    def reserve(self, count: int, what: str) -> None:
        if self.used + count > self.max_enumerations:
            raise BudgetExceeded(
                f"{what} needs {count} iterations; budget {self.max_enumerations} (used {self.used})"
            )
        self.used += count


def _budget(budget) -> OracleBudget:
    if budget is None:
        return OracleBudget()
    if isinstance(budget, int):
        return OracleBudget(budget)
    return budget


def iter_messages(code: GabidulinCode) -> Iterator[tuple[int, ...]]:
    """Message coefficient vectors (f_0, ..., f_{k-1}), canonical order."""
    # last coefficient varies fastest, matching tuple order
    return itertools.product(range(code.field.order), repeat=code.k)


def all_codewords(code: GabidulinCode) -> list[tuple[int, ...]]:
    return [code.encode_message(msg) for msg in iter_messages(code)]


@dataclass
class ListSizeResult:
    count: int
    codewords: list[RankVector]
    distances: list[int]
    iterations: int


def list_size_at(code: GabidulinCode, r: RankVector, tau: int, budget=None) -> ListSizeResult:
    """|B_tau(r) ∩ code| by encoding every message polynomial."""
    b = _budget(budget)
    total = code.field.order**code.k
    b.reserve(total, "list_size_at")
    F = code.field
    found, dists = [], []
    for msg in iter_messages(code):
        c = code.encode_message(msg)
        t = rank_of_values(F, [F.sub(x, y) for x, y in zip(r.values, c)])
        if t <= tau:
            found.append(RankVector._raw(F, c))
            dists.append(t)
    return ListSizeResult(len(found), found, dists, total)


@dataclass
class MaxListResult:
    max_size: int
    argmax: RankVector
    histogram: dict[int, int]
    iterations: int


def max_list_size(code: GabidulinCode, tau: int, budget=None) -> MaxListResult:
    """max over all r in F_{q^m}^n of |B_tau(r) ∩ code|; first maximum wins."""
    if tau >= code.d:
        raise RadiusTooLarge(f"tau={tau} must be smaller than d={code.d}")
    b = _budget(budget)
    F = code.field
    words = F.order**code.n
    codes = F.order**code.k
    b.reserve(words * codes, "max_list_size")
    codewords = all_codewords(code)
    best, arg = -1, None
    hist: dict[int, int] = {}
    for r in itertools.product(range(F.order), repeat=code.n):
        cnt = 0
        for c in codewords:
            if rank_of_values(F, [F.sub(x, y) for x, y in zip(r, c)]) <= tau:
                cnt += 1
        hist[cnt] = hist.get(cnt, 0) + 1
        if cnt > best:
            best, arg = cnt, r
    return MaxListResult(best, RankVector._raw(F, arg), dict(sorted(hist.items())), words * codes)


def ball_volume_brute(m: int, n: int, tau: int, q: int, budget=None) -> int:
    """Count m x n matrices over F_q of rank <= tau by enumeration."""
    b = _budget(budget)
    total = q ** (m * n)
    b.reserve(total, "ball_volume_brute")
    count = 0
    for entries in itertools.product(range(q), repeat=m * n):
        M = FqMatrix(q, tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(m)), n)
        if rank(M) <= tau:
            count += 1
    return count


@dataclass
class Lemma1Report:
    passed: bool
    pairs_checked: int
    excluded: int
    violations: list[dict]
    max_intersection: int

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "pairs_checked": self.pairs_checked,
            "excluded": self.excluded,
            "violations": self.violations,
            "max_intersection": self.max_intersection,
        }


def lemma1_check(r: RankVector, codewords: Sequence[RankVector], d: int) -> Lemma1Report:
    """Row spaces of r - c_i and r - c_j meet in dimension <= t_i + t_j - d.

    Words within distance floor((d-1)/2) of r are excluded.
    """
    bmd = (d - 1) // 2
    entries = []
    excluded = 0
    for i, c in enumerate(codewords):
        X = (r - c).expand()
        t = rank(X)
        if t <= bmd:
            excluded += 1
            continue
        entries.append((i, t, row_space(X)))
    violations = []
    pairs = 0
    worst = 0
    for (i, ti, Ui), (j, tj, Uj) in itertools.combinations(entries, 2):
        pairs += 1
        dim = intersection_dim(Ui, Uj)
        worst = max(worst, dim)
        if dim > ti + tj - d:
            violations.append({"i": i, "j": j, "t_i": ti, "t_j": tj, "intersection_dim": dim})
    return Lemma1Report(not violations, pairs, excluded, violations, worst)
