"""Closed-form counts and list-size bounds for Gabidulin codes.

Every count is an exact integer or Fraction; tau_lb is the only float.
Lower bounds are rounded up and upper bounds down, so rounding never
invalidates a bound on the (integer) list size.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from ranklist.errors import BadParameters, RadiusTooLarge
from ranklist.ffield import prime_factors

# integers beyond this many bits also get a (base, exponent) rendering
HUGE_BITS = 512


def gaussian_binomial(n: int, s: int, q: int) -> int:
    """Number of s-dimensional subspaces of F_q^n."""
    if q < 2:
        raise BadParameters(f"need q >= 2, got {q}")
    if not 0 <= s <= n:
        raise BadParameters(f"need 0 <= s <= n, got s={s}, n={n}")
    num = den = 1
    for i in range(s):
        num *= q**n - q**i
        den *= q**s - q**i
    out, rem = divmod(num, den)
    assert rem == 0
    return out


def gaussian_sandwich(n: int, s: int, q: int) -> tuple[int, int, int]:
    """(q^{s(n-s)}, [n s]_q, 4 q^{s(n-s)})."""
    low = q ** (s * (n - s))
    return low, gaussian_binomial(n, s, q), 4 * low


def rank_count(m: int, n: int, i: int, q: int) -> int:
    """Number of m x n matrices over F_q of rank exactly i."""
    prod = 1
    for j in range(i):
        prod *= q**m - q**j
    return gaussian_binomial(n, i, q) * prod


def ball_volume(m: int, n: int, tau: int, q: int) -> int:
    """Size of a rank-metric ball of radius tau in F_{q^m}^n."""
    if not 0 <= tau <= min(m, n):
        raise BadParameters(f"need 0 <= tau <= min(m, n), got tau={tau}")
    return sum(rank_count(m, n, i, q) for i in range(tau + 1))


def bmd_radius(d: int) -> int:
    if d < 1:
        raise BadParameters(f"need d >= 1, got {d}")
    return (d - 1) // 2


def _check_code_params(q: int, m: int, n: int, k: int, tau: int) -> int:
    # the formulas hold for any prime power q, not just the primes the fields support
    if q < 2 or len(prime_factors(q)) != 1:
        raise BadParameters(f"q must be a prime power, got {q}")
    if not 1 <= k <= n <= m:
        raise BadParameters(f"need 1 <= k <= n <= m, got k={k}, n={n}, m={m}")
    d = n - k + 1
    if tau < 0:
        raise BadParameters(f"need tau >= 0, got {tau}")
    if tau >= d:
        raise RadiusTooLarge(f"tau={tau} must be smaller than d={d}")
    return d


@dataclass(frozen=True)
class LowerBound:
    rational: Fraction  # [n, n-tau]_q / q^{m(n-tau-k)}
    exact: int  # ceiling of rational
    exponent: int  # m + tau(m+n) - tau^2 - m d
    exp_rational: Fraction  # q^exponent
    exp_form: int  # q^exponent, or 0 when the exponent is negative
    trivial: bool  # exponent < 0


@dataclass(frozen=True)
class UpperBound:
    rational: Fraction  # the sum over t before flooring
    paper_exact: int
    safe: int
    middle: int  # 4 * sum_t q^{(2t-d+1)(n-t)}
    simplified: int
    terms: tuple[tuple[int, Fraction], ...]  # (t, [n, 2t+1-d]/[t, 2t+1-d])


def lower_bound(q: int, m: int, n: int, k: int, tau: int) -> LowerBound:
    d = _check_code_params(q, m, n, k, tau)
    rational = Fraction(gaussian_binomial(n, n - tau, q), q ** (m * (n - tau - k)))
    e = m + tau * (m + n) - tau * tau - m * d
    exp_rational = Fraction(q) ** e
    return LowerBound(
        rational=rational,
        exact=math.ceil(rational),
        exponent=e,
        exp_rational=exp_rational,
        exp_form=q**e if e >= 0 else 0,
        trivial=e < 0,
    )


def upper_bound(q: int, m: int, n: int, k: int, tau: int) -> UpperBound:
    d = _check_code_params(q, m, n, k, tau)
    b = bmd_radius(d)
    terms = []
    middle = 0
    for t in range(b + 1, tau + 1):
        s = 2 * t + 1 - d
        terms.append((t, Fraction(gaussian_binomial(n, s, q), gaussian_binomial(t, s, q))))
        middle += 4 * q ** (s * (n - t))
    rational = sum((x for _, x in terms), Fraction(0))
    paper_exact = math.floor(rational)
    if tau > b:
        simplified = 4 * (tau - b) * q ** ((2 * tau - d + 1) * (n - b - 1))
    else:
        simplified = 0
    return UpperBound(
        rational=rational,
        paper_exact=paper_exact,
        safe=paper_exact + 1,
        middle=middle,
        simplified=simplified,
        terms=tuple(terms),
    )


def augot_loidreau_special(q: int, n: int, d: int) -> int:
    """(q^n - 1) / (q^{d/2} - 1), floored; defined for even d."""
    if d < 2 or d % 2:
        raise BadParameters(f"need an even d >= 2, got {d}")
    if d > n:
        raise BadParameters(f"need d <= n, got d={d}, n={n}")
    return (q**n - 1) // (q ** (d // 2) - 1)


def tau_lb(n: int, d: int, eps: float) -> tuple[float, int]:
    """Radius n - sqrt(n(n - d + eps)) and its ceiling."""
    if not 0 <= eps < 1:
        raise BadParameters(f"need 0 <= eps < 1, got {eps}")
    if not 1 <= d <= n:
        raise BadParameters(f"need 1 <= d <= n, got d={d}, n={n}")
    value = n - math.sqrt(n * (n - d + eps))
    nearest = round(value)
    ceil = nearest if abs(value - nearest) < 1e-9 else math.ceil(value)
    return value, ceil


def johnson_radius(n: int, d: int) -> tuple[float, int]:
    return tau_lb(n, d, 0.0)


def exponent_floor(x: int, q: int) -> int:
    """Largest e with q^e <= x, for x >= 1."""
    if x < 1:
        raise BadParameters("exponent_floor needs x >= 1")
    e = int((x.bit_length() - 1) / math.log2(q))
    while q ** (e + 1) <= x:
        e += 1
    while q**e > x:
        e -= 1
    return e


def huge_form(x: int, q: int) -> dict | None:
    """(base, exponent) rendering for integers wider than HUGE_BITS bits."""
    if x.bit_length() <= HUGE_BITS:
        return None
    e = exponent_floor(x, q)
    return {"base": q, "exponent": e, "exact_power": q**e == x}


@dataclass
class BoundReport:
    q: int
    m: int
    n: int
    k: int
    d: int
    tau: int
    eps: float
    bmd_radius: int
    johnson_radius: float
    johnson_ceil: int
    tau_lb: float
    tau_lb_ceil: int
    lower_exact: int
    lower_rational: Fraction
    lower_exponent: int
    lower_exp_form: int
    lower_trivial: bool
    upper_exact_paper: int
    upper_exact_safe: int
    upper_middle: int
    upper_simplified: int
    al_special: int | None = None
    huge: dict = field(default_factory=dict)

    def check(self) -> None:
        if not self.lower_trivial and self.lower_exact < self.lower_exp_form:
            raise AssertionError("lower bound chain broken")
        if self.upper_exact_safe != self.upper_exact_paper + 1:
            raise AssertionError("safe upper bound must be paper bound + 1")
        if self.lower_exact > self.upper_exact_safe:
            raise AssertionError(
                f"bounds crossed at {self.q, self.m, self.n, self.k, self.tau}: "
                f"{self.lower_exact} > {self.upper_exact_safe}"
            )

    def to_dict(self) -> dict:
        """JSON-ready dict; integers become decimal strings."""
        out = {}
        for key, val in asdict(self).items():
            if key == "huge":
                continue
            if isinstance(val, bool) or val is None or isinstance(val, float):
                out[key] = val
            elif isinstance(val, Fraction):
                out[key] = f"{val.numerator}/{val.denominator}" if val.denominator != 1 else str(val.numerator)
            elif isinstance(val, int):
                out[key] = str(val)
            else:
                out[key] = val
        if self.huge:
            out["huge"] = self.huge
        return out


def bound_report(q: int, m: int, n: int, k: int, tau: int, eps: float = 0.0) -> BoundReport:
    d = _check_code_params(q, m, n, k, tau)
    lo = lower_bound(q, m, n, k, tau)
    up = upper_bound(q, m, n, k, tau)
    jr, jc = johnson_radius(n, d)
    tl, tc = tau_lb(n, d, eps)
    al = augot_loidreau_special(q, n, d) if d % 2 == 0 and 2 * tau == d else None
    report = BoundReport(
        q=q, m=m, n=n, k=k, d=d, tau=tau, eps=eps,
        bmd_radius=bmd_radius(d),
        johnson_radius=jr, johnson_ceil=jc,
        tau_lb=tl, tau_lb_ceil=tc,
        lower_exact=lo.exact, lower_rational=lo.rational,
        lower_exponent=lo.exponent, lower_exp_form=lo.exp_form, lower_trivial=lo.trivial,
        upper_exact_paper=up.paper_exact, upper_exact_safe=up.safe,
        upper_middle=up.middle, upper_simplified=up.simplified,
        al_special=al,
    )
    for key in ("lower_exact", "lower_exp_form", "upper_exact_paper", "upper_exact_safe", "upper_middle", "upper_simplified"):
        h = huge_form(getattr(report, key), q)
        if h:
            report.huge[key] = h
    report.check()
    return report
