"""Arithmetic in F_p and F_{p^m} for prime p.

Elements of F_{p^m} are stored as their polynomial-basis coordinates packed
into a base-p integer, constant term least significant. That integer is also
the canonical ordering key and the serialized form of an element.
"""

from __future__ import annotations

import itertools
import json
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from ranklist.errors import BadParameters, DivisionByZero, NonDivisibleDegrees

# fields up to this order get log/antilog tables
TABLE_LIMIT = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# --------------------------------------------------------------------------
# polynomials over F_p as ascending coefficient lists


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _poly_mod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _poly_mod(prod, f, p)


def _poly_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    f = _trim([c % p for c in poly])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]

    def x_pow_p_pow(j):
        h = x
        for _ in range(j):
            h = _poly_powmod(h, p, f, p)
        return h

    if _poly_sub(x_pow_p_pow(m), x, p):
        return False
    for r in prime_factors(m):
        g = _poly_gcd(f, _poly_sub(x_pow_p_pow(m // r), x, p), p)
        if len(g) != 1:
            return False
    return True


def _has_root(poly: Sequence[int], p: int) -> bool:
    for a in range(p):
        v = 0
        for c in reversed(poly):
            v = (v * a + c) % p
        if v == 0:
            return True
    return False


def find_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over F_p.

    Coefficient tuples are compared ascending from the constant term. The
    result is returned as an ascending coefficient tuple of length m + 1.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise BadParameters(f"p must be prime, got {p!r}")
    if not isinstance(m, int) or m < 1:
        raise BadParameters(f"m must be a positive integer, got {m!r}")
    for low in itertools.product(range(p), repeat=m):
        poly = low + (1,)
        if m > 1 and _has_root(poly, p):
            continue
        if is_irreducible(poly, p):
            return poly
    raise AssertionError("unreachable: irreducibles exist in every degree")


# --------------------------------------------------------------------------


class FieldContext:
    """The field F_{p^m} = F_p[x] / (modulus).

    Low-level arithmetic works on integer element values; `FieldElement`
    wraps those for the public API.
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not isinstance(p, int) or not is_prime(p):
            raise BadParameters(f"p must be prime, got {p!r}")
        if not isinstance(m, int) or m < 1:
            raise BadParameters(f"m must be a positive integer, got {m!r}")
        if modulus is None:
            modulus = find_irreducible(p, m)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise BadParameters(f"modulus must be monic of degree {m}: {modulus}")
        if not is_irreducible(modulus, p):
            raise BadParameters(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.modulus = modulus
        self.order = p**m
        self._place = [p**i for i in range(m + 1)]
        # x^m = -(lower terms), as an element value
        self._xm = self.from_coeffs([(-c) % p for c in modulus[:-1]])

    @classmethod
    def from_spec(cls, spec: dict) -> FieldContext:
        return cls(int(spec["p"]), int(spec["m"]), spec.get("modulus"))

    @classmethod
    def load(cls, path: str | Path) -> FieldContext:
        return cls.from_spec(json.loads(Path(path).read_text()))

    def to_spec(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    def __eq__(self, other):
        return isinstance(other, FieldContext) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    @property
    def _key(self):
        return (self.p, self.m, self.modulus)

    def __repr__(self):
        return f"FieldContext(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    # -- coordinates ------------------------------------------------------

    def to_coeffs(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def from_coeffs(self, coeffs: Iterable[int]) -> int:
        v = 0
        for i, c in enumerate(coeffs):
            v += (c % self.p) * self._place[i]
        return v

    def check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise BadParameters(f"{a} is not an element value of F_{self.p}^{self.m}")
        return a

    # -- additive structure -----------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        v, place = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            v += ((x + y) % p) * place
            place *= p
        return v

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.from_coeffs((-c) % self.p for c in self.to_coeffs(a))

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def scalar(self, lam: int, a: int) -> int:
        """Multiply a by the prime-field scalar lam."""
        lam %= self.p
        if lam == 0:
            return 0
        if lam == 1:
            return a
        return self.from_coeffs(lam * c for c in self.to_coeffs(a))

    # -- multiplicative structure -----------------------------------------

    def _mul_slow(self, a: int, b: int) -> int:
        if self.p == 2:
            # carry-less multiply with reduction
            m, red = self.m, self.from_coeffs(self.modulus)
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a >> m & 1:
                    a ^= red
            return r
        res = _poly_mulmod(self.to_coeffs(a), self.to_coeffs(b), self.modulus, self.p)
        return self.from_coeffs(res)

    def _pow_slow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_slow(r, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return r

    @cached_property
    def primitive_value(self) -> int:
        """Smallest element value generating the multiplicative group."""
        n = self.order - 1
        if n == 1:
            return 1
        factors = prime_factors(n)
        for g in range(2, self.order):
            if all(self._pow_slow(g, n // r) != 1 for r in factors):
                return g
        raise AssertionError("unreachable: F_q^* is cyclic")

    @cached_property
    def _tables(self):
        n = self.order - 1
        exp = [0] * (2 * n)
        log = [0] * self.order
        g, x = self.primitive_value, 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, g)
        exp[n:] = exp[:n]
        return exp, log

    @property
    def has_tables(self) -> bool:
        return self.order <= TABLE_LIMIT

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.order <= TABLE_LIMIT:
            exp, log = self._tables
            return exp[log[a] + log[b]]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.order <= TABLE_LIMIT:
            exp, log = self._tables
            return exp[(self.order - 1 - log[a]) % (self.order - 1)]
        return self._pow_slow(a, self.order - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.order <= TABLE_LIMIT:
            exp, log = self._tables
            return exp[log[a] * e % (self.order - 1)]
        return self._pow_slow(a, e % (self.order - 1))

    def frob(self, a: int, i: int = 1) -> int:
        """a^(p^i), i reduced mod m."""
        i %= self.m
        if i == 0 or a == 0:
            return a
        if self.order <= TABLE_LIMIT:
            exp, log = self._tables
            return exp[log[a] * self._place[i] % (self.order - 1)]
        return self._pow_slow(a, self._place[i])

    # -- element wrappers -------------------------------------------------

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise BadParameters("element belongs to a different field")
            return value
        return FieldElement(self, self.check(int(value)))

    def element(self, coeffs: Sequence[int]) -> FieldElement:
        if len(coeffs) > self.m:
            raise BadParameters(f"at most {self.m} coordinates expected")
        return FieldElement(self, self.from_coeffs(coeffs))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        """The class of x, i.e. the generator of the polynomial basis."""
        return FieldElement(self, self.from_coeffs([0, 1]) if self.m > 1 else self._xm)

    def basis(self) -> list[FieldElement]:
        """Polynomial basis 1, x, ..., x^(m-1) over F_p."""
        return [FieldElement(self, self._place[i]) for i in range(self.m)]

    def enumerate_elements(self) -> Iterator[FieldElement]:
        for v in range(self.order):
            yield FieldElement(self, v)

    def subfield_values(self, n: int) -> list[int]:
        """Values fixed by a -> a^(p^n), in canonical order."""
        return [a for a in range(self.order) if self.frob(a, n) == a]


class FieldElement:
    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldContext, value: int):
        self.ctx = ctx
        self.value = value

    @property
    def coeffs(self) -> list[int]:
        return self.ctx.to_coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise BadParameters("elements of different fields")
            return other.value
        if isinstance(other, int):
            return other % self.ctx.p
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.sub(b, self.value))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldElement(self.ctx, self.ctx.scalar(other, self.value))
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.mul(self.value, b))

    __rmul__ = __mul__

    def inv(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.mul(self.value, self.ctx.inv(b)))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.value, e))

    def frobenius(self, i: int = 1) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.frob(self.value, i))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.value == other.value and self.ctx == other.ctx
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.value))

    def __lt__(self, other: FieldElement):
        return self.value < other.value

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FieldElement({self.value}, F_{self.ctx.p}^{self.ctx.m})"


# module-level aliases for the operation names used in docs and tests


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inv()


def frobenius(a: FieldElement, i: int) -> FieldElement:
    return a.frobenius(i)


def enumerate_elements(ctx: FieldContext) -> Iterator[FieldElement]:
    return ctx.enumerate_elements()


class SubfieldEmbedding:
    """F_{p^n} -> F_{p^m} for n | m, sending the source's x to a fixed root
    of the source modulus inside the target."""

    def __init__(self, source: FieldContext, target: FieldContext, root: int):
        self.source = source
        self.target = target
        self.root = root
        basis = [1]
        for _ in range(1, source.m):
            basis.append(target.mul(basis[-1], root))
        self.basis_values = tuple(basis)

    @property
    def n(self) -> int:
        return self.source.m

    @property
    def image_basis(self) -> list[FieldElement]:
        return [FieldElement(self.target, v) for v in self.basis_values]

    def map_coeffs(self, coeffs: Sequence[int]) -> int:
        """Target value of the source element with the given coordinates."""
        t = self.target
        v = 0
        for c, b in zip(coeffs, self.basis_values):
            if c:
                v = t.add(v, t.scalar(c, b))
        return v

    def __call__(self, a) -> FieldElement:
        a = self.source(a)
        return FieldElement(self.target, self.map_coeffs(a.coeffs))

    def image_values(self) -> list[int]:
        return sorted(self.map_coeffs(self.source.to_coeffs(v)) for v in range(self.source.order))

    def __repr__(self):
        return f"SubfieldEmbedding(F_{self.source.p}^{self.n} -> F_{self.target.p}^{self.target.m}, root={self.root})"


def embed(source: FieldContext, target: FieldContext) -> SubfieldEmbedding:
    if source.p != target.p:
        raise BadParameters("source and target have different characteristic")
    if target.m % source.m:
        raise NonDivisibleDegrees(f"{source.m} does not divide {target.m}")
    if source == target:
        return SubfieldEmbedding(source, target, source.gen.value)
    mod = source.modulus
    for a in range(target.order):
        # Horner evaluation of the source modulus at a
        v = 0
        for c in reversed(mod):
            v = target.add(target.mul(v, a), c)
        if v == 0:
            return SubfieldEmbedding(source, target, a)
    raise AssertionError("unreachable: an irreducible of degree n | m splits in F_{p^m}")
