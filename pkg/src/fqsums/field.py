"""Finite fields F_q, q = p^e.

Elements are plain ints that pack the coordinate vector in base p:
``a = c0 + c1*p + ... + c_{e-1}*p^(e-1)`` where ``(c0, ..., c_{e-1})`` are the
coordinates with respect to ``1, g, ..., g^(e-1)`` and ``g`` is a root of the
defining modulus.  For prime fields this is just the residue.
"""

from __future__ import annotations

import functools
import itertools
from typing import Sequence

FqElem = int

MAX_ORDER = 1 << 20
MAX_EXT_DEGREE = 8


class FieldError(ValueError):
    pass


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
    """Distinct prime factors of ``n`` in increasing order."""
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


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**e``; raise FieldError if q is not a prime power."""
    if q < 2:
        raise FieldError(f"q={q} is not a prime power")
    p = prime_factors(q)
    if len(p) != 1:
        raise FieldError(f"q={q} is not a prime power")
    p = p[0]
    e = 0
    while q > 1:
        q //= p
        e += 1
    return p, e


# -- polynomials over F_p as coefficient lists (constant first) -------------

def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _fp_trim(a[:db])


def _fp_is_irreducible(f: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= deg/2."""
    d = len(f) - 1
    for m in range(1, d // 2 + 1):
        for low in itertools.product(range(p), repeat=m):
            if not _fp_rem(f, list(low) + [1], p):
                return False
    return True


def least_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree e over F_p.

    Coefficients are compared from the constant term upward.
    """
    for low in itertools.product(range(p), repeat=e):
        f = list(low) + [1]
        if _fp_is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("unreachable: irreducibles exist in every degree")


class FieldDesc:
    """The field F_q together with its deterministic modulus.

    Multiplication in extension fields goes through exp/log tables that are
    built lazily from the modulus; ``mul_reference`` is the table-free
    definition and is what the tables are derived from.
    """

    __slots__ = ("p", "e", "q", "modulus", "_tables", "_ctx")

    def __init__(self, p: int, e: int, modulus: Sequence[int]):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = tuple(modulus)
        self._tables = None
        self._ctx = None

    def __repr__(self) -> str:
        return f"FieldDesc(p={self.p}, e={self.e}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        if not isinstance(other, FieldDesc):
            return NotImplemented
        return (self.p, self.e) == (other.p, other.e)

    def __hash__(self):
        return hash((self.p, self.e))

    def __reduce__(self):
        return (fq_build, (self.p, self.e))

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    # -- coordinates ------------------------------------------------------

    def coords(self, a: FqElem) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def from_coords(self, cs: Sequence[int]) -> FqElem:
        if len(cs) != self.e or any(not 0 <= c < self.p for c in cs):
            raise FieldError(f"bad coordinate vector {list(cs)} for F_{self.q}")
        a = 0
        for c in reversed(cs):
            a = a * self.p + c
        return a

    def from_int(self, n: int) -> FqElem:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def check(self, a: FqElem) -> FqElem:
        if not 0 <= a < self.q:
            raise FieldError(f"{a} is not an element of F_{self.q}")
        return a

    # -- arithmetic -------------------------------------------------------

    def add(self, a: FqElem, b: FqElem) -> FqElem:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        out, scale = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += (x + y) % p * scale
            scale *= p
        return out

    def neg(self, a: FqElem) -> FqElem:
        if self.e == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.from_coords([-c % self.p for c in self.coords(a)])

    def sub(self, a: FqElem, b: FqElem) -> FqElem:
        return self.add(a, self.neg(b))

    def mul(self, a: FqElem, b: FqElem) -> FqElem:
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        exp, log, _ = self.tables
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def mul_reference(self, a: FqElem, b: FqElem) -> FqElem:
        """Multiply coordinate polynomials and reduce by the modulus."""
        if self.e == 1:
            return a * b % self.p
        p, e = self.p, self.e
        x, y = self.coords(a), self.coords(b)
        prod = [0] * (2 * e - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] += xi * yj
        prod = [c % p for c in prod]
        return self.from_coords(_pad(_fp_rem(prod, self.modulus, p), e))

    def inv(self, a: FqElem) -> FqElem:
        """Inverse by extended Euclid on the coordinate polynomial."""
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        p = self.p
        if self.e == 1:
            return pow(a, -1, p)
        r0, r1 = list(self.modulus), _fp_trim(list(self.coords(a)))
        s0, s1 = [], [1]
        while len(r1) > 1:
            quo, rem = _fp_divmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _fp_sub(s0, _fp_mul(quo, s1, p), p)
        c = pow(r1[0], -1, p)
        return self.from_coords(_pad([x * c % p for x in s1], self.e))

    def div(self, a: FqElem, b: FqElem) -> FqElem:
        return self.mul(a, self.inv(b))

    def pow(self, a: FqElem, n: int) -> FqElem:
        if n < 0:
            a, n = self.inv(a), -n
        if self.e == 1:
            return pow(a, n, self.p)
        result = 1
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    # -- tables -----------------------------------------------------------

    @property
    def tables(self) -> tuple[list[int], list[int], list[int]]:
        """(exp, log, zech) for the multiplicative group; extension fields only."""
        if self._tables is None:
            self._tables = _build_tables(self)
        return self._tables

    @property
    def ctx(self):
        """Kernel context for the active backend."""
        if self._ctx is None:
            from fqsums import kernels

            self._ctx = kernels.make_ctx(self)
        return self._ctx

    # -- rendering --------------------------------------------------------

    def text(self, a: FqElem) -> str:
        if self.e == 1:
            return str(a)
        terms = []
        for i, c in reversed(list(enumerate(self.coords(a)))):
            if not c:
                continue
            mono = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    def elem_to_json(self, a: FqElem) -> list[int]:
        return list(self.coords(a))

    def elem_from_json(self, cs: Sequence[int]) -> FqElem:
        return self.from_coords(cs)


def _pad(a: list[int], n: int) -> list[int]:
    return a + [0] * (n - len(a))


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _fp_trim([c % p for c in out])


def _fp_sub(a, b, p):
    n = max(len(a), len(b))
    a, b = _pad(list(a), n), _pad(list(b), n)
    return _fp_trim([(x - y) % p for x, y in zip(a, b)])


def _fp_divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    quo = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        quo[i - db] = c
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _fp_trim(quo), _fp_trim(a[:db])


def _build_tables(F: FieldDesc):
    if F.e == 1:
        raise FieldError("prime fields do not use tables")
    n = F.q - 1
    orders = [n // r for r in prime_factors(n)]

    def power(a, k):
        result, base = 1, a
        while k:
            if k & 1:
                result = F.mul_reference(result, base)
            base = F.mul_reference(base, base)
            k >>= 1
        return result

    gen = next(g for g in range(2, F.q) if all(power(g, m) != 1 for m in orders))
    exp = [0] * n
    log = [0] * F.q
    x = 1
    for i in range(n):
        exp[i] = x
        log[x] = i
        x = F.mul_reference(x, gen)
    # zech[d] = log(1 + g^d), or -1 where 1 + g^d = 0
    zech = [0] * n
    p = F.p
    for d in range(n):
        a = exp[d]
        c0 = a % p
        s = a - c0 + (c0 + 1) % p
        zech[d] = log[s] if s else -1
    log[0] = -1
    return exp, log, zech


@functools.lru_cache(maxsize=None)
def fq_build(p: int, e: int) -> FieldDesc:
    """Deterministic description of F_{p^e}."""
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    if not 1 <= e <= MAX_EXT_DEGREE:
        raise FieldError(f"extension degree e={e} outside 1..{MAX_EXT_DEGREE}")
    if p**e > MAX_ORDER:
        raise FieldError(f"field order {p}^{e} exceeds 2^20")
    return FieldDesc(p, e, least_irreducible(p, e))


def field_of_order(q: int) -> FieldDesc:
    return fq_build(*prime_power(q))


def field_from_json(obj: dict) -> FieldDesc:
    F = fq_build(int(obj["p"]), int(obj["e"]))
    if "modulus" in obj and tuple(obj["modulus"]) != F.modulus:
        raise FieldError(f"modulus {obj['modulus']} does not match the canonical one")
    return F


def units_power_sum(F: FieldDesc, m: int) -> FqElem:
    """Sum of a^m over the unit group, by direct summation."""
    total = 0
    for a in F.units():
        total = F.add(total, F.pow(a, m))
    return total
