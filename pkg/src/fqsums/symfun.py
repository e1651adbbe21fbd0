"""Symmetric functions with integer coefficients in the elementary basis.

A partition is a weakly decreasing tuple of positive ints.  ``ELinComb``
maps partitions lambda to the integer coefficient of e_lambda, the product
of the e_{lambda_i}.  Multiplication only ever appends parts, which is what
makes restricting to an allowed set of parts sound at every step.
"""

from __future__ import annotations

import functools
from typing import Iterable, Iterator

from fqsums.field import FieldDesc, FqElem

Partition = tuple

UNRESTRICTED_MAX_DEGREE = 40


def partition(parts: Iterable[int]) -> Partition:
    parts = tuple(sorted(parts, reverse=True))
    if any(x <= 0 for x in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    return parts


def partitions(n: int, allowed: Iterable[int] | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse-lexicographic order, optionally with restricted parts."""
    if n < 0:
        raise ValueError("n must be >= 0")
    sizes = sorted(set(range(1, n + 1)) if allowed is None else {a for a in allowed if 0 < a <= n}, reverse=True)

    def rec(rem: int, idx: int, prefix: tuple) -> Iterator[Partition]:
        if rem == 0:
            yield prefix
            return
        for i in range(idx, len(sizes)):
            s = sizes[i]
            if s <= rem:
                yield from rec(rem - s, i, prefix + (s,))

    yield from rec(n, 0, ())


def admissible_parts(q: int, n: int) -> frozenset[int]:
    """{(q^j - 1)/(q - 1) : j >= 1} intersected with [1, n]."""
    out = set()
    j = 1
    while True:
        m = (q**j - 1) // (q - 1)
        if m > n:
            return frozenset(out)
        out.add(m)
        j += 1


class ELinComb:
    """Homogeneous integer combination of the e_lambda."""

    __slots__ = ("terms", "degree")

    def __init__(self, terms: dict[Partition, int] | None = None, degree: int | None = None):
        terms = {lam: c for lam, c in (terms or {}).items() if c}
        degrees = {sum(lam) for lam in terms}
        if len(degrees) > 1:
            raise ValueError(f"inhomogeneous combination, degrees {sorted(degrees)}")
        if degrees:
            (d,) = degrees
            if degree is not None and degree != d:
                raise ValueError(f"declared degree {degree} but terms have degree {d}")
            degree = d
        if degree is None:
            raise ValueError("degree is required for the zero combination")
        self.terms = terms
        self.degree = degree

    @classmethod
    def unit(cls) -> "ELinComb":
        return cls({(): 1}, 0)

    @classmethod
    def e(cls, m: int) -> "ELinComb":
        return cls({(m,): 1}, m) if m else cls.unit()

    def coefficient(self, lam: Iterable[int]) -> int:
        return self.terms.get(partition(lam), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> list[tuple[Partition, int]]:
        """Terms sorted in reverse-lexicographic partition order."""
        return sorted(self.terms.items(), reverse=True)

    def restrict(self, allowed: Iterable[int]) -> "ELinComb":
        allowed = frozenset(allowed)
        return ELinComb({lam: c for lam, c in self.terms.items() if allowed.issuperset(lam)}, self.degree)

    def __eq__(self, other):
        if not isinstance(other, ELinComb):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        body = " + ".join(f"{c}*e{list(lam)}" for lam, c in self.items()) or "0"
        return f"ELinComb(deg={self.degree}: {body})"

    def _same_degree(self, other):
        if other.degree != self.degree and self.terms and other.terms:
            raise ValueError(f"degree mismatch {self.degree} vs {other.degree}")

    def __add__(self, other: "ELinComb") -> "ELinComb":
        self._same_degree(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return ELinComb(out, self.degree if self.terms else other.degree)

    def __neg__(self):
        return ELinComb({lam: -c for lam, c in self.terms.items()}, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ELinComb({lam: c * other for lam, c in self.terms.items()}, self.degree)
        return e_mul(self, other)

    __rmul__ = __mul__

    def exact_div(self, n: int) -> "ELinComb":
        bad = [lam for lam, c in self.terms.items() if c % n]
        if bad:
            raise ArithmeticError(f"coefficient of e{list(bad[0])} is not divisible by {n}")
        return ELinComb({lam: c // n for lam, c in self.terms.items()}, self.degree)

    def __pow__(self, n: int) -> "ELinComb":
        result = ELinComb.unit()
        base = self
        while n:
            if n & 1:
                result = e_mul(result, base)
            n >>= 1
            if n:
                base = e_mul(base, base)
        return result

    def to_json(self) -> list[dict]:
        return [{"parts": list(lam), "coeff": str(c)} for lam, c in self.items()]

    @classmethod
    def from_json(cls, obj: list[dict], degree: int | None = None) -> "ELinComb":
        return cls({partition(t["parts"]): int(t["coeff"]) for t in obj}, degree)


def _merge(a: Partition, b: Partition) -> Partition:
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] >= b[j]:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def e_mul(a: ELinComb, b: ELinComb, allowed: frozenset[int] | None = None) -> ELinComb:
    """Bilinear extension of e_lambda * e_mu = e_(lambda union mu)."""
    out: dict[Partition, int] = {}
    for la, ca in a.terms.items():
        if allowed is not None and not allowed.issuperset(la):
            continue
        for lb, cb in b.terms.items():
            if allowed is not None and not allowed.issuperset(lb):
                continue
            lam = _merge(la, lb)
            out[lam] = out.get(lam, 0) + ca * cb
    return ELinComb(out, a.degree + b.degree)


def _key(allowed) -> frozenset[int] | None:
    return None if allowed is None else frozenset(allowed)


def power_sum_in_e(n: int, allowed: Iterable[int] | None = None) -> ELinComb:
    """p_n in the e-basis via Newton's identity.

    p_n = (-1)^(n-1) n e_n + sum_{i=1}^{n-1} (-1)^(i-1) e_i p_{n-i}.
    With ``allowed``, monomials using any other part are dropped as soon as
    they appear; the result is the restriction of the full expansion.
    """
    if n < 1:
        raise ValueError("power sums start at n = 1")
    allowed = _key(allowed)
    if allowed is None and n > UNRESTRICTED_MAX_DEGREE:
        raise ValueError(f"unrestricted expansions are capped at degree {UNRESTRICTED_MAX_DEGREE}")
    return _power_sum(n, allowed)


@functools.lru_cache(maxsize=512)
def _power_sum(n: int, allowed: frozenset[int] | None) -> ELinComb:
    ok = (lambda i: True) if allowed is None else allowed.__contains__
    out: dict[Partition, int] = {}
    if ok(n):
        out[(n,)] = (-1) ** (n - 1) * n
    for i in range(1, n):
        if not ok(i):
            continue
        sign = 1 if i % 2 else -1
        for lam, c in _power_sum(n - i, allowed).terms.items():
            key = _merge((i,), lam)
            out[key] = out.get(key, 0) + sign * c
    return ELinComb(out, n)


def gp_expansion(p: int, l: int, allowed: Iterable[int] | None = None) -> ELinComb:
    """g_p(X_1^l, X_2^l, ...) = (p_l^p - p_{pl}) / p in the e-basis.

    The division by p happens on the integer coefficients; a coefficient
    that is not divisible by p raises ArithmeticError.
    """
    if l < 1:
        raise ValueError("l must be positive")
    allowed = _key(allowed)
    if allowed is None and p * l > UNRESTRICTED_MAX_DEGREE:
        raise ValueError(f"unrestricted expansions are capped at degree {UNRESTRICTED_MAX_DEGREE}")
    return _gp_expansion(p, l, allowed)


@functools.lru_cache(maxsize=128)
def _gp_expansion(p: int, l: int, allowed: frozenset[int] | None) -> ELinComb:
    pl = _power_sum(l, allowed)
    diff = pl**p - _power_sum(p * l, allowed)
    return diff.exact_div(p)


def elementary_values(F: FieldDesc, points: Iterable[FqElem], mmax: int) -> list[FqElem]:
    """[e_0, ..., e_mmax] of the point multiset, from prod (1 + x Z)."""
    es = [1] + [0] * mmax
    for x in points:
        for m in range(mmax, 0, -1):
            es[m] = F.add(es[m], F.mul(x, es[m - 1]))
    return es


def evaluate_on_points(a: ELinComb, points: Iterable[FqElem], F: FieldDesc) -> FqElem:
    """Evaluate the symmetric function at concrete field elements."""
    points = list(points)
    top = max((lam[0] for lam in a.terms if lam), default=0)
    es = elementary_values(F, points, top)
    total = 0
    for lam, c in a.terms.items():
        term = F.from_int(c)
        for part in lam:
            term = F.mul(term, es[part])
        total = F.add(total, term)
    return total
