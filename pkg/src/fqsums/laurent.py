"""Truncated Laurent series in u = 1/T with absolute precision.

A ``USeries`` knows the coefficients of u^v, ..., u^(N-1) exactly and
nothing about exponents >= N.
"""

from __future__ import annotations

from typing import Sequence

from fqsums import kernels
from fqsums.field import FieldDesc, FieldError, FqElem, field_from_json
from fqsums.polyring import Poly
from fqsums.ratfun import RatFun


class PrecisionError(ArithmeticError):
    pass


class USeries:
    __slots__ = ("field", "v", "N", "coeffs")

    def __init__(self, field: FieldDesc, v: int, coeffs: Sequence[FqElem], N: int | None = None):
        coeffs = tuple(coeffs)
        if N is None:
            N = v + len(coeffs)
        if len(coeffs) != N - v:
            raise ValueError(f"need {N - v} coefficients for exponents {v}..{N - 1}, got {len(coeffs)}")
        if N <= v:
            raise ValueError("precision N must exceed the starting exponent v")
        self.field = field
        self.v = v
        self.N = N
        self.coeffs = coeffs

    @classmethod
    def zero(cls, F: FieldDesc, N: int, v: int | None = None) -> "USeries":
        v = min(0, N - 1) if v is None else v
        return cls(F, v, [0] * (N - v), N)

    @classmethod
    def from_poly_in_u(cls, F: FieldDesc, coeffs: Sequence[FqElem], N: int, v: int = 0) -> "USeries":
        """u^v * sum coeffs[i] u^i, truncated to precision N."""
        n = N - v
        cs = list(coeffs[:n]) + [0] * (n - len(coeffs))
        return cls(F, v, cs, N)

    # -- inspection ---------------------------------------------------------

    def coefficient(self, i: int) -> FqElem:
        if i >= self.N:
            raise PrecisionError(f"coefficient of u^{i} is beyond precision {self.N}")
        if i < self.v:
            return 0
        return self.coeffs[i - self.v]

    def valuation(self) -> int:
        """First exponent with a nonzero coefficient; N if none is known."""
        for i, c in enumerate(self.coeffs):
            if c:
                return self.v + i
        return self.N

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def normalized(self) -> "USeries":
        """Raise v past leading zeros (keeps at least one coefficient)."""
        val = min(self.valuation(), self.N - 1)
        if val == self.v:
            return self
        return USeries(self.field, val, self.coeffs[val - self.v:], self.N)

    def truncate(self, N: int) -> "USeries":
        if N >= self.N:
            return self
        if N <= self.v:
            return USeries.zero(self.field, N, N - 1)
        return USeries(self.field, self.v, self.coeffs[: N - self.v], N)

    def window(self, lo: int, hi: int) -> list[FqElem]:
        return [self.coefficient(i) for i in range(lo, hi)]

    # -- comparison ---------------------------------------------------------

    def first_mismatch(self, other: "USeries") -> int | None:
        """Lowest exponent below the common precision where the two differ."""
        self._check(other)
        hi = min(self.N, other.N)
        for i in range(min(self.v, other.v), hi):
            if self.coefficient(i) != other.coefficient(i):
                return i
        return None

    def agrees(self, other: "USeries") -> bool:
        return self.first_mismatch(other) is None

    __eq__ = agrees
    __hash__ = None

    def identical(self, other: "USeries") -> bool:
        """Agreement plus equal precision."""
        return self.N == other.N and self.agrees(other)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, USeries):
            raise TypeError(f"expected USeries, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldError("series over different fields")

    def __add__(self, other: "USeries") -> "USeries":
        self._check(other)
        N = min(self.N, other.N)
        v = min(self.v, other.v, N - 1)
        add = self.field.add
        cs = [add(self.coefficient(i), other.coefficient(i)) for i in range(v, N)]
        return USeries(self.field, v, cs, N)

    def __neg__(self):
        neg = self.field.neg
        return USeries(self.field, self.v, [neg(c) for c in self.coeffs], self.N)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: FqElem) -> "USeries":
        mul = self.field.mul
        return USeries(self.field, self.v, [mul(x, c) for x in self.coeffs], self.N)

    def shift(self, s: int) -> "USeries":
        """Multiply by u^s."""
        return USeries(self.field, self.v + s, self.coeffs, self.N + s)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(self.field.from_int(other))
        self._check(other)
        a, b = self.normalized(), other.normalized()
        va, vb = a.valuation(), b.valuation()
        N = min(a.N + vb, b.N + va)
        v = va + vb
        if a.is_zero() or b.is_zero() or v >= N:
            return USeries.zero(self.field, N)
        n = N - v
        cs = kernels.series_mul(self.field.ctx, list(a.coeffs), list(b.coeffs), n)
        return USeries(self.field, v, cs, N)

    __rmul__ = __mul__

    def invert(self) -> "USeries":
        a = self.normalized()
        if a.is_zero():
            raise ZeroDivisionError("series is zero within its precision")
        v = a.v
        n = a.N - v
        cs = kernels.series_div(self.field.ctx, [1], list(a.coeffs), n)
        return USeries(self.field, -v, cs, a.N - 2 * v)

    def __truediv__(self, other: "USeries") -> "USeries":
        self._check(other)
        b = other.normalized()
        if b.is_zero():
            raise ZeroDivisionError("series is zero within its precision")
        a = self.normalized()
        va, vb = a.valuation(), b.v
        N = min(a.N - vb, b.N - 2 * vb + va)
        v = va - vb
        if a.is_zero() or v >= N:
            return USeries.zero(self.field, N)
        cs = kernels.series_div(self.field.ctx, list(a.coeffs), list(b.coeffs), N - v)
        return USeries(self.field, v, cs, N)

    def __pow__(self, n: int) -> "USeries":
        if n < 0:
            return self.invert() ** (-n)
        a = self.normalized()
        va = a.valuation()
        if n == 0:
            return USeries(self.field, 0, [1], a.N - va)
        if a.is_zero():
            return USeries.zero(self.field, a.N + (n - 1) * va)
        # precision of a^n is N + (n - 1) * v by the product rule
        N = a.N + (n - 1) * va
        cs = kernels.series_pow(self.field.ctx, list(a.coeffs), n, N - n * va)
        return USeries(self.field, n * va, cs, N)

    # -- rendering ----------------------------------------------------------

    def text(self) -> str:
        F = self.field
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.v + i
            mono = "" if e == 0 else ("u" if e == 1 else f"u^{e}")
            ctext = F.text(c)
            if "+" in ctext:
                ctext = f"({ctext})"
            if not mono:
                terms.append(ctext)
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{ctext}*{mono}")
        terms.append(f"O(u^{self.N})")
        return " + ".join(terms)

    def __repr__(self):
        return f"USeries({self.text()!r}, q={self.field.q})"

    __str__ = text

    def to_json(self) -> dict:
        F = self.field
        return {
            "field": F.to_json(),
            "v": self.v,
            "N": self.N,
            "coeffs": [F.elem_to_json(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "USeries":
        F = field_from_json(obj["field"])
        return cls(F, int(obj["v"]), [F.elem_from_json(c) for c in obj["coeffs"]], int(obj["N"]))


def expand(r: RatFun, N: int) -> USeries:
    """u-expansion of r, exact through u^(N-1)."""
    F = r.field
    if r.is_zero():
        return USeries.zero(F, N)
    dn, dd = r.num.degree, r.den.degree
    v = dd - dn
    if v >= N:
        return USeries.zero(F, N, N - 1)
    cs = kernels.series_div(F.ctx, r.num.reverse(), r.den.reverse(), N - v)
    return USeries(F, v, cs, N)


def expand_poly(P: Poly, N: int) -> USeries:
    return expand(RatFun(P), N)


def geometric_inverse_power(P: Poly, k: int, N: int) -> USeries:
    """Expansion of 1/(P^k - 1) = sum_{j >= 1} P^(-kj) through u^(N-1)."""
    if P.degree < 1:
        raise ValueError("P must be nonconstant")
    F = P.field
    one = Poly.one(F)
    return expand(RatFun(one, P**k - one), N)
