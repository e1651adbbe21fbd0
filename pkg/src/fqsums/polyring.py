"""The polynomial ring F_q[T]: dense arithmetic, irreducibility, enumeration."""

from __future__ import annotations

import re
from typing import Iterable, Iterator

from fqsums import kernels
from fqsums.field import FieldDesc, FieldError, FqElem, field_from_json


class Poly:
    """Dense polynomial over F_q, constant term first, no trailing zeros.

    ``Poly`` values are immutable.  Integer operands in arithmetic are read
    as integer multiples of 1 (``3 * f`` means f+f+f).
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDesc, coeffs: Iterable[FqElem] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, field: FieldDesc, coeffs: list) -> "Poly":
        # coeffs already trimmed (kernel output)
        obj = object.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def zero(cls, field):
        return cls(field)

    @classmethod
    def one(cls, field):
        return cls(field, [1])

    @classmethod
    def const(cls, field, c: FqElem):
        return cls(field, [c])

    @classmethod
    def T(cls, field):
        return cls(field, [0, 1])

    @classmethod
    def monomial(cls, field, n: int, c: FqElem = 1):
        return cls(field, [0] * n + [c])

    # -- basic properties ---------------------------------------------------

    @property
    def degree(self) -> int | float:
        """Degree; the zero polynomial has degree -inf."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def lc(self) -> FqElem:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> FqElem:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.q, self.coeffs))

    def __repr__(self):
        return f"Poly({self.text()!r}, q={self.field.q})"

    def __str__(self):
        return self.text()

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldError("polynomials over different fields")
            return other
        if isinstance(other, int):
            return Poly(self.field, [self.field.from_int(other)])
        return NotImplemented

    @property
    def _ctx(self):
        return self.field.ctx

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._raw(self.field, kernels.poly_add(self._ctx, list(self.coeffs), list(other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._raw(self.field, kernels.poly_sub(self._ctx, list(self.coeffs), list(other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return Poly._raw(self.field, [self.field.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._raw(self.field, kernels.poly_mul(self._ctx, list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def scale(self, c: FqElem) -> "Poly":
        return Poly._raw(self.field, kernels.poly_scale(self._ctx, list(self.coeffs), c))

    def divrem(self, other: "Poly") -> tuple["Poly", "Poly"]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quo, rem = kernels.poly_divmod(self._ctx, list(self.coeffs), list(other.coeffs))
        return Poly._raw(self.field, quo), Poly._raw(self.field, rem)

    __divmod__ = divrem

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def powmod(self, n: int, modulus: "Poly") -> "Poly":
        if modulus.is_zero():
            raise ZeroDivisionError("powmod with zero modulus")
        out = kernels.poly_powmod(self._ctx, list(self.coeffs), n, list(modulus.coeffs))
        return Poly._raw(self.field, out)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lc))

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd (zero iff both inputs are zero)."""
        other = self._coerce(other)
        return Poly._raw(self.field, kernels.poly_gcd(self._ctx, list(self.coeffs), list(other.coeffs)))

    def xgcd(self, other: "Poly") -> tuple["Poly", "Poly", "Poly"]:
        """(g, s, t) with s*self + t*other = g, g monic."""
        r0, r1 = self, self._coerce(other)
        s0, s1 = Poly.one(self.field), Poly.zero(self.field)
        t0, t1 = s1, s0
        while r1:
            quo, rem = r0.divrem(r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 - quo * s1
            t0, t1 = t1, t0 - quo * t1
        if r0.is_zero():
            return r0, s0, t0
        c = self.field.inv(r0.lc)
        return r0.scale(c), s0.scale(c), t0.scale(c)

    def __call__(self, x: FqElem) -> FqElem:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def compose(self, other: "Poly") -> "Poly":
        """self(other) by Horner."""
        acc = Poly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * other + Poly.const(self.field, c)
        return acc

    def reverse(self, n: int | None = None) -> list[FqElem]:
        """Coefficients of T^n * self(1/T) as a list (constant first)."""
        n = len(self.coeffs) - 1 if n is None else n
        cs = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return cs[n::-1]

    # -- rendering ----------------------------------------------------------

    def text(self, var: str = "T") -> str:
        F = self.field
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            ctext = F.text(c)
            if F.e > 1 and ("+" in ctext):
                ctext = f"({ctext})"
            if not mono:
                terms.append(ctext)
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{ctext}*{mono}")
        return "+".join(terms) if terms else "0"

    def to_json(self) -> dict:
        F = self.field
        return {"field": F.to_json(), "coeffs": [F.elem_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Poly":
        F = field_from_json(obj["field"])
        return cls(F, [F.elem_from_json(c) for c in obj["coeffs"]])


_TERM = re.compile(r"^(?:(\d+)\*?)?(?:([A-Za-z])(?:\^(\d+))?)?$")


def parse_poly(F: FieldDesc, text: str) -> Poly:
    """Parse the prime-field text form, e.g. ``"T^4+2*T^2+1"``."""
    if F.e != 1:
        raise FieldError("text parsing is only supported over prime fields")
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    s = s.replace("-", "+-")
    coeffs: dict[int, int] = {}
    for tok in s.split("+"):
        if not tok:
            continue
        sign = 1
        if tok.startswith("-"):
            sign, tok = -1, tok[1:]
        m = _TERM.match(tok)
        if not m or not (m.group(1) or m.group(2)):
            raise ValueError(f"cannot parse term {tok!r}")
        c = int(m.group(1)) if m.group(1) else 1
        n = 0 if not m.group(2) else (int(m.group(3)) if m.group(3) else 1)
        coeffs[n] = coeffs.get(n, 0) + sign * c
    top = max(coeffs)
    return Poly(F, [coeffs.get(i, 0) % F.p for i in range(top + 1)])


def is_irreducible(f: Poly) -> bool:
    """Rabin's test.

    f of degree d is irreducible iff T^(q^d) = T mod f and
    gcd(T^(q^(d/r)) - T, f) = 1 for every prime r dividing d.
    """
    if f.is_zero() or f.degree < 1:
        raise ValueError("irreducibility needs a polynomial of degree >= 1")
    return kernels.is_irreducible(f.field.ctx, list(f.coeffs))


def monic_coeffs(q: int, d: int, index: int) -> list[int]:
    """Coefficients of the index-th monic polynomial of degree d."""
    cs = []
    for _ in range(d):
        index, c = divmod(index, q)
        cs.append(c)
    cs.append(1)
    return cs


def monic_polys(F: FieldDesc, d: int, start: int = 0, stop: int | None = None) -> Iterator[Poly]:
    """All q^d monic polynomials of degree d; the constant coefficient varies fastest.

    ``start``/``stop`` select a contiguous block of the stream so that blocks
    can be produced independently and concatenated.
    """
    if d < 0:
        raise ValueError("degree must be >= 0")
    stop = F.q**d if stop is None else stop
    for i in range(start, stop):
        yield Poly._raw(F, monic_coeffs(F.q, d, i))


def monic_irreducibles(F: FieldDesc, d: int, start: int = 0, stop: int | None = None) -> Iterator[Poly]:
    if d < 1:
        raise ValueError("irreducibles have degree >= 1")
    ctx = F.ctx
    test = kernels.is_irreducible
    for P in monic_polys(F, d, start, stop):
        if test(ctx, list(P.coeffs)):
            yield P


def irreducibles(F: FieldDesc, d: int) -> Iterator[Poly]:
    """All irreducibles of degree d: unit multiples of the monic ones."""
    for P in monic_irreducibles(F, d):
        for a in F.units():
            yield P.scale(a)


def necklace_count(q: int, d: int) -> int:
    """Number of monic irreducibles of degree d over F_q (Moebius formula)."""
    total = 0
    for m in range(1, d + 1):
        if d % m == 0:
            total += _moebius(d // m) * q**m
    return total // d


def _moebius(n: int) -> int:
    out, f = 1, 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            out = -out
        f += 1
    return -out if n > 1 else out


def irreducible_counts(F: FieldDesc, dmax: int) -> list[int]:
    """Enumerated counts N_1..N_dmax (index 0 unused)."""
    counts = [0]
    for d in range(1, dmax + 1):
        counts.append(sum(1 for _ in monic_irreducibles(F, d)))
    return counts


def irreducible_count_check(F: FieldDesc, dmax: int) -> bool:
    """Check sum_{e | d} e * N_e = q^d for every d <= dmax."""
    if dmax < 1:
        raise ValueError("dmax must be >= 1")
    counts = irreducible_counts(F, dmax)
    return all(
        sum(e * counts[e] for e in range(1, d + 1) if d % e == 0) == F.q**d
        for d in range(1, dmax + 1)
    )
