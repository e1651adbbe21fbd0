"""The rational function field F_q(T) and the rational function G_p."""

from __future__ import annotations

from math import comb, gcd

from fqsums.field import FieldDesc, FieldError, fq_build
from fqsums.polyring import Poly


class ReconstructionError(ArithmeticError):
    """No rational function within the degree bounds fits the series."""


class RatFun:
    """Reduced fraction num/den with monic den and gcd(num, den) = 1.

    Zero is stored as 0/1, so equality is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        F = num.field
        if den is None:
            den = Poly.one(F)
        if den.field != F:
            raise FieldError("numerator and denominator over different fields")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = num, Poly.one(F)
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
            if den.lc != 1:
                c = F.inv(den.lc)
                num, den = num.scale(c), den.scale(c)
        self.num = num
        self.den = den

    @classmethod
    def _reduced(cls, num: Poly, den: Poly) -> "RatFun":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def zero(cls, F: FieldDesc) -> "RatFun":
        return cls._reduced(Poly.zero(F), Poly.one(F))

    @classmethod
    def one(cls, F: FieldDesc) -> "RatFun":
        return cls._reduced(Poly.one(F), Poly.one(F))

    @classmethod
    def const(cls, F: FieldDesc, c: int) -> "RatFun":
        return cls._reduced(Poly.const(F, c), Poly.one(F))

    @property
    def field(self) -> FieldDesc:
        return self.num.field

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFun({self.text()!r}, q={self.field.q})"

    def __str__(self):
        return self.text()

    def _coerce(self, other) -> "RatFun":
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (Poly, int)):
            return RatFun(Poly.one(self.field) * other if isinstance(other, int) else other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun._reduced(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        # cross-cancel first to keep the products small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1, d2 = (self.num // g1, other.den // g1) if g1.degree > 0 else (self.num, other.den)
        n2, d1 = (other.num // g2, self.den // g2) if g2.degree > 0 else (other.num, self.den)
        return RatFun(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        # num and den stay coprime under powers
        return RatFun._reduced(self.num**n, self.den**n)

    def scale(self, c: int) -> "RatFun":
        if c == 0:
            return RatFun.zero(self.field)
        return RatFun._reduced(self.num.scale(c), self.den)

    def at_inverse(self, X: Poly) -> "RatFun":
        """self(1/X) for a nonconstant polynomial X (same field)."""
        m = max(self.num.degree, self.den.degree, 0)
        return RatFun(_horner(self.num.reverse(m), X), _horner(self.den.reverse(m), X))

    def text(self, var: str = "T") -> str:
        if self.is_poly():
            return self.num.text(var)
        return f"({self.num.text(var)})/({self.den.text(var)})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "RatFun":
        return cls(Poly.from_json(obj["num"]), Poly.from_json(obj["den"]))


def _horner(cs, X: Poly) -> Poly:
    F = X.field
    acc = Poly.zero(F)
    for c in reversed(cs):
        acc = acc * X + Poly.const(F, c)
    return acc


def gp_integer_numerator(p: int) -> list[int]:
    """Integer coefficients of ((1-U^p) - (1-U)^p) / p, constant first."""
    coeffs = [0] * (p + 1)
    coeffs[0] += 1
    coeffs[p] -= 1
    for j in range(p + 1):
        coeffs[j] -= comb(p, j) * (-1) ** j
    assert all(c % p == 0 for c in coeffs)
    return [c // p for c in coeffs]


def gp_ratfun(p: int) -> RatFun:
    """G_p(U) = ((1-U^p) - (1-U)^p) / (p (1-U)^p) over F_p.

    The division by p is exact on the integer numerator; only the quotient
    is reduced mod p.  Read the resulting polynomials in the variable U.
    """
    F = fq_build(p, 1)
    num = Poly(F, [c % p for c in gp_integer_numerator(p)])
    den = Poly(F, [comb(p, j) * (-1) ** j % p for j in range(p + 1)])
    return RatFun(num, den)


def _lift(r: RatFun, F: FieldDesc) -> RatFun:
    """Embed a rational function over F_p into the field F of characteristic p."""
    if r.field == F:
        return r
    return RatFun._reduced(Poly(F, r.num.coeffs), Poly(F, r.den.coeffs))


def gp_at_inverse_power(p: int, P: Poly, k: int) -> RatFun:
    """G_p(1/P^k) as an element of F_q(T)."""
    F = P.field
    if F.p != p:
        raise FieldError(f"G_{p} needs characteristic {p}, field has characteristic {F.p}")
    if P.degree < 1:
        raise ValueError("P must be nonconstant")
    if k < 1:
        raise ValueError("k must be positive")
    return _lift(gp_ratfun(p), F).at_inverse(P**k)


def scaling_identity_check(F: FieldDesc, k: int) -> bool:
    """Check the unit-sum identity for G_p as an identity in F_q(X).

    sum_{a != 0} G_p(1/(aX)^k) == gcd(q-1, k) * G_p(1/X^lcm(q-1, k)); in
    characteristic 2 also sum_{a != 0} 1/((aX)^k - 1) == 1/(X^lcm - 1).
    """
    if k < 1:
        raise ValueError("k must be positive")
    p, q = F.p, F.q
    g = gcd(q - 1, k)
    L = (q - 1) * k // g
    X = Poly.T(F)
    lhs = RatFun.zero(F)
    for a in F.units():
        lhs = lhs + gp_at_inverse_power(p, X.scale(a), k)
    rhs = gp_at_inverse_power(p, X, L).scale(F.from_int(g))
    ok = lhs == rhs
    if p == 2:
        one = Poly.one(F)
        lhs2 = RatFun.zero(F)
        for a in F.units():
            lhs2 = lhs2 + RatFun(one, X.scale(a) ** k - one)
        ok = ok and lhs2 == RatFun(one, X**L - one)
    return ok


def pade_reconstruct(s, num_deg: int, den_deg: int) -> RatFun:
    """Recover a rational function in T from its truncated u-expansion, u = 1/T.

    The series is written u^v * t(u) with t(0) != 0; extended Euclid on
    (u^M, t) with M = N - v yields a(u)/b(u) with deg a <= num_deg,
    deg b <= den_deg and a = b*t mod u^M.  Needs M >= num_deg + den_deg + 2.
    """
    F = s.field
    v = s.valuation()
    if v >= s.N:
        return RatFun.zero(F)
    M = s.N - v
    if M < num_deg + den_deg + 2:
        raise ReconstructionError(
            f"{M} known coefficients cannot determine a ({num_deg}, {den_deg}) approximant"
        )
    t = Poly(F, [s.coefficient(v + i) for i in range(M)])
    r0, r1 = Poly.monomial(F, M), t
    b0, b1 = Poly.zero(F), Poly.one(F)
    while r1.degree > num_deg:
        quo, rem = r0.divrem(r1)
        r0, r1 = r1, rem
        b0, b1 = b1, b0 - quo * b1
    a, b = r1, b1
    if b.degree > den_deg or b[0] == 0:
        raise ReconstructionError(
            f"no approximant with numerator degree <= {num_deg} and denominator "
            f"degree <= {den_deg} matches {M} coefficients"
        )
    from fqsums import kernels

    check = kernels.series_div(F.ctx, list(a.coeffs), list(b.coeffs), M)
    if check != [t[i] for i in range(M)]:
        raise ReconstructionError("approximant does not reproduce the series")
    if a.is_zero():
        return RatFun.zero(F)
    da, db = a.degree, b.degree
    A = Poly(F, a.reverse(da))
    B = Poly(F, b.reverse(db))
    shift = db - da - v
    if shift >= 0:
        return RatFun(A * Poly.monomial(F, shift), B)
    return RatFun(A, B * Poly.monomial(F, -shift))
