"""Carlitz data and exact evaluation of prime sums.

e_m evaluated at (1/A^(q-1)) over monic A equals (-1)^m pibar^(m(q-1)) / D_j
when m = (q^j - 1)/(q - 1) and vanishes otherwise.  The period pibar is
never materialized: values carry its exponent as a grade, and only ratios
of equal grade (which land in F_q(T)) leave this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from fqsums.field import FieldDesc
from fqsums.polyring import Poly
from fqsums.ratfun import RatFun
from fqsums.symfun import ELinComb, admissible_parts, gp_expansion, power_sum_in_e

MAX_D_DEGREE = 10**5


class UnsupportedExponent(ValueError):
    """The exponent k is not a multiple of q - 1."""


@dataclass(frozen=True)
class PibarRat:
    """value * pibar^pibar_degree with value in F_q(T)."""

    value: RatFun
    pibar_degree: int

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __mul__(self, other: "PibarRat") -> "PibarRat":
        return PibarRat(self.value * other.value, self.pibar_degree + other.pibar_degree)

    def __add__(self, other: "PibarRat") -> "PibarRat":
        if self.pibar_degree != other.pibar_degree:
            raise ValueError(
                f"cannot add pibar-degrees {self.pibar_degree} and {other.pibar_degree}"
            )
        return PibarRat(self.value + other.value, self.pibar_degree)

    def __pow__(self, n: int) -> "PibarRat":
        return PibarRat(self.value**n, self.pibar_degree * n)

    def __truediv__(self, other: "PibarRat") -> "PibarRat":
        return PibarRat(self.value / other.value, self.pibar_degree - other.pibar_degree)

    def to_json(self) -> dict:
        return {"value": self.value.to_json(), "pibar_degree": self.pibar_degree}


def _d_degree(q: int, j: int) -> int:
    return j * q**j


def carlitz_D(F: FieldDesc, j: int) -> Poly:
    """D_j = prod_{i<j} (T^(q^j) - T^(q^i)); D_0 = 1."""
    if j < 0:
        raise ValueError("j must be >= 0")
    if _d_degree(F.q, j) > MAX_D_DEGREE:
        raise ValueError(f"deg D_{j} = {_d_degree(F.q, j)} exceeds {MAX_D_DEGREE}")
    return _carlitz_D(F, j)


_D_CACHE: dict[tuple[int, int], Poly] = {}


def _carlitz_D(F: FieldDesc, j: int) -> Poly:
    key = (F.q, j)
    if key not in _D_CACHE:
        q = F.q
        top = Poly.monomial(F, q**j)
        out = Poly.one(F)
        for i in range(j):
            out = out * (top - Poly.monomial(F, q**i))
        _D_CACHE[key] = out
    return _D_CACHE[key]


def carlitz_exp_coeffs(F: FieldDesc, n: int) -> list[RatFun]:
    """[1/D_0, ..., 1/D_(n-1)]: the coefficients of Z^(q^j) in e_C(Z)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    one = Poly.one(F)
    return [RatFun(one, carlitz_D(F, j)) for j in range(n)]


def admissible_index(q: int, m: int) -> int | None:
    """j with m = (q^j - 1)/(q - 1), or None."""
    j, s = 0, 0
    while s < m:
        s = s * q + 1
        j += 1
    return j if s == m else None


def _sign(F: FieldDesc, m: int) -> int:
    return F.from_int((-1) ** m)


def spec_e_monic(F: FieldDesc, m: int) -> PibarRat:
    """e_m at (1/A^(q-1)) over monic A, as a pibar-graded value."""
    if m < 0:
        raise ValueError("m must be >= 0")
    deg = m * (F.q - 1)
    j = admissible_index(F.q, m)
    if j is None:
        return PibarRat(RatFun.zero(F), deg)
    return PibarRat(RatFun(Poly.const(F, _sign(F, m)), carlitz_D(F, j)), deg)


def spec_elincomb(F: FieldDesc, a: ELinComb) -> PibarRat:
    """Specialize a homogeneous e-basis combination at (1/A^(q-1)) over monic A.

    Integer coefficients are reduced mod p here and nowhere earlier.  Terms
    are collected over the common denominator prod D_j^(max multiplicity).
    """
    q, p = F.q, F.p
    grade = a.degree * (q - 1)
    terms = []
    top: dict[int, int] = {}
    for lam, c in a.items():
        c %= p
        if not c:
            continue
        mult: dict[int, int] = {}
        sign = 1
        for part in lam:
            j = admissible_index(q, part)
            if j is None:
                break
            mult[j] = mult.get(j, 0) + 1
            sign = F.mul(sign, _sign(F, part))
        else:
            terms.append((F.mul(F.from_int(c), sign), mult))
            for j, n in mult.items():
                top[j] = max(top.get(j, 0), n)
    if not terms:
        return PibarRat(RatFun.zero(F), grade)
    powers: dict[tuple[int, int], Poly] = {}

    def dpow(j, n):
        if (j, n) not in powers:
            powers[(j, n)] = carlitz_D(F, j) ** n
        return powers[(j, n)]

    num = Poly.zero(F)
    for c, mult in terms:
        t = Poly.const(F, c)
        for j, n in top.items():
            extra = n - mult.get(j, 0)
            if extra and j:
                t = t * dpow(j, extra)
        num = num + t
    den = Poly.one(F)
    for j, n in top.items():
        if j:
            den = den * dpow(j, n)
    return PibarRat(RatFun(num, den), grade)


def _level(F: FieldDesc, k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    if k % (F.q - 1):
        raise UnsupportedExponent(f"k={k} is not a multiple of q-1={F.q - 1}")
    return k // (F.q - 1)


def zeta_specialized(F: FieldDesc, l: int, route: str = "power") -> PibarRat:
    """sum over monic A of 1/A^(p l (q-1)), graded.

    route="power" specializes p_l and raises to the p-th power; route="direct"
    specializes p_{pl}.
    """
    p = F.p
    allowed = admissible_parts(F.q, p * l)
    if route == "power":
        return spec_elincomb(F, power_sum_in_e(l, allowed)) ** p
    if route == "direct":
        return spec_elincomb(F, power_sum_in_e(p * l, allowed))
    raise ValueError(f"unknown route {route!r}")


def exact_prime_sum(F: FieldDesc, k: int) -> RatFun:
    """Exact value of sum over monic irreducible P of G_p(1/P^k), (q-1) | k.

    Numerator g_p(1/A^k) and denominator (sum 1/A^k)^p are specialized
    separately; their pibar grades agree and cancel.
    """
    l = _level(F, k)
    p = F.p
    allowed = admissible_parts(F.q, p * l)
    num = spec_elincomb(F, gp_expansion(p, l, allowed))
    den = zeta_specialized(F, l, "power")
    if num.pibar_degree != den.pibar_degree or num.pibar_degree != p * k:
        raise AssertionError(
            f"grade mismatch: numerator {num.pibar_degree}, denominator {den.pibar_degree}"
        )
    if den.is_zero():
        raise AssertionError("zeta value specialized to zero")
    return num.value / den.value


def closed_form(F: FieldDesc, k: int) -> RatFun | None:
    """Closed form for l = k/(q-1) <= 2q/p, else None.

    0 for l <= q/p; (l mod p) * D_1^(q+1) / D_2 for q/p < l <= 2q/p.
    """
    l = _level(F, k)
    p, q = F.p, F.q
    if l * p <= q:
        return RatFun.zero(F)
    if l * p <= 2 * q:
        c = F.from_int(l)
        if not c:
            return RatFun.zero(F)
        return RatFun(carlitz_D(F, 1) ** (q + 1), carlitz_D(F, 2)).scale(c)
    return None


def exact_all_prime_sum(F: FieldDesc, k: int) -> RatFun:
    """Exact value of the sum over all irreducible P (not only monic)."""
    if k < 1:
        raise ValueError("k must be positive")
    g = gcd(F.q - 1, k)
    L = (F.q - 1) * k // g
    return exact_prime_sum(F, L).scale(F.from_int(g))


def pibar_qm1_series(F: FieldDesc, N: int | None, dmax: int):
    """Truncated expansion of pibar^(q-1) = -D_1 * sum_{A monic} 1/A^(q-1).

    The monic sum over deg A <= dmax is exact below (q-1)(dmax+1); the
    factor D_1 has degree q, so the product is exact below
    (q-1)(dmax+1) - q.  Asking for more raises PrecisionError; N=None
    returns everything that is known.
    """
    from fqsums.laurent import PrecisionError, expand_poly
    from fqsums.primesum import numeric_zeta

    q = F.q
    avail = (q - 1) * (dmax + 1) - q
    if N is None:
        N = avail
    if N > avail:
        raise PrecisionError(
            f"dmax={dmax} gives pibar^(q-1) only below u^{avail}, asked for u^{N}"
        )
    zeta = numeric_zeta(F, q - 1, dmax)
    D1 = expand_poly(-carlitz_D(F, 1), zeta.N + q)
    return (D1 * zeta).truncate(N)
