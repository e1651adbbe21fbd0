"""Truncated u-adic sums over F_q[T] by direct enumeration.

Precision contract: a summand attached to a polynomial of degree d with
exponent k has u-valuation >= k*d, so summing every polynomial of degree
<= dmax gives the true infinite sum below u^(k*(dmax+1)).

Work is split into blocks of consecutive monic polynomials of one degree.
Blocks are summed independently (optionally in worker processes) and merged
in block order; the coefficients are exact so the result never depends on
the number of workers.
"""

from __future__ import annotations

import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from math import comb

from fqsums import kernels
from fqsums.field import FieldDesc, fq_build
from fqsums.laurent import USeries, expand
from fqsums.polyring import monic_coeffs
from fqsums.ratfun import RatFun, gp_ratfun

log = logging.getLogger(__name__)

BLOCK = 2048
WARN_ENUMERATION = 10**7
MAX_ENUMERATION = 10**9


class EnumerationTooLarge(ValueError):
    pass


def enumeration_cost(q: int, dmax: int) -> int:
    """Number of monic polynomials of degree exactly dmax (the dominant block)."""
    return q**dmax


def check_enumeration(q: int, dmax: int) -> str | None:
    """Warning text above 10^7 polynomials; raise above 10^9."""
    cost = enumeration_cost(q, dmax)
    if cost > MAX_ENUMERATION:
        raise EnumerationTooLarge(f"q^dmax = {q}^{dmax} exceeds {MAX_ENUMERATION:.0e} polynomials")
    if cost > WARN_ENUMERATION:
        return f"q^dmax = {cost} polynomials to enumerate; this will be slow"
    return None


@dataclass(frozen=True)
class SumRequest:
    field: FieldDesc
    k: int
    dmax: int
    monic_only: bool = True

    def __post_init__(self):
        if self.k < 1 or self.dmax < 1:
            raise ValueError("k and dmax must be >= 1")

    @property
    def N(self) -> int:
        return self.k * (self.dmax + 1)


# -- summand kernels ---------------------------------------------------------

def _inverse_power(ctx, coeffs, k, L):
    """Relative series of 1/A^k: A = T^d * rev(u), result is 1/rev^k to L terms."""
    rev = coeffs[::-1]
    y = kernels.series_div(ctx, [1], rev, L)
    return kernels.series_pow(ctx, y, k, L) if k > 1 else y


def _gp_summand(ctx, add, coeffs, k, L, gnum, gden):
    """G_p(U)/u^(kd) to L terms, with U = 1/A^k and G_p = U*gnum(U)/gden(U)."""
    d = len(coeffs) - 1
    Y = _inverse_power(ctx, coeffs, k, L)
    shift = k * d
    U = [0] * min(shift, L) + Y[: max(L - shift, 0)]
    num = _horner(ctx, add, gnum, U, L)
    den = _horner(ctx, add, gden, U, L)
    return kernels.series_mul(ctx, Y, kernels.series_div(ctx, num, den, L), L)


def _horner(ctx, add, cs, U, L):
    # U has no constant term, so the constant of acc*U is 0
    acc = [cs[-1]] + [0] * (L - 1)
    for c in reversed(cs[:-1]):
        acc = kernels.series_mul(ctx, acc, U, L)
        acc[0] = add(acc[0], c)
    return acc


def _gp_split(p: int):
    """(coefficients of G_p(U)/U numerator, denominator), constant first."""
    g = gp_ratfun(p)
    num = list(g.num.coeffs)
    assert num and num[0] == 0, "G_p has no constant term"
    return num[1:], list(g.den.coeffs)


@dataclass(frozen=True)
class _Block:
    kind: str           # "prime", "zeta"
    p: int
    e: int
    k: int
    N: int
    d: int
    start: int
    stop: int
    monic_only: bool = True


def _run_block(b: _Block) -> list[int]:
    F = fq_build(b.p, b.e)
    ctx = F.ctx
    q = F.q
    N, k, d = b.N, b.k, b.d
    L = N - k * d
    total = [0] * N
    if L <= 0:
        return total
    off = k * d
    if b.kind == "prime":
        gnum, gden = _gp_split(F.p)
        test = kernels.is_irreducible
        scalars = [1] if b.monic_only else list(F.units())
        acc = [0] * L
        for i in range(b.start, b.stop):
            cs = monic_coeffs(q, d, i)
            if d > 1 and not test(ctx, cs):
                continue
            for a in scalars:
                ac = cs if a == 1 else kernels.poly_scale(ctx, cs, a)
                acc = kernels.poly_add(ctx, acc, _gp_summand(ctx, F.add, ac, k, L, gnum, gden))
    elif b.kind == "zeta":
        acc = [0] * L
        for i in range(b.start, b.stop):
            acc = kernels.poly_add(ctx, acc, _inverse_power(ctx, monic_coeffs(q, d, i), k, L))
    else:
        raise ValueError(f"unknown block kind {b.kind!r}")
    for i, c in enumerate(acc):
        total[off + i] = c
    return total


def _blocks(kind, F, k, N, dmin, dmax, monic_only=True):
    out = []
    for d in range(dmin, dmax + 1):
        n = F.q**d
        for start in range(0, n, BLOCK):
            out.append(_Block(kind, F.p, F.e, k, N, d, start, min(start + BLOCK, n), monic_only))
    return out


def _reduce(F: FieldDesc, blocks, N: int, workers: int) -> USeries:
    ctx = F.ctx
    if workers > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_block, blocks))
    else:
        parts = [_run_block(b) for b in blocks]
    total = [0] * N
    for part in parts:
        total = kernels.poly_add(ctx, total, part)
    total = total + [0] * (N - len(total))
    return USeries(F, 0, total, N)


# -- public operations ---------------------------------------------------------

def numeric_prime_sum(req: SumRequest, workers: int = 1) -> USeries:
    """Sum of G_p(1/P^k) over irreducible P of degree <= dmax, exact below u^N."""
    F = req.field
    blocks = _blocks("prime", F, req.k, req.N, 1, req.dmax, req.monic_only)
    return _reduce(F, blocks, req.N, workers)


def numeric_zeta(F: FieldDesc, k: int, dmax: int, workers: int = 1) -> USeries:
    """sum over monic A with deg A <= dmax of 1/A^k (A = 1 included), exact below u^(k(dmax+1))."""
    if k < 1 or dmax < 0:
        raise ValueError("need k >= 1 and dmax >= 0")
    N = k * (dmax + 1)
    return _reduce(F, _blocks("zeta", F, k, N, 0, dmax), N, workers)


def numeric_e_spec(F: FieldDesc, m: int, dmax: int, monic_only: bool = True) -> USeries:
    """e_m at (1/A^(q-1)) over monic A (or at (1/A) over all nonzero A), deg A <= dmax.

    Coefficients of Z^0..Z^m in prod (1 + Z x_A) are carried as series; the
    result is exact below (q-1)(dmax+1) in the monic case and dmax+1 otherwise.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    ctx = F.ctx
    q = F.q
    k = q - 1 if monic_only else 1
    P = k * (dmax + 1)
    E = [[1] + [0] * (P - 1)] + [[0] * P for _ in range(m)]
    scalars = [1] if monic_only else list(F.units())
    for d in range(dmax + 1):
        for i in range(q**d):
            cs = monic_coeffs(q, d, i)
            for a in scalars:
                ac = cs if a == 1 else kernels.poly_scale(ctx, cs, a)
                L = P - k * d
                rel = _inverse_power(ctx, ac, k, L)
                x = [0] * (k * d) + rel
                for j in range(m, 0, -1):
                    if any(E[j - 1]):
                        E[j] = kernels.poly_add(ctx, E[j], kernels.series_mul(ctx, E[j - 1], x, P))
                        E[j] = E[j] + [0] * (P - len(E[j]))
    return USeries(F, 0, E[m], P)


def psi_count(p: int, r: int) -> int:
    """Number of (r_1..r_p) >= 0 with sum r and min 0, by enumerating compositions."""
    if r < 0:
        raise ValueError("r must be >= 0")
    count = 0
    # stars and bars: bar positions among r + p - 1 slots
    for bars in itertools.combinations(range(r + p - 1), p - 1):
        parts = [b - a - 1 for a, b in zip((-1,) + bars, bars + (r + p - 1,))]
        if min(parts) == 0:
            count += 1
    return count


def psi_generating_coefficient(p: int, r: int) -> int:
    """Coefficient of U^r in (1 - U^p)/(1 - U)^p."""
    c = comb(r + p - 1, p - 1)
    if r >= p:
        c -= comb(r - 1, p - 1)
    return c


@dataclass
class VerifyReport:
    q: int
    k: int
    dmax: int
    precision: int
    match: bool
    first_mismatch: int | None
    exact: RatFun
    numeric: USeries
    millis: int | None = dc_field(default=None)

    @property
    def agreement_precision(self) -> int:
        return self.precision if self.match else self.first_mismatch

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "k": self.k,
            "dmax": self.dmax,
            "precision": self.precision,
            "match": self.match,
            "first_mismatch": self.first_mismatch,
            "exact": self.exact.to_json(),
            "numeric": self.numeric.to_json(),
            "millis": self.millis,
        }


def verify(F: FieldDesc, k: int, dmax: int, workers: int = 1, timing: bool = False) -> VerifyReport:
    """Compare the exact value with the enumerated truncated sum."""
    from fqsums.carlitz import exact_prime_sum

    t0 = time.perf_counter()
    exact = exact_prime_sum(F, k)
    req = SumRequest(F, k, dmax)
    numeric = numeric_prime_sum(req, workers)
    bad = numeric.first_mismatch(expand(exact, req.N))
    millis = round((time.perf_counter() - t0) * 1000) if timing else None
    log.debug("verify q=%d k=%d dmax=%d mismatch=%s", F.q, k, dmax, bad)
    return VerifyReport(F.q, k, dmax, req.N, bad is None, bad, exact, numeric, millis)
