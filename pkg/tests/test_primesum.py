import json
from math import comb, gcd

import pytest

from fqsums import primesum
from fqsums.carlitz import carlitz_D, exact_prime_sum, pibar_qm1_series
from fqsums.field import field_of_order, fq_build
from fqsums.laurent import USeries, expand
from fqsums.polyring import Poly, irreducibles, monic_irreducibles, monic_polys, parse_poly
from fqsums.primesum import (
    EnumerationTooLarge,
    SumRequest,
    check_enumeration,
    numeric_e_spec,
    numeric_prime_sum,
    numeric_zeta,
    psi_count,
    psi_generating_coefficient,
    verify,
)
from fqsums.ratfun import RatFun, gp_at_inverse_power, gp_ratfun

F2 = fq_build(2, 1)
F3 = fq_build(3, 1)


def brute_prime_sum(F, k, dmax, monic_only=True):
    N = k * (dmax + 1)
    total = USeries.zero(F, N)
    for d in range(1, dmax + 1):
        source = monic_irreducibles(F, d) if monic_only else irreducibles(F, d)
        for P in source:
            total = total + expand(gp_at_inverse_power(F.p, P, k), N)
    return total


def test_request_precision():
    assert SumRequest(F2, 3, 4).N == 15
    with pytest.raises(ValueError):
        SumRequest(F2, 0, 4)


def test_k1_small():
    s = numeric_prime_sum(SumRequest(F2, 1, 3))
    assert s.N == 4 and s.is_zero()


def test_k3_against_exact():
    s = numeric_prime_sum(SumRequest(F2, 3, 4))
    assert s.identical(expand(RatFun(Poly.one(F2), parse_poly(F2, "T^4+T^2")), 15))


def test_q3_k2_vanishes():
    s = numeric_prime_sum(SumRequest(F3, 2, 3))
    assert s.N == 8 and s.is_zero()


@pytest.mark.parametrize("q, k, dmax", [(2, 1, 5), (2, 2, 4), (3, 1, 3), (3, 3, 3), (4, 2, 2), (5, 1, 2), (9, 2, 1)])
def test_matches_ratfun_oracle(q, k, dmax):
    F = field_of_order(q)
    assert numeric_prime_sum(SumRequest(F, k, dmax)).identical(brute_prime_sum(F, k, dmax))


@pytest.mark.parametrize("q, k, dmax", [(3, 1, 2), (4, 1, 2)])
def test_all_irreducibles_oracle(q, k, dmax):
    F = field_of_order(q)
    got = numeric_prime_sum(SumRequest(F, k, dmax, monic_only=False))
    assert got.identical(brute_prime_sum(F, k, dmax, monic_only=False))


@pytest.mark.parametrize("q, k, dmax", [(2, 1, 6), (2, 3, 4), (2, 5, 3), (3, 2, 3), (3, 4, 2), (4, 3, 2), (5, 4, 1)])
def test_precision_contract(q, k, dmax):
    F = field_of_order(q)
    a = numeric_prime_sum(SumRequest(F, k, dmax))
    b = numeric_prime_sum(SumRequest(F, k, dmax + 1))
    assert a.N == k * (dmax + 1)
    assert a == b


@pytest.mark.parametrize("q, m, dmax", [(2, 1, 4), (2, 3, 3), (3, 1, 3), (3, 4, 2), (4, 5, 2)])
def test_e_spec_precision_contract(q, m, dmax):
    F = field_of_order(q)
    a = numeric_e_spec(F, m, dmax)
    assert a.N == (q - 1) * (dmax + 1)
    assert a == numeric_e_spec(F, m, dmax + 1)


@pytest.mark.parametrize("q", [2, 3, 4])
@pytest.mark.parametrize("k", range(1, 7))
def test_non_monic_reduction(q, k):
    F = field_of_order(q)
    g = gcd(q - 1, k)
    L = (q - 1) * k // g
    allp = numeric_prime_sum(SumRequest(F, k, 3, monic_only=False))
    monic = numeric_prime_sum(SumRequest(F, L, 3))
    assert allp == monic.scale(F.from_int(g))


def test_block_partitioning_is_irrelevant(monkeypatch):
    F = field_of_order(3)
    req = SumRequest(F, 2, 4)
    ref = numeric_prime_sum(req)
    for size in (1, 5, 17):
        monkeypatch.setattr(primesum, "BLOCK", size)
        assert numeric_prime_sum(req).identical(ref)
        assert numeric_prime_sum(req, workers=3).identical(ref)


def test_zeta_leading_one():
    for q in (2, 3, 4, 5):
        F = field_of_order(q)
        for k in (1, 2, q - 1):
            z = numeric_zeta(F, k, 2)
            assert z.coefficient(0) == 1 and z.N == 3 * k


def test_zeta_brute_force():
    N = 3
    want = USeries.zero(F2, N)
    for d in range(3):
        for A in monic_polys(F2, d):
            want = want + expand(RatFun(Poly.one(F2), A), N)
    got = numeric_zeta(F2, 1, 2)
    assert got.identical(want)
    assert got.window(0, 3) == [1, 0, 1]


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("k", [1, 2, 4])
def test_zeta_frobenius(q, k):
    F = field_of_order(q)
    assert numeric_zeta(F, F.p * k, 4) == numeric_zeta(F, k, 4) ** F.p


def test_e_spec_vanishing():
    assert numeric_e_spec(F3, 2, 3).is_zero()
    assert numeric_e_spec(F3, 3, 3).is_zero()


@pytest.mark.parametrize("q", [2, 3, 4])
def test_e1_is_zeta(q):
    F = field_of_order(q)
    assert numeric_e_spec(F, 1, 3).identical(numeric_zeta(F, q - 1, 3))


def test_e1_via_pibar():
    for q in (2, 3):
        F = field_of_order(q)
        e1 = numeric_e_spec(F, 1, 4)
        D1 = expand(RatFun(carlitz_D(F, 1)), 40)
        assert e1 == pibar_qm1_series(F, None, 4).scale(F.neg(1)) / D1


def test_all_polys_e3_q2():
    e3 = numeric_e_spec(F2, 3, 8, monic_only=False)
    assert e3.N == 9
    D2 = expand(RatFun(carlitz_D(F2, 2)), 40)
    want = pibar_qm1_series(F2, None, 12) ** 3 / D2
    assert want.N >= e3.N
    assert e3 == want
    assert not e3.is_zero()


def test_psi_examples():
    assert psi_count(2, 0) == 1
    assert [psi_count(2, r) for r in range(1, 8)] == [2] * 7
    assert psi_count(3, 1) == 3
    assert psi_count(3, 4) == 12


@pytest.mark.parametrize("p", [2, 3, 5])
def test_psi_generating_function(p):
    for r in range(13):
        assert psi_count(p, r) == psi_generating_coefficient(p, r)
        assert psi_generating_coefficient(p, r) == comb(r + p - 1, p - 1) - (comb(r - 1, p - 1) if r >= p else 0)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_psi_reproduces_gp(p):
    from fqsums import kernels
    g = gp_ratfun(p)
    F = g.field
    series = kernels.series_div(F.ctx, list(g.num.coeffs), list(g.den.coeffs), 13)
    want = [0] + [(psi_count(p, r) // p) % p for r in range(1, 13)]
    assert all(psi_count(p, r) % p == 0 for r in range(1, 13))
    assert series == want


def test_verify_reports():
    rep = verify(F2, 1, 10)
    assert rep.match and rep.agreement_precision == 11 and rep.exact.is_zero()
    rep = verify(F2, 3, 6)
    assert rep.match and rep.exact == exact_prime_sum(F2, 3) and rep.precision == 21
    F4 = field_of_order(4)
    rep = verify(F4, 9, 4)
    assert rep.match and rep.precision == 45
    js = rep.to_json()
    assert set(js) == {"q", "k", "dmax", "precision", "match", "first_mismatch", "exact", "numeric", "millis"}
    assert js["millis"] is None and js["first_mismatch"] is None
    json.dumps(js)
    assert verify(F2, 3, 2, timing=True).millis is not None


def test_verify_detects_mismatch(monkeypatch):
    import fqsums.carlitz as carlitz
    monkeypatch.setattr(carlitz, "exact_prime_sum", lambda F, k: RatFun(Poly.one(F), parse_poly(F, "T^4")))
    rep = verify(F2, 3, 4)
    assert not rep.match and rep.first_mismatch == 6 and rep.agreement_precision == 6


def test_enumeration_guard():
    assert check_enumeration(2, 10) is None
    assert "slow" in check_enumeration(10007, 2)
    with pytest.raises(EnumerationTooLarge):
        check_enumeration(2, 31)


@pytest.mark.parametrize("q, l, dmax", [(3, 2, 4), (4, 3, 4), (5, 2, 3), (8, 5, 3), (9, 4, 3), (16, 9, 2)])
def test_boundary_level_numeric(q, l, dmax):
    from fqsums.carlitz import closed_form

    F = field_of_order(q)
    rep = verify(F, (q - 1) * l, dmax)
    assert rep.match and not rep.exact.is_zero()
    assert rep.exact == closed_form(F, (q - 1) * l)
