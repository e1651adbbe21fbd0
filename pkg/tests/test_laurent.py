import pytest
from hypothesis import given, settings, strategies as st

from fqsums.field import field_of_order, fq_build
from fqsums.laurent import PrecisionError, USeries, expand, expand_poly, geometric_inverse_power
from fqsums.polyring import Poly, monic_irreducibles, parse_poly
from fqsums.ratfun import RatFun, gp_at_inverse_power

F2 = fq_build(2, 1)


def S(F, v, cs, N=None):
    return USeries(F, v, cs, N)


def test_add_takes_min_precision():
    s = S(F2, 1, [1, 1]) + S(F2, 1, [1, 0, 0, 0])
    assert s.N == 3
    assert s.identical(S(F2, 0, [0, 0, 1]))


def test_invert_geometric():
    s = S(F2, 0, [1, 1, 0, 0, 0]).invert()
    assert s.N == 5 and list(s.coeffs) == [1, 1, 1, 1, 1]


def test_mul_precision():
    s = S(F2, 2, [1, 0, 0, 0], 6) * S(F2, 3, [1, 0, 0], 6)
    assert s.N == 8 and s.valuation() == 5
    assert s.window(0, 8) == [0, 0, 0, 0, 0, 1, 0, 0]


@settings(max_examples=120, deadline=None)
@given(
    st.sampled_from([2, 3, 4]),
    st.integers(-2, 3), st.integers(-2, 3),
    st.lists(st.integers(0, 3), min_size=1, max_size=6),
    st.lists(st.integers(0, 3), min_size=1, max_size=6),
    st.lists(st.integers(0, 3), min_size=3, max_size=3),
)
def test_precision_rules_never_overclaim(q, va, vb, ca, cb, tail):
    # changing coefficients beyond N must not change any reported coefficient
    F = field_of_order(q)
    ca = [c % q for c in ca]
    cb = [c % q for c in cb]
    ca[0] = ca[0] or 1
    cb[0] = cb[0] or 1
    tail = [c % q for c in tail]
    a, b = S(F, va, ca), S(F, vb, cb)
    a2, b2 = S(F, va, ca + tail), S(F, vb, cb + tail[::-1])
    for op in (lambda x, y: x + y, lambda x, y: x * y, lambda x, y: x / y):
        r, r2 = op(a, b), op(a2, b2)
        assert r2.N >= r.N
        assert r.agrees(r2)
    assert (a**3).agrees(a2**3)
    assert a.invert().agrees(a2.invert())


def test_coefficient_beyond_precision():
    with pytest.raises(PrecisionError):
        S(F2, 0, [1, 0]).coefficient(2)


def test_equality_is_window_agreement():
    a = S(F2, 0, [1, 1, 0])
    b = S(F2, 0, [1, 1, 0, 1, 1])
    assert a == b and not a.identical(b)


def test_expand_examples():
    assert expand(RatFun(Poly.one(F2), parse_poly(F2, "T+1")), 4).window(0, 4) == [0, 1, 1, 1]
    T2 = expand_poly(parse_poly(F2, "T^2"), 5)
    assert T2.v == -2 and T2.window(-2, 5) == [1, 0, 0, 0, 0, 0, 0]
    s = expand(RatFun(Poly.one(F2), parse_poly(F2, "T^4+T^2")), 9)
    assert s.text() == "u^4 + u^6 + u^8 + O(u^9)"


def test_expand_sign_odd_char():
    F = fq_build(3, 1)
    s = expand(RatFun(Poly.one(F), parse_poly(F, "T+1")), 4)
    assert s.window(0, 4) == [0, 1, 2, 1]


@pytest.mark.parametrize("text, N, want", [
    ("T", 4, [0, 1, 1, 1]), ("T+1", 2, [0, 1]), ("T^2+T+1", 4, [0, 0, 1, 1]),
])
def test_geometric_examples(text, N, want):
    assert geometric_inverse_power(parse_poly(F2, text), 1, N).window(0, N) == want


def test_geometric_matches_g2():
    for d in range(1, 5):
        for P in monic_irreducibles(F2, d):
            for k in (1, 2, 3):
                assert geometric_inverse_power(P, k, 30) == expand(gp_at_inverse_power(2, P, k), 30)


@pytest.mark.parametrize("q", [2, 3])
def test_summand_valuation(q):
    F = field_of_order(q)
    for d in range(1, 4):
        for P in monic_irreducibles(F, d):
            for k in range(1, 5):
                assert expand(gp_at_inverse_power(F.p, P, k), 40).valuation() == k * d


def ratfuns(F):
    cs = st.lists(st.integers(0, F.q - 1), min_size=1, max_size=5)
    return st.builds(lambda n, d: RatFun(Poly(F, n), Poly(F, d)), cs, cs.filter(any))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 4]).flatmap(lambda q: st.tuples(ratfuns(field_of_order(q)), ratfuns(field_of_order(q)))))
def test_expand_is_multiplicative(rs):
    r1, r2 = rs
    assert expand(r1 * r2, 20) == expand(r1, 20) * expand(r2, 20)
    assert expand(r1 + r2, 20) == expand(r1, 20) + expand(r2, 20)


def test_json_round_trip():
    F = fq_build(2, 2)
    s = expand(RatFun(Poly(F, [2, 1]), Poly(F, [3, 0, 1])), 7)
    assert USeries.from_json(s.to_json()).identical(s)
