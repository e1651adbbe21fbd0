import itertools
import pickle
import random

import pytest
from hypothesis import given, settings, strategies as st

from fqsums.field import (
    FieldError,
    field_from_json,
    field_of_order,
    fq_build,
    prime_power,
    units_power_sum,
)

# least monic irreducibles, constant coefficient first (checked with sympy's gf_irreducible_p)
MODULI = {
    (2, 2): (1, 1, 1),
    (3, 2): (1, 0, 1),
    (2, 3): (1, 0, 1, 1),
    (5, 2): (1, 1, 1),
    (3, 3): (1, 0, 2, 1),
    (2, 4): (1, 0, 0, 1, 1),
}

SMALL = [2, 3, 4, 5, 7, 8, 9]


@pytest.mark.parametrize("pe, modulus", MODULI.items())
def test_least_modulus(pe, modulus):
    assert fq_build(*pe).modulus == modulus


def test_prime_field_modulus():
    assert fq_build(2, 1).modulus == (0, 1)


@pytest.mark.parametrize("q", [1, 6, 12, 100])
def test_rejects_non_prime_power(q):
    with pytest.raises(FieldError):
        field_of_order(q)


def test_prime_power_split():
    assert prime_power(81) == (3, 4)
    assert prime_power(2) == (2, 1)


def test_f4_generator_square():
    F = fq_build(2, 2)
    g = F.from_coords([0, 1])
    assert F.mul(g, g) == F.add(g, 1)


def test_f9_frobenius():
    F = fq_build(3, 2)
    assert all(F.pow(a, 9) == a for a in F.elements())


@pytest.mark.parametrize("q", SMALL + [16, 25, 27, 32, 49, 81])
def test_inverses(q):
    F = field_of_order(q)
    assert all(F.mul(a, F.inv(a)) == 1 for a in F.units())
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


@pytest.mark.parametrize("q", SMALL)
def test_axioms_exhaustive(q):
    F = field_of_order(q)
    els = list(F.elements())
    for a, b in itertools.product(els, els):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.sub(F.add(a, b), b) == a
    for a, b, c in itertools.product(els, els, els):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))


@pytest.mark.parametrize("q", [16, 25, 27, 49, 64, 81, 125, 243])
def test_table_mul_matches_reference(q):
    F = field_of_order(q)
    rng = random.Random(q)
    for _ in range(300):
        a, b, c = (rng.randrange(q) for _ in range(3))
        assert F.mul(a, b) == F.mul_reference(a, b)
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([4, 8, 9, 25, 27]), st.data())
def test_field_ops_property(q, data):
    F = field_of_order(q)
    a = data.draw(st.integers(0, q - 1))
    b = data.draw(st.integers(1, q - 1))
    assert F.mul(F.div(a, b), b) == a
    assert F.add(a, F.neg(a)) == 0
    assert F.pow(b, q - 1) == 1


@pytest.mark.parametrize("q, m, expected", [(2, 1, 1), (3, 2, 2), (5, 3, 0)])
def test_units_power_sum_examples(q, m, expected):
    assert units_power_sum(field_of_order(q), m) == expected


def _prime_powers(limit):
    out = []
    for q in range(2, limit + 1):
        try:
            prime_power(q)
        except FieldError:
            continue
        out.append(q)
    return out


@pytest.mark.parametrize("q", _prime_powers(81))
def test_units_power_sum_closed_form(q):
    F = field_of_order(q)
    minus_one = F.neg(1)
    for m in range(1, 2 * (q - 1) + 1):
        brute = 0
        for a in F.units():
            brute = F.add(brute, F.pow(a, m))
        assert brute == (minus_one if m % (q - 1) == 0 else 0)
        assert units_power_sum(F, m) == brute


def test_json_and_pickle_round_trip():
    F = fq_build(3, 2)
    assert field_from_json(F.to_json()) == F
    assert pickle.loads(pickle.dumps(F)) == F
    for a in F.elements():
        assert F.elem_from_json(F.elem_to_json(a)) == a
    with pytest.raises(FieldError):
        F.from_coords([3, 0])
