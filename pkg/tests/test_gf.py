import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from valuesets.errors import (
    DivisionByZero,
    EvenCharacteristic,
    FieldTooSmall,
    MixedFields,
    NonPrimeCharacteristic,
    ReducibleModulus,
    ZeroHasNoOrder,
)
from valuesets.gf import FieldCtx, div, elements, field_new, order, pow_qm2

from conftest import field


def _first_rootless_monic_quadratic(p):
    # independent oracle: a quadratic is irreducible iff it has no root
    for c1 in range(p):
        for c0 in range(p):
            if all((x * x + c1 * x + c0) % p for x in range(p)):
                return (c0, c1, 1)


def test_prime_field_basics():
    F = field_new(13)
    assert F.q == 13 and F.modulus is None
    assert F(14) == F(1)
    assert F(-1).value == 12


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_default_modulus_matches_rootless_oracle(p):
    assert field_new(p, 2).modulus == _first_rootless_monic_quadratic(p)


def test_f25_default_modulus_is_x2_plus_2():
    F = field_new(5, 2)
    assert F.modulus == (2, 0, 1)
    assert len(F.elements()) == 25
    assert all(len(e.coeffs) == 2 for e in F.elements())


@pytest.mark.parametrize("args, exc", [
    ((9, 1), NonPrimeCharacteristic),
    ((2, 3), EvenCharacteristic),
    ((3, 1), FieldTooSmall),
    ((5, 2, (1, 0, 1)), ReducibleModulus),  # x^2 + 1 = (x-2)(x+2) over F_5
])
def test_field_new_errors(args, exc):
    with pytest.raises(exc):
        field_new(*args)


def test_explicit_modulus_accepted():
    F = field_new(5, 2, (3, 0, 1))
    x = F([0, 1])
    assert x * x == F(-3)


def test_extension_mul_matches_schoolbook():
    F = field_new(5, 2)  # x^2 = -2
    for (a0, a1), (b0, b1) in itertools.product(itertools.product(range(5), repeat=2), repeat=2):
        c0 = (a0 * b0 - 2 * a1 * b1) % 5
        c1 = (a0 * b1 + a1 * b0) % 5
        assert F([a0, a1]) * F([b0, b1]) == F([c0, c1])


def test_cubic_extension_mul_matches_schoolbook():
    F = field_new(3, 3)
    m = F.modulus
    rng = random.Random(7)
    for _ in range(200):
        a = [rng.randrange(3) for _ in range(3)]
        b = [rng.randrange(3) for _ in range(3)]
        prod = [0] * 5
        for i in range(3):
            for j in range(3):
                prod[i + j] += a[i] * b[j]
        for k in (4, 3):
            lead = prod[k]
            for j in range(4):
                prod[k - 3 + j] -= lead * m[j]
        assert F(a) * F(b) == F([c % 3 for c in prod[:3]])


def test_example_arithmetic_f13(f13):
    F = f13
    assert F(7) * F(2) == 1
    assert F(12) * F(9) + F(7) == 11
    x = F(5)
    assert x + F.zero == x


@pytest.mark.parametrize("x, expected", [(0, 0), (4, 10), (9, 3), (1, 1)])
def test_pow_qm2_f13(f13, x, expected):
    assert pow_qm2(f13(x)) == expected


def test_div_examples(f13):
    assert div(f13(11), f13(2)) == 12
    assert div(f13(4), f13(2)) == 2
    assert f13(1).inv() == 1


def test_inverse_of_zero_raises_but_qm2_does_not(f13):
    with pytest.raises(DivisionByZero):
        f13.zero.inv()
    with pytest.raises(ZeroDivisionError):
        f13(3) / 0
    assert pow_qm2(f13.zero) == 0


@pytest.mark.parametrize("x, expected", [(1, 1), (3, 3), (5, 4), (12, 2), (2, 12)])
def test_order_f13(f13, x, expected):
    assert order(f13(x)) == expected


def test_order_of_zero(f13):
    with pytest.raises(ZeroHasNoOrder):
        order(f13.zero)


def test_mixed_fields():
    with pytest.raises(MixedFields):
        field(7)(1) + field(11)(1)


def test_elements_order_and_cardinality():
    assert [e.value for e in elements(field(5))] == [0, 1, 2, 3, 4]
    assert len(elements(field(13))) == 13
    assert [e.coeffs for e in field(25).elements()[:6]] == [
        (0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (0, 1)]


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13, 25, 27, 49])
def test_exhaustive_field_laws(q):
    F = field(q)
    els = F.elements()
    assert len(set(els)) == q
    for x in els:
        assert x ** q == x
        if x:
            y = pow_qm2(x)
            assert y * x == 1
            # brute-force inverse oracle
            assert [z for z in els if z * x == 1] == [y]
            k = order(x)
            assert (q - 1) % k == 0
            assert x ** k == 1 and all(x ** t != 1 for t in range(1, k))
        else:
            assert pow_qm2(x) == 0


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([5, 7, 9, 25, 27, 49]), st.data())
def test_ring_axioms_random(q, data):
    F = field(q)
    x, y, z = (F.from_index(data.draw(st.integers(0, q - 1))) for _ in range(3))
    assert (x + y) * z == x * z + y * z
    assert x * (y * z) == (x * y) * z
    assert x + (y + z) == (x + y) + z
    assert x - y + y == x
    assert x + (-x) == 0
    assert (x + y) in F.elements()


def test_serialisation_round_trip():
    for F in (field(13), field(25)):
        assert FieldCtx.from_json(F.to_json()) == F
        for e in F.elements():
            assert F(e.to_json()) == e
    assert field(25)([3, 4]).to_json() == [3, 4]
    assert field(13)(14).to_json() == 1


def test_vector_tables_agree_with_scalar_ops():
    for q in (13, 25, 27):
        F = field(q)
        t = F.tables
        for x in range(q):
            for y in range(q):
                assert t.add[x, y] == F.add(x, y)
                assert t.mul[x, y] == F.mul(x, y)
            assert t.neg[x] == F.neg(x)
            assert t.qm2[x] == F.qm2(x)
