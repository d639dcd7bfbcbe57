from __future__ import annotations

import pytest

from errors import FieldMismatch, NotAPrimePower, UnsupportedOrder, ZeroInverse
from geometry.galois_field import (IRREDUCIBLE_POLYS, FieldElement, add, factor_prime_power, inv,
                                   is_irreducible, make_field, mul, supported_orders)


def test_supported_orders():
    assert supported_orders() == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]


def test_factor_prime_power():
    assert factor_prime_power(2) == (2, 1)
    assert factor_prime_power(27) == (3, 3)
    assert factor_prime_power(32) == (2, 5)
    with pytest.raises(NotAPrimePower):
        factor_prime_power(1)


def test_make_field_gf2():
    F = make_field(2)
    assert F.q == 2 and list(F.elements()) == [0, 1]
    assert F.add(1, 1) == 0


def test_make_field_gf4_all_nonzero_invertible():
    F = make_field(4)
    assert F.q == 4
    for a in range(1, 4):
        assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("q", [6, 10, 12, 15])
def test_make_field_rejects_composite(q):
    with pytest.raises(NotAPrimePower):
        make_field(q)


def test_make_field_rejects_large_order():
    with pytest.raises(UnsupportedOrder):
        make_field(37)


def test_gf4_generator_squared_is_g_plus_1():
    F = make_field(4)
    g = F.generator()
    assert F.order(g) == 3
    # g = x, and x^2 = x + 1 under x^2 + x + 1
    assert F.mul(g, g) == F.add(g, 1)


def test_gf5_inverse_of_2():
    F = make_field(5)
    assert F.inv(2) == 3


def test_inverse_of_zero():
    F = make_field(8)
    with pytest.raises(ZeroInverse):
        F.inv(0)
    with pytest.raises(ZeroDivisionError):
        F.div(3, 0)


@pytest.mark.parametrize("q", supported_orders())
def test_field_axioms(q):
    F = make_field(q)
    assert F.verify() == []
    assert F.order(F.generator()) == q - 1


@pytest.mark.parametrize("pk", sorted(IRREDUCIBLE_POLYS))
def test_tabulated_polynomials_are_irreducible(pk):
    p, _ = pk
    assert is_irreducible(IRREDUCIBLE_POLYS[pk], p)


def test_reducible_polynomial_detected():
    # x^2 + 1 = (x + 1)^2 over GF(2)
    assert not is_irreducible((1, 0, 1), 2)


def test_sub_neg_div_pow_gf9():
    F = make_field(9)
    for a in F.elements():
        assert F.add(a, F.neg(a)) == 0
        assert F.sub(a, a) == 0
        assert F.pow(a, 9) == a
        if a:
            assert F.div(a, a) == 1
            assert F.pow(a, -1) == F.inv(a)


def test_field_element_wrappers():
    F = make_field(5)
    a, b = FieldElement(F, 2), FieldElement(F, 4)
    assert add(a, b).value == 1
    assert (a * b).value == 3
    assert inv(a).value == 3


def test_field_element_mismatch():
    a = FieldElement(make_field(5), 1)
    b = FieldElement(make_field(7), 1)
    with pytest.raises(FieldMismatch):
        mul(a, b)
    with pytest.raises(FieldMismatch):
        FieldElement(make_field(5), 5)
