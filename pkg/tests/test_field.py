import random

import pytest

from gfroots import (
    BadSpec,
    DEFAULT_PRIMITIVE_POLY,
    DivisionByZero,
    FieldSpec,
    NotPrimitive,
    ZeroToZero,
    build_field,
    default_spec,
)

# GF(2^3) under x^3 + x + 1: alpha^3 = alpha + 1, so the element table is
# 1, 010, 100, 011, 110, 111, 101.
GF8_ANTILOG = [0b001, 0b010, 0b100, 0b011, 0b110, 0b111, 0b101]


def test_gf8_antilog_table(gf8_3):
    assert gf8_3.antilog == GF8_ANTILOG


def test_gf8_log_inverts_antilog(gf8_3):
    for k, v in enumerate(gf8_3.antilog):
        assert gf8_3.log[v] == k


def test_gf4_table():
    field = build_field(FieldSpec(2, 0b111))
    assert field.antilog == [0b01, 0b10, 0b11]


def test_reducible_poly_rejected():
    # x^3 + x^2 + x + 1 = (x + 1)(x^2 + 1): the alpha orbit closes after 4 steps
    with pytest.raises(NotPrimitive):
        build_field(FieldSpec(3, 0b1111))


def test_irreducible_but_imprimitive_rejected():
    # x^4 + x^3 + x^2 + x + 1 is irreducible yet alpha has order 5, not 15
    with pytest.raises(NotPrimitive):
        build_field(FieldSpec(4, 0b11111))


@pytest.mark.parametrize(
    "m,mask",
    [
        (1, 0b11),
        (17, (1 << 17) | 3),
        (3, 0b111),     # degree 2 mask for m=3
        (3, 0b11011),   # stray bit above degree 3
        (3, 0b1010),    # zero constant term
        (3, 0),
    ],
)
def test_bad_specs(m, mask):
    with pytest.raises(BadSpec):
        build_field(FieldSpec(m, mask))


@pytest.mark.parametrize("m", sorted(DEFAULT_PRIMITIVE_POLY))
def test_default_polys_are_primitive(m):
    field = build_field(default_spec(m))
    assert field.order == 1 << m
    assert sorted(field.antilog) == list(range(1, 1 << m))


def test_no_default_outside_range():
    with pytest.raises(BadSpec):
        default_spec(17)


def test_add(gf8_3):
    for x in gf8_3.elements():
        assert gf8_3.add(x, x) == 0
        assert gf8_3.add(x, 0) == x
    # alpha + 1 = alpha^3
    assert gf8_3.add(0b010, 0b001) == 0b011


def test_mul(gf8_3):
    assert gf8_3.mul(5, 0) == 0
    assert gf8_3.mul(0, 5) == 0
    # alpha * alpha^2 = alpha^3
    assert gf8_3.mul(0b010, 0b100) == 0b011
    # alpha^5 * alpha^6 = alpha^11 = alpha^4
    assert gf8_3.mul(0b111, 0b101) == 0b110


def test_mul_matches_carryless_reference(gf8_3):
    def slow_mul(a, b):
        acc = 0
        while b:
            if b & 1:
                acc ^= a
            a <<= 1
            if a & 8:
                a ^= 0b1011
            b >>= 1
        return acc

    for a in gf8_3.elements():
        for b in gf8_3.elements():
            assert gf8_3.mul(a, b) == slow_mul(a, b)


def test_pow(gf8_3):
    assert gf8_3.pow(0, 3) == 0
    assert gf8_3.pow(6, 0) == 1
    # (alpha^3)^2 = alpha^6 = 101
    assert gf8_3.pow(0b011, 2) == 0b101
    for x in range(1, gf8_3.order):
        assert gf8_3.pow(x, 1) == x
        assert gf8_3.pow(x, 7) == 1


def test_pow_rejects_zero_to_zero(gf8_3):
    with pytest.raises(ZeroToZero):
        gf8_3.pow(0, 0)
    with pytest.raises(ValueError):
        gf8_3.pow(3, -1)


def test_inv(gf8_3):
    assert gf8_3.inv(1) == 1
    # inv(alpha) = alpha^6
    assert gf8_3.inv(0b010) == 0b101
    for x in range(1, gf8_3.order):
        assert gf8_3.mul(x, gf8_3.inv(x)) == 1
        assert gf8_3.inv(gf8_3.inv(x)) == x
    with pytest.raises(DivisionByZero):
        gf8_3.inv(0)


def test_fermat_inverse(gf16):
    n = gf16.order - 1
    for x in range(1, gf16.order):
        assert gf16.mul(x, gf16.pow(x, n - 1)) == 1


@pytest.mark.parametrize("m", [2, 3, 4])
def test_distributivity_exhaustive(m):
    field = build_field(default_spec(m))
    for a in field.elements():
        for b in field.elements():
            for c in field.elements():
                lhs = field.mul(a, field.add(b, c))
                rhs = field.add(field.mul(a, b), field.mul(a, c))
                assert lhs == rhs


def test_distributivity_random_gf256(gf256):
    rng = random.Random(2024)
    for _ in range(10_000):
        a, b, c = (rng.randrange(256) for _ in range(3))
        assert gf256.mul(a, gf256.add(b, c)) == gf256.add(gf256.mul(a, b), gf256.mul(a, c))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_frobenius_linearity(m):
    field = build_field(default_spec(m))
    for a in field.elements():
        for b in field.elements():
            assert field.pow(field.add(a, b), 2) == field.add(field.pow(a, 2), field.pow(b, 2))


def test_alpha_pow_wraps(gf8_3):
    assert gf8_3.alpha_pow(0) == 1
    assert gf8_3.alpha_pow(7) == 1
    assert gf8_3.alpha_pow(11) == gf8_3.antilog[4]
