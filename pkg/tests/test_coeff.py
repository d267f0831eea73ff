from hypothesis import given, strategies as st

from hhbv.coeff import (
    GF2k,
    default_modulus,
    is_irreducible,
    parse_poly,
    poly_compose,
    poly_divmod,
    poly_from_bits,
    poly_gcd,
    poly_mul,
    poly_pow,
    poly_str,
    poly_to_bits,
    specialize,
)

polys = st.integers(min_value=0, max_value=(1 << 12) - 1)
small = st.integers(min_value=0, max_value=(1 << 5) - 1)

D = 2


def test_addition_examples():
    assert (D ^ 1) ^ (D ^ 1) == 0
    assert D ^ poly_mul(D, D) == 0b110
    assert 0 ^ poly_pow(D, 3) == poly_pow(D, 3)


def test_multiplication_examples():
    assert poly_mul(D, D) == 0b100
    assert poly_mul(D ^ 1, D ^ 1) == 0b101  # (d+1)^2 = d^2 + 1
    assert poly_mul(D, 0) == 0


def test_specialize_examples():
    gf2 = GF2k(1)
    assert specialize(poly_pow(D, 3), 1, gf2) == 1
    assert specialize(0b1011, 0, gf2) == 1
    gf4 = GF2k(2)
    omega = 0b10
    assert gf4.mul(omega, omega) == omega ^ 1
    assert specialize(0b110, omega, gf4) == 1  # w^2 + w = (w+1) + w


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert poly_mul(a, b) == poly_mul(b, a)
    assert poly_mul(a, poly_mul(b, c)) == poly_mul(poly_mul(a, b), c)
    assert poly_mul(a, b ^ c) == poly_mul(a, b) ^ poly_mul(a, c)
    assert a ^ a == 0


@given(polys, st.integers(min_value=1, max_value=(1 << 6) - 1))
def test_divmod(a, b):
    q, r = poly_divmod(a, b)
    assert poly_mul(q, b) ^ r == a
    assert r.bit_length() < b.bit_length()


@given(polys, polys)
def test_gcd_divides(a, b):
    g = poly_gcd(a, b)
    if g:
        assert poly_divmod(a, g)[1] == 0 and poly_divmod(b, g)[1] == 0


@given(polys)
def test_frobenius(a):
    # squaring is additive in characteristic 2
    b = 0b1011
    assert poly_mul(a ^ b, a ^ b) == poly_mul(a, a) ^ poly_mul(b, b)


@given(polys, polys, st.integers(min_value=0, max_value=15))
def test_specialize_is_a_homomorphism(a, b, v):
    f = GF2k(4)
    assert specialize(a ^ b, v, f) == specialize(a, v, f) ^ specialize(b, v, f)
    assert specialize(poly_mul(a, b), v, f) == f.mul(specialize(a, v, f), specialize(b, v, f))


@given(small, small, small)
def test_compose_is_a_homomorphism(a, b, q):
    assert poly_compose(a ^ b, q) == poly_compose(a, q) ^ poly_compose(b, q)
    assert poly_compose(poly_mul(a, b), q) == poly_mul(poly_compose(a, q), poly_compose(b, q))
    assert poly_compose(a, D) == a
    assert poly_compose(a, 0) == a & 1


@given(small, small, st.integers(min_value=0, max_value=15))
def test_compose_then_specialize(a, q, v):
    f = GF2k(4)
    assert specialize(poly_compose(a, q), v, f) == specialize(a, specialize(q, v, f), f)


@given(polys)
def test_serialization_roundtrip(a):
    assert poly_from_bits(poly_to_bits(a)) == a
    assert parse_poly(poly_str(a)) == a


def test_bits_are_little_endian():
    assert poly_to_bits(0b1011) == "1101"
    assert parse_poly("d^3 + d + 1") == 0b1011


@given(st.integers(min_value=1, max_value=5))
def test_field_axioms(k):
    f = GF2k(k)
    assert is_irreducible(f.modulus) and f.modulus == default_modulus(k)
    for a in f.elements():
        if a:
            assert f.mul(a, f.inv(a)) == 1


def test_reducible_modulus_rejected():
    import pytest

    with pytest.raises(ValueError):
        GF2k(2, 0b101)  # d^2 + 1 = (d + 1)^2
