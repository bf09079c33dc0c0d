from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from starcentral.scalars import (Fp, RingConfig, RingMismatch, SymbolAllocator, SymPoly,
                                 format_scalar, parse_scalar, scalar_add, scalar_inverse_of_two,
                                 scalar_mul)

PRIMES = [3, 5, 7, 101]
fractions = st.fractions(max_denominator=50).filter(lambda x: abs(x.numerator) < 10**6)


@st.composite
def residues(draw):
    p = draw(st.sampled_from(PRIMES))
    return p, [Fp(draw(st.integers(-1000, 1000)), p) for _ in range(3)]


@given(residues())
def test_fp_field_axioms(data):
    p, (a, b, c) = data
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == Fp(0, p)
    if a:
        assert a * (Fp(1, p) / a) == Fp(1, p)


@given(residues())
def test_frobenius(data):
    p, (a, b, _) = data
    assert (a + b) ** p == a ** p + b ** p


@given(fractions, fractions, fractions)
def test_rational_axioms_through_ring(a, b, c):
    Q = RingConfig(0)
    a, b, c = Q(a), Q(b), Q(c)
    assert scalar_add(scalar_add(a, b), c) == scalar_add(a, scalar_add(b, c))
    assert scalar_mul(a, scalar_add(b, c)) == scalar_add(scalar_mul(a, b), scalar_mul(a, c))


def test_residues_are_normalized():
    assert Fp(-1, 5).value == 4
    assert Fp(12, 5) == Fp(2, 5)
    assert str(Fp(7, 5)) == "2"


def test_mixing_rings_is_rejected():
    with pytest.raises(RingMismatch):
        Fp(1, 3) + Fp(1, 5)
    with pytest.raises(RingMismatch):
        Fp(1, 3) + Fraction(1, 2)
    with pytest.raises(RingMismatch):
        RingConfig(5)(Fp(1, 3))


@pytest.mark.parametrize("p", [2, 4, 9, -3, 1])
def test_bad_characteristics(p):
    with pytest.raises(ValueError):
        RingConfig(p)


def test_inverse_of_two():
    assert scalar_inverse_of_two(RingConfig(0)) == Fraction(1, 2)
    half = scalar_inverse_of_two(RingConfig(7))
    assert half * 2 == Fp(1, 7)


def test_coercion_and_denominators():
    F3 = RingConfig(3)
    assert F3(Fraction(1, 2)) == Fp(2, 3)
    with pytest.raises(ZeroDivisionError):
        F3(Fraction(1, 3))
    assert RingConfig(0)("3/4") == Fraction(3, 4)


def test_parse_and_format_scalars():
    assert parse_scalar("-6/4") == Fraction(-3, 2)
    assert format_scalar(Fraction(-3, 2)) == "-3/2"
    assert format_scalar(Fraction(5)) == "5"


def test_sympoly_is_a_commutative_ring():
    t1, t2 = SymPoly.var(1), SymPoly.var(2)
    assert t1 * t2 == t2 * t1
    assert (t1 + t2) ** 2 == t1 * t1 + t1 * t2 * 2 + t2 * t2
    assert not (t1 - t1)
    assert str(t1 * 3) == "3*t1"


def test_sympoly_over_fp_obeys_frobenius():
    one = Fp(1, 3)
    t1, t2 = SymPoly.var(1, one), SymPoly.var(2, one)
    assert (t1 + t2) ** 3 == t1 ** 3 + t2 ** 3


def test_allocator_gives_fresh_symbols():
    alloc = SymbolAllocator()
    a, b = alloc.fresh(), alloc.fresh()
    assert a != b
    assert (a * b).monomials()
