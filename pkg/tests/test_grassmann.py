from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from starcentral.grassmann import (GrassmannElement, TruncationMismatch, e, g_mul, g_mul_sorted,
                                   g_parity_project, g_pow, inversions_mask, inversions_sorted,
                                   mask_of)

N = 6


@st.composite
def elements(draw, parity=None):
    out = GrassmannElement.zero(N)
    for _ in range(draw(st.integers(0, 4))):
        size = draw(st.integers(0, 3))
        if parity == "even":
            size = draw(st.sampled_from([0, 2]))
        elif parity == "odd":
            size = draw(st.sampled_from([1, 3]))
        idx = draw(st.lists(st.integers(1, N), min_size=size, max_size=size, unique=True))
        out = out + GrassmannElement.monomial(idx, N, Fraction(draw(st.integers(-3, 3))))
    return out


def test_generators_anticommute_and_square_to_zero():
    assert e(1, n=3) * e(2, n=3) == -(e(2, n=3) * e(1, n=3))
    assert not e(1, n=3) * e(1, n=3)
    assert GrassmannElement.monomial([2, 1], 3) == -e(1, 2, n=3)


@given(st.lists(st.integers(1, 10), unique=True), st.lists(st.integers(1, 10), unique=True))
def test_sign_kernels_agree(s, t):
    if set(s) & set(t):
        return
    assert inversions_mask(mask_of(s), mask_of(t)) % 2 == inversions_sorted(sorted(s), sorted(t)) % 2


@settings(max_examples=60)
@given(elements(), elements(), elements())
def test_associative_and_matches_reference(a, b, c):
    assert g_mul(g_mul(a, b), c) == g_mul(a, g_mul(b, c))
    assert g_mul(a, b) == g_mul_sorted(a, b)


@settings(max_examples=60)
@given(elements("even"), elements())
def test_even_part_is_central(a, b):
    assert a * b == b * a


@settings(max_examples=60)
@given(elements("odd"), elements("odd"))
def test_odd_parts_anticommute(a, b):
    assert a * b == -(b * a)


@given(elements())
def test_parity_projection_splits(a):
    even, odd = g_parity_project(a, "even"), g_parity_project(a, "odd")
    assert even + odd == a
    assert even.is_even() and odd.is_odd()


def test_powers():
    x = GrassmannElement.scalar(Fraction(2), 4) + e(1, 2, n=4)
    assert g_pow(x, 3) == x * x * x
    assert g_pow(x, 0) == GrassmannElement.scalar(Fraction(1), 4)


def test_truncation_is_enforced():
    with pytest.raises(TruncationMismatch):
        e(1, n=2) + e(1, n=3)
    with pytest.raises(ValueError):
        e(5, n=3)


def test_zero_coefficients_are_dropped():
    assert not GrassmannElement.monomial([1], 3, Fraction(0)).terms


def test_printing():
    assert str(e(1, 3, n=4)) == "e1*e3"
