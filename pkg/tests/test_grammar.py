from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from starcentral.grammar import ParseError, format_poly, parse_poly
from starcentral.polyalg import StarPolynomial, commutator, jordan, y, z
from starcentral.scalars import RingConfig


@pytest.mark.parametrize("text, expected", [
    ("z1*z2 - z2*z1", "z1*z2 - z2*z1"),
    ("jord(z1,z2)", "1/2*z1*z2 + 1/2*z2*z1"),
    ("adj(y1*z1)", "-1*z1*y1"),
    ("0", "0"),
    ("3", "3"),
    ("-y1", "-1*y1"),
])
def test_canonical_forms(text, expected):
    assert format_poly(parse_poly(text)) == expected


def test_brackets_and_powers():
    assert parse_poly("[y1,z1,z2]") == commutator(y(1), z(1), z(2))
    assert parse_poly("y1^3") == y(1) * y(1) * y(1)
    assert parse_poly("2*jord(z1,z2)*y1") == 2 * jordan(z(1), z(2)) * y(1)
    assert parse_poly("(y1 + z1)*(y1 - z1)") == (y(1) + z(1)) * (y(1) - z(1))


@pytest.mark.parametrize("text, pos", [("z1*((", 5), ("y1 + ", 5), ("y0", 0), ("q1", 0),
                                       ("[y1]", 0), ("1/0*y1", 2), ("", 0)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_poly(text)
    assert exc.value.pos == pos


def test_char_p_parse():
    f = parse_poly("4*y1", RingConfig(3))
    assert format_poly(f) == "y1"


LETTERS = [y(1), y(2), z(1), z(2)]


@st.composite
def polys(draw):
    f = StarPolynomial.zero()
    for _ in range(draw(st.integers(0, 4))):
        num = draw(st.integers(-9, 9))
        den = draw(st.integers(1, 4))
        term = StarPolynomial.constant(Fraction(num, den))
        for _ in range(draw(st.integers(0, 4))):
            term = term * draw(st.sampled_from(LETTERS))
        f = f + term
    return f


@settings(max_examples=80)
@given(polys())
def test_print_parse_is_a_fixed_point(f):
    text = format_poly(f)
    assert parse_poly(text) == f
    assert format_poly(parse_poly(text)) == text
