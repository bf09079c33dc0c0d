import random
from fractions import Fraction

import pytest

from starcentral.grassmann import GrassmannElement, e
from starcentral.m11 import (M11Element, ParityError, TruncationError, is_central_element,
                             m11_commutator, m11_star, make_test_family, required_truncation,
                             skew_element, spanning_set, symmetric_element)
from starcentral.polyalg import Indeterminate, commutator, y, z

N = 6


def rand_even(rng):
    out = GrassmannElement.scalar(Fraction(rng.randint(-3, 3)), N)
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            if rng.random() < 0.2:
                out = out + GrassmannElement.monomial([i, j], N, Fraction(rng.randint(-3, 3)))
    return out


def rand_odd(rng):
    out = GrassmannElement.zero(N)
    for i in range(1, N + 1):
        if rng.random() < 0.4:
            out = out + GrassmannElement.monomial([i], N, Fraction(rng.randint(-3, 3)))
    return out


def rand_elem(rng):
    return M11Element(rand_even(rng), rand_odd(rng), rand_odd(rng), rand_even(rng))


def test_star_is_an_involutive_anti_automorphism():
    rng = random.Random(3)
    for _ in range(40):
        x, w = rand_elem(rng), rand_elem(rng)
        assert m11_star(m11_star(x)) == x
        assert m11_star(x * w) == m11_star(w) * m11_star(x)


def test_symmetric_and_skew_elements():
    rng = random.Random(5)
    for _ in range(20):
        a, b = rand_even(rng), rand_odd(rng)
        assert m11_star(symmetric_element(a, b)) == symmetric_element(a, b)
        assert m11_star(skew_element(a, b)) == -skew_element(a, b)


def test_jordan_product_of_skews_is_central():
    rng = random.Random(7)
    for _ in range(20):
        u = skew_element(rand_even(rng), rand_odd(rng))
        v = skew_element(rand_even(rng), rand_odd(rng))
        assert is_central_element(u * v + v * u)


def test_non_central_element_detected():
    x = symmetric_element(GrassmannElement.zero(N), e(1, n=N))
    assert not is_central_element(x)
    assert is_central_element(M11Element.identity(N))


def test_parity_is_enforced():
    with pytest.raises(ParityError):
        M11Element(e(1, n=2), GrassmannElement.zero(2), GrassmannElement.zero(2),
                   GrassmannElement.zero(2))
    with pytest.raises(ParityError):
        symmetric_element(e(1, n=2), e(2, n=2))


def test_spanning_set_size():
    assert len(spanning_set(3)) == 2 + 2 * 3 + 2 * 3


def test_commutator_of_identity_vanishes():
    rng = random.Random(1)
    x = rand_elem(rng)
    assert not m11_commutator(M11Element.identity(N), x)


def test_test_families():
    f = commutator(y(1), z(1))
    assert required_truncation(f, "spanning") == 4
    fam = make_test_family(f, "spanning")
    assert len(fam.candidates(Indeterminate("y", 1))) == 3
    assert all(m11_star(x) == x for x in fam.symmetric)
    assert all(m11_star(x) == -x for x in fam.skew)
    with pytest.raises(TruncationError):
        make_test_family(f, "spanning", n=2)
    sym = make_test_family(f, "generic-symbolic")
    assert len(sym.candidates(Indeterminate("z", 1))) == 1
    rnd1 = make_test_family(f, "random", seed=4)
    rnd2 = make_test_family(f, "random", seed=4)
    assert rnd1.symmetric == rnd2.symmetric
