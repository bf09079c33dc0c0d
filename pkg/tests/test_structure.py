import random

import pytest

from starcentral.catalog import make_C, make_D, make_central
from starcentral.checker import is_central
from starcentral.polyalg import Indeterminate, StarPolynomial, commutator, multidegree, y, z
from starcentral.structure import (DegreeBudgetExceeded, is_proper, leading_proper_part,
                                   pbw_decompose, pbw_decompose_linear, proper_spanning_set, rank)
from starcentral.verify import random_polynomial


def test_single_swap():
    dec = pbw_decompose(z(1) * y(1)).as_dict()
    assert dec == {(1,): z(1), (0,): -commutator(y(1), z(1))}


def test_D1_decomposes_into_C1_and_commutators():
    dec = pbw_decompose(make_D(1)).as_dict()
    assert dec[(1, 0)] == make_C(1)
    assert dec[(0, 0)] == commutator(y(1), z(1)) * commutator(y(2), z(2))
    assert rank(make_D(1)) == (1, 0)


def test_roundtrip_on_random_polynomials():
    rng = random.Random(2)
    for _ in range(100):
        f = random_polynomial(rng)
        assert pbw_decompose(f).recombine() == f


def test_straightening_agrees_with_linear_solve():
    rng = random.Random(9)
    letters = [y(1), y(2), z(1)]
    checked = 0
    while checked < 15:
        f = StarPolynomial.zero()
        perm = letters[:]
        for _ in range(3):
            rng.shuffle(perm)
            term = StarPolynomial.constant(rng.randint(-3, 3))
            for x in perm:
                term = term * x
            f = f + term
        if not f:
            continue
        a = pbw_decompose(f)
        b = pbw_decompose_linear(f)
        assert a.recombine() == b.recombine() == f
        assert a.as_dict() == b.as_dict()
        checked += 1


def test_entries_in_decreasing_order():
    dec = pbw_decompose(y(2) * y(1) * z(1))
    exps = [a for a, _ in dec.entries]
    assert exps == sorted(exps, reverse=True)


def test_proper_parts_are_proper():
    dec = pbw_decompose(y(2) * z(1) * y(1))
    for _, w in dec.entries:
        assert is_proper(w)


def test_leading_part_of_central_polynomials_is_central():
    for f in (make_central("b"), make_C(1), make_D(1)):
        assert is_central(leading_proper_part(f)).holds


def test_rank_needs_multihomogeneous_input():
    with pytest.raises(ValueError):
        rank(y(1) + z(1))
    with pytest.raises(ValueError):
        rank(StarPolynomial.zero())


def test_spanning_set_and_cap():
    D = {Indeterminate("y", 1): 1, Indeterminate("z", 1): 1}
    assert {str(p) for p in proper_spanning_set(D)} == {"y1*z1 - z1*y1", "-1*y1*z1 + z1*y1"}
    with pytest.raises(DegreeBudgetExceeded):
        proper_spanning_set({Indeterminate("z", 1): 9})
    with pytest.raises(DegreeBudgetExceeded):
        pbw_decompose(y(1) ** 9)


def test_multidegree_is_preserved():
    f = z(2) * y(2) * z(1) * y(1)
    for _, w in pbw_decompose(f).entries:
        assert w.degree <= f.degree
    assert multidegree(pbw_decompose(f).recombine()) == multidegree(f)
