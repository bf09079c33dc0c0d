import pytest

from starcentral import catalog
from starcentral.checker import is_central, is_identity
from starcentral.polyalg import commutator, multidegree, y, z


def test_P_shapes():
    assert catalog.make_P(1, 1) == commutator(y(2), z(1), z(2))
    assert catalog.make_P(2, 1) == commutator(y(2), z(2), z(1))
    assert catalog.make_P(3, 2) == commutator(y(2), z(3), z(1)) * commutator(y(3), z(2))


def test_C1_shape():
    C1 = catalog.make_C(1)
    assert C1 == commutator(y(2), z(2), z(1)) - commutator(y(2), z(1), z(2))


@pytest.mark.parametrize("l", [1, 2])
def test_families_are_multilinear(l):
    for f in (catalog.make_C(l), catalog.make_D(l)):
        assert multidegree(f).is_multilinear()


def test_b_is_central_not_identity():
    b = catalog.make_central("b")
    assert is_central(b).holds and not is_identity(b).holds


def test_pair_family_uses_remaining_indices():
    f = catalog.make_P_pair(1, 3, 1)
    assert f == commutator(y(2), z(1), z(3), z(2))


def test_swap_residuals_vanish_for_identity_permutations():
    assert not catalog.swap_commutators_residual(2, (1, 2), (1, 2))
    assert not catalog.swap_tail_residual(2, (1, 2))


def test_rewrite_residual_needs_even_length():
    with pytest.raises(ValueError):
        catalog.make_eq6_residual((1, 2, 3))


@pytest.mark.parametrize("bad", [lambda: catalog.make_H(11), lambda: catalog.make_P(3, 1),
                                 lambda: catalog.make_C(0), lambda: catalog.make_G(0),
                                 lambda: catalog.make_central("c", 2),
                                 lambda: catalog.make_central("x")])
def test_bad_parameters(bad):
    with pytest.raises(ValueError):
        bad()


def test_registry():
    assert catalog.get("H", 4) == catalog.make_H(4)
    assert catalog.get("expansion", 1, 2) == catalog.make_eq1_residual(1, 2)
    assert catalog.get("rewrite", 1, 2) == catalog.make_eq6_residual((1, 2))
    assert catalog.get("c", 3).ring.characteristic == 3
    with pytest.raises(KeyError):
        catalog.get("nope")
    names = {e.name for e in catalog.entries()}
    assert {"H1", "a", "b", "T", "C1", "D2", "G2", "shift1"} <= names
