import json
import random

import pytest

from starcentral.catalog import make_central, make_H
from starcentral.checker import (CheckConfig, evaluate, exhaustive_reference, is_central,
                                 is_identity, witness_is_sound, check_sym_skew_theorem)
from starcentral.m11 import TruncationError
from starcentral.polyalg import (StarPolynomial, commutator, jordan, multilinearize, y, z)
from starcentral.scalars import RingConfig


def random_multilinear(rng, letters):
    f = StarPolynomial.zero()
    for _ in range(rng.randint(1, 4)):
        order = letters[:]
        rng.shuffle(order)
        term = StarPolynomial.constant(rng.randint(-2, 2))
        for x in order:
            term = term * x
        f = f + term
    return f


def test_parity_scan_agrees_with_three_shape_oracle():
    rng = random.Random(11)
    letter_sets = [[y(1), z(1)], [z(1), z(2)], [y(1), z(1), z(2)], [y(1), y(2), z(1)]]
    for _ in range(40):
        f = random_multilinear(rng, rng.choice(letter_sets))
        if f:
            assert is_identity(f).holds == exhaustive_reference(f)
    for f in (make_H(2), make_H(3), commutator(z(1), z(2)) * z(3)):
        assert is_identity(f).holds == exhaustive_reference(f)


def test_linearized_path_matches_materialized_linearization():
    for f in (z(1) * z(1), y(1) * y(1) * z(1) - z(1) * y(1) * y(1),
              commutator(y(1), z(1)) * commutator(y(1), z(1)), jordan(z(1), z(1))):
        assert is_identity(f).holds == is_identity(multilinearize(f)).holds


@pytest.mark.parametrize("k", range(1, 11))
def test_listed_identities(k):
    r = is_identity(make_H(k))
    assert r.holds and r.completeness == "exact"


@pytest.mark.parametrize("f", [commutator(y(1), z(1)), z(1) * z(2) - z(2) * z(1), y(1)])
def test_negatives_have_sound_witnesses(f):
    r = is_identity(f)
    assert not r.holds
    assert witness_is_sound(r)
    assert evaluate(r.polynomial, r.witness) == r.value


def test_centrality():
    assert is_central(make_central("a")).holds
    assert is_central(make_central("b")).holds
    r = is_central(y(1))
    assert not r.holds and r.extra["failing_bracket"] is not None


def test_strategies_agree_on_small_inputs():
    for strategy in ("symbolic", "random"):
        cfg = CheckConfig(strategy=strategy, seed=3)
        assert is_identity(make_H(1), cfg).holds
        assert not is_identity(commutator(y(1), z(1)), cfg).holds
        assert is_central(make_central("a"), cfg).holds


def test_random_strategy_is_marked_heuristic():
    r = is_identity(make_H(3), CheckConfig(strategy="random"))
    assert r.completeness == "heuristic"


@pytest.mark.parametrize("p", [3, 5])
def test_power_of_y_in_small_characteristic(p):
    ring = RingConfig(p)
    cfg = CheckConfig(p, "symbolic")
    assert is_central(y(1, ring) ** p, cfg).holds
    assert not is_central(y(1, ring) ** (p - 1), cfg).holds


def test_power_of_y_not_central_in_char_zero():
    assert not is_central(y(1) ** 3).holds


def test_truncation_override_too_small():
    with pytest.raises(TruncationError):
        is_identity(make_H(1), CheckConfig(truncation=1))


def test_bad_config():
    with pytest.raises(ValueError):
        CheckConfig(strategy="guess")
    with pytest.raises(ValueError):
        CheckConfig(characteristic=2)


def test_report_json_is_versioned():
    data = json.loads(is_central(y(1)).to_json())
    assert data["schema"].startswith("starcentral/check-report/")
    assert data["verdict"] == "fails"
    assert "witness" in data


def test_sym_skew_split_holds_for_b():
    assert check_sym_skew_theorem(make_central("b"))
    with pytest.raises(ValueError):
        check_sym_skew_theorem(y(1))


def test_zero_polynomial_is_an_identity():
    assert is_identity(StarPolynomial.zero()).holds
