import json

import pytest

from starcentral.catalog import make_C, make_D, make_G, make_H, make_central, make_T
from starcentral.checker import is_central, is_identity
from starcentral.membership import (CertificateError, DegreeBudgetExceeded, GeneratorSet,
                                    MembershipCertificate, V_generators, consequences,
                                    identity_generators, is_member, verify_V_lemma)
from starcentral.polyalg import (CharacteristicError, Indeterminate, commutator, jordan, y, z)
from starcentral.scalars import RingConfig

Y1, Y2 = Indeterminate("y", 1), Indeterminate("y", 2)
Z1 = Indeterminate("z", 1)


def test_consequences_of_a_commutator():
    out = consequences(GeneratorSet([commutator(y(1), y(2))]), {Y1: 1, Y2: 1})
    assert set(out) == {commutator(y(1), y(2)), commutator(y(2), y(1))}


def test_consequences_contain_the_jordan_substitution():
    S = GeneratorSet([jordan(z(1), z(2))])
    D = {Y1: 1, Z1: 1, Indeterminate("z", 2): 1}
    expected = jordan(jordan(y(1), z(1)), z(2))
    assert expected in consequences(S, D)


def test_C1_from_b():
    cert = is_member(make_C(1), GeneratorSet([make_central("b")]))
    assert cert is not None and cert.verify()


def test_swapped_H1():
    cert = is_member(commutator(y(2), y(1)), GeneratorSet([make_H(1)]))
    assert cert is not None


def test_y1_not_in_identities():
    assert is_member(y(1), identity_generators()) is None


def test_certified_members_pass_the_checker():
    ident = identity_generators()
    target = z(4) * make_H(3) * y(1) - make_H(3)
    # not multihomogeneous: rejected
    with pytest.raises(ValueError):
        is_member(target, ident)
    f = z(5) * make_H(3)
    cert = is_member(f, ident)
    assert cert is not None and is_identity(f).holds
    g = make_C(1)
    assert is_member(g, V_generators()) is not None and is_central(g).holds


def test_monotonicity():
    small = GeneratorSet([make_central("b")])
    big = GeneratorSet([make_central("b"), make_central("a")])
    for f in (make_C(1), make_T()):
        if is_member(f, small) is not None:
            assert is_member(f, big) is not None


def test_generator_cross_check():
    ident = identity_generators()
    a, b, T = make_central("a"), make_central("b"), make_T()
    assert is_member(T, GeneratorSet([b, a]), ident) is not None
    assert is_member(b, GeneratorSet([T, a]), ident) is not None


def test_certificate_json_and_tamper_detection():
    cert = is_member(make_C(1), GeneratorSet([make_central("b")]))
    data = json.loads(cert.to_json())
    assert data["schema"].startswith("starcentral/membership-certificate/")
    assert len(data["terms"]) == len(cert.terms)
    with pytest.raises(CertificateError):
        MembershipCertificate(make_C(1) * 2, cert.terms)


def test_chain_small():
    report = verify_V_lemma(L=1, N=2)
    assert report.ok
    assert [s.name for s in report.steps] == ["G1", "G2", "C1", "D1"]
    for s in report.steps:
        assert s.certificate.verify()


def test_errors():
    with pytest.raises(ValueError):
        GeneratorSet([])
    with pytest.raises(ValueError):
        GeneratorSet([y(1)], mode="algebra")
    with pytest.raises(CharacteristicError):
        GeneratorSet([y(1, RingConfig(3))])
    with pytest.raises(DegreeBudgetExceeded):
        is_member(y(1) ** 8, identity_generators())
    with pytest.raises(ValueError):
        is_member(y(1))
