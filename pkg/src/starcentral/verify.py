"""The full verification suite behind ``starcentral verify-paper``.

Each claim is a named check (``identities.H7``, ``expansion.l2.i2``,
``chain.D1`` ...).  A claim's status is
``pass``, ``fail``, ``truncation-insufficient`` (the configured truncation
is too small to decide it) or ``error``.

Separately, ``notes`` records readings that were tried and rejected: they
are expected to fail and do not count towards the verdict.
"""
from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from . import catalog
from .checker import CheckConfig, is_central, is_identity, witness_is_sound
from .grassmann import GrassmannElement, g_mul, g_pow
from .m11 import TruncationError, symmetric_element
from .membership import (GeneratorSet, identity_generators, is_member,
                         random_V_element, verify_V_lemma)
from .polyalg import (Q, StarPolynomial, commutator, jordan, sym_skew_split, y, z)
from .structure import leading_proper_part, pbw_decompose

SCHEMA = "starcentral/verify-report/1"


@dataclass
class ClaimResult:
    name: str
    status: str
    detail: str = ""
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timings: bool = False):
        out = {"name": self.name, "status": self.status, "detail": self.detail}
        if timings:
            out["seconds"] = round(self.seconds, 3)
        return out


@dataclass
class SuiteReport:
    characteristic: int
    seed: int
    claims: List[ClaimResult] = field(default_factory=list)
    notes: List[ClaimResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.claims)

    def to_dict(self, timings: bool = False):
        return {
            "schema": SCHEMA,
            "characteristic": self.characteristic,
            "seed": self.seed,
            "ok": self.ok,
            "claims": [c.to_dict(timings) for c in self.claims],
            "notes": [c.to_dict(timings) for c in self.notes],
        }

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), sort_keys=True, indent=2)

    def table(self) -> str:
        width = max((len(c.name) for c in self.claims + self.notes), default=10)
        lines = []
        for c in self.claims:
            lines.append(f"{c.name:<{width}}  {c.status:<24} {c.seconds:7.3f}s  {c.detail}")
        if self.notes:
            lines.append("")
            lines.append("rejected readings (expected to fail):")
            for c in self.notes:
                lines.append(f"{c.name:<{width}}  {c.status:<24} {c.seconds:7.3f}s  {c.detail}")
        passed = sum(c.passed for c in self.claims)
        lines.append("")
        lines.append(f"{passed}/{len(self.claims)} claims pass")
        return "\n".join(lines)


# ---------------------------------------------------------------------------- claim bodies
# each returns (ok, detail)

def claim_identity(f: StarPolynomial, cfg: CheckConfig):
    r = is_identity(f, cfg)
    return r.holds, r.strategy


def claim_central(f: StarPolynomial, cfg: CheckConfig, not_identity: bool = False):
    r = is_central(f, cfg)
    if not r.holds:
        return False, f"fails on [f, {r.extra.get('failing_bracket')}]"
    if not_identity and r.extra.get("identity"):
        return False, "central but also an identity"
    return True, r.strategy


def claim_negative(f: StarPolynomial, cfg: CheckConfig):
    r = is_identity(f, cfg)
    if r.holds:
        return False, "unexpectedly an identity"
    return witness_is_sound(r), "witness re-verified"


def claim_all_identities(polys, cfg: CheckConfig):
    polys = list(polys)
    for i, f in enumerate(polys):
        if not is_identity(f, cfg).holds:
            return False, f"instance {i} fails: {f}"
    return True, f"{len(polys)} instances"


def swap_polys(l: int):
    for sigma in itertools.permutations(range(1, l + 1)):
        for tau in itertools.permutations(range(1, l + 1)):
            yield catalog.swap_commutators_residual(l, sigma, tau)


def tail_polys(l: int):
    for sigma in itertools.permutations(range(1, l + 1)):
        yield catalog.swap_tail_residual(l, sigma)


def word_patterns(length: int, alphabet: int):
    """Words of the given length up to renaming of letters (restricted growth strings)."""
    def rec(prefix, top):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for k in range(1, min(top + 1, alphabet) + 1):
            yield from rec(prefix + [k], max(top, k))

    yield from rec([], 0)


def claim_rewrite(length: int, cfg: CheckConfig, alphabet: int = 4):
    words = list(word_patterns(length, alphabet))
    for w in words:
        if not is_identity(catalog.make_eq6_residual(w), cfg).holds:
            return False, f"fails on z-word {w}"
    return True, f"{len(words)} word patterns"


def claim_power_formula(seed: int, samples: int = 50, n: int = 8, kmax: int = 6):
    rng = random.Random(seed)
    for _ in range(samples):
        alpha = GrassmannElement.scalar(Fraction(rng.randint(-5, 5)), n)
        beta = GrassmannElement.zero(n)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if rng.random() < 0.3:
                    alpha = alpha + GrassmannElement.monomial([i, j], n, Fraction(rng.randint(-5, 5)))
            if rng.random() < 0.5:
                beta = beta + GrassmannElement.monomial([i], n, Fraction(rng.randint(-5, 5)))
        x = symmetric_element(alpha, beta)
        power = x
        for k in range(1, kmax + 1):
            if k > 1:
                power = power * x
            expected = g_mul(g_pow(alpha, k - 1), beta) * k
            if power.b != expected:
                return False, f"k={k} fails for alpha={alpha}, beta={beta}"
    return True, f"{samples} samples, k <= {kmax}"


def claim_prop_p(seed: int, cfg: CheckConfig, samples: int = 100):
    rng = random.Random(seed)
    for i in range(samples):
        f = random_V_element(rng)
        if not f:
            continue
        fs, fk = sym_skew_split(f)
        if not is_central(fs, cfg).holds:
            return False, f"sample {i}: symmetric part not central"
        if not is_identity(fk, cfg).holds:
            return False, f"sample {i}: skew part not an identity"
    return True, f"{samples} random elements of V"


def random_polynomial(rng: random.Random, max_degree: int = 5, letters=None) -> StarPolynomial:
    letters = letters or [y(1), y(2), y(3), z(1), z(2)]
    f = StarPolynomial.zero(Q)
    for _ in range(rng.randint(1, 6)):
        term = StarPolynomial.constant(rng.randint(-5, 5), Q)
        for _ in range(rng.randint(0, max_degree)):
            term = term * rng.choice(letters)
        f = f + term
    return f


def claim_pbw_roundtrip(seed: int, samples: int = 200):
    rng = random.Random(seed)
    for i in range(samples):
        f = random_polynomial(rng)
        if f and pbw_decompose(f).recombine() != f:
            return False, f"sample {i} does not recombine: {f}"
    return True, f"{samples} random polynomials"


def suite_central():
    out = [("a", catalog.make_central("a")), ("b", catalog.make_central("b")),
           ("T", catalog.make_T())]
    out += [(f"C{l}", catalog.make_C(l)) for l in (1, 2, 3)]
    out += [(f"D{l}", catalog.make_D(l)) for l in (1, 2, 3)]
    out += [(f"G{n}", catalog.make_G(n)) for n in (1, 2, 3)]
    out += [(f"shift.n{n}", catalog.make_eq8_residual(n)) for n in (1, 2)]
    return out


def claim_leading_parts(cfg: CheckConfig):
    for name, f in suite_central():
        if not is_central(leading_proper_part(f), cfg).holds:
            return False, f"leading proper part of {name} is not central"
    return True, f"{len(suite_central())} central polynomials"


def claim_member(target, *gensets):
    cert = is_member(target, *gensets)
    if cert is None:
        return False, "not found"
    return cert.verify(), f"{len(cert.terms)} terms, level {cert.stats['level']}"


def claim_not_member(target, *gensets):
    cert = is_member(target, *gensets)
    if cert is not None:
        return False, "unexpected certificate"
    return True, "outside the span of the enumerated consequences"


# ---------------------------------------------------------------------------- the suite

def build_claims(characteristic: int = 0, seed: int = 0, strategy: str = "exhaustive",
                 truncation: Optional[int] = None) -> List[Tuple[str, Callable]]:
    cfg = CheckConfig(0, strategy, seed, truncation)
    claims: List[Tuple[str, Callable]] = []
    add = lambda name, fn: claims.append((name, fn))

    for k in range(1, 11):
        add(f"identities.H{k}", lambda k=k: claim_identity(catalog.make_H(k), cfg))
    add("control.[y1,z1]", lambda: claim_negative(commutator(y(1), z(1)), cfg))
    add("control.z1z2-z2z1", lambda: claim_negative(z(1) * z(2) - z(2) * z(1), cfg))
    add("control.y1", lambda: claim_negative(y(1), cfg))

    add("central.a", lambda: claim_central(catalog.make_central("a"), cfg, not_identity=True))
    add("central.b", lambda: claim_central(catalog.make_central("b"), cfg, not_identity=True))
    if characteristic:
        pcfg = CheckConfig(characteristic, "symbolic", seed, truncation)
        add(f"central.c.p{characteristic}",
            lambda: claim_central(catalog.make_central("c", characteristic), pcfg))

    for l in (1, 2, 3):
        add(f"swap.commutators.l{l}", lambda l=l: claim_all_identities(swap_polys(l), cfg))
        add(f"swap.tail.l{l}", lambda l=l: claim_all_identities(tail_polys(l), cfg))
    for l in (1, 2, 3):
        for i in range(1, l + 2):
            add(f"expansion.l{l}.i{i}", lambda i=i, l=l: claim_identity(catalog.make_eq1_residual(i, l), cfg))
    for l in (1, 2, 3):
        add(f"families.C{l}", lambda l=l: claim_central(catalog.make_C(l), cfg))
        add(f"families.D{l}", lambda l=l: claim_central(catalog.make_D(l), cfg))
    for n in (1, 2, 3):
        add(f"families.G{n}", lambda n=n: claim_central(catalog.make_G(n), cfg))

    ident = identity_generators()
    b_space = GeneratorSet([catalog.make_central("b")], "star_space", "(b)")
    add("chain.C1-from-b", lambda: claim_member(catalog.make_C(1), b_space))
    chain = {}

    def chain_step(name):
        if not chain:
            chain["report"] = verify_V_lemma(2, 2)
        step = next(s for s in chain["report"].steps if s.name == name)
        if not step.found:
            return False, f"not found against {step.generators}"
        return step.certificate.verify(), f"{len(step.certificate.terms)} terms via {step.generators}"

    for name, label in (("G1", "chain.G1"), ("G2", "chain.G2"), ("C1", "chain.C1"),
                        ("D1", "chain.D1"), ("C2", "chain.C2"), ("D2", "chain.D2")):
        add(label, lambda name=name: chain_step(name))
    add("membership.y1-not-in-I", lambda: claim_not_member(y(1), ident))

    for length in (2, 4, 6):
        add(f"rewrite.len{length}", lambda length=length: claim_rewrite(length, cfg))
    for n in (1, 2):
        add(f"shift.n{n}", lambda n=n: claim_central(catalog.make_eq8_residual(n), cfg))

    add("power-formula", lambda: claim_power_formula(seed))
    add("sym-skew-split", lambda: claim_prop_p(seed, cfg))
    add("pbw.roundtrip", lambda: claim_pbw_roundtrip(seed))
    add("pbw.leading-part", lambda: claim_leading_parts(cfg))

    a = catalog.make_central("a")
    T = catalog.make_T()
    b = catalog.make_central("b")
    add("generators.T-from-b", lambda: claim_member(T, GeneratorSet([b, a], "star_space", "(b),(a)"), ident))
    add("generators.b-from-T", lambda: claim_member(b, GeneratorSet([T, a], "star_space", "T,(a)"), ident))
    return claims


def build_notes(cfg: CheckConfig) -> List[Tuple[str, Callable]]:
    """Literal readings that do not hold in R, kept visible on purpose."""
    c = commutator
    b_literal = c(y(1), z(1), z(2)) - 2 * jordan(z(1), z(2)) * y(1)
    h4_literal = c(y(1), z(1), z(2), z(3)) - 2 * jordan(z(1), z(2)) * c(y(1), z(3))
    d1_minus = y(1) * catalog.make_C(1) - c(y(1), z(1)) * c(y(2), z(2))
    shift_literal = catalog.make_G(1) * y(1) - Fraction(1, 2) * c(y(1), z(1), z(2))

    def central_note(f):
        r = is_central(f, cfg)
        return r.holds, ("central" if r.holds else f"not central, witness value {r.value}")

    def identity_note(f):
        r = is_identity(f, cfg)
        return r.holds, ("identity" if r.holds else f"not an identity, witness value {r.value}")

    return [
        ("literal.b-with-2", lambda: central_note(b_literal)),
        ("literal.H4-with-2", lambda: identity_note(h4_literal)),
        ("literal.D1-minus", lambda: central_note(d1_minus)),
        ("literal.shift-n1-half", lambda: central_note(shift_literal)),
    ]


def _run(name, fn) -> ClaimResult:
    t = time.perf_counter()
    try:
        ok, detail = fn()
        status = "pass" if ok else "fail"
    except TruncationError as exc:
        status, detail = "truncation-insufficient", str(exc)
    except Exception as exc:  # reported, never swallowed silently
        status, detail = "error", f"{type(exc).__name__}: {exc}"
    return ClaimResult(name, status, detail, time.perf_counter() - t)


def run_suite(characteristic: int = 0, seed: int = 0, strategy: str = "exhaustive",
              truncation: Optional[int] = None, only: Optional[str] = None,
              notes: bool = True) -> SuiteReport:
    report = SuiteReport(characteristic, seed)
    for name, fn in build_claims(characteristic, seed, strategy, truncation):
        if only and not name.startswith(only):
            continue
        report.claims.append(_run(name, fn))
    if notes and not only:
        cfg = CheckConfig(0, strategy, seed, truncation)
        for name, fn in build_notes(cfg):
            report.notes.append(_run(name, fn))
    return report
