"""Membership in *-spaces and *-ideals at a fixed multidegree, with certificates.

A *-space generated by multilinear polynomials is spanned, in a given
multidegree, by the substitution instances where each ``y`` variable becomes
``(m + m*)/2`` and each ``z`` variable ``(m - m*)/2`` for words ``m`` in the
target letters; the *-ideal additionally allows a left and right word frame.
Consequences are enumerated by increasing complexity (how far the
substitution is from a plain renaming) and fed to an incremental rank
computation, which stops as soon as the target is in the span.

"not found" only means the target is outside the span of the enumerated
family, never that it is outside the ideal in general.
"""
from __future__ import annotations

import itertools
import json
import random
import time
from functools import lru_cache
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .grammar import format_poly
from .linalg import DenseSpan
from .polyalg import (CharacteristicError, Indeterminate, MultiDegree, Q,
                      StarPolynomial, homogeneous_components, multidegree,
                      multilinearize, star_word, substitute, word_str)

DEGREE_CAP = 7
BATCH = 256
MODES = ("star_space", "star_ideal")


class DegreeBudgetExceeded(ValueError):
    pass


class CertificateError(AssertionError):
    """A certificate failed to recombine to its target."""


@dataclass(frozen=True)
class _Prepared:
    source: int  # index into GeneratorSet.polys
    poly: StarPolynomial  # multilinear, multihomogeneous
    variables: Tuple[Indeterminate, ...]
    terms: Tuple[Tuple[Tuple[int, ...], int], ...]  # positions into variables, integer coeff
    scale: Fraction  # poly == scale * sum(terms)


def _prepare(idx: int, f: StarPolynomial) -> List[_Prepared]:
    if f.ring.characteristic:
        raise CharacteristicError("membership is only available in characteristic 0")
    out = []
    for comp in homogeneous_components(f).values():
        g = multilinearize(comp)
        variables = tuple(sorted(g.variables()))
        pos = {x: i for i, x in enumerate(variables)}
        denom = 1
        for c in g.terms.values():
            denom = denom * Fraction(c).denominator // _gcd(denom, Fraction(c).denominator)
        terms = tuple((tuple(pos[x] for x in w), int(Fraction(c) * denom))
                      for w, c in sorted(g.terms.items(), key=lambda t: (len(t[0]), t[0])))
        out.append(_Prepared(idx, g, variables, terms, Fraction(1, denom)))
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class GeneratorSet:
    """Generators of a *-space (``star_space``) or *-ideal (``star_ideal``)."""

    def __init__(self, polys: Sequence[StarPolynomial], mode: str = "star_space", label: str = ""):
        polys = [p for p in polys]
        if not polys:
            raise ValueError("a generator set needs at least one polynomial")
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
        self.polys = polys
        self.mode = mode
        self.label = label or mode
        self.prepared: List[_Prepared] = []
        for i, p in enumerate(polys):
            if p:
                self.prepared.extend(_prepare(i, p))

    def __repr__(self):
        return f"GeneratorSet({self.label!r}, {self.mode}, {len(self.polys)} polys)"


def identity_generators() -> GeneratorSet:
    """The *-ideal of identities of R, given by its generators H1..H10."""
    from .catalog import make_H

    return GeneratorSet([make_H(k) for k in range(1, 11)], "star_ideal", "I")


# ---------------------------------------------------------------------------- enumeration

@dataclass(frozen=True)
class _Instance:
    gen: _Prepared
    words: Tuple[Tuple[Indeterminate, ...], ...]  # one per generator variable
    left: Tuple[Indeterminate, ...]
    right: Tuple[Indeterminate, ...]


def _image(word, kind) -> Optional[List[Tuple[tuple, int]]]:
    """``m + m*`` (y) or ``m - m*`` (z) as signed words; None when it vanishes."""
    if not word:
        return [((), 1)] if kind == "y" else None
    sign, rev = star_word(word)
    s = sign if kind == "y" else -sign
    if rev == word:
        return [(word, 2)] if s == 1 else None
    return [(word, 1), (rev, s)]


def _instance_vector(inst: _Instance) -> Dict[tuple, int]:
    images = []
    for x, w in zip(inst.gen.variables, inst.words):
        im = _image(w, x.kind)
        if im is None:
            return {}
        images.append(im)
    out: Dict[tuple, int] = {}
    for positions, c in inst.gen.terms:
        for choice in itertools.product(*(images[p] for p in positions)):
            word = inst.left
            coef = c
            for piece, s in choice:
                word = word + piece
                coef *= s
            word = word + inst.right
            out[word] = out.get(word, 0) + coef
    return {w: c for w, c in out.items() if c}


def _instance_scale(inst: _Instance) -> Fraction:
    """``consequence == scale * _instance_vector`` with normalized sym/skew parts."""
    return inst.gen.scale / 2 ** sum(1 for w in inst.words if w)


def _size_vectors(kinds: Sequence[str], framed: bool, total: int, level: int):
    return _size_table(tuple(kinds), framed, total).get(level, ())


@lru_cache(maxsize=4096)
def _size_table(kinds: Tuple[str, ...], framed: bool, total: int) -> Dict[int, tuple]:
    """Bin sizes summing to ``total``, bucketed by complexity level."""
    nbins = len(kinds) + (2 if framed else 0)
    table: Dict[int, list] = {}

    def rec(prefix, left):
        i = len(prefix)
        if i == nbins:
            if left == 0:
                var_sizes = prefix[:len(kinds)]
                lvl = sum(abs(s - 1) for s in var_sizes) + sum(prefix[len(kinds):])
                table.setdefault(lvl, []).append(tuple(prefix))
            return
        low = 1 if i < len(kinds) and kinds[i] == "z" else 0
        for s in range(low, left + 1):
            prefix.append(s)
            rec(prefix, left - s)
            prefix.pop()

    rec([], total)
    return {lvl: tuple(v) for lvl, v in table.items()}


def _distinct_permutations(letters: Sequence[Indeterminate]) -> List[tuple]:
    counts = Counter(letters)
    keys = sorted(counts)
    n = len(letters)
    out = []

    def rec(prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                prefix.append(k)
                rec(prefix)
                prefix.pop()
                counts[k] += 1

    rec([])
    return out


def _instances(gen: _Prepared, D: MultiDegree, framed: bool, level: int,
               perms: List[tuple]) -> Iterator[_Instance]:
    kinds = [x.kind for x in gen.variables]
    k = len(kinds)
    for sizes in _size_vectors(kinds, framed, D.total, level):
        cuts = list(itertools.accumulate(sizes))
        starts = [0] + cuts[:-1]
        for perm in perms:
            pieces = [perm[a:b] for a, b in zip(starts, cuts)]
            words = pieces[:k]
            # m and m* give the same image up to sign; keep one representative
            if any(w and star_word(w)[1] < w for w in words):
                continue
            left, right = (pieces[k], pieces[k + 1]) if framed else ((), ())
            yield _Instance(gen, tuple(words), left, right)


def _max_level(gen: _Prepared, D: MultiDegree, framed: bool) -> int:
    return D.total + len(gen.variables)


def _check_cap(D: MultiDegree, cap: int):
    if D.total > cap:
        raise DegreeBudgetExceeded(f"degree {D.total} exceeds the cap {cap}")


def consequences(S: GeneratorSet, D, cap: int = DEGREE_CAP) -> List[StarPolynomial]:
    """Distinct nonzero consequences of ``S`` in multidegree ``D``, in enumeration order.

    """
    D = MultiDegree(D)
    _check_cap(D, cap)
    perms = _distinct_permutations(list(Counter(dict(D)).elements()))
    framed = S.mode == "star_ideal"
    seen, out = set(), []
    top = max((_max_level(g, D, framed) for g in S.prepared), default=0)
    for level in range(top + 1):
        for gen in S.prepared:
            if gen.poly.degree > D.total:
                continue
            for inst in _instances(gen, D, framed, level, perms):
                vec = _instance_vector(inst)
                if not vec:
                    continue
                p = StarPolynomial._raw({w: Fraction(c) * _instance_scale(inst)
                                         for w, c in vec.items()}, Q)
                if p not in seen:
                    seen.add(p)
                    out.append(p)
    return out


# ---------------------------------------------------------------------------- certificates

def _sym_skew(word, kind) -> StarPolynomial:
    from .polyalg import skew_part_of_word, sym_part_of_word

    if not word:
        return StarPolynomial.constant(1, Q)
    return sym_part_of_word(word, Q) if kind == "y" else skew_part_of_word(word, Q)


@dataclass
class CertificateTerm:
    coefficient: Fraction
    generator_set: str
    generator_index: int
    generator: StarPolynomial  # the multilinear component actually substituted
    substitution: Dict[Indeterminate, StarPolynomial]
    left: Tuple[Indeterminate, ...]
    right: Tuple[Indeterminate, ...]

    def value(self) -> StarPolynomial:
        inner = substitute(self.generator, self.substitution)
        frame_l = StarPolynomial._raw({self.left: Fraction(1)}, Q)
        frame_r = StarPolynomial._raw({self.right: Fraction(1)}, Q)
        return frame_l * inner * frame_r * self.coefficient

    def to_dict(self):
        return {
            "coefficient": str(self.coefficient),
            "generator_set": self.generator_set,
            "generator_index": self.generator_index,
            "generator": format_poly(self.generator),
            "substitution": {str(x): format_poly(p) for x, p in sorted(self.substitution.items())},
            "left": word_str(self.left) if self.left else "1",
            "right": word_str(self.right) if self.right else "1",
        }


@dataclass
class MembershipCertificate:
    """``target == sum(term.value())``; checked when the certificate is built."""

    target: StarPolynomial
    terms: List[CertificateTerm]
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.recombine() != self.target:
            raise CertificateError("certificate does not recombine to the target")

    @property
    def multidegree(self) -> MultiDegree:
        return multidegree(self.target) if self.target else MultiDegree()

    def recombine(self) -> StarPolynomial:
        out = StarPolynomial.zero(Q)
        for t in self.terms:
            out = out + t.value()
        return out

    def verify(self) -> bool:
        return self.recombine() == self.target

    def to_dict(self):
        return {
            "schema": "starcentral/membership-certificate/1",
            "target": format_poly(self.target),
            "multidegree": {str(x): k for x, k in self.multidegree.items()},
            "terms": [t.to_dict() for t in self.terms],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def is_member(f: StarPolynomial, *gensets: GeneratorSet, cap: int = DEGREE_CAP,
              max_level: Optional[int] = None) -> Optional[MembershipCertificate]:
    """Certificate that ``f`` lies in the sum of the given spaces/ideals, or None.

    Star spaces are enumerated before star ideals at each complexity level, and
    the search stops at the first level whose span contains ``f``.
    """
    if not gensets:
        raise ValueError("need at least one generator set")
    if f.ring.characteristic:
        raise CharacteristicError("membership is only available in characteristic 0")
    if not f:
        return MembershipCertificate(f, [])
    D = multidegree(f)
    _check_cap(D, cap)
    t0 = time.perf_counter()
    perms = _distinct_permutations(list(Counter(dict(D)).elements()))
    target = {w: Fraction(c) for w, c in f.terms.items()}
    sb = DenseSpan(perms)
    accepted: List[Tuple[GeneratorSet, _Instance]] = []
    ordered = sorted(gensets, key=lambda s: s.mode != "star_space")
    top = max((_max_level(g, D, s.mode == "star_ideal") for s in ordered for g in s.prepared),
              default=0)
    if max_level is not None:
        top = min(top, max_level)

    def flush(batch):
        flags = sb.add_batch([v for _, _, v in batch])
        accepted.extend((S, inst) for (S, inst, _), ok in zip(batch, flags) if ok)
        batch.clear()
        return bool(accepted) and sb.contains(target)

    for level in range(top + 1):
        for S in ordered:
            framed = S.mode == "star_ideal"
            for gen in S.prepared:
                if gen.poly.degree > D.total:
                    continue
                batch = []
                for inst in _instances(gen, D, framed, level, perms):
                    vec = _instance_vector(inst)
                    if vec:
                        batch.append((S, inst, vec))
                    if len(batch) >= BATCH and flush(batch):
                        return _certificate(f, sb, accepted, target, level, t0)
                if flush(batch):
                    return _certificate(f, sb, accepted, target, level, t0)
    return None


def _certificate(f, sb, accepted, target, level, t0) -> MembershipCertificate:
    coeffs = sb.solve(target)
    terms = []
    for (S, inst), c in zip(accepted, coeffs):
        if not c:
            continue
        subs = {x: _sym_skew(w, x.kind) for x, w in zip(inst.gen.variables, inst.words)}
        terms.append(CertificateTerm(Fraction(c) / _instance_scale(inst), S.label,
                                     inst.gen.source, inst.gen.poly, subs, inst.left, inst.right))
    stats = {"level": level, "rank": sb.rank, "seconds": time.perf_counter() - t0}
    return MembershipCertificate(f, terms, stats)


# ---------------------------------------------------------------------------- certified chain for V

def V_generators() -> GeneratorSet:
    from .catalog import make_central

    return GeneratorSet([make_central("a"), make_central("b")], "star_space", "V0")


@dataclass
class ChainStep:
    name: str
    target: StarPolynomial
    generators: str
    certificate: Optional[MembershipCertificate]
    seconds: float

    @property
    def found(self) -> bool:
        return self.certificate is not None

    def to_dict(self):
        return {"name": self.name, "generators": self.generators, "found": self.found,
                "terms": len(self.certificate.terms) if self.certificate else None}


@dataclass
class VLemmaReport:
    steps: List[ChainStep]

    @property
    def ok(self) -> bool:
        return all(s.found for s in self.steps)

    @property
    def first_failure(self) -> Optional[ChainStep]:
        return next((s for s in self.steps if not s.found), None)


def verify_V_lemma(L: int = 2, N: int = 2, cap: int = DEGREE_CAP) -> VLemmaReport:
    """Certify ``G_n`` (n <= N) and ``C_l``, ``D_l`` (l <= L) lie in V.

    Follows the chain ``(b) -> C_1 -> D_1 -> C_l -> D_l``: each certified
    polynomial joins the star-space generators of the next step, alongside
    (a), (b) and the identities H1..H10 as a star ideal.
    """
    from .catalog import make_C, make_D, make_G

    ident = identity_generators()
    base = V_generators()
    steps: List[ChainStep] = []

    def run(name, target, extra, extra_label):
        gens = [base, ident]
        label = "(a),(b),I"
        if extra:
            gens.insert(0, GeneratorSet(extra, "star_space", extra_label))
            label = f"{extra_label},{label}"
        t = time.perf_counter()
        cert = is_member(target, *gens, cap=cap)
        steps.append(ChainStep(name, target, label, cert, time.perf_counter() - t))
        return cert is not None

    prev = None
    for n in range(1, N + 1):
        g = make_G(n)
        run(f"G{n}", g, [prev] if prev is not None else [], f"G{n - 1}")
        prev = g
    if L >= 1:
        run("C1", make_C(1), [], "")
        run("D1", make_D(1), [make_C(1)], "C1")
    for l in range(2, L + 1):
        run(f"C{l}", make_C(l), [make_D(1)], "D1")
        run(f"D{l}", make_D(l), [make_C(l)], f"C{l}")
    return VLemmaReport(steps)


@lru_cache(maxsize=1)
def _random_V_pools():
    from .catalog import make_central, make_H

    D = MultiDegree({Indeterminate("y", 1): 1, Indeterminate("y", 2): 1,
                     Indeterminate("z", 1): 1, Indeterminate("z", 2): 1,
                     Indeterminate("z", 3): 1})
    perms = _distinct_permutations(list(D.letters()))
    space = GeneratorSet([make_central("a"), make_central("b")], "star_space")
    ideal = GeneratorSet([make_H(k) for k in (1, 2, 3, 5, 6, 8, 9)], "star_ideal")
    pools = []
    for S in (space, ideal):
        framed = S.mode == "star_ideal"
        pool = []
        for gen in S.prepared:
            for level in range(_max_level(gen, D, framed) + 1):
                pool.extend(_instances(gen, D, framed, level, perms))
        pools.append(tuple(pool))
    return tuple(pools)


def random_V_element(rng: random.Random, terms: int = 3) -> StarPolynomial:
    """A random multihomogeneous element of V in ``y1, y2, z1, z2, z3``.

    Built from (a) and (b) with random monomial substitutions, plus framed
    substitution instances of H1..H10.
    """
    out = StarPolynomial.zero(Q)
    for pool in _random_V_pools():
        for _ in range(terms):
            inst = rng.choice(pool)
            vec = _instance_vector(inst)
            c = Fraction(rng.randint(-5, 5))
            out = out + StarPolynomial._raw({w: Fraction(v) for w, v in vec.items()}, Q) * c
    return out
