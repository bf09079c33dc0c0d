"""Proper polynomials and the decomposition ``f = sum_a y1^a1 ... yl^al w_a``.

Every polynomial is a unique sum of ordered ``y``-monomials times proper
polynomials (products of ``z`` letters and left-normed commutators).  The
decomposition is computed by straightening: a ``y`` letter is moved left past
a proper factor ``c`` with ``c y = y c + [c, y]``, and two out-of-order ``y``
letters are swapped with ``y_j y_i = y_i y_j + [y_j, y_i]``.  The commutators
produced are again left-normed commutators of letters.

:func:`pbw_decompose_linear` recomputes the same data by solving a linear
system over :func:`proper_spanning_set`, as an independent check.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from .linalg import SpanBuilder
from .polyalg import (Indeterminate, MultiDegree, StarPolynomial, commutator,
                      homogeneous_components, multidegree)

DEGREE_CAP = 8


class DegreeBudgetExceeded(ValueError):
    pass


@dataclass
class PBWDecomposition:
    """Ordered ``(exponents, w)`` pairs over the ``y`` frame, greatest exponents first."""

    frame: Tuple[Indeterminate, ...]
    entries: List[Tuple[Tuple[int, ...], StarPolynomial]]

    def as_dict(self) -> Dict[Tuple[int, ...], StarPolynomial]:
        return dict(self.entries)

    def recombine(self, ring=None) -> StarPolynomial:
        ring = ring or (self.entries[0][1].ring if self.entries else None)
        out = StarPolynomial.zero(ring) if ring else StarPolynomial.zero()
        for a, w in self.entries:
            out = out + y_monomial(self.frame, a, w.ring) * w
        return out

    def __str__(self):
        return "\n".join(f"{a}: {w}" for a, w in self.entries)


def y_monomial(frame, exps, ring) -> StarPolynomial:
    word = tuple(x for x, e in zip(frame, exps) for _ in range(e))
    return StarPolynomial._raw({word: ring.one}, ring)


# A straightening term is a tuple of symbols: a y letter is the Indeterminate
# itself, a proper factor is a tuple of letters (length 1: a z letter, longer:
# a left-normed commutator).

def _straighten(seq: tuple) -> Dict[tuple, int]:
    """Integer combination of normal-form symbol sequences equal to ``seq``."""
    return dict(_straighten_cached(seq))


@lru_cache(maxsize=200_000)
def _straighten_cached(seq: tuple):
    for k in range(len(seq) - 1):
        a, b = seq[k], seq[k + 1]
        # Indeterminate is itself a tuple, so test for it before anything else
        if isinstance(b, Indeterminate):
            if not isinstance(a, Indeterminate):
                # c y = y c + [c, y]
                swapped = seq[:k] + (b, a) + seq[k + 2:]
                merged = seq[:k] + (a + (b,),) + seq[k + 2:]
                return _combine(((1, swapped), (1, merged)))
            if a.index > b.index:
                # y_j y_i = y_i y_j + [y_j, y_i]
                swapped = seq[:k] + (b, a) + seq[k + 2:]
                merged = seq[:k] + ((a, b),) + seq[k + 2:]
                return _combine(((1, swapped), (1, merged)))
    return ((seq, 1),)


def _combine(parts):
    out: Dict[tuple, int] = {}
    for coef, s in parts:
        for t, c in _straighten_cached(s):
            out[t] = out.get(t, 0) + coef * c
    return tuple((t, c) for t, c in out.items() if c)


@lru_cache(maxsize=100_000)
def _factor_poly(factor: tuple, ring) -> StarPolynomial:
    if len(factor) == 1:
        return StarPolynomial.letter(factor[0], ring)
    return commutator(*[StarPolynomial.letter(x, ring) for x in factor])


def _factors_poly(factors: tuple, ring) -> StarPolynomial:
    out = StarPolynomial.constant(1, ring)
    for fac in factors:
        out = out * _factor_poly(fac, ring)
    return out


def _decompose_terms(f: StarPolynomial, frame) -> Dict[Tuple[int, ...], StarPolynomial]:
    ring = f.ring
    pos = {x: i for i, x in enumerate(frame)}
    grouped: Dict[Tuple[int, ...], Dict[tuple, object]] = {}
    for w, c in f.terms.items():
        seq = tuple(x if x.kind == "y" else (x,) for x in w)
        for t, k in _straighten_cached(seq):
            exps = [0] * len(frame)
            i = 0
            while i < len(t) and isinstance(t[i], Indeterminate):
                exps[pos[t[i]]] += 1
                i += 1
            key = tuple(exps)
            facs = t[i:]
            bucket = grouped.setdefault(key, {})
            bucket[facs] = bucket.get(facs, 0) + c * k
    out = {}
    for key, bucket in grouped.items():
        w = StarPolynomial.zero(ring)
        for facs, c in bucket.items():
            if c:
                w = w + _factors_poly(facs, ring) * c
        if w:
            out[key] = w
    return out


def _frame_of(f: StarPolynomial) -> Tuple[Indeterminate, ...]:
    return tuple(x for x in f.variables() if x.kind == "y")


def _check_cap(f: StarPolynomial, cap: int):
    if f.degree > cap:
        raise DegreeBudgetExceeded(f"degree {f.degree} exceeds the cap {cap}")


def pbw_decompose(f: StarPolynomial, cap: int = DEGREE_CAP) -> PBWDecomposition:
    _check_cap(f, cap)
    frame = _frame_of(f)
    merged: Dict[Tuple[int, ...], StarPolynomial] = {}
    for g in homogeneous_components(f).values():
        for a, w in _decompose_terms(g, frame).items():
            merged[a] = merged[a] + w if a in merged else w
    entries = sorted(((a, w) for a, w in merged.items() if w), key=lambda t: t[0], reverse=True)
    return PBWDecomposition(frame, entries)


def rank(f: StarPolynomial, cap: int = DEGREE_CAP) -> Tuple[int, ...]:
    """Lexicographically greatest exponent tuple with a nonzero proper coefficient."""
    if not f:
        raise ValueError("the zero polynomial has no rank")
    multidegree(f)
    return pbw_decompose(f, cap).entries[0][0]


def leading_proper_part(f: StarPolynomial, cap: int = DEGREE_CAP) -> StarPolynomial:
    if not f:
        raise ValueError("the zero polynomial has no rank")
    multidegree(f)
    return pbw_decompose(f, cap).entries[0][1]


def is_proper(f: StarPolynomial, cap: int = DEGREE_CAP) -> bool:
    dec = pbw_decompose(f, cap)
    return all(not any(a) for a, _ in dec.entries)


# ---------------------------------------------------------------------------- spanning sets

def _multiset_permutations(counter: Counter):
    items = sorted(counter.elements())
    seen = set()
    for p in itertools.permutations(items):
        if p not in seen:
            seen.add(p)
            yield p


def _block_splits(seq):
    """All ways to cut ``seq`` into consecutive blocks; singleton blocks must be z letters."""
    n = len(seq)
    for cuts in itertools.product((0, 1), repeat=max(n - 1, 0)):
        blocks, start = [], 0
        for i, cut in enumerate(cuts, start=1):
            if cut:
                blocks.append(seq[start:i])
                start = i
        blocks.append(seq[start:])
        if all(len(b) > 1 or b[0].kind == "z" for b in blocks):
            yield tuple(blocks)


def proper_spanning_set(D, ring=None, cap: int = 6) -> List[StarPolynomial]:
    """Products of z letters and left-normed commutators of letters with multidegree ``D``."""
    from .polyalg import Q

    ring = ring or Q
    D = MultiDegree(D)
    if D.total > cap:
        raise DegreeBudgetExceeded(f"degree {D.total} exceeds the cap {cap}")
    if D.total == 0:
        return [StarPolynomial.constant(1, ring)]
    out, seen = [], set()
    for seq in _multiset_permutations(Counter(dict(D))):
        for blocks in _block_splits(seq):
            p = _factors_poly(tuple(blocks), ring)
            if p and p not in seen:
                seen.add(p)
                out.append(p)
    return out


def pbw_decompose_linear(f: StarPolynomial, cap: int = 6) -> PBWDecomposition:
    """Decomposition of a multihomogeneous ``f`` via a linear solve over spanning products."""
    D = multidegree(f)
    if D.total > cap:
        raise DegreeBudgetExceeded(f"degree {D.total} exceeds the cap {cap}")
    ring = f.ring
    frame = _frame_of(f)
    ranges = [range(D.get(x, 0) + 1) for x in frame]
    labels, sb = [], SpanBuilder(ring.characteristic)
    for a in itertools.product(*ranges):
        rest = D - {x: e for x, e in zip(frame, a)}
        mono = y_monomial(frame, a, ring)
        for s in proper_spanning_set(rest, ring, cap):
            labels.append((a, s))
            sb.add((mono * s).terms)
    coeffs = sb.solve(f.terms)
    if coeffs is None:
        raise RuntimeError("spanning family does not span; internal error")
    grouped: Dict[Tuple[int, ...], StarPolynomial] = {}
    for (a, s), c in zip(labels, coeffs):
        if c:
            grouped[a] = grouped[a] + s * c if a in grouped else s * c
    entries = sorted(((a, w) for a, w in grouped.items() if w), key=lambda t: t[0], reverse=True)
    return PBWDecomposition(frame, entries)
