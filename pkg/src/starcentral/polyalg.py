"""The free algebra with involution on symmetric letters ``y_i`` and skew letters ``z_i``.

A :class:`StarPolynomial` is a sparse map from words to scalars.  The
involution reverses every word and multiplies it by ``(-1)**(number of z's)``.
"""
from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from typing import Dict, Iterable, Mapping, NamedTuple, Tuple

from .scalars import RingConfig, RingMismatch, format_scalar

Q = RingConfig(0)


class Indeterminate(NamedTuple):
    kind: str  # "y" or "z"
    index: int

    def __str__(self):
        return f"{self.kind}{self.index}"


Word = Tuple[Indeterminate, ...]


def y(i: int, ring: RingConfig = Q) -> "StarPolynomial":
    return StarPolynomial.letter(Indeterminate("y", i), ring)


def z(i: int, ring: RingConfig = Q) -> "StarPolynomial":
    return StarPolynomial.letter(Indeterminate("z", i), ring)


def word_key(w: Word):
    return (len(w), w)


class NotMultihomogeneous(ValueError):
    """Raised by :func:`multidegree` for a polynomial mixing multidegrees."""

    def __init__(self, first, second):
        super().__init__(f"not multihomogeneous: {first} vs {second}")
        self.first = first
        self.second = second


class CharacteristicError(ValueError):
    pass


class MultiDegree(Mapping):
    """Immutable map Indeterminate -> positive degree."""

    __slots__ = ("_items", "_dict")

    def __init__(self, data=()):
        d = dict(data)
        self._items = tuple(sorted((k, v) for k, v in d.items() if v))
        self._dict = dict(self._items)

    @classmethod
    def of_word(cls, w: Word) -> "MultiDegree":
        return cls(Counter(w))

    def __getitem__(self, k):
        return self._dict[k]

    def __iter__(self):
        return iter(self._dict)

    def __len__(self):
        return len(self._dict)

    def __hash__(self):
        return hash(self._items)

    def __eq__(self, other):
        if isinstance(other, MultiDegree):
            return self._items == other._items
        if isinstance(other, Mapping):
            return self._dict == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __lt__(self, other):
        return self._items < other._items

    @property
    def total(self) -> int:
        return sum(self._dict.values())

    def letters(self) -> Tuple[Indeterminate, ...]:
        return tuple(k for k, _ in self._items)

    def is_multilinear(self) -> bool:
        return all(v == 1 for v in self._dict.values())

    def __sub__(self, other: Mapping) -> "MultiDegree":
        d = dict(self._dict)
        for k, v in other.items():
            d[k] = d.get(k, 0) - v
            if d[k] < 0:
                raise ValueError("negative degree")
        return MultiDegree(d)

    def __add__(self, other: Mapping) -> "MultiDegree":
        d = dict(self._dict)
        for k, v in other.items():
            d[k] = d.get(k, 0) + v
        return MultiDegree(d)

    def __repr__(self):
        return "{" + ", ".join(f"{k}:{v}" for k, v in self._items) + "}"


class StarPolynomial:
    """Element of the free *-algebra K<Y u Z>."""

    __slots__ = ("terms", "ring", "_hash")

    def __init__(self, terms: Mapping[Word, object] | None = None, ring: RingConfig = Q):
        self.ring = ring
        self.terms: Dict[Word, object] = {}
        if terms:
            for w, c in terms.items():
                c = ring(c)
                if c:
                    self.terms[tuple(w)] = c
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Word, object], ring: RingConfig) -> "StarPolynomial":
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = {w: c for w, c in terms.items() if c}
        p._hash = None
        return p

    @classmethod
    def letter(cls, x: Indeterminate, ring: RingConfig = Q) -> "StarPolynomial":
        return cls._raw({(x,): ring.one}, ring)

    @classmethod
    def constant(cls, c, ring: RingConfig = Q) -> "StarPolynomial":
        return cls._raw({(): ring(c)}, ring)

    @classmethod
    def zero(cls, ring: RingConfig = Q) -> "StarPolynomial":
        return cls._raw({}, ring)

    def to_ring(self, ring: RingConfig) -> "StarPolynomial":
        """Reduce rational coefficients into another characteristic."""
        if ring == self.ring:
            return self
        if self.ring.characteristic != 0:
            raise RingMismatch("can only reduce from characteristic 0")
        return StarPolynomial({w: c for w, c in self.terms.items()}, ring)

    # ------------------------------------------------------------------ arithmetic
    def _coerce(self, other):
        if isinstance(other, StarPolynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)) or self.ring.owns(other):
            return StarPolynomial.constant(other, self.ring)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for w, c in o.terms.items():
            out[w] = out[w] + c if w in out else c
        return StarPolynomial._raw(out, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return StarPolynomial._raw({w: -c for w, c in self.terms.items()}, self.ring)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, StarPolynomial):
            return poly_mul(self, other)
        if isinstance(other, (int, Fraction)) or self.ring.owns(other):
            c = self.ring(other)
            return StarPolynomial._raw({w: v * c for w, v in self.terms.items()}, self.ring)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) or self.ring.owns(other):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = StarPolynomial.constant(1, self.ring)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, StarPolynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == StarPolynomial.constant(other, self.ring)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.terms.items(), key=lambda t: word_key(t[0]))))
        return self._hash

    # ------------------------------------------------------------------ queries
    def words(self):
        """Words in canonical order: by length, then lexicographically."""
        return sorted(self.terms, key=word_key)

    def items(self):
        return [(w, self.terms[w]) for w in self.words()]

    def variables(self) -> Tuple[Indeterminate, ...]:
        return tuple(sorted({x for w in self.terms for x in w}))

    def max_index(self, kind: str) -> int:
        return max((x.index for x in self.variables() if x.kind == kind), default=0)

    @property
    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __str__(self):
        from .grammar import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"StarPolynomial({str(self)!r})"


def poly_mul(f: StarPolynomial, g: StarPolynomial) -> StarPolynomial:
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")
    out: Dict[Word, object] = {}
    for u, a in f.terms.items():
        for v, b in g.terms.items():
            w = u + v
            c = a * b
            out[w] = out[w] + c if w in out else c
    return StarPolynomial._raw(out, f.ring)


def star_word(w: Word) -> Tuple[int, Word]:
    """Sign and reversed word of the involution applied to one word."""
    nz = sum(1 for x in w if x.kind == "z")
    return (-1 if nz % 2 else 1), tuple(reversed(w))


def star(f: StarPolynomial) -> StarPolynomial:
    out = {}
    for w, c in f.terms.items():
        s, r = star_word(w)
        out[r] = -c if s < 0 else c
    return StarPolynomial._raw(out, f.ring)


def commutator(*args: StarPolynomial) -> StarPolynomial:
    """Left-normed commutator ``[a1, ..., an] = [[a1, ..., a(n-1)], an]``."""
    if len(args) < 2:
        raise ValueError("a commutator needs at least two arguments")
    acc = args[0]
    for b in args[1:]:
        acc = acc * b - b * acc
    return acc


def jordan(f: StarPolynomial, g: StarPolynomial) -> StarPolynomial:
    half = f.ring.inverse_of_two()
    return (f * g + g * f) * half


def sym_skew_split(f: StarPolynomial):
    fs = star(f)
    half = f.ring.inverse_of_two()
    return (f + fs) * half, (f - fs) * half


def multidegree(f: StarPolynomial) -> MultiDegree:
    if not f:
        raise ValueError("the zero polynomial has no multidegree")
    first = None
    for w in f.words():
        d = MultiDegree.of_word(w)
        if first is None:
            first = d
        elif d != first:
            raise NotMultihomogeneous(first, d)
    return first


def is_multihomogeneous(f: StarPolynomial) -> bool:
    try:
        multidegree(f)
    except NotMultihomogeneous:
        return False
    except ValueError:
        return True
    return True


def homogeneous_components(f: StarPolynomial) -> Dict[MultiDegree, StarPolynomial]:
    groups: Dict[MultiDegree, dict] = {}
    for w, c in f.terms.items():
        groups.setdefault(MultiDegree.of_word(w), {})[w] = c
    return {d: StarPolynomial._raw(t, f.ring) for d, t in sorted(groups.items())}


def substitute(f: StarPolynomial, mapping: Mapping[Indeterminate, StarPolynomial]) -> StarPolynomial:
    """Apply the endomorphism sending each letter in ``mapping`` to its image.

    Letters not in ``mapping`` are left fixed.
    """
    ring = f.ring
    cache: Dict[Indeterminate, StarPolynomial] = {}

    def image(x):
        if x not in cache:
            cache[x] = mapping[x] if x in mapping else StarPolynomial.letter(x, ring)
        return cache[x]

    out = StarPolynomial.zero(ring)
    for w, c in f.terms.items():
        term = StarPolynomial.constant(c, ring)
        for x in w:
            term = term * image(x)
            if not term:
                break
        out = out + term
    return out


def multilinearize_with_frame(f: StarPolynomial):
    """Full polarization of a multihomogeneous polynomial.

    Returns ``(g, frame)`` where ``frame`` maps every letter of ``g`` to the
    letter of ``f`` it replaces.  A letter of degree ``d`` keeps its own name
    for the first copy and receives ``d - 1`` fresh indices of its kind.
    """
    if not f:
        return f, {}
    deg = multidegree(f)
    p = f.ring.characteristic
    top = max(deg.values())
    if p and p <= top:
        raise CharacteristicError(
            f"cannot multilinearize degree {top} in characteristic {p}")
    next_index = {"y": f.max_index("y") + 1, "z": f.max_index("z") + 1}
    copies: Dict[Indeterminate, list] = {}
    frame: Dict[Indeterminate, Indeterminate] = {}
    for x in deg.letters():
        cs = [x]
        for _ in range(deg[x] - 1):
            fresh = Indeterminate(x.kind, next_index[x.kind])
            next_index[x.kind] += 1
            cs.append(fresh)
        copies[x] = cs
        for c in cs:
            frame[c] = x
    out: Dict[Word, object] = {}
    for w, c in f.terms.items():
        positions: Dict[Indeterminate, list] = {}
        for i, x in enumerate(w):
            positions.setdefault(x, []).append(i)
        per_letter = [
            [(pos, perm) for perm in itertools.permutations(copies[x])]
            for x, pos in positions.items()
        ]
        for choice in itertools.product(*per_letter):
            new = list(w)
            for pos, perm in choice:
                for i, cpy in zip(pos, perm):
                    new[i] = cpy
            nw = tuple(new)
            out[nw] = out[nw] + c if nw in out else c
    return StarPolynomial._raw(out, f.ring), frame


def multilinearize(f: StarPolynomial) -> StarPolynomial:
    return multilinearize_with_frame(f)[0]


def sym_part_of_word(w: Word, ring: RingConfig) -> StarPolynomial:
    """``(m + m*)/2`` for the monomial ``m = w``."""
    m = StarPolynomial._raw({w: ring.one}, ring)
    return sym_skew_split(m)[0]


def skew_part_of_word(w: Word, ring: RingConfig) -> StarPolynomial:
    """``(m - m*)/2`` for the monomial ``m = w``."""
    m = StarPolynomial._raw({w: ring.one}, ring)
    return sym_skew_split(m)[1]


def linear_combination(pairs: Iterable, ring: RingConfig = Q) -> StarPolynomial:
    out = StarPolynomial.zero(ring)
    for c, p in pairs:
        out = out + p * c
    return out


def word_str(w: Word) -> str:
    return "*".join(map(str, w)) if w else "1"


__all__ = [
    "Indeterminate", "Word", "StarPolynomial", "MultiDegree", "NotMultihomogeneous",
    "CharacteristicError", "y", "z", "poly_mul", "star", "commutator", "jordan",
    "sym_skew_split", "multidegree", "homogeneous_components", "multilinearize",
    "multilinearize_with_frame", "substitute", "format_scalar",
]
