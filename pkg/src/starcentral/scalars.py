"""Exact coefficient rings.

Three kinds of scalars are used throughout the package:

* ``fractions.Fraction`` for characteristic zero,
* :class:`Fp` residues for an odd prime characteristic,
* :class:`SymPoly`, commutative polynomials in formal variables ``t1, t2, ...``
  with coefficients in one of the two rings above.

All of them are immutable and support ``+``, ``-``, ``*`` and ``bool``.
A :class:`RingConfig` fixes the characteristic and converts literals.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction


class RingMismatch(TypeError):
    """Raised when scalars from different rings are combined."""


class Fp:
    """Residue class modulo an odd prime ``p``, stored in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = value % p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise RingMismatch(f"mod {self.p} vs mod {other.p}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        if isinstance(other, Fraction):
            raise RingMismatch("cannot mix a rational with a residue")
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if v % self.p == 0:
            raise ZeroDivisionError("division by zero mod p")
        return Fp(self.value * pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(v, self.p) / self

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        return Fp(pow(self.value, k, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


def _grlex_key(mono):
    # mono: tuple of (var, exp) sorted by var
    degree = sum(e for _, e in mono)
    dense = {}
    for v, e in mono:
        dense[v] = e
    width = max(dense, default=0)
    return (degree, tuple(dense.get(i, 0) for i in range(1, width + 1)))


class SymPoly:
    """Commutative polynomial in ``t1, t2, ...`` over a base field.

    ``terms`` maps a monomial (a sorted tuple of ``(variable, exponent)``
    pairs) to a nonzero base-field coefficient.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def var(cls, k: int, one=Fraction(1)):
        return cls({((k, 1),): one})

    @classmethod
    def const(cls, c):
        return cls({(): c})

    def _lift(self, other):
        if isinstance(other, SymPoly):
            return other
        if isinstance(other, (int, Fraction, Fp)) and not isinstance(other, bool):
            return SymPoly({(): other})
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out[m] + c if m in out else c
        return SymPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                c = c1 * c2
                out[m] = out[m] + c if m in out else c
        return SymPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = SymPoly({(): _one_like(self)})
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def monomials(self):
        """Monomials in graded lexicographic order."""
        return sorted(self.terms, key=_grlex_key)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in reversed(self.monomials()):
            c = self.terms[m]
            mono = "*".join(f"t{v}" if e == 1 else f"t{v}^{e}" for v, e in m)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


def _one_like(p: SymPoly):
    for c in p.terms.values():
        if isinstance(c, Fp):
            return Fp(1, c.p)
    return Fraction(1)


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class SymbolAllocator:
    """Hands out fresh symbolic variables ``t1, t2, ...``."""

    def __init__(self, start: int = 1):
        self._counter = itertools.count(start)

    def fresh(self, one=Fraction(1)) -> SymPoly:
        return SymPoly.var(next(self._counter), one)


_LITERAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


@dataclass(frozen=True)
class RingConfig:
    """The coefficient field ``K``: characteristic 0 or an odd prime."""

    characteristic: int = 0
    symbolic: bool = False

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or p == 1:
            raise ValueError(f"invalid characteristic {p}")
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        if p and not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")

    def __call__(self, x):
        """Coerce an int, Fraction, residue or literal string into this ring."""
        p = self.characteristic
        if isinstance(x, str):
            x = parse_scalar(x)
        if isinstance(x, Fp):
            if x.p != p:
                raise RingMismatch(f"residue mod {x.p} in characteristic {p}")
            return x
        if isinstance(x, SymPoly):
            return x
        if p == 0:
            return Fraction(x)
        x = Fraction(x)
        if x.denominator % p == 0:
            raise ZeroDivisionError(f"denominator divisible by {p}")
        return Fp(x.numerator * pow(x.denominator, -1, p), p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def inverse_of_two(self):
        return self(Fraction(1, 2))

    def owns(self, x) -> bool:
        if self.characteristic == 0:
            return isinstance(x, (Fraction, int)) and not isinstance(x, bool)
        return isinstance(x, Fp) and x.p == self.characteristic

    def random(self, rng, bound: int = 5):
        """A random nonzero-biased small scalar."""
        return self(rng.randint(-bound, bound))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def parse_scalar(text: str) -> Fraction:
    """Parse ``"5/6"`` or ``"-3"``."""
    m = _LITERAL.match(text)
    if not m:
        raise ValueError(f"not a scalar literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(num, den)


def format_scalar(c) -> str:
    if isinstance(c, Fraction):
        return str(c) if c.denominator != 1 else str(c.numerator)
    return str(c)


def _check_same_ring(a, b):
    ta = type(a) if not isinstance(a, int) else Fraction
    tb = type(b) if not isinstance(b, int) else Fraction
    if ta is not tb and not (isinstance(a, SymPoly) or isinstance(b, SymPoly)):
        raise RingMismatch(f"{type(a).__name__} vs {type(b).__name__}")
    if isinstance(a, Fp) and isinstance(b, Fp) and a.p != b.p:
        raise RingMismatch(f"mod {a.p} vs mod {b.p}")


def scalar_add(a, b):
    _check_same_ring(a, b)
    return a + b


def scalar_mul(a, b):
    _check_same_ring(a, b)
    return a * b


def scalar_inverse_of_two(ring: RingConfig):
    return ring.inverse_of_two()
