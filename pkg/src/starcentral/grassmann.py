"""Truncated Grassmann algebra on generators ``e1, ..., en``.

Basis monomials are encoded as bitmasks: bit ``i - 1`` set means ``e_i``
occurs.  Python integers are unbounded, so the encoding works for any ``n``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Sequence

from .scalars import RingConfig

Q = RingConfig(0)


class TruncationMismatch(ValueError):
    pass


def _bits(mask: int):
    i = 1
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def inversions_mask(s: int, t: int) -> int:
    """``#{(a, b) in S x T : a > b}`` via masked popcounts."""
    count = 0
    while t:
        low = t & -t
        # bits of s strictly above this generator of t
        count += bin(s & ~((low << 1) - 1)).count("1")
        t ^= low
    return count


def inversions_sorted(s: Sequence[int], t: Sequence[int]) -> int:
    """Same count on sorted index lists (merge walk)."""
    count = 0
    i = 0
    for b in t:
        while i < len(s) and s[i] <= b:
            i += 1
        count += len(s) - i
    return count


def monomial_product_sign(s: int, t: int) -> int:
    """Sign of ``e_S * e_T`` relative to ``e_(S u T)``; 0 if they overlap."""
    if s & t:
        return 0
    return -1 if inversions_mask(s, t) & 1 else 1


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        if i < 1:
            raise ValueError("generator indices start at 1")
        m |= 1 << (i - 1)
    return m


class GrassmannElement:
    """Element of the Grassmann algebra truncated at ``n`` generators."""

    __slots__ = ("terms", "n")

    def __init__(self, terms: Dict[int, object] | None = None, n: int = 0):
        self.n = n
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        limit = 1 << n
        for m in self.terms:
            if m >= limit or m < 0:
                raise ValueError(f"monomial {m:b} exceeds truncation {n}")

    @classmethod
    def _raw(cls, terms, n):
        g = cls.__new__(cls)
        g.n = n
        g.terms = terms
        return g

    @classmethod
    def scalar(cls, c, n: int) -> "GrassmannElement":
        return cls._raw({0: c} if c else {}, n)

    @classmethod
    def monomial(cls, indices: Iterable[int], n: int, coeff=Fraction(1)) -> "GrassmannElement":
        """``coeff * e_i1 * e_i2 * ...`` in the order given (sign applied)."""
        m = 0
        sign = 1
        for i in indices:
            b = mask_of([i])
            if i > n:
                raise ValueError(f"generator e{i} exceeds truncation {n}")
            s = monomial_product_sign(m, b)
            if s == 0:
                return cls._raw({}, n)
            sign *= s
            m |= b
        if not coeff:
            return cls._raw({}, n)
        return cls._raw({m: coeff if sign > 0 else -coeff}, n)

    @classmethod
    def zero(cls, n: int) -> "GrassmannElement":
        return cls._raw({}, n)

    def _check(self, other: "GrassmannElement"):
        if self.n != other.n:
            raise TruncationMismatch(f"truncation {self.n} vs {other.n}")

    def __add__(self, other: "GrassmannElement"):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            if m in out:
                v = out[m] + c
                if v:
                    out[m] = v
                else:
                    del out[m]
            else:
                out[m] = c
        return GrassmannElement._raw(out, self.n)

    def __neg__(self):
        return GrassmannElement._raw({m: -c for m, c in self.terms.items()}, self.n)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GrassmannElement):
            return g_mul(self, other)
        return GrassmannElement._raw(
            {m: v for m, c in self.terms.items() if (v := c * other)}, self.n)

    def __rmul__(self, other):
        return GrassmannElement._raw(
            {m: v for m, c in self.terms.items() if (v := other * c)}, self.n)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_even(self) -> bool:
        return all(bin(m).count("1") % 2 == 0 for m in self.terms)

    def is_odd(self) -> bool:
        return all(bin(m).count("1") % 2 == 1 for m in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (bin(m).count("1"), list(_bits(m)))):
            c = self.terms[m]
            mono = "*".join(f"e{i}" for i in _bits(m)) if m else "1"
            if m == 0:
                parts.append(f"{c}")
            elif c == 1:
                parts.append(mono)
            else:
                cs = str(c)
                if " " in cs:
                    cs = f"({cs})"
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


def g_mul(a: GrassmannElement, b: GrassmannElement) -> GrassmannElement:
    if a.n != b.n:
        raise TruncationMismatch(f"truncation {a.n} vs {b.n}")
    out: Dict[int, object] = {}
    for s, c in a.terms.items():
        for t, d in b.terms.items():
            if s & t:
                continue
            v = c * d
            if inversions_mask(s, t) & 1:
                v = -v
            u = s | t
            if u in out:
                w = out[u] + v
                if w:
                    out[u] = w
                else:
                    del out[u]
            else:
                out[u] = v
    return GrassmannElement._raw({m: c for m, c in out.items() if c}, a.n)


def g_mul_sorted(a: GrassmannElement, b: GrassmannElement) -> GrassmannElement:
    """Reference product using sorted index lists; cross-checks :func:`g_mul`."""
    if a.n != b.n:
        raise TruncationMismatch(f"truncation {a.n} vs {b.n}")
    out: Dict[int, object] = {}
    for s, c in a.terms.items():
        ls = list(_bits(s))
        for t, d in b.terms.items():
            lt = list(_bits(t))
            if set(ls) & set(lt):
                continue
            v = c * d
            if inversions_sorted(ls, lt) % 2:
                v = -v
            u = s | t
            out[u] = out[u] + v if u in out else v
    return GrassmannElement._raw({m: c for m, c in out.items() if c}, a.n)


def g_parity_project(a: GrassmannElement, parity: str) -> GrassmannElement:
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    want = 0 if parity == "even" else 1
    return GrassmannElement._raw(
        {m: c for m, c in a.terms.items() if bin(m).count("1") % 2 == want}, a.n)


def g_pow(a: GrassmannElement, k: int) -> GrassmannElement:
    if k < 0:
        raise ValueError("negative power")
    one = next(iter(a.terms.values()), Fraction(1))
    one = one * 0 + 1
    out = GrassmannElement.scalar(one, a.n)
    for _ in range(k):
        out = g_mul(out, a)
    return out


def e(*indices: int, n: int, coeff=Fraction(1)) -> GrassmannElement:
    """Shorthand for a basis monomial ``e_i1 * ... * e_ik``."""
    return GrassmannElement.monomial(indices, n, coeff)
