"""The superalgebra ``R = M_{1,1}(E)`` with the involution induced by ``trp``.

An element ``((a, b), (c, d))`` has ``a, d`` even and ``b, c`` odd.  The
involution is ``((a, b), (c, d))* = ((d, b), (-c, a))``; its symmetric
elements are ``((a, b), (0, a))`` and its skew elements ``((a, 0), (b, -a))``.
"""
from __future__ import annotations

import random as _random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from .grassmann import GrassmannElement, TruncationMismatch, g_mul
from .polyalg import Indeterminate, StarPolynomial, homogeneous_components
from .scalars import RingConfig, SymbolAllocator

Q = RingConfig(0)


class ParityError(ValueError):
    pass


class TruncationError(ValueError):
    """The Grassmann truncation is too small for the requested construction."""


class M11Element:
    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: GrassmannElement, b: GrassmannElement,
                 c: GrassmannElement, d: GrassmannElement, check: bool = True):
        if check:
            if not (a.n == b.n == c.n == d.n):
                raise TruncationMismatch("entries have different truncations")
            if not (a.is_even() and d.is_even()):
                raise ParityError("diagonal entries must be even")
            if not (b.is_odd() and c.is_odd()):
                raise ParityError("off-diagonal entries must be odd")
        self.a, self.b, self.c, self.d = a, b, c, d

    @property
    def n(self) -> int:
        return self.a.n

    @classmethod
    def zero(cls, n: int) -> "M11Element":
        z = GrassmannElement.zero(n)
        return cls(z, z, z, z, check=False)

    @classmethod
    def identity(cls, n: int, ring: RingConfig = Q) -> "M11Element":
        one = GrassmannElement.scalar(ring.one, n)
        z = GrassmannElement.zero(n)
        return cls(one, z, z, one, check=False)

    @classmethod
    def diag(cls, a: GrassmannElement, d: GrassmannElement) -> "M11Element":
        z = GrassmannElement.zero(a.n)
        return cls(a, z, z, d)

    @classmethod
    def upper(cls, b: GrassmannElement) -> "M11Element":
        z = GrassmannElement.zero(b.n)
        return cls(z, b, z, z)

    @classmethod
    def lower(cls, c: GrassmannElement) -> "M11Element":
        z = GrassmannElement.zero(c.n)
        return cls(z, z, c, z)

    def __add__(self, o: "M11Element") -> "M11Element":
        return M11Element(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d, check=False)

    def __sub__(self, o: "M11Element") -> "M11Element":
        return M11Element(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d, check=False)

    def __neg__(self):
        return M11Element(-self.a, -self.b, -self.c, -self.d, check=False)

    def __mul__(self, o):
        if isinstance(o, M11Element):
            return m11_mul(self, o)
        return M11Element(self.a * o, self.b * o, self.c * o, self.d * o, check=False)

    def __rmul__(self, o):
        return M11Element(o * self.a, o * self.b, o * self.c, o * self.d, check=False)

    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    def __eq__(self, o):
        if not isinstance(o, M11Element):
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (o.a, o.b, o.c, o.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def entries(self):
        return self.a, self.b, self.c, self.d

    def __str__(self):
        return f"[[{self.a} | {self.b}],[{self.c} | {self.d}]]"

    __repr__ = __str__


def m11_mul(x: M11Element, y: M11Element) -> M11Element:
    if x.n != y.n:
        raise TruncationMismatch(f"truncation {x.n} vs {y.n}")
    return M11Element(
        g_mul(x.a, y.a) + g_mul(x.b, y.c),
        g_mul(x.a, y.b) + g_mul(x.b, y.d),
        g_mul(x.c, y.a) + g_mul(x.d, y.c),
        g_mul(x.c, y.b) + g_mul(x.d, y.d),
        check=False,
    )


def m11_star(x: M11Element) -> M11Element:
    return M11Element(x.d, x.b, -x.c, x.a, check=False)


def m11_commutator(x: M11Element, y: M11Element) -> M11Element:
    return m11_mul(x, y) - m11_mul(y, x)


def symmetric_element(alpha: GrassmannElement, beta: GrassmannElement) -> M11Element:
    if not alpha.is_even() or not beta.is_odd():
        raise ParityError("symmetric elements need alpha even and beta odd")
    return M11Element(alpha, beta, GrassmannElement.zero(alpha.n), alpha)


def skew_element(alpha: GrassmannElement, beta: GrassmannElement) -> M11Element:
    if not alpha.is_even() or not beta.is_odd():
        raise ParityError("skew elements need alpha even and beta odd")
    return M11Element(alpha, GrassmannElement.zero(alpha.n), beta, -alpha)


def spanning_set(n: int, ring: RingConfig = Q) -> List[M11Element]:
    """Elements whose commutant inside the truncated ``R`` is the center."""
    one = GrassmannElement.scalar(ring.one, n)
    zero = GrassmannElement.zero(n)
    out = [M11Element.diag(one, zero), M11Element.diag(zero, one)]
    for i in range(1, n + 1):
        ei = GrassmannElement.monomial([i], n, ring.one)
        out.append(M11Element.upper(ei))
        out.append(M11Element.lower(ei))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            eij = GrassmannElement.monomial([i, j], n, ring.one)
            out.append(M11Element.diag(eij, zero))
            out.append(M11Element.diag(zero, eij))
    return out


def is_central_element(x: M11Element, ring: Optional[RingConfig] = None) -> bool:
    if ring is None:
        ring = _ring_of(x)
    return all(not m11_commutator(x, r) for r in spanning_set(x.n, ring))


def _ring_of(x: M11Element) -> RingConfig:
    from .scalars import Fp, SymPoly

    for g in x.entries():
        for c in g.terms.values():
            if isinstance(c, Fp):
                return RingConfig(c.p)
            if isinstance(c, SymPoly):
                for v in c.terms.values():
                    if isinstance(v, Fp):
                        return RingConfig(v.p)
    return Q


# ---------------------------------------------------------------------------- test families

@dataclass
class TestFamily:
    """Candidate substitutions for the letters of a polynomial.

    ``slots`` maps each letter to a pair ``(symmetric, skew)`` of candidate
    lists; a ``y`` letter draws from the first and a ``z`` letter from the
    second.
    """

    __test__ = False

    slots: Dict[Indeterminate, tuple]
    provenance: str
    truncation: int
    ring: RingConfig = Q

    @property
    def symmetric(self) -> List[M11Element]:
        return [x for s, _ in self.slots.values() for x in s]

    @property
    def skew(self) -> List[M11Element]:
        return [x for _, k in self.slots.values() for x in k]

    def candidates(self, x: Indeterminate) -> List[M11Element]:
        sym, skw = self.slots[x]
        return sym if x.kind == "y" else skw


def _degrees(f: StarPolynomial) -> Dict[Indeterminate, int]:
    deg: Dict[Indeterminate, int] = {}
    for d in homogeneous_components(f):
        for x, k in d.items():
            deg[x] = max(deg.get(x, 0), k)
    return deg


def required_truncation(f: StarPolynomial, strategy: str, copies: Optional[int] = None) -> int:
    deg = _degrees(f)
    if strategy == "spanning":
        return 2 * len(deg)
    return 3 * sum(copies or k for k in deg.values())


def make_test_family(f: StarPolynomial, strategy: str = "spanning", seed: int = 0,
                     n: Optional[int] = None, copies: Optional[int] = None,
                     allocator: Optional[SymbolAllocator] = None) -> TestFamily:
    """Build candidate symmetric/skew substitutions for every letter of ``f``.

    ``spanning``: per letter ``k`` the shapes ``1``, ``e(2k-1)e(2k)`` on the
    diagonal and ``e(2k-1)`` off the diagonal.  ``generic-symbolic``: one
    element per letter whose coefficients are fresh symbols ``t_i``; a letter
    of degree ``d`` gets ``d`` copies of each nilpotent shape (``copies``
    overrides).  ``random``: the same shapes with seeded random coefficients.
    """
    if not f:
        raise ValueError("cannot build a test family for the zero polynomial")
    ring = f.ring
    deg = _degrees(f)
    need = required_truncation(f, "spanning" if strategy == "spanning" else "generic", copies)
    if n is None:
        n = max(need, 2 * max((d.total for d in homogeneous_components(f)), default=0))
    if n < need:
        raise TruncationError(f"{strategy} family needs {need} generators, have {n}")
    one = ring.one
    slots: Dict[Indeterminate, tuple] = {}
    if strategy == "spanning":
        for k, x in enumerate(sorted(deg), start=1):
            unit = GrassmannElement.scalar(one, n)
            pair = GrassmannElement.monomial([2 * k - 1, 2 * k], n, one)
            single = GrassmannElement.monomial([2 * k - 1], n, one)
            zero = GrassmannElement.zero(n)
            sym = [symmetric_element(unit, zero), symmetric_element(pair, zero),
                   symmetric_element(zero, single)]
            skw = [skew_element(unit, zero), skew_element(pair, zero),
                   skew_element(zero, single)]
            slots[x] = (sym, skw)
        return TestFamily(slots, "spanning", n, ring)

    if strategy == "generic-symbolic":
        alloc = allocator or SymbolAllocator()

        def coeff():
            return alloc.fresh(one)
    elif strategy == "random":
        rng = _random.Random(seed)

        def coeff():
            return ring(rng.randint(-9, 9))
    else:
        raise ValueError(f"unknown strategy {strategy!r}")

    nxt = 1
    for x in sorted(deg):
        cnt = copies or deg[x]
        alpha = GrassmannElement.scalar(coeff(), n)
        beta = GrassmannElement.zero(n)
        for _ in range(cnt):
            alpha = alpha + GrassmannElement.monomial([nxt, nxt + 1], n, coeff())
            nxt += 2
        for _ in range(cnt):
            beta = beta + GrassmannElement.monomial([nxt], n, coeff())
            nxt += 1
        elem = symmetric_element(alpha, beta) if x.kind == "y" else skew_element(alpha, beta)
        slots[x] = ([elem], []) if x.kind == "y" else ([], [elem])
    return TestFamily(slots, strategy, n, ring)
