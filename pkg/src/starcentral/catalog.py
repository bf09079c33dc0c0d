"""Named polynomials: the identities H1..H10, the central polynomials (a), (b), (c),
and the families P_i, C_l, D_l, G_n together with the residuals of the
rewriting identities they satisfy.

Convention: ``jordan`` is ``(ab + ba)/2``.  In (b), H4 and the ``G_n y_1``
relation the Jordan factor has to be read as ``ab + ba`` for the formulas to
hold in ``R``; those constructors therefore carry the doubled coefficient.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Sequence

from .polyalg import (Q, StarPolynomial, commutator, jordan, star, y, z)
from .scalars import RingConfig


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def _prod(factors: Sequence[StarPolynomial], ring: RingConfig = Q) -> StarPolynomial:
    out = StarPolynomial.constant(1, ring)
    for f in factors:
        out = out * f
    return out


def make_H(k: int) -> StarPolynomial:
    """The k-th listed *-identity of R (1 <= k <= 10)."""
    c = commutator
    if k == 1:
        return c(y(1), y(2))
    if k == 2:
        return z(1) * z(2) * z(3) - z(3) * z(2) * z(1)
    if k == 3:
        return c(z(1), z(2)) * c(z(3), z(4))
    if k == 4:
        return c(y(1), z(1), z(2), z(3)) - 4 * jordan(z(1), z(2)) * c(y(1), z(3))
    if k == 5:
        return c(z(1), z(2)) * y(1) * c(z(3), z(4)) + c(z(3), z(4)) * y(1) * c(z(1), z(2))
    if k == 6:
        return (2 * z(1) * c(y(1), z(2), z(3)) + c(y(1), z(1), z(2), z(3))
                + c(z(1), z(2)) * c(y(1), z(3)) + c(z(1), z(3)) * c(y(1), z(2))
                + c(z(2), z(3)) * c(y(1), z(1)))
    if k == 7:
        return 2 * c(z(1), z(2)) * z(3) * c(y(1), z(4)) + c(z(1), z(2)) * c(y(1), z(3), z(4))
    if k == 8:
        return c(y(1), z(1)) * c(y(2), z(2)) + c(y(1), z(2)) * c(y(2), z(1))
    if k == 9:
        return c(y(1), z(1)) * c(y(2), z(2), z(3)) - c(y(1), z(2), z(1)) * c(y(2), z(3))
    if k == 10:
        return (c(z(1), z(2)) * c(y(1), z(3)) * c(y(2), z(4))
                - c(z(1), z(4)) * c(y(1), z(2)) * c(y(2), z(3))
                - c(z(2), z(3)) * c(y(1), z(1)) * c(y(2), z(4))
                + c(z(3), z(4)) * c(y(1), z(1)) * c(y(2), z(2)))
    raise ValueError(f"H_k is defined for 1 <= k <= 10, got {k}")


def make_central(which: str, p: int | None = None) -> StarPolynomial:
    """(a) ``z1 o z2``; (b) ``[y1,z1,z2] - 2(z1z2 + z2z1)y1``; (c) ``y1^p`` in characteristic p."""
    if which == "a":
        return jordan(z(1), z(2))
    if which == "b":
        return commutator(y(1), z(1), z(2)) - 4 * jordan(z(1), z(2)) * y(1)
    if which == "c":
        if not p or p < 3:
            raise ValueError("(c) is only defined in odd prime characteristic")
        ring = RingConfig(p)
        return y(1, ring) ** p
    raise ValueError(f"unknown central polynomial {which!r}")


def make_T() -> StarPolynomial:
    """``T = [y1,z1,z2] - [y1,z2,z1]``, an alternative generator to (b)."""
    return commutator(y(1), z(1), z(2)) - commutator(y(1), z(2), z(1))


def make_P(i: int, l: int) -> StarPolynomial:
    """``P_i`` in ``y2..y(l+1), z1..z(l+1)``.

    ``P_1 = [y2,z1,z2][y3,z3]...[y(l+1),z(l+1)]`` and for ``i > 1``
    ``P_i = [y2,z_i,z1][y3,z2]...[y_i,z(i-1)][y(i+1),z(i+1)]...[y(l+1),z(l+1)]``.
    """
    if l < 1 or not 1 <= i <= l + 1:
        raise ValueError(f"need 1 <= i <= l + 1 with l >= 1, got i={i}, l={l}")
    c = commutator
    if i == 1:
        factors = [c(y(2), z(1), z(2))] + [c(y(k), z(k)) for k in range(3, l + 2)]
    else:
        factors = [c(y(2), z(i), z(1))]
        factors += [c(y(k + 1), z(k)) for k in range(2, i)]
        factors += [c(y(k), z(k)) for k in range(i + 1, l + 2)]
    return _prod(factors)


def _commutator_chain(l: int, start: int = 1) -> StarPolynomial:
    return _prod([commutator(y(k), z(k)) for k in range(start, l + 2)])


def make_C(l: int) -> StarPolynomial:
    if l < 1:
        raise ValueError("l must be at least 1")
    out = StarPolynomial.zero()
    for n in range(1, l + 2):
        out = out + make_P(n, l) * (-1) ** n
    return out


def make_D(l: int) -> StarPolynomial:
    """``D_l = y1 C_l + [y1,z1]...[y(l+1),z(l+1)]``."""
    return y(1) * make_C(l) + _commutator_chain(l)


def make_G(n: int) -> StarPolynomial:
    if n < 1:
        raise ValueError("n must be at least 1")
    return _prod([jordan(z(2 * k - 1), z(2 * k)) for k in range(1, n + 1)])


def make_P_pair(m: int, n: int, l: int) -> StarPolynomial:
    """``P_{m,n} = [y2,z_m,z_n,z_k1][y3,z_k2]...[y(l+1),z_kl]``, the k's the rest of 1..l+2 in order."""
    rest = [k for k in range(1, l + 3) if k not in (m, n)]
    factors = [commutator(y(2), z(m), z(n), z(rest[0]))]
    factors += [commutator(y(j + 2), z(rest[j])) for j in range(1, l)]
    return _prod(factors)


def make_eq1_residual(i: int, l: int) -> StarPolynomial:
    """``[P_i, z(l+2)]`` minus its expansion into the ``P_{m,n}``."""
    if l < 1 or not 1 <= i <= l + 1:
        raise ValueError(f"need 1 <= i <= l + 1 with l >= 1, got i={i}, l={l}")
    lhs = commutator(make_P(i, l), z(l + 2))
    rhs = StarPolynomial.zero()
    for j in range(1, l + 2):
        if j < i:
            rhs = rhs + make_P_pair(j, i, l) * (-1) ** (l - j)
        elif j > i:
            rhs = rhs + make_P_pair(i, j, l) * (-1) ** (l + 1 - j)
    return lhs - rhs


def make_eq6_residual(word: Sequence[int]) -> StarPolynomial:
    """``z_i1...z_i2n - (z_i1 o z_i2)...(z_i(2n-1) o z_i2n) - g`` for a z-word given by indices."""
    if len(word) % 2:
        raise ValueError("the word must have even length")
    zs = [z(i) for i in word]
    pairs = [(zs[2 * k], zs[2 * k + 1]) for k in range(len(zs) // 2)]
    jords = [jordan(a, b) for a, b in pairs]
    lhs = _prod(zs)
    g = StarPolynomial.zero()
    for k, (a, b) in enumerate(pairs):
        g = g + _prod(jords[:k] + jords[k + 1:]) * commutator(a, b) * Fraction(1, 2)
    return lhs - _prod(jords) - g


def make_eq8_residual(n: int) -> StarPolynomial:
    """``G_n y1 - 4^(-n) [y1, z1, ..., z2n]`` (Jordan factors read as ``ab + ba``)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return make_G(n) * y(1) - commutator(y(1), *[z(k) for k in range(1, 2 * n + 1)]) * Fraction(1, 4 ** n)


def swap_commutators_residual(l: int, sigma: Sequence[int], tau: Sequence[int]) -> StarPolynomial:
    """``[y1,z1]...[yl,zl] - sgn(sigma)sgn(tau) [y_s(1),z_t(1)]...[y_s(l),z_t(l)]`` (permutations 1-based)."""
    lhs = _prod([commutator(y(k), z(k)) for k in range(1, l + 1)])
    rhs = _prod([commutator(y(sigma[k]), z(tau[k])) for k in range(l)])
    return lhs - rhs * (_perm_sign(sigma) * _perm_sign(tau))


def swap_tail_residual(l: int, sigma: Sequence[int]) -> StarPolynomial:
    """``[y1, z_s(1), ..., z_s(l), z(l+1)] - [y1, z1, ..., z(l+1)]``."""
    a = commutator(y(1), *[z(s) for s in sigma], z(l + 1))
    b = commutator(y(1), *[z(k) for k in range(1, l + 2)])
    return a - b


@dataclass
class CatalogEntry:
    name: str
    params: dict
    polynomial: StarPolynomial
    status: str  # identity | central | neither
    locus: str


def entries(max_l: int = 2, max_n: int = 2) -> List[CatalogEntry]:
    out = [CatalogEntry(f"H{k}", {"k": k}, make_H(k), "identity", "listed identity") for k in range(1, 11)]
    out.append(CatalogEntry("a", {}, make_central("a"), "central", "Jordan product of skews"))
    out.append(CatalogEntry("b", {}, make_central("b"), "central", "generator of V"))
    out.append(CatalogEntry("T", {}, make_T(), "central", "alternative generator"))
    for l in range(1, max_l + 1):
        out.append(CatalogEntry(f"C{l}", {"l": l}, make_C(l), "central", "mixed family"))
        out.append(CatalogEntry(f"D{l}", {"l": l}, make_D(l), "central", "mixed family"))
    for n in range(1, max_n + 1):
        out.append(CatalogEntry(f"G{n}", {"n": n}, make_G(n), "central", "z-only family"))
        out.append(CatalogEntry(f"shift{n}", {"n": n}, make_eq8_residual(n), "central", "G_n y1 shift"))
    return out


_BUILDERS: Dict[str, Callable] = {
    "H": make_H, "C": make_C, "D": make_D, "G": make_G,
    "P": make_P, "expansion": make_eq1_residual, "shift": make_eq8_residual,
}


def get(name: str, *params: int) -> StarPolynomial:
    """Look up a catalog polynomial by name, e.g. ``get("H", 4)`` or ``get("P", 2, 3)``.

    ``expansion i l``, ``rewrite w1 w2 ...`` and ``shift n`` give the residuals of
    the bracket expansion of ``P_i``, the Jordan rewriting of a z-word and the
    ``G_n y1`` relation.
    """
    if name in ("a", "b"):
        return make_central(name)
    if name == "c":
        return make_central("c", *params)
    if name == "T":
        return make_T()
    if name == "rewrite":
        return make_eq6_residual(params)
    if name not in _BUILDERS:
        raise KeyError(f"unknown catalog entry {name!r}")
    return _BUILDERS[name](*params)


NAMES = ["H", "a", "b", "c", "T", "P", "C", "D", "G", "expansion", "rewrite", "shift"]
