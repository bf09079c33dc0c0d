"""Deciding *-identities and *-central polynomials of ``R = M_{1,1}(E)``.

Strategies
----------
``exhaustive``
    For a multilinear component, substituting spanning elements with pairwise
    disjoint Grassmann supports is enough, and the value then depends only on
    the parity of each support.  Each letter is therefore tried with its even
    shape (``1`` or ``diag(1,-1)``) and its odd shape (``e12`` or ``e21``):
    ``2**m`` assignments for ``m`` letters.  A component of higher degree is
    treated through its full polarization without writing it out: in the
    polarization at most one copy of a letter may take the odd shape (two odd
    copies with the same matrix cancel), so the scan ranges over which single
    occurrence carries it.  This needs the characteristic to exceed every
    letter degree; otherwise the generic symbolic strategy is used.
``symbolic``
    Evaluate on generic elements with fresh commuting coefficients ``t_i``.
``random``
    Evaluate on seeded random elements; a pass is only heuristic.

Every failure carries a witness that is re-evaluated with full ``M_{1,1}(E)``
arithmetic before it is reported.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional

from .m11 import (M11Element, TestFamily, TruncationError, is_central_element,
                  m11_star, make_test_family, required_truncation)
from .polyalg import (Indeterminate, StarPolynomial, commutator,
                      homogeneous_components, multidegree,
                      multilinearize_with_frame,
                      sym_skew_split)
from .scalars import RingConfig, SymbolAllocator

SCHEMA = "starcentral/check-report/1"


class AssignmentError(ValueError):
    pass


@dataclass(frozen=True)
class CheckConfig:
    characteristic: int = 0
    strategy: str = "exhaustive"  # exhaustive | symbolic | random
    seed: int = 0
    truncation: Optional[int] = None
    trials: int = 20

    def __post_init__(self):
        if self.strategy not in ("exhaustive", "symbolic", "random"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.truncation is not None and self.truncation < 1:
            raise ValueError("truncation must be at least 1")
        RingConfig(self.characteristic)

    @property
    def ring(self) -> RingConfig:
        return RingConfig(self.characteristic)


@dataclass
class CheckReport:
    verdict: str  # "holds" | "fails"
    strategy: str
    truncation: int
    char: int
    completeness: str  # "exact" | "heuristic"
    witness: Optional[Dict[Indeterminate, M11Element]] = None
    value: Optional[M11Element] = None
    polynomial: Optional[StarPolynomial] = None
    frame: Optional[Dict[Indeterminate, Indeterminate]] = None
    extra: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"

    def to_dict(self) -> dict:
        out = {
            "schema": SCHEMA,
            "verdict": self.verdict,
            "strategy": self.strategy,
            "truncation": self.truncation,
            "char": self.char,
            "completeness": self.completeness,
        }
        if self.witness is not None:
            out["witness"] = {
                "polynomial": str(self.polynomial),
                "assignment": {str(k): str(v) for k, v in sorted(self.witness.items())},
                "value": str(self.value),
            }
            if self.frame:
                out["witness"]["frame"] = {str(k): str(v) for k, v in sorted(self.frame.items())}
        out.update(self.extra)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# ---------------------------------------------------------------------------- evaluation

def check_assignment(assignment: Mapping[Indeterminate, M11Element]):
    for x, v in assignment.items():
        s = m11_star(v)
        if x.kind == "y" and s != v:
            raise AssignmentError(f"{x} must be assigned a symmetric element")
        if x.kind == "z" and s != -v:
            raise AssignmentError(f"{x} must be assigned a skew element")


def evaluate(f: StarPolynomial, assignment: Mapping[Indeterminate, M11Element],
             check: bool = True) -> M11Element:
    """Image of ``f`` under the *-homomorphism fixed by ``assignment``."""
    if not assignment:
        raise AssignmentError("empty assignment")
    missing = [x for x in f.variables() if x not in assignment]
    if missing:
        raise AssignmentError(f"unassigned variables: {', '.join(map(str, missing))}")
    if check:
        check_assignment(assignment)
    n = next(iter(assignment.values())).n
    ring = f.ring
    one = M11Element.identity(n, ring)
    cache: Dict[tuple, M11Element] = {(): one}

    def prod(w):
        if w in cache:
            return cache[w]
        p = prod(w[:-1]) * assignment[w[-1]]
        cache[w] = p
        return p

    total = M11Element.zero(n)
    for w, c in f.items():
        total = total + prod(w) * c
    return total


# ---------------------------------------------------------------------------- parity scan

# each shape maps a row index to (sign, new row) or None
_SHAPES = {
    ("y", 0): ((1, 0), (1, 1)),      # identity
    ("y", 1): ((1, 1), None),        # e12
    ("z", 0): ((1, 0), (-1, 1)),     # diag(1, -1)
    ("z", 1): (None, (1, 0)),        # e21
}


def _parity_scan(g: StarPolynomial, letters: List[Indeterminate]):
    """Return the first odd-pattern (tuple of 0/1 per letter) where ``g`` does not vanish."""
    idx = {x: i for i, x in enumerate(letters)}
    m = len(letters)
    kinds = [x.kind for x in letters]
    zero = g.ring.zero
    compiled = []
    for w, c in g.items():
        seq = tuple(idx[x] for x in w)
        pos = [[] for _ in range(m)]
        for p, i in enumerate(seq):
            pos[i].append(p)
        compiled.append((c, seq, pos))
    for pattern in itertools.product((0, 1), repeat=m):
        odd_letters = [i for i in range(m) if pattern[i]]
        acc = [[zero, zero], [zero, zero]]
        for c, seq, pos in compiled:
            for choice in itertools.product(*(pos[i] for i in odd_letters)):
                oddset = set(choice)
                order = [seq[p] for p in sorted(choice)]
                inv = sum(1 for a in range(len(order)) for b in range(a + 1, len(order))
                          if order[a] > order[b])
                sign0 = -1 if inv & 1 else 1
                for r0 in (0, 1):
                    r, s = r0, sign0
                    for p, i in enumerate(seq):
                        step = _SHAPES[(kinds[i], 1 if p in oddset else 0)][r]
                        if step is None:
                            break
                        s *= step[0]
                        r = step[1]
                    else:
                        acc[r0][r] = acc[r0][r] + c if s > 0 else acc[r0][r] - c
        if any(v for row in acc for v in row):
            return pattern
    return None


def _auto_truncation(g: StarPolynomial, cfg: CheckConfig, kind: str) -> int:
    need = required_truncation(g, kind)
    deg = g.degree
    if cfg.truncation is None:
        return max(need, 2 * deg)
    if cfg.truncation < need:
        raise TruncationError(
            f"truncation {cfg.truncation} insufficient: need {need} generators for degree {deg}")
    return cfg.truncation


def _component_identity(g: StarPolynomial, cfg: CheckConfig, allocator) -> CheckReport:
    p = cfg.characteristic
    letters = list(g.variables())
    degs = multidegree(g)
    multilinear = all(v == 1 for v in degs.values())
    top = max(degs.values(), default=0)
    strategy = cfg.strategy
    if strategy == "exhaustive" and not multilinear and p and p <= top:
        strategy = "symbolic"

    if strategy == "exhaustive":
        label = "exhaustive" if multilinear else "exhaustive-linearized"
        if multilinear:
            target, frame = g, None
        else:
            target, frame = multilinearize_with_frame(g)
        n = _auto_truncation(target, cfg, "spanning")
        pattern = _parity_scan(g, letters)
        if pattern is None:
            return CheckReport("holds", label, n, p, "exact")
        fam = make_test_family(target, "spanning", n=n)
        chosen = {}
        odd_for = {x for x, bit in zip(letters, pattern) if bit}
        for x in target.variables():
            orig = frame[x] if frame else x
            odd = orig in odd_for and (frame is None or x == orig)
            cands = fam.candidates(x)
            chosen[x] = cands[2] if odd else cands[0]
        value = evaluate(target, chosen)
        if not value:
            raise AssertionError("parity scan and full evaluation disagree")
        return CheckReport("fails", label, n, p, "exact", chosen, value, target, frame)

    if strategy == "symbolic":
        n = _auto_truncation(g, cfg, "generic")
        fam = make_test_family(g, "generic-symbolic", n=n, allocator=allocator)
        assign = {x: fam.candidates(x)[0] for x in letters}
        value = evaluate(g, assign)
        if value:
            return CheckReport("fails", "symbolic", n, p, "exact", assign, value, g)
        return CheckReport("holds", "symbolic", n, p, "exact")

    n = _auto_truncation(g, cfg, "generic")
    for t in range(cfg.trials):
        fam = make_test_family(g, "random", seed=cfg.seed * 1_000_003 + t, n=n)
        assign = {x: fam.candidates(x)[0] for x in letters}
        value = evaluate(g, assign)
        if value:
            return CheckReport("fails", "random", n, p, "exact", assign, value, g)
    return CheckReport("holds", "random", n, p, "heuristic")


def _prepare(f: StarPolynomial, cfg: CheckConfig) -> StarPolynomial:
    if f.ring != cfg.ring:
        f = f.to_ring(cfg.ring)
    return f


def is_identity(f: StarPolynomial, cfg: CheckConfig = CheckConfig()) -> CheckReport:
    """Decide whether ``f`` vanishes on all symmetric/skew substitutions in ``R``."""
    f = _prepare(f, cfg)
    allocator = SymbolAllocator()
    reports = []
    for g in homogeneous_components(f).values():
        r = _component_identity(g, cfg, allocator)
        if not r.holds:
            return r
        reports.append(r)
    if not reports:
        return CheckReport("holds", "trivial", cfg.truncation or 0, cfg.characteristic, "exact")
    exact = all(r.completeness == "exact" for r in reports)
    strategies = sorted({r.strategy for r in reports})
    return CheckReport("holds", "+".join(strategies), max(r.truncation for r in reports),
                       cfg.characteristic, "exact" if exact else "heuristic")


def fresh_letters(f: StarPolynomial):
    return (Indeterminate("y", f.max_index("y") + 1), Indeterminate("z", f.max_index("z") + 1))


def is_central(f: StarPolynomial, cfg: CheckConfig = CheckConfig()) -> CheckReport:
    """``f`` is central iff ``[f, y_new]`` and ``[f, z_new]`` are identities."""
    f = _prepare(f, cfg)
    fy, fz = fresh_letters(f)
    ring = f.ring
    ident = is_identity(f, cfg)
    for letter in (fy, fz):
        bracket = commutator(f, StarPolynomial.letter(letter, ring))
        r = is_identity(bracket, cfg)
        if not r.holds:
            r.extra = {"failing_bracket": str(letter), "identity": ident.holds}
            return r
    return CheckReport("holds", r.strategy, r.truncation, r.char, r.completeness,
                       extra={"failing_bracket": None, "identity": ident.holds})


def check_sym_skew_theorem(f: StarPolynomial, cfg: CheckConfig = CheckConfig()) -> bool:
    """For central ``f``: its symmetric part is central and its skew part an identity."""
    if not is_central(f, cfg).holds:
        raise ValueError("precondition violated: polynomial is not central")
    fs, fk = sym_skew_split(_prepare(f, cfg))
    return is_central(fs, cfg).holds and is_identity(fk, cfg).holds


def witness_is_sound(report: CheckReport, central: bool = False) -> bool:
    """Re-evaluate a failing report's witness independently."""
    if report.holds:
        return True
    value = evaluate(report.polynomial, report.witness)
    if value != report.value:
        return False
    return bool(value) and not (central and is_central_element(value))


def exhaustive_reference(f: StarPolynomial, n: Optional[int] = None) -> bool:
    """Slow oracle: evaluate a multilinear ``f`` on every tuple of the 3-shape spanning family."""
    fam = make_test_family(f, "spanning", n=n)
    letters = list(f.variables())
    for combo in itertools.product(*(fam.candidates(x) for x in letters)):
        if evaluate(f, dict(zip(letters, combo)), check=False):
            return False
    return True
