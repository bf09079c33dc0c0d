"""Exact sparse-vector span queries.

Vectors are dicts ``key -> scalar``.  Over the rationals, an independent
subset is chosen by row reduction modulo a large prime (python-flint
``nmod_mat``); coordinates are then solved exactly over ``Q`` (``fmpq_mat``)
and the combination is re-checked with exact arithmetic.  A plain Fraction
elimination is kept as an independent reference.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence

import flint

from .scalars import Fp

PRIME = (1 << 61) - 1

Vector = Dict[Hashable, object]


def _to_mod(c, p: int) -> int:
    if isinstance(c, Fp):
        return c.value
    c = Fraction(c)
    return c.numerator % p * pow(c.denominator, -1, p) % p


class SpanBuilder:
    """Incrementally grow a set of vectors, tracking a maximal independent subset.

    Independence is decided modulo ``prime`` (the field characteristic when it
    is positive).  Rows are kept in reduced echelon form.
    """

    def __init__(self, characteristic: int = 0, prime: int = PRIME, keep_all: bool = True):
        self.p = characteristic or prime
        self.keep_all = keep_all
        self.exact_char = characteristic
        self.columns: Dict[Hashable, int] = {}
        self.rows: List[Dict[int, int]] = []  # reduced rows, sparse mod p
        self.pivots: List[int] = []
        self.pivot_row: Dict[int, int] = {}
        self.basis: List[int] = []  # indices of accepted input vectors
        self.vectors: List[Vector] = []
        self.seen = 0

    def _col(self, key) -> int:
        if key not in self.columns:
            self.columns[key] = len(self.columns)
        return self.columns[key]

    def _reduce(self, row: Dict[int, int]) -> Dict[int, int]:
        # rows are fully reduced, so one pass over the pivot columns suffices
        p = self.p
        row = dict(row)
        for col in [c for c in row if c in self.pivot_row]:
            factor = row.get(col)
            if not factor:
                continue
            for c, v in self.rows[self.pivot_row[col]].items():
                nv = (row.get(c, 0) - factor * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return row

    def add(self, vec: Vector) -> bool:
        """Add a vector; return True if it enlarged the span.

        With ``keep_all=False`` only accepted vectors are stored and
        :meth:`solve` returns coordinates over them alone.
        """
        idx = self.seen if self.keep_all else len(self.rows)
        self.seen += 1
        if self.keep_all:
            self.vectors.append(vec)
        row = {}
        for k, c in vec.items():
            v = _to_mod(c, self.p)
            if v:
                row[self._col(k)] = v
        row = self._reduce(row)
        if not row:
            return False
        col = min(row)
        inv = pow(row[col], -1, self.p)
        row = {c: v * inv % self.p for c, v in row.items()}
        # keep the echelon form reduced
        for other in self.rows:
            f = other.get(col)
            if f:
                for c, v in row.items():
                    nv = (other.get(c, 0) - f * v) % self.p
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        self.pivot_row[col] = len(self.rows)
        self.rows.append(row)
        self.pivots.append(col)
        self.basis.append(idx)
        if not self.keep_all:
            self.vectors.append(vec)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains(self, target: Vector) -> bool:
        row = {}
        for k, c in target.items():
            v = _to_mod(c, self.p)
            if v:
                if k not in self.columns:
                    return False
                row[self.columns[k]] = v
        return not self._reduce(row)

    def solve(self, target: Vector) -> Optional[List]:
        """Exact coefficients for ``target``, or None.

        One coefficient per stored vector; vectors outside the chosen basis get 0.
        """
        if not self.contains(target):
            return None
        chosen = [self.vectors[i] for i in self.basis]
        coeffs = solve_exact(chosen, target, self.exact_char)
        if coeffs is None:
            return None
        full = [0] * len(self.vectors)
        for i, c in zip(self.basis, coeffs):
            full[i] = c
        return full


class DenseSpan:
    """Span over a fixed, known column set, grown in batches with flint ``nmod_mat``.

    Same contract as :class:`SpanBuilder` with ``keep_all=False``: only the
    vectors that enlarge the span are stored, in the order they were accepted.
    """

    def __init__(self, columns: Sequence[Hashable], characteristic: int = 0, prime: int = PRIME):
        self.p = characteristic or prime
        self.exact_char = characteristic
        self.columns = {k: i for i, k in enumerate(columns)}
        self.n = len(self.columns)
        self.vectors: List[Vector] = []
        self.pivots: List[int] = []
        self.reduced = None  # nmod_mat in reduced echelon form, rank x n
        self.reduced_rows: List[List[int]] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _dense(self, vec: Vector) -> List[int]:
        row = [0] * self.n
        for k, c in vec.items():
            if k not in self.columns:
                raise KeyError(f"{k!r} is not one of the registered columns")
            row[self.columns[k]] = _to_mod(c, self.p)
        return row

    def _residual(self, rows: List[List[int]]):
        mat = flint.nmod_mat(rows, self.p)
        if not self.pivots:
            return mat
        at_pivots = flint.nmod_mat([[r[c] for c in self.pivots] for r in rows], self.p)
        return mat - at_pivots * self.reduced

    def add_batch(self, vecs: Sequence[Vector]) -> List[bool]:
        """Add vectors in order; flag the ones that enlarged the span."""
        if not vecs or self.rank == self.n:
            return [False] * len(vecs)
        rows = [self._dense(v) for v in vecs]
        res = self._residual(rows)
        # pivot columns of the transposed residual = first independent rows
        red, r = res.transpose().rref()
        if r == 0:
            return [False] * len(vecs)
        chosen, j = [], 0
        for i in range(r):
            while int(red[i, j]) == 0:
                j += 1
            chosen.append(j)
            j += 1
        flags = [False] * len(vecs)
        for j in chosen:
            flags[j] = True
            self.vectors.append(vecs[j])
        stacked = self.reduced_rows + [[int(res[j, c]) for c in range(self.n)] for j in chosen]
        red, r = flint.nmod_mat(stacked, self.p).rref()
        table = [[int(x) for x in row] for row in red.tolist()[:r]]
        self.pivots = [next(c for c, x in enumerate(row) if x) for row in table]
        self.reduced_rows = table
        self.reduced = flint.nmod_mat(table, self.p)
        return flags

    def contains(self, target: Vector) -> bool:
        try:
            row = self._dense(target)
        except KeyError:
            return False
        res = self._residual([row])
        return all(int(x) == 0 for x in res.entries())

    def solve(self, target: Vector) -> Optional[List]:
        """Exact coordinates of ``target`` over the stored vectors, or None."""
        if not self.contains(target):
            return None
        return solve_exact(self.vectors, target, self.exact_char)


def solve_exact(vectors: Sequence[Vector], target: Vector, characteristic: int = 0) -> Optional[List]:
    """Solve ``sum c_i v_i = target`` for linearly independent ``v_i``; None if impossible."""
    keys = sorted({k for v in vectors for k in v} | set(target), key=repr)
    index = {k: i for i, k in enumerate(keys)}
    m, n = len(keys), len(vectors)
    if n == 0:
        return [] if not any(target.values()) else None
    if characteristic:
        p = characteristic
        aug = flint.nmod_mat(m, n + 1, p)
        for j, v in enumerate(vectors):
            for k, c in v.items():
                aug[index[k], j] = _to_mod(c, p)
        for k, c in target.items():
            aug[index[k], n] = _to_mod(c, p)
        red, rank = aug.rref()
        conv = lambda x: Fp(int(x), p)
    else:
        aug = flint.fmpq_mat(m, n + 1)
        for j, v in enumerate(vectors):
            for k, c in v.items():
                c = Fraction(c)
                aug[index[k], j] = flint.fmpq(c.numerator, c.denominator)
        for k, c in target.items():
            c = Fraction(c)
            aug[index[k], n] = flint.fmpq(c.numerator, c.denominator)
        red, rank = aug.rref()
        conv = lambda x: Fraction(int(x.p), int(x.q))
    sol = [None] * n
    for r in range(rank):
        lead = next(c for c in range(n + 1) if red[r, c] != 0)
        if lead == n:
            return None
        sol[lead] = conv(red[r, n])
    if any(s is None for s in sol):
        # dependent input; free variables set to zero
        zero = Fp(0, characteristic) if characteristic else Fraction(0)
        sol = [s if s is not None else zero for s in sol]
    return sol


def rref_fractions(rows: List[List[Fraction]]):
    """Reference reduced row echelon form over Q; returns (matrix, pivot columns)."""
    m = [list(map(Fraction, r)) for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        m[r] = [v / lead for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def in_span_fractions(vectors: Sequence[Vector], target: Vector) -> bool:
    """Reference membership test by plain Fraction elimination."""
    keys = sorted({k for v in vectors for k in v} | set(target), key=repr)
    rows = [[Fraction(v.get(k, 0)) for k in keys] for v in vectors]
    t = [Fraction(target.get(k, 0)) for k in keys]
    if not rows:
        return not any(t)
    _, piv = rref_fractions(rows)
    rank = len(piv)
    _, piv2 = rref_fractions(rows + [t])
    return len(piv2) == rank
