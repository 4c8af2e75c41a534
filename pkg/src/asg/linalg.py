"""Exact rational and integer-lattice linear algebra.

Everything here works on plain tuples of Python ints (arbitrary precision)
and :class:`fractions.Fraction`; no floating point is used anywhere.
Vectors are tuples, a list of vectors is read as the *columns* of a matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .errors import SingularBasis

IntVec = tuple  # tuple[int, ...]
Rat = Fraction


def vec(v) -> IntVec:
    return tuple(int(x) for x in v)


def add(u, v) -> IntVec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v) -> IntVec:
    return tuple(a - b for a, b in zip(u, v))


def scale(k, v) -> IntVec:
    return tuple(k * a for a in v)


def zero(d: int) -> IntVec:
    return (0,) * d


def content(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v) -> IntVec:
    """``v`` divided by the gcd of its entries."""
    g = content(v)
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    return tuple(x // g for x in v)


def _inverse(columns: Sequence[Sequence[int]]):
    """Return ``(det, inv)`` of the square matrix with the given columns."""
    n = len(columns)
    if any(len(c) != n for c in columns):
        raise SingularBasis(f"need {n} vectors of length {n}")
    # row-major working copy of [M | I]
    a = [[Fraction(columns[j][i]) for j in range(n)] + [Fraction(int(i == k)) for k in range(n)]
         for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SingularBasis("basis vectors are linearly dependent")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det *= p
        row = [x / p for x in a[col]]
        a[col] = row
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], row)]
    inv = [r[n:] for r in a]
    return det, inv


def coords_in_basis(basis: Sequence[Sequence[int]], v: Sequence[int]) -> tuple:
    """Exact coordinates ``lam`` with ``sum(lam[i] * basis[i]) == v``.

    >>> coords_in_basis([(5, 2), (2, 2)], (2, 1))
    (Fraction(1, 3), Fraction(1, 6))
    """
    _, inv = _inverse(basis)
    return tuple(sum((r * x for r, x in zip(row, v)), Fraction(0)) for row in inv)


class Basis:
    """An invertible integer basis with a cached integer adjugate.

    ``numerators(v)[i] / det`` is the i-th coordinate of ``v``; ``det`` is
    kept positive so sign tests on numerators are sign tests on coordinates.
    This is what the hot paths use: no Fraction objects are created.
    """

    def __init__(self, vectors: Sequence[Sequence[int]]):
        self.vectors = tuple(vec(b) for b in vectors)
        det, inv = _inverse(self.vectors)
        assert det.denominator == 1
        det = det.numerator
        adj = [[int(x * det) for x in row] for row in inv]
        if det < 0:
            det = -det
            adj = [[-x for x in row] for row in adj]
        self.det = det
        self.adj = tuple(tuple(row) for row in adj)
        self.dim = len(self.vectors)

    def numerators(self, v) -> IntVec:
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.adj)

    def coords(self, v) -> tuple:
        return tuple(Fraction(n, self.det) for n in self.numerators(v))

    def floors(self, v) -> IntVec:
        return tuple(n // self.det for n in self.numerators(v))

    def combine(self, coeffs) -> IntVec:
        out = [0] * self.dim
        for c, b in zip(coeffs, self.vectors):
            if c:
                for i, x in enumerate(b):
                    out[i] += c * x
        return tuple(out)

    def in_cone(self, v) -> bool:
        return all(n >= 0 for n in self.numerators(v))


def rank(vectors: Sequence[Sequence[int]]) -> int:
    if not vectors:
        return 0
    return hnf(vectors).rank


@dataclass(frozen=True)
class LatticeBasis:
    """Column Hermite normal form of an integer lattice.

    ``columns[k]`` has its first nonzero entry ``pivots[k]`` at row
    ``pivot_rows[k]`` (strictly increasing); entries of earlier columns in
    that row lie in ``[0, pivot)``.
    """

    columns: tuple
    pivot_rows: tuple
    dim: int

    @property
    def rank(self) -> int:
        return len(self.columns)

    @property
    def pivots(self) -> tuple:
        return tuple(c[r] for c, r in zip(self.columns, self.pivot_rows))


def hnf(columns: Sequence[Sequence[int]], dim: Optional[int] = None) -> LatticeBasis:
    """Canonical column HNF spanning the same integer lattice as ``columns``."""
    cols = [list(vec(c)) for c in columns]
    if dim is None:
        if not cols:
            raise ValueError("dimension unknown for an empty column list")
        dim = len(cols[0])
    rest = [c for c in cols if any(c)]
    basis: list = []
    pivot_rows: list = []
    for row in range(dim):
        live = [c for c in rest if c[row] != 0]
        if not live:
            continue
        dead = [c for c in rest if c[row] == 0]
        while len(live) > 1:
            live.sort(key=lambda c: abs(c[row]))
            p = live[0]
            nxt = [p]
            for c in live[1:]:
                q = c[row] // p[row]
                c = [x - q * y for x, y in zip(c, p)]
                if c[row] != 0:
                    nxt.append(c)
                elif any(c):
                    dead.append(c)
            live = nxt
        p = live[0]
        if p[row] < 0:
            p = [-x for x in p]
        basis.append(p)
        pivot_rows.append(row)
        rest = dead
    # reduce entries left of each pivot into [0, pivot)
    for k, row in enumerate(pivot_rows):
        pk = basis[k]
        for j in range(k):
            q = basis[j][row] // pk[row]
            if q:
                basis[j] = [x - q * y for x, y in zip(basis[j], pk)]
    return LatticeBasis(tuple(tuple(c) for c in basis), tuple(pivot_rows), dim)


def in_lattice(lattice: LatticeBasis, v: Sequence[int]) -> bool:
    """True iff ``v`` is an integer combination of the lattice columns."""
    if len(v) != lattice.dim:
        raise ValueError("dimension mismatch")
    r = list(v)
    for col, row in zip(lattice.columns, lattice.pivot_rows):
        if any(r[i] for i in range(row)):
            return False
        q, m = divmod(r[row], col[row])
        if m:
            return False
        if q:
            r = [x - q * y for x, y in zip(r, col)]
    return not any(r)


def lp_witness(columns: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[list]:
    """Nonnegative rational ``x`` with ``sum(x[i] * columns[i]) == target``, or None.

    Phase-one simplex over exact rationals with Bland's rule (lowest index
    enters, lowest basic index breaks ratio ties), so it always terminates.
    """
    m = len(target)
    n = len(columns)
    if any(len(c) != m for c in columns):
        raise ValueError("dimension mismatch")
    if n == 0:
        return [] if not any(target) else None
    # tableau rows: [A | I | b] with b >= 0
    rows = []
    for i in range(m):
        sign = -1 if target[i] < 0 else 1
        row = [Fraction(sign * columns[j][i]) for j in range(n)]
        row += [Fraction(int(k == i)) for k in range(m)]
        row.append(Fraction(sign * target[i]))
        rows.append(row)
    basis = [n + i for i in range(m)]
    width = n + m
    # reduced costs for min sum(artificials): c_j - sum over rows
    cost = [Fraction(0)] * (width + 1)
    for j in range(n):
        cost[j] = -sum(r[j] for r in rows)
    cost[width] = -sum(r[width] for r in rows)
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i, r in enumerate(rows):
            if r[enter] > 0:
                ratio = r[width] / r[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # unbounded; cannot happen in phase one
            break
        i = best[1]
        piv = rows[i][enter]
        rows[i] = [x / piv for x in rows[i]]
        for k in range(m):
            if k != i and rows[k][enter] != 0:
                f = rows[k][enter]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[i])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, rows[i])]
        basis[i] = enter
    if cost[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = rows[i][width]
    return x


def lp_feasible_nonneg(columns: Sequence[Sequence[int]], target: Sequence[int]) -> bool:
    return lp_witness(columns, target) is not None
