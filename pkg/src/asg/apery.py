"""Ap(S,E), its remainder classes and maxima under the two partial orders."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm, prod

from .errors import ResourceLimit
from .linalg import IntVec, add, sub
from .semigroup import Semigroup

DEFAULT_TUPLE_LIMIT = 10**7


@dataclass(frozen=True)
class AperyTable:
    elements: tuple
    remainders: tuple  # b_0 = 0 first, then lexicographic
    class_of: dict = field(repr=False)
    floors: dict = field(repr=False)
    gamma_bounds: tuple
    max_S: tuple
    max_c: tuple

    @property
    def k(self) -> int:
        return len(self.remainders) - 1

    def classes(self) -> list:
        """``classes()[j]`` is C_j as a sorted tuple."""
        out = [[] for _ in self.remainders]
        for w in self.elements:
            out[self.class_of[w]].append(w)
        return [tuple(c) for c in out]


def gamma_bounds(s: Semigroup) -> tuple:
    """Least l_i with l_i * a_{d+i} in the N-span of the extremal rays."""
    det = s.basis.det
    out = []
    for g in s.nonextremal:
        nums = s.basis.numerators(g)
        out.append(lcm(*(Fraction(n, det).denominator for n in nums)))
    return tuple(out)


def _map(fn, items, threads):
    if threads and threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def is_apery(s: Semigroup, v) -> bool:
    """For v in S: v - a_j not in S for every extremal a_j."""
    nums = s.basis.numerators(v)
    det = s.basis.det
    for j, a in enumerate(s.extremal):
        if nums[j] >= det and s.in_semigroup(sub(v, a)):
            return False
    return True


def apery_set(s: Semigroup, limit: int = DEFAULT_TUPLE_LIMIT, threads: int = 1) -> AperyTable:
    """Compute Ap(S,E) inside the box of non-extremal multiples.

    The set is closed downward under the semigroup order, so the box is
    walked outward from 0 and children of rejected points are never tried.
    The output is the same set the full tuple scan would give.
    """
    bounds = gamma_bounds(s)
    if prod(bounds) > limit:
        raise ResourceLimit(f"Apery candidate box has {prod(bounds)} tuples, limit is {limit}")
    origin = (0,) * s.d
    accepted = {origin}
    tried = {origin}
    frontier = [origin]
    while frontier:
        cands = sorted({add(w, g) for w in frontier for g in s.nonextremal} - tried)
        tried.update(cands)
        keep = _map(lambda v: is_apery(s, v), cands, threads)
        frontier = [v for v, ok in zip(cands, keep) if ok]
        accepted.update(frontier)
    elements = tuple(sorted(accepted))
    return build_table(s, elements, bounds)


def build_table(s: Semigroup, elements, bounds=()) -> AperyTable:
    rem = {w: s.remainder(w) for w in elements}
    origin = (0,) * s.d
    nonzero = sorted({r.vector for r in rem.values()} - {origin})
    remainders = (origin,) + tuple(nonzero)
    index = {b: j for j, b in enumerate(remainders)}
    class_of = {w: index[rem[w].vector] for w in elements}
    floors = {w: rem[w].floors for w in elements}
    table = AperyTable(tuple(elements), remainders, class_of, floors, tuple(bounds), (), ())
    return AperyTable(table.elements, remainders, class_of, floors, tuple(bounds),
                      maxima(s, table, "semigroup"), maxima(s, table, "cone"))


def maxima(s: Semigroup, table: AperyTable, order: str) -> tuple:
    """Maximal Apery elements under the semigroup or the cone order.

    For the semigroup order, m is not maximal exactly when m + g is again an
    Apery element for some non-extremal generator g (the difference w - m of
    two Apery elements only involves non-extremal generators).
    """
    elems = table.elements
    if order == "semigroup":
        present = set(elems)
        return tuple(m for m in elems if not any(add(m, g) in present for g in s.nonextremal))
    if order == "cone":
        nums = {w: s.basis.numerators(w) for w in elems}
        out = []
        for m in elems:
            nm = nums[m]
            if not any(w != m and all(a >= b for a, b in zip(nums[w], nm)) for w in elems):
                out.append(m)
        return tuple(out)
    raise ValueError(f"unknown order {order!r}")


def maxima_pairwise(s: Semigroup, elements) -> tuple:
    """Reference version of the semigroup-order maxima: O(n^2) membership."""
    return tuple(m for m in elements
                 if not any(w != m and s.in_semigroup(sub(w, m)) for w in elements))
