"""Brute-force reference computations for differential tests.

Deliberately independent of the main path: only the primitives in
:mod:`asg.linalg` are shared.  Everything is a scan of a finite box, so the
functions are slow and refuse boxes with more than ``MAX_POINTS`` points.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm

from .errors import ResourceLimit
from .linalg import Basis, hnf, in_lattice, lp_feasible_nonneg, primitive

MAX_POINTS = 10**6


@dataclass(frozen=True)
class BoxEnumeration:
    bound: int
    in_s: frozenset
    in_sbar: frozenset


def _check(bound, d):
    if (bound + 1) ** d > MAX_POINTS:
        raise ResourceLimit(f"box [0,{bound}]^{d} is too large for the oracle")


def extremal_rays(generators) -> list:
    """Smallest generator on each extreme ray, ordered by first appearance."""
    gens = [tuple(g) for g in generators]
    out = []
    seen = set()
    for g in gens:
        p = primitive(g)
        if p in seen:
            continue
        seen.add(p)
        line = [h for h in gens if primitive(h) == p]
        rest = [h for h in gens if primitive(h) != p]
        if not lp_feasible_nonneg(rest, p):
            out.append(min(line, key=sum))
    return out


def semigroup_box(generators, bound) -> set:
    """S intersected with [0, bound]^d by closure under adding generators."""
    d = len(generators[0])
    _check(bound, d)
    origin = (0,) * d
    found = {origin}
    todo = [origin]
    while todo:
        v = todo.pop()
        for g in generators:
            w = tuple(a + b for a, b in zip(v, g))
            if max(w) <= bound and w not in found:
                found.add(w)
                todo.append(w)
    return found


def enumerate_box(generators, bound) -> BoxEnumeration:
    gens = [tuple(g) for g in generators]
    d = len(gens[0])
    in_s = semigroup_box(gens, bound)
    lat = hnf(gens)
    basis = Basis(extremal_rays(gens))
    in_sbar = {v for v in product(range(bound + 1), repeat=d)
               if basis.in_cone(v) and in_lattice(lat, v)}
    return BoxEnumeration(bound, frozenset(in_s), frozenset(in_sbar))


def gamma_box_bound(generators) -> int:
    """Largest coordinate of sum (l_i - 1) a_{d+i} over non-extremal generators."""
    gens = [tuple(g) for g in generators]
    ext = extremal_rays(gens)
    basis = Basis(ext)
    top = [0] * len(gens[0])
    for g in gens:
        if g in ext:
            continue
        l = lcm(*(Fraction(x).denominator for x in basis.coords(g)))
        top = [t + (l - 1) * x for t, x in zip(top, g)]
    return max(top)


def oracle_apery(generators, bound=None) -> set:
    gens = [tuple(g) for g in generators]
    ext = extremal_rays(gens)
    if bound is None:
        bound = gamma_box_bound(gens)
    in_s = semigroup_box(gens, bound)
    return {v for v in in_s
            if all(tuple(a - b for a, b in zip(v, e)) not in in_s for e in ext)}


def parallelotope_points(generators) -> list:
    """Lattice points of Gr(S) in the half-open parallelotope of the extremal rays."""
    gens = [tuple(g) for g in generators]
    ext = extremal_rays(gens)
    basis = Basis(ext)
    lat = hnf(gens)
    corner = [sum(col) for col in zip(*ext)]
    out = []
    for v in product(*(range(c + 1) for c in corner)):
        if all(0 <= n < basis.det for n in basis.numerators(v)) and in_lattice(lat, v):
            out.append(v)
    return out


def oracle_conductor_elements(generators, bound) -> set:
    """Conductor elements inside [0, bound]^d: c in S with c + b in S for all b."""
    gens = [tuple(g) for g in generators]
    pts = parallelotope_points(gens)
    reach = max(max(p) for p in pts)
    in_s = semigroup_box(gens, bound + reach)
    return {c for c in in_s if max(c) <= bound
            and all(tuple(a + b for a, b in zip(c, p)) in in_s for p in pts)}
