"""Extreme rays, simpliciality and the extremal generators a_1..a_d."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from . import kernels
from .errors import MalformedInput, NotSimplicial, RankDeficient
from .linalg import Basis, lp_feasible_nonneg, primitive, rank, vec

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConeInfo:
    dimension: int
    extreme_ray_directions: tuple
    extremal_generator_indices: tuple
    is_simplicial: bool
    basis: Optional[Basis] = None  # extremal generators, only when simplicial

    def in_cone(self, v) -> bool:
        if self.basis is None:
            raise NotSimplicial("cone membership needs a simplicial cone")
        return self.basis.in_cone(v)


def validate_generators(generators) -> list:
    """Integer, nonnegative, nonzero vectors of one common length d >= 1."""
    gens = []
    for g in generators:
        try:
            t = tuple(g)
        except TypeError:
            raise MalformedInput(f"generator {g!r} is not a vector") from None
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in t):
            raise MalformedInput(f"generator {g!r} has non-integer entries")
        gens.append(vec(t))
    if not gens:
        raise MalformedInput("no generators given")
    d = len(gens[0])
    if d < 1 or any(len(g) != d for g in gens):
        raise MalformedInput("generators must all have the same length d >= 1")
    for g in gens:
        if min(g) < 0:
            raise MalformedInput(f"generator {g} has a negative entry")
        if not any(g):
            raise MalformedInput("the zero vector is not a valid generator")
    return gens


def minimal_generators(generators) -> tuple:
    """Split ``generators`` into ``(kept, removed)``.

    A generator is dropped when it is a duplicate or lies in the semigroup
    spanned by the others; what remains is the unique minimal generating set.
    """
    seen = set()
    uniq = []
    removed = []
    for g in generators:
        if g in seen:
            removed.append(g)
        else:
            seen.add(g)
            uniq.append(g)
    kept = []
    for i, g in enumerate(uniq):
        others = sorted((h for j, h in enumerate(uniq) if j != i), key=sum, reverse=True)
        if kernels.is_combination(others, g):
            removed.append(g)
        else:
            kept.append(g)
    for g in removed:
        log.warning("dropping redundant generator %s", g)
    return kept, removed


def _parallel(u, v) -> bool:
    # u and v proportional: all 2x2 minors vanish
    n = len(u)
    return all(u[i] * v[j] == u[j] * v[i] for i in range(n) for j in range(i + 1, n))


def analyze_cone(generators) -> ConeInfo:
    """Extreme rays of the cone spanned by ``generators`` (nonzero, in N^d).

    Generators are grouped by direction; a direction is extreme when it is
    not a nonnegative rational combination of the generators off that line.
    On each extreme ray the componentwise smallest generator is extremal.
    """
    gens = [vec(g) for g in generators]
    d = len(gens[0])
    rk = rank(gens)
    if rk < d:
        raise RankDeficient(f"generators span a rank-{rk} cone in ambient dimension {d}")
    classes: list = []  # [direction, [indices]]
    for i, g in enumerate(gens):
        p = primitive(g)
        for c in classes:
            if c[0] == p:
                c[1].append(i)
                break
        else:
            classes.append([p, [i]])
    directions = []
    chosen = []
    for p, idx in classes:
        outside = [g for g in gens if not _parallel(g, p)]
        if lp_feasible_nonneg(outside, p):
            continue
        directions.append(p)
        chosen.append(min(idx, key=lambda i: sum(gens[i])))
    simplicial = len(directions) == d
    basis = Basis([gens[i] for i in chosen]) if simplicial else None
    return ConeInfo(rk, tuple(directions), tuple(chosen), simplicial, basis)


def require_simplicial(info: ConeInfo) -> ConeInfo:
    if not info.is_simplicial:
        raise NotSimplicial(
            f"cone has {len(info.extreme_ray_directions)} extreme rays in dimension "
            f"{info.dimension}; only simplicial semigroups are supported")
    return info


def in_cone(info: ConeInfo, v) -> bool:
    return info.in_cone(v)
