"""The validated semigroup object and its membership oracles."""
from __future__ import annotations

import threading
from dataclasses import dataclass

from . import kernels
from .cone import ConeInfo, analyze_cone, minimal_generators, require_simplicial, validate_generators
from .errors import NotInSemigroup, OutsideCone
from .linalg import IntVec, LatticeBasis, hnf, in_lattice, sub, vec


@dataclass(frozen=True)
class Remainder:
    vector: IntVec
    floors: IntVec


class Semigroup:
    """A simplicial affine semigroup S in N^d.

    ``generators`` is the minimal generating set with the extremal rays
    a_1..a_d first, then the remaining generators in input order.
    Construction raises ``MalformedInput``, ``RankDeficient`` or
    ``NotSimplicial``.
    """

    def __init__(self, generators):
        raw = validate_generators(generators)
        self.raw_generators = tuple(raw)
        kept, removed = minimal_generators(raw)
        self.removed_generators = tuple(removed)
        self.d = len(raw[0])
        info = require_simplicial(analyze_cone(kept))
        ext = list(info.extremal_generator_indices)
        order = ext + [i for i in range(len(kept)) if i not in ext]
        self.generators = tuple(kept[i] for i in order)
        # re-index the cone info against the reordered list
        self.cone = ConeInfo(info.dimension, info.extreme_ray_directions,
                             tuple(range(self.d)), True, info.basis)
        self.basis = info.basis
        self.lattice_full: LatticeBasis = hnf(self.generators)
        self.lattice_extremal: LatticeBasis = hnf(self.extremal)
        self._search_order = tuple(sorted(self.generators, key=sum, reverse=True))
        self._cuts = self.basis.adj
        self._cache: dict = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return f"Semigroup({[list(g) for g in self.generators]})"

    @property
    def extremal(self) -> tuple:
        return self.generators[:self.d]

    @property
    def nonextremal(self) -> tuple:
        return self.generators[self.d:]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def cache_size(self) -> int:
        return len(self._cache)

    def in_cone(self, v) -> bool:
        return self.basis.in_cone(v)

    def in_semigroup(self, v) -> bool:
        v = vec(v)
        if min(v) < 0:
            return False
        hit = self._cache.get(v)
        if hit is not None:
            return hit
        if not any(v):
            res = True
        elif not self.basis.in_cone(v) or not in_lattice(self.lattice_full, v):
            res = False
        else:
            res = kernels.is_combination(self._search_order, v, self._cuts)
        with self._lock:
            self._cache[v] = res
        return res

    __contains__ = in_semigroup

    def ord(self, v) -> int:
        """Largest length of an expression of ``v`` in the generators."""
        v = vec(v)
        if not self.in_semigroup(v):
            raise NotInSemigroup(f"{v} is not in S")
        memo = {tuple(0 for _ in v): 0}
        stack = [v]
        while stack:
            x = stack[-1]
            if x in memo:
                stack.pop()
                continue
            preds = [sub(x, g) for g in self.generators]
            preds = [p for p in preds if self.in_semigroup(p)]
            todo = [p for p in preds if p not in memo]
            if todo:
                stack.extend(todo)
                continue
            memo[x] = 1 + max(memo[p] for p in preds)
            stack.pop()
        return memo[v]

    def remainder(self, v) -> Remainder:
        v = vec(v)
        if min(v) < 0 or not self.basis.in_cone(v):
            raise OutsideCone(f"{v} is not in the cone of S")
        floors = self.basis.floors(v)
        r = sub(v, self.basis.combine(floors))
        return Remainder(r, floors)

    def in_normalization(self, v) -> bool:
        v = vec(v)
        return in_lattice(self.lattice_full, v) and self.basis.in_cone(v)

    def is_pseudo_frobenius(self, v) -> bool:
        v = vec(v)
        if self.in_semigroup(v):
            return False
        return all(self.in_semigroup(tuple(a + b for a, b in zip(v, g))) for g in self.generators)
