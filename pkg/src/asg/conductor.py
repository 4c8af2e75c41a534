"""Normalization generators, f-vectors and the conductor ideal over S-bar."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Optional

from .apery import DEFAULT_TUPLE_LIMIT, AperyTable
from .errors import InvalidTuple, NotNumerical, ResourceLimit
from .linalg import add, sub
from .semigroup import Semigroup


@dataclass(frozen=True)
class FVector:
    tuple: tuple
    floors: tuple
    value: tuple


@dataclass(frozen=True)
class ConductorSet:
    minimal_generators: tuple
    candidates_examined: int
    fast_path_used: str  # "none" | "single_class" | "principal"


def minimalize(s: Semigroup, vectors) -> tuple:
    """Drop every v with v - u in S-bar for some other listed u; sorted output.

    For a set that contains all minimal generators of an S-bar ideal this
    leaves exactly those generators.
    """
    vs = sorted(set(vectors))
    return tuple(v for v in vs
                 if not any(u != v and s.in_normalization(sub(v, u)) for u in vs))


def normalization_generators(s: Semigroup, table: AperyTable) -> tuple:
    """Minimal generators of S-bar: remainders of Ap(S,E) plus a_1..a_d."""
    cands = set(table.remainders[1:]) | set(s.extremal)
    return minimalize(s, cands)


def conductor_membership(s: Semigroup, table: AperyTable, c) -> bool:
    c = tuple(c)
    if not s.in_semigroup(c):
        return False
    return all(s.in_semigroup(add(c, b)) for b in table.remainders[1:])


def f_vector(s: Semigroup, table: AperyTable, choice) -> FVector:
    """f_{(w_1..w_k)}: coordinatewise max of the floors of one element per class."""
    choice = tuple(tuple(w) for w in choice)
    if len(choice) != table.k or any(table.class_of.get(w) != j + 1 for j, w in enumerate(choice)):
        raise InvalidTuple("need exactly one Apery element from each class C_1..C_k, in order")
    floors = [0] * s.d
    for w in choice:
        floors = [max(a, b) for a, b in zip(floors, table.floors[w])]
    value = s.basis.combine(floors)
    assert conductor_membership(s, table, value)
    return FVector(choice, tuple(floors), value)


def f_floor_set(s: Semigroup, table: AperyTable, limit: int = DEFAULT_TUPLE_LIMIT) -> tuple:
    """All distinct floor vectors of f over C_1 x ... x C_k.

    The coordinatewise max is folded class by class and deduplicated after
    each step, so the full product is never materialized.
    """
    acc = {(0,) * s.d}
    for cls in table.classes()[1:]:
        fl = {table.floors[w] for w in cls}
        if len(acc) * len(fl) > limit:
            raise ResourceLimit(f"f-vector product exceeds the limit of {limit}")
        acc = {tuple(max(a, b) for a, b in zip(f, g)) for f in acc for g in fl}
    return tuple(sorted(acc))


def conductor_candidates(s: Semigroup, table: AperyTable, limit: int = DEFAULT_TUPLE_LIMIT,
                         include_full: bool = False) -> list:
    """f - b_j + sum_{i in I} a_i over all f-vectors, j = 0..k, I a proper subset.

    ``include_full`` also admits I = {1..d}; those never yield minimal generators.
    """
    d = s.d
    subsets = [I for n in range(d + (1 if include_full else 0)) for I in combinations(range(d), n)]
    shifts = []
    for I in subsets:
        v = (0,) * d
        for i in I:
            v = add(v, s.extremal[i])
        shifts.append(v)
    out = set()
    for fl in f_floor_set(s, table, limit):
        f = s.basis.combine(fl)
        for b in table.remainders:
            base = sub(f, b)
            for sh in shifts:
                out.add(add(base, sh))
    return sorted(out)


def _filter(s, table, cands, threads):
    fn = lambda c: min(c) >= 0 and conductor_membership(s, table, c)  # noqa: E731
    if threads and threads > 1 and len(cands) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            keep = list(pool.map(fn, cands))
    else:
        keep = [fn(c) for c in cands]
    return [c for c, k in zip(cands, keep) if k]


def conductor_min_gens(s: Semigroup, table: AperyTable, limit: int = DEFAULT_TUPLE_LIMIT,
                       threads: int = 1, include_full: bool = False) -> ConductorSet:
    cands = conductor_candidates(s, table, limit, include_full)
    good = _filter(s, table, cands, threads)
    return ConductorSet(minimalize(s, good), len(cands), "none")


def _cone_le(s, u, v) -> bool:
    return all(a <= b for a, b in zip(s.basis.numerators(u), s.basis.numerators(v)))


def _cone_max(s, vs) -> list:
    return [v for v in vs if not any(u != v and _cone_le(s, v, u) for u in vs)]


def conductor_fast_path(s: Semigroup, table: AperyTable) -> Optional[ConductorSet]:
    """Closed form when one remainder class dominates the rest in the cone order.

    Applies when some class C_j has every element above every Apery element
    outside it, and C_j is a singleton or b_j is the cone-order minimum of
    the nonzero remainders. Returns None otherwise.
    """
    classes = table.classes()
    k = table.k
    if k == 0:
        origin = (0,) * s.d
        return ConductorSet((origin,), 1, "principal")
    nonzero = list(table.remainders[1:])
    tops = _cone_max(s, nonzero)
    for j in range(1, k + 1):
        cj = classes[j]
        outside = [w for w in table.elements if table.class_of[w] != j]
        if not all(_cone_le(s, u, w) for w in cj for u in outside):
            continue
        bj = table.remainders[j]
        if len(cj) != 1 and not all(_cone_le(s, bj, b) for b in nonzero):
            continue
        gens = sorted({sub(w, b) for w in cj for b in tops})
        principal = all(len(c) == 1 for c in classes[1:]) and len(table.max_c) == 1
        return ConductorSet(tuple(gens), len(gens), "principal" if principal else "single_class")
    return None


def frobenius_number(s: Semigroup, table: AperyTable, conductor: Optional[ConductorSet] = None) -> int:
    """Largest integer outside a numerical semigroup (d = 1, gcd 1)."""
    if s.d != 1:
        raise NotNumerical("the Frobenius number is defined for d = 1 only")
    g = 0
    for (x,) in s.generators:
        g = gcd(g, x)
    if g != 1:
        raise NotNumerical(f"generators have gcd {g}; not a numerical semigroup")
    if conductor is None:
        conductor = conductor_min_gens(s, table)
    (c,), = conductor.minimal_generators
    e = s.extremal[0][0]
    assert c - 1 == max(table.elements)[0] - e
    return c - 1
