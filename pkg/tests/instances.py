"""Seeded random simplicial semigroups small enough for the brute-force oracle."""
import random
from math import gcd, prod

from asg import Semigroup, apery_set, oracle
from asg.apery import gamma_bounds as _bounds
from asg.linalg import Basis

MAX_APERY_BOX = 600
MAX_ORACLE_POINTS = 60_000


def _interior(basis, v):
    return all(n > 0 for n in basis.numerators(v))


def _rays(rng, d):
    if d == 1:
        return [(rng.randint(2, 9),)]
    while True:
        span = 5 if d == 2 else 3
        rays = [tuple(rng.randint(0, span) for _ in range(d)) for _ in range(d)]
        try:
            b = Basis(rays)
        except Exception:
            continue
        if b.det <= 0 or b.det > 40:
            continue
        return rays


def random_gens(rng, d, n_extra, collinear=False):
    rays = _rays(rng, d)
    if d == 1:
        pool = [x for x in range(rays[0][0] + 1, 24) if x % rays[0][0]]
        extra = [(x,) for x in rng.sample(pool, min(n_extra, len(pool)))]
        return rays + extra
    basis = Basis(rays)
    if collinear:
        return rays + _collinear(rng, basis, d, max(n_extra, 2))
    top = 7 if d == 2 else 4
    extra = []
    tries = 0
    while len(extra) < n_extra and tries < 500:
        tries += 1
        v = tuple(rng.randint(0, top) for _ in range(d))
        if _interior(basis, v) and v not in extra:
            extra.append(v)
    return rays + extra


def _collinear(rng, basis, d, n):
    """n interior points on one line through 0, none a multiple of another."""
    for _ in range(200):
        p = tuple(rng.randint(0, 3) for _ in range(d))
        if any(p) and gcd(*p) == 1 and _interior(basis, p):
            break
    else:
        return []
    mults = rng.choice([(2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (2, 3, 5), (3, 4, 5)])
    return [tuple(m * x for x in p) for m in mults[:n]]


def instances(seed, count, dims=(1, 2, 3), extra=(1, 2, 3, 4), collinear=False, keep=None):
    """``count`` (generators, Semigroup, AperyTable) triples, deterministic in ``seed``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = dims[len(out) % len(dims)]
        gens = random_gens(rng, d, rng.choice(extra), collinear)
        s = Semigroup(gens)
        if prod(_bounds(s)) > MAX_APERY_BOX:
            continue
        if (oracle.gamma_box_bound(gens) + 1) ** d > MAX_ORACLE_POINTS:
            continue
        if keep is not None and not keep(s):
            continue
        out.append((gens, s, apery_set(s)))
    return out

