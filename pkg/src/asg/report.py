"""Full analysis of one semigroup, JSON (de)serialization and a text view."""
from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass, field
from importlib import resources
from math import gcd
from typing import Optional

from . import kernels, oracle
from .apery import DEFAULT_TUPLE_LIMIT, apery_set
from .conductor import (conductor_fast_path, conductor_membership, conductor_min_gens, f_floor_set,
                        frobenius_number, normalization_generators)
from .semigroup import Semigroup
from .structure import classify

SCHEMA = "asg-report/1"


@dataclass(frozen=True)
class Limits:
    tuples: int = DEFAULT_TUPLE_LIMIT
    box: Optional[int] = None  # run the brute-force cross-check up to this bound
    threads: int = 1


@dataclass(frozen=True)
class AnalysisReport:
    generators: tuple
    minimal_generators: tuple
    removed_generators: tuple
    d: int
    extreme_ray_directions: tuple
    extremal_generators: tuple
    apery_elements: tuple
    gamma_bounds: tuple
    remainders: tuple
    classes: tuple
    max_semigroup: tuple
    max_cone: tuple
    typ: int
    quasi_frobenius: tuple
    is_cm: bool
    is_buchsbaum: bool
    is_gorenstein: bool
    is_normal: bool
    neg_qf_in_cone: bool
    normalization_generators: tuple
    f_vectors: tuple
    conductor_generators: tuple
    conductor_candidates_examined: int
    conductor_fast_path: str
    frobenius_number: Optional[int]
    notes: tuple
    cache_entries: int
    oracle_check: Optional[dict] = None
    timings: Optional[dict] = field(default=None, compare=False)
    schema: str = SCHEMA


def analyze(generators, limits: Limits = Limits(), timings: bool = False) -> AnalysisReport:
    clock = {}
    t0 = time.perf_counter()
    s = Semigroup(generators)
    clock["semigroup"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    table = apery_set(s, limits.tuples, limits.threads)
    clock["apery"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    cls = classify(s, table)
    clock["structure"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    sbar = normalization_generators(s, table)
    cond = conductor_min_gens(s, table, limits.tuples, limits.threads)
    fast = conductor_fast_path(s, table)
    used = "none"
    if fast is not None:
        if fast.minimal_generators != cond.minimal_generators:
            raise AssertionError(f"fast path {fast.minimal_generators} disagrees with "
                                 f"general path {cond.minimal_generators}")
        used = fast.fast_path_used
    fvals = tuple(s.basis.combine(fl) for fl in f_floor_set(s, table, limits.tuples))
    clock["conductor"] = time.perf_counter() - t0

    notes = []
    if s.removed_generators:
        notes.append(f"removed {len(s.removed_generators)} redundant generator(s)")
    if not cls.is_cm and cls.is_buchsbaum:
        notes.append("Buchsbaum verdict is per the remainder-class criterion")
    frob = None
    if s.d == 1:
        h = 0
        for (x,) in s.generators:
            h = gcd(h, x)
        if h == 1:
            frob = frobenius_number(s, table, cond)
        else:
            notes.append(f"generators have gcd {h}; dividing by {h} gives an isomorphic "
                         "numerical semigroup (not applied)")

    check = None
    if limits.box is not None:
        t0 = time.perf_counter()
        check = cross_check(s, table, cond.minimal_generators, limits.box)
        clock["oracle"] = time.perf_counter() - t0

    clock["backend"] = kernels.BACKEND
    return AnalysisReport(
        generators=s.raw_generators,
        minimal_generators=s.generators,
        removed_generators=s.removed_generators,
        d=s.d,
        extreme_ray_directions=s.cone.extreme_ray_directions,
        extremal_generators=s.extremal,
        apery_elements=table.elements,
        gamma_bounds=table.gamma_bounds,
        remainders=table.remainders,
        classes=tuple(table.classes()),
        max_semigroup=table.max_S,
        max_cone=table.max_c,
        typ=cls.typ,
        quasi_frobenius=cls.qf,
        is_cm=cls.is_cm,
        is_buchsbaum=cls.is_buchsbaum,
        is_gorenstein=cls.is_gorenstein,
        is_normal=cls.is_normal,
        neg_qf_in_cone=cls.neg_qf_in_cone,
        normalization_generators=sbar,
        f_vectors=fvals,
        conductor_generators=cond.minimal_generators,
        conductor_candidates_examined=cond.candidates_examined,
        conductor_fast_path=used,
        frobenius_number=frob,
        notes=tuple(notes),
        cache_entries=s.cache_size,
        oracle_check=check,
        timings=clock if timings else None,
    )


def cross_check(s: Semigroup, table, conductor_gens, bound: int) -> dict:
    """Compare Ap(S,E) and the conductor against box enumeration up to ``bound``."""
    out = {"bound": bound, "apery": None, "conductor": None}
    gb = oracle.gamma_box_bound(s.generators)
    if gb <= bound and (gb + 1) ** s.d <= oracle.MAX_POINTS:
        out["apery"] = oracle.oracle_apery(s.generators, gb) == set(table.elements)
    if (bound + 1) ** s.d <= oracle.MAX_POINTS:
        box = oracle.oracle_conductor_elements(s.generators, bound)
        universe = oracle.semigroup_box(s.generators, bound)
        closure = {c for c in universe
                   if any(s.in_normalization(tuple(a - b for a, b in zip(c, g))) for g in conductor_gens)}
        gens_ok = all(conductor_membership(s, table, g) for g in conductor_gens)
        out["conductor"] = gens_ok and box == closure
    return out


def _vecs(vs):
    return [list(v) for v in vs]


def to_dict(r: AnalysisReport) -> dict:
    out = {
        "schema": r.schema,
        "input": {
            "generators": _vecs(r.generators),
            "minimal_generators": _vecs(r.minimal_generators),
            "removed_generators": _vecs(r.removed_generators),
        },
        "cone": {
            "dimension": r.d,
            "extreme_ray_directions": _vecs(r.extreme_ray_directions),
            "extremal_generators": _vecs(r.extremal_generators),
            "is_simplicial": True,
        },
        "apery": {
            "elements": _vecs(r.apery_elements),
            "gamma_bounds": list(r.gamma_bounds),
            "remainders": _vecs(r.remainders),
            "classes": [_vecs(c) for c in r.classes],
            "max_semigroup": _vecs(r.max_semigroup),
            "max_cone": _vecs(r.max_cone),
        },
        "classification": {
            "typ": r.typ,
            "quasi_frobenius": _vecs(r.quasi_frobenius),
            "is_cm": r.is_cm,
            "is_buchsbaum": r.is_buchsbaum,
            "is_gorenstein": r.is_gorenstein,
            "is_normal": r.is_normal,
            "neg_qf_in_cone": r.neg_qf_in_cone,
        },
        "normalization": {"generators": _vecs(r.normalization_generators)},
        "conductor": {
            "minimal_generators": _vecs(r.conductor_generators),
            "f_vectors": _vecs(r.f_vectors),
            "candidates_examined": r.conductor_candidates_examined,
            "fast_path_used": r.conductor_fast_path,
        },
        "frobenius_number": r.frobenius_number,
        "notes": list(r.notes),
        "stats": {"membership_cache_entries": r.cache_entries},
    }
    if r.oracle_check is not None:
        out["oracle_check"] = dict(r.oracle_check)
    if r.timings is not None:
        out["timings"] = dict(r.timings)
    return out


def _tup(vs):
    return tuple(tuple(v) for v in vs)


def from_dict(data: dict) -> AnalysisReport:
    if data.get("schema") != SCHEMA:
        raise ValueError(f"unsupported report schema {data.get('schema')!r}")
    a, c, k, z = data["apery"], data["classification"], data["conductor"], data["cone"]
    return AnalysisReport(
        generators=_tup(data["input"]["generators"]),
        minimal_generators=_tup(data["input"]["minimal_generators"]),
        removed_generators=_tup(data["input"]["removed_generators"]),
        d=z["dimension"],
        extreme_ray_directions=_tup(z["extreme_ray_directions"]),
        extremal_generators=_tup(z["extremal_generators"]),
        apery_elements=_tup(a["elements"]),
        gamma_bounds=tuple(a["gamma_bounds"]),
        remainders=_tup(a["remainders"]),
        classes=tuple(_tup(cl) for cl in a["classes"]),
        max_semigroup=_tup(a["max_semigroup"]),
        max_cone=_tup(a["max_cone"]),
        typ=c["typ"],
        quasi_frobenius=_tup(c["quasi_frobenius"]),
        is_cm=c["is_cm"],
        is_buchsbaum=c["is_buchsbaum"],
        is_gorenstein=c["is_gorenstein"],
        is_normal=c["is_normal"],
        neg_qf_in_cone=c["neg_qf_in_cone"],
        normalization_generators=_tup(data["normalization"]["generators"]),
        f_vectors=_tup(k["f_vectors"]),
        conductor_generators=_tup(k["minimal_generators"]),
        conductor_candidates_examined=k["candidates_examined"],
        conductor_fast_path=k["fast_path_used"],
        frobenius_number=data["frobenius_number"],
        notes=tuple(data["notes"]),
        cache_entries=data["stats"]["membership_cache_entries"],
        oracle_check=data.get("oracle_check"),
        timings=data.get("timings"),
    )


_INT_ARRAY = re.compile(r"\[\s+(-?\d+(?:,\s+-?\d+)*)\s+\]")


def dumps(r: AnalysisReport) -> str:
    """Indented JSON with integer vectors kept on one line."""
    text = json.dumps(to_dict(r), indent=2)
    return _INT_ARRAY.sub(lambda m: "[" + re.sub(r"\s+", "", m.group(1)).replace(",", ", ") + "]", text)


def loads(text: str) -> AnalysisReport:
    return from_dict(json.loads(text))


def json_schema() -> dict:
    return json.loads(resources.files("asg").joinpath("report_schema.json").read_text())


def _fmt(vs) -> str:
    return "{" + ", ".join("(" + ",".join(map(str, v)) + ")" for v in vs) + "}"


def render_text(r: AnalysisReport) -> str:
    yes = {True: "yes", False: "no"}
    lines = [
        f"generators            {_fmt(r.minimal_generators)}",
        f"extremal rays         {_fmt(r.extremal_generators)}",
    ]
    if r.removed_generators:
        lines.append(f"removed (redundant)   {_fmt(r.removed_generators)}")
    lines += [
        f"Ap(S,E)               {len(r.apery_elements)} elements",
        f"remainders            {_fmt(r.remainders)}",
        f"class sizes           {[len(c) for c in r.classes[1:]]}",
        f"max (semigroup order) {_fmt(r.max_semigroup)}",
        f"max (cone order)      {_fmt(r.max_cone)}",
        f"typ(S) (equals Cohen-Macaulay type of K[S] when CM)  {r.typ}",
        f"quasi-Frobenius       {_fmt(r.quasi_frobenius)}",
        f"Cohen-Macaulay        {yes[r.is_cm]}",
        f"Buchsbaum             {yes[r.is_buchsbaum]}",
        f"Gorenstein            {yes[r.is_gorenstein]}",
        f"normal                {yes[r.is_normal]}",
        f"-QF(S) in cone        {yes[r.neg_qf_in_cone]}",
        f"normalization gens    {_fmt(r.normalization_generators)}",
        f"conductor gens        {_fmt(r.conductor_generators)}",
    ]
    if r.frobenius_number is not None:
        lines.append(f"Frobenius number      {r.frobenius_number}")
    if r.oracle_check is not None:
        lines.append(f"oracle check          {r.oracle_check}")
    for n in r.notes:
        lines.append(f"note: {n}")
    return "\n".join(lines)
