"""Type, quasi-Frobenius elements and the ring-property tests."""
from __future__ import annotations

from dataclasses import dataclass

from .apery import AperyTable
from .linalg import add, in_lattice, sub
from .semigroup import Semigroup


@dataclass(frozen=True)
class Classification:
    typ: int
    qf: tuple
    is_cm: bool
    is_buchsbaum: bool
    is_gorenstein: bool
    is_normal: bool
    neg_qf_in_cone: bool


def quasi_frobenius(s: Semigroup, table: AperyTable) -> tuple:
    total = tuple(map(sum, zip(*s.extremal)))
    return tuple(sorted(sub(m, total) for m in table.max_S))


def is_cohen_macaulay(s: Semigroup, table: AperyTable, check: bool = False) -> bool:
    """Every nonzero remainder class is a singleton.

    With ``check`` the pairwise criterion (no two distinct Apery elements
    differ by a vector of the lattice of the extremal rays) is evaluated too
    and must agree.
    """
    sizes = [len(c) for c in table.classes()[1:]]
    res = all(n == 1 for n in sizes)
    if check:
        elems = table.elements
        pairwise = not any(in_lattice(s.lattice_extremal, sub(u, w))
                           for i, u in enumerate(elems) for w in elems[i + 1:])
        assert pairwise == res, "class criterion and lattice criterion disagree"
    return res


def buchsbaum_witness(s: Semigroup, cls) -> tuple | None:
    """The vector c with cls == {c + a_1, ..., c + a_d} and c + g in S for all g."""
    target = set(cls)
    for v in cls:
        for a in s.extremal:
            c = sub(v, a)
            if min(c) < 0:
                continue
            if {add(c, b) for b in s.extremal} != target:
                continue
            if all(s.in_semigroup(add(c, g)) for g in s.generators):
                return c
    return None


def is_buchsbaum(s: Semigroup, table: AperyTable) -> bool:
    for cls in table.classes()[1:]:
        if len(cls) == 1:
            continue
        if len(cls) != s.d or buchsbaum_witness(s, cls) is None:
            return False
    return True


def is_gorenstein(s: Semigroup, table: AperyTable) -> bool:
    return is_cohen_macaulay(s, table) and len(table.max_S) == 1


def is_normal(s: Semigroup, table: AperyTable, check: bool = False) -> bool:
    """Ap(S,E) lies in the half-open parallelotope spanned by a_1..a_d.

    ``check`` also verifies that -QF(S) sits in the relative interior of the
    cone and inside S exactly when the main test says normal.
    """
    det = s.basis.det
    res = all(n < det for w in table.elements for n in s.basis.numerators(w))
    if check:
        neg = [tuple(-x for x in f) for f in quasi_frobenius(s, table)]
        inner = all(all(n > 0 for n in s.basis.numerators(v)) and s.in_semigroup(v) for v in neg)
        assert inner == res, "normality criteria disagree"
    return res


def neg_qf_in_cone(s: Semigroup, table: AperyTable) -> bool:
    """Ap(S,E) lies in the closed parallelotope (equivalently -QF(S) in the cone)."""
    det = s.basis.det
    return all(n <= det for w in table.elements for n in s.basis.numerators(w))


def classify(s: Semigroup, table: AperyTable, check: bool = False) -> Classification:
    qf = quasi_frobenius(s, table)
    cm = is_cohen_macaulay(s, table, check)
    return Classification(
        typ=len(qf),
        qf=qf,
        is_cm=cm,
        is_buchsbaum=cm or is_buchsbaum(s, table),
        is_gorenstein=cm and len(table.max_S) == 1,
        is_normal=is_normal(s, table, check),
        neg_qf_in_cone=neg_qf_in_cone(s, table),
    )
