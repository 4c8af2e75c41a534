from itertools import product

import pytest

from asg import Semigroup, oracle
from asg.errors import NotInSemigroup, OutsideCone

EX = [(3, 0), (0, 3), (5, 2), (2, 5)]


def test_membership_examples():
    s = Semigroup(EX)
    assert (5, 5) in s
    assert (1, 7) not in s
    assert (0, 0) in s
    assert (-1, 3) not in s


def test_membership_matches_box_closure():
    for gens in [EX, [(5, 2), (2, 2), (2, 1), (5, 3)], [(1, 2, 1), (2, 3, 1), (2, 1, 3), (2, 3, 2)]]:
        s = Semigroup(gens)
        side = 24 if len(gens[0]) == 2 else 9
        box = oracle.semigroup_box(gens, side)
        for v in product(range(side + 1), repeat=len(gens[0])):
            assert s.in_semigroup(v) == (v in box), v
    assert s.cache_size > 0


def test_extremal_first():
    s = Semigroup([(5, 2), (2, 5), (3, 0), (0, 3)])
    assert s.extremal == ((3, 0), (0, 3))
    assert set(s.nonextremal) == {(5, 2), (2, 5)}
    assert s.embedding_dimension == 4


def test_ord():
    s = Semigroup(EX)
    assert s.ord((0, 0)) == 0
    assert s.ord((10, 4)) == 2
    assert Semigroup([(3,), (5,), (7,)]).ord((10,)) == 2
    with pytest.raises(NotInSemigroup):
        s.ord((1, 7))


def test_remainder():
    s = Semigroup(EX)
    r = s.remainder((7, 7))
    assert r.vector == (1, 1) and r.floors == (2, 2)
    r = s.remainder((5, 2))
    assert r.vector == (2, 2) and r.floors == (1, 0)
    assert s.remainder((3, 3)).vector == (0, 0)
    with pytest.raises(OutsideCone):
        Semigroup([(2, 1), (1, 2)]).remainder((1, 0))


def test_normalization_membership():
    s = Semigroup(EX)
    assert s.in_normalization((1, 1))
    assert not s.in_normalization((1, 0))
    assert all(s.in_normalization(g) for g in EX)


def test_pseudo_frobenius():
    s = Semigroup([(3,), (5,), (7,)])
    assert s.is_pseudo_frobenius((4,))
    assert s.is_pseudo_frobenius((2,))
    assert not s.is_pseudo_frobenius((3,))
    assert not s.is_pseudo_frobenius((1,))
    t = Semigroup(EX)
    for f in [(4, 4), (7, 1), (1, 7)]:
        assert not t.is_pseudo_frobenius(f)
