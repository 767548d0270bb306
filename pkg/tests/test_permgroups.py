from collections import Counter

import pytest
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import SymmetricGroup

from icoq.errors import OrderBoundExceeded
from icoq.permgroups import (Perm, PermGroup, alternating_group, binary_icosahedral, centralizer,
                             conjugacy_classes, iso_fingerprint, normalizer, subgroup_census,
                             sylow, symmetric_group)


@pytest.fixture(scope="module")
def s5():
    return symmetric_group(5)


@pytest.fixture(scope="module")
def census(s5):
    return subgroup_census(s5)


def test_standard_generators_give_s5():
    g = PermGroup([Perm.from_cycles("(1,2)", 5), Perm.from_cycles("(1,2,3,4,5)", 5)])
    assert g.order == 120
    assert alternating_group(5).order == 60


def test_perm_basics():
    p = Perm.from_cycles("(1,2,3)(4,5)", 5)
    assert p.order() == 6 and p.sign() == -1 and p.cycle_type() == (3, 2)
    assert (p * p.inverse()).cycle_type() == (1, 1, 1, 1, 1)


def test_class_sizes_match_sympy(s5):
    ours = sorted(c.size for c in conjugacy_classes(s5))
    theirs = sorted(len(c) for c in SymmetricGroup(5).conjugacy_classes())
    assert ours == theirs == [1, 10, 15, 20, 20, 24, 30]


def test_sylow_and_centralizers(s5):
    assert len(sylow(s5, 2)) == 8 and len(sylow(s5, 3)) == 3 and len(sylow(s5, 5)) == 5
    five = s5.idx(Perm.from_cycles("(1,2,3,4,5)", 5))
    assert len(centralizer(s5, [five])) == 5
    assert len(normalizer(s5, s5.closure_of([five]))) == 20


def test_census_counts_every_subgroup(census):
    # S5 has 156 subgroups; without the trivial group and S5 itself that is 154
    assert sum(r.count for r in census) == 154
    assert len(census) == 17


def test_census_against_sympy_orders(census):
    for rec in census:
        gens = [Permutation([i for i in p.images]) for p in rec.generators]
        assert PermutationGroup(gens).order() == rec.order


def test_orbit_stabilizer_for_every_record(census):
    for rec in census:
        assert rec.count * rec.normalizer_order == 120


def test_fingerprint_labels(s5):
    k4 = s5.closure_of([s5.idx(Perm.from_cycles(c, 5)) for c in ("(1,2)(3,4)", "(1,3)(2,4)")])
    assert iso_fingerprint(s5, k4) == "mu2xmu2"
    d6 = s5.closure_of([s5.idx(Perm.from_cycles(c, 5)) for c in ("(1,2,3)", "(1,2)", "(4,5)")])
    assert iso_fingerprint(s5, d6) == "D6"


def test_order_bound():
    with pytest.raises(OrderBoundExceeded):
        PermGroup([Perm.from_cycles("(1,2)", 6), Perm.from_cycles("(1,2,3,4,5,6)", 6)], bound=100)


def test_binary_icosahedral_pins():
    g = binary_icosahedral()
    assert g.order == 120
    orders = Counter(int(g.element_orders[i]) for i in range(g.order))
    assert orders == {1: 1, 2: 1, 3: 20, 4: 30, 5: 24, 6: 20, 10: 24}
    assert sorted(c.size for c in conjugacy_classes(g)) == [1, 1, 12, 12, 12, 12, 20, 20, 30]
