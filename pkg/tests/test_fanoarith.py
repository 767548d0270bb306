import itertools
from fractions import Fraction

import networkx as nx
import pytest

from icoq.errors import NonPositiveDegree
from icoq.fanoarith import (FORM, K, arithmetic_genus, dp5_build, enumerate_classes, incidence_census,
                            is_well_formed, lattice_lefschetz, line_orbit, pair, pencil_bound,
                            petersen_check, weighted_monomials, weyl_action, wps_kvolume, wps_normalize,
                            xi_orbit)


def test_volumes():
    assert wps_kvolume((2, 3, 4, 5, 10), 20, 3) == Fraction(16, 15)
    assert wps_kvolume((1, 1, 3), 0, 2) == Fraction(25, 3)
    assert wps_kvolume((1, 2, 3), 0, 2) == 6
    assert wps_kvolume((1, 1, 1), 0, 2) == 9


def test_well_formedness():
    assert not is_well_formed((2, 6, 10))
    assert wps_normalize((2, 6, 10)) == (1, 3, 5)
    assert is_well_formed((1, 3, 5))
    with pytest.raises(NonPositiveDegree):
        wps_kvolume((1, 0, 2), 0, 2)


def test_genus_by_counting_monomials():
    # h^0(O(d - sum w)) on P(1,3,5) counts the genus of a degree-15 curve
    assert arithmetic_genus((1, 3, 5), 15) == len(weighted_monomials((1, 3, 5), 15 - 9)) == 4
    assert arithmetic_genus((1, 1, 1), 4) == 3


def test_pencil_bounds():
    assert (pencil_bound((3, 4, 5), 20, 8).value, pencil_bound((3, 4, 5), 20, 8).verdict) == (Fraction(8, 3), "pass")
    assert pencil_bound((1, 3, 5), 15, 3).verdict == "conditional"


def _brute_force(self_int, anti_degree, bound=6):
    out = set()
    for v in itertools.product(range(-bound, bound + 1), repeat=5):
        if pair(v, v) == self_int and -pair(K, v) == anti_degree:
            out.add(tuple(v))
    return out


@pytest.mark.parametrize("s,d,count", [(-1, 1, 10), (0, 2, 5), (1, 3, 5)])
def test_enumeration_matches_brute_force(s, d, count):
    found = {tuple(c) for c in enumerate_classes(s, d)}
    assert found == _brute_force(s, d) and len(found) == count


def test_petersen_against_networkx():
    m = dp5_build()
    g = nx.Graph()
    g.add_nodes_from(range(len(m.lines)))
    g.add_edges_from((i, j) for i, nbrs in enumerate(m.adjacency) for j in nbrs)
    assert nx.is_isomorphic(g, nx.petersen_graph())
    rep = petersen_check(m)
    assert rep.ok and rep.girth == nx.girth(g) == 5


def test_weyl_action():
    w = weyl_action()
    assert w.order == 120 and w.preserves_form and w.preserves_k
    assert line_orbit(w) == (10, 12)
    assert xi_orbit(w) == (15, 8)
    for m in w.matrices:
        assert tuple(sum(m[i][j] * K[j] for j in range(5)) for i in range(5)) == tuple(K)


def test_lattice_traces_equal_w4_plus_w1():
    rows = lattice_lefschetz()
    assert [r.lefschetz for r in rows] == [7, 5, 3, 4, 2, 3, 2]
    assert all(r.trace == r.character_sum for r in rows)
    assert sum(r.size for r in rows) == 120


def test_incidence_census():
    c = incidence_census(dp5_build())
    assert (c.total, c.xi_incidences, c.leftover) == (90, 60, 30)
    assert c.per_cubic_line_incidences == [6] * 5
    assert tuple(c.sum_lines) == tuple(-2 * k for k in K)
    assert tuple(FORM) == (1, -1, -1, -1, -1) and pair(K, K) == 5
