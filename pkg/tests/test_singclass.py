import random
from fractions import Fraction

import pytest
import sympy as sp

from conftest import to_sympy
from icoq._fixtures import json_fixture
from icoq.errors import NonIsolated, PointNotOnCurve
from icoq.multipoly import PolyRing
from icoq.singclass import (classify, classify_point, curve_inventory, d_chart_curve, field_from_text,
                            d_boundary_point, fulton_intersection, germ_localize, milnor_number,
                            upsilon_chart_curve)

R = PolyRing("x,y")
x, y = R.gens()


def _germ(p):
    return germ_localize(p, (0, 0))


@pytest.mark.parametrize("n", range(1, 8))
def test_a_n_normal_forms(n):
    rep = classify(_germ(y ** 2 - x ** (n + 1)))
    assert (rep.type, rep.milnor, rep.delta) == (f"A{n}", n, (n + 1) // 2)


@pytest.mark.parametrize("seed", range(6))
def test_type_survives_coordinate_changes(seed):
    r = random.Random(seed)
    n = r.randint(1, 6)
    a, b, c = (r.randint(-3, 3) for _ in range(3))
    f = y ** 2 - x ** (n + 1)
    g = f.subst({"x": x + y * a + y ** 2 * b, "y": y + x ** 2 * c}) * (R.one() + x - y * 2)
    assert classify(_germ(g)).type == f"A{n}"


def test_fulton_textbook_values():
    assert fulton_intersection(y - x ** 2, y) == 2
    assert fulton_intersection(y ** 2 - x ** 3, y ** 3 - x ** 2) == 4
    assert fulton_intersection(y ** 2 - x ** 3, x) == 2


def test_non_a_types_and_errors():
    assert classify(_germ(x ** 3 - x * y ** 2)).type == "NotAType"
    assert classify(_germ(y ** 3 + x ** 4)).type == "NotAType"
    assert classify(_germ(x + y ** 2)).type == "Smooth"
    with pytest.raises(NonIsolated):
        milnor_number(_germ(y ** 2))
    with pytest.raises(PointNotOnCurve):
        germ_localize(y - 1, (0, 0))


def test_d_chart_singular_locus_matches_sympy():
    f = to_sympy(d_chart_curve())
    y3, y5 = sp.symbols("y3 y5")
    sols = sp.solve([f, f.diff(y3), f.diff(y5)], [y3, y5], dict=True)
    points = sorted((s[y3], s[y5]) for s in sols)
    fixture = sorted(tuple(sp.Rational(c) for c in p["point"])
                     for p in json_fixture("singular_points.json")["d_chart"]["points"])
    assert points == fixture


def test_d_chart_milnor_numbers_match_resultant_exponents():
    f = to_sympy(d_chart_curve())
    y3, y5 = sp.symbols("y3 y5")
    factors = dict(sp.factor_list(sp.resultant(f.diff(y3), f.diff(y5), y5))[1])
    curve = d_chart_curve()
    for pt, factor in (((0, 0), y3), ((1, 4), y3 - 1), (("32/27", "1024/81"), 27 * y3 - 32)):
        germ = germ_localize(curve, tuple(Fraction(str(c)) for c in pt))
        assert milnor_number(germ) == factors[factor]


def test_inventories():
    d = curve_inventory("d_chart")
    assert [r.report.type for r in d.results] == ["A4", "A1", "A2"]
    assert d.delta_sum == d.genus == 4
    u = curve_inventory("upsilon_chart")
    assert all(r.ok for r in u.results)


def test_upsilon_points_over_cube_root_fields():
    curve = upsilon_chart_curve()
    assert classify_point(curve, "-3/20*c^2, 9/50*c", "c^3 - 5").type == "A1"
    assert classify_point(curve, "3/20*c^2, 3/50*c", "c^3 - 10").type == "A2"
    F = field_from_text("c^3 - 5")
    assert F.degree == 3


def test_d_meets_the_line_z2_zero_in_a_smooth_point():
    assert d_boundary_point().type == "Smooth"
    # the only point with z2 = z6 = 0 is (0:0:1), which is not on D
    from icoq._fixtures import polynomial
    assert polynomial("phi").evaluate({"z2": 0, "z6": 0, "z10": 1}) == 1
