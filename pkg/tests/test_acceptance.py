"""Acceptance criteria, one test each, all exact.

Every criterion prints a single ``[PASS]``/``[FAIL]`` line with its timing,
both under pytest and when this file is run directly with ``python3``.
"""

from __future__ import annotations

import sys
import time
from collections import Counter
from fractions import Fraction

import pytest

TIME_LIMIT_S = 60.0


def c01_fundamental_relation():
    from icoq.icoinv import klein_construct, verify_fundamental_relation
    rel = verify_fundamental_relation(klein_construct())
    return rel.ok and rel.phi_weighted_degree == 30, \
        f"residue of z15^2 - Phi(z2, z6, z10) has {rel.residue_terms} terms ({rel.lhs_terms}-term square)"


def c02_discriminant_identity():
    from icoq.symfunc import from_elementary, quintic_discriminant, x_ring
    s = quintic_discriminant()
    residue = from_elementary(s.delta, x_ring(5)) - s.vandermonde ** 2
    return residue.is_zero(), f"z10^2 - delta(e1..e5) has {len(residue)} terms"


def c03_psi_upsilon():
    from icoq._fixtures import polynomial
    from icoq.symfunc import from_elementary, quintic_discriminant, to_elementary, x_ring, z_ring
    s = quintic_discriminant()
    consistent = (to_elementary(s.vandermonde ** 2, z_ring(5)) - s.delta).is_zero()
    diffs = {name: len(p - polynomial(name, p.ring)) for name, p in (("psi", s.psi), ("upsilon", s.upsilon))}
    flagged = ", ".join(f"{k}: {v} flagged" for k, v in diffs.items())
    return consistent, f"to_elementary residue {'0' if consistent else 'nonzero'}; {flagged}"


def c04_d_chart_inventory():
    from icoq.singclass import curve_inventory
    inv = curve_inventory("d_chart")
    types = [(r.point, r.report.type) for r in inv.results]
    want = [(("0", "0"), "A4"), (("1", "4"), "A1"), (("32/27", "1024/81"), "A2")]
    return types == want and inv.delta_sum == 4 == inv.genus, \
        f"{[t for _, t in types]}, delta sum {inv.delta_sum}, p_a {inv.genus}"


def c05_upsilon_chart_points():
    from icoq.singclass import classify_point, upsilon_chart_curve
    f = upsilon_chart_curve()
    a1 = classify_point(f, "-3/20*c^2, 9/50*c", "c^3 - 5").type
    a2 = classify_point(f, "3/20*c^2, 3/50*c", "c^3 - 10").type
    return (a1, a2) == ("A1", "A2"), f"Q(5^(1/3)): {a1}; Q(10^(1/3)): {a2}"


def c06_character_tables():
    from icoq.suites import run_suite
    r = run_suite("characters")
    cells = [c for c in r.checks if ".row." in c.id]
    ok = r.status == "pass" and not r.flagged and len(cells) == 7 + 9
    return ok, f"{sum(c.status == 'pass' for c in r.checks)}/{len(r.checks)} checks, {len(cells)} rows cell-for-cell"


def c07_lefschetz():
    from icoq.fanoarith import lattice_lefschetz
    from icoq.repchar import lefschetz_table
    want = [7, 5, 3, 4, 2, 3, 2]
    table = [r.lefschetz for r in lefschetz_table()]
    lattice = lattice_lefschetz()
    ok = table == want and [r.lefschetz for r in lattice] == want and \
        [r.trace for r in lattice] == [t.trace + 1 for t in lefschetz_table()]
    return ok, f"3 + chi_W4 = {table}; lattice {[r.lefschetz for r in lattice]}"


def c08_subgroup_census():
    from icoq.suites import run_suite
    r = run_suite("subgroups")
    rows = [c for c in r.checks if c.id.startswith("row.") and not c.id.endswith(".generators")]
    ok = all(c.status == "pass" for c in rows) and len(rows) == 17
    return ok, f"{sum(c.status == 'pass' for c in rows)}/{len(rows)} rows reproduced"


def c09_dp5():
    from icoq.suites import run_suite
    r = run_suite("dp5")
    return r.status == "pass" and not r.flagged, \
        f"{sum(c.status == 'pass' for c in r.checks)}/{len(r.checks)} checks"


def c10_wps():
    from icoq.fanoarith import pencil_bound, wps_kvolume
    vals = (wps_kvolume((2, 3, 4, 5, 10), 20, 3), wps_kvolume((1, 1, 3), 0, 2), wps_kvolume((1, 2, 3), 0, 2))
    p1, p2 = pencil_bound((3, 4, 5), 20, 8), pencil_bound((1, 3, 5), 15, 3)
    ok = vals == (Fraction(16, 15), Fraction(25, 3), 6) and \
        (p1.value, p1.verdict, p2.value, p2.verdict) == (Fraction(8, 3), "pass", 3, "conditional")
    return ok, f"{', '.join(map(str, vals))}; pencils {p1.value} {p1.verdict}, {p2.value} {p2.verdict}"


def c11_molien_hilbert():
    from icoq.icoinv import build_v3_generators, h12_invariant
    from icoq.repchar import binary_representations, hilbert_series_coefficients, molien_dims
    dims = molien_dims(build_v3_generators(), 15)
    want = hilbert_series_coefficients({0: 1, 15: 1}, [2, 6, 10], 15)
    v2 = molien_dims(binary_representations()["V2"], 12)[12]
    h = h12_invariant()
    ok = dims == want and v2 == 1 and h.dimension == 1 and not h.agrees
    return ok, f"dims {dims}; dim V2 degree 12 = {v2}; h12 misprint flagged ({len(h.monomial_diffs)} diffs)"


def c12_binary_icosahedral():
    from icoq.permgroups import binary_icosahedral, conjugacy_classes
    g = binary_icosahedral()
    involutions = sum(1 for i in range(g.order) if g.element_orders[i] == 2)
    sizes = Counter(c.size for c in conjugacy_classes(g))
    ok = g.order == 120 and involutions == 1 and sizes == Counter([1, 1, 30, 12, 12, 12, 12, 20, 20])
    return ok, f"order {g.order}, {involutions} involution, class sizes {sorted(sizes.elements())}"


CRITERIA = [
    ("C1", "fundamental relation", c01_fundamental_relation),
    ("C2", "discriminant identity", c02_discriminant_identity),
    ("C3", "Psi and Upsilon coefficients", c03_psi_upsilon),
    ("C4", "branch curve singularities", c04_d_chart_inventory),
    ("C5", "twisted-diagonal branch curve", c05_upsilon_chart_points),
    ("C6", "character tables", c06_character_tables),
    ("C7", "Lefschetz numbers", c07_lefschetz),
    ("C8", "subgroup census", c08_subgroup_census),
    ("C9", "dp5 combinatorics", c09_dp5),
    ("C10", "weighted projective arithmetic", c10_wps),
    ("C11", "Molien and Hilbert series", c11_molien_hilbert),
    ("C12", "binary icosahedral group", c12_binary_icosahedral),
]


def run_criterion(fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - t0
    return ok and elapsed < TIME_LIMIT_S, detail, elapsed


def _line(cid, title, ok, detail, elapsed):
    return f"[{'PASS' if ok else 'FAIL'}] {cid:<4} {title}: {detail} ({elapsed:.2f} s)"


@pytest.mark.parametrize("cid,title,fn", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(cid, title, fn, capsys):
    ok, detail, elapsed = run_criterion(fn)
    with capsys.disabled():
        print("\n" + _line(cid, title, ok, detail, elapsed))
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for cid, title, fn in CRITERIA:
        ok, detail, elapsed = run_criterion(fn)
        failures += not ok
        print(_line(cid, title, ok, detail, elapsed))
    sys.exit(1 if failures else 0)
