import random

import pytest

from icoq._fixtures import polynomial
from icoq.icoinv import (act, h12_invariant, invariant_basis, is_invariant, jacobian_check, random_form,
                         reynolds, v3_ring, verify_fundamental_relation)
from icoq.repchar import hilbert_series_coefficients
from icoq.multipoly import poly_weighted_degree


def test_generators_pin(v3):
    ring = v3_ring()
    assert v3.group.order == 60
    assert is_invariant(polynomial("z2", ring), v3.gens)
    assert is_invariant(polynomial("z6", ring), v3.gens)


@pytest.mark.parametrize("seed", range(3))
def test_reynolds_is_an_invariant_idempotent(v3, seed):
    p = random_form(v3_ring(), 4, random.Random(seed))
    r = reynolds(v3, p)
    assert is_invariant(r, v3.gens)
    assert reynolds(v3, r) == r


def test_reynolds_kills_linear_forms_and_fixes_z2(v3):
    ring = v3_ring()
    assert not reynolds(v3, ring.var("x1"))
    z2 = polynomial("z2", ring)
    assert reynolds(v3, z2) == z2


def test_action_is_a_right_action(v3):
    p = random_form(v3_ring(), 3, random.Random(7))
    a, b = v3.gens
    # (p o a) o b = p o (a b)
    assert act(act(p, a), b) == act(p, a * b)


@pytest.mark.parametrize("degree", [2, 6, 10, 12])
def test_invariant_basis_dimension(v3, degree):
    want = hilbert_series_coefficients({0: 1, 15: 1}, [2, 6, 10], degree)[degree]
    basis = invariant_basis(v3, degree, v3_ring())
    assert len(basis) == want
    assert all(is_invariant(b, v3.gens) for b in basis)


def test_klein_invariants(klein, v3):
    assert klein.z10.total_degree() == 10 and klein.z15.total_degree() == 15
    assert is_invariant(klein.z10, v3.gens) and is_invariant(klein.z15, v3.gens)
    assert all(c.denominator == 1 for c in klein.z10.terms.values())


def test_fundamental_relation(klein):
    rel = verify_fundamental_relation(klein)
    assert rel.ok and rel.residue_terms == 0 and rel.phi_weighted_degree == 30
    assert poly_weighted_degree(klein.phi, [2, 6, 10]) == 30


def test_jacobian(klein):
    assert jacobian_check(klein)


def test_h12_disagrees_with_the_printed_form():
    h = h12_invariant()
    assert h.dimension == 1
    assert h.form.form == h.form.form.ring.parse("x1^11*x2 + 11*x1^6*x2^6 - x1*x2^11")
    assert not h.printed_homogeneous and not h.agrees


def test_reynolds_of_a_sextic_lies_in_the_invariant_plane(v3):
    from icoq._linalg import rank
    ring = v3_ring()
    z2, z6 = polynomial("z2", ring), polynomial("z6", ring)
    r = reynolds(v3, random_form(ring, 6, random.Random(11), terms=10))
    assert r
    basis = [z2 ** 3, z6, r]
    keys = sorted({e for p in basis for e in p.terms})
    assert rank([[p.coefficient(e) for e in keys] for p in basis]) == 2
