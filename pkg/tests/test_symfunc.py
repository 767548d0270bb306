import random

import pytest
import sympy as sp
from sympy.polys.polyfuncs import symmetrize

from conftest import to_sympy
from icoq.errors import IndexOutOfRange, NotSymmetric
from icoq.symfunc import (elementary_symmetric, from_elementary, is_symmetric, quintic_discriminant,
                          to_elementary, vandermonde, x_ring, z_ring)


@pytest.fixture(scope="module")
def disc():
    return quintic_discriminant()


def test_elementary_symmetric_matches_vieta():
    x = sp.symbols("x1:5")
    T = sp.Symbol("T")
    coeffs = sp.Poly(sp.prod([T - xi for xi in x]), T).all_coeffs()
    for k in range(1, 5):
        assert to_sympy(elementary_symmetric(k, 4)) == sp.expand((-1) ** k * coeffs[k])
    with pytest.raises(IndexOutOfRange):
        elementary_symmetric(0, 4)


def test_to_elementary_agrees_with_sympy_symmetrize(rng):
    R = x_ring(3)
    x = sp.symbols("x1:4")
    for _ in range(4):
        p = R.zero()
        for _ in range(3):
            e = [rng.randint(0, 3) for _ in range(3)]
            c = rng.randint(-5, 5) or 1
            for perm in {tuple(e[i] for i in q) for q in ((0, 1, 2), (0, 2, 1), (1, 0, 2),
                                                          (1, 2, 0), (2, 0, 1), (2, 1, 0))}:
                p = p + R.monomial(perm, c)
        expr, rem, pairs = symmetrize(to_sympy(p), *x, formal=True)
        assert rem == 0
        want = sp.expand(expr.subs({s: sp.Symbol(f"z{i + 1}") for i, (s, _) in enumerate(pairs)}))
        assert to_sympy(to_elementary(p, z_ring(3))) == want


def test_non_symmetric_input_rejected():
    with pytest.raises(NotSymmetric):
        to_elementary(x_ring(3).parse("x1^2 + x2"))


def test_vandermonde_square_is_symmetric():
    v = vandermonde(4)
    assert not is_symmetric(v)
    assert is_symmetric(v * v)


def test_delta_is_the_discriminant_of_the_generic_quintic(disc):
    T = sp.Symbol("T")
    z = sp.symbols("z1:6")
    f = T**5 - z[0] * T**4 + z[1] * T**3 - z[2] * T**2 + z[3] * T - z[4]
    assert to_sympy(disc.delta) == sp.expand(sp.discriminant(f, T))


def test_delta_back_substitution(disc):
    assert from_elementary(disc.delta, x_ring(5)) == disc.vandermonde ** 2
    assert disc.delta.weighted_degree([1, 2, 3, 4, 5]) == 20


def test_psi_and_upsilon_specialisations(disc):
    delta = to_sympy(disc.delta)
    z1, z2, z3 = sp.symbols("z1 z2 z3")
    assert to_sympy(disc.psi) == sp.expand(delta.subs(z1, 0))
    assert to_sympy(disc.upsilon) == sp.expand(delta.subs({z1: 0, z2: 0}))
