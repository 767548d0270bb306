import cmath
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from icoq.errors import DivisionByZero, FieldMismatch, NotMonic, ReduciblePolynomial, RootIndexOutOfRange
from icoq.exactfield import nf_embed, nf_make, q_zeta5, sqrt5_in

K = q_zeta5()
small = st.integers(-6, 6)
elements = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7),
                    min_size=4, max_size=4).map(lambda cs: K.from_poly(cs))


def test_zeta5_is_a_fifth_root_of_unity():
    z = K.gen()
    assert z ** 5 == K.one()
    assert z != K.one()
    assert K.degree == 4


def test_sqrt5_squares_to_five():
    s = sqrt5_in(K)
    assert s * s == K(5)
    assert abs(s.embed(0) - cmath.sqrt(5)) < 1e-12 or abs(s.embed(0) + cmath.sqrt(5)) < 1e-12


def test_reducible_and_non_monic_minpolys_rejected():
    with pytest.raises(ReduciblePolynomial):
        nf_make("t^4 - 1")
    with pytest.raises(NotMonic):
        nf_make("3*t^2 - 1")


def test_inverse_of_zero_and_mixed_fields():
    with pytest.raises(DivisionByZero):
        K.zero().inverse()
    with pytest.raises(FieldMismatch):
        K.gen() + nf_make("c^3 - 5", "c").gen()


def test_rationals_mix_and_hash_like_fractions():
    a = K(Fraction(3, 4))
    assert a == Fraction(3, 4) and hash(a) == hash(Fraction(3, 4))
    assert a.is_rational() and a.rational() == Fraction(3, 4)
    assert 2 * K.gen() - K.gen() == K.gen()


@settings(max_examples=60, deadline=None)
@given(elements, elements, elements)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    if a:
        assert a * a.inverse() == K.one()


@settings(max_examples=40, deadline=None)
@given(elements, elements)
def test_product_matches_sympy_remainder(a, b):
    t = sp.Symbol("t")
    m = t**4 + t**3 + t**2 + t + 1
    pa = sum(sp.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(a.c))
    pb = sum(sp.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(b.c))
    want = sp.Poly(sp.rem(sp.expand(pa * pb), m, t), t).all_coeffs()[::-1]
    got = [sp.Rational(c.numerator, c.denominator) for c in (a * b).c]
    want = list(want) + [0] * (4 - len(want))
    assert got == want


def test_embeddings_sorted_by_argument_and_consistent():
    args = [cmath.phase(K.gen().embed(i)) % (2 * cmath.pi) for i in range(4)]
    assert args == sorted(args)
    assert abs(K.gen().embed(0) - cmath.exp(2j * cmath.pi / 5)) < 1e-12
    a = K.parse("2 - t + 3*t^3")
    b = K.parse("1/2 + t^2")
    for i in range(4):
        assert abs((a * b).embed(i) - a.embed(i) * b.embed(i)) < 1e-9
    with pytest.raises(RootIndexOutOfRange):
        nf_embed(a, 4)


def test_cube_root_field_roots():
    F = nf_make("c^3 - 10", "c")
    c = F.gen()
    real = [c.embed(i) for i in range(3) if abs(c.embed(i).imag) < 1e-12]
    assert len(real) == 1 and abs(real[0].real - 10 ** (1 / 3)) < 1e-12
    assert F.parse("c^2") * c == F(10)
