from __future__ import annotations

import random

import pytest
import sympy as sp

from icoq.multipoly import MultiPoly, PolyRing


def to_sympy(p: MultiPoly | str):
    """Parse our text form with sympy; the field generator stays a symbol."""
    return sp.sympify(str(p).replace("^", "**"))


def reduce_mod(expr, field_symbol: str, minpoly: str):
    """Expand ``expr`` and reduce its coefficients modulo the minimal polynomial."""
    t = sp.Symbol(field_symbol)
    m = sp.sympify(minpoly.replace("^", "**"))
    return sp.expand(sp.rem(sp.expand(expr), m, t))


def random_poly(ring: PolyRing, rng: random.Random, terms: int = 5, degree: int = 4,
                bound: int = 9) -> MultiPoly:
    out = {}
    for _ in range(terms):
        e = tuple(rng.randint(0, degree) for _ in range(ring.nvars))
        out[e] = ring.coerce(rng.randint(-bound, bound)) / rng.randint(1, 4)
    return ring.from_terms(out)


@pytest.fixture
def rng():
    return random.Random(20261014)


@pytest.fixture(scope="session")
def klein():
    from icoq.icoinv import klein_construct
    return klein_construct()


@pytest.fixture(scope="session")
def v3():
    from icoq.icoinv import build_v3_generators
    return build_v3_generators()
