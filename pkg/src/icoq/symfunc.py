"""Elementary symmetric polynomials and the quintic discriminant.

The reduction of a symmetric polynomial to elementary symmetric ones uses
the textbook algorithm: repeatedly cancel the lex-leading term
``c * x1^a1 ... xn^an`` with ``c * e1^(a1-a2) ... en^an``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import IndexOutOfRange, InternalInconsistency, NotSymmetric
from .multipoly import MultiPoly, PolyRing

__all__ = [
    "x_ring", "z_ring", "elementary_symmetric", "permute_variables", "is_symmetric",
    "to_elementary", "from_elementary", "vandermonde", "DiscriminantSuite",
    "quintic_discriminant",
]


def x_ring(n: int) -> PolyRing:
    return PolyRing([f"x{i}" for i in range(1, n + 1)])


def z_ring(n: int, start: int = 1) -> PolyRing:
    return PolyRing([f"z{i}" for i in range(start, n + 1)])


def elementary_symmetric(k: int, n: int, ring: PolyRing | None = None) -> MultiPoly:
    """``e_k`` in ``x1..xn`` (or in the first ``n`` variables of ``ring``)."""
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"e_{k} needs 1 <= k <= {n}")
    ring = ring or x_ring(n)
    if ring.nvars != n:
        raise IndexOutOfRange(f"ring has {ring.nvars} variables, expected {n}")
    terms = {}
    for subset in itertools.combinations(range(n), k):
        e = [0] * n
        for i in subset:
            e[i] = 1
        terms[tuple(e)] = 1
    return ring.from_terms(terms)


def permute_variables(p: MultiPoly, perm: Sequence[int]) -> MultiPoly:
    """Rename variable ``i`` to variable ``perm[i]`` (0-based)."""
    n = p.ring.nvars
    out = {}
    for e, c in p.terms.items():
        f = [0] * n
        for i, k in enumerate(e):
            f[perm[i]] = k
        out[tuple(f)] = c
    return MultiPoly(p.ring, out)


def is_symmetric(p: MultiPoly) -> bool:
    n = p.ring.nvars
    if n < 2:
        return True
    swap = [1, 0] + list(range(2, n))
    cycle = [(i + 1) % n for i in range(n)]
    return permute_variables(p, swap) == p and permute_variables(p, cycle) == p


class _ElementaryPowers:
    def __init__(self, n: int, ring: PolyRing):
        self.e = [elementary_symmetric(k, n, ring) for k in range(1, n + 1)]
        self.cache: dict[tuple[int, int], MultiPoly] = {}
        self.one = ring.one()

    def power(self, k: int, j: int) -> MultiPoly:
        if j == 0:
            return self.one
        key = (k, j)
        got = self.cache.get(key)
        if got is None:
            got = self.e[k] if j == 1 else self.power(k, j - 1) * self.e[k]
            self.cache[key] = got
        return got

    def product(self, b: Sequence[int]) -> MultiPoly:
        out = self.one
        for k, j in enumerate(b):
            if j:
                out = out * self.power(k, j)
        return out


def to_elementary(s: MultiPoly, target: PolyRing | None = None) -> MultiPoly:
    """Express symmetric ``s`` as a polynomial in ``e1..en``.

    ``target`` names the elementary symmetric variables (default
    ``z1..zn``).  Raises :class:`NotSymmetric` for non-symmetric input.
    """
    n = s.ring.nvars
    target = target or z_ring(n)
    if target.nvars != n:
        raise IndexOutOfRange(f"target ring has {target.nvars} variables, expected {n}")
    if not is_symmetric(s):
        raise NotSymmetric("polynomial is not invariant under the symmetric group")
    powers = _ElementaryPowers(n, s.ring)
    rest = dict(s.terms)
    out: dict = {}
    while rest:
        lead = max(rest)
        c = rest[lead]
        if any(lead[i] < lead[i + 1] for i in range(n - 1)):
            raise InternalInconsistency(f"lex-leading exponent {lead} is not a partition")
        b = tuple(lead[i] - (lead[i + 1] if i + 1 < n else 0) for i in range(n))
        out[b] = c
        for e, v in powers.product(b).terms.items():
            w = rest.get(e)
            w = -c * v if w is None else w - c * v
            if w:
                rest[e] = w
            else:
                rest.pop(e, None)
        if lead in rest:
            raise InternalInconsistency("leading term failed to cancel")
    return target.from_terms(out)


def from_elementary(p: MultiPoly, ring: PolyRing) -> MultiPoly:
    """Substitute ``z_k -> e_k`` back into ``p``; the inverse of reduction."""
    n = ring.nvars
    assignment = {name: elementary_symmetric(k + 1, n, ring) for k, name in enumerate(p.ring.names)}
    return p.subst(assignment, ring)


def vandermonde(n: int, ring: PolyRing | None = None) -> MultiPoly:
    """``prod_{i > j} (x_i - x_j)``."""
    ring = ring or x_ring(n)
    xs = ring.gens()
    out = ring.one()
    for i in range(n):
        for j in range(i):
            out = out * (xs[i] - xs[j])
    return out


@dataclass(frozen=True)
class DiscriminantSuite:
    n: int
    e: tuple[MultiPoly, ...]
    vandermonde: MultiPoly
    delta: MultiPoly
    psi: MultiPoly
    upsilon: MultiPoly


@lru_cache(maxsize=None)
def quintic_discriminant() -> DiscriminantSuite:
    """The discriminant of ``x^5 - z1 x^4 + z2 x^3 - z3 x^2 + z4 x - z5``.

    Defined as the elementary symmetric form of the squared Vandermonde.
    """
    n = 5
    xr = x_ring(n)
    v = vandermonde(n, xr)
    square = v * v
    delta = to_elementary(square, z_ring(n))
    if from_elementary(delta, xr) != square:
        raise InternalInconsistency("substituting e_k back does not reproduce z10^2")
    if delta.weighted_degree([1, 2, 3, 4, 5]) != 20:
        raise InternalInconsistency("discriminant is not of weighted degree 20")
    psi = delta.subst({"z1": 0}, z_ring(5, start=2))
    upsilon = delta.subst({"z1": 0, "z2": 0}, z_ring(5, start=3))
    e = tuple(elementary_symmetric(k, n, xr) for k in range(1, n + 1))
    return DiscriminantSuite(n, e, v, delta, psi, upsilon)
