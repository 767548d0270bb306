"""Klein's invariants of the icosahedral group.

The three-dimensional representation is realised as the symmetric square
of the binary icosahedral representation, written in coordinates

    x0 = q,  x1 = 2p,  x2 = -2r    for the binary quadratic p*u^2 + q*u*v + r*v^2,

in which the discriminant becomes ``x0^2 + x1*x2`` up to a factor.  With the
binary generators fixed in :mod:`icoq.permgroups` these coordinates also
make Klein's sextic ``z6`` invariant, so the printed formulas for ``z10``
and ``z15`` can be used literally.

Polynomials are acted on by substitution, ``(p o g)(x) = p(g x)``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from ._fixtures import polynomial, polynomial_source
from ._linalg import Mat, nullspace, rank
from .errors import PinFailure, WrongInvariantDimension
from .exactfield import NumberField, q_zeta5
from .multipoly import (MultiPoly, PolyRing, poly_bordered_hessian, poly_jacobian,
                        poly_subst, poly_weighted_degree)
from .permgroups import MatGroup, binary_icosahedral_generators
from .repchar import MatrixRep, _monomials, _sympower_matrix, binary_representations

__all__ = [
    "KleinInvariants", "BinaryForm", "RelationReport", "H12Report",
    "build_v3_generators", "act", "reynolds", "invariant_basis", "klein_construct",
    "verify_fundamental_relation", "h12_invariant", "jacobian_check", "v3_ring",
]

V3_NAMES = ("x0", "x1", "x2")


def v3_ring(field: NumberField | None = None) -> PolyRing:
    return PolyRing(V3_NAMES, field)


# ---------------------------------------------------------------------------
# the group action on polynomials

def act(p: MultiPoly, m: Mat) -> MultiPoly:
    """``p(m x)``; the result lives in ``p.ring`` lifted to ``m``'s field."""
    ring = p.ring
    entry = m.rows[0][0]
    field = getattr(entry, "field", None) or ring.field
    target = ring.with_field(field) if field is not ring.field else ring
    xs = target.gens()
    n = ring.nvars
    forms = {}
    for i, name in enumerate(ring.names):
        f = target.zero()
        for j in range(n):
            c = m.rows[i][j]
            if c:
                f = f + xs[j] * c
        forms[name] = f
    return poly_subst(p, forms, target)


def _down(p: MultiPoly, ring: PolyRing) -> MultiPoly:
    """Return ``p`` in ``ring`` when every coefficient fits there."""
    if p.ring == ring:
        return p
    if ring.field is None and all(c.is_rational() for c in p.terms.values()):
        return MultiPoly(ring, {e: c.rational() for e, c in p.terms.items()})
    return p


def reynolds(r: MatrixRep, p: MultiPoly) -> MultiPoly:
    """Average of ``p o g`` over every element of ``r``'s group."""
    if p.ring.nvars != r.dim:
        raise ValueError(f"polynomial in {p.ring.nvars} variables for a {r.dim}-dimensional rep")
    total = None
    for m in r.images:
        q = act(p, m)
        total = q if total is None else total + q
    return _down(total / r.group.order, p.ring)


def is_invariant(p: MultiPoly, gens: Sequence[Mat]) -> bool:
    for g in gens:
        if _down(act(p, g), p.ring) != p:
            return False
    return True


def _is_diagonal(m: Mat) -> bool:
    n = m.shape[0]
    return all(not m.rows[i][j] for i in range(n) for j in range(n) if i != j)


def invariant_basis(r: MatrixRep, degree: int, ring: PolyRing | None = None) -> list[MultiPoly]:
    """A basis of the invariant forms of ``degree``.

    Diagonal generators cut the monomial basis down first; the remaining
    generators give the linear conditions ``p o g = p`` whose kernel is
    the invariant space (the same space the Reynolds operator projects to).
    """
    field = r.field
    ring = (ring or PolyRing([f"x{i}" for i in range(r.dim)])).with_field(field)
    monos = _monomials(r.dim, degree)
    for g in r.gens:
        if _is_diagonal(g):
            diag = [g.rows[i][i] for i in range(r.dim)]
            keep = []
            for e in monos:
                w = field.one() if field else Fraction(1)
                for d, k in zip(diag, e):
                    w = w * d ** k
                if w == 1:
                    keep.append(e)
            monos = keep
    if not monos:
        return []
    others = [g for g in r.gens if not _is_diagonal(g)]
    if not others:
        return [ring.monomial(e) for e in monos]
    cand = [ring.monomial(e) for e in monos]
    rows_by_key: dict = {}
    zero = ring.coerce(0)
    for g in others:
        images = [act(c, g) - c for c in cand]
        keys = sorted({e for q in images for e in q.terms})
        for e in keys:
            rows_by_key[(id(g), e)] = [q.terms.get(e, zero) for q in images]
    rows = list(rows_by_key.values())
    if not rows:
        return cand
    out = []
    for v in nullspace(rows):
        out.append(ring.from_terms({monos[i]: c for i, c in enumerate(v) if c}))
    return out


# ---------------------------------------------------------------------------
# the V3 model

@lru_cache(maxsize=None)
def build_v3_generators() -> MatrixRep:
    """Order-5 and order-2 generators of the icosahedral group on V3.

    Both fix the printed ``z2`` and ``z6``; the closure has order 60.
    """
    k = q_zeta5()
    sym = [_sympower_matrix(m, 2, k) for m in binary_icosahedral_generators()]
    # monomial basis of S^2 is (u^2, uv, v^2); see the module docstring
    change = Mat([[0, 1, 0], [2, 0, 0], [0, 0, -2]]).map(k)
    inv = change.inverse()
    gens = tuple(change * s * inv for s in sym)
    group = MatGroup(gens, field=k)
    if group.order != 60:
        raise PinFailure(f"V3 generators close to a group of order {group.order}, expected 60")
    orders = [int(group.element_orders[group.index[g]]) for g in gens]
    if orders != [5, 2]:
        raise PinFailure(f"generator orders {orders}, expected [5, 2]")
    ring = v3_ring()
    for name in ("z2", "z6"):
        if not is_invariant(polynomial(name, ring), gens):
            raise PinFailure(f"{name} is not invariant under the V3 generators")
    return MatrixRep(group, gens, "V3", k)


@dataclass(frozen=True)
class KleinInvariants:
    z2: MultiPoly
    z6: MultiPoly
    z10: MultiPoly
    z15: MultiPoly
    phi: MultiPoly
    notes: tuple[str, ...] = ()

    def as_dict(self) -> dict[str, MultiPoly]:
        return {"z2": self.z2, "z6": self.z6, "z10": self.z10, "z15": self.z15}


def klein_construct(check_invariance: bool = True) -> KleinInvariants:
    ring = v3_ring()
    z2 = polynomial("z2", ring)
    z6 = polynomial("z6", ring)
    hess = poly_bordered_hessian(z6, z2, V3_NAMES)
    z10 = (z2 ** 5 * 256 - hess - z2 ** 2 * z6 * 480) * Fraction(-1, 25)
    z15 = poly_jacobian([z6, z2, z10], V3_NAMES) / 10
    for name, p, deg in (("z10", z10, 10), ("z15", z15, 15)):
        if not p or p.total_degree() != deg or p.homogeneous_part(deg) != p:
            raise PinFailure(f"{name} is not a nonzero form of degree {deg}")
        if any(c.denominator != 1 for c in p.terms.values()):
            raise PinFailure(f"{name} has non-integral coefficients")
    notes = []
    if check_invariance:
        gens = build_v3_generators().gens
        for name, p in (("z10", z10), ("z15", z15)):
            if not is_invariant(p, gens):
                raise PinFailure(f"{name} is not invariant under the V3 generators")
        minus = act(z15, Mat.identity(3) * -1)
        if minus == -z15:
            notes.append("z15(-x) = -z15(x): odd degree, not invariant under -1")
    return KleinInvariants(z2, z6, z10, z15, polynomial("phi"), tuple(notes))


@dataclass
class RelationReport:
    ok: bool
    residue_terms: int
    lhs_terms: int
    rhs_terms: int
    restriction_ok: bool
    phi_weighted_degree: int
    leading_residue: str = ""
    elapsed_ms: float = 0.0


def verify_fundamental_relation(k: KleinInvariants) -> RelationReport:
    """Expand ``z15^2 - Phi(z2, z6, z10)`` in x0, x1, x2."""
    t0 = time.perf_counter()
    lhs = k.z15 * k.z15
    rhs = poly_subst(k.phi, {"z2": k.z2, "z6": k.z6, "z10": k.z10}, k.z2.ring)
    residue = lhs - rhs
    restricted = residue.subst({"x0": 0})
    lead = ""
    if residue:
        e, c = residue.leading_term()
        lead = str(residue.ring.monomial(e, c))
    return RelationReport(
        ok=residue.is_zero(),
        residue_terms=len(residue),
        lhs_terms=len(lhs),
        rhs_terms=len(rhs),
        restriction_ok=restricted.is_zero(),
        phi_weighted_degree=poly_weighted_degree(k.phi, {"z2": 2, "z6": 6, "z10": 10}),
        leading_residue=lead,
        elapsed_ms=(time.perf_counter() - t0) * 1000,
    )


def jacobian_check(k: KleinInvariants) -> bool:
    """``J(z2, z6, z10) = 10*z15`` up to the sign of the row order."""
    j = poly_jacobian([k.z2, k.z6, k.z10], V3_NAMES)
    return bool(j) and (j == k.z15 * 10 or j == k.z15 * -10)


# ---------------------------------------------------------------------------
# the binary invariant of degree 12

@dataclass(frozen=True)
class BinaryForm:
    form: MultiPoly
    degree: int


@dataclass
class H12Report:
    form: BinaryForm
    dimension: int
    printed: str
    printed_homogeneous: bool
    agrees: bool
    monomial_diffs: list[tuple[str, str, str]] = field(default_factory=list)


def _binary_ring() -> PolyRing:
    return PolyRing(["x1", "x2"])


def h12_invariant() -> H12Report:
    """The degree-12 invariant of V2 by Reynolds projection of all monomials."""
    v2 = binary_representations()["V2"]
    ring = _binary_ring()
    images = [reynolds(v2, ring.monomial((12 - i, i))) for i in range(13)]
    nonzero = [p for p in images if p]
    if not nonzero:
        raise WrongInvariantDimension("no invariant of degree 12")
    keys = sorted({e for p in nonzero for e in p.terms})
    zero = nonzero[0].ring.coerce(0)
    dim = rank([[p.terms.get(e, zero) for e in keys] for p in nonzero])
    if dim != 1:
        raise WrongInvariantDimension(f"degree-12 invariants span dimension {dim}, expected 1")
    gen = nonzero[0]
    lead = gen.coefficient((11, 1))
    if not lead:
        raise WrongInvariantDimension("invariant has no x1^11*x2 term")
    form = _down(gen / lead, ring)
    printed = polynomial("h12", ring)
    homogeneous = all(sum(e) == 12 for e in printed.terms)
    diffs = []
    for e in sorted(set(form.terms) | set(printed.terms), reverse=True):
        a, b = form.coefficient(e), printed.coefficient(e)
        if a != b:
            diffs.append((str(ring.monomial(e)), str(a), str(b)))
    return H12Report(BinaryForm(form, 12), dim, polynomial_source("h12"), homogeneous,
                     not diffs, diffs)


def random_form(ring: PolyRing, degree: int, rng: random.Random, terms: int = 6,
                bound: int = 5) -> MultiPoly:
    """A random form with small integer coefficients, for property checks."""
    monos = _monomials(ring.nvars, degree)
    picks = rng.sample(monos, min(terms, len(monos)))
    return ring.from_terms({e: rng.randint(-bound, bound) or 1 for e in picks})
