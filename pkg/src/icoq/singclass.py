"""A-type singularities of plane curves at explicit points.

Intersection multiplicities are computed by Fulton's algorithm directly on
polynomials, so no truncation order is ever chosen.  The curve is first
moved so the point sits at the origin; the Milnor number is then the
intersection multiplicity of the two partial derivatives there.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from ._fixtures import json_fixture, polynomial
from ._linalg import rank
from .errors import CommonComponent, NonIsolated, PointNotOnCurve, RegistryMismatch
from .exactfield import NFElement, NumberField, nf_make
from .multipoly import MultiPoly, PolyRing

__all__ = [
    "CurveGerm", "SingularityReport", "germ_localize", "fulton_intersection",
    "milnor_number", "classify", "classify_point", "field_from_text", "parse_point",
    "d_chart_curve", "upsilon_chart_curve", "d_boundary_point", "InventoryReport",
    "curve_inventory",
]


@dataclass(frozen=True)
class CurveGerm:
    curve: MultiPoly
    point: tuple
    local: MultiPoly
    value: object

    @property
    def ring(self) -> PolyRing:
        return self.local.ring


@dataclass(frozen=True)
class SingularityReport:
    type: str
    n: int | None
    multiplicity: int
    milnor: int | None
    delta: int | None
    quadratic_rank: int

    def as_dict(self) -> dict:
        return {"type": self.type, "n": self.n, "multiplicity": self.multiplicity,
                "milnor": self.milnor, "delta": self.delta,
                "quadratic_rank": self.quadratic_rank}


def _common_field(values) -> NumberField | None:
    field = None
    for v in values:
        if isinstance(v, NFElement):
            if field is not None and v.field != field:
                raise ValueError("point coordinates live in different fields")
            field = v.field
    return field


def germ_localize(f: MultiPoly, point: Sequence, check: bool = True) -> CurveGerm:
    """Translate ``f`` so that ``point`` becomes the origin."""
    if f.ring.nvars != 2:
        raise ValueError("plane curve germs need exactly two variables")
    field = _common_field(point) or f.ring.field
    ring = f.ring.with_field(field) if field is not f.ring.field else f.ring
    g = ring.lift(f) if ring != f.ring else f
    pt = tuple(ring.coerce(c) for c in point)
    value = g.evaluate(dict(zip(ring.names, pt)))
    if check and value:
        raise PointNotOnCurve(f"curve takes the value {value} at ({pt[0]}, {pt[1]})")
    x, y = ring.gens()
    local = g.subst({ring.names[0]: x + pt[0], ring.names[1]: y + pt[1]}, ring)
    return CurveGerm(f, pt, local, value)


# ---------------------------------------------------------------------------
# Fulton's algorithm

def _line_restriction(p: MultiPoly) -> dict[int, object]:
    """Coefficients of ``p(x, 0)`` keyed by the power of x."""
    return {e[0]: c for e, c in p.terms.items() if e[1] == 0}


def _divide_by_y(p: MultiPoly) -> MultiPoly:
    return MultiPoly(p.ring, {(e[0], e[1] - 1): c for e, c in p.terms.items()})


def fulton_intersection(f: MultiPoly, g: MultiPoly) -> int:
    """Local intersection multiplicity of ``f`` and ``g`` at the origin.

    Raises :class:`CommonComponent` when the curves share a branch there.
    """
    if f.ring != g.ring:
        if f.ring.names != g.ring.names:
            raise RegistryMismatch(f"{f.ring} vs {g.ring}")
        ring = f.ring.with_field(f.ring.field or g.ring.field)
        f, g = ring.lift(f), ring.lift(g)
    zero_exp = (0, 0)
    x = f.ring.gens()[0]
    total = 0
    while True:
        if not f or not g:
            raise CommonComponent("a polynomial reduced to zero")
        if f.terms.get(zero_exp) or g.terms.get(zero_exp):
            return total
        rf, rg = _line_restriction(f), _line_restriction(g)
        if not rf and not rg:
            raise CommonComponent("both curves contain the line y = 0")
        if not rf or not rg:
            if not rf:
                f, g, rf, rg = g, f, rg, rf
            # g = y*h: I(f, g) = I(f, y) + I(f, h) and I(f, y) = ord_x f(x, 0)
            total += min(rf)
            g = _divide_by_y(g)
            continue
        r, s = max(rf), max(rg)
        if r > s:
            f, g, rf, rg, r, s = g, f, rg, rf, s, r
        g = g - f * (x ** (s - r)) * (rg[s] / rf[r])


def milnor_number(germ: CurveGerm) -> int:
    local = germ.local
    u, v = local.ring.names
    try:
        return fulton_intersection(local.diff(u), local.diff(v))
    except CommonComponent as exc:
        raise NonIsolated(str(exc)) from exc


def _quadratic_rank(local: MultiPoly) -> int:
    a = local.coefficient((2, 0))
    b = local.coefficient((1, 1))
    c = local.coefficient((0, 2))
    half = b / 2
    return rank([[a, half], [half, c]])


def classify(germ: CurveGerm) -> SingularityReport:
    local = germ.local
    mult = min(sum(e) for e in local.terms) if local else 0
    if mult == 0:
        raise PointNotOnCurve("germ does not pass through the origin")
    if mult == 1:
        return SingularityReport("Smooth", 0, 1, 0, 0, 0)
    qr = _quadratic_rank(local) if mult == 2 else 0
    try:
        mu = milnor_number(germ)
    except NonIsolated:
        if qr:
            raise
        return SingularityReport("NotAType", None, mult, None, None, 0)
    if qr == 0:
        return SingularityReport("NotAType", None, mult, mu, None, 0)
    n = 1 if qr == 2 else mu
    if qr == 2 and mu != 1:
        raise NonIsolated(f"rank-2 quadratic part but Milnor number {mu}")
    return SingularityReport(f"A{n}", n, mult, mu, math.ceil(n / 2), qr)


# ---------------------------------------------------------------------------
# parsing helpers for user queries

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def field_from_text(text: str | None) -> NumberField | None:
    """``"c^3 - 5"`` becomes ``Q[c]/(c^3 - 5)``; empty text means Q."""
    if not text:
        return None
    names = sorted(set(_NAME.findall(text)))
    if len(names) != 1:
        raise ValueError(f"minimal polynomial must use exactly one symbol, found {names}")
    return nf_make(text, names[0])


def parse_point(text: str | Sequence[str], field: NumberField | None) -> tuple:
    parts = text.split(",") if isinstance(text, str) else list(text)
    if len(parts) != 2:
        raise ValueError(f"expected two coordinates, got {len(parts)}")
    if field is None:
        ring = PolyRing(())
        return tuple(ring.parse(p).constant_term() for p in parts)
    return tuple(field.parse(p.strip()) for p in parts)


def classify_point(curve: MultiPoly, point: Sequence[str] | str,
                   field: NumberField | str | None = None) -> SingularityReport:
    if isinstance(field, str):
        field = field_from_text(field)
    return classify(germ_localize(curve, parse_point(point, field)))


# ---------------------------------------------------------------------------
# the two curves of interest

@lru_cache(maxsize=None)
def d_chart_curve() -> MultiPoly:
    """The branch curve of P^2 -> P(1,3,5) in the chart z2 = 1: ``Phi(1, y3, y5)``."""
    ring = PolyRing(["y3", "y5"])
    y3, y5 = ring.gens()
    return polynomial("phi").subst({"z2": 1, "z6": y3, "z10": y5}, ring)


def d_boundary_point() -> SingularityReport:
    """The point where D meets the line ``z2 = 0``.

    There ``z10^3 = 1728*z6^5``, so in the chart ``z6 = 1`` the point is
    ``(z2, z10) = (0, 12)``.  The chart is a quotient by mu_3 with weights
    (1, 2) on (z2, z10); the stabilizer of ``(0, 12)`` is trivial, so the
    germ of ``Phi(z2, 1, z10)`` there is the germ of D.
    """
    ring = PolyRing(["z2", "z10"])
    z2, z10 = ring.gens()
    f = polynomial("phi").subst({"z2": z2, "z6": 1, "z10": z10}, ring)
    return classify(germ_localize(f, (0, 12)))


@lru_cache(maxsize=None)
def upsilon_chart_curve() -> MultiPoly:
    """``Upsilon(1, z4, z5)`` from the derived discriminant."""
    from .symfunc import quintic_discriminant
    ups = quintic_discriminant().upsilon
    ring = PolyRing(["z4", "z5"])
    return ups.subst({"z3": 1}, ring)


@dataclass
class PointResult:
    point: tuple[str, str]
    field: str | None
    expected: str
    report: SingularityReport

    @property
    def ok(self) -> bool:
        return self.report.type == self.expected


@dataclass
class InventoryReport:
    curve: str
    results: list[PointResult]
    delta_sum: int
    genus: int | None = None


def curve_inventory(name: str) -> InventoryReport:
    """Classify every fixture point on the chart curve ``name``."""
    data = json_fixture("singular_points.json")[name]
    curve = d_chart_curve() if name == "d_chart" else upsilon_chart_curve()
    results = []
    for item in data["points"]:
        field = field_from_text(item["field"])
        rep = classify(germ_localize(curve, parse_point(item["point"], field)))
        results.append(PointResult(tuple(item["point"]), item["field"], item["type"], rep))
    delta = sum(r.report.delta or 0 for r in results)
    genus = None
    if "genus_weights" in data:
        from .fanoarith import arithmetic_genus
        genus = arithmetic_genus(data["genus_weights"], data["genus_degree"])
    return InventoryReport(name, results, delta, genus)
