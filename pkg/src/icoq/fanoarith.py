"""Weighted projective arithmetic and the quintic del Pezzo lattice.

Everything here is exact and finite.  The del Pezzo surface of degree 5 is
handled only through its Picard lattice ``Z^5`` with basis ``e0, e1..e4``,
form ``diag(1, -1, -1, -1, -1)`` and canonical class ``-3e0 + e1 + .. + e4``.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Sequence

from .errors import InternalInconsistency, NonPositiveDegree, PinFailure
from .permgroups import Perm, PermGroup

__all__ = [
    "wps_kvolume", "wps_normalize", "is_well_formed", "arithmetic_genus",
    "PencilBound", "pencil_bound", "weighted_monomials",
    "Divisor", "FORM", "K", "pair", "enumerate_classes", "IncidenceModel", "dp5_build",
    "PetersenReport", "petersen_check", "WeylAction", "weyl_action", "weyl_generators",
    "orbit_and_stabilizer", "line_orbit", "xi_orbit",
    "LatticeRow", "lattice_lefschetz", "CensusReport", "incidence_census",
]


# ---------------------------------------------------------------------------
# weighted projective spaces

def _prod(xs) -> int:
    return reduce(lambda a, b: a * b, xs, 1)


def is_well_formed(weights: Sequence[int]) -> bool:
    """Any ``n`` of the ``n + 1`` weights are coprime."""
    w = list(weights)
    return all(math.gcd(*(w[:i] + w[i + 1:])) == 1 for i in range(len(w)))


def wps_normalize(weights: Sequence[int]) -> tuple[int, ...]:
    """The well-formed weights of an isomorphic weighted projective space."""
    w = [int(x) for x in weights]
    if any(x <= 0 for x in w):
        raise NonPositiveDegree(f"weights must be positive, got {w}")
    changed = True
    while changed:
        changed = False
        g = math.gcd(*w)
        if g > 1:
            w = [x // g for x in w]
            changed = True
        for i in range(len(w)):
            d = math.gcd(*(w[:i] + w[i + 1:]))
            if d > 1:
                w = [x if j == i else x // d for j, x in enumerate(w)]
                changed = True
    return tuple(w)


def wps_kvolume(weights: Sequence[int], d: int, dim: int) -> Fraction:
    """Anticanonical volume ``(-K)^dim``.

    For ``d > 0`` this is the degree-``d`` hypersurface of dimension ``dim``
    (so ``len(weights) == dim + 2``): ``(sum w - d)^dim * d / prod w``.
    For ``d == 0`` it is the ambient space itself (``len(weights) == dim + 1``):
    ``(sum w)^dim / prod w``.
    """
    w = [int(x) for x in weights]
    if d < 0 or any(x <= 0 for x in w):
        raise NonPositiveDegree(f"degree {d} with weights {w}")
    s, p = sum(w), _prod(w)
    if d == 0:
        if len(w) != dim + 1:
            raise ValueError(f"{len(w)} weights do not give a space of dimension {dim}")
        return Fraction(s ** dim, p)
    if len(w) != dim + 2:
        raise ValueError(f"{len(w)} weights do not give a hypersurface of dimension {dim}")
    return Fraction((s - d) ** dim * d, p)


def arithmetic_genus(weights: Sequence[int], d: int) -> int:
    """Genus of a degree-``d`` curve in the smooth locus of a weighted plane.

    Adjunction gives ``2 p_a - 2 = d (d - sum w) / prod w``.
    """
    w = [int(x) for x in weights]
    if len(w) != 3:
        raise ValueError("a weighted plane has three weights")
    if d <= 0:
        raise NonPositiveDegree(f"curve degree {d}")
    twice = Fraction(d * (d - sum(w)), _prod(w)) + 2
    if twice.denominator != 1 or twice.numerator % 2:
        raise ValueError(f"degree {d} curve is not Cartier on P{tuple(w)}")
    return twice.numerator // 2


@dataclass(frozen=True)
class PencilBound:
    value: Fraction
    verdict: str  # "pass", "conditional" or "fail"
    note: str = ""


def pencil_bound(weights: Sequence[int], d_branch: int, d_pencil: int) -> PencilBound:
    """``D . L = dD * dL / prod w`` compared with the bound 3.

    Strictly below 3 passes; exactly 3 passes only when the pencil's base
    point lies off the branch curve, which is reported as ``conditional``.
    """
    if d_branch <= 0 or d_pencil <= 0:
        raise NonPositiveDegree(f"degrees {d_branch}, {d_pencil}")
    v = Fraction(d_branch * d_pencil, _prod(int(x) for x in weights))
    if v < 3:
        return PencilBound(v, "pass")
    if v == 3:
        return PencilBound(v, "conditional", "equality needs the base point off the branch curve")
    return PencilBound(v, "fail", "exceeds the bound 3")


def weighted_monomials(weights: Sequence[int], degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of weighted degree ``degree``."""
    w = list(weights)
    out: list[tuple[int, ...]] = []

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == len(w) - 1:
            if left % w[i] == 0:
                out.append(tuple(acc + [left // w[i]]))
            return
        for k in range(left // w[i] + 1):
            rec(i + 1, left - k * w[i], acc + [k])

    if degree >= 0:
        rec(0, degree, [])
    return out


# ---------------------------------------------------------------------------
# the Picard lattice of the quintic del Pezzo surface

Divisor = tuple[int, int, int, int, int]
FORM = (1, -1, -1, -1, -1)
K: Divisor = (-3, 1, 1, 1, 1)


def pair(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(f * x * y for f, x, y in zip(FORM, a, b))


def enumerate_classes(self_int: int, anti_degree: int) -> list[Divisor]:
    """All classes ``D`` with ``D^2 = self_int`` and ``-K.D = anti_degree``.

    With ``a = (a1..a4)``: ``sum a = 3 a0 - k`` and ``sum a^2 = a0^2 - m``,
    and Cauchy-Schwarz ``(sum a)^2 <= 4 sum a^2`` bounds ``a0``; then each
    ``|ai| <= sqrt(a0^2 - m)``.  The search is therefore complete.
    """
    k, m = anti_degree, self_int
    # 5 a0^2 - 6 k a0 + k^2 + 4 m <= 0
    disc = 36 * k * k - 20 * (k * k + 4 * m)
    if disc < 0:
        return []
    root = math.isqrt(disc)
    lo = math.floor((6 * k - root - 1) / 10)
    hi = math.ceil((6 * k + root + 1) / 10)
    out = []
    for a0 in range(lo, hi + 1):
        rest = a0 * a0 - m
        if rest < 0:
            continue
        b = math.isqrt(rest)
        for tail in itertools.product(range(-b, b + 1), repeat=4):
            d = (a0,) + tail
            if pair(d, d) == m and -pair(K, d) == k:
                out.append(d)
    return sorted(out)


def _add(a: Sequence[int], b: Sequence[int]) -> Divisor:
    return tuple(x + y for x, y in zip(a, b))


def _name(d: Divisor) -> str:
    parts = []
    for i, c in enumerate(d):
        if c:
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append(f"{sign}{mag}e{i}")
    s = "".join(parts) or "0"
    return s[1:] if s.startswith("+") else s


@dataclass
class IncidenceModel:
    lines: list[Divisor]
    xi: list[tuple[int, int]]
    conics: list[Divisor]
    cubics: list[Divisor]
    adjacency: list[list[int]]
    xi_class: list[int]  # conic class (index into conics) of each pair in xi

    def line_name(self, i: int) -> str:
        return _name(self.lines[i])


@lru_cache(maxsize=None)
def dp5_build() -> IncidenceModel:
    lines = enumerate_classes(-1, 1)
    conics = enumerate_classes(0, 2)
    cubics = enumerate_classes(1, 3)
    if (len(lines), len(conics), len(cubics)) != (10, 5, 5):
        raise InternalInconsistency(
            f"found {len(lines)} lines, {len(conics)} conics, {len(cubics)} cubics")
    adj = [[j for j in range(10) if j != i and pair(lines[i], lines[j]) == 1] for i in range(10)]
    if any(len(a) != 3 for a in adj):
        raise InternalInconsistency("a line does not meet exactly three others")
    xi = [(i, j) for i in range(10) for j in adj[i] if i < j]
    xi_class = []
    for i, j in xi:
        c = _add(lines[i], lines[j])
        if c not in conics:
            raise InternalInconsistency(f"{_name(c)} is not a conic class")
        xi_class.append(conics.index(c))
    return IncidenceModel(lines, xi, conics, cubics, adj, xi_class)


# ---------------------------------------------------------------------------
# Petersen graph

@dataclass
class PetersenReport:
    vertices: int
    edges: int
    regular: int | None
    girth: int | None
    automorphisms: int
    vertex_transitive: bool

    @property
    def ok(self) -> bool:
        return (self.vertices, self.edges, self.regular, self.girth, self.automorphisms) \
            == (10, 15, 3, 5, 120) and self.vertex_transitive


def _girth(adj: list[list[int]]) -> int | None:
    best = None
    for s in range(len(adj)):
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        while q:
            u = q.popleft()
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    q.append(v)
                elif parent[u] != v:
                    cyc = dist[u] + dist[v] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


def _automorphisms(adj: list[list[int]]) -> list[tuple[int, ...]]:
    """All adjacency-preserving vertex permutations, by backtracking."""
    n = len(adj)
    nbrs = [set(a) for a in adj]
    found: list[tuple[int, ...]] = []
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> None:
        if v == n:
            found.append(tuple(image))
            return
        for w in range(n):
            if used[w] or len(nbrs[w]) != len(nbrs[v]):
                continue
            if all((u in nbrs[v]) == (image[u] in nbrs[w]) for u in range(v)):
                image[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
        image[v] = -1

    extend(0)
    return found


def petersen_check(m: IncidenceModel) -> PetersenReport:
    adj = m.adjacency
    degrees = {len(a) for a in adj}
    auts = _automorphisms(adj)
    transitive = {a[0] for a in auts} == set(range(len(adj)))
    return PetersenReport(len(adj), sum(len(a) for a in adj) // 2,
                          degrees.pop() if len(degrees) == 1 else None,
                          _girth(adj), len(auts), transitive)


# ---------------------------------------------------------------------------
# the Weyl group W(A4) acting on the lattice

Matrix = tuple[tuple[int, ...], ...]


def _apply(mat: Matrix, d: Sequence[int]) -> Divisor:
    return tuple(sum(mat[i][j] * d[j] for j in range(5)) for i in range(5))


def _from_images(images: Sequence[Divisor]) -> Matrix:
    """Matrix whose column ``j`` is the image of ``e_j``."""
    return tuple(tuple(images[j][i] for j in range(5)) for i in range(5))


def _basis(i: int) -> Divisor:
    return tuple(1 if j == i else 0 for j in range(5))


def weyl_generators() -> list[Matrix]:
    gens = []
    for a, b in ((1, 2), (2, 3), (3, 4)):
        imgs = [_basis(i) for i in range(5)]
        imgs[a], imgs[b] = imgs[b], imgs[a]
        gens.append(_from_images(imgs))
    e0, e1, e2, e3, e4 = (_basis(i) for i in range(5))
    quad = [(2, -1, -1, -1, 0), (1, 0, -1, -1, 0), (1, -1, 0, -1, 0),
            (1, -1, -1, 0, 0), e4]
    gens.append(_from_images(quad))
    return gens


@dataclass
class WeylAction:
    model: IncidenceModel
    matrices: list[Matrix]
    on_lines: PermGroup
    on_conics: list[Perm]
    preserves_form: bool
    preserves_k: bool

    @property
    def order(self) -> int:
        return self.on_lines.order


def _perm_of(mat: Matrix, classes: list[Divisor]) -> Perm:
    index = {c: i for i, c in enumerate(classes)}
    try:
        return Perm([index[_apply(mat, c)] for c in classes])
    except KeyError as exc:
        raise PinFailure("lattice element does not permute the classes") from exc


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(5)) for j in range(5))
                 for i in range(5))


@lru_cache(maxsize=None)
def weyl_action() -> WeylAction:
    m = dp5_build()
    gens = weyl_generators()
    line_gens = [_perm_of(g, m.lines) for g in gens]
    group = PermGroup(line_gens)
    # matrices for every element, following the closure words
    ident = _from_images([_basis(i) for i in range(5)])
    mats: list[Matrix] = [ident]
    for j in range(1, group.order):
        p, k = group.parent[j]
        mats.append(_mat_mul(mats[p], gens[k]))
    basis = [_basis(i) for i in range(5)]
    form_ok = all(pair(_apply(g, a), _apply(g, b)) == pair(a, b)
                  for g in mats for a in basis for b in basis)
    k_ok = all(_apply(g, K) == K for g in mats)
    if group.order != 120 or not form_ok or not k_ok:
        raise PinFailure(f"Weyl closure of order {group.order}, form {form_ok}, K {k_ok}")
    conic_perms = [_perm_of(g, m.conics) for g in mats]
    return WeylAction(m, mats, group, conic_perms, form_ok, k_ok)


def orbit_and_stabilizer(w: WeylAction, items: list, act) -> tuple[int, int]:
    """Orbit size of ``items[0]`` and its stabilizer order."""
    start = items[0]
    orbit = set()
    stab = 0
    for g in w.matrices:
        img = act(g, start)
        orbit.add(img)
        if img == start:
            stab += 1
    return len(orbit), stab


def line_orbit(w: WeylAction) -> tuple[int, int]:
    return orbit_and_stabilizer(w, w.model.lines, _apply)


def xi_orbit(w: WeylAction) -> tuple[int, int]:
    lines = w.model.lines
    pairs = [frozenset((lines[i], lines[j])) for i, j in w.model.xi]
    act = lambda g, p: frozenset(_apply(g, d) for d in p)
    orbit, stab = orbit_and_stabilizer(w, pairs, act)
    return orbit, stab


# ---------------------------------------------------------------------------
# traces on Pic and the Lefschetz numbers

@dataclass(frozen=True)
class LatticeRow:
    cycle_type: tuple[int, ...]
    size: int
    trace: int
    lefschetz: int
    character_sum: int | None = None


# representatives (1), (1,2), (1,2)(3,4), (1,2,3), (1,2,3)(4,5), (1,2,3,4), (1,2,3,4,5)
_CLASS_ORDER = [(1, 1, 1, 1, 1), (2, 1, 1, 1), (2, 2, 1), (3, 1, 1), (3, 2), (4, 1), (5,)]


def lattice_lefschetz(w: WeylAction | None = None) -> list[LatticeRow]:
    """Trace on ``Pic (x) Q`` per class, classes told apart by cycle type on conics.

    Each row also carries ``chi_W4 + chi_W1`` from the character table so the
    lattice decomposition can be compared with it.
    """
    w = w or weyl_action()
    buckets: dict[tuple[int, ...], list[int]] = {}
    for i, p in enumerate(w.on_conics):
        buckets.setdefault(tuple(sorted(p.cycle_type(), reverse=True)), []).append(i)
    from .repchar import s5_table
    table = s5_table()
    group = _s5_group()
    chi = {}
    for j, c in enumerate(table.classes):
        ct = tuple(sorted(group.elements[c.representative].cycle_type(), reverse=True))
        chi[ct] = int(table.rows["W4"][j]) + int(table.rows["W1"][j])
    rows = []
    for ct in sorted(buckets, key=_CLASS_ORDER.index):
        members = buckets[ct]
        traces = {sum(w.matrices[i][k][k] for k in range(5)) for i in members}
        if len(traces) != 1:
            raise InternalInconsistency(f"trace is not a class function on cycle type {ct}")
        tr = traces.pop()
        rows.append(LatticeRow(ct, len(members), tr, 2 + tr, chi.get(ct)))
    return rows


def _s5_group() -> PermGroup:
    from .repchar import s5_representations
    return s5_representations()["W1"].group


# ---------------------------------------------------------------------------
# lines against twisted cubics

@dataclass
class CensusReport:
    per_cubic_line_incidences: list[int]
    values_ok: bool
    sum_lines: Divisor
    sum_cubics: Divisor
    total: int
    xi_incidences: int
    leftover: int
    approx_class_sizes: list[int]


def incidence_census(m: IncidenceModel) -> CensusReport:
    """Line/cubic bookkeeping behind the 90 = 60 + 30 count.

    Each pair ``P`` in Xi has the cubic ``R_P`` of class ``-K - C_P`` where
    ``C_P`` is the conic class ``L1 + L2``.  A point of Xi lies on two lines
    and on the two cubics attached to the other members of its class.
    """
    per_cubic = []
    values_ok = True
    for r in m.cubics:
        vals = [pair(r, l) for l in m.lines]
        values_ok &= set(vals) <= {0, 1}
        per_cubic.append(sum(vals))
    sum_lines = reduce(_add, m.lines)
    cubic_of = [tuple(-k - c for k, c in zip(K, m.conics[ci])) for ci in m.xi_class]
    if any(c not in m.cubics for c in cubic_of):
        raise InternalInconsistency("-K - C_P is not a cubic class")
    sum_cubics = reduce(_add, cubic_of)
    total = sum(pair(r, l) for r in cubic_of for l in m.lines)
    classes = Counter(m.xi_class)
    # cubics through P: those R_Q with Q != P in the same class as P
    through = [classes[c] - 1 for c in m.xi_class]
    xi_inc = sum(2 * t for t in through)
    return CensusReport(per_cubic, values_ok, sum_lines, sum_cubics, total, xi_inc,
                        total - xi_inc, sorted(classes.values()))
