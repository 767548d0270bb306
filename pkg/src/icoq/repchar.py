"""Matrix representations, characters, Molien series and Lefschetz numbers.

A :class:`MatrixRep` assigns a matrix to each generator of a finite group.
Images of the other elements follow the closure words, so a bad generator
assignment shows up as a failed homomorphism check rather than silently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Callable, Sequence

from ._linalg import Mat, kron, rref, solve_left_inverse
from .errors import GroupMismatch, NonIntegralDimension
from .exactfield import NFElement, NumberField, q_zeta5, sqrt5_in
from .multipoly import PolyRing
from .permgroups import (ConjugacyClass, FiniteGroup, Perm, PermGroup,
                         binary_icosahedral, conjugacy_classes, symmetric_group)

__all__ = [
    "MatrixRep", "CharacterTable", "LefschetzRow", "rep_sympower", "rep_tensor",
    "rep_wedge2", "rep_project", "character_of", "inner_product", "verify_table",
    "molien_dims", "hilbert_series_coefficients", "s5_representations",
    "binary_representations", "s5_columns", "binary_columns", "lefschetz_table",
    "galois", "complex_conjugate", "s5_table", "binary_table", "isotypic_projector",
]


@dataclass
class MatrixRep:
    group: FiniteGroup
    gens: tuple[Mat, ...]
    label: str = ""
    field: NumberField | None = None

    def __post_init__(self):
        if len(self.gens) != len(self.group.generators):
            raise ValueError("one matrix per group generator is required")

    @property
    def dim(self) -> int:
        return self.gens[0].shape[0]

    @cached_property
    def images(self) -> list[Mat]:
        g = self.group
        one = self.gens[0].rows[0][0] * 0 + 1
        out: list[Mat] = [Mat.identity(self.dim, one)]
        for j in range(1, g.order):
            p, k = g.parent[j]
            out.append(out[p] * self.gens[k])
        return out

    def image(self, i: int) -> Mat:
        return self.images[i]

    @cached_property
    def traces(self) -> list:
        return [m.trace() for m in self.images]

    def check_homomorphism(self, trials: int = 200, seed: int = 0) -> bool:
        rng = random.Random(seed)
        n = self.group.order
        for _ in range(trials):
            a, b = rng.randrange(n), rng.randrange(n)
            if self.images[self.group.mul(a, b)] != self.images[a] * self.images[b]:
                return False
        return True


def _same_group(r: MatrixRep, s: MatrixRep) -> None:
    if r.group is not s.group:
        raise GroupMismatch(f"{r.label or 'rep'} and {s.label or 'rep'} live on different groups")


def _monomials(n: int, k: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()] if k == 0 else []
    out = []
    for first in range(k, -1, -1):
        for rest in _monomials(n - 1, k - first):
            out.append((first,) + rest)
    return out


def _sympower_matrix(m: Mat, k: int, field) -> Mat:
    n = m.shape[0]
    basis = _monomials(n, k)
    ring = PolyRing([f"e{i}" for i in range(n)], field)
    ys = ring.gens()
    cols = [sum((ys[j] * m.rows[j][i] for j in range(n)), ring.zero()) for i in range(n)]
    zero = ring.coerce(0)
    columns = []
    for alpha in basis:
        p = ring.one()
        for i, a in enumerate(alpha):
            if a:
                p = p * cols[i] ** a
        columns.append([p.terms.get(beta, zero) for beta in basis])
    return Mat(list(zip(*columns)))


def rep_sympower(r: MatrixRep, k: int, label: str = "") -> MatrixRep:
    """``S^k r`` on the monomial basis of degree-``k`` forms."""
    gens = tuple(_sympower_matrix(m, k, r.field) for m in r.gens)
    return MatrixRep(r.group, gens, label or f"S^{k}({r.label})", r.field)


def rep_tensor(r: MatrixRep, s: MatrixRep, label: str = "") -> MatrixRep:
    _same_group(r, s)
    gens = tuple(kron(a, b) for a, b in zip(r.gens, s.gens))
    return MatrixRep(r.group, gens, label or f"{r.label}*{s.label}", r.field or s.field)


def rep_wedge2(r: MatrixRep, label: str = "") -> MatrixRep:
    """``wedge^2 r`` on the basis ``e_i ^ e_j`` with ``i < j``."""
    pairs = list(combinations(range(r.dim), 2))
    gens = []
    for m in r.gens:
        a = m.rows
        gens.append(Mat([[a[k][i] * a[l][j] - a[l][i] * a[k][j] for (i, j) in pairs]
                         for (k, l) in pairs]))
    return MatrixRep(r.group, tuple(gens), label or f"wedge2({r.label})", r.field)


def rep_project(r: MatrixRep, projector: Mat, label: str = "") -> MatrixRep:
    """Restrict ``r`` to the image of a G-equivariant idempotent."""
    rows = [list(row) for row in projector.rows]
    _, pivots = rref(rows)
    basis = [[row[c] for c in pivots] for row in rows]  # n x k, columns span the image
    left = solve_left_inverse(basis)
    b = Mat(basis)
    l_mat = Mat(left)
    gens = tuple(l_mat * m * b for m in r.gens)
    return MatrixRep(r.group, gens, label, r.field)


def isotypic_projector(r: MatrixRep, chi: Sequence, dim: int) -> Mat:
    """``(dim/|G|) sum_g conj(chi(g)) r(g)`` given ``chi`` on every element."""
    g = r.group
    total = None
    for i in range(g.order):
        c = chi[i]
        if not c:
            continue
        term = r.images[i] * complex_conjugate(c)
        total = term if total is None else total + term
    return total * Fraction(dim, g.order)


# ---------------------------------------------------------------------------
# field automorphisms

def galois(c, k: int):
    """Apply ``t -> t^k`` to an element of the fifth cyclotomic field."""
    if isinstance(c, NFElement):
        return c.map_generator(c.field.gen() ** k)
    return c


def complex_conjugate(c):
    if isinstance(c, NFElement):
        if c.field == q_zeta5():
            return galois(c, 4)
        if c.field.minpoly == (Fraction(-5), Fraction(0), Fraction(1)):
            return c
        raise ValueError(f"no complex conjugation implemented for {c.field}")
    return c


# ---------------------------------------------------------------------------
# characters

def character_of(r: MatrixRep, classes: Sequence[ConjugacyClass]) -> list:
    return [r.traces[c.representative] for c in classes]


def inner_product(chi: Sequence, psi: Sequence, classes: Sequence[ConjugacyClass], order: int):
    acc = 0
    for a, b, c in zip(chi, psi, classes):
        acc = acc + a * complex_conjugate(b) * c.size
    return acc / order


@dataclass
class CharacterTable:
    columns: list[str]
    classes: list[ConjugacyClass]
    rows: dict[str, list]
    group_order: int


def s5_columns(g: PermGroup) -> tuple[list[str], list[ConjugacyClass]]:
    """Classes of S5 in the column order 1, 2-, 2+, 3, 6, 4, 5."""
    wanted = [("1", 1, 1), ("2-", 2, 10), ("2+", 2, 15), ("3", 3, 20),
              ("6", 6, 20), ("4", 4, 30), ("5", 5, 24)]
    classes = conjugacy_classes(g)
    out = []
    for name, order, size in wanted:
        (c,) = [c for c in classes if c.order == order and c.size == size]
        out.append(c)
    return [w[0] for w in wanted], out


def binary_columns(g: FiniteGroup, v2: MatrixRep) -> tuple[list[str], list[ConjugacyClass]]:
    """Classes of the binary icosahedral group in the appendix column order.

    The Galois pairs of order 5 and 10 are told apart by the trace on V2:
    the first order-5 column is where it equals ``(-1+sqrt5)/2`` and the first
    order-10 column is where it equals ``(1-sqrt5)/2``.
    """
    k = q_zeta5()
    phi = (sqrt5_in(k) - 1) / 2
    classes = conjugacy_classes(g)

    def pick(order, size, pred=None):
        found = [c for c in classes if c.order == order and c.size == size
                 and (pred is None or pred(c))]
        (c,) = found
        return c

    tr = lambda c: v2.traces[c.representative]
    cols = [
        ("1", pick(1, 1)), ("2", pick(2, 1)), ("4", pick(4, 30)),
        ("5a", pick(5, 12, lambda c: tr(c) == phi)),
        ("5b", pick(5, 12, lambda c: tr(c) != phi)),
        ("10a", pick(10, 12, lambda c: tr(c) == -phi)),
        ("10b", pick(10, 12, lambda c: tr(c) != -phi)),
        ("6", pick(6, 20)), ("3", pick(3, 20)),
    ]
    return [c[0] for c in cols], [c[1] for c in cols]


@dataclass
class TableCheck:
    name: str
    ok: bool
    detail: str = ""


def verify_table(table: CharacterTable, expected: dict[str, list] | None = None) -> list[TableCheck]:
    """Orthogonality relations, dimension sum and (optionally) cell equality."""
    out: list[TableCheck] = []
    labels = list(table.rows)
    n = table.group_order
    for i, a in enumerate(labels):
        for b in labels[i:]:
            ip = inner_product(table.rows[a], table.rows[b], table.classes, n)
            want = 1 if a == b else 0
            out.append(TableCheck(f"<{a},{b}>", ip == want, str(ip)))
    for j, c in enumerate(table.classes):
        s = sum((table.rows[l][j] * complex_conjugate(table.rows[l][j]) for l in labels), 0)
        out.append(TableCheck(f"column {table.columns[j]}", s == Fraction(n, c.size), str(s)))
    dims = sum(table.rows[l][0] ** 2 for l in labels)
    out.append(TableCheck("sum of squared degrees", dims == n, str(dims)))
    if expected is not None:
        for l in labels:
            exp = expected.get(l)
            got = table.rows[l]
            bad = [table.columns[j] for j, (x, y) in enumerate(zip(got, exp or [])) if x != y]
            ok = exp is not None and not bad
            out.append(TableCheck(f"row {l}", ok, "" if ok else f"mismatch at {bad}"))
    return out


# ---------------------------------------------------------------------------
# concrete representations

def _perm_matrix_w4(p: Perm) -> Mat:
    """S5 on the span of ``e_i - e_5``; column ``i`` is the image of ``f_i``."""
    one, zero = Fraction(1), Fraction(0)
    cols = []
    for i in range(4):
        col = [zero] * 4
        a, b = p(i), p(4)
        if a != 4:
            col[a] += one
        if b != 4:
            col[b] -= one
        cols.append(col)
    return Mat(list(zip(*cols)))


@lru_cache(maxsize=None)
def s5_representations() -> dict[str, MatrixRep]:
    g = symmetric_group(5)
    one = Mat([[Fraction(1)]])
    w1 = MatrixRep(g, tuple(one for _ in g.generators), "W1")
    w1s = MatrixRep(g, tuple(Mat([[Fraction(p.sign())]]) for p in g.generators), "W1'")
    w4 = MatrixRep(g, tuple(_perm_matrix_w4(p) for p in g.generators), "W4")
    w4s = rep_tensor(w4, w1s, "W4'")
    w6 = rep_wedge2(w4, "W6")
    s2 = rep_sympower(w4, 2, "S2W4")
    # remove the trivial and W4 isotypic parts of S^2 W4
    p1 = isotypic_projector(s2, w1.traces, 1)
    p4 = isotypic_projector(s2, w4.traces, 4)
    ident = Mat.identity(s2.dim)
    w5 = rep_project(s2, ident - p1 - p4, "W5")
    w5s = rep_tensor(w5, w1s, "W5'")
    return {r.label: r for r in (w1, w1s, w4, w4s, w5, w5s, w6)}


@lru_cache(maxsize=None)
def binary_representations() -> dict[str, MatrixRep]:
    g = binary_icosahedral()
    k = q_zeta5()
    v1 = MatrixRep(g, tuple(Mat([[k.one()]]) for _ in g.generators), "V1", k)
    v2 = MatrixRep(g, tuple(g.generators), "V2", k)
    v2s = MatrixRep(g, tuple(m.map(lambda c: galois(c, 2)) for m in g.generators), "V2'", k)
    v3 = rep_sympower(v2, 2, "V3")
    v3s = rep_sympower(v2s, 2, "V3'")
    v4s = rep_tensor(v2, v2s, "V4'")
    v4 = rep_sympower(v2, 3, "V4")
    v5 = rep_sympower(v2, 4, "V5")
    v6 = rep_sympower(v2, 5, "V6")
    return {r.label: r for r in (v1, v2, v2s, v3, v3s, v4s, v4, v5, v6)}


def s5_table() -> CharacterTable:
    reps = s5_representations()
    g = reps["W1"].group
    cols, classes = s5_columns(g)
    rows = {l: character_of(r, classes) for l, r in reps.items()}
    return CharacterTable(cols, classes, rows, g.order)


def binary_table() -> CharacterTable:
    reps = binary_representations()
    g = reps["V1"].group
    cols, classes = binary_columns(g, reps["V2"])
    rows = {l: character_of(r, classes) for l, r in reps.items()}
    return CharacterTable(cols, classes, rows, g.order)


# ---------------------------------------------------------------------------
# Molien series

def molien_dims(r: MatrixRep, dmax: int) -> list[int]:
    """Dimensions of invariant forms of degree ``0..dmax``.

    For each class representative the complete homogeneous symmetric
    functions of its eigenvalues come from the power sums ``tr r(g^k)`` via
    Newton's identity ``d h_d = sum_k p_k h_{d-k}``.
    """
    if dmax < 0 or dmax > 40:
        raise ValueError("dmax must lie in 0..40")
    g = r.group
    classes = conjugacy_classes(g)
    totals = [Fraction(0)] * (dmax + 1)
    for c in classes:
        powers = [0]
        cur = 0
        for _ in range(dmax):
            cur = g.mul(cur, c.representative)
            powers.append(cur)
        p = [None] + [r.traces[powers[k]] for k in range(1, dmax + 1)]
        h = [Fraction(1)]
        for d in range(1, dmax + 1):
            acc = 0
            for k in range(1, d + 1):
                acc = acc + p[k] * h[d - k]
            h.append(acc / d)
        for d in range(dmax + 1):
            totals[d] = totals[d] + h[d] * c.size
    out = []
    for d, t in enumerate(totals):
        v = t / g.order
        if isinstance(v, NFElement):
            if not v.is_rational():
                raise NonIntegralDimension(f"degree {d}: irrational value {v}")
            v = v.rational()
        v = Fraction(v)
        if v.denominator != 1 or v < 0:
            raise NonIntegralDimension(f"degree {d}: value {v}")
        out.append(int(v))
    return out


def hilbert_series_coefficients(numerator: dict[int, int], degrees: Sequence[int], dmax: int) -> list[int]:
    """Coefficients of ``sum_k numerator[k] t^k / prod (1 - t^d)`` up to ``dmax``."""
    series = [0] * (dmax + 1)
    for k, c in numerator.items():
        if k <= dmax:
            series[k] += c
    for d in degrees:
        for i in range(d, dmax + 1):
            series[i] += series[i - d]
    return series


# ---------------------------------------------------------------------------
# Lefschetz numbers

@dataclass(frozen=True)
class LefschetzRow:
    representative: str
    size: int
    order: int
    trace: int
    lefschetz: int


def lefschetz_table() -> list[LefschetzRow]:
    """Per S5 class: the W4 character and ``Lef = 3 + chi_W4``."""
    reps = s5_representations()
    w4 = reps["W4"]
    g = w4.group
    cols, classes = s5_columns(g)
    canonical = {"1": "(1)", "2-": "(1,2)", "2+": "(1,2)(3,4)", "3": "(1,2,3)",
                 "6": "(1,2,3)(4,5)", "4": "(1,2,3,4)", "5": "(1,2,3,4,5)"}
    out = []
    for name, c in zip(cols, classes):
        tr = int(w4.traces[c.representative])
        out.append(LefschetzRow(canonical[name], c.size, c.order, tr, 3 + tr))
    return out
