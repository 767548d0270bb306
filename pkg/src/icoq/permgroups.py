"""Explicit finite groups: permutations and matrices over number fields.

A group is built once by breadth-first closure over its generators.  The
closure records, for each element, the element it was reached from and the
generator used; those right-multiplication edges give the full
multiplication table as a numpy array.  After that every query
(conjugacy classes, normalizers, subgroup census) works on integer element
indices and never touches permutations or matrices again.
"""

from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Hashable, Iterable, Sequence

import numpy as np

from ._linalg import Mat
from .errors import NotASubgroup, OrderBoundExceeded, UnrecognizedType

__all__ = [
    "Perm", "FiniteGroup", "PermGroup", "MatGroup", "SubgroupRecord",
    "group_closure", "symmetric_group", "alternating_group",
    "conjugacy_classes", "normalizer", "centralizer", "sylow",
    "subgroup_census", "iso_fingerprint", "LABELS", "ConjugacyClass",
    "binary_icosahedral", "binary_icosahedral_generators",
]

DEFAULT_BOUND = 1000


class Perm:
    """A permutation of ``{0..n-1}``; printed and parsed in 1-based cycles.

    Products compose right to left: ``(p * q)(i) == p(q(i))``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, text: str | Sequence[Sequence[int]], n: int) -> "Perm":
        """``"(1,2,3)(4,5)"`` or ``[[1,2,3],[4,5]]``, points numbered from 1."""
        if isinstance(text, str):
            cycles = [[int(x) for x in re.split(r"[,\s]+", c.strip()) if x]
                      for c in re.findall(r"\(([^()]*)\)", text)]
        else:
            cycles = [list(c) for c in text]
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def order(self) -> int:
        o = 1
        for c in self.cycles():
            o = o * len(c) // gcd(o, len(c))
        return o

    def __str__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(i + 1) for i in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Perm({self})"


class FiniteGroup:
    """Elements in BFS order from the generators; index 0 is the identity."""

    kind = "abstract"

    def __init__(self, generators: Sequence, identity, bound: int = DEFAULT_BOUND):
        self.generators = tuple(generators)
        elements = [identity]
        index: dict[Hashable, int] = {identity: 0}
        parent = [(-1, -1)]
        right: list[list[int]] = [[] for _ in self.generators]
        queue = deque([0])
        while queue:
            i = queue.popleft()
            x = elements[i]
            for k, g in enumerate(self.generators):
                y = x * g
                j = index.get(y)
                if j is None:
                    j = len(elements)
                    if j >= bound:
                        raise OrderBoundExceeded(f"closure exceeds {bound} elements")
                    elements.append(y)
                    index[y] = j
                    parent.append((i, k))
                    queue.append(j)
                right[k].append(j)
        self.elements = elements
        self.index = index
        self.parent = parent
        self._right = [np.array(r, dtype=np.int64) for r in right]

    # basic data -----------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def idx(self, x) -> int:
        return self.index[x]

    def word(self, i: int) -> list[int]:
        """Generator indices whose product (left to right) is element ``i``."""
        out = []
        while i:
            i, k = self.parent[i]
            out.append(k)
        return out[::-1]

    @cached_property
    def table(self) -> np.ndarray:
        """``table[i, j]`` is the index of ``elements[i] * elements[j]``."""
        n = self.order
        # column j is the right-multiplication map by element j
        cols = np.empty((n, n), dtype=np.int64)
        cols[:, 0] = np.arange(n)
        for j in range(1, n):
            p, k = self.parent[j]
            cols[:, j] = self._right[k][cols[:, p]]
        return cols

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    @cached_property
    def inverses(self) -> np.ndarray:
        t = self.table
        inv = np.empty(self.order, dtype=np.int64)
        rows, cols = np.nonzero(t == 0)
        inv[rows] = cols
        return inv

    @cached_property
    def element_orders(self) -> np.ndarray:
        t = self.table
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        cur = np.arange(n)
        for k in range(1, n + 1):
            hit = (cur == 0) & (orders == 0)
            orders[hit] = k
            if orders.all():
                break
            cur = t[cur, np.arange(n)]
        return orders

    @cached_property
    def conj(self) -> np.ndarray:
        """``conj[g, x]`` is the index of ``g x g^-1``."""
        t = self.table
        inv = self.inverses
        return np.stack([t[t[g], inv[g]] for g in range(self.order)])

    def power(self, i: int, k: int) -> int:
        r = 0
        for _ in range(k):
            r = int(self.table[r, i])
        return r

    # subgroups on index sets ----------------------------------------------
    def closure_of(self, gens: Iterable[int]) -> frozenset[int]:
        gens = [g for g in gens if g != 0]
        seen = {0}
        queue = deque([0])
        t = self.table
        while queue:
            x = queue.popleft()
            for g in gens:
                y = int(t[x, g])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def is_subgroup(self, elems: Iterable[int]) -> bool:
        s = frozenset(elems)
        if 0 not in s:
            return False
        arr = np.array(sorted(s))
        products = self.table[np.ix_(arr, arr)]
        return bool(np.isin(products, arr).all())

    def conjugate_set(self, g: int, elems: Iterable[int]) -> frozenset[int]:
        row = self.conj[g]
        return frozenset(int(row[x]) for x in elems)

    def label_of(self, i: int) -> str:
        return str(self.elements[i])


class PermGroup(FiniteGroup):
    kind = "perm"

    def __init__(self, generators: Sequence[Perm], degree: int | None = None,
                 bound: int = DEFAULT_BOUND):
        if degree is None:
            if not generators:
                raise ValueError("degree is required without generators")
            degree = generators[0].degree
        if any(g.degree != degree for g in generators):
            raise ValueError("generators have different degrees")
        self.degree = degree
        super().__init__(generators, Perm.identity(degree), bound)

    def is_even(self, i: int) -> bool:
        return self.elements[i].sign() == 1


class MatGroup(FiniteGroup):
    kind = "matrix"

    def __init__(self, generators: Sequence[Mat], field=None, bound: int = DEFAULT_BOUND):
        if not generators:
            raise ValueError("matrix groups need at least one generator")
        n = generators[0].shape[0]
        if any(g.shape != (n, n) for g in generators):
            raise ValueError("generators have different shapes")
        self.dim = n
        self.field = field
        one = generators[0].rows[0][0] * 0 + 1
        super().__init__(generators, Mat.identity(n, one), bound)

    def label_of(self, i: int) -> str:
        return f"g{i}"


def group_closure(gens: Sequence, bound: int = DEFAULT_BOUND, field=None) -> FiniteGroup:
    if not gens:
        raise ValueError("need at least one generator (use Perm.identity)")
    if isinstance(gens[0], Perm):
        return PermGroup(gens, bound=bound)
    return MatGroup(gens, field=field, bound=bound)


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup([Perm.identity(1)])
    gens = [Perm.from_cycles("(1,2)", n), Perm.from_cycles([list(range(1, n + 1))], n)]
    return PermGroup(gens)


def alternating_group(n: int) -> PermGroup:
    if n < 3:
        return PermGroup([Perm.identity(n)])
    gens = [Perm.from_cycles([[1, 2, 3]], n)] + \
        ([Perm.from_cycles([list(range(3, n + 1))] if n % 2 else [list(range(2, n + 1))], n)]
         if n > 3 else [])
    return PermGroup(gens)


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    size: int
    order: int
    members: frozenset[int] = field(repr=False)


def conjugacy_classes(g: FiniteGroup) -> list[ConjugacyClass]:
    """Classes sorted by element order, then by smallest member index."""
    seen = np.zeros(g.order, dtype=bool)
    conj = g.conj
    orders = g.element_orders
    out = []
    for x in range(g.order):
        if seen[x]:
            continue
        members = np.unique(conj[:, x])
        seen[members] = True
        out.append(ConjugacyClass(x, len(members), int(orders[x]),
                                  frozenset(int(m) for m in members)))
    out.sort(key=lambda c: (c.order, c.representative))
    return out


def _check_subgroup(g: FiniteGroup, h: Iterable[int]) -> frozenset[int]:
    h = frozenset(int(x) for x in h)
    if not g.is_subgroup(h):
        raise NotASubgroup("element set is not closed under multiplication")
    return h


def normalizer(g: FiniteGroup, h: Iterable[int]) -> frozenset[int]:
    h = _check_subgroup(g, h)
    arr = np.array(sorted(h))
    conj = g.conj
    out = [x for x in range(g.order) if np.isin(conj[x, arr], arr).all()]
    return frozenset(out)


def centralizer(g: FiniteGroup, elems: Iterable[int]) -> frozenset[int]:
    arr = np.array(sorted(set(int(x) for x in elems)))
    conj = g.conj
    return frozenset(x for x in range(g.order) if (conj[x, arr] == arr).all())


def sylow(g: FiniteGroup, p: int) -> frozenset[int]:
    """One Sylow ``p``-subgroup (the first found in canonical order)."""
    n = g.order
    target = 1
    while n % (target * p) == 0:
        target *= p
    if target == 1:
        return frozenset({0})
    orders = g.element_orders
    pelems = [x for x in range(n) if _is_power_of(int(orders[x]), p)]
    # grow a p-subgroup greedily by adjoining p-elements that keep it a p-group
    current = frozenset({0})
    while len(current) < target:
        for x in pelems:
            if x in current:
                continue
            cand = g.closure_of(list(_gens_hint(current)) + [x])
            if _is_power_of(len(cand), p):
                current = cand
                break
        else:  # pragma: no cover - Sylow's theorem guarantees progress
            raise RuntimeError("failed to extend p-subgroup")
    return current


def _is_power_of(m: int, p: int) -> bool:
    while m % p == 0:
        m //= p
    return m == 1


def _gens_hint(h: frozenset[int]) -> list[int]:
    return sorted(h)


# ---------------------------------------------------------------------------
# isomorphism fingerprint

LABELS = ("1", "mu{n}", "mu2xmu2", "S3", "S4", "A4", "A5", "D{n}", "mu5:mu4", "S5")


def iso_fingerprint(g: FiniteGroup, h: Iterable[int] | None = None) -> str:
    """Label of the subgroup ``h`` (default: all of ``g``).

    Labels are ASCII: ``mu4``, ``mu2xmu2``, ``S3``, ``D6``, ``mu5:mu4`` ...
    """
    elems = sorted(range(g.order)) if h is None else sorted(int(x) for x in h)
    n = len(elems)
    orders = g.element_orders
    hist = Counter(int(orders[x]) for x in elems)
    arr = np.array(elems)
    sub = g.table[np.ix_(arr, arr)]
    abelian = bool((sub == sub.T).all())
    if n == 1:
        return "1"
    if hist.get(n):
        return f"mu{n}"
    if abelian:
        if n == 4:
            return "mu2xmu2"
        raise UnrecognizedType(f"non-cyclic abelian group of order {n}")
    if n % 2 == 0 and hist.get(n // 2):
        m = n // 2
        r = next(x for x in elems if orders[x] == m)
        rot = g.closure_of([r])
        if all(orders[x] == 2 for x in elems if x not in rot):
            return "S3" if m == 3 else f"D{m}"
    if n == 12 and hist == Counter({1: 1, 2: 3, 3: 8}):
        return "A4"
    if n == 20 and hist == Counter({1: 1, 2: 5, 4: 10, 5: 4}):
        return "mu5:mu4"
    if n == 24 and hist == Counter({1: 1, 2: 9, 3: 8, 4: 6}):
        return "S4"
    if n == 60 and hist == Counter({1: 1, 2: 15, 3: 20, 5: 24}):
        return "A5"
    if n == 120 and hist == Counter({1: 1, 2: 25, 3: 20, 4: 30, 5: 24, 6: 20}):
        return "S5"
    raise UnrecognizedType(f"order {n}, element orders {dict(sorted(hist.items()))}")


# ---------------------------------------------------------------------------
# subgroup census

@dataclass(frozen=True)
class SubgroupRecord:
    generators: tuple
    order: int
    label: str
    count: int
    normalizer_order: int
    in_alternating: bool | None
    elements: frozenset[int] = field(repr=False, compare=False)

    @property
    def key(self) -> tuple:
        return (self.order, self.label, self.in_alternating)


def small_generating_set(g: FiniteGroup, h: frozenset[int]) -> list[int]:
    gens: list[int] = []
    current = frozenset({0})
    # prefer elements of large order so cyclic groups get one generator
    orders = g.element_orders
    for x in sorted(h, key=lambda x: (-int(orders[x]), x)):
        if x not in current:
            gens.append(x)
            current = g.closure_of(gens)
            if current == h:
                break
    return gens


def subgroup_census(g: FiniteGroup, include_trivial: bool = False,
                    include_whole: bool = False, bound: int = 200) -> list[SubgroupRecord]:
    """Conjugacy classes of subgroups by cyclic extension.

    Starting from the trivial group, each class representative is extended
    by every element outside it; the new subgroup's conjugacy class is
    registered in full so later hits are recognised by element set.
    """
    if g.order > bound:
        raise OrderBoundExceeded(f"census limited to groups of order <= {bound}")
    seen: set[frozenset[int]] = set()
    reps: list[tuple[frozenset[int], int]] = []

    def register(h: frozenset[int]) -> None:
        conjugates = {g.conjugate_set(x, h) for x in range(g.order)}
        seen.update(conjugates)
        reps.append((h, len(conjugates)))

    register(frozenset({0}))
    i = 0
    while i < len(reps):
        h, _ = reps[i]
        i += 1
        base = small_generating_set(g, h)
        for x in range(g.order):
            if x in h:
                continue
            k = g.closure_of(base + [x])
            if k not in seen:
                register(k)
    records = []
    is_perm = isinstance(g, PermGroup)
    for h, count in reps:
        if (len(h) == 1 and not include_trivial) or (len(h) == g.order and not include_whole):
            continue
        gens = small_generating_set(g, h)
        records.append(SubgroupRecord(
            generators=tuple(g.elements[x] for x in gens),
            order=len(h),
            label=iso_fingerprint(g, h),
            count=count,
            normalizer_order=len(normalizer(g, h)),
            in_alternating=all(g.is_even(x) for x in h) if is_perm else None,
            elements=h,
        ))
    records.sort(key=lambda r: (r.order, r.label, not r.in_alternating, min(r.elements - {0}, default=0)))
    return records


# ---------------------------------------------------------------------------
# the binary icosahedral group

def binary_icosahedral_generators():
    """Two 2x2 matrices over Q(zeta5) generating the binary icosahedral group.

    ``a = -diag(t^3, t^2)`` has order 10 and ``b`` is the classical
    ``1/sqrt5`` normalised element of order 4 (so ``b^2 = -1``).
    """
    from .exactfield import q_zeta5, sqrt5_in
    k = q_zeta5()
    t = k.gen()
    s = sqrt5_in(k)
    zero = k.zero()
    a = Mat([[-t ** 3, zero], [zero, -t ** 2]])
    u = (t - t ** 4) / s
    v = (t ** 2 - t ** 3) / s
    b = Mat([[-u, v], [v, u]])
    return a, b


_BINARY = None


def binary_icosahedral() -> MatGroup:
    """The binary icosahedral group, checked against its defining pins."""
    global _BINARY
    if _BINARY is None:
        from .exactfield import q_zeta5
        g = MatGroup(binary_icosahedral_generators(), field=q_zeta5())
        _check_binary(g)
        _BINARY = g
    return _BINARY


def _check_binary(g: MatGroup) -> None:
    from .errors import PinFailure
    if g.order != 120:
        raise PinFailure(f"closure has order {g.order}, expected 120")
    involutions = [i for i in range(g.order) if g.element_orders[i] == 2]
    if len(involutions) != 1:
        raise PinFailure(f"{len(involutions)} involutions, expected exactly one")
    sizes = sorted(c.size for c in conjugacy_classes(g))
    if sizes != sorted([1, 1, 30, 12, 12, 12, 12, 20, 20]):
        raise PinFailure(f"class sizes {sizes}")
