"""Sparse multivariate polynomials over Q or a number field.

A :class:`PolyRing` fixes an ordered tuple of variable names (the
registry) and a coefficient field.  A :class:`MultiPoly` is a dict from
exponent tuples to nonzero coefficients; it is treated as immutable.
Rational coefficients are :class:`fractions.Fraction`; number field
coefficients are always :class:`~icoq.exactfield.NFElement`, even when
they happen to be rational, so that equal polynomials compare equal.

Large products go through the packed-integer kernels in
:mod:`icoq._kernels`.  Number field coefficients are handled by treating
the field generator as one extra packed variable and reducing afterwards.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

import numpy as np

from . import _kernels
from ._parse import format_monomial, format_rational, parse_expression
from .errors import (MissingAssignment, NonSquare, NotHomogeneous,
                     RegistryMismatch, UnknownVariable, ZeroPolynomial)
from .exactfield import NFElement, NumberField, as_fraction

__all__ = [
    "PolyRing", "MultiPoly", "poly_parse", "poly_diff", "poly_det",
    "poly_det_cofactor", "poly_jacobian", "poly_bordered_hessian",
    "poly_subst", "poly_resultant", "poly_weighted_degree", "grevlex_key",
]

Exps = tuple[int, ...]

# products with at most this many term pairs stay in pure Python
_SMALL_PRODUCT = 256


def grevlex_key(e: Exps):
    return (sum(e), tuple(-x for x in reversed(e)))


class PolyRing:
    """Variable registry plus coefficient field (``None`` means Q)."""

    def __init__(self, names: Sequence[str] | str, field: NumberField | None = None):
        if isinstance(names, str):
            names = [n.strip() for n in names.replace(",", " ").split()]
        self.names: tuple[str, ...] = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"repeated variable names in {self.names}")
        if field is not None and field.symbol in self.names:
            raise ValueError(f"field symbol {field.symbol!r} clashes with a variable")
        self.field = field
        self.index = {n: i for i, n in enumerate(self.names)}
        self.nvars = len(self.names)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names \
            and self.field == other.field

    def __hash__(self):
        return hash((self.names, self.field))

    def __repr__(self):
        f = "Q" if self.field is None else str(self.field)
        return f"PolyRing({', '.join(self.names)}; {f})"

    # coefficients -------------------------------------------------------
    def coerce(self, c):
        if self.field is None:
            if isinstance(c, NFElement):
                return c.rational()
            return as_fraction(c)
        if isinstance(c, NFElement):
            return self.field(c)
        return self.field(as_fraction(c))

    @property
    def coeff_one(self):
        return self.coerce(1)

    # constructors -------------------------------------------------------
    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.const(1)

    def const(self, c) -> "MultiPoly":
        c = self.coerce(c)
        return MultiPoly(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name: str) -> "MultiPoly":
        if name not in self.index:
            raise UnknownVariable(name)
        e = [0] * self.nvars
        e[self.index[name]] = 1
        return MultiPoly(self, {tuple(e): self.coeff_one})

    def gens(self) -> tuple["MultiPoly", ...]:
        return tuple(self.var(n) for n in self.names)

    def monomial(self, exps: Sequence[int], c=1) -> "MultiPoly":
        c = self.coerce(c)
        return MultiPoly(self, {tuple(exps): c} if c else {})

    def from_terms(self, terms: Mapping[Exps, object]) -> "MultiPoly":
        out = {}
        for e, c in terms.items():
            c = self.coerce(c)
            if c:
                out[tuple(e)] = c
        return MultiPoly(self, out)

    def __call__(self, value) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            if value.ring != self:
                raise RegistryMismatch(f"{value.ring} vs {self}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.const(value)

    def parse(self, text: str) -> "MultiPoly":
        return poly_parse(text, self)

    def with_field(self, field: NumberField | None) -> "PolyRing":
        return PolyRing(self.names, field)

    def lift(self, p: "MultiPoly") -> "MultiPoly":
        """Copy ``p`` (same variable names) into this ring's field."""
        if p.ring.names != self.names:
            raise RegistryMismatch(f"{p.ring} vs {self}")
        return MultiPoly(self, {e: self.coerce(c) for e, c in p.terms.items()})


class MultiPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # helpers ------------------------------------------------------------
    def _coerce(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise RegistryMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction, NFElement)):
            return self.ring.const(other)
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def copy_terms(self) -> dict:
        return dict(self.terms)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> "MultiPoly":
        c = self.ring.coerce(c)
        if not c:
            return self.ring.zero()
        return MultiPoly(self.ring, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, NFElement)):
            return self.scale(other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MultiPoly(self.ring, _mul_terms(self.ring, self.terms, o.terms))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, NFElement)):
            c = self.ring.coerce(other)
            return self.scale(1 / c)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, NFElement)):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # inspection ---------------------------------------------------------
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        i = self._var_index(var)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def _var_index(self, var: str) -> int:
        try:
            return self.ring.index[var]
        except KeyError:
            raise UnknownVariable(var) from None

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(tuple(exps), self.ring.coerce(0))

    def constant_term(self):
        return self.coefficient((0,) * self.ring.nvars)

    def variables_used(self) -> tuple[str, ...]:
        used = [False] * self.ring.nvars
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return tuple(n for n, u in zip(self.ring.names, used) if u)

    def sorted_terms(self, order: str = "grevlex"):
        key = grevlex_key if order == "grevlex" else (lambda e: e)
        return sorted(self.terms.items(), key=lambda ec: key(ec[0]), reverse=True)

    def leading_term(self, order: str = "grevlex"):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        key = grevlex_key if order == "grevlex" else (lambda e: e)
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def homogeneous_part(self, degree: int) -> "MultiPoly":
        return MultiPoly(self.ring, {e: c for e, c in self.terms.items() if sum(e) == degree})

    def map_coefficients(self, fn: Callable, ring: PolyRing | None = None) -> "MultiPoly":
        ring = ring or self.ring
        out = {}
        for e, c in self.terms.items():
            v = ring.coerce(fn(c))
            if v:
                out[e] = v
        return MultiPoly(ring, out)

    def coefficients_in(self, var: str) -> list["MultiPoly"]:
        """Coefficients of ``var^k`` (as polynomials free of ``var``), k ascending."""
        i = self._var_index(var)
        deg = self.degree_in(var)
        buckets: list[dict] = [dict() for _ in range(max(deg + 1, 0))]
        for e, c in self.terms.items():
            k = e[i]
            e2 = e[:i] + (0,) + e[i + 1:]
            buckets[k][e2] = c
        return [MultiPoly(self.ring, b) for b in buckets]

    # calculus and substitution -----------------------------------------
    def diff(self, var: str) -> "MultiPoly":
        i = self._var_index(var)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                out[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return MultiPoly(self.ring, out)

    def subst(self, assignment: Mapping[str, object], ring: PolyRing | None = None) -> "MultiPoly":
        return poly_subst(self, assignment, ring)

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate at a full assignment of scalars."""
        missing = [v for v in self.variables_used() if v not in values]
        if missing:
            raise MissingAssignment(f"no value for {', '.join(missing)}")
        pows: list[dict[int, object]] = [dict() for _ in range(self.ring.nvars)]
        acc = self.ring.coerce(0)
        vals = [values.get(n) for n in self.ring.names]
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    p = pows[i].get(k)
                    if p is None:
                        p = vals[i] ** k
                        pows[i][k] = p
                    term = term * p
            acc = acc + term
        return acc

    def weighted_degree(self, weights) -> int:
        return poly_weighted_degree(self, weights)

    # text ---------------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts: list[str] = []
        names = self.ring.names
        for idx, (e, c) in enumerate(self.sorted_terms()):
            mono = format_monomial(names, e)
            neg = False
            if isinstance(c, NFElement) and not c.is_rational():
                body_c = f"({c})"
                body = f"{body_c}*{mono}" if mono else body_c
            else:
                r = c.rational() if isinstance(c, NFElement) else c
                neg = r < 0
                a = -r if neg else r
                if not mono:
                    body = format_rational(a)
                elif a == 1:
                    body = mono
                else:
                    body = f"{format_rational(a)}*{mono}"
            if idx == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"


# ---------------------------------------------------------------------------
# multiplication

def _mul_python(terms_a: dict, terms_b: dict) -> dict:
    out: dict = {}
    for ea, ca in terms_a.items():
        for eb, cb in terms_b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = out.get(e)
            out[e] = ca * cb if v is None else v + ca * cb
    return {e: c for e, c in out.items() if c}


def _lcm_denominator(values: Iterable[Fraction]) -> int:
    lcm = 1
    for v in values:
        d = v.denominator
        if d != 1:
            lcm = lcm * d // math.gcd(lcm, d)
    return lcm


def _nf_vectors(terms: dict) -> tuple[dict, int]:
    """Integer coordinate vectors over one common denominator."""
    denom = 1
    for c in terms.values():
        denom = denom * c.d // math.gcd(denom, c.d)
    return {e: [x * (denom // c.d) for x in c.n] if c.d != denom else c.n
            for e, c in terms.items()}, denom


def _nf_finish(field: NumberField, acc: dict, denom: int) -> dict:
    """Reduce unreduced coordinate vectors (length up to 2d-1) mod the minpoly."""
    d = field.degree
    red, scale = field._red_int
    out = {}
    for mono, vec in acc.items():
        if len(vec) > d:
            head = [x * scale for x in vec[:d]] if scale != 1 else vec[:d]
            for k in range(d, len(vec)):
                pk = vec[k]
                if pk:
                    for m, r in enumerate(red[k - d]):
                        if r:
                            head[m] += pk * r
            vec, den = head, denom * scale
        else:
            den = denom
        if any(vec):
            out[mono] = NFElement(field, nums=vec, den=den)
    return out


def _mul_python_nf(field: NumberField, a: dict, b: dict) -> dict:
    va, da = _nf_vectors(a)
    vb, db = _nf_vectors(b)
    width = 2 * field.degree - 1
    acc: dict = {}
    for ea, xa in va.items():
        nza = [(i, x) for i, x in enumerate(xa) if x]
        for eb, xb in vb.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            vec = acc.get(e)
            if vec is None:
                vec = [0] * width
                acc[e] = vec
            for i, x in nza:
                for j, y in enumerate(xb):
                    if y:
                        vec[i + j] += x * y
    return _nf_finish(field, acc, da * db)


def _to_arrays(terms: dict, field: NumberField | None):
    """Exponent matrix and integer numerators with a common denominator."""
    if field is None:
        exps = list(terms.keys())
        coefs = list(terms.values())
        denom = _lcm_denominator(coefs)
        nums = [int(c.numerator * (denom // c.denominator)) for c in coefs]
        return np.array(exps, dtype=np.int64), nums, denom
    vecs, denom = _nf_vectors(terms)
    exps, nums = [], []
    for e, vec in vecs.items():
        for j, x in enumerate(vec):
            if x:
                exps.append(e + (j,))
                nums.append(x)
    return np.array(exps, dtype=np.int64), nums, denom


def _mul_terms(ring: PolyRing, a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    field = ring.field
    if len(a) * len(b) <= _SMALL_PRODUCT:
        if field is None or field.degree == 1:
            return _mul_python(a, b)
        return _mul_python_nf(field, a, b)
    ea, na, da = _to_arrays(a, field)
    eb, nb_, db = _to_arrays(b, field)
    nv = ea.shape[1]
    top = ea.max(axis=0) + eb.max(axis=0)
    bits = max(1, int(top.max()).bit_length())
    if bits * nv > 62:
        if field is None or field.degree == 1:
            return _mul_python(a, b)
        return _mul_python_nf(field, a, b)
    keys, coefs = _kernels.mul(_kernels.pack(ea, bits), _kernels._as_int_array(na),
                               _kernels.pack(eb, bits), _kernels._as_int_array(nb_))
    exps = _kernels.unpack(keys, nv, bits).tolist()
    coefs = coefs.tolist()
    denom = da * db
    if field is None:
        return {tuple(e): Fraction(int(c), denom) for e, c in zip(exps, coefs)}
    width = 2 * field.degree - 1
    acc: dict = {}
    for e, c in zip(exps, coefs):
        mono = tuple(e[:-1])
        vec = acc.get(mono)
        if vec is None:
            vec = [0] * width
            acc[mono] = vec
        vec[e[-1]] += int(c)
    return _nf_finish(field, acc, denom)


# ---------------------------------------------------------------------------
# module-level operations

def poly_parse(text: str, ring: PolyRing) -> MultiPoly:
    """Parse ``text`` over ``ring``.  Parenthesised groups may contain the
    field generator, e.g. ``"(1/2 + 3/2*t)*x0^2 - x1"``."""
    field = ring.field

    def name(n: str, pos: int):
        if n in ring.index:
            return ring.var(n)
        if field is not None and n == field.symbol:
            return ring.const(field.gen())
        raise UnknownVariable(n, pos)

    value = parse_expression(text, ring.const, name)
    return ring(value)


def poly_diff(p: MultiPoly, var: str) -> MultiPoly:
    return p.diff(var)


def _square(matrix: Sequence[Sequence[MultiPoly]]) -> int:
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise NonSquare(f"{n} rows but a row of length {len(row)}")
    return n


def poly_det(matrix: Sequence[Sequence[MultiPoly]], ring: PolyRing | None = None) -> MultiPoly:
    """Determinant by division-free expansion over row subsets.

    Column ``k`` picks a row not yet used; partial products are memoised on
    the set of used rows, which costs ``O(n 2^n)`` polynomial products.
    """
    n = _square(matrix)
    if n == 0:
        if ring is None:
            raise NonSquare("empty matrix needs an explicit ring")
        return ring.one()
    ring = ring or matrix[0][0].ring
    rows = [[ring(x) for x in row] for row in matrix]
    layer: dict[int, MultiPoly] = {0: ring.one()}
    for k in range(n):
        nxt: dict[int, MultiPoly] = {}
        for mask, val in layer.items():
            for r in range(n):
                if mask >> r & 1:
                    continue
                entry = rows[r][k]
                if entry.is_zero():
                    continue
                term = val * entry
                if bin(mask >> (r + 1)).count("1") & 1:
                    term = -term
                key = mask | (1 << r)
                prev = nxt.get(key)
                nxt[key] = term if prev is None else prev + term
        layer = {m: v for m, v in nxt.items() if not v.is_zero()}
        if not layer:
            return ring.zero()
    return layer.get((1 << n) - 1, ring.zero())


def poly_det_cofactor(matrix: Sequence[Sequence[MultiPoly]], ring: PolyRing | None = None) -> MultiPoly:
    """Plain first-row cofactor expansion (reference implementation)."""
    n = _square(matrix)
    if n == 0:
        if ring is None:
            raise NonSquare("empty matrix needs an explicit ring")
        return ring.one()
    ring = ring or matrix[0][0].ring
    if n == 1:
        return ring(matrix[0][0])
    total = ring.zero()
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = ring(matrix[0][j]) * poly_det_cofactor(minor, ring)
        total = total - term if j % 2 else total + term
    return total


def poly_jacobian(fs: Sequence[MultiPoly], variables: Sequence[str]) -> MultiPoly:
    """``det(d f_i / d v_j)``; row ``i`` is ``fs[i]`` in argument order."""
    if len(fs) != len(variables):
        raise NonSquare(f"{len(fs)} functions for {len(variables)} variables")
    return poly_det([[f.diff(v) for v in variables] for f in fs], fs[0].ring)


def poly_bordered_hessian(f: MultiPoly, g: MultiPoly, variables: Sequence[str]) -> MultiPoly:
    """``det [[Hess f, grad g], [grad g^T, 0]]``."""
    ring = f.ring
    grad_f = [f.diff(v) for v in variables]
    grad_g = [g.diff(v) for v in variables]
    rows = [[grad_f[i].diff(v) for v in variables] + [grad_g[i]] for i in range(len(variables))]
    rows.append(grad_g + [ring.zero()])
    return poly_det(rows, ring)


def poly_subst(p: MultiPoly, assignment: Mapping[str, object],
               ring: PolyRing | None = None) -> MultiPoly:
    """Replace variables by polynomials or scalars.

    The result lives in ``ring`` (default: ``p.ring``).  A variable of ``p``
    that is neither assigned nor present in the target ring raises
    :class:`MissingAssignment`.
    """
    target = ring or p.ring
    for name in assignment:
        if name not in p.ring.index:
            raise UnknownVariable(name)
    images: list[MultiPoly | None] = []
    for name in p.ring.names:
        if name in assignment:
            v = assignment[name]
            if isinstance(v, MultiPoly):
                if v.ring != target:
                    if v.ring.names == target.names:
                        v = target.lift(v)
                    else:
                        raise RegistryMismatch(f"{v.ring} vs {target}")
            else:
                v = target.const(v)
            images.append(v)
        elif name in target.index:
            images.append(target.var(name))
        else:
            images.append(None)
    used = p.variables_used()
    for name in used:
        if images[p.ring.index[name]] is None:
            raise MissingAssignment(f"no value for {name}")
    pows: list[dict[int, MultiPoly]] = [dict() for _ in images]

    def power(i: int, k: int) -> MultiPoly:
        cache = pows[i]
        got = cache.get(k)
        if got is None:
            if k == 1:
                got = images[i]
            else:
                half = power(i, k // 2)
                got = half * half
                if k & 1:
                    got = got * images[i]
            cache[k] = got
        return got

    acc: dict = {}
    for e, c in p.terms.items():
        term = target.const(c)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        for e2, c2 in term.terms.items():
            v = acc.get(e2)
            acc[e2] = c2 if v is None else v + c2
    return MultiPoly(target, {e: c for e, c in acc.items() if c})


def poly_resultant(a: MultiPoly, b: MultiPoly, var: str) -> MultiPoly:
    """Sylvester resultant in ``var``; ``a`` fills the first ``deg b`` rows."""
    if a.ring != b.ring:
        raise RegistryMismatch(f"{a.ring} vs {b.ring}")
    if a.is_zero() or b.is_zero():
        raise ZeroPolynomial("resultant with the zero polynomial")
    ring = a.ring
    ca = a.coefficients_in(var)[::-1]
    cb = b.coefficients_in(var)[::-1]
    m, n = len(ca) - 1, len(cb) - 1
    size = m + n
    if size == 0:
        return ring.one()
    zero = ring.zero()
    rows = []
    for i in range(n):
        rows.append([zero] * i + ca + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + cb + [zero] * (size - n - 1 - i))
    return poly_det(rows, ring)


def poly_weighted_degree(p: MultiPoly, weights: Union[Mapping[str, int], Sequence[int]]) -> int:
    """The common weighted degree of all terms, or :class:`NotHomogeneous`."""
    if isinstance(weights, Mapping):
        w = [weights.get(n, 0) for n in p.ring.names]
    else:
        w = list(weights)
        if len(w) != p.ring.nvars:
            raise ValueError(f"{len(w)} weights for {p.ring.nvars} variables")
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no weighted degree")
    degrees = {sum(wi * ei for wi, ei in zip(w, e)) for e in p.terms}
    if len(degrees) != 1:
        raise NotHomogeneous(degrees)
    return degrees.pop()
