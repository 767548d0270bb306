"""Exact rationals and simple algebraic number fields.

Rationals are :class:`fractions.Fraction`; nothing here reimplements them.
A number field is ``Q[t]/(f)`` for a monic irreducible ``f`` with rational
coefficients.  Elements are stored as coordinate tuples on the power basis
``1, t, ..., t^(d-1)`` and every operation reduces eagerly, so two equal
elements always have identical coordinates.

Irreducibility is checked when a field is built, using the rational root
test and Kronecker's interpolation search for factors up to half the degree.
That is plenty for the quadratic, cubic and quartic fields used here.
"""

from __future__ import annotations

import cmath
import itertools
import math
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np

from ._parse import format_rational, parse_expression
from .errors import (DivisionByZero, FieldMismatch, NotMonic,
                     ReduciblePolynomial, RootIndexOutOfRange, UnknownVariable)

Rational = Fraction
Scalar = Union[int, Fraction, "NFElement"]

__all__ = [
    "Rational", "NumberField", "NFElement", "nf_make", "nf_embed",
    "q_zeta5", "sqrt5_in", "as_fraction",
]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# dense univariate helpers; coefficient lists are low degree first

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _uni_divmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise DivisionByZero("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bi in enumerate(b):
            a[i + shift] -= c * bi
        a.pop()
        _trim(a)
    return _trim(q), a


def _uni_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _uni_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


def _uni_xgcd(a, b):
    """Return ``(g, s)`` with ``s*a = g (mod b)`` and ``g = gcd(a, b)``."""
    r0, r1 = _trim(list(a)), _trim(list(b))
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = _uni_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _uni_sub(s0, _uni_mul(q, s1))
    return r0, s0


def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _primitive_integer(coeffs: Sequence[Fraction]) -> list[int]:
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints]


def _horner(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _lagrange(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    out: list[Fraction] = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j != i:
                basis = _uni_mul(basis, [Fraction(-xj), Fraction(1)])
                denom *= xi - xj
        scale = Fraction(yi, denom)
        if len(out) < len(basis):
            out.extend([Fraction(0)] * (len(basis) - len(out)))
        for k, b in enumerate(basis):
            out[k] += scale * b
    return _trim(out)


def find_factor(coeffs: Sequence[Fraction]) -> list[Fraction] | None:
    """Return a nontrivial rational factor of ``coeffs`` or ``None``.

    Searches degrees ``1 .. deg // 2``: rational roots first, then
    Kronecker interpolation through integer sample points.
    """
    f = _primitive_integer(_trim([as_fraction(c) for c in coeffs]))
    n = len(f) - 1
    if n <= 1:
        return None
    if f[0] == 0:
        return [Fraction(0), Fraction(1)]
    for p in _int_divisors(f[0]):
        for q in _int_divisors(f[-1]):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if _horner(f, r) == 0:
                    return [-r, Fraction(1)]
    ff = [Fraction(c) for c in f]
    for k in range(2, n // 2 + 1):
        xs: list[int] = []
        x = 0
        while len(xs) < k + 1:
            xs.append(x)
            x = -x if x > 0 else -x + 1
        values = [_horner(f, xi) for xi in xs]
        choices = [_int_divisors(v) for v in values]
        signed = [choices[0]] + [[s * d for d in ds for s in (1, -1)] for ds in choices[1:]]
        for ys in itertools.product(*signed):
            g = _lagrange(xs, ys)
            if len(g) - 1 != k or any(c.denominator != 1 for c in g):
                continue
            _, rem = _uni_divmod(ff, g)
            if not rem:
                return g
    return None


# ---------------------------------------------------------------------------

class NumberField:
    """``Q[symbol]/(minpoly)``; ``minpoly`` is given low degree first."""

    def __init__(self, minpoly: Sequence, symbol: str = "t", *, check: bool = True):
        coeffs = _trim([as_fraction(c) for c in minpoly])
        if len(coeffs) < 2:
            raise ReduciblePolynomial("minimal polynomial must have degree at least 1")
        if coeffs[-1] != 1:
            raise NotMonic(f"leading coefficient is {coeffs[-1]}, expected 1")
        if check and find_factor(coeffs) is not None:
            raise ReduciblePolynomial(f"{_format_uni(coeffs, symbol)} is reducible over Q")
        self.minpoly = tuple(coeffs)
        self.symbol = symbol
        self.degree = len(coeffs) - 1
        d = self.degree
        # coordinates of t^k for k = d .. 2d-2, used by multiplication
        red: list[list[Fraction]] = []
        cur = [-c for c in coeffs[:-1]]
        for _ in range(max(d - 1, 0)):
            red.append(cur)
            top = cur[-1]
            nxt = [Fraction(0)] + cur[:-1]
            cur = [nxt[i] - top * coeffs[i] for i in range(d)]
        self._red = red
        # the same table scaled to integers: t^k = (row) / scale
        scale = 1
        for r in red:
            for c in r:
                scale = scale * c.denominator // math.gcd(scale, c.denominator)
        self._red_int = ([[int(c * scale) for c in r] for r in red], scale)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly \
            and self.symbol == other.symbol

    def __hash__(self):
        return hash((self.minpoly, self.symbol))

    def __repr__(self):
        return f"NumberField({_format_uni(self.minpoly, self.symbol)!r})"

    def __str__(self):
        return f"Q[{self.symbol}]/({_format_uni(self.minpoly, self.symbol)})"

    # construction helpers
    def __call__(self, value) -> "NFElement":
        if isinstance(value, NFElement):
            if value.field != self:
                raise FieldMismatch(f"{value.field} vs {self}")
            return value
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            return NFElement(self, nums=(value.numerator,) + (0,) * (self.degree - 1),
                             den=value.denominator)
        if isinstance(value, str):
            return self.parse(value)
        coords = [as_fraction(c) for c in value]
        if len(coords) > self.degree:
            return self.from_poly(coords)
        coords += [Fraction(0)] * (self.degree - len(coords))
        return NFElement(self, tuple(coords))

    def from_poly(self, coeffs: Sequence) -> "NFElement":
        _, rem = _uni_divmod([as_fraction(c) for c in coeffs], self.minpoly)
        return self(rem or [0])

    def zero(self) -> "NFElement":
        return NFElement(self, nums=(0,) * self.degree, den=1)

    def one(self) -> "NFElement":
        return self(1)

    def gen(self) -> "NFElement":
        if self.degree == 1:
            return self(-self.minpoly[0])
        return self([0, 1])

    def parse(self, text: str) -> "NFElement":
        """Parse text such as ``"1/2 + 3/2*t"``."""
        def name(n, pos):
            if n != self.symbol:
                raise UnknownVariable(n, pos)
            return self.gen()
        return self(parse_expression(text, self, name))

    @cached_property
    def embeddings(self) -> tuple[complex, ...]:
        """Complex roots of the minimal polynomial in a fixed order.

        Roots are sorted by argument in ``[0, 2*pi)``, then by modulus, so
        index 0 is the positive real root when one exists and
        ``exp(2*pi*i/n)`` for cyclotomic fields.
        """
        hi_first = [float(c) for c in reversed(self.minpoly)]
        roots = np.roots(hi_first) if self.degree > 0 else []
        polished = []
        deriv = [k * self.minpoly[k] for k in range(1, len(self.minpoly))]
        fc = [complex(float(c)) for c in self.minpoly]
        dc = [complex(float(c)) for c in deriv]
        for r in roots:
            z = complex(r)
            for _ in range(8):
                fz = _horner(fc, z)
                dz = _horner(dc, z)
                if dz == 0:
                    break
                z -= fz / dz
            scale = max(1.0, abs(z))
            if abs(z.imag) < 1e-12 * scale:
                z = complex(z.real, 0.0)
            polished.append(z)

        def key(z: complex):
            arg = cmath.phase(z) % (2 * math.pi)
            if arg > 2 * math.pi - 1e-12:
                arg = 0.0
            return (round(arg, 9), abs(z))
        return tuple(sorted(polished, key=key))


class NFElement:
    """An element of a :class:`NumberField`; immutable and hashable.

    Stored as integer numerators ``n`` over one positive denominator ``d``
    with ``gcd(d, *n) == 1``, so equal elements have equal representations.
    """

    __slots__ = ("field", "n", "d")

    def __init__(self, field: NumberField, coords=None, *, nums=None, den: int = 1):
        self.field = field
        if nums is None:
            fr = [as_fraction(x) for x in coords]
            den = 1
            for x in fr:
                den = den * x.denominator // math.gcd(den, x.denominator)
            nums = [x.numerator * (den // x.denominator) for x in fr]
        g = den
        for x in nums:
            if g == 1:
                break
            g = math.gcd(g, x)
        if den < 0:
            g = -g
        if g != 1:
            nums = [x // g for x in nums]
            den //= g
        self.n = tuple(nums)
        self.d = den

    @property
    def c(self) -> tuple[Fraction, ...]:
        """Rational coordinates on the power basis."""
        return tuple(Fraction(x, self.d) for x in self.n)

    def _make(self, nums, den) -> "NFElement":
        return NFElement(self.field, nums=nums, den=den)

    # coercion -----------------------------------------------------------
    def _other(self, other) -> "NFElement | None":
        if isinstance(other, NFElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, int):
            return NFElement(self.field, nums=(other,) + (0,) * (self.field.degree - 1), den=1)
        if isinstance(other, Fraction):
            return NFElement(self.field, nums=(other.numerator,) + (0,) * (self.field.degree - 1),
                             den=other.denominator)
        return None

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.d == o.d:
            return self._make([a + b for a, b in zip(self.n, o.n)], self.d)
        return self._make([a * o.d + b * self.d for a, b in zip(self.n, o.n)], self.d * o.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.d == o.d:
            return self._make([a - b for a, b in zip(self.n, o.n)], self.d)
        return self._make([a * o.d - b * self.d for a, b in zip(self.n, o.n)], self.d * o.d)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return NFElement(self.field, nums=[-a for a in self.n], den=self.d)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, int):
            return self._make([a * other for a in self.n], self.d)
        if isinstance(other, Fraction):
            return self._make([a * other.numerator for a in self.n], self.d * other.denominator)
        o = self._other(other)
        if o is None:
            return NotImplemented
        nums, scale = _nf_mul(self.field, self.n, o.n)
        return self._make(nums, self.d * o.d * scale)

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if not self:
            raise DivisionByZero("inverse of zero in a number field")
        if self.is_rational():
            return self.field(1 / self.rational())
        g, s = _uni_xgcd(list(self.c), list(self.field.minpoly))
        # g is a nonzero constant because the modulus is irreducible
        inv_g = 1 / g[0]
        return self.field.from_poly([x * inv_g for x in s])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, NFElement):
            self._other(other)
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
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
        if isinstance(other, NFElement):
            return self.n == other.n and self.d == other.d and self.field == other.field
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.n[0], self.d) == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.n[0], self.d))
        return hash((self.field, self.n, self.d))

    def __bool__(self):
        return any(self.n)

    # inspection ---------------------------------------------------------
    def is_rational(self) -> bool:
        return not any(self.n[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.n[0], self.d)

    def embed(self, root_index: int = 0) -> complex:
        return nf_embed(self, root_index)

    def map_generator(self, image: "NFElement") -> "NFElement":
        """Evaluate the coordinate polynomial at ``image`` (a field map)."""
        acc = image.field.zero()
        for c in reversed(self.c):
            acc = acc * image + c
        return acc

    def __str__(self):
        return _format_uni(self.c, self.field.symbol, ascending=True)

    def __repr__(self):
        return f"NFElement({str(self)!r}, {self.field.symbol}^{self.field.degree})"


def _nf_mul(field: NumberField, a, b) -> tuple[list[int], int]:
    """Integer numerators of ``a*b`` and an extra denominator factor."""
    d = field.degree
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    if d == 1:
        return prod, 1
    red, scale = field._red_int
    out = [x * scale for x in prod[:d]] if scale != 1 else prod[:d]
    for k in range(d, 2 * d - 1):
        pk = prod[k]
        if pk:
            for m, r in enumerate(red[k - d]):
                if r:
                    out[m] += pk * r
    return out, scale


def _format_uni(coeffs: Iterable[Fraction], symbol: str, ascending: bool = False) -> str:
    items = [(k, c) for k, c in enumerate(coeffs) if c != 0]
    if not ascending:
        items.reverse()
    if not items:
        return "0"
    out = []
    for idx, (k, c) in enumerate(items):
        neg = c < 0
        a = -c if neg else c
        if k == 0:
            body = format_rational(a)
        else:
            mono = symbol if k == 1 else f"{symbol}^{k}"
            body = mono if a == 1 else f"{format_rational(a)}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# module-level entry points

def nf_make(minpoly: Union[str, Sequence], symbol: str = "t") -> NumberField:
    """Build a number field from ``"t^2 - 5"`` or ascending coefficients."""
    if isinstance(minpoly, str):
        from .multipoly import PolyRing
        p = PolyRing((symbol,)).parse(minpoly)
        coeffs = [Fraction(0)] * (p.total_degree() + 1)
        for (e,), c in p.terms.items():
            coeffs[e] = c
        return NumberField(coeffs, symbol)
    return NumberField(minpoly, symbol)


def nf_embed(a: NFElement, root_index: int = 0) -> complex:
    roots = a.field.embeddings
    if not 0 <= root_index < len(roots):
        raise RootIndexOutOfRange(f"root index {root_index} outside 0..{len(roots) - 1}")
    r = roots[root_index]
    acc = 0j
    for c in reversed(a.c):
        acc = acc * r + float(c)
    return acc


_ZETA5 = None


def q_zeta5() -> NumberField:
    """The fifth cyclotomic field ``Q[t]/(t^4 + t^3 + t^2 + t + 1)``."""
    global _ZETA5
    if _ZETA5 is None:
        _ZETA5 = NumberField([1, 1, 1, 1, 1], "t")
    return _ZETA5


def sqrt5_in(field: NumberField) -> NFElement:
    """The positive square root of 5 as an element of ``field``.

    Inside the fifth cyclotomic field this is ``2*t + 2*t^4 + 1``; the sign
    is fixed by the principal embedding.
    """
    if field == q_zeta5():
        z = field.gen()
        s = 2 * z + 2 * z ** 4 + 1
    elif field.minpoly == (Fraction(-5), Fraction(0), Fraction(1)):
        s = field.gen()
    else:
        raise ValueError(f"no fixed square root of 5 in {field}")
    assert s * s == 5
    if nf_embed(s, 0).real < 0:
        s = -s
    return s
