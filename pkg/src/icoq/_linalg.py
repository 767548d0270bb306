"""Small exact matrices over Q or a number field.

Entries are ``Fraction`` or ``NFElement``; both support the field
operations, so the routines below are written once for either.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence


class Mat:
    """Immutable square-or-rectangular matrix with hashable entries."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = tuple(tuple(r) for r in rows)
        self._hash = None

    @classmethod
    def identity(cls, n: int, one=Fraction(1)) -> "Mat":
        zero = one * 0
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other):
        if isinstance(other, Mat):
            cols = list(zip(*other.rows))
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    acc = None
                    for a, b in zip(r, c):
                        if a and b:
                            acc = a * b if acc is None else acc + a * b
                    row.append(acc if acc is not None else r[0] * 0)
                out.append(row)
            return Mat(out)
        return Mat([[a * other for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __add__(self, other: "Mat") -> "Mat":
        return Mat([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Mat") -> "Mat":
        return Mat([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Mat":
        return Mat([[-a for a in r] for r in self.rows])

    def __eq__(self, other):
        return isinstance(other, Mat) and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        return "Mat([" + ", ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.rows) + "])"

    def map(self, fn: Callable) -> "Mat":
        return Mat([[fn(a) for a in r] for r in self.rows])

    def transpose(self) -> "Mat":
        return Mat(list(zip(*self.rows)))

    def trace(self):
        acc = self.rows[0][0] * 0
        for i in range(len(self.rows)):
            acc = acc + self.rows[i][i]
        return acc

    def det(self):
        return det([list(r) for r in self.rows])

    def inverse(self) -> "Mat":
        n = len(self.rows)
        one = self.rows[0][0] * 0 + 1
        aug = [list(r) + [one if i == j else one * 0 for j in range(n)] for i, r in enumerate(self.rows)]
        reduced, pivots = rref(aug)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return Mat([row[n:] for row in reduced[:n]])

    def is_identity(self) -> bool:
        n = len(self.rows)
        return all((self.rows[i][j] == 1) if i == j else (not self.rows[i][j])
                   for i in range(n) for j in range(n))


def kron(a: Mat, b: Mat) -> Mat:
    ra, ca = a.shape
    rb, cb = b.shape
    return Mat([[a.rows[i // rb][j // cb] * b.rows[i % rb][j % cb] for j in range(ca * cb)]
                for i in range(ra * rb)])


def rref(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns (copies the input)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        prow = [x * inv if x else x for x in m[r]]
        m[r] = prow
        # columns left of c are already zero in the pivot row
        tail = [(j, y) for j, y in enumerate(prow) if j >= c and y]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                row = m[i]
                for j, y in tail:
                    row[j] = row[j] - f * y
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows: list[list]) -> int:
    return len(rref(rows)[1])


def det(rows: list[list]):
    """Determinant by Gaussian elimination with exact pivots."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    acc = m[0][0] * 0 + 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return m[0][0] * 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        p = m[c][c]
        acc = acc * p
        inv = 1 / p
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return acc if sign > 0 else -acc


def column_space_basis(rows: list[list]) -> list[int]:
    """Indices of pivot columns, a basis of the column space."""
    return rref(rows)[1]


def solve_left_inverse(cols: list[list]) -> list[list]:
    """Left inverse ``L`` (k x n) of an n x k matrix of full column rank."""
    n, k = len(cols), len(cols[0])
    one = cols[0][0] * 0 + 1
    zero = one * 0
    # row reducing [B | I] gives E with E B = rref(B) = [I; 0]
    aug = [list(cols[i]) + [one if i == j else zero for j in range(n)] for i in range(n)]
    reduced, pivots = rref(aug)
    if pivots[:k] != list(range(k)):
        raise ValueError("columns are not independent")
    return [row[k:] for row in reduced[:k]]


def nullspace(rows: list[list]) -> list[list]:
    """Basis of ``{v : rows * v = 0}``, one vector per free column."""
    if not rows:
        return []
    ncols = len(rows[0])
    reduced, pivots = rref(rows)
    one = rows[0][0] * 0 + 1
    zero = one * 0
    basis = []
    pivot_set = set(pivots)
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [zero] * ncols
        v[free] = one
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][free]
        basis.append(v)
    return basis
