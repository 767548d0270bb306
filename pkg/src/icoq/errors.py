"""Exception types raised across the package.

Every error derives from :class:`IcoqError` so callers (and the CLI) can
catch the whole family at once.  Errors that describe a bad argument also
derive from :class:`ValueError`.
"""

from __future__ import annotations


class IcoqError(Exception):
    """Base class for all package errors."""


# exact fields
class ReduciblePolynomial(IcoqError, ValueError):
    """The proposed minimal polynomial factors over the rationals."""


class NotMonic(IcoqError, ValueError):
    """The proposed minimal polynomial does not have leading coefficient 1."""


class FieldMismatch(IcoqError, TypeError):
    """Operands live in different number fields."""


class DivisionByZero(IcoqError, ZeroDivisionError):
    """Inverse of the zero element was requested."""


class RootIndexOutOfRange(IcoqError, IndexError):
    """A complex embedding index outside ``range(degree)``."""


# polynomials
class PolySyntaxError(IcoqError, ValueError):
    """Malformed polynomial text.  ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariable(IcoqError, ValueError):
    """A variable name that is not part of the ring."""

    def __init__(self, name: str, position: int | None = None):
        where = "" if position is None else f" at position {position}"
        super().__init__(f"unknown variable {name!r}{where}")
        self.name = name
        self.position = position


class RegistryMismatch(IcoqError, TypeError):
    """Operands were built over different variable registries or fields."""


class NonSquare(IcoqError, ValueError):
    """Determinant of a non-square matrix."""


class MissingAssignment(IcoqError, ValueError):
    """Substitution left a variable without a value."""


class ZeroPolynomial(IcoqError, ValueError):
    """An operation that needs a nonzero polynomial received zero."""


class NotHomogeneous(IcoqError, ValueError):
    """Terms have more than one weighted degree; ``degrees`` lists them."""

    def __init__(self, degrees):
        self.degrees = frozenset(degrees)
        super().__init__(f"not weighted homogeneous: degrees {sorted(self.degrees)}")


# symmetric functions
class IndexOutOfRange(IcoqError, ValueError):
    """Elementary symmetric index outside ``1..n``."""


class NotSymmetric(IcoqError, ValueError):
    """The polynomial is not invariant under the symmetric group."""


class InternalInconsistency(IcoqError, RuntimeError):
    """Two independent computations of the same object disagree."""


# groups
class OrderBoundExceeded(IcoqError, RuntimeError):
    """Group closure grew past the configured bound."""


class NotASubgroup(IcoqError, ValueError):
    """A set of elements that is not closed under multiplication."""


class UnrecognizedType(IcoqError, ValueError):
    """Group fingerprint matches none of the known isomorphism types."""


# representations
class GroupMismatch(IcoqError, TypeError):
    """Representations of different groups were combined."""


class NonIntegralDimension(IcoqError, ArithmeticError):
    """A Molien coefficient came out non-integral."""


# invariants
class PinFailure(IcoqError, RuntimeError):
    """Generators failed one of their defining checks."""


class WrongInvariantDimension(IcoqError, RuntimeError):
    """An invariant space has an unexpected dimension."""


# singularities
class PointNotOnCurve(IcoqError, ValueError):
    """The curve does not vanish at the requested point."""


class CommonComponent(IcoqError, ValueError):
    """The two curves share a component through the point."""


class NonIsolated(IcoqError, ValueError):
    """The singular point is not isolated (infinite Milnor number)."""


# weighted projective arithmetic
class NonPositiveDegree(IcoqError, ValueError):
    """Weights or degrees that must be positive are not."""


# command line
class UnknownSuite(IcoqError, ValueError):
    """A verification suite name that is not registered."""
