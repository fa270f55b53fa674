"""Split-complex (hyperbolic) numbers in idempotent coordinates.

A hyperbolic number a + k*b (with k*k = 1, k not real) splits over the
idempotents e1 = (1 + k)/2 and e2 = (1 - k)/2 into the pair
(a + b, a - b).  In that basis every ring operation acts componentwise,
which is what the whole package leans on: the canonical representation
here is the (e1, e2) pair, and the standard (a, b) form is only a view.

Values are immutable and every operation is pure, so instances can be
shared freely across threads.
"""

import math
from dataclasses import dataclass
from enum import Enum


class Order(Enum):
    """Outcome of comparing two hyperbolic numbers componentwise."""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


class ZeroDivisorDivision(ZeroDivisionError):
    """Divisor is a zero divisor (exactly one idempotent part is zero)."""


class DomainError(ValueError):
    """Argument outside the domain of the requested function."""


class EmptyInterval(ValueError):
    """Interval bounds do not satisfy lo <= hi componentwise."""


@dataclass(frozen=True)
class Hyperbolic:
    """A hyperbolic number stored as its e1 and e2 idempotent parts.

    Both parts must be finite; constructors reject NaN and infinities,
    and arithmetic that overflows to a non-finite value raises
    OverflowError instead of propagating it.
    """

    e1: float
    e2: float

    def __post_init__(self):
        e1 = float(self.e1)
        e2 = float(self.e2)
        if not (math.isfinite(e1) and math.isfinite(e2)):
            raise ValueError(f"hyperbolic parts must be finite, got ({e1!r}, {e2!r})")
        object.__setattr__(self, "e1", e1)
        object.__setattr__(self, "e2", e2)

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_real(cls, x):
        """Embed a real x as x*e1 + x*e2."""
        return cls(x, x)

    @classmethod
    def from_standard(cls, a, b):
        """Build a + k*b; in idempotent parts that is (a + b, a - b)."""
        return cls(a + b, a - b)

    def to_standard(self):
        """Return (a, b) with self == a + k*b."""
        return (self.e1 + self.e2) / 2.0, (self.e1 - self.e2) / 2.0

    # -- predicates ------------------------------------------------------

    def is_zero(self):
        return self.e1 == 0.0 and self.e2 == 0.0

    def is_zero_divisor(self):
        """True iff exactly one part is zero (the element is on an axis)."""
        return (self.e1 == 0.0) != (self.e2 == 0.0)

    def is_invertible(self):
        return self.e1 != 0.0 and self.e2 != 0.0

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _checked(self.e1 + other.e1, self.e2 + other.e2)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _checked(self.e1 - other.e1, self.e2 - other.e2)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _checked(other.e1 - self.e1, other.e2 - self.e2)

    def __neg__(self):
        return Hyperbolic(-self.e1, -self.e2)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _checked(self.e1 * other.e1, self.e2 * other.e2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("hyperbolic division by zero")
        if other.is_zero_divisor():
            raise ZeroDivisorDivision(
                "hyperbolic division by a zero divisor (one part is zero)"
            )
        return _checked(self.e1 / other.e1, self.e2 / other.e2)

    def __abs__(self):
        return Hyperbolic(abs(self.e1), abs(self.e2))

    # -- partial order ---------------------------------------------------

    def compare(self, other):
        """Componentwise comparison; INCOMPARABLE when parts disagree."""
        le = self.e1 <= other.e1 and self.e2 <= other.e2
        ge = self.e1 >= other.e1 and self.e2 >= other.e2
        if le and ge:
            return Order.EQUAL
        if le:
            return Order.LESS
        if ge:
            return Order.GREATER
        return Order.INCOMPARABLE

    def __le__(self, other):
        return self.e1 <= other.e1 and self.e2 <= other.e2

    def __ge__(self, other):
        return self.e1 >= other.e1 and self.e2 >= other.e2

    def __lt__(self, other):
        return self.compare(other) is Order.LESS

    def __gt__(self, other):
        return self.compare(other) is Order.GREATER

    def within(self, lo, hi):
        """Membership in the componentwise box [lo, hi]."""
        if not lo <= hi:
            raise EmptyInterval(f"interval bounds not ordered: {lo} .. {hi}")
        return lo <= self and self <= hi

    # -- metric and logarithm ---------------------------------------------

    def distance(self, other):
        """Componentwise absolute difference; a hyperbolic-valued metric."""
        return Hyperbolic(abs(self.e1 - other.e1), abs(self.e2 - other.e2))

    def log(self):
        """Componentwise natural log; defined for strictly positive parts."""
        if self.e1 <= 0.0 or self.e2 <= 0.0:
            raise DomainError(f"log requires strictly positive parts, got {self}")
        return Hyperbolic(math.log(self.e1), math.log(self.e2))

    # -- text form ---------------------------------------------------------

    def to_text(self):
        """Render as "E1 <decimal> E2 <decimal>" with round-trip decimals."""
        return f"E1 {self.e1!r} E2 {self.e2!r}"

    @classmethod
    def from_text(cls, text):
        """Parse the to_text() form back into a value."""
        parts = text.split()
        if len(parts) != 4 or parts[0] != "E1" or parts[2] != "E2":
            raise ValueError(f"expected 'E1 <num> E2 <num>', got {text!r}")
        return cls(float(parts[1]), float(parts[3]))

    def __str__(self):
        return self.to_text()


def _coerce(value):
    if isinstance(value, Hyperbolic):
        return value
    if isinstance(value, (int, float)):
        return Hyperbolic(value, value)
    return NotImplemented


def _checked(e1, e2):
    if not (math.isfinite(e1) and math.isfinite(e2)):
        raise OverflowError(f"hyperbolic operation overflowed to ({e1!r}, {e2!r})")
    return Hyperbolic(e1, e2)


def embed(x):
    """Embed a real number x as x*e1 + x*e2."""
    return Hyperbolic.from_real(x)


ZERO = Hyperbolic(0.0, 0.0)
ONE = Hyperbolic(1.0, 1.0)
E1 = Hyperbolic(1.0, 0.0)
E2 = Hyperbolic(0.0, 1.0)
