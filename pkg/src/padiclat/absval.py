"""The value group of a non-archimedean absolute value: {0} union p^Q.

An element is either the absorbing zero or the real number p^(-q) for an
exact rational q; only q is stored, so products, quotients, powers and
comparisons reduce to exact Fraction arithmetic.  Bigger exponent means
smaller value, and zero compares below everything.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class AbsValue:
    """p^(-exponent), or the absolute value 0 when exponent is None."""

    exponent: Fraction | None

    def __post_init__(self):
        if self.exponent is not None and not isinstance(self.exponent, Fraction):
            object.__setattr__(self, "exponent", Fraction(self.exponent))

    @staticmethod
    def zero() -> "AbsValue":
        return AbsValue(None)

    @staticmethod
    def one() -> "AbsValue":
        return AbsValue(Fraction(0))

    @staticmethod
    def from_exponent(q) -> "AbsValue":
        return AbsValue(Fraction(q))

    @staticmethod
    def from_valuation(v) -> "AbsValue":
        """|x| = p^(-v(x)); v = +infinity encodes x = 0."""
        if v == float("inf"):
            return AbsValue(None)
        return AbsValue(Fraction(v))

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def __bool__(self) -> bool:
        return self.exponent is not None

    def __mul__(self, other: "AbsValue") -> "AbsValue":
        if not isinstance(other, AbsValue):
            return NotImplemented
        if self.exponent is None or other.exponent is None:
            return AbsValue(None)
        return AbsValue(self.exponent + other.exponent)

    def __truediv__(self, other: "AbsValue") -> "AbsValue":
        if not isinstance(other, AbsValue):
            return NotImplemented
        if other.exponent is None:
            raise ZeroDivisionError("division by the zero absolute value")
        if self.exponent is None:
            return AbsValue(None)
        return AbsValue(self.exponent - other.exponent)

    def __pow__(self, e) -> "AbsValue":
        e = Fraction(e)
        if self.exponent is None:
            if e > 0:
                return AbsValue(None)
            raise ZeroDivisionError("zero absolute value to a non-positive power")
        return AbsValue(self.exponent * e)

    def __lt__(self, other: "AbsValue") -> bool:
        if not isinstance(other, AbsValue):
            return NotImplemented
        if self.exponent is None:
            return other.exponent is not None
        if other.exponent is None:
            return False
        return self.exponent > other.exponent

    def __le__(self, other: "AbsValue") -> bool:
        return self == other or self < other

    def __gt__(self, other: "AbsValue") -> bool:
        if not isinstance(other, AbsValue):
            return NotImplemented
        return other < self

    def __ge__(self, other: "AbsValue") -> bool:
        return self == other or self > other

    def display(self, p: int) -> str:
        """Human-readable exact value, e.g. '2^(-5/3)', '3^0', '0'."""
        if self.exponent is None:
            return "0"
        e = -self.exponent
        if e.denominator == 1:
            n = e.numerator
            return f"{p}^{n}" if n >= 0 else f"{p}^({n})"
        return f"{p}^({e.numerator}/{e.denominator})"

    def __repr__(self) -> str:
        if self.exponent is None:
            return "AbsValue(zero)"
        return f"AbsValue(p^-{self.exponent})"
