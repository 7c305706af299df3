"""Field descriptors for Q_p and F_p((T)) and their computable scalars.

Scalars are exact elements of the dense subfields Q (as
``fractions.Fraction``) and F_p(T) (as :class:`~padiclat.gfpoly.RatFunc`);
the descriptor knows how to construct, parse, format and value them.
Valuations are p-adic for Q_p and T-adic for F_p((T)), returning an
integer or +infinity for zero.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from .absval import AbsValue
from .gfpoly import Poly, RatFunc, poly_to_str

Scalar = Union[Fraction, RatFunc]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class ScalarParseError(ValueError):
    pass


class FieldKind(str, Enum):
    QP = "Qp"
    FP_LAURENT = "FpLaurent"


_QP_SCALAR_RE = re.compile(r"[+-]?\d+(?:/\d+)?")
_TERM_RE = re.compile(r"(?:(\d+)\*)?T(?:\^(\d+))?|(\d+)")


@dataclass(frozen=True)
class FieldDesc:
    """Which local field (Q_p or F_p((T))) and for which prime p."""

    kind: FieldKind
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")

    @classmethod
    def qp(cls, p: int) -> "FieldDesc":
        return cls(FieldKind.QP, p)

    @classmethod
    def laurent(cls, p: int) -> "FieldDesc":
        return cls(FieldKind.FP_LAURENT, p)

    def zero(self) -> Scalar:
        if self.kind is FieldKind.QP:
            return Fraction(0)
        return RatFunc.zero(self.p)

    def one(self) -> Scalar:
        if self.kind is FieldKind.QP:
            return Fraction(1)
        return RatFunc.one(self.p)

    def from_int(self, n: int) -> Scalar:
        if self.kind is FieldKind.QP:
            return Fraction(n)
        return RatFunc.constant(self.p, n)

    def coerce(self, x) -> Scalar:
        """Normalize to the field's canonical scalar type (ints allowed)."""
        if self.kind is FieldKind.QP:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
        else:
            if isinstance(x, int):
                return RatFunc.constant(self.p, x)
            if isinstance(x, Poly):
                return RatFunc(x)
            if isinstance(x, RatFunc) and x.p == self.p:
                return x
        raise TypeError(f"cannot interpret {x!r} as a scalar of {self!r}")

    def uniformizer(self) -> Scalar:
        """p itself, resp. T: the canonical element of valuation 1."""
        if self.kind is FieldKind.QP:
            return Fraction(self.p)
        return RatFunc(Poly.monomial(self.p, 1, 1))

    def check_scalar(self, x: Scalar) -> None:
        if self.kind is FieldKind.QP:
            if not isinstance(x, Fraction):
                raise TypeError(f"expected a Fraction over Q_{self.p}, got {type(x).__name__}")
        else:
            if not isinstance(x, RatFunc) or x.p != self.p:
                raise TypeError(f"expected a RatFunc over F_{self.p}(T), got {x!r}")

    def valuation(self, x: Scalar) -> int | float:
        """p-adic (resp. T-adic) valuation; +infinity for zero."""
        if self.kind is FieldKind.QP:
            x = Fraction(x)
            if x == 0:
                return math.inf
            return _int_val(x.numerator, self.p) - _int_val(x.denominator, self.p)
        if x.is_zero():
            return math.inf
        return x.num.order() - x.den.order()

    def abs_value(self, x: Scalar) -> AbsValue:
        return AbsValue.from_valuation(self.valuation(x))

    def is_integral(self, x: Scalar) -> bool:
        """Member of the coefficient ring Z_p, resp. F_p[[T]]."""
        return self.valuation(x) >= 0

    def is_unit(self, x: Scalar) -> bool:
        return self.valuation(x) == 0

    def parse_scalar(self, text: str) -> Scalar:
        text = text.strip()
        if self.kind is FieldKind.QP:
            if not _QP_SCALAR_RE.fullmatch(text):
                raise ScalarParseError(f"invalid rational scalar {text!r}")
            try:
                return Fraction(text)
            except ZeroDivisionError:
                raise ScalarParseError(f"zero denominator in {text!r}") from None
        parts = text.split("/")
        if len(parts) > 2:
            raise ScalarParseError(f"too many '/' in {text!r}")
        num = self._parse_poly(parts[0])
        den = self._parse_poly(parts[1]) if len(parts) == 2 else Poly.one(self.p)
        if den.is_zero():
            raise ScalarParseError(f"zero denominator in {text!r}")
        return RatFunc(num, den)

    def _parse_poly(self, text: str) -> Poly:
        text = text.strip()
        if not text:
            raise ScalarParseError("empty polynomial")
        coeffs: dict[int, int] = {}
        for term in text.split("+"):
            term = term.strip()
            m = _TERM_RE.fullmatch(term)
            if not m:
                raise ScalarParseError(f"invalid polynomial term {term!r}")
            if m.group(3) is not None:
                c, k = int(m.group(3)), 0
            else:
                c = int(m.group(1)) if m.group(1) is not None else 1
                k = int(m.group(2)) if m.group(2) is not None else 1
            coeffs[k] = coeffs.get(k, 0) + c
        out = [0] * (max(coeffs) + 1)
        for k, c in coeffs.items():
            out[k] = c
        return Poly(self.p, out)

    def format_scalar(self, x: Scalar) -> str:
        """Canonical text form; parse_scalar(format_scalar(x)) == x exactly."""
        if self.kind is FieldKind.QP:
            return str(Fraction(x))
        if x.den == Poly.one(self.p):
            return poly_to_str(x.num)
        return f"{poly_to_str(x.num)}/{poly_to_str(x.den)}"

    def __repr__(self) -> str:
        if self.kind is FieldKind.QP:
            return f"FieldDesc(Q_{self.p})"
        return f"FieldDesc(F_{self.p}((T)))"


def _int_val(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v
