"""Arithmetic in F_p[T] and its fraction field F_p(T).

Polynomials are dense coefficient tuples, lowest degree first, with
canonical coefficients in 0..p-1 and no trailing zeros (the zero
polynomial is the empty tuple).  Rational functions are reduced
quotients with a monic denominator, so two equal values always have
identical representations and ``==`` is mathematical equality.

These are the computable scalars dense in F_p((T)); the order of
vanishing at T = 0 plays the role the p-adic valuation plays for Q.
"""

from __future__ import annotations

from typing import Iterable


class Poly:
    """Immutable polynomial over Z/p, stored as a coefficient tuple."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, p: int) -> "Poly":
        return cls(p, ())

    @classmethod
    def one(cls, p: int) -> "Poly":
        return cls(p, (1,))

    @classmethod
    def constant(cls, p: int, c: int) -> "Poly":
        return cls(p, (c,))

    @classmethod
    def monomial(cls, p: int, c: int, k: int) -> "Poly":
        """c * T^k"""
        return cls(p, (0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree, with the convention degree(0) = -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def order(self) -> int:
        """Multiplicity of the root T = 0 (undefined for the zero polynomial)."""
        if not self.coeffs:
            raise ValueError("order of the zero polynomial is undefined")
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise AssertionError("unnormalized polynomial")

    def leading_coeff(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def _check(self, other: "Poly") -> None:
        if self.p != other.p:
            raise ValueError(f"polynomials over different fields: F_{self.p} vs F_{other.p}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return Poly(self.p, out)

    def __neg__(self) -> "Poly":
        return Poly(self.p, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + a * b) % self.p
        return Poly(self.p, out)

    def scale(self, c: int) -> "Poly":
        return Poly(self.p, tuple(c * a for a in self.coeffs))

    def shift(self, k: int) -> "Poly":
        """Multiply by T^k."""
        if not self.coeffs:
            return self
        return Poly(self.p, (0,) * k + self.coeffs)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dlead = other.leading_coeff()
        dinv = pow(dlead, p - 2, p)
        ddeg = other.degree
        quot = [0] * max(len(rem) - ddeg, 0)
        for i in range(len(rem) - 1, ddeg - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = (c * dinv) % p
            quot[i - ddeg] = q
            for j, b in enumerate(other.coeffs):
                rem[i - ddeg + j] = (rem[i - ddeg + j] - q * b) % p
        return Poly(p, quot), Poly(p, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        lc = self.leading_coeff()
        if lc in (0, 1):
            return self
        return self.scale(pow(lc, self.p - 2, self.p))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly(p={self.p}, {poly_to_str(self)})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    a._check(b)
    while b:
        a, b = b, a % b
    return a.monic()


def poly_to_str(poly: Poly) -> str:
    """Canonical text form: '+'-joined terms, constant bare, 'c*T^k' above."""
    if not poly.coeffs:
        return "0"
    terms = []
    for k, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        terms.append(str(c) if k == 0 else f"{c}*T^{k}")
    return "+".join(terms)


class RatFunc:
    """Reduced quotient of F_p[T] polynomials with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.one(num.p)
        num._check(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            den = Poly.one(num.p)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0 or g.leading_coeff() != 1:
                num, den = num // g, den // g
            lc = den.leading_coeff()
            if lc != 1:
                inv = pow(lc, num.p - 2, num.p)
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @property
    def p(self) -> int:
        return self.num.p

    @classmethod
    def zero(cls, p: int) -> "RatFunc":
        return cls(Poly.zero(p))

    @classmethod
    def one(cls, p: int) -> "RatFunc":
        return cls(Poly.one(p))

    @classmethod
    def constant(cls, p: int, c: int) -> "RatFunc":
        return cls(Poly.constant(p, c))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return bool(self.num)

    def _coerce(self, other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            if other.p != self.p:
                raise ValueError(f"mixed fields: F_{self.p}(T) vs F_{other.p}(T)")
            return other
        if isinstance(other, int):
            return RatFunc.constant(self.p, other)
        if isinstance(other, Poly):
            return RatFunc(other)
        return None

    def __add__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int) -> "RatFunc":
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if not self.num:
                raise ZeroDivisionError("zero rational function to a negative power")
            base, e = RatFunc(self.den, self.num), -e
        else:
            base = self
        out = RatFunc.one(self.p)
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RatFunc.constant(self.p, other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.p == other.p and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        if self.den == Poly.one(self.p):
            return f"RatFunc(p={self.p}, {poly_to_str(self.num)})"
        return f"RatFunc(p={self.p}, ({poly_to_str(self.num)})/({poly_to_str(self.den)}))"
