"""Weighted maximum norms on k^m.

N(v) = max_i |v_i| * w_i for fixed positive weights w_i; all-ones
weights give the plain maximum norm M.  The coordinate basis is
N-orthogonal by construction, which is exactly what the
orthogonalization algorithm needs from its ambient norm.  Weights of
the form p^(-a/b) model the absolute values of totally ramified
extensions written in a power basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .absval import AbsValue
from .field import FieldDesc, Scalar


@dataclass(frozen=True)
class NormSpec:
    field: FieldDesc
    weights: tuple[AbsValue, ...]

    def __post_init__(self):
        if not self.weights:
            raise ValueError("norm needs at least one weight")
        if any(w.is_zero for w in self.weights):
            raise ValueError("norm weights must be nonzero")
        object.__setattr__(self, "weights", tuple(self.weights))

    @classmethod
    def max_norm(cls, field: FieldDesc, dim: int) -> "NormSpec":
        return cls(field, tuple(AbsValue.one() for _ in range(dim)))

    @classmethod
    def from_exponents(cls, field: FieldDesc, exponents: Sequence) -> "NormSpec":
        """Weights given as rational exponents q, meaning w_i = p^(-q)."""
        return cls(field, tuple(AbsValue.from_exponent(Fraction(q)) for q in exponents))

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def is_max_norm(self) -> bool:
        return all(w == AbsValue.one() for w in self.weights)

    @property
    def weights_at_most_one(self) -> bool:
        return all(w <= AbsValue.one() for w in self.weights)

    def __call__(self, v: Sequence[Scalar]) -> AbsValue:
        if len(v) != len(self.weights):
            raise ValueError(f"vector length {len(v)} != norm dimension {len(self.weights)}")
        out = AbsValue.zero()
        for x, w in zip(v, self.weights):
            a = self.field.abs_value(x)
            if not a.is_zero:
                out = max(out, a * w)
        return out

    def equivalence_constants(self) -> tuple[AbsValue, AbsValue]:
        """(c1, c2) with c1*N(v) <= M(v) <= c2*N(v) for all v, when c1 <= 1.

        c1 is the largest coordinate-vector norm, c2 the reciprocal of the
        smallest; the lower inequality requires all weights <= 1 (see the
        module docs), the upper one holds unconditionally.
        """
        c1 = max(self.weights)
        c2 = min(self.weights) ** -1
        return c1, c2
