"""Brute-force certification by exhaustive coefficient enumeration.

Successive maxima and orthogonality are recomputed here from their
definitions, with no use of the elimination-based machinery they
certify: vectors B*c are enumerated over all coefficients modulo p^K
(polynomials of degree < K for Laurent fields) and ranks of
norm-threshold spans are taken with a local echelon routine.  Agreement
with the algorithmic results is therefore evidence, not tautology.

The resolution K is chosen so that changing any coefficient by a
multiple of p^K moves a candidate vector by a norm strictly below the
smallest scale any comparison can involve; enumeration at that K is
exact, and raising K further never changes the output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .absval import AbsValue
from .field import FieldDesc, Scalar
from .lattice import Lattice, OrthogonalityResult, coefficient_representatives, successive_maxima
from .norms import NormSpec

DEFAULT_BUDGET = 2 ** 20  # coefficient vectors per enumeration


class BudgetExceededError(RuntimeError):
    pass


@dataclass(frozen=True)
class Resolution:
    """Coefficients are enumerated modulo p^K."""

    K: int

    def __post_init__(self):
        if self.K < 1:
            raise ValueError("resolution must be >= 1")


def default_resolution(lat: Lattice, norm: NormSpec) -> Resolution:
    """Smallest K with p^-K * max_1 * w_max < max_rank * w_min.

    max_i are the algorithmic successive maxima; below this threshold a
    coefficient perturbation of size p^-K cannot flip any norm
    comparison in the enumeration.
    """
    maxima = successive_maxima(lat, norm)
    w_max = max(norm.weights)
    w_min = min(norm.weights)
    delta = (maxima[-1].exponent + w_min.exponent) - (maxima[0].exponent + w_max.exponent)
    return Resolution(max(1, math.floor(delta) + 1))


def _norm_of(field: FieldDesc, weights: tuple[AbsValue, ...], vec) -> AbsValue:
    out = AbsValue.zero()
    for x, w in zip(vec, weights):
        a = field.abs_value(x)
        if not a.is_zero:
            out = max(out, a * w)
    return out


def _enumerate(field: FieldDesc, cols, reps) -> Iterator[tuple[tuple, list]]:
    """Yield (coefficients, sum_i c_i * col_i) over all coefficient tuples."""
    zero = field.zero()
    m = len(cols[0])

    def rec(j: int, coeffs: tuple, partial: list):
        if j == len(cols):
            yield coeffs, partial
            return
        col = cols[j]
        for a, _ in reps:
            if a == zero:
                yield from rec(j + 1, coeffs + (a,), partial)
            else:
                nxt = [x + a * y for x, y in zip(partial, col)]
                yield from rec(j + 1, coeffs + (a,), nxt)

    yield from rec(0, (), [zero] * m)


def _check_budget(field: FieldDesc, rank: int, K: int, budget: int) -> None:
    total = field.p ** (K * rank)
    if total > budget:
        raise BudgetExceededError(
            f"enumeration needs {total} coefficient vectors (p={field.p}, K={K}, "
            f"rank={rank}), budget is {budget}")


class _Echelon:
    """Incremental exact row echelon for rank-of-span queries."""

    def __init__(self, field: FieldDesc):
        self.field = field
        self.rows: list[tuple[int, list]] = []

    def insert(self, vec) -> bool:
        zero = self.field.zero()
        v = list(vec)
        for piv, row in self.rows:
            c = v[piv]
            if c != zero:
                f = c / row[piv]
                v = [x - f * y for x, y in zip(v, row)]
        piv = next((i for i, x in enumerate(v) if x != zero), None)
        if piv is None:
            return False
        self.rows.append((piv, v))
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def enumerate_maxima(lat: Lattice, norm: NormSpec,
                     resolution: Resolution | None = None,
                     budget: int = DEFAULT_BUDGET) -> tuple[AbsValue, ...]:
    """Successive maxima straight from the definition.

    Enumerates every nonzero coefficient vector modulo p^K, groups the
    resulting lattice vectors by norm, and reads off the i-th maximum as
    the largest norm threshold whose span has rank >= i.
    """
    if norm.dim != lat.ambient_dim:
        raise ValueError("norm/lattice dimension mismatch")
    if resolution is None:
        resolution = default_resolution(lat, norm)
    field = lat.field
    _check_budget(field, lat.rank, resolution.K, budget)
    zero = field.zero()
    cols = lat.basis.columns()
    reps = coefficient_representatives(field, resolution.K)

    sketches: dict[AbsValue, _Echelon] = {}
    for coeffs, vec in _enumerate(field, cols, reps):
        if all(a == zero for a in coeffs):
            continue
        nv = _norm_of(field, norm.weights, vec)
        sk = sketches.get(nv)
        if sk is None:
            sk = sketches[nv] = _Echelon(field)
        sk.insert(vec)

    cumulative = _Echelon(field)
    maxima: list[AbsValue] = []
    for value in sorted(sketches, reverse=True):
        for _, row in sketches[value].rows:
            cumulative.insert(row)
        while len(maxima) < cumulative.rank:
            maxima.append(value)
        if len(maxima) == lat.rank:
            break
    if len(maxima) != lat.rank:
        raise AssertionError("enumerated vectors do not span the lattice")
    return tuple(maxima)


def exhaustive_orthogonality(lat: Lattice, norm: NormSpec,
                             resolution: Resolution | None = None,
                             budget: int = DEFAULT_BUDGET) -> OrthogonalityResult:
    """Orthogonality check from the definition; independent of lattice.is_orthogonal_basis."""
    if norm.dim != lat.ambient_dim:
        raise ValueError("norm/lattice dimension mismatch")
    if resolution is None:
        resolution = default_resolution(lat, norm)
    field = lat.field
    _check_budget(field, lat.rank, resolution.K, budget)
    zero = field.zero()
    cols = lat.basis.columns()
    col_norms = [_norm_of(field, norm.weights, c) for c in cols]
    reps = coefficient_representatives(field, resolution.K)
    divisible = {a: div for a, div in reps}

    for coeffs, vec in _enumerate(field, cols, reps):
        if all(divisible[a] for a in coeffs):
            continue
        expected = AbsValue.zero()
        for a, cn in zip(coeffs, col_norms):
            if a != zero:
                expected = max(expected, field.abs_value(a) * cn)
        got = _norm_of(field, norm.weights, vec)
        if got != expected:
            return OrthogonalityResult(orthogonal=False, witness=coeffs,
                                       defect=got, expected=expected)
    return OrthogonalityResult(orthogonal=True)
