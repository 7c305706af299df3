"""Lattices over Z_p / F_p[[T]] and their ultrametric basis machinery.

A lattice is the set of coefficient-ring combinations of independent
columns of a basis matrix.  The central routine is the greedy
orthogonalization: repeatedly pick a remaining basis vector of maximal
norm, pick its dominant weighted coordinate among coordinates not yet
used as pivots, and subtract multiples of the picked vector to clear
that coordinate from all remaining vectors.  Selection of the dominant
coordinate makes every elimination coefficient integral, so the lattice
is unchanged, and by the ultrametric inequality the later vectors never
grow, so the output is sorted by norm.  The sorted norms are the
successive maxima.

``is_orthogonal_basis`` checks the defining property
N(sum a_i v_i) = max_i N(a_i v_i) by exhaustive enumeration of
coefficients modulo p^K; at the resolution supplied by the oracle
module the check is exact, because coefficient changes below the
resolution cannot flip any norm comparison.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .absval import AbsValue
from .field import FieldDesc, FieldKind, Scalar
from .gfpoly import Poly, RatFunc
from .linalg import Matrix
from .norms import NormSpec


class SingularGramError(ArithmeticError):
    """The span is isotropic: B^T B is singular, so no dual basis exists."""


class RankDeficientError(ValueError):
    """Operation requires a full-rank lattice."""


class IllegalOpError(ValueError):
    """A basis operation violated its legality conditions."""


@dataclass(frozen=True)
class Lattice:
    """Coefficient-ring span of the basis matrix columns (columns = vectors)."""

    basis: Matrix

    def __post_init__(self):
        if self.basis.rank() != self.basis.cols:
            raise ValueError("basis columns are linearly dependent")

    @classmethod
    def from_columns(cls, field: FieldDesc, cols: Sequence[Sequence[Scalar]]) -> "Lattice":
        return cls(Matrix.from_columns(field, cols))

    @property
    def field(self) -> FieldDesc:
        return self.basis.field

    @property
    def ambient_dim(self) -> int:
        return self.basis.rows

    @property
    def rank(self) -> int:
        return self.basis.cols

    @property
    def is_full_rank(self) -> bool:
        return self.basis.rows == self.basis.cols

    def columns(self) -> tuple[tuple, ...]:
        return self.basis.columns()


@dataclass(frozen=True)
class OrthogonalBasis:
    """Orthogonalization output: vectors, their norms, and the column transform.

    ``vectors == input_basis @ transform`` where the transform and its
    inverse are both integral (same lattice); ``pivot_rows[i]`` is the
    coordinate cleared from later vectors at step i.
    """

    vectors: Matrix
    norms: tuple[AbsValue, ...]
    transform: Matrix
    pivot_rows: tuple[int, ...]

    def __post_init__(self):
        if any(self.norms[i] < self.norms[i + 1] for i in range(len(self.norms) - 1)):
            raise ValueError("orthogonal basis norms must be non-increasing")

    def as_lattice(self) -> Lattice:
        return Lattice(self.vectors)


@dataclass(frozen=True)
class Scale:
    """column[index] *= factor; legal iff factor is a coefficient-ring unit."""
    index: int
    factor: Scalar


@dataclass(frozen=True)
class Swap:
    i: int
    j: int


@dataclass(frozen=True)
class Shear:
    """column[target] += factor * column[source]; legal iff factor is
    integral and N(factor * column[source]) <= N(column[target])."""
    target: int
    source: int
    factor: Scalar


BasisOp = Union[Scale, Swap, Shear]


@dataclass(frozen=True)
class OrthogonalityResult:
    orthogonal: bool
    witness: tuple | None = None
    defect: AbsValue | None = None   # N(sum a_i v_i) for the witness
    expected: AbsValue | None = None  # max_i N(a_i v_i) for the witness

    def __bool__(self) -> bool:
        return self.orthogonal


def orthogonalize(lat: Lattice, norm: NormSpec) -> OrthogonalBasis:
    """Greedy ultrametric orthogonalization; preserves the lattice exactly."""
    if norm.dim != lat.ambient_dim:
        raise ValueError(f"norm dimension {norm.dim} != ambient dimension {lat.ambient_dim}")
    field = lat.field
    zero = field.zero()
    n, m = lat.rank, lat.ambient_dim
    cols = [list(c) for c in lat.basis.columns()]
    trans = [list(c) for c in Matrix.identity(field, n).columns()]
    pivot_rows: list[int] = []
    free_rows = list(range(m))

    for i in range(n):
        # vector of maximal norm among the remaining ones (stable on ties)
        best, best_norm = i, norm(cols[i])
        for l in range(i + 1, n):
            nl = norm(cols[l])
            if nl > best_norm:
                best, best_norm = l, nl
        if best != i:
            cols[i], cols[best] = cols[best], cols[i]
            trans[i], trans[best] = trans[best], trans[i]

        # dominant weighted coordinate among rows not yet used as pivots
        piv, piv_val = -1, AbsValue.zero()
        for r in free_rows:
            contrib = field.abs_value(cols[i][r]) * norm.weights[r]
            if contrib > piv_val:
                piv, piv_val = r, contrib
        if piv < 0:
            raise AssertionError("independent column evaluated to zero")
        free_rows.remove(piv)
        pivot_rows.append(piv)

        # clear the pivot coordinate from all later vectors
        a_ii = cols[i][piv]
        for l in range(i + 1, n):
            c = cols[l][piv] / a_ii
            if c == zero:
                continue
            cols[l] = [x - c * y for x, y in zip(cols[l], cols[i])]
            trans[l] = [x - c * y for x, y in zip(trans[l], trans[i])]

    return OrthogonalBasis(
        vectors=Matrix.from_columns(field, cols),
        norms=tuple(norm(c) for c in cols),
        transform=Matrix.from_columns(field, trans),
        pivot_rows=tuple(pivot_rows),
    )


def successive_maxima(lat: Lattice, norm: NormSpec) -> tuple[AbsValue, ...]:
    """Largest r admitting i independent lattice vectors of norm >= r, i = 1..rank."""
    return orthogonalize(lat, norm).norms


def dual(lat: Lattice) -> Lattice:
    """Basis of the dual lattice: column i pairs to delta_ij with column j.

    Full rank: D = (B^T)^TRANSPOSE-inverse, i.e. B^T @ D = I.  Rank-deficient:
    D = B (B^T B)^-1, the unique basis of span(B) with the same pairing.
    """
    b = lat.basis
    if lat.is_full_rank:
        return Lattice(b.transpose().inverse())
    gram = b.transpose() @ b
    if gram.det() == lat.field.zero():
        raise SingularGramError("isotropic span: Gram matrix is singular")
    return Lattice(b @ gram.inverse())


def det_abs(lat: Lattice) -> AbsValue:
    """|det B|, the basis-independent lattice determinant."""
    if not lat.is_full_rank:
        raise RankDeficientError("determinant requires a full-rank lattice")
    return lat.field.abs_value(lat.basis.det())


def apply_basis_op(lat: Lattice, op: BasisOp, norm: NormSpec) -> Lattice:
    """Apply one unimodular basis operation, checking its legality.

    Legal operations map orthogonal bases to orthogonal bases and never
    change the lattice or its determinant.
    """
    field = lat.field
    cols = [list(c) for c in lat.basis.columns()]
    n = len(cols)
    if isinstance(op, Scale):
        if not 0 <= op.index < n:
            raise IllegalOpError(f"column index {op.index} out of range")
        if field.valuation(op.factor) != 0:
            raise IllegalOpError(
                f"scale factor must be a coefficient-ring unit, got valuation "
                f"{field.valuation(op.factor)}")
        cols[op.index] = [op.factor * x for x in cols[op.index]]
    elif isinstance(op, Swap):
        if not (0 <= op.i < n and 0 <= op.j < n):
            raise IllegalOpError("swap index out of range")
        cols[op.i], cols[op.j] = cols[op.j], cols[op.i]
    elif isinstance(op, Shear):
        if not (0 <= op.target < n and 0 <= op.source < n) or op.target == op.source:
            raise IllegalOpError("shear indices out of range or equal")
        if field.valuation(op.factor) < 0:
            raise IllegalOpError(
                f"shear factor must be integral, got valuation {field.valuation(op.factor)}")
        scaled = [op.factor * x for x in cols[op.source]]
        if norm(scaled) > norm(cols[op.target]):
            raise IllegalOpError(
                "shear would raise the target norm: N(k*source) > N(target)")
        cols[op.target] = [x + y for x, y in zip(cols[op.target], scaled)]
    else:
        raise TypeError(f"unknown basis operation {op!r}")
    return Lattice.from_columns(field, cols)


def coefficient_representatives(field: FieldDesc, resolution: int) -> list[tuple[Scalar, bool]]:
    """All coefficient-ring representatives modulo p^K (resp. T^K).

    Returns (scalar, divisible) pairs, divisible meaning the scalar lies
    in the maximal ideal (divisible by p, resp. by T).
    """
    if resolution < 1:
        raise ValueError("resolution must be >= 1")
    p = field.p
    if field.kind is FieldKind.QP:
        return [(Fraction(i), i % p == 0) for i in range(p ** resolution)]
    out = []
    for code in range(p ** resolution):
        digits = []
        c = code
        for _ in range(resolution):
            c, d = divmod(c, p)
            digits.append(d)
        out.append((RatFunc(Poly(p, digits)), digits[0] == 0))
    return out


def is_orthogonal_basis(lat: Lattice, norm: NormSpec, resolution: int) -> OrthogonalityResult:
    """Exhaustive orthogonality check at the given resolution.

    Tests N(sum a_i v_i) = max_i N(a_i v_i) over all coefficient vectors
    with entries among the representatives mod p^K, not all divisible
    by p; by homogeneity this covers all integral coefficients once K is
    at least the oracle's default resolution.
    """
    if norm.dim != lat.ambient_dim:
        raise ValueError("norm/lattice dimension mismatch")
    field = lat.field
    zero = field.zero()
    cols = lat.basis.columns()
    col_norms = [norm(c) for c in cols]
    reps = coefficient_representatives(field, resolution)
    for coeffs in itertools.product(reps, repeat=lat.rank):
        if all(div for _, div in coeffs):
            continue
        vec = [zero] * lat.ambient_dim
        expected = AbsValue.zero()
        for (a, _), col, cn in zip(coeffs, cols, col_norms):
            if a == zero:
                continue
            vec = [x + a * y for x, y in zip(vec, col)]
            expected = max(expected, field.abs_value(a) * cn)
        got = norm(vec)
        if got != expected:
            return OrthogonalityResult(
                orthogonal=False,
                witness=tuple(a for a, _ in coeffs),
                defect=got,
                expected=expected,
            )
    return OrthogonalityResult(orthogonal=True)


def same_lattice(a: Lattice, b: Lattice) -> bool:
    """True iff both bases generate the same coefficient-ring module."""
    if a.field != b.field or a.ambient_dim != b.ambient_dim or a.rank != b.rank:
        raise ValueError("lattices live in different spaces")
    x = a.basis.solve(b.basis)
    if x is None:
        return False
    y = b.basis.solve(a.basis)
    if y is None:
        return False
    field = a.field
    return all(field.is_integral(e) for e in x.entries) and \
        all(field.is_integral(e) for e in y.entries)
