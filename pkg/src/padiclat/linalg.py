"""Exact dense linear algebra over the computable scalar fields.

Determinant, inverse, rank and solve all use plain Gaussian elimination
with exact field arithmetic; any nonzero pivot is exact, so there is no
growth-control or stability machinery.  Matrices are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .field import FieldDesc, Scalar


class SingularMatrixError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Matrix:
    field: FieldDesc
    rows: int
    cols: int
    entries: tuple  # row-major

    def __post_init__(self):
        if self.rows <= 0 or self.cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, field: FieldDesc, rows: Sequence[Sequence[Scalar]]) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(field, nrows, ncols, tuple(field.coerce(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, field: FieldDesc, cols: Sequence[Sequence[Scalar]]) -> "Matrix":
        ncols = len(cols)
        nrows = len(cols[0])
        if any(len(c) != nrows for c in cols):
            raise ValueError("ragged columns")
        return cls(field, nrows, ncols,
                   tuple(field.coerce(cols[j][i]) for i in range(nrows) for j in range(ncols)))

    @classmethod
    def identity(cls, field: FieldDesc, n: int) -> "Matrix":
        one, zero = field.one(), field.zero()
        return cls(field, n, n,
                   tuple(one if i == j else zero for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def columns(self) -> tuple[tuple, ...]:
        return tuple(self.col(j) for j in range(self.cols))

    def to_lists(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows,
                      tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise ValueError("mixed fields in matrix product")
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        zero = self.field.zero()
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    x = ri[k]
                    if x != zero:
                        acc = acc + x * other[k, j]
                out.append(acc)
        return Matrix(self.field, self.rows, other.cols, tuple(out))

    def det(self) -> Scalar:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        zero = self.field.zero()
        a = self.to_lists()
        n = self.rows
        det = self.field.one()
        for i in range(n):
            piv = next((r for r in range(i, n) if a[r][i] != zero), None)
            if piv is None:
                return zero
            if piv != i:
                a[i], a[piv] = a[piv], a[i]
                det = -det
            det = det * a[i][i]
            inv = self.field.one() / a[i][i]
            for r in range(i + 1, n):
                f = a[r][i]
                if f == zero:
                    continue
                f = f * inv
                for c in range(i, n):
                    a[r][c] = a[r][c] - f * a[i][c]
        return det

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        zero, one = self.field.zero(), self.field.one()
        n = self.rows
        a = self.to_lists()
        b = Matrix.identity(self.field, n).to_lists()
        for i in range(n):
            piv = next((r for r in range(i, n) if a[r][i] != zero), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular")
            if piv != i:
                a[i], a[piv] = a[piv], a[i]
                b[i], b[piv] = b[piv], b[i]
            inv = one / a[i][i]
            a[i] = [x * inv for x in a[i]]
            b[i] = [x * inv for x in b[i]]
            for r in range(n):
                if r == i:
                    continue
                f = a[r][i]
                if f == zero:
                    continue
                a[r] = [x - f * y for x, y in zip(a[r], a[i])]
                b[r] = [x - f * y for x, y in zip(b[r], b[i])]
        return Matrix.from_rows(self.field, b)

    def rank(self) -> int:
        zero = self.field.zero()
        a = self.to_lists()
        nr, nc = self.rows, self.cols
        piv_r = 0
        for c in range(nc):
            piv = next((r for r in range(piv_r, nr) if a[r][c] != zero), None)
            if piv is None:
                continue
            a[piv_r], a[piv] = a[piv], a[piv_r]
            inv = self.field.one() / a[piv_r][c]
            for r in range(piv_r + 1, nr):
                f = a[r][c]
                if f == zero:
                    continue
                f = f * inv
                for cc in range(c, nc):
                    a[r][cc] = a[r][cc] - f * a[piv_r][cc]
            piv_r += 1
            if piv_r == nr:
                break
        return piv_r

    def solve(self, rhs: "Matrix") -> "Matrix | None":
        """Solve self @ X = rhs for a full-column-rank self.

        Returns None when the system is inconsistent (rhs outside the
        column span).
        """
        if rhs.rows != self.rows:
            raise ValueError("right-hand side row count mismatch")
        zero = self.field.zero()
        n, k = self.cols, rhs.cols
        a = [list(self.row(i)) + list(rhs.row(i)) for i in range(self.rows)]
        pivots: list[int] = []  # pivot row r has its pivot in column pivots-index
        piv_r = 0
        for c in range(n):
            piv = next((r for r in range(piv_r, self.rows) if a[r][c] != zero), None)
            if piv is None:
                raise ValueError("matrix does not have full column rank")
            a[piv_r], a[piv] = a[piv], a[piv_r]
            inv = self.field.one() / a[piv_r][c]
            a[piv_r] = [x * inv for x in a[piv_r]]
            for r in range(self.rows):
                if r == piv_r:
                    continue
                f = a[r][c]
                if f == zero:
                    continue
                a[r] = [x - f * y for x, y in zip(a[r], a[piv_r])]
            pivots.append(c)
            piv_r += 1
        for r in range(piv_r, self.rows):
            if any(a[r][n + j] != zero for j in range(k)):
                return None
        sol = [[a[r][n + j] for j in range(k)] for r in range(n)]
        return Matrix.from_rows(self.field, sol)

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(self.field.format_scalar(x) for x in self.row(i))
            for i in range(self.rows)
        )
        return f"Matrix({self.rows}x{self.cols}: {body})"
