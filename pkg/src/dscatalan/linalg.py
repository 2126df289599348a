"""Exact dense linear algebra over the integers and rationals.

Arbitrary-precision integers are plain Python ``int``; rationals are
``fractions.Fraction``.  No floating point appears anywhere: determinants use
fraction-free Bareiss elimination (all intermediates stay integral) and linear
solves use rational Gaussian elimination.

Vectors multiply matrices from the left throughout (``x . m``), so a length-r
row vector times an r x c matrix gives a length-c row vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NonSquareMatrixError, SingularMatrixError

Scalar = int | Fraction


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with value 0 whenever k < 0 or k > n.

    >>> binomial(5, 2)
    10
    >>> binomial(3, 5)
    0
    """
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class ExactMatrix:
    """Dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")
        for v in self.entries:
            if not isinstance(v, int):
                raise TypeError(f"entries must be exact integers, got {type(v).__name__}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> ExactMatrix:
        data = [tuple(r) for r in rows]
        if not data:
            return cls(0, 0, ())
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("inconsistent row width")
        return cls(len(data), width, tuple(v for r in data for v in r))

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> ExactMatrix:
        """Submatrix on the given 0-based row and column indices, in order."""
        ent = tuple(self.entry(i, j) for i in row_idx for j in col_idx)
        return ExactMatrix(len(row_idx), len(col_idx), ent)

    def column_submatrix(self, col_idx: Sequence[int]) -> ExactMatrix:
        return self.submatrix(range(self.rows), col_idx)

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in self.row(i)) for i in range(self.rows))


def determinant(m: ExactMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination.

    Every division below is exact, so the computation never leaves the
    integers.
    """
    if m.rows != m.cols:
        raise NonSquareMatrixError(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(m.row(i)) for i in range(n)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def row_times_matrix(x: Sequence[Scalar], m: ExactMatrix) -> tuple[Scalar, ...]:
    """Row-vector times matrix: returns x . m of length m.cols."""
    if len(x) != m.rows:
        raise ValueError(f"vector length {len(x)} does not match {m.rows} rows")
    return tuple(
        sum(x[i] * m.entry(i, j) for i in range(m.rows)) for j in range(m.cols)
    )


def solve_square(m: ExactMatrix, rhs: Sequence[Scalar]) -> tuple[Fraction, ...]:
    """Unique exact solution x of x . m = rhs for a square invertible m.

    Raises SingularMatrixError when no unique solution exists.
    """
    if m.rows != m.cols:
        raise NonSquareMatrixError(f"solve_square on a {m.rows}x{m.cols} matrix")
    n = m.rows
    if len(rhs) != n:
        raise ValueError("right-hand side has wrong length")
    # Row j of the augmented system encodes sum_i x_i m[i][j] = rhs[j].
    aug = [[Fraction(m.entry(i, j)) for i in range(n)] + [Fraction(rhs[j])] for j in range(n)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
    return tuple(aug[i][n] for i in range(n))


def solve_row_system(
    m: ExactMatrix, rhs: Sequence[Scalar]
) -> tuple[tuple[Fraction, ...] | None, tuple[tuple[Fraction, ...], ...]]:
    """General exact solve of x . m = rhs.

    Returns (particular, kernel_basis) where ``particular`` is one solution
    with all free variables set to zero (None when the system is
    inconsistent) and ``kernel_basis`` spans the left kernel of m.  Both are
    rational; the kernel basis comes from the reduced echelon form and is
    deterministic.
    """
    if len(rhs) != m.cols:
        raise ValueError("right-hand side has wrong length")
    n_var, n_eq = m.rows, m.cols
    # Equation j: sum_i x_i m[i][j] = rhs[j].
    aug = [
        [Fraction(m.entry(i, j)) for i in range(n_var)] + [Fraction(rhs[j])]
        for j in range(n_eq)
    ]
    pivots: list[int] = []
    r = 0
    for col in range(n_var):
        pivot_row = next((k for k in range(r, n_eq) if aug[k][col] != 0), None)
        if pivot_row is None:
            continue
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [v * inv for v in aug[r]]
        for k in range(n_eq):
            if k != r and aug[k][col] != 0:
                factor = aug[k][col]
                aug[k] = [v - factor * w for v, w in zip(aug[k], aug[r])]
        pivots.append(col)
        r += 1
    consistent = all(aug[k][n_var] == 0 for k in range(r, n_eq))
    free = [c for c in range(n_var) if c not in pivots]
    particular: tuple[Fraction, ...] | None = None
    if consistent:
        x = [Fraction(0)] * n_var
        for row_i, col in enumerate(pivots):
            x[col] = aug[row_i][n_var]
        particular = tuple(x)
    kernel = []
    for f_col in free:
        v = [Fraction(0)] * n_var
        v[f_col] = Fraction(1)
        for row_i, col in enumerate(pivots):
            v[col] = -aug[row_i][f_col]
        kernel.append(tuple(v))
    return particular, tuple(kernel)
