"""Exact linear algebra over the rationals on sparse and small dense matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

SparseRow = dict[Hashable, Fraction]


class SingularMatrixError(ValueError):
    pass


def sparse_rref(rows: Iterable[Mapping[Hashable, int | Fraction]],
                column_rank: Mapping[Hashable, int]) -> dict[Hashable, SparseRow]:
    """Reduced row echelon form of a sparse system.

    Pivots are chosen by smallest ``column_rank``.  Returns a map from pivot
    column to its normalised row; every pivot row is zero on the other pivots.
    """
    pivots: dict[Hashable, SparseRow] = {}
    for raw in rows:
        row: SparseRow = {c: Fraction(x) for c, x in raw.items() if x}
        for col in [c for c in row if c in pivots]:
            f = row.get(col)
            if f:
                for c, x in pivots[col].items():
                    y = row.get(c, 0) - f * x
                    if y:
                        row[c] = y
                    else:
                        row.pop(c, None)
        if not row:
            continue
        col = min(row, key=column_rank.__getitem__)
        inv = 1 / row[col]
        row = {c: x * inv for c, x in row.items()}
        for other in pivots.values():
            f = other.get(col)
            if f:
                for c, x in row.items():
                    y = other.get(c, 0) - f * x
                    if y:
                        other[c] = y
                    else:
                        other.pop(c, None)
        pivots[col] = row
    return pivots


def invert(matrix: Sequence[Sequence[int | Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse of a square matrix."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("matrix is not square")
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(size)]
           for i, row in enumerate(matrix)]
    for c in range(size):
        p = next((r for r in range(c, size) if aug[r][c]), None)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(size):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[size:] for row in aug]


def rank(matrix: Sequence[Sequence[int | Fraction]]) -> int:
    rows = [{j: x for j, x in enumerate(row) if x} for row in matrix]
    width = max((len(row) for row in matrix), default=0)
    return len(sparse_rref(rows, {j: j for j in range(width)}))


def as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {x}")
    return x.numerator


def solve(matrix: Sequence[Sequence[int | Fraction]], target: Sequence[int | Fraction]) -> list[Fraction]:
    """The unique y with matrix @ y == target, for a tall matrix of full column rank.

    Raises ValueError when the system is inconsistent and SingularMatrixError
    when the solution is not unique.
    """
    m = len(matrix)
    k = len(matrix[0]) if m else 0
    if len(target) != m:
        raise ValueError("target length does not match the matrix")
    aug = [[Fraction(x) for x in row] + [Fraction(t)] for row, t in zip(matrix, target)]
    r = 0
    for c in range(k):
        p = next((i for i in range(r, m) if aug[i][c]), None)
        if p is None:
            raise SingularMatrixError("columns are linearly dependent")
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        r += 1
    if any(aug[i][k] for i in range(r, m)):
        raise ValueError("system is inconsistent")
    return [aug[i][k] for i in range(k)]
