"""Fraction-free exact linear algebra over the rationals."""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, Sequence, Tuple

from .errors import PreconditionError

Vector = List[Fraction]


@dataclass(frozen=True)
class RationalMatrix:
    """Dense row-major matrix of rationals."""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise PreconditionError("Matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise PreconditionError(
                f"Matrix of shape {self.rows}x{self.cols} needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )
        object.__setattr__(self, "entries", tuple(Fraction(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int = None) -> "RationalMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries = []
        for row in rows:
            if len(row) != cols:
                raise PreconditionError("All rows must have the same length")
            entries.extend(row)
        return cls(len(rows), cols, tuple(entries))

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def transpose(self) -> "RationalMatrix":
        entries = tuple(self[i, j] for j in range(self.cols) for i in range(self.rows))
        return RationalMatrix(self.cols, self.rows, entries)


def determinant(rows: Sequence[Sequence]):
    """Bareiss fraction-free determinant of a square matrix.

    Works over any exact integral domain whose elements support ``+ - *`` and
    exact ``/`` (rationals, or UniPolynomial over Q). Row swaps flip the sign.
    """
    size = len(rows)
    if size == 0:
        return Fraction(1)
    matrix = [[Fraction(v) if isinstance(v, int) else v for v in row] for row in rows]
    if any(len(row) != size for row in matrix):
        raise PreconditionError("Determinant needs a square matrix")
    sign = 1
    previous = None
    for k in range(size - 1):
        pivot_row = next((i for i in range(k, size) if matrix[i][k]), None)
        if pivot_row is None:
            return matrix[0][0] * 0
        if pivot_row != k:
            matrix[k], matrix[pivot_row] = matrix[pivot_row], matrix[k]
            sign = -sign
        pivot = matrix[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                value = matrix[i][j] * pivot - matrix[i][k] * matrix[k][j]
                matrix[i][j] = value / previous if previous is not None else value
            matrix[i][k] = matrix[i][k] * 0
        previous = pivot
    result = matrix[size - 1][size - 1]
    return -result if sign < 0 else result


def _integer_row(row: Sequence) -> Dict[int, int]:
    """Clear denominators of one row; sparse {column: int} with content removed."""
    scale = 1
    for value in row:
        value = Fraction(value)
        if value:
            scale = scale * value.denominator // gcd(scale, value.denominator)
    sparse = {j: int(Fraction(v) * scale) for j, v in enumerate(row) if v}
    return _primitive(sparse)


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    content = 0
    for value in row.values():
        content = gcd(content, value)
        if content == 1:
            return row
    if content > 1:
        return {j: v // content for j, v in row.items()}
    return row


def _echelon(rows: Sequence[Sequence]) -> List[Dict[int, int]]:
    """Fraction-free row echelon form over the integers.

    Pivots are taken in column scan order: the first remaining row whose
    leading column is smallest. Each elimination step multiplies through by
    the pivot (divided by the common gcd) and takes the primitive part, which
    keeps entries bounded the way Bareiss division does.
    """
    pending = [r for r in (_integer_row(row) for row in rows) if r]
    echelon: List[Dict[int, int]] = []
    while pending:
        leads = [min(r) for r in pending]
        column = min(leads)
        index = leads.index(column)
        pivot_row = pending.pop(index)
        pivot = pivot_row[column]
        reduced = []
        for row in pending:
            entry = row.get(column)
            if entry is None:
                reduced.append(row)
                continue
            common = gcd(pivot, entry)
            a, b = pivot // common, entry // common
            combined: Dict[int, int] = {}
            for j, v in row.items():
                combined[j] = a * v
            for j, v in pivot_row.items():
                value = combined.get(j, 0) - b * v
                if value:
                    combined[j] = value
                else:
                    combined.pop(j, None)
            if combined:
                reduced.append(_primitive(combined))
        pending = reduced
        echelon.append(pivot_row)
    return echelon


def _as_rows(matrix: RationalMatrix) -> List[Tuple[Fraction, ...]]:
    return [matrix.row(i) for i in range(matrix.rows)]


def rank(matrix: RationalMatrix) -> int:
    """Rank over Q.

    Eliminates along the orientation with fewer columns, since rank(M) =
    rank(M^T) and elimination cost is driven by row length.
    """
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    if matrix.cols > matrix.rows:
        matrix = matrix.transpose()
    return len(_echelon(_as_rows(matrix)))


def kernel_dim(matrix: RationalMatrix) -> int:
    return matrix.cols - rank(matrix)


def kernel_basis(matrix: RationalMatrix) -> List[Vector]:
    """Basis of {v : M·v = 0}, one vector per free column.

    Each basis vector has a 1 in its free column and 0 in the other free
    columns; pivot entries come from back-substitution.
    """
    cols = matrix.cols
    if matrix.rows == 0:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    echelon = _echelon(_as_rows(matrix))
    pivots = {min(row): row for row in echelon}
    free_columns = [j for j in range(cols) if j not in pivots]
    basis = []
    for free in free_columns:
        vector = [Fraction(0)] * cols
        vector[free] = Fraction(1)
        for column in sorted(pivots, reverse=True):
            row = pivots[column]
            total = sum((v * vector[j] for j, v in row.items() if j != column), Fraction(0))
            vector[column] = -total / row[column]
        basis.append(vector)
    return basis
