"""Small dense matrices over Scalar entries."""

from __future__ import annotations

from .scalar import Scalar, _coerce_scalar


class Matrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = [list(row) for row in entries]
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        if any(len(row) != self.cols for row in entries):
            raise ValueError("ragged matrix")
        self.entries = entries

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(
            [[Scalar.one() if i == j else Scalar.zero() for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix([[Scalar.zero() for _ in range(cols)] for _ in range(rows)])

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.entries])

    def scale(self, factor) -> "Matrix":
        factor = _coerce_scalar(factor)
        return Matrix([[factor * a for a in row] for row in self.entries])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = Scalar.zero()
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if not a.is_zero():
                        b = other.entries[k][j]
                        if not b.is_zero():
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def __pow__(self, e: int) -> "Matrix":
        if e < 0:
            raise ValueError("negative matrix powers are not supported")
        acc = Matrix.identity(self.rows)
        for _ in range(e):
            acc = acc * self
        return acc

    def trace(self) -> Scalar:
        acc = Scalar.zero()
        for i in range(min(self.rows, self.cols)):
            acc = acc + self.entries[i][i]
        return acc

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        return Matrix([[self.entries[i][j] for j in col_idx] for i in row_idx])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(
            a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    __hash__ = None

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"
