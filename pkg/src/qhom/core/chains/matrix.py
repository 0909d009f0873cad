"""Sparse exact-integer matrices and their triplet text format."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterator, Mapping, Sequence

from qhom.core.errors import ComposabilityError, TableError


class SparseIntMatrix:
    """
    Column-major sparse integer matrix.

    Entries are arbitrary-precision ints; zeros are never stored and every
    index is checked against the shape.
    """

    __slots__ = ("rows", "cols", "_columns")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], int] | None = None) -> None:
        if rows < 0 or cols < 0:
            raise ValueError(f"matrix shape must be nonnegative, got {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self._columns: dict[int, dict[int, int]] = {}
        for (r, c), value in (entries or {}).items():
            self._check_index(r, c)
            if value:
                self._columns.setdefault(c, {})[r] = value

    @classmethod
    def from_columns(cls, rows: int, cols: int, columns: Mapping[int, Mapping[int, int]]) -> SparseIntMatrix:
        matrix = cls(rows, cols)
        for c, column in columns.items():
            cleaned = {r: v for r, v in column.items() if v}
            for r in cleaned:
                matrix._check_index(r, c)
            if cleaned:
                matrix._columns[c] = cleaned
        return matrix

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], *, cols: int | None = None) -> SparseIntMatrix:
        n_rows = len(dense)
        n_cols = len(dense[0]) if dense else (cols or 0)
        entries = {(r, c): v for r, row in enumerate(dense) for c, v in enumerate(row) if v}
        return cls(n_rows, n_cols, entries)

    @classmethod
    def identity(cls, n: int) -> SparseIntMatrix:
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def _check_index(self, r: int, c: int) -> None:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def nnz(self) -> int:
        return sum(len(column) for column in self._columns.values())

    def get(self, r: int, c: int) -> int:
        return self._columns.get(c, {}).get(r, 0)

    def column(self, c: int) -> dict[int, int]:
        return dict(self._columns.get(c, {}))

    def entries(self) -> Iterator[tuple[int, int, int]]:
        """``(row, col, value)`` sorted by ``(row, col)``."""
        triples = [(r, c, v) for c, column in self._columns.items() for r, v in column.items()]
        triples.sort()
        return iter(triples)

    def row_map(self) -> dict[int, dict[int, int]]:
        rows: dict[int, dict[int, int]] = defaultdict(dict)
        for c, column in self._columns.items():
            for r, v in column.items():
                rows[r][c] = v
        return dict(rows)

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for c, column in self._columns.items():
            for r, v in column.items():
                dense[r][c] = v
        return dense

    def is_zero(self) -> bool:
        return not self._columns

    def multiply(self, other: SparseIntMatrix) -> SparseIntMatrix:
        """``self @ other``."""
        if self.cols != other.rows:
            raise ComposabilityError(
                f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}"
            )
        columns: dict[int, dict[int, int]] = {}
        for c in sorted(other._columns):
            acc = self._column_combination(other._columns[c])
            if acc:
                columns[c] = acc
        return SparseIntMatrix.from_columns(self.rows, other.cols, columns)

    __matmul__ = multiply

    def _column_combination(self, weights: Mapping[int, int]) -> dict[int, int]:
        acc: dict[int, int] = defaultdict(int)
        for k, w in weights.items():
            for r, v in self._columns.get(k, {}).items():
                acc[r] += w * v
        return {r: v for r, v in acc.items() if v}

    def first_nonzero_product_column(self, other: SparseIntMatrix) -> int | None:
        """Smallest column of ``self @ other`` that is nonzero, without building the product."""
        if self.cols != other.rows:
            raise ComposabilityError(
                f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}"
            )
        for c in sorted(other._columns):
            if self._column_combination(other._columns[c]):
                return c
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._columns == other._columns

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"SparseIntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    def to_triplet_text(self) -> str:
        """Header ``rows cols nnz`` then one ``row col value`` line per entry, sorted."""
        lines = [f"{self.rows} {self.cols} {self.nnz}"]
        lines.extend(f"{r} {c} {v}" for r, c, v in self.entries())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_triplet_text(cls, text: str) -> SparseIntMatrix:
        lines = [line.split() for line in text.splitlines() if line.strip()]
        if not lines or len(lines[0]) != 3:
            raise TableError("triplet text needs a 'rows cols nnz' header")
        rows, cols, nnz = (int(part) for part in lines[0])
        body = lines[1:]
        if len(body) != nnz:
            raise TableError(f"header announces {nnz} entries, found {len(body)}")
        entries: dict[tuple[int, int], int] = {}
        for number, parts in enumerate(body, start=2):
            if len(parts) != 3:
                raise TableError(f"line {number}: expected 'row col value'")
            r, c, v = (int(part) for part in parts)
            entries[(r, c)] = v
        return cls(rows, cols, entries)
