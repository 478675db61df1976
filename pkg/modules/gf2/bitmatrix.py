"""
BitMatrix - Dense matrices over GF(2) with int-bitset rows
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

RowSpec = Union[str, Sequence[int]]


@dataclass(frozen=True)
class BitMatrix:
    """Immutable GF(2) matrix. Row i is an int whose bit j is entry (i, j)."""

    rows: Tuple[int, ...]
    col_count: int

    def __post_init__(self):
        if self.col_count < 0:
            raise ValueError(f"Negative column count: {self.col_count}")
        limit = 1 << self.col_count
        for row in self.rows:
            if row < 0 or row >= limit:
                raise ValueError(f"Row {row:#x} does not fit in {self.col_count} columns")

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[RowSpec], col_count: Optional[int] = None) -> "BitMatrix":
        """
        Build a matrix from rows given as 0/1 strings or bit sequences

        Args:
            rows: Iterable of rows, e.g. ["101", "011"] or [[1, 0, 1], [0, 1, 1]]
            col_count: Column count, required when rows is empty

        Returns:
            BitMatrix
        """
        packed = []
        width = col_count
        for spec in rows:
            bits = [int(ch) for ch in spec] if isinstance(spec, str) else [int(b) for b in spec]
            if width is None:
                width = len(bits)
            if len(bits) != width:
                raise ValueError(f"Row length {len(bits)} differs from {width}")
            value = 0
            for j, bit in enumerate(bits):
                if bit not in (0, 1):
                    raise ValueError(f"Entry {bit} is not a bit")
                if bit:
                    value |= 1 << j
            packed.append(value)
        return cls(tuple(packed), width or 0)

    @classmethod
    def zeros(cls, row_count: int, col_count: int) -> "BitMatrix":
        return cls((0,) * row_count, col_count)

    @classmethod
    def identity(cls, size: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(size)), size)

    @classmethod
    def ones(cls, row_count: int, col_count: int) -> "BitMatrix":
        return cls(((1 << col_count) - 1,) * row_count, col_count)

    @classmethod
    def from_columns(cls, columns: Sequence[int], row_count: int) -> "BitMatrix":
        """Build a matrix whose column j is the int columns[j] (bit i = row i)."""
        rows = [0] * row_count
        for j, col in enumerate(columns):
            if col >> row_count:
                raise ValueError(f"Column {col:#x} does not fit in {row_count} rows")
            for i in range(row_count):
                if (col >> i) & 1:
                    rows[i] |= 1 << j
        return cls(tuple(rows), len(columns))

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------

    @property
    def row_count(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.row_count, self.col_count

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def column(self, j: int) -> int:
        """Column j as an int with bit i = entry (i, j)."""
        value = 0
        for i, row in enumerate(self.rows):
            if (row >> j) & 1:
                value |= 1 << i
        return value

    def columns(self) -> List[int]:
        return [self.column(j) for j in range(self.col_count)]

    def to_lists(self) -> List[List[int]]:
        return [[(row >> j) & 1 for j in range(self.col_count)] for row in self.rows]

    def is_zero(self) -> bool:
        return not any(self.rows)

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_columns(self.rows, self.col_count) if self.rows else BitMatrix((0,) * self.col_count, 0)

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.row_count != other.row_count:
            raise ValueError(f"Row counts differ: {self.row_count} vs {other.row_count}")
        shift = self.col_count
        return BitMatrix(
            tuple(a | (b << shift) for a, b in zip(self.rows, other.rows)),
            self.col_count + other.col_count,
        )

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.col_count != other.col_count:
            raise ValueError(f"Column counts differ: {self.col_count} vs {other.col_count}")
        return BitMatrix(self.rows + other.rows, self.col_count)

    def select_rows(self, indices: Iterable[int]) -> "BitMatrix":
        return BitMatrix(tuple(self.rows[i] for i in indices), self.col_count)

    # ------------------------------------------------------------------
    # .g2m text format
    # ------------------------------------------------------------------

    def to_g2m(self) -> str:
        lines = [f"{self.row_count} {self.col_count}"]
        for row in self.rows:
            lines.append("".join("1" if (row >> j) & 1 else "0" for j in range(self.col_count)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_g2m(cls, text: str) -> "BitMatrix":
        lines = [line.strip() for line in text.strip().splitlines()]
        if not lines:
            raise ValueError("Empty .g2m text")
        header = lines[0].split()
        if len(header) != 2 or not all(part.isdigit() for part in header):
            raise ValueError(f"Bad .g2m header: {lines[0]!r}")
        k, n = int(header[0]), int(header[1])
        body = lines[1:]
        if len(body) != k:
            raise ValueError(f"Expected {k} rows, found {len(body)}")
        for line in body:
            if len(line) != n or set(line) - {"0", "1"}:
                raise ValueError(f"Bad .g2m row: {line!r}")
        return cls.from_rows(body, n)

    def write_g2m(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(path.suffix + ".tmp")
        with open(tmp, "w", encoding="utf-8", newline="\n") as f:
            f.write(self.to_g2m())
        tmp.replace(path)
        return path

    @classmethod
    def read_g2m(cls, path: Union[str, Path]) -> "BitMatrix":
        with open(path, "r", encoding="utf-8") as f:
            return cls.from_g2m(f.read())

    def __str__(self) -> str:
        return self.to_g2m().rstrip("\n")


# ----------------------------------------------------------------------
# Elimination
# ----------------------------------------------------------------------


def _eliminate(rows: List[int], col_count: int) -> Tuple[List[int], List[int]]:
    """Full Gauss-Jordan elimination in place, pivots in increasing column order."""
    pivots: List[int] = []
    row_idx = 0
    for col in range(col_count):
        if row_idx == len(rows):
            break
        bit = 1 << col
        pivot = None
        for r in range(row_idx, len(rows)):
            if rows[r] & bit:
                pivot = r
                break
        if pivot is None:
            continue
        rows[row_idx], rows[pivot] = rows[pivot], rows[row_idx]
        for r in range(len(rows)):
            if r != row_idx and rows[r] & bit:
                rows[r] ^= rows[row_idx]
        pivots.append(col)
        row_idx += 1
    return rows, pivots


def rank_of_rows(rows: Iterable[int]) -> int:
    """Rank of a list of int rows; column count is implied by the bits."""
    basis: List[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
    return len(basis)


def rank(m: BitMatrix) -> int:
    return rank_of_rows(m.rows)


def rref(m: BitMatrix) -> Tuple[BitMatrix, List[int]]:
    """
    Reduced row echelon form

    Returns:
        (matrix of the same shape with zero rows at the bottom, pivot columns)
    """
    rows, pivots = _eliminate(list(m.rows), m.col_count)
    return BitMatrix(tuple(rows), m.col_count), pivots


def matmul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.col_count != b.row_count:
        raise ValueError(f"Dimension mismatch: {a.shape} x {b.shape}")
    out = []
    for row in a.rows:
        acc = 0
        j = 0
        while row:
            if row & 1:
                acc ^= b.rows[j]
            row >>= 1
            j += 1
        out.append(acc)
    return BitMatrix(tuple(out), b.col_count)


def gram(g: BitMatrix) -> BitMatrix:
    """G times its transpose."""
    rows = []
    for a in g.rows:
        value = 0
        for j, b in enumerate(g.rows):
            if (a & b).bit_count() & 1:
                value |= 1 << j
        rows.append(value)
    return BitMatrix(tuple(rows), g.row_count)


def nullspace(m: BitMatrix) -> BitMatrix:
    """Basis of {x : M x^T = 0}, one basis vector per free column."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.col_count):
        if free in pivot_set:
            continue
        x = 1 << free
        for i, p in enumerate(pivots):
            if (reduced.rows[i] >> free) & 1:
                x |= 1 << p
        basis.append(x)
    return BitMatrix(tuple(basis), m.col_count)


def intersect_rowspaces(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Zassenhaus: reduce [[A, A], [B, 0]]; rows with zero left half span the intersection."""
    if a.col_count != b.col_count:
        raise ValueError(f"Column counts differ: {a.col_count} vs {b.col_count}")
    n = a.col_count
    low = (1 << n) - 1
    stacked = [row | (row << n) for row in a.rows] + list(b.rows)
    rows, _ = _eliminate(stacked, 2 * n)
    basis = [row >> n for row in rows if row and not row & low]
    return BitMatrix(tuple(basis), n)


def is_invertible(m: BitMatrix) -> bool:
    if m.row_count != m.col_count:
        raise ValueError(f"Matrix is not square: {m.shape}")
    return rank(m) == m.row_count


def inverse(m: BitMatrix) -> BitMatrix:
    if not is_invertible(m):
        raise ValueError("Matrix is singular")
    size = m.row_count
    augmented = [row | (1 << (size + i)) for i, row in enumerate(m.rows)]
    rows, _ = _eliminate(augmented, size)
    return BitMatrix(tuple(row >> size for row in rows), size)


def in_rowspace(vector: int, m: BitMatrix) -> bool:
    return rank_of_rows(list(m.rows) + [vector]) == rank(m)
