"""
Linear Code - Binary linear codes: parameters, hull, duals, extensions
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np

from modules.gf2 import BitMatrix, gram, intersect_rowspaces, nullspace, rank, rank_of_rows

# Minimum distance is computed by enumerating all codewords
ENUMERATION_GUARD = 28
EXTENSION_GUARD = 20
COMPLEMENT_GUARD = 1 << 16


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: int
    hull_dim: int
    weight_distribution: Tuple[int, ...]

    def label(self) -> str:
        return f"[{self.n}, {self.k}, {self.d}]"


@dataclass(frozen=True)
class LinearCode:
    """
    A binary [n, k] code given by a full-rank generator

    Zero columns are rejected unless allow_zero_columns is set; only duals need them.
    """

    generator: BitMatrix
    allow_zero_columns: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        g = self.generator
        if g.row_count < 1 or g.row_count > g.col_count:
            raise ValueError(f"Need 1 <= k <= n, got k={g.row_count}, n={g.col_count}")
        if rank(g) != g.row_count:
            raise ValueError(f"Generator is rank deficient (rank {rank(g)} < {g.row_count})")
        union = 0
        for row in g.rows:
            union |= row
        if not self.allow_zero_columns and union != (1 << g.col_count) - 1:
            missing = next(j for j in range(g.col_count) if not (union >> j) & 1)
            raise ValueError(f"Generator has a zero column at index {missing}")

    @property
    def n(self) -> int:
        return self.generator.col_count

    @property
    def k(self) -> int:
        return self.generator.row_count

    @cached_property
    def message_weights(self) -> np.ndarray:
        """Weight of the codeword of every message m (index 0 is the zero word)."""
        if self.k > ENUMERATION_GUARD:
            raise ValueError(f"Dimension {self.k} above enumeration guard {ENUMERATION_GUARD}")
        rows = self.generator.rows
        weights = np.zeros(1 << self.k, dtype=np.int64)
        word = 0
        message = 0
        for step in range(1, 1 << self.k):
            bit = (step & -step).bit_length() - 1
            word ^= rows[bit]
            message ^= 1 << bit
            weights[message] = word.bit_count()
        return weights

    @cached_property
    def weight_distribution(self) -> Tuple[int, ...]:
        counts = np.bincount(self.message_weights, minlength=self.n + 1)
        return tuple(int(c) for c in counts)

    @cached_property
    def min_distance(self) -> int:
        return int(self.message_weights[1:].min())

    @cached_property
    def gram_matrix(self) -> BitMatrix:
        return gram(self.generator)

    @cached_property
    def hull_dim(self) -> int:
        return self.k - rank(self.gram_matrix)

    def hull_basis(self) -> BitMatrix:
        return intersect_rowspaces(self.generator, nullspace(self.generator))

    def is_lcd(self) -> bool:
        return self.hull_dim == 0

    def is_so(self) -> bool:
        return self.hull_dim == self.k

    def codewords(self) -> List[int]:
        words = []
        for message in range(1 << self.k):
            word = 0
            for i, row in enumerate(self.generator.rows):
                if (message >> i) & 1:
                    word ^= row
            words.append(word)
        return words

    def params(self) -> CodeParams:
        return CodeParams(self.n, self.k, self.min_distance, self.hull_dim, self.weight_distribution)

    def __str__(self) -> str:
        return f"[{self.n}, {self.k}, {self.min_distance}] hull={self.hull_dim}"


@dataclass(frozen=True)
class NestedWitness:
    """An LCD subcode D = [n, k1, d1] inside code = [n, k, d2] with D + Hu(code) = code."""

    code: LinearCode
    lcd_rows: BitMatrix
    hull_rows: BitMatrix
    d1: int
    d2: int

    def validate(self) -> None:
        g = self.code.generator
        if self.hull_rows.row_count != self.code.hull_dim:
            raise ValueError("Hull rows do not match the hull dimension")
        if rank_of_rows(self.lcd_rows.rows + self.hull_rows.rows) != self.code.k:
            raise ValueError("LCD rows and hull rows do not span the code")
        if rank(gram(self.lcd_rows)) != self.lcd_rows.row_count:
            raise ValueError("Subcode is not LCD")
        if not gram(self.hull_rows).is_zero():
            raise ValueError("Hull rows are not self-orthogonal")
        for h in self.hull_rows.rows:
            if any((h & row).bit_count() & 1 for row in g.rows):
                raise ValueError("Hull rows are not orthogonal to the code")


def new_code(g: BitMatrix) -> LinearCode:
    return LinearCode(g)


def params(code: LinearCode) -> CodeParams:
    return code.params()


def hull_dim(code: LinearCode) -> int:
    return code.hull_dim


def is_lcd(code: LinearCode) -> bool:
    return code.is_lcd()


def is_so(code: LinearCode) -> bool:
    return code.is_so()


def dual(code: LinearCode) -> LinearCode:
    """C^perp; a weight-1 word in C leaves a zero column in it."""
    if code.k == code.n:
        raise ValueError("Dual of a full-space code is the zero code")
    return LinearCode(nullspace(code.generator), allow_zero_columns=True)


def juxtapose(first: LinearCode, second: LinearCode) -> LinearCode:
    if first.k != second.k:
        raise ValueError(f"Dimension mismatch: {first.k} vs {second.k}")
    return LinearCode(first.generator.hstack(second.generator))


def juxtapose_many(codes: Sequence[LinearCode]) -> LinearCode:
    if not codes:
        raise ValueError("Nothing to juxtapose")
    g = codes[0].generator
    for code in codes[1:]:
        if code.k != codes[0].k:
            raise ValueError(f"Dimension mismatch: {codes[0].k} vs {code.k}")
        g = g.hstack(code.generator)
    return LinearCode(g)


def parity_column(code: LinearCode) -> int:
    """Column whose entry in row j is the weight of row j mod 2."""
    column = 0
    for j, row in enumerate(code.generator.rows):
        if row.bit_count() & 1:
            column |= 1 << j
    return column


def append_column(code: LinearCode, column: int) -> LinearCode:
    extra = BitMatrix.from_columns([column], code.k)
    return LinearCode(code.generator.hstack(extra))


def extend_parity(code: LinearCode) -> LinearCode:
    """
    Append the parity column, making every codeword weight even

    Raises:
        ValueError: every row already has even weight (the column would be zero)
    """
    column = parity_column(code)
    if column == 0:
        raise ValueError("All rows have even weight; parity extension would add a zero column")
    return append_column(code, column)


def _message_parity(messages: np.ndarray, v: int) -> np.ndarray:
    masked = messages & v
    parity = np.zeros_like(masked)
    while masked.any():
        parity ^= masked & 1
        masked >>= 1
    return parity


def best_extension_column(code: LinearCode, require_lcd: bool) -> Tuple[int, int]:
    """
    Pick the appended column maximizing the minimum distance

    Args:
        code: Code to extend
        require_lcd: Only columns giving an LCD extension are eligible

    Returns:
        (column, resulting minimum distance)
    """
    if code.k > EXTENSION_GUARD:
        raise ValueError(f"Dimension {code.k} above extension guard {EXTENSION_GUARD}")
    weights = code.message_weights
    base_gram = code.gram_matrix.rows
    best: Optional[Tuple[int, int]] = None
    messages = np.arange(1 << code.k, dtype=np.int64)
    for v in range(1, 1 << code.k):
        d = int((weights + _message_parity(messages, v))[1:].min())
        if best is not None and d <= best[1]:
            continue
        if require_lcd:
            rows = [row ^ (v if (v >> i) & 1 else 0) for i, row in enumerate(base_gram)]
            if rank_of_rows(rows) != code.k:
                continue
        best = (v, d)
    if best is None:
        raise ValueError("No appended column yields an LCD code")
    return best


def extend_best_column(code: LinearCode, require_lcd: bool) -> LinearCode:
    column, _ = best_extension_column(code, require_lcd)
    return append_column(code, column)


def griesmer_min_length(k: int, d: int) -> int:
    if k < 1 or d < 1:
        raise ValueError(f"Need k >= 1 and d >= 1, got k={k}, d={d}")
    return sum(-(-d // (1 << i)) for i in range(k))


def griesmer_max_d(n: int, k: int) -> int:
    if k < 1 or n < k:
        raise ValueError(f"Need 1 <= k <= n, got k={k}, n={n}")
    d = 1
    while griesmer_min_length(k, d + 1) <= n:
        d += 1
    return d


def subcode(code: LinearCode, row_indices: Sequence[int]) -> LinearCode:
    """Code spanned by selected generator rows, zero columns removed."""
    rows = [code.generator.rows[i] for i in row_indices]
    support = 0
    for row in rows:
        support |= row
    keep = [j for j in range(code.n) if (support >> j) & 1]
    packed = []
    for row in rows:
        value = 0
        for new_j, j in enumerate(keep):
            if (row >> j) & 1:
                value |= 1 << new_j
        packed.append(value)
    return LinearCode(BitMatrix(tuple(packed), len(keep)))


def literal_split(code: LinearCode, row_indices: Sequence[int]) -> CodeParams:
    """
    Parameters of the subcode spanned by chosen generator rows

    The length stays n: zero coordinates of the subcode still count.
    """
    rows = [code.generator.rows[i] for i in row_indices]
    if rank_of_rows(rows) != len(rows):
        raise ValueError("Selected rows are dependent")
    weights = []
    for message in range(1, 1 << len(rows)):
        word = 0
        for i, row in enumerate(rows):
            if (message >> i) & 1:
                word ^= row
        weights.append(word.bit_count())
    distribution = [0] * (code.n + 1)
    distribution[0] = 1
    for w in weights:
        distribution[w] += 1
    sub_gram = gram(BitMatrix(tuple(rows), code.n))
    return CodeParams(code.n, len(rows), min(weights), len(rows) - rank(sub_gram), tuple(distribution))


def _span(rows: Sequence[int]) -> List[int]:
    elements = [0]
    for row in rows:
        elements += [e ^ row for e in elements]
    return elements


def _min_weight(rows: Sequence[int]) -> int:
    return min(w.bit_count() for w in _span(rows)[1:])


def nested_witness(code: LinearCode) -> NestedWitness:
    """
    Split a code into its hull and the best LCD complement

    Every complement of the hull inside the row space is tried; the one with
    the largest minimum distance wins, ties going to the lexicographically
    smallest tuple of row ints.

    Raises:
        ValueError: the code is LCD or self-orthogonal
    """
    h = code.hull_dim
    if h == 0:
        raise ValueError("Code is LCD; it has no hull to split off")
    if h == code.k:
        raise ValueError("Code is self-orthogonal; no LCD complement exists")
    hull_rows = code.hull_basis()
    complement: List[int] = []
    current = list(hull_rows.rows)
    for row in code.generator.rows:
        if rank_of_rows(current + [row]) > len(current):
            current.append(row)
            complement.append(row)
    k1 = code.k - h
    if (1 << (h * k1)) > COMPLEMENT_GUARD:
        raise ValueError(f"Too many complements to enumerate: 2^{h * k1}")

    hull_span = _span(hull_rows.rows)
    best_key = None
    best_rows: Tuple[int, ...] = ()
    for shifts in itertools.product(hull_span, repeat=k1):
        rows = tuple(c ^ s for c, s in zip(complement, shifts))
        key = (-_min_weight(rows), rows)
        if best_key is None or key < best_key:
            best_key = key
            best_rows = rows
    lcd_rows = BitMatrix(best_rows, code.n)
    witness = NestedWitness(code, lcd_rows, hull_rows, -best_key[0], code.min_distance)
    witness.validate()
    return witness
