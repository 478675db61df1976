"""
Defining Vectors - Column-multiplicity description of generator matrices

Position i (1-based) stands for the column alpha_i, the binary expansion of i
with the least significant bit in row 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np

from modules.codes import LinearCode
from modules.gf2 import BitMatrix


@dataclass(frozen=True)
class DefiningVector:
    k: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"Dimension must be positive, got {self.k}")
        size = (1 << self.k) - 1
        if len(self.entries) != size:
            raise ValueError(f"Expected {size} entries for k={self.k}, got {len(self.entries)}")
        if any(e < 0 for e in self.entries):
            raise ValueError("Defining vector entries must be nonnegative")
        if sum(self.entries) < 1:
            raise ValueError("Defining vector describes an empty matrix")

    @classmethod
    def of(cls, k: int, entries: Sequence[int]) -> "DefiningVector":
        return cls(k, tuple(int(e) for e in entries))

    @classmethod
    def constant(cls, k: int, value: int) -> "DefiningVector":
        return cls(k, (value,) * ((1 << k) - 1))

    @classmethod
    def from_support(cls, k: int, positions: Sequence[int], base: int = 0) -> "DefiningVector":
        """base everywhere plus one for each listed position (repeats add up)."""
        entries = [base] * ((1 << k) - 1)
        for pos in positions:
            entries[pos - 1] += 1
        return cls(k, tuple(entries))

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return sum(self.entries)

    @property
    def l_max(self) -> int:
        return max(self.entries)

    @property
    def l_min(self) -> int:
        return min(self.entries)

    def at(self, i: int) -> int:
        """Multiplicity of alpha_i, 1-based."""
        return self.entries[i - 1]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.entries, dtype=np.int64)

    def is_constant(self) -> bool:
        return len(set(self.entries)) == 1

    def to_text(self) -> str:
        return f"{self.k}: " + " ".join(str(e) for e in self.entries)

    @classmethod
    def from_text(cls, text: str) -> "DefiningVector":
        head, sep, body = text.strip().partition(":")
        if not sep or not head.strip().isdigit():
            raise ValueError(f"Bad defining vector line: {text!r}")
        return cls.of(int(head), [int(tok) for tok in body.split()])

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class WeightProfile:
    W: Tuple[int, ...]
    d: int
    lam: Tuple[int, ...]
    sigma: int


TypeSignature = Tuple[Tuple[int, int], ...]


def _check_k(k: int, low: int, high: int) -> None:
    if not low <= k <= high:
        raise ValueError(f"k={k} outside supported range {low}..{high}")


def simplex_matrix(k: int) -> BitMatrix:
    """S_1 = (1); S_{k+1} = (S_k 0 S_k ; 0...0 1 1...1)."""
    _check_k(k, 2, 16)
    rows = [1]
    width = 1
    for _ in range(1, k):
        shift = width + 1
        rows = [row | (row << shift) for row in rows]
        rows.append(((1 << (width + 1)) - 1) << width)
        width = 2 * width + 1
    return BitMatrix(tuple(rows), width)


@lru_cache(maxsize=None)
def _pk_array(k: int) -> np.ndarray:
    p = np.ones((1, 1), dtype=np.int64)
    for _ in range(1, k):
        size = p.shape[0]
        zeros = np.zeros((size, 1), dtype=np.int64)
        ones = np.ones((size, 1), dtype=np.int64)
        j = np.ones_like(p)
        middle = np.concatenate(
            [np.zeros((1, size), dtype=np.int64), np.ones((1, 1), dtype=np.int64), np.ones((1, size), dtype=np.int64)],
            axis=1,
        )
        top = np.concatenate([p, zeros, p], axis=1)
        bottom = np.concatenate([p, ones, j - p], axis=1)
        p = np.concatenate([top, middle, bottom], axis=0)
    p.setflags(write=False)
    return p


def pk_array(k: int) -> np.ndarray:
    """P_k as a read-only integer array; entry (u-1, v-1) is the parity of u AND v."""
    _check_k(k, 1, 12)
    return _pk_array(k)


def pk_matrix(k: int) -> BitMatrix:
    _check_k(k, 2, 12)
    return BitMatrix.from_rows(_pk_array(k).tolist())


def qk_matrix(k: int) -> BitMatrix:
    _check_k(k, 2, 12)
    return BitMatrix.from_rows((1 - _pk_array(k)).tolist())


def defining_vector(g: BitMatrix) -> DefiningVector:
    _check_k(g.row_count, 1, 16)
    counts = [0] * ((1 << g.row_count) - 1)
    for j, column in enumerate(g.columns()):
        if column == 0:
            raise ValueError(f"Zero column at index {j}")
        counts[column - 1] += 1
    return DefiningVector(g.row_count, tuple(counts))


def matrix_from_defvec(vector: DefiningVector) -> BitMatrix:
    columns: List[int] = []
    for i, count in enumerate(vector.entries, start=1):
        columns.extend([i] * count)
    return BitMatrix.from_columns(columns, vector.k)


def code_from_defvec(vector: DefiningVector) -> LinearCode:
    return LinearCode(matrix_from_defvec(vector))


def weights_of(vector: DefiningVector) -> np.ndarray:
    return pk_array(vector.k) @ vector.as_array()


def weight_profile(vector: DefiningVector) -> WeightProfile:
    W = weights_of(vector)
    d = int(W.min())
    lam = W - d
    sigma = int(lam.sum())
    expected = (1 << (vector.k - 1)) * vector.n - d * vector.size
    if sigma != expected:
        raise ArithmeticError(f"sigma identity failed: {sigma} != {expected}")
    return WeightProfile(tuple(int(w) for w in W), d, tuple(int(x) for x in lam), sigma)


def li_bounds(d: int, sigma: int, k: int) -> Tuple[int, int]:
    """
    Range of every defining-vector entry of an [n, k, d] code with this sigma

    Returns:
        (max(0, ceil((d - sigma) / 2^(k-1))), floor((d + sigma) / 2^(k-1)))
    """
    if sigma < 0 or d < 1:
        raise ValueError(f"Need sigma >= 0 and d >= 1, got sigma={sigma}, d={d}")
    half = 1 << (k - 1)
    lo = -((sigma - d) // half)
    hi = (d + sigma) // half
    return max(lo, 0), hi


def type_signature(vector: DefiningVector) -> TypeSignature:
    counts: dict = {}
    for e in vector.entries:
        counts[e] = counts.get(e, 0) + 1
    return tuple(sorted(counts.items()))


def format_signature(signature: TypeSignature) -> str:
    return "[" + " | ".join(f"({value})_{mult}" for value, mult in signature) + "]"


def gram_from_defvec(vector: DefiningVector) -> BitMatrix:
    """Sum of alpha alpha^T over positions with odd multiplicity."""
    rows = [0] * vector.k
    for i, count in enumerate(vector.entries, start=1):
        if count & 1:
            for r in range(vector.k):
                if (i >> r) & 1:
                    rows[r] ^= i
    return BitMatrix(tuple(rows), vector.k)


def transform(vector: DefiningVector, images: Sequence[int]) -> DefiningVector:
    """
    Act with A in GL(k, 2) given by the images of the unit vectors

    Position i of the result holds the multiplicity of A alpha_i.
    """
    if len(images) != vector.k:
        raise ValueError(f"Need {vector.k} images, got {len(images)}")
    entries = []
    for i in range(1, vector.size + 1):
        target = 0
        for b in range(vector.k):
            if (i >> b) & 1:
                target ^= images[b]
        if target == 0:
            raise ValueError("Images are not linearly independent")
        entries.append(vector.entries[target - 1])
    return DefiningVector(vector.k, tuple(entries))
