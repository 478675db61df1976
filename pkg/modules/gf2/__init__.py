"""
GF(2) linear algebra
"""

from .bitmatrix import (
    BitMatrix,
    gram,
    in_rowspace,
    intersect_rowspaces,
    inverse,
    is_invertible,
    matmul,
    nullspace,
    rank,
    rank_of_rows,
    rref,
)

__all__ = [
    "BitMatrix",
    "gram",
    "in_rowspace",
    "intersect_rowspaces",
    "inverse",
    "is_invertible",
    "matmul",
    "nullspace",
    "rank",
    "rank_of_rows",
    "rref",
]
