"""
Anti-codes and reduced codes
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from modules.codes import LinearCode
from modules.defvec.defining_vector import DefiningVector, gram_from_defvec, weights_of
from modules.gf2 import BitMatrix


@dataclass(frozen=True)
class AntiCode:
    """L^c = a*1 - L for a = l_max, with m = sum(L^c) and delta its largest codeword weight."""

    a: int
    anti_vector: DefiningVector
    m: int
    delta: int
    weights: Tuple[int, ...]

    @property
    def k(self) -> int:
        return self.anti_vector.k

    def predicted_distance(self) -> int:
        return self.a * (1 << (self.k - 1)) - self.delta

    def gram(self) -> BitMatrix:
        return gram_from_defvec(self.anti_vector)


def anti(vector: DefiningVector) -> AntiCode:
    if vector.is_constant():
        raise ValueError("Constant defining vector has an empty anti-code")
    a = vector.l_max
    complement = DefiningVector(vector.k, tuple(a - e for e in vector.entries))
    weights = weights_of(complement)
    delta = max(0, int(weights.max()))
    return AntiCode(a, complement, complement.n, delta, tuple(int(w) for w in weights))


def reduce(code: LinearCode, v: int) -> LinearCode:
    """
    Reduced code at column type v

    Row operations send v to e_1; the columns equal to e_1 and the first row
    are then deleted. The result is an [n - m, k - 1, >= d] code where m is
    the multiplicity of v.
    """
    if code.k < 2:
        raise ValueError("Cannot reduce a one-dimensional code")
    columns = code.generator.columns()
    if v == 0 or v not in columns:
        raise ValueError(f"Column type {v} does not occur in the generator")
    rows: List[int] = list(code.generator.rows)
    pivot = (v & -v).bit_length() - 1
    rows[0], rows[pivot] = rows[pivot], rows[0]
    swapped = v
    if pivot:
        low, high = swapped & 1, (swapped >> pivot) & 1
        swapped ^= (low ^ high) | ((low ^ high) << pivot)
    for r in range(1, code.k):
        if (swapped >> r) & 1:
            rows[r] ^= rows[0]
    transformed = BitMatrix(tuple(rows), code.n)
    keep = [col >> 1 for col in transformed.columns() if col != 1]
    return LinearCode(BitMatrix.from_columns(keep, code.k - 1))
