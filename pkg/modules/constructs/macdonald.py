"""
MacDonald Codes - s+1 copies of S_k with one copy of an m-dimensional subspace removed
"""

from typing import Tuple

from modules.codes import LinearCode
from modules.defvec import DefiningVector, code_from_defvec


def _check(s: int, k: int, m: int) -> None:
    if k < 2 or not 1 <= m <= k - 1 or s < 0:
        raise ValueError(f"Need k >= 2, 1 <= m <= k-1, s >= 0; got s={s}, k={k}, m={m}")


def macdonald_vector(s: int, k: int, m: int) -> DefiningVector:
    """s on the nonzero vectors of span(alpha_1..alpha_m), s+1 elsewhere."""
    _check(s, k, m)
    inside = (1 << m) - 1
    return DefiningVector.of(k, [s if i <= inside else s + 1 for i in range(1, 1 << k)])


def macdonald(s: int, k: int, m: int) -> LinearCode:
    return code_from_defvec(macdonald_vector(s, k, m))


def macdonald_hull(k: int, m: int) -> int:
    """
    Hull dimension of MD_s(k, m) for k >= 3

    The odd entries sit either on the removed subspace or on its complement
    in S_k, and gram(S_k) = 0, so the Gram matrix is that of S_m: rank 1 for
    m = 1, rank 2 for m = 2 and zero for m >= 3.
    """
    if k < 3 or not 1 <= m <= k - 1:
        raise ValueError(f"Hull formula needs k >= 3 and 1 <= m <= k-1, got k={k}, m={m}")
    if m == 1:
        return k - 1
    if m == 2:
        return k - 2
    return k


def macdonald_params(s: int, k: int, m: int) -> Tuple[int, int]:
    """(n, d) = (s(2^k - 1) + 2^k - 2^m, s 2^(k-1) + 2^(k-1) - 2^(m-1))."""
    _check(s, k, m)
    n = s * ((1 << k) - 1) + (1 << k) - (1 << m)
    d = s * (1 << (k - 1)) + (1 << (k - 1)) - (1 << (m - 1))
    return n, d
