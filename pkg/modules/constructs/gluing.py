"""
Gluing - Extend a nested witness by an LCD code on fresh coordinates
"""

from modules.codes import LinearCode, NestedWitness
from modules.defvec import reduce, simplex_matrix
from modules.gf2 import BitMatrix

K33_PARAMS = (33, 6, 16, 5)


def glue(witness: NestedWitness, extension: LinearCode) -> LinearCode:
    """
    Generator [lcd_rows | 0 ; hull_rows | G(E)]

    The Gram matrix is block-diagonal with blocks gram(lcd_rows) and gram(E),
    so the result is LCD, and d >= min(d1, d2 + d(E)).

    Args:
        witness: Code split into an LCD subcode and its hull
        extension: LCD code whose dimension equals the hull dimension

    Returns:
        The glued [n + m, k] code
    """
    hull_rows = witness.hull_rows.rows
    if extension.k != len(hull_rows):
        raise ValueError(f"Dimension mismatch: extension has k={extension.k}, hull has {len(hull_rows)} rows")
    if not extension.is_lcd():
        raise ValueError(f"Extension code {extension} is not LCD")
    shift = witness.code.n
    rows = list(witness.lcd_rows.rows)
    rows += [h | (e << shift) for h, e in zip(hull_rows, extension.generator.rows)]
    return LinearCode(BitMatrix(tuple(rows), shift + extension.n))


def gluing_bound(witness: NestedWitness, extension: LinearCode) -> int:
    return min(witness.d1, witness.d2 + extension.min_distance)


def k_6_33() -> LinearCode:
    """First row all ones; rows 2-6 are two zero columns followed by S_5."""
    s5 = simplex_matrix(5)
    rows = [(1 << 33) - 1] + [row << 2 for row in s5.rows]
    code = LinearCode(BitMatrix(tuple(rows), 33))
    found = (code.n, code.k, code.min_distance, code.hull_dim)
    if found != K33_PARAMS:
        raise ValueError(f"K_6,33 produced {found}, expected {K33_PARAMS}")
    return code


def k_6_33_reduced() -> LinearCode:
    """
    Reduced code of K_6,33 at the doubled column e_1

    Both leading columns equal e_1, so the reduction drops two coordinates
    and leaves S_5 = [31, 5, 16], which is self-orthogonal.
    """
    return reduce(k_6_33(), 1)
