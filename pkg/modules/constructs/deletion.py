"""
Deletion Construction - The [45, 6, 22] code obtained by removing a block-diagonal column set from S_6
"""

from typing import Dict

from modules.codes import CodeParams, LinearCode, literal_split
from modules.defvec import DefiningVector, code_from_defvec, simplex_matrix
from modules.gf2 import BitMatrix

G45_PARAMS = (45, 6, 22, 4)


def k_6_18() -> BitMatrix:
    """6 x 18 block-diagonal matrix: S_4 in rows 1-4, S_2 in rows 5-6."""
    low = simplex_matrix(4).columns()
    high = [column << 4 for column in simplex_matrix(2).columns()]
    return BitMatrix.from_columns(low + high, 6)


def g_6_45() -> LinearCode:
    """
    Delete the column types of K_{6,18} from S_6

    The surviving positions are exactly those whose low four bits and high
    two bits are both nonzero.

    Raises:
        ValueError: a deleted column is missing from S_6, or the result does
            not have parameters [45, 6, 22] with hull dimension 4
    """
    entries = [1] * 63
    for column in k_6_18().columns():
        if entries[column - 1] == 0:
            raise ValueError(f"Column type {column} deleted twice from S_6")
        entries[column - 1] -= 1
    code = code_from_defvec(DefiningVector.of(6, entries))
    found = (code.n, code.k, code.min_distance, code.hull_dim)
    if found != G45_PARAMS:
        raise ValueError(f"Deletion construction produced {found}, expected {G45_PARAMS}")
    return code


def g_6_45_row_split() -> Dict[str, CodeParams]:
    """
    Parameters of the literal row split X = rows 1-4, Y = rows 5-6

    Y generates [45, 2, 30] and is LCD. X generates [45, 4, 24]: every
    nonzero message on the low rows meets 8 of the 15 low patterns in
    each of the 3 high blocks, so X is a triple simplex code and not [45, 4, 28].
    """
    code = g_6_45()
    return {
        "X": literal_split(code, [0, 1, 2, 3]),
        "Y": literal_split(code, [4, 5]),
    }
