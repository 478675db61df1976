"""
Recipes - Small LCD codes written down directly as defining vectors

Every recipe is a simplex code with a few column types added or removed.
Units are the positions 1, 2, 4, ... (the columns of the identity).
"""

from typing import Callable, Dict, Iterable, List, Tuple

from modules.codes import LinearCode
from modules.defvec import DefiningVector, code_from_defvec


def _units(k: int) -> List[int]:
    return [1 << r for r in range(k)]


def _simplex_edit(k: int, add: Iterable[int] = (), remove: Iterable[int] = ()) -> DefiningVector:
    entries = [1] * ((1 << k) - 1)
    for pos in add:
        entries[pos - 1] += 1
    for pos in remove:
        if entries[pos - 1] == 0:
            raise ValueError(f"Position {pos} removed twice")
        entries[pos - 1] -= 1
    return DefiningVector.of(k, entries)


def _weight3(k: int) -> List[int]:
    return [i for i in range(1, 1 << k) if i.bit_count() == 3]


def _odd_positions(k: int) -> List[int]:
    return list(range(1, 1 << k, 2))


# GF(4) = {0, 1, w, w^2} stored as a + 2b for a + b*w; addition is xor.
_GF4_MUL = ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2))
_W, _W2 = 2, 3


def _gf4_column(x: int, y: int, z: int) -> int:
    return x | y << 2 | z << 4


def _plane_point(point: Tuple[int, int, int]) -> List[int]:
    """The three nonzero multiples of a PG(2, 4) point, read as columns of F_2^6."""
    return [_gf4_column(*(_GF4_MUL[c][x] for x in point)) for c in (1, _W, _W2)]


def _plane_edit(drop_points: Iterable[Tuple[int, int, int]], remove: Iterable[int] = ()) -> DefiningVector:
    """
    S_6 read as the 21 points of PG(2, 4), minus whole points and single columns

    A union of points has an alternating Gram matrix. It is nonsingular exactly
    when the Hermitian matrix sum(v v^*) over the dropped points is.
    """
    columns = [c for point in drop_points for c in _plane_point(point)]
    return _simplex_edit(6, remove=columns + list(remove))


RECIPES: Dict[Tuple[int, int], Callable[[], DefiningVector]] = {
    # k = 4
    (6, 4): lambda: DefiningVector.from_support(4, _units(4) + [15, 15]),
    (7, 4): lambda: DefiningVector.from_support(4, _units(4) + [15, 15, 15]),
    (8, 4): lambda: _simplex_edit(4, remove=_units(4) + [3, 12, 15]),
    (9, 4): lambda: _simplex_edit(4, remove=_units(4) + [3, 12]),
    (10, 4): lambda: _simplex_edit(4, remove=_units(4) + [3]),
    (11, 4): lambda: _simplex_edit(4, remove=_units(4)),
    (12, 4): lambda: DefiningVector.from_support(4, _odd_positions(4) + _units(4)),
    (13, 4): lambda: DefiningVector.from_support(4, _odd_positions(4) + _units(4) + [15]),
    (14, 4): lambda: _simplex_edit(4, add=[1, 2], remove=[4, 8, 3]),
    (15, 4): lambda: _simplex_edit(4, add=[1, 2], remove=[4, 8]),
    (16, 4): lambda: _simplex_edit(4, add=_units(4), remove=[15, 3, 12]),
    (17, 4): lambda: _simplex_edit(4, add=_units(4), remove=[3, 12]),
    (18, 4): lambda: _simplex_edit(4, add=_units(4), remove=[15]),
    (19, 4): lambda: _simplex_edit(4, add=_units(4)),
    # k = 5
    (32, 5): lambda: _simplex_edit(5, add=_units(5), remove=[3, 12, 9, 6]),
    (33, 5): lambda: _simplex_edit(5, add=_units(5), remove=[3, 24, 27]),
    (34, 5): lambda: _simplex_edit(5, add=_units(5), remove=[3, 12]),
    (35, 5): lambda: _simplex_edit(5, add=_units(5), remove=[3]),
    # k = 6
    (6, 6): lambda: DefiningVector.from_support(6, _units(6)),
    (7, 6): lambda: DefiningVector.from_support(6, _units(6) + [63]),
    (10, 6): lambda: DefiningVector.from_support(6, _units(6) + [7, 25, 42, 52]),
    (17, 6): lambda: DefiningVector.from_support(
        6, [p for p in _weight3(6) if p not in (14, 50, 21, 25, 28)] + [1, 3]
    ),
    (21, 6): lambda: DefiningVector.from_support(6, [p for p in _weight3(6) if p not in (25, 42, 11)] + [1, 2, 4, 24]),
    (26, 6): lambda: DefiningVector.from_support(6, _weight3(6) + _units(6)),
    # 15 points: every line keeps at most 5, so d = 20
    (45, 6): lambda: _plane_edit([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, _W, 0), (0, 1, 1)]),
    # 16 points less one column on each of (1:0:0), (0:1:0); every line missing
    # the dropped points passes through one of them, so d = 21
    (46, 6): lambda: _plane_edit(
        [(1, 1, 0), (1, _W, 0), (1, _W2, 0), (0, 0, 1), (1, 0, 1)],
        remove=[_gf4_column(1, 0, 0), _gf4_column(0, 1, 0)],
    ),
}


def has_recipe(n: int, k: int) -> bool:
    return (n, k) in RECIPES


def recipe_vector(n: int, k: int) -> DefiningVector:
    if (n, k) not in RECIPES:
        raise ValueError(f"No recipe for [{n}, {k}]")
    vector = RECIPES[(n, k)]()
    if vector.n != n:
        raise ValueError(f"Recipe for [{n}, {k}] has length {vector.n}")
    return vector


def recipe_code(n: int, k: int) -> LinearCode:
    return code_from_defvec(recipe_vector(n, k))
