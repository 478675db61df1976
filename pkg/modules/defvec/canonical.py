"""
Canonical forms of defining vectors under GL(k, 2)

The canonical form is the lexicographically smallest vector in the orbit.
Choosing A column by column fixes the positions block by block: block j
(positions 2^(j-1) .. 2^j - 1) only depends on the first j images, so a
level-wise search that keeps every tie is exact.
"""

from __future__ import annotations

from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np

from modules.defvec.defining_vector import DefiningVector

TABLE_MAX_K = 4
EXACT_MAX_K = 5
BEST_EFFORT_MAX_K = 6
DEFAULT_BEAM_CAP = 4096


def _ordered_bases(k: int) -> List[Tuple[int, ...]]:
    bases: List[Tuple[int, ...]] = []

    def extend(prefix: Tuple[int, ...], span: Tuple[int, ...]):
        if len(prefix) == k:
            bases.append(prefix)
            return
        members = set(span)
        for a in range(1, 1 << k):
            if a not in members:
                extend(prefix + (a,), span + tuple(a ^ x for x in span))

    extend((), (0,))
    return bases


@lru_cache(maxsize=None)
def gl_action_table(k: int) -> np.ndarray:
    """Row g lists, for every position i, the 0-based index of A_g alpha_i."""
    if k > TABLE_MAX_K:
        raise ValueError(f"Action table only built for k <= {TABLE_MAX_K}")
    size = (1 << k) - 1
    bases = _ordered_bases(k)
    table = np.zeros((len(bases), size), dtype=np.int32)
    for g, images in enumerate(bases):
        span = [0]
        for a in images:
            span += [a ^ x for x in span]
        table[g] = np.asarray(span[1:], dtype=np.int32) - 1
    table.setflags(write=False)
    return table


def _table_minimum(values: Sequence[int], k: int) -> Tuple[int, ...]:
    orbit = np.asarray(values, dtype=np.int64)[gl_action_table(k)]
    best = np.lexsort(orbit.T[::-1])[0]
    return tuple(int(v) for v in orbit[best])


def _beam(values: Sequence[int], k: int, cap: Optional[int], reference: bool) -> Tuple[bool, Tuple[int, ...]]:
    """
    Level-wise search over the images of the unit vectors

    Args:
        values: Multiplicities, values[i - 1] for position i
        k: Dimension
        cap: Beam width limit (None keeps every tie)
        reference: Compare against values itself and stop at the first smaller block

    Returns:
        (values is canonical, minimal vector found)
    """
    size = (1 << k) - 1
    beam: List[Tuple[int, ...]] = [(0,)]
    found: List[int] = []
    for level in range(k):
        width = 1 << level
        own = tuple(values[width - 1 : 2 * width - 1])
        best: Optional[Tuple[int, ...]] = own if reference else None
        survivors: List[Tuple[int, ...]] = []
        for span in beam:
            members = set(span)
            for a in range(1, size + 1):
                if a in members:
                    continue
                block = tuple(values[(a ^ x) - 1] for x in span)
                if best is None or block < best:
                    if reference:
                        return False, ()
                    best = block
                    survivors = [span + tuple(a ^ x for x in span)]
                elif block == best:
                    survivors.append(span + tuple(a ^ x for x in span))
        if cap is not None and len(survivors) > cap:
            survivors = survivors[:cap]
        beam = survivors
        found.extend(best)
    return True, tuple(found)


def canonicalize(vector: DefiningVector, best_effort: bool = False, beam_cap: int = DEFAULT_BEAM_CAP) -> DefiningVector:
    """
    Lexicographically smallest vector in the GL(k, 2) orbit

    Args:
        vector: Defining vector
        best_effort: Allow k = 6 with a capped beam (result may not be the true minimum)
        beam_cap: Beam width used in best-effort mode

    Returns:
        Canonical defining vector
    """
    k = vector.k
    if vector.is_constant():
        return vector
    if k <= TABLE_MAX_K:
        return DefiningVector(k, _table_minimum(vector.entries, k))
    if k <= EXACT_MAX_K:
        return DefiningVector(k, _beam(vector.entries, k, None, False)[1])
    if k <= BEST_EFFORT_MAX_K and best_effort:
        return DefiningVector(k, _beam(vector.entries, k, beam_cap, False)[1])
    raise ValueError(f"k={k} is outside exact canonicalization range (pass best_effort for k=6)")


def is_canonical_values(values: Sequence[int], k: int) -> bool:
    """Canonicity test on raw multiplicities, used by orderly generation on prefixes."""
    if len(set(values)) <= 1:
        return True
    if k <= TABLE_MAX_K:
        return _table_minimum(values, k) == tuple(values)
    if k <= EXACT_MAX_K:
        return _beam(values, k, None, True)[0]
    raise ValueError(f"k={k} is outside exact canonicalization range")


def is_canonical(vector: DefiningVector) -> bool:
    return is_canonical_values(vector.entries, vector.k)
