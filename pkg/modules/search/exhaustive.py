"""
Exhaustive Search - Orderly generation of defining vectors, one per GL(k, 2) orbit

Positions are filled in increasing order. Whenever a block 1..2^j - 1 is
complete the prefix must be canonical as a j-dimensional defining vector:
any B in GL(j, 2) lowering the prefix extends to diag(B, I), which lowers
the whole vector.
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, List, Optional, Set, Tuple

from modules.codes import CodeRecord, LinearCode, make_record
from modules.defvec import (
    DefiningVector,
    code_from_defvec,
    gram_from_defvec,
    is_canonical_values,
    pk_array,
    transform,
)
from modules.gf2 import BitMatrix, rank
from modules.search.budget import ExhaustiveLimits

RAW_ORACLE_MAX_K = 3
RAW_ORACLE_MAX_N = 12


@dataclass(frozen=True)
class ExhaustiveResult:
    n: int
    k: int
    d_l: Optional[int]
    witness: Optional[CodeRecord]
    orbits: int
    lcd_orbits: int

    @property
    def found(self) -> bool:
        return self.d_l is not None


def _check_limits(n: int, k: int, limits: ExhaustiveLimits) -> None:
    if not 1 <= k <= 5:
        raise ValueError(f"Exhaustive enumeration supports 1 <= k <= 5, got k={k}")
    if n < 1:
        raise ValueError(f"Length must be positive, got n={n}")
    ceiling = limits.ceiling(k)
    if n > ceiling:
        raise ValueError(f"n={n} exceeds the exhaustive ceiling {ceiling} for k={k}")


def _extend(prefix: List[int], remaining: int, cap: int, size: int) -> Iterator[Tuple[int, ...]]:
    position = len(prefix) + 1
    if position > size:
        if remaining == 0:
            yield tuple(prefix)
        return
    low = max(0, remaining - (size - position) * cap)
    for value in range(low, min(cap, remaining) + 1):
        prefix.append(value)
        boundary = (position & (position + 1)) == 0
        if not boundary or is_canonical_values(prefix, position.bit_length()):
            yield from _extend(prefix, remaining - value, cap, size)
        prefix.pop()


def enumerate_defvecs(
    n: int,
    k: int,
    l_cap: Optional[int] = None,
    limits: Optional[ExhaustiveLimits] = None,
    first_value: Optional[int] = None,
) -> Iterator[DefiningVector]:
    """
    Yield the canonical defining vector of every orbit with sum n

    Args:
        n: Length
        k: Dimension (at most 5)
        l_cap: Largest multiplicity allowed per position (default n)
        limits: Exhaustive ceilings
        first_value: Restrict the first position to this value (work partitioning)

    Yields:
        Canonical DefiningVector instances in lexicographic order
    """
    limits = limits or ExhaustiveLimits()
    _check_limits(n, k, limits)
    cap = n if l_cap is None else min(l_cap, n)
    size = (1 << k) - 1
    firsts = range(0, cap + 1) if first_value is None else [first_value]
    for value in firsts:
        if value > cap or value > n or n - value > (size - 1) * cap:
            continue
        if size == 1:
            if value == n:
                yield DefiningVector(k, (value,))
            continue
        for entries in _extend([value], n - value, cap, size):
            yield DefiningVector(k, entries)


def _scan(n: int, k: int, cap: int, limits: ExhaustiveLimits, first_value: int):
    p = pk_array(k)
    best_d, best_entries = None, None
    orbits = lcd = 0
    for vector in enumerate_defvecs(n, k, cap, limits, first_value):
        orbits += 1
        d = int((p @ vector.as_array()).min())
        if d == 0:
            continue
        if rank(gram_from_defvec(vector)) != k:
            continue
        lcd += 1
        if best_d is None or d > best_d or (d == best_d and vector.entries < best_entries):
            best_d, best_entries = d, vector.entries
    return best_d, best_entries, orbits, lcd


class ExhaustiveSearch:
    """Largest LCD minimum distance over all orbits of [n, k] defining vectors"""

    def __init__(self, limits: Optional[ExhaustiveLimits] = None):
        self.limits = limits or ExhaustiveLimits()
        self.logger = self._setup_logger()

    def _setup_logger(self) -> logging.Logger:
        logger = logging.getLogger("ExhaustiveSearch")
        logger.setLevel(logging.INFO)
        return logger

    def run(self, n: int, k: int, l_cap: Optional[int] = None) -> ExhaustiveResult:
        _check_limits(n, k, self.limits)
        cap = n if l_cap is None else min(l_cap, n)
        firsts = list(range(0, cap + 1))
        self.logger.info(f"Exhaustive search [{n}, {k}] over {len(firsts)} subtrees, {self.limits.workers} workers")

        if self.limits.workers > 1:
            with ThreadPoolExecutor(max_workers=self.limits.workers) as pool:
                parts = list(pool.map(lambda v: _scan(n, k, cap, self.limits, v), firsts))
        else:
            parts = [_scan(n, k, cap, self.limits, v) for v in firsts]

        best_d, best_entries = None, None
        for d, entries, _, _ in parts:
            if d is None:
                continue
            if best_d is None or d > best_d or (d == best_d and entries < best_entries):
                best_d, best_entries = d, entries
        orbits = sum(part[2] for part in parts)
        lcd = sum(part[3] for part in parts)

        if best_d is None:
            self.logger.info(f"No LCD [{n}, {k}] code among {orbits} orbits")
            return ExhaustiveResult(n, k, None, None, orbits, lcd)
        code = code_from_defvec(DefiningVector(k, best_entries))
        witness = make_record(f"n{n}_k{k}", code, "searched", notes="exhaustive")
        self.logger.info(f"d_l({n}, {k}) = {best_d} ({lcd} LCD orbits of {orbits})")
        return ExhaustiveResult(n, k, best_d, witness, orbits, lcd)


def exhaustive_dl(
    n: int, k: int, l_cap: Optional[int] = None, limits: Optional[ExhaustiveLimits] = None
) -> ExhaustiveResult:
    return ExhaustiveSearch(limits).run(n, k, l_cap)


def raw_generator_dl(n: int, k: int) -> Optional[int]:
    """
    Independent oracle: every multiset of n nonzero column types

    Rank, LCD-ness and distance come from LinearCode directly, without the
    defining-vector calculus.
    """
    if k > RAW_ORACLE_MAX_K or n > RAW_ORACLE_MAX_N:
        raise ValueError(f"Raw oracle limited to k <= {RAW_ORACLE_MAX_K}, n <= {RAW_ORACLE_MAX_N}")
    best = None
    for columns in itertools.combinations_with_replacement(range(1, 1 << k), n):
        g = BitMatrix.from_columns(columns, k)
        if rank(g) != k:
            continue
        code = LinearCode(g)
        if code.is_lcd() and (best is None or code.min_distance > best):
            best = code.min_distance
    return best


def _gl_bases(k: int) -> List[Tuple[int, ...]]:
    bases = []
    for images in itertools.permutations(range(1, 1 << k), k):
        if rank(BitMatrix(tuple(images), k)) == k:
            bases.append(images)
    return bases


def count_orbits_directly(n: int, k: int, l_cap: Optional[int] = None) -> int:
    """Partition every composition of n into full GL(k, 2) orbits and count them."""
    cap = n if l_cap is None else l_cap
    size = (1 << k) - 1
    bases = _gl_bases(k)
    seen: Set[Tuple[int, ...]] = set()
    count = 0
    for entries in itertools.product(range(cap + 1), repeat=size):
        if sum(entries) != n or entries in seen:
            continue
        count += 1
        vector = DefiningVector(k, entries)
        for images in bases:
            seen.add(transform(vector, images).entries)
    return count
