"""
Proof Rules - Parameter families, admissible l_max cases and the rules that close them

A node is a family [n, k, d] with n and d affine in s. Write every
defining-vector entry as base + offset where base = d_coeff / 2^(k-1) * s;
the admissible offsets of l_max and l_min are then constants.
"""

import itertools
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from modules.codes import LinearCode
from modules.constructs import macdonald, macdonald_hull
from modules.defvec import pk_array, simplex_matrix
from modules.gf2 import rank_of_rows
from modules.theorems.affine import (
    AffineInt,
    ArithmeticCheckError,
    equal_for_all,
    greater_for_all,
    griesmer_sum_affine,
    sigma_affine,
)

VERIFIED = "verified"
ARITHMETIC_ONLY = "arithmetic-only"
EXTERNAL = "external-assumption"
UNRESOLVED = "unresolved"
SEVERITY = {VERIFIED: 0, ARITHMETIC_ONLY: 1, EXTERNAL: 2, UNRESOLVED: 3}

R1 = "griesmer-violation"
R2 = "simplex-multiple-SO"
R3 = "macdonald-hull"
R4 = "external-ref"
R5 = "anti-vector-forcing"
LIFT = "extension-lift"
RULES = (R1, R2, R3, R4, R5, LIFT)

R2_SPOT_CHECKS = (1, 2, 3)
R3_SPOT_CHECKS = (0, 1, 2)
# Largest number of anti-vector placements R5 will enumerate
PLACEMENT_LIMIT = 200_000


def worst(statuses: Sequence[str]) -> str:
    return max(statuses, key=SEVERITY.__getitem__, default=VERIFIED)


def status_from_hull(hull: int, depth: int) -> str:
    """Each reduction loses at most one hull dimension; a nonzero hull rules out LCD."""
    return VERIFIED if hull - depth >= 1 else UNRESOLVED


@dataclass(frozen=True)
class RuleOutcome:
    status: str
    detail: str


@dataclass(frozen=True)
class Family:
    n: AffineInt
    k: int
    d: AffineInt

    @property
    def size(self) -> int:
        return (1 << self.k) - 1

    @property
    def half(self) -> int:
        return 1 << (self.k - 1)

    def label(self) -> str:
        return f"[{self.n}, {self.k}, {self.d}]"

    def sigma(self) -> int:
        value = sigma_affine(self.n, self.k, self.d)
        if not value.is_constant:
            raise ValueError(f"sigma of {self.label()} is {value}, not constant")
        return value.const

    def base(self) -> AffineInt:
        if self.d.coeff % self.half:
            raise ValueError(f"{self.label()}: 2^{self.k - 1} does not divide {self.d.coeff}")
        base = self.d.coeff // self.half
        if self.n.coeff != self.size * base:
            raise ValueError(f"{self.label()}: length coefficient is not {self.size} x {base}")
        return AffineInt(base, 0)

    def lmax_range(self) -> Tuple[int, int]:
        """Offsets from ceil(n / N) to floor((d + sigma) / 2^(k-1))."""
        self.base()
        low = -(-self.n.const // self.size)
        high = (self.d.const + self.sigma()) // self.half
        return low, high

    def lmin_floor(self) -> int:
        """ceil((d - sigma) / 2^(k-1)) as an offset; not clamped at -base."""
        return -((self.sigma() - self.d.const) // self.half)

    def admissible(self, a: int, b: Optional[int] = None) -> bool:
        low, high = self.lmax_range()
        if not low <= a <= high:
            return False
        return b is None or self.lmin_floor() <= b <= a

    def length_feasible(self, a: int, b: int) -> bool:
        """Some vector with max a and min b (as offsets) sums to n."""
        c = self.n.const
        return a + (self.size - 1) * b <= c <= (self.size - 1) * a + b

    def constant_feasible(self, a: int) -> bool:
        return self.n.const == self.size * a and self.d.const == self.half * a

    def entry(self, offset: int) -> AffineInt:
        return self.base() + offset

    def reduce(self, a: int) -> "Family":
        if self.k < 2:
            raise ValueError(f"Cannot reduce the one-dimensional family {self.label()}")
        return Family(self.n - self.entry(a), self.k - 1, self.d)


def family_6(t: int, e: int) -> Family:
    return Family(AffineInt(63, t), 6, AffineInt(32, e))


def apply_griesmer(child: Family, s_min: int) -> RuleOutcome:
    total = griesmer_sum_affine(child.d, child.k)
    if greater_for_all(total, child.n, s_min):
        return RuleOutcome(VERIFIED, f"{child.label()}: Griesmer sum {total} exceeds the length")
    return RuleOutcome(UNRESOLVED, f"{child.label()}: Griesmer sum {total} does not exceed {child.n}")


def _simplex_multiple_hull(k: int, j: int) -> int:
    s_k = simplex_matrix(k)
    g = s_k
    for _ in range(j - 1):
        g = g.hstack(s_k)
    return LinearCode(g).hull_dim


def apply_simplex_multiple(child: Family, depth: int, s_min: int) -> RuleOutcome:
    j = child.n.exact_div(child.size)
    if j is None or not equal_for_all(child.d, j * child.half, s_min):
        return RuleOutcome(UNRESOLVED, f"{child.label()} is not a multiple of S_{child.k}")
    for s in R2_SPOT_CHECKS:
        copies = j.at(s)
        if s >= s_min and copies >= 1 and _simplex_multiple_hull(child.k, copies) != child.k:
            raise ArithmeticCheckError(f"{copies} x S_{child.k} is not self-orthogonal")
    hull = child.k
    detail = f"{child.label()} = ({j}) x S_{child.k}, self-orthogonal, hull {hull}; root hull >= {hull - depth}"
    return RuleOutcome(status_from_hull(hull, depth), detail)


def apply_macdonald(child: Family, depth: int, s_min: int) -> RuleOutcome:
    k = child.k
    if child.n.coeff % child.size == 0:
        for m in range(1, k):
            rest = child.n.const - (1 << k) + (1 << m)
            if rest % child.size:
                continue
            s_md = AffineInt(child.n.coeff // child.size, rest // child.size)
            expected_d = s_md * child.half + child.half - (1 << (m - 1))
            if not equal_for_all(child.d, expected_d, s_min):
                continue
            hull = macdonald_hull(k, m)
            for s in R3_SPOT_CHECKS:
                copies = s_md.at(s)
                if copies >= 0 and macdonald(copies, k, m).hull_dim != hull:
                    raise ArithmeticCheckError(f"MD_{copies}({k}, {m}) does not have hull {hull}")
            detail = f"{child.label()} = MD_({s_md})({k}, {m}), hull {hull}; root hull >= {hull - depth}"
            return RuleOutcome(status_from_hull(hull, depth), detail)
    return RuleOutcome(UNRESOLVED, f"{child.label()} matches no MacDonald family")


def solve_type_counts(
    values: Sequence[int], total: int, length: int, required: Sequence[int] = ()
) -> List[Tuple[int, ...]]:
    """
    All nonnegative (m_v) with sum m_v = total and sum v*m_v = length

    Args:
        values: Distinct entry values, one unknown multiplicity each
        total: Number of positions
        length: Sum of the entries
        required: Values that must occur at least once

    Returns:
        Solutions in lexicographic order, aligned with values
    """
    values = list(values)
    floors = [1 if v in required else 0 for v in values]
    solutions: List[Tuple[int, ...]] = []

    def search(index: int, left: int, remaining: int, prefix: List[int]) -> None:
        if index == len(values) - 1:
            if left >= floors[index] and values[index] * left == remaining:
                solutions.append(tuple(prefix + [left]))
            return
        for m in range(floors[index], left + 1):
            prefix.append(m)
            search(index + 1, left - m, remaining - values[index] * m, prefix)
            prefix.pop()

    if values:
        search(0, total, length, [])
    return solutions


def _gram_rank(k: int, odd_positions: Sequence[int]) -> int:
    rows = [0] * k
    for i in odd_positions:
        for r in range(k):
            if (i >> r) & 1:
                rows[r] ^= i
    return rank_of_rows(rows)


def _max_placement_rank(k: int, anti_counts: Dict[int, int], delta: int) -> Optional[int]:
    """
    Largest Gram rank over placements of the anti-vector entries with max weight <= delta

    Returns:
        The rank, or None when no placement keeps every weight within delta
    """
    size = (1 << k) - 1
    classes = sorted((value, count) for value, count in anti_counts.items() if value)
    p = pk_array(k)
    best: Optional[int] = None

    def place(index: int, free: Tuple[int, ...], vector: np.ndarray) -> None:
        nonlocal best
        if index == len(classes):
            if int((p @ vector).max()) > delta:
                return
            odd = [i + 1 for i in range(size) if vector[i] & 1]
            rank = _gram_rank(k, odd)
            if best is None or rank > best:
                best = rank
            return
        value, count = classes[index]
        for chosen in itertools.combinations(free, count):
            nxt = vector.copy()
            nxt[list(chosen)] = value
            place(index + 1, tuple(i for i in free if i not in chosen), nxt)

    place(0, tuple(range(size)), np.zeros(size, dtype=np.int64))
    return best


def _placement_count(size: int, anti_counts: Dict[int, int]) -> int:
    count, free = 1, size
    for value, m in anti_counts.items():
        if value:
            count *= math.comb(free, m)
            free -= m
    return count


def apply_anti_vector(node: Family, a: int, b: Optional[int], depth: int) -> RuleOutcome:
    """
    Solve for the entry multiplicities and bound the Gram rank through the anti-vector

    The Gram matrix equals that of the anti-vector a*1 - L, so its rank is at
    most the number of odd anti entries. When that is not enough, every
    placement whose anti-code weights stay within delta is tried.
    """
    low = node.lmin_floor() if b is None else b
    values = list(range(low, a + 1))
    required = [a] if b is None else sorted({a, b})
    solutions = solve_type_counts(values, node.size, node.n.const, required)
    delta = a * node.half - node.d.const
    if not solutions:
        return RuleOutcome(VERIFIED, f"{node.label()}: no entry multiplicities over {values}; case is empty")

    hull_bound: Optional[int] = None
    notes = []
    for solution in solutions:
        anti_counts: Dict[int, int] = {}
        for value, m in zip(values, solution):
            if m:
                anti_counts[a - value] = anti_counts.get(a - value, 0) + m
        odd = sum(m for value, m in anti_counts.items() if value & 1)
        rank = min(node.k, odd)
        method = "parity"
        if node.k - rank - depth < 1:
            placements = _placement_count(node.size, anti_counts)
            if placements > PLACEMENT_LIMIT:
                return RuleOutcome(
                    UNRESOLVED, f"{node.label()}: m={solution} needs {placements} placements (limit {PLACEMENT_LIMIT})"
                )
            found = _max_placement_rank(node.k, anti_counts, delta)
            if found is None:
                notes.append(f"m={solution}: no placement within delta={delta}")
                continue
            rank, method = found, f"{placements} placements"
        hull = node.k - rank
        hull_bound = hull if hull_bound is None else min(hull_bound, hull)
        notes.append(f"m={solution}: rank <= {rank} ({method}), hull >= {hull}")

    prefix = f"{node.label()} over entries {values}, delta={delta}: "
    if hull_bound is None:
        return RuleOutcome(VERIFIED, prefix + "; ".join(notes) + "; case is empty")
    return RuleOutcome(status_from_hull(hull_bound, depth), prefix + "; ".join(notes))
