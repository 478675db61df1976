"""
Master Builder - s copies of S_6 juxtaposed with a small LCD code of length t
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

from modules.codes import CodeRecord, LinearCode, juxtapose_many, make_record, verify_record
from modules.defvec import simplex_matrix

SIMPLEX_N = 63
SIMPLEX_D = 32
MIN_RESIDUE = 6
MIN_BUILD_N = 51

STATUS_OPTIMAL = "optimal-LCD"
STATUS_OPEN = "optimal-LCD-or-near"
STATUS_BELOW = "below-reference"


@dataclass(frozen=True)
class BuildPlan:
    """
    How one length n >= 51 is built

    expected_d uses the lower value of an open reference entry; upper_d is
    the other end of that entry and equals expected_d when the entry is settled.
    """

    n: int
    s: int
    t: int
    base_record_name: str
    expected_d: int
    upper_d: Optional[int] = None

    def __post_init__(self):
        if self.n != SIMPLEX_N * self.s + self.t:
            raise ValueError(f"n={self.n} is not 63*{self.s} + {self.t}")
        if not MIN_RESIDUE <= self.t <= SIMPLEX_N + MIN_RESIDUE - 1:
            raise ValueError(f"Residue t={self.t} outside [6, 68]")
        if self.upper_d is not None and self.upper_d < self.expected_d:
            raise ValueError(f"upper_d={self.upper_d} below expected_d={self.expected_d}")

    @property
    def is_open(self) -> bool:
        return self.upper_d is not None and self.upper_d != self.expected_d


def split_length(n: int) -> Tuple[int, int]:
    """
    n = 63s + t with 6 <= t <= 68

    Raises:
        ValueError: n < 51
    """
    if n < MIN_BUILD_N:
        raise ValueError(f"The master builder needs n >= {MIN_BUILD_N}, got n={n}")
    s, t = divmod(n, SIMPLEX_N)
    if t < MIN_RESIDUE:
        s -= 1
        t += SIMPLEX_N
    return s, t


@lru_cache(maxsize=None)
def simplex_6() -> LinearCode:
    return LinearCode(simplex_matrix(6))


def classify(plan: BuildPlan, d: int) -> str:
    if d < plan.expected_d:
        return STATUS_BELOW
    if plan.is_open and d < plan.upper_d:
        return STATUS_OPEN
    return STATUS_OPTIMAL


def build_optimal_lcd(plan: BuildPlan, base: CodeRecord) -> CodeRecord:
    """
    Juxtapose plan.s copies of S_6 with the [t, 6] base record

    Every codeword of S_6 has weight 32 and gram(S_6) = 0, so the result
    keeps the base's hull and adds 32s to its distance.

    Args:
        plan: Split of n with reference distances
        base: Database record of length plan.t, dimension 6

    Returns:
        Record annotated with optimal-LCD, optimal-LCD-or-near or below-reference

    Raises:
        ValueError: base record of the wrong shape or failing re-verification
    """
    if (base.params.n, base.params.k) != (plan.t, 6):
        raise ValueError(f"Base record {base.name} is {base.params.label()}, expected length {plan.t}, k=6")
    if not verify_record(base):
        raise ValueError(f"Base record {base.name} fails re-verification")
    code = juxtapose_many([simplex_6()] * plan.s + [base.code])
    record = make_record(
        f"n{plan.n}_k6",
        code,
        "constructed",
        notes=f"{plan.s} x S_6 + {base.name}",
    )
    if record.params.hull_dim != 0:
        return record.with_status(STATUS_BELOW)
    return record.with_status(classify(plan, record.params.d))
