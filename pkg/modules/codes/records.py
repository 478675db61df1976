"""
Code Records - Database entries pairing a generator with verified parameters
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from modules.codes.linear_code import CodeParams, LinearCode
from modules.gf2 import BitMatrix

PROVENANCES = ("constructed", "searched", "embedded-reference")


@dataclass(frozen=True)
class CodeRecord:
    name: str
    params: CodeParams
    generator: BitMatrix
    provenance: str
    seed: Optional[int] = None
    status: Optional[str] = None
    notes: str = field(default="", compare=False)

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"Unknown provenance: {self.provenance}")

    @property
    def code(self) -> LinearCode:
        return LinearCode(self.generator)

    def summary(self) -> str:
        p = self.params
        return f"n={p.n} k={p.k} d={p.d} hull={p.hull_dim}"

    def with_status(self, status: str) -> "CodeRecord":
        return replace(self, status=status)


def make_record(
    name: str,
    code: LinearCode,
    provenance: str,
    seed: Optional[int] = None,
    notes: str = "",
) -> CodeRecord:
    return CodeRecord(name, code.params(), code.generator, provenance, seed=seed, notes=notes)


def verify_record(record: CodeRecord) -> bool:
    """Recompute (n, k, d, hull) from the generator and compare with the stored values."""
    try:
        recomputed = LinearCode(record.generator).params()
    except ValueError:
        return False
    stored = record.params
    return (recomputed.n, recomputed.k, recomputed.d, recomputed.hull_dim) == (
        stored.n,
        stored.k,
        stored.d,
        stored.hull_dim,
    )
