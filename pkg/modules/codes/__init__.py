"""
Binary linear codes
"""

from .linear_code import (
    CodeParams,
    LinearCode,
    NestedWitness,
    append_column,
    best_extension_column,
    dual,
    extend_best_column,
    extend_parity,
    griesmer_max_d,
    griesmer_min_length,
    hull_dim,
    is_lcd,
    is_so,
    juxtapose,
    juxtapose_many,
    literal_split,
    nested_witness,
    new_code,
    params,
    parity_column,
    subcode,
)
from .records import CodeRecord, make_record, verify_record

__all__ = [
    "CodeParams",
    "CodeRecord",
    "LinearCode",
    "NestedWitness",
    "append_column",
    "best_extension_column",
    "dual",
    "extend_best_column",
    "extend_parity",
    "griesmer_max_d",
    "griesmer_min_length",
    "hull_dim",
    "is_lcd",
    "is_so",
    "juxtapose",
    "juxtapose_many",
    "literal_split",
    "make_record",
    "nested_witness",
    "new_code",
    "params",
    "parity_column",
    "subcode",
    "verify_record",
]
