"""
Defining vectors: simplex matrices, weight identities, anti-codes, canonical forms
"""

from .anticode import AntiCode, anti, reduce
from .canonical import canonicalize, gl_action_table, is_canonical, is_canonical_values
from .defining_vector import (
    DefiningVector,
    TypeSignature,
    WeightProfile,
    code_from_defvec,
    defining_vector,
    format_signature,
    gram_from_defvec,
    li_bounds,
    matrix_from_defvec,
    pk_array,
    pk_matrix,
    qk_matrix,
    simplex_matrix,
    transform,
    type_signature,
    weight_profile,
    weights_of,
)

__all__ = [
    "AntiCode",
    "DefiningVector",
    "TypeSignature",
    "WeightProfile",
    "anti",
    "canonicalize",
    "code_from_defvec",
    "defining_vector",
    "format_signature",
    "gl_action_table",
    "gram_from_defvec",
    "is_canonical",
    "is_canonical_values",
    "li_bounds",
    "matrix_from_defvec",
    "pk_array",
    "pk_matrix",
    "qk_matrix",
    "reduce",
    "simplex_matrix",
    "transform",
    "type_signature",
    "weight_profile",
    "weights_of",
]
