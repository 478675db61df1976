"""
Mechanical checks of the nonexistence results for [63s + t, 6, 32s + e] LCD codes
"""

from .affine import (
    AffineInt,
    ArithmeticCheckError,
    equal_for_all,
    greater_for_all,
    griesmer_sum_affine,
    positive_for_all,
    sigma_affine,
)
from .checker import (
    BranchResult,
    ClaimResult,
    TheoremChecker,
    TheoremReport,
    check_all,
    check_theorem,
    preflight_hull_inheritance,
    preflight_parity_lift,
)
from .registry import Branch, Claim, Theorem, TheoremRegistry
from .rules import SEVERITY, Family, family_6, solve_type_counts, worst

__all__ = [
    "AffineInt",
    "ArithmeticCheckError",
    "equal_for_all",
    "greater_for_all",
    "griesmer_sum_affine",
    "positive_for_all",
    "sigma_affine",
    "BranchResult",
    "ClaimResult",
    "TheoremChecker",
    "TheoremReport",
    "check_all",
    "check_theorem",
    "preflight_hull_inheritance",
    "preflight_parity_lift",
    "Branch",
    "Claim",
    "Theorem",
    "TheoremRegistry",
    "SEVERITY",
    "Family",
    "family_6",
    "solve_type_counts",
    "worst",
]
