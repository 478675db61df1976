"""
Search engines: exhaustive orbit enumeration and randomised hill climbing
"""

from modules.search.budget import ExhaustiveLimits, SearchBudget
from modules.search.exhaustive import (
    ExhaustiveResult,
    ExhaustiveSearch,
    count_orbits_directly,
    enumerate_defvecs,
    exhaustive_dl,
    raw_generator_dl,
)
from modules.search.hill_climb import HillClimber, hill_climb

__all__ = [
    "SearchBudget",
    "ExhaustiveLimits",
    "ExhaustiveResult",
    "ExhaustiveSearch",
    "enumerate_defvecs",
    "exhaustive_dl",
    "raw_generator_dl",
    "count_orbits_directly",
    "HillClimber",
    "hill_climb",
]
