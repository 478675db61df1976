"""
Explicit constructions: deletion, gluing, MacDonald codes, recipes, seeding and the master builder
"""

from .builder import (
    STATUS_BELOW,
    STATUS_OPEN,
    STATUS_OPTIMAL,
    BuildPlan,
    build_optimal_lcd,
    classify,
    simplex_6,
    split_length,
)
from .deletion import G45_PARAMS, g_6_45, g_6_45_row_split, k_6_18
from .gluing import K33_PARAMS, glue, gluing_bound, k_6_33, k_6_33_reduced
from .macdonald import macdonald, macdonald_hull, macdonald_params, macdonald_vector
from .recipes import RECIPES, has_recipe, recipe_code, recipe_vector
from .seeding import DatabaseSeeder, SeedTarget, witness_33, witness_45

__all__ = [
    "STATUS_BELOW",
    "STATUS_OPEN",
    "STATUS_OPTIMAL",
    "BuildPlan",
    "build_optimal_lcd",
    "classify",
    "simplex_6",
    "split_length",
    "G45_PARAMS",
    "g_6_45",
    "g_6_45_row_split",
    "k_6_18",
    "K33_PARAMS",
    "glue",
    "gluing_bound",
    "k_6_33",
    "k_6_33_reduced",
    "macdonald",
    "macdonald_hull",
    "macdonald_params",
    "macdonald_vector",
    "RECIPES",
    "has_recipe",
    "recipe_code",
    "recipe_vector",
    "DatabaseSeeder",
    "SeedTarget",
    "witness_33",
    "witness_45",
]
