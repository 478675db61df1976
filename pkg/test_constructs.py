#!/usr/bin/env python3
"""
Tests for the constructions: MacDonald codes, deletion, gluing, seeding and the master builder
"""

import os
import sys
from pathlib import Path

import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from controller.build_planner import (
    GLUE33_LENGTHS,
    GLUE45_RANGE,
    GLUED_DISTANCES,
    K4_TARGETS,
    K5_TARGETS,
    plan_for,
    seeding_targets,
)
from controller.code_store import CodeStore
from modules.codes import LinearCode, make_record
from modules.constructs import (
    RECIPES,
    STATUS_BELOW,
    STATUS_OPEN,
    STATUS_OPTIMAL,
    BuildPlan,
    DatabaseSeeder,
    SeedTarget,
    build_optimal_lcd,
    classify,
    g_6_45,
    g_6_45_row_split,
    glue,
    gluing_bound,
    has_recipe,
    k_6_18,
    k_6_33,
    k_6_33_reduced,
    macdonald,
    macdonald_hull,
    macdonald_params,
    macdonald_vector,
    recipe_code,
    recipe_vector,
    split_length,
    witness_33,
    witness_45,
)
from modules.defvec import DefiningVector, code_from_defvec, simplex_matrix
from modules.search import SearchBudget

SLOW = os.environ.get("LCD_SLOW") == "1"
slow = pytest.mark.skipif(not SLOW, reason="set LCD_SLOW=1 to run the full database tests")


def _recipe_target(n: int, k: int) -> int:
    if k == 4:
        return K4_TARGETS[n]
    if k == 5:
        return K5_TARGETS[n]
    return seeding_targets([n])[-1].d


@pytest.fixture(scope="module")
def seeded_store(tmp_path_factory):
    """Database holding the records behind n = 51, 73, 80, 84 and 131."""
    store = CodeStore(str(tmp_path_factory.mktemp("db")))
    produced, report = DatabaseSeeder().seed(seeding_targets([10, 17, 21, 51, 68]))
    assert all(entry["status"] == "success" for entry in report), report
    for record in produced.values():
        store.save(record)
    return store


# ----------------------------------------------------------------------
# MacDonald codes
# ----------------------------------------------------------------------


@pytest.mark.parametrize("s,k,m", [(0, 4, 1), (1, 4, 2), (2, 4, 3), (1, 5, 1), (0, 5, 3), (1, 5, 4)])
def test_macdonald_parameters_and_hull(s, k, m):
    code = macdonald(s, k, m)
    n, d = macdonald_params(s, k, m)
    assert (code.n, code.k, code.min_distance) == (n, k, d)
    assert code.hull_dim == macdonald_hull(k, m)


def test_macdonald_vector_shape():
    vector = macdonald_vector(2, 3, 2)
    assert vector.entries == (2, 2, 2, 3, 3, 3, 3)
    with pytest.raises(ValueError):
        macdonald_vector(1, 3, 3)
    with pytest.raises(ValueError):
        macdonald_hull(2, 1)


MACDONALD_GRID = [(s, k, m) for k in (5, 6) for m in range(1, k) for s in (0, 1, 2)]


@pytest.mark.parametrize("s,k,m", MACDONALD_GRID)
def test_macdonald_grid_matches_closed_forms(s, k, m):
    code = macdonald(s, k, m)
    n, d = macdonald_params(s, k, m)
    assert (code.n, code.min_distance) == (n, d)
    assert code.hull_dim == macdonald_hull(k, m)
    expected_hull = {1: k - 1, 2: k - 2}.get(m, k)
    assert code.hull_dim == expected_hull


def test_macdonald_named_instances():
    assert (macdonald(0, 6, 1).n, macdonald(0, 6, 1).min_distance) == (62, 31)
    assert (macdonald(0, 6, 2).n, macdonald(0, 6, 2).min_distance) == (60, 30)
    assert (macdonald(1, 5, 2).n, macdonald(1, 5, 2).min_distance) == (59, 30)


# ----------------------------------------------------------------------
# Recipes
# ----------------------------------------------------------------------


@pytest.mark.parametrize("key", sorted(RECIPES))
def test_recipes_are_lcd_at_their_target(key):
    n, k = key
    code = recipe_code(n, k)
    assert (code.n, code.k) == (n, k)
    assert code.is_lcd()
    assert code.min_distance >= _recipe_target(n, k)


def test_missing_recipe():
    assert has_recipe(10, 6)
    assert not has_recipe(11, 6)
    with pytest.raises(ValueError):
        recipe_vector(11, 6)


def test_open_residue_targets_carry_the_lower_offset():
    targets = {t.n: t for t in seeding_targets([44, 45, 46, 47])}
    assert (targets[44].d, targets[44].reference_d) == (20, None)
    assert (targets[45].d, targets[45].reference_d, targets[45].method) == (20, 21, "recipe")
    assert (targets[46].d, targets[46].reference_d, targets[46].method) == (21, 22, "recipe")
    assert targets[47].reference_d is None


@pytest.mark.parametrize("n,d", [(45, 20), (46, 21)])
def test_plane_recipes_for_open_residues(n, d):
    code = recipe_code(n, 6)
    assert (code.n, code.k, code.min_distance, code.hull_dim) == (n, 6, d, 0)
    assert max(recipe_vector(n, 6).entries) == 1


def test_seeding_open_residues_reports_the_gap():
    produced, report = DatabaseSeeder().seed(seeding_targets([45, 46]))
    assert [entry["status"] for entry in report] == ["success", "success"]
    assert [(entry["d"], entry["reference_d"]) for entry in report] == [(20, 21), (21, 22)]
    assert produced[(46, 6)].params.hull_dim == 0


# ----------------------------------------------------------------------
# Deletion and gluing
# ----------------------------------------------------------------------


def test_block_diagonal_deletion_set():
    columns = k_6_18().columns()
    assert len(columns) == len(set(columns)) == 18


def test_deleted_simplex_code():
    code = g_6_45()
    assert (code.n, code.k, code.min_distance, code.hull_dim) == (45, 6, 22, 4)


def test_literal_row_split():
    split = g_6_45_row_split()
    x, y = split["X"], split["Y"]
    assert (x.n, x.k, x.d) == (45, 4, 24)
    assert (y.n, y.k, y.d) == (45, 2, 30)
    assert y.hull_dim == 0


def test_nested_witness_of_deleted_code():
    witness = witness_45()
    witness.validate()
    assert (witness.d1, witness.d2) == (30, 22)
    assert witness.hull_rows.row_count == 4
    assert witness.lcd_rows.row_count == 2


def test_k33_and_its_reduction():
    code = k_6_33()
    assert (code.n, code.k, code.min_distance, code.hull_dim) == (33, 6, 16, 5)
    reduced = k_6_33_reduced()
    assert (reduced.n, reduced.k, reduced.min_distance) == (31, 5, 16)
    assert reduced.is_so()
    witness = witness_33()
    assert (witness.d1, witness.d2) == (33, 16)


def test_gluing_gives_lcd_code_meeting_the_bound():
    extension = recipe_code(6, 4)
    glued = glue(witness_45(), extension)
    assert (glued.n, glued.k) == (51, 6)
    assert glued.is_lcd()
    assert glued.min_distance >= gluing_bound(witness_45(), extension) == 24


def test_gluing_rejects_bad_extensions():
    with pytest.raises(ValueError):
        glue(witness_45(), LinearCode(simplex_matrix(4)))
    with pytest.raises(ValueError):
        glue(witness_45(), recipe_code(32, 5))


# ----------------------------------------------------------------------
# Seeding
# ----------------------------------------------------------------------


def test_seed_target_validation():
    assert SeedTarget(51, 6, 24, "glue45", source=(6, 4)).name == "n51_k6"
    with pytest.raises(ValueError):
        SeedTarget(51, 6, 24, "guess")
    with pytest.raises(ValueError):
        SeedTarget(51, 6, 24, "glue45")


def test_small_targets_reach_the_glued_distances():
    assert K5_TARGETS == {32: 15, 33: 15, 34: 16, 35: 16}
    for n in GLUE45_RANGE:
        assert min(30, 22 + K4_TARGETS[n - 45]) == GLUED_DISTANCES[n]
    for n in GLUE33_LENGTHS:
        assert min(33, 16 + K5_TARGETS[n - 33]) == GLUED_DISTANCES[n]


def test_seeding_targets_put_dependencies_first():
    targets = seeding_targets([66])
    assert [(t.n, t.k, t.method) for t in targets] == [
        (32, 5, "recipe"),
        (65, 6, "glue33"),
        (66, 6, "extend"),
    ]
    with pytest.raises(ValueError):
        seeding_targets([70])


def test_seeding_glued_and_extended_records():
    produced, report = DatabaseSeeder().seed(seeding_targets([51, 66]))
    assert [entry["status"] for entry in report] == ["success"] * len(report)
    for n in (51, 65, 66):
        record = produced[(n, 6)]
        assert record.params.hull_dim == 0
        assert record.params.d >= GLUED_DISTANCES[n]


def test_seeding_reports_missing_source():
    produced, report = DatabaseSeeder().seed([SeedTarget(52, 6, 24, "glue45", source=(7, 4))])
    assert produced == {}
    assert report[0]["status"] == "failed"
    assert "missing" in report[0]["error"]


def test_seeding_reports_unreachable_climb():
    budget = SearchBudget(max_iterations=5, restarts=1)
    produced, report = DatabaseSeeder(budget).seed([SeedTarget(20, 6, 12, "climb")])
    assert produced == {}
    assert report[0]["status"] == "failed"


# ----------------------------------------------------------------------
# Master builder
# ----------------------------------------------------------------------


@pytest.mark.parametrize("n,s,t", [(51, 0, 51), (68, 0, 68), (69, 1, 6), (73, 1, 10), (131, 1, 68), (132, 2, 6)])
def test_split_length(n, s, t):
    assert split_length(n) == (s, t)


def test_split_length_rejects_short_codes():
    with pytest.raises(ValueError):
        split_length(50)


def test_build_plan_validation_and_classification():
    with pytest.raises(ValueError):
        BuildPlan(n=70, s=1, t=6, base_record_name="n6_k6", expected_d=33)
    with pytest.raises(ValueError):
        BuildPlan(n=63, s=1, t=0, base_record_name="n0_k6", expected_d=30)
    plan = BuildPlan(n=85, s=1, t=22, base_record_name="n22_k6", expected_d=40, upper_d=41)
    assert plan.is_open
    assert classify(plan, 39) == STATUS_BELOW
    assert classify(plan, 40) == STATUS_OPEN
    assert classify(plan, 41) == STATUS_OPTIMAL


def test_plans_follow_the_reference_table():
    plan = plan_for(85)
    assert (plan.s, plan.t, plan.expected_d, plan.upper_d) == (1, 22, 41, 42)
    plan = plan_for(73)
    assert (plan.s, plan.t, plan.expected_d, plan.upper_d) == (1, 10, 35, None)
    assert plan_for(51).expected_d == 24


@pytest.mark.parametrize("n,s,t,d", [(136, 2, 10, 67), (206, 3, 17, 102), (273, 4, 21, 136)])
def test_plans_for_worked_lengths(n, s, t, d):
    plan = plan_for(n)
    assert (plan.s, plan.t, plan.expected_d, plan.upper_d) == (s, t, d, None)
    assert plan.base_record_name == f"n{t}_k6"


@pytest.mark.parametrize(
    "n,d,status",
    [
        (51, 24, STATUS_OPTIMAL),
        (73, 35, STATUS_OPTIMAL),
        (80, 38, STATUS_OPTIMAL),
        (84, 40, STATUS_OPEN),
        (131, 64, STATUS_OPTIMAL),
    ],
)
def test_builder_reaches_the_reference_distance(seeded_store, n, d, status):
    plan = plan_for(n)
    success, error, base = seeded_store.get(plan.t, 6)
    assert success, error
    record = build_optimal_lcd(plan, base)
    assert record.params.n == n
    assert record.params.hull_dim == 0
    assert record.params.d == d
    assert record.status == status


@pytest.mark.parametrize("n,d,upper", [(108, 52, 53), (109, 53, 54), (171, 84, 85)])
def test_builder_reports_the_lower_value_for_open_residues(n, d, upper):
    plan = plan_for(n)
    base = make_record(f"n{plan.t}_k6", recipe_code(plan.t, 6), "constructed")
    record = build_optimal_lcd(plan, base)
    assert (record.params.d, record.params.hull_dim) == (d, 0)
    assert (plan.expected_d, plan.upper_d) == (d, upper)
    assert record.status == STATUS_OPEN


def test_builder_rejects_mismatched_base(seeded_store):
    _, _, base = seeded_store.get(10, 6)
    with pytest.raises(ValueError):
        build_optimal_lcd(plan_for(80), base)


def test_builder_marks_non_lcd_results_below_reference():
    # e_1 appears twice, so the first row is self-orthogonal and the hull is 1-dimensional
    vector = DefiningVector.from_support(6, [1, 1, 2, 4, 8, 16, 32])
    base = make_record("n7_k6", code_from_defvec(vector), "constructed")
    assert base.params.hull_dim == 1
    record = build_optimal_lcd(plan_for(70), base)
    assert record.params.hull_dim == 1
    assert record.status == STATUS_BELOW


# ----------------------------------------------------------------------
# Full database (slow)
# ----------------------------------------------------------------------


@slow
def test_full_seeding_and_sweep(tmp_path):
    store = CodeStore(str(tmp_path / "db"))
    produced, report = DatabaseSeeder().seed(seeding_targets())
    failed = [entry for entry in report if entry["status"] != "success"]
    assert failed == []
    for record in produced.values():
        store.save(record)

    for n in range(51, 51 + 2 * 63):
        plan = plan_for(n)
        success, error, base = store.get(plan.t, 6)
        assert success, error
        record = build_optimal_lcd(plan, base)
        assert record.status != STATUS_BELOW, f"n={n}: {record.summary()}"


def test_database_lookup_requires_verified_lcd_records(seeded_store):
    record = seeded_store.small_lcd_db(10, 6)
    assert (record.params.n, record.params.d, record.params.hull_dim) == (10, 3, 0)
    with pytest.raises(LookupError):
        seeded_store.small_lcd_db(11, 6)
    with pytest.raises(ValueError):
        seeded_store.small_lcd_db(70, 6)
    success, error, missing = seeded_store.get(11, 6)
    assert not success and missing is None and "seed-db" in error
