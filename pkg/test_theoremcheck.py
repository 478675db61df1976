#!/usr/bin/env python3
"""
Tests for the theorem checker: affine arithmetic, families, rules, coverage and the registry
"""

import sys
from pathlib import Path

import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from modules.theorems import (
    AffineInt,
    Branch,
    Claim,
    Theorem,
    TheoremChecker,
    TheoremRegistry,
    check_all,
    check_theorem,
    equal_for_all,
    family_6,
    greater_for_all,
    griesmer_sum_affine,
    positive_for_all,
    preflight_hull_inheritance,
    preflight_parity_lift,
    sigma_affine,
    solve_type_counts,
    worst,
)
from modules.theorems.rules import R2, R3, R5

EXPECTED_STATUS = {
    "T7": "verified",
    "T8": "verified",
    "T9": "external-assumption",
    "T10": "external-assumption",
    "T11": "arithmetic-only",
    "T12": "arithmetic-only",
    "T13": "unresolved",
    "T14": "verified",
    "T15": "verified",
    "T16": "external-assumption",
    "T17": "external-assumption",
    "C1": "external-assumption",
}

V, A, X, U = "verified", "arithmetic-only", "external-assumption", "unresolved"


def _fam(t, e):
    head = "63s" if t == 0 else f"63s + {t}"
    tail = "32s" if e == 0 else (f"32s + {e}" if e > 0 else f"32s - {-e}")
    return f"[{head}, 6, {tail}]"


def _lifted(t, e, status):
    return (_fam(t, e), status, [(f"extends to {_fam(t + 1, e + 1)}", "extension-lift", status)])


def _cited(t, e):
    return (_fam(t, e), X, [("whole family", "external-ref", X)])


# (family, claim status, [(case, rule, status), ...]) for every claim of every theorem
GOLDEN_BRANCHES = {
    "T7": [
        (_fam(0, 0), V, [("whole family", "simplex-multiple-SO", V)]),
        _lifted(0, -1, V),
        (_fam(1, 0), V, [("l_max = s + 1", "simplex-multiple-SO", V)]),
        _lifted(1, -1, V),
        (
            _fam(2, 0),
            V,
            [
                ("(1) l_max = s + 2", "simplex-multiple-SO", V),
                ("(2) l_max = s + 1 -> l_max = 2s + 1", "simplex-multiple-SO", V),
            ],
        ),
    ],
    "T8": [
        (
            _fam(10, 4),
            V,
            [
                ("(1) l_max = s + 2", "griesmer-violation", V),
                ("(2) l_max = s + 1 -> l_max = 2s + 1 -> l_max = 4s + 1", "anti-vector-forcing", V),
            ],
        ),
        _lifted(9, 3, V),
    ],
    "T9": [
        (
            _fam(14, 6),
            X,
            [("(1) l_max = s + 2", "griesmer-violation", V), ("(2) l_max = s + 1", "external-ref", X)],
        ),
        _lifted(13, 5, X),
    ],
    "T10": [
        (_fam(17, 8), V, [("l_max = s + 1 -> l_max = 2s + 1", "simplex-multiple-SO", V)]),
        _lifted(16, 7, V),
        (
            _fam(18, 8),
            X,
            [
                ("(1) l_max = s + 2 -> l_max = 2s + 1", "simplex-multiple-SO", V),
                ("(2) l_max = s + 1", "external-ref", X),
            ],
        ),
        _lifted(17, 7, X),
    ],
    "T11": [
        (
            _fam(25, 12),
            A,
            [
                ("(1) l_max = s + 2", "griesmer-violation", A),
                ("(2) l_max = s + 1 -> l_max = 2s + 1 -> l_max = 4s + 2", "anti-vector-forcing", V),
            ],
        ),
        _lifted(24, 11, V),
    ],
    "T12": [
        (
            _fam(29, 14),
            A,
            [("(1) l_max = s + 2", "griesmer-violation", A), ("(2) l_max = s + 1", "macdonald-hull", V)],
        ),
        _lifted(28, 13, V),
    ],
    "T13": [
        (
            _fam(30, 14),
            U,
            [
                ("(1) l_max = s + 2", "macdonald-hull", V),
                ("(2.1) l_max = s + 1 -> l_max = 2s + 2", "griesmer-violation", U),
                ("(2.2) l_max = s + 1 -> l_max = 2s + 1, l_min = 2s", "anti-vector-forcing", V),
                ("(2.3) l_max = s + 1 -> l_max = 2s + 1, l_min = 2s - 1", "anti-vector-forcing", V),
            ],
        ),
        _lifted(29, 13, U),
    ],
    "T14": [
        (_fam(32, 16), V, [("l_max = s + 1", "simplex-multiple-SO", V)]),
        (
            _fam(33, 16),
            V,
            [
                ("(1) l_max = s + 2", "simplex-multiple-SO", V),
                ("(2) l_max = s + 1 -> l_max = 2s + 2", "simplex-multiple-SO", V),
            ],
        ),
        _lifted(31, 15, V),
        _lifted(32, 15, V),
    ],
    "T15": [
        (
            _fam(41, 20),
            V,
            [
                ("(1) l_max = s + 2", "griesmer-violation", V),
                ("(2) l_max = s + 1 -> l_max = 2s + 2 -> l_max = 4s + 3", "anti-vector-forcing", V),
            ],
        ),
        _lifted(40, 19, V),
    ],
    "T16": [
        (
            _fam(45, 22),
            X,
            [
                ("(1) l_max = s + 2", "griesmer-violation", V),
                ("(2.1) l_max = s + 1, l_min = s", "external-ref", X),
                ("(2.2) l_max = s + 1, l_min = s - 1", "external-ref", X),
            ],
        ),
        _lifted(44, 21, X),
    ],
    "T17": [
        (
            _fam(49, 24),
            X,
            [
                ("(1) l_max = s + 2 -> l_max = 2s + 2", "simplex-multiple-SO", V),
                ("(2.1) l_max = s + 1, l_min = s", "external-ref", X),
                ("(2.2) l_max = s + 1, l_min = s - 1", "external-ref", X),
            ],
        ),
        (_fam(48, 24), V, [("l_max = s + 1 -> l_max = 2s + 2", "simplex-multiple-SO", V)]),
        _lifted(47, 23, V),
        _lifted(48, 23, X),
    ],
    "C1": [
        _cited(53, 26),
        _cited(55, 27),
        _cited(56, 28),
        _cited(57, 28),
        _cited(59, 29),
        _cited(60, 30),
        _cited(61, 30),
        _cited(62, 31),
        _lifted(52, 25, X),
        _lifted(56, 27, X),
        _lifted(60, 29, X),
    ],
}


@pytest.fixture(scope="module")
def reports():
    return {report.theorem: report for report in check_all()["reports"]}


# ----------------------------------------------------------------------
# Affine arithmetic
# ----------------------------------------------------------------------


def test_affine_formatting():
    assert str(AffineInt(63, 30)) == "63s + 30"
    assert str(AffineInt(1, -1)) == "s - 1"
    assert str(AffineInt(-1, 0)) == "-s"
    assert str(AffineInt(0, 5)) == "5"


def test_affine_operations():
    x = AffineInt(32, 14)
    assert x + 1 == AffineInt(32, 15)
    assert 1 - x == AffineInt(-32, -13)
    assert 2 * x == AffineInt(64, 28)
    assert x.at(3) == 110
    assert x.ceil_div(4) == AffineInt(8, 4)
    assert x.floor_div(4) == AffineInt(8, 3)
    assert x.exact_div(2) == AffineInt(16, 7)
    assert x.exact_div(4) is None
    with pytest.raises(ValueError):
        x.ceil_div(3)
    with pytest.raises(TypeError):
        x * 1.5


def test_comparisons_for_all_s():
    assert not positive_for_all(AffineInt(1, -1), 1)
    assert positive_for_all(AffineInt(1, -1), 2)
    assert not positive_for_all(AffineInt(-1, 100), 1)
    assert greater_for_all(AffineInt(63, 30), AffineInt(60, 27))
    assert equal_for_all(AffineInt(2, 1), AffineInt(2, 1))


def test_sigma_and_griesmer_sum():
    assert sigma_affine(AffineInt(63, 30), 6, AffineInt(32, 14)) == AffineInt(0, 78)
    assert griesmer_sum_affine(AffineInt(32, 14), 6) == AffineInt(63, 29)
    assert griesmer_sum_affine(AffineInt(32, 14), 4) == AffineInt(60, 27)
    with pytest.raises(ValueError):
        griesmer_sum_affine(AffineInt(3, 0), 6)


# ----------------------------------------------------------------------
# Families and rules
# ----------------------------------------------------------------------


def test_family_ranges():
    family = family_6(30, 14)
    assert family.label() == "[63s + 30, 6, 32s + 14]"
    assert family.sigma() == 78
    assert family.lmax_range() == (1, 2)
    assert family.lmin_floor() == -2
    assert str(family.entry(1)) == "s + 1"
    assert family.admissible(1, -2) and not family.admissible(3)
    child = family.reduce(1)
    assert child.label() == "[62s + 29, 5, 32s + 14]"
    assert child.sigma() == 30


def test_family_feasibility():
    family = family_6(30, 14)
    assert family.length_feasible(1, 0)
    assert not family.constant_feasible(1)
    assert family_6(63, 32).constant_feasible(1)
    with pytest.raises(ValueError):
        family_6(30, 15).reduce(1).reduce(1).reduce(1).reduce(1).reduce(1).reduce(1)


def test_solve_type_counts():
    assert solve_type_counts([0, 1], 3, 2) == [(1, 2)]
    assert solve_type_counts([-1, 0, 1], 31, 29, required=[-1, 1]) == [(1, 0, 30)]
    assert solve_type_counts([0, 1], 31, 29, required=[0, 1]) == [(2, 29)]
    assert solve_type_counts([2], 3, 5) == []


def test_worst_status():
    assert worst([]) == "verified"
    assert worst(["verified", "external-assumption", "arithmetic-only"]) == "external-assumption"
    assert worst(["external-assumption", "unresolved"]) == "unresolved"


def test_registry_validation():
    with pytest.raises(ValueError):
        Branch((), "made-up")
    with pytest.raises(ValueError):
        Branch((), R5)
    with pytest.raises(ValueError):
        Claim(0, 0)
    assert Branch(((1, None),), R5).reduces_last is False
    assert Branch(((1, None),), R2).reduces_last is True


def test_registry_lookup():
    assert TheoremRegistry.ids() == list(EXPECTED_STATUS)
    with pytest.raises(ValueError):
        TheoremRegistry.get("T99")
    with pytest.raises(ValueError):
        check_theorem("T99")


# ----------------------------------------------------------------------
# Registered theorems
# ----------------------------------------------------------------------


@pytest.mark.parametrize("theorem_id", list(EXPECTED_STATUS))
def test_theorem_status(reports, theorem_id):
    assert reports[theorem_id].status == EXPECTED_STATUS[theorem_id]


def test_mechanical_theorems_have_no_outside_dependence(reports):
    for theorem_id in ("T7", "T8", "T14", "T15"):
        assert reports[theorem_id].fully_mechanical
    assert not reports["T9"].fully_mechanical


def test_t13_gap_is_the_griesmer_tie(reports):
    claim, lift = reports["T13"].claims
    by_label = {b.case.split()[0]: b for b in claim.branches}
    assert by_label["(1)"].status == "verified"
    assert by_label["(2.1)"].status == "unresolved"
    assert "60s + 27" in by_label["(2.1)"].detail
    assert by_label["(2.2)"].status == "verified"
    assert "m=(2, 29): rank <= 2 (parity), hull >= 3" in by_label["(2.2)"].detail
    assert "m=(1, 0, 30)" in by_label["(2.3)"].detail
    assert lift.status == "unresolved"
    assert claim.note


def test_placement_enumeration_closes_t8(reports):
    claim = reports["T8"].claims[0]
    anti_branch = [b for b in claim.branches if b.rule == R5][0]
    assert anti_branch.status == "verified"
    assert "6435 placements" in anti_branch.detail


def test_out_of_range_branches_are_arithmetic_only(reports):
    for theorem_id in ("T11", "T12"):
        statuses = [b.status for b in reports[theorem_id].claims[0].branches]
        assert "arithmetic-only" in statuses
        assert "unresolved" not in statuses


def test_optimal_code_citations(reports):
    for claim in reports["C1"].claims:
        assert claim.status == "external-assumption"
    assert "Griesmer maximum" in reports["C1"].claims[0].branches[0].detail


def test_auto_closed_cases_are_listed(reports):
    claim = reports["T13"].claims[0]
    assert any("constant vector" in text for text in claim.auto_cases)


def test_report_serialization(reports):
    data = reports["T13"].to_dict()
    assert data["theorem"] == "T13"
    assert data["status"] == "unresolved"
    assert data["claims"][0]["family"] == "[63s + 30, 6, 32s + 14]"
    assert {"case", "rule", "status", "detail"} <= set(data["claims"][0]["branches"][0])


def test_check_all_summary_matches_reports():
    result = check_all(["T7", "T13"])
    assert [r.theorem for r in result["reports"]] == ["T7", "T13"]
    total = sum(result["summary"].values())
    assert total == sum(sum(r.counts().values()) for r in result["reports"])
    assert result["summary"]["unresolved"] >= 1
    assert check_all(["T7", "T13"], workers=2)["summary"] == result["summary"]


@pytest.mark.parametrize("theorem_id", list(GOLDEN_BRANCHES))
def test_every_branch_matches_the_recorded_report(reports, theorem_id):
    actual = [
        (claim.family, claim.status, [(b.case, b.rule, b.status) for b in claim.branches])
        for claim in reports[theorem_id].claims
    ]
    assert actual == GOLDEN_BRANCHES[theorem_id]


# ----------------------------------------------------------------------
# Synthetic theorems
# ----------------------------------------------------------------------


def test_missing_case_becomes_unresolved(monkeypatch):
    theorem = Theorem("X", "partial", (Claim(30, 14, (Branch(((2, None),), R3),)),))
    monkeypatch.setitem(TheoremRegistry.THEOREMS, "X", theorem)
    report = TheoremChecker().check("X")
    synthesized = [b for b in report.claims[0].branches if b.rule == "none"]
    assert len(synthesized) == 1
    assert synthesized[0].status == "unresolved"
    assert synthesized[0].case.endswith("l_max = s + 1, l_min in {s - 2, s - 1, s}")


def test_lift_needs_the_parity_parent(monkeypatch):
    theorem = Theorem("X", "bad lift", (Claim(0, 0, (Branch((), R2),)), Claim(5, 5, lift_from=(0, 0))))
    monkeypatch.setitem(TheoremRegistry.THEOREMS, "X", theorem)
    with pytest.raises(ValueError):
        TheoremChecker().check("X")


def test_lift_needs_odd_distance(monkeypatch):
    theorem = Theorem("X", "even lift", (Claim(1, 1, (Branch(((1, None),), R2),)), Claim(0, 0, lift_from=(1, 1))))
    monkeypatch.setitem(TheoremRegistry.THEOREMS, "X", theorem)
    with pytest.raises(ValueError):
        TheoremChecker().check("X")


# ----------------------------------------------------------------------
# Randomised lemma checks
# ----------------------------------------------------------------------


def test_preflight_hull_inheritance():
    outcome = preflight_hull_inheritance(samples=40)
    assert outcome == {"status": "success", "checked": 40, "error": None}


def test_preflight_parity_lift():
    outcome = preflight_parity_lift(samples=20)
    assert outcome["status"] == "success"
    assert outcome["checked"] == 20
