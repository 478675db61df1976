"""
Theorem Checker - Re-derive every registered case split and close each case with a rule
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from modules.codes import LinearCode, extend_parity
from modules.defvec import DefiningVector, code_from_defvec, reduce
from modules.theorems.affine import greater_for_all, griesmer_sum_affine
from modules.theorems.registry import Branch, Claim, Step, Theorem, TheoremRegistry
from modules.theorems.rules import (
    ARITHMETIC_ONLY,
    EXTERNAL,
    LIFT,
    R1,
    R2,
    R3,
    R4,
    R5,
    SEVERITY,
    UNRESOLVED,
    VERIFIED,
    Family,
    RuleOutcome,
    apply_anti_vector,
    apply_griesmer,
    apply_macdonald,
    apply_simplex_multiple,
    family_6,
    worst,
)

# Smallest dimension k for which optimal codes of co-length a are never LCD
OPTIMAL_NOT_LCD_MIN_K = {1: 4, 3: 4, 4: 4, 7: 4, 8: 4, 2: 5, 6: 5, 10: 5, 5: 7, 9: 7, 11: 7}
PREFLIGHT_SAMPLES = 100


@dataclass(frozen=True)
class BranchResult:
    case: str
    rule: str
    status: str
    detail: str

    def to_dict(self) -> Dict:
        return {"case": self.case, "rule": self.rule, "status": self.status, "detail": self.detail}


@dataclass(frozen=True)
class ClaimResult:
    family: str
    status: str
    branches: Tuple[BranchResult, ...]
    auto_cases: Tuple[str, ...] = ()
    note: str = ""

    def to_dict(self) -> Dict:
        data = {
            "family": self.family,
            "status": self.status,
            "branches": [b.to_dict() for b in self.branches],
            "auto_cases": list(self.auto_cases),
        }
        if self.note:
            data["note"] = self.note
        return data


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    statement: str
    claims: Tuple[ClaimResult, ...] = field(default_factory=tuple)

    @property
    def status(self) -> str:
        return worst([c.status for c in self.claims])

    @property
    def fully_mechanical(self) -> bool:
        return all(b.status not in (EXTERNAL, UNRESOLVED) for c in self.claims for b in c.branches)

    def counts(self) -> Dict[str, int]:
        totals = {status: 0 for status in SEVERITY}
        for claim in self.claims:
            for branch in claim.branches:
                totals[branch.status] += 1
        return totals

    def to_dict(self) -> Dict:
        return {
            "theorem": self.theorem,
            "statement": self.statement,
            "status": self.status,
            "claims": [c.to_dict() for c in self.claims],
        }


def _describe_steps(root: Family, steps: Sequence[Step], reduces_last: bool) -> str:
    parts, node = [], root
    for index, (a, b) in enumerate(steps):
        text = f"l_max = {node.entry(a)}"
        if b is not None:
            text += f", l_min = {node.entry(b)}"
        parts.append(text)
        if index < len(steps) - 1 or reduces_last:
            node = node.reduce(a)
    return " -> ".join(parts) if parts else "whole family"


class TheoremChecker:
    """Evaluates registered theorems claim by claim"""

    def __init__(self, workers: int = 1):
        self.workers = workers
        self.logger = self._setup_logger()

    def _setup_logger(self) -> logging.Logger:
        logger = logging.getLogger("TheoremChecker")
        logger.setLevel(logging.INFO)
        return logger

    def check(self, theorem_id: str) -> TheoremReport:
        """
        Check one registered theorem

        Raises:
            ValueError: unknown id or a malformed registry entry
            ArithmeticCheckError: symbolic and concrete arithmetic disagree
        """
        theorem = TheoremRegistry.get(theorem_id)
        results: Dict[Tuple[int, int], ClaimResult] = {}
        for claim in theorem.claims:
            if claim.lift_from is None:
                results[(claim.t, claim.e)] = self._check_claim(theorem, claim)
        for claim in theorem.claims:
            if claim.lift_from is not None:
                results[(claim.t, claim.e)] = self._check_lift(theorem, claim, results)
        ordered = tuple(results[(c.t, c.e)] for c in theorem.claims)
        report = TheoremReport(theorem.id, theorem.statement, ordered)
        self.logger.info(f"{theorem.id}: {report.status} {report.counts()}")
        return report

    def check_all(self, ids: Optional[Sequence[str]] = None) -> Dict:
        ids = list(ids) if ids is not None else TheoremRegistry.ids()
        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                reports = list(pool.map(self.check, ids))
        else:
            reports = [self.check(theorem_id) for theorem_id in ids]
        summary = {status: 0 for status in SEVERITY}
        for report in reports:
            for status, count in report.counts().items():
                summary[status] += count
        return {"reports": reports, "summary": summary}

    def _check_claim(self, theorem: Theorem, claim: Claim) -> ClaimResult:
        root = family_6(claim.t, claim.e)
        branches = [self._check_branch(theorem, root, branch) for branch in claim.branches]
        auto: List[str] = []
        uncovered = self._coverage(root, (), claim.branches, auto)
        for text in uncovered:
            branches.append(BranchResult(text, "none", UNRESOLVED, "no registered case covers this"))
        return ClaimResult(
            root.label(),
            worst([b.status for b in branches]),
            tuple(branches),
            tuple(auto),
            claim.note,
        )

    def _check_branch(self, theorem: Theorem, root: Family, branch: Branch) -> BranchResult:
        s_min = theorem.s_min
        case = _describe_steps(root, branch.steps, branch.reduces_last)
        if branch.label:
            case = f"{branch.label} {case}"

        in_range = True
        node = root
        for index, (a, b) in enumerate(branch.steps):
            if not node.admissible(a, b):
                in_range = False
            if index < len(branch.steps) - 1 or branch.reduces_last:
                node = node.reduce(a)
        depth = len(branch.steps) if branch.reduces_last else max(0, len(branch.steps) - 1)

        if branch.rule == R1:
            outcome = apply_griesmer(node, s_min)
        elif branch.rule == R2:
            outcome = apply_simplex_multiple(node, depth, s_min)
        elif branch.rule == R3:
            outcome = apply_macdonald(node, depth, s_min)
        elif branch.rule == R5:
            a, b = branch.steps[-1]
            outcome = apply_anti_vector(node, a, b, depth)
        elif branch.rule == R4:
            outcome = RuleOutcome(EXTERNAL, f"{node.label()}: relies on {branch.citation}")
            if theorem.optimal_linear:
                outcome = self._optimal_linear(root, s_min, outcome)
        else:
            raise ValueError(f"Rule {branch.rule} cannot close a registered case")

        status = outcome.status
        detail = outcome.detail
        if not in_range:
            status = ARITHMETIC_ONLY
            detail = f"case outside the admissible l_max range, vacuous; {detail}"
        return BranchResult(case, branch.rule, status, detail)

    def _optimal_linear(self, root: Family, s_min: int, cited: RuleOutcome) -> RuleOutcome:
        co_length = 63 - root.n.const
        needed = OPTIMAL_NOT_LCD_MIN_K.get(co_length)
        if needed is None or root.k < needed:
            return RuleOutcome(UNRESOLVED, f"co-length a={co_length} not covered for k={root.k}")
        fits = not greater_for_all(griesmer_sum_affine(root.d, root.k), root.n, s_min)
        beyond = greater_for_all(griesmer_sum_affine(root.d + 1, root.k), root.n, s_min)
        if not (fits and beyond):
            return RuleOutcome(UNRESOLVED, f"{root.label()}: d is not the Griesmer maximum")
        return RuleOutcome(cited.status, f"{cited.detail}; d is the Griesmer maximum, a={co_length}, k>={needed}")

    def _coverage(
        self, node: Family, prefix: Tuple[Step, ...], branches: Sequence[Branch], auto: List[str]
    ) -> List[str]:
        """Admissible cases at this node (and below) that no branch accounts for."""
        cases: Dict[Step, bool] = {}
        for branch in branches:
            if branch.steps[: len(prefix)] != prefix:
                continue
            rest = branch.steps[len(prefix) :]
            if not rest:
                return []
            inner = len(rest) > 1
            cases[rest[0]] = cases.get(rest[0], False) or inner

        uncovered: List[str] = []
        for step, inner in cases.items():
            if inner:
                child = node.reduce(step[0])
                uncovered += self._coverage(child, prefix + (step,), branches, auto)

        low, high = node.lmax_range()
        floor = node.lmin_floor()
        for a in range(low, high + 1):
            where = f"{node.label()} l_max = {node.entry(a)}"
            if (a, None) in cases:
                continue
            missing = []
            for b in range(floor, a + 1):
                if (a, b) in cases:
                    continue
                if b == a:
                    reason = "constant vector" if node.constant_feasible(a) else "constant vector, infeasible"
                    auto.append(f"{where}, l_min = {node.entry(b)}: {reason}")
                elif not node.length_feasible(a, b):
                    auto.append(f"{where}, l_min = {node.entry(b)}: length infeasible")
                else:
                    missing.append(str(node.entry(b)))
            if missing:
                uncovered.append(f"{where}, l_min in {{{', '.join(missing)}}}")
        return uncovered

    def _check_lift(
        self, theorem: Theorem, claim: Claim, results: Dict[Tuple[int, int], ClaimResult]
    ) -> ClaimResult:
        family = family_6(claim.t, claim.e)
        parent_key = claim.lift_from
        if parent_key != (claim.t + 1, claim.e + 1):
            raise ValueError(f"Lift source {parent_key} is not the parity extension of ({claim.t}, {claim.e})")
        if family.k % 2 or family.d.coeff % 2 or family.d.const % 2 == 0:
            raise ValueError(f"Parity lift needs even k and odd d, got {family.label()}")
        if parent_key not in results:
            raise ValueError(f"Lift source {parent_key} is not a checked claim of {theorem.id}")
        parent = results[parent_key]
        status = VERIFIED if parent.status in (VERIFIED, ARITHMETIC_ONLY) else parent.status
        detail = f"parity extension of an LCD {family.label()} code is an LCD {parent.family} code ({parent.status})"
        branch = BranchResult(f"extends to {parent.family}", LIFT, status, detail)
        return ClaimResult(family.label(), status, (branch,), (), claim.note)


def check_theorem(theorem_id: str) -> TheoremReport:
    return TheoremChecker().check(theorem_id)


def check_all(ids: Optional[Sequence[str]] = None, workers: int = 1) -> Dict:
    return TheoremChecker(workers).check_all(ids)


def _random_code(rng: random.Random, k: int, cap: int) -> Optional[LinearCode]:
    entries = [rng.randint(0, cap) for _ in range((1 << k) - 1)]
    if sum(entries) == 0:
        return None
    try:
        return code_from_defvec(DefiningVector.of(k, entries))
    except ValueError:
        return None


def preflight_hull_inheritance(samples: int = PREFLIGHT_SAMPLES, seed: int = 7) -> Dict:
    """
    A reduced code loses at most one hull dimension

    Returns:
        {"status": "success"|"failed", "checked": int, "error": ...}
    """
    rng = random.Random(seed)
    checked = 0
    while checked < samples:
        k = rng.choice((3, 4, 5))
        code = _random_code(rng, k, 3)
        if code is None:
            continue
        v = rng.choice(sorted(set(code.generator.columns())))
        try:
            reduced = reduce(code, v)
        except ValueError:
            continue
        checked += 1
        if code.hull_dim < reduced.hull_dim - 1:
            return {
                "status": "failed",
                "checked": checked,
                "error": f"{code} has hull {code.hull_dim}, reduction at {v} has hull {reduced.hull_dim}",
            }
    return {"status": "success", "checked": checked, "error": None}


def preflight_parity_lift(samples: int = PREFLIGHT_SAMPLES, seed: int = 11) -> Dict:
    """Parity extension of an LCD code with k = 4 and odd d is LCD with distance d + 1."""
    rng = random.Random(seed)
    checked = attempts = 0
    while checked < samples and attempts < samples * 200:
        attempts += 1
        code = _random_code(rng, 4, 3)
        if code is None or not code.is_lcd() or code.min_distance % 2 == 0:
            continue
        checked += 1
        extended = extend_parity(code)
        if not extended.is_lcd() or extended.min_distance != code.min_distance + 1:
            return {"status": "failed", "checked": checked, "error": f"{code} extends to {extended}"}
    if checked < samples:
        return {"status": "failed", "checked": checked, "error": f"only {checked} LCD samples found"}
    return {"status": "success", "checked": checked, "error": None}
