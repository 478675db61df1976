"""
Theorem Registry - Nonexistence claims and their case splits, as data

A claim (t, e) stands for the family [63s + t, 6, 32s + e]. A branch is a
list of steps (l_max offset, l_min offset or None) and a rule. Every step
but the last is a reduction; the last step is a reduction for the
griesmer, simplex, MacDonald and reduced-citation rules, and identifies the
case in place for the anti-vector rule and for self-citations.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from modules.theorems.rules import R1, R2, R3, R4, R5, RULES

Step = Tuple[int, Optional[int]]

HULL_CLASSIFICATION = "classification of five-dimensional codes [62s + c, 5, 32s + e] with hull dimension >= 3"
UNIQUE_SIX_DIM = "classification of optimal six-dimensional codes with the same parameters"
OPTIMAL_NOT_LCD = "optimal [sN_k + N_k - a, k] codes are not LCD for the listed (a, k)"


@dataclass(frozen=True)
class Branch:
    steps: Tuple[Step, ...]
    rule: str
    label: str = ""
    citation: str = ""
    reduces: bool = True

    def __post_init__(self):
        if self.rule not in RULES:
            raise ValueError(f"Unknown rule: {self.rule}")
        if self.rule == R5 and not self.steps:
            raise ValueError("The anti-vector rule needs a case step")

    @property
    def reduces_last(self) -> bool:
        return self.reduces and self.rule != R5


@dataclass(frozen=True)
class Claim:
    t: int
    e: int
    branches: Tuple[Branch, ...] = ()
    lift_from: Optional[Tuple[int, int]] = None
    note: str = ""

    def __post_init__(self):
        if bool(self.branches) == bool(self.lift_from):
            raise ValueError(f"Claim ({self.t}, {self.e}) needs either branches or a lift source")


@dataclass(frozen=True)
class Theorem:
    id: str
    statement: str
    claims: Tuple[Claim, ...]
    s_min: int = 1
    optimal_linear: bool = False


def _b(steps: List[Step], rule: str, label: str = "", citation: str = "", reduces: bool = True) -> Branch:
    return Branch(tuple(steps), rule, label, citation, reduces)


def _lift(t: int, e: int) -> Claim:
    return Claim(t, e, lift_from=(t + 1, e + 1))


def _cited(t: int, e: int) -> Claim:
    return Claim(t, e, (_b([], R4, citation=OPTIMAL_NOT_LCD),))


N = None


class TheoremRegistry:
    """Registered nonexistence results for [63s + t, 6, 32s + e] LCD codes"""

    THEOREMS: Dict[str, Theorem] = {
        "T7": Theorem(
            "T7",
            "No LCD [63s, 6, 32s], [63s, 6, 32s - 1], [63s + 1, 6, 32s], [63s + 1, 6, 32s - 1] "
            "or [63s + 2, 6, 32s] code",
            (
                Claim(0, 0, (_b([], R2),)),
                _lift(0, -1),
                Claim(1, 0, (_b([(1, N)], R2),)),
                _lift(1, -1),
                Claim(2, 0, (_b([(2, N)], R2, "(1)"), _b([(1, N), (1, N)], R2, "(2)"))),
            ),
        ),
        "T8": Theorem(
            "T8",
            "No LCD [63s + 10, 6, 32s + 4] or [63s + 9, 6, 32s + 3] code",
            (
                Claim(10, 4, (_b([(2, N)], R1, "(1)"), _b([(1, N), (1, N), (1, N)], R5, "(2)"))),
                _lift(9, 3),
            ),
        ),
        "T9": Theorem(
            "T9",
            "No LCD [63s + 14, 6, 32s + 6] or [63s + 13, 6, 32s + 5] code",
            (
                Claim(
                    14,
                    6,
                    (
                        _b([(2, N)], R1, "(1)"),
                        _b([(1, N)], R4, "(2)", citation=f"{HULL_CLASSIFICATION}: hull >= 3"),
                    ),
                ),
                _lift(13, 5),
            ),
        ),
        "T10": Theorem(
            "T10",
            "No LCD [63s + 17, 6, 32s + 8], [63s + 16, 6, 32s + 7], [63s + 18, 6, 32s + 8] "
            "or [63s + 17, 6, 32s + 7] code",
            (
                Claim(17, 8, (_b([(1, N), (1, N)], R2),)),
                Claim(16, 7, lift_from=(17, 8)),
                Claim(
                    18,
                    8,
                    (
                        _b([(2, N), (1, N)], R2, "(1)"),
                        _b([(1, N)], R4, "(2)", citation=f"{HULL_CLASSIFICATION}: hull >= 3"),
                    ),
                    note="the l_max = s + 2 case is not written out in the proof; it reduces twice to 15(4s + 1) x S_4",
                ),
                Claim(17, 7, lift_from=(18, 8)),
            ),
        ),
        "T11": Theorem(
            "T11",
            "No LCD [63s + 25, 6, 32s + 12] or [63s + 24, 6, 32s + 11] code",
            (
                Claim(25, 12, (_b([(2, N)], R1, "(1)"), _b([(1, N), (1, N), (2, N)], R5, "(2)"))),
                _lift(24, 11),
            ),
        ),
        "T12": Theorem(
            "T12",
            "No LCD [63s + 29, 6, 32s + 14] or [63s + 28, 6, 32s + 13] code",
            (
                Claim(29, 14, (_b([(2, N)], R1, "(1)"), _b([(1, N)], R3, "(2)"))),
                _lift(28, 13),
            ),
        ),
        "T13": Theorem(
            "T13",
            "No LCD [63s + 30, 6, 32s + 14] or [63s + 29, 6, 32s + 13] code",
            (
                Claim(
                    30,
                    14,
                    (
                        _b([(2, N)], R3, "(1)"),
                        _b([(1, N), (2, N)], R1, "(2.1)"),
                        _b([(1, N), (1, 0)], R5, "(2.2)"),
                        _b([(1, N), (1, -1)], R5, "(2.3)"),
                    ),
                    note="the closing sentence of the proof names [63s + 61, 6, 32s + 30], "
                    "not the stated [63s + 30, 6, 32s + 14]",
                ),
                _lift(29, 13),
            ),
        ),
        "T14": Theorem(
            "T14",
            "No LCD [63s + 32, 6, 32s + 16], [63s + 33, 6, 32s + 16], [63s + 31, 6, 32s + 15] "
            "or [63s + 32, 6, 32s + 15] code",
            (
                Claim(32, 16, (_b([(1, N)], R2),)),
                Claim(33, 16, (_b([(2, N)], R2, "(1)"), _b([(1, N), (2, N)], R2, "(2)"))),
                Claim(31, 15, lift_from=(32, 16)),
                Claim(32, 15, lift_from=(33, 16)),
            ),
        ),
        "T15": Theorem(
            "T15",
            "No LCD [63s + 41, 6, 32s + 20] or [63s + 40, 6, 32s + 19] code",
            (
                Claim(41, 20, (_b([(2, N)], R1, "(1)"), _b([(1, N), (2, N), (3, N)], R5, "(2)"))),
                _lift(40, 19),
            ),
        ),
        "T16": Theorem(
            "T16",
            "No LCD [63s + 45, 6, 32s + 22] or [63s + 44, 6, 32s + 21] code",
            (
                Claim(
                    45,
                    22,
                    (
                        _b([(2, N)], R1, "(1)"),
                        _b([(1, 0)], R4, "(2.1)", citation=f"{UNIQUE_SIX_DIM}: the unique code has hull 4", reduces=False),
                        _b([(1, -1)], R4, "(2.2)", citation=f"{HULL_CLASSIFICATION}: hull >= 3"),
                    ),
                ),
                _lift(44, 21),
            ),
        ),
        "T17": Theorem(
            "T17",
            "No LCD [63s + 49, 6, 32s + 24], [63s + 48, 6, 32s + 24], [63s + 47, 6, 32s + 23] "
            "or [63s + 48, 6, 32s + 23] code",
            (
                Claim(
                    49,
                    24,
                    (
                        _b([(2, N), (2, N)], R2, "(1)"),
                        _b([(1, 0)], R4, "(2.1)", citation=f"{UNIQUE_SIX_DIM}: both codes have nonzero hull", reduces=False),
                        _b([(1, -1)], R4, "(2.2)", citation=f"{HULL_CLASSIFICATION}: hull >= 3"),
                    ),
                ),
                Claim(48, 24, (_b([(1, N), (2, N)], R2),)),
                Claim(47, 23, lift_from=(48, 24)),
                Claim(48, 23, lift_from=(49, 24)),
            ),
        ),
        "C1": Theorem(
            "C1",
            "Optimal [63s + t, 6] codes are not LCD for t in {53, 55, 56, 57, 59, 60, 61, 62}, "
            "nor their punctured siblings at t in {52, 56, 60}",
            (
                _cited(53, 26),
                _cited(55, 27),
                _cited(56, 28),
                _cited(57, 28),
                _cited(59, 29),
                _cited(60, 30),
                _cited(61, 30),
                _cited(62, 31),
                _lift(52, 25),
                _lift(56, 27),
                _lift(60, 29),
            ),
            s_min=0,
            optimal_linear=True,
        ),
    }

    @classmethod
    def ids(cls) -> List[str]:
        return list(cls.THEOREMS)

    @classmethod
    def get(cls, theorem_id: str) -> Theorem:
        if theorem_id not in cls.THEOREMS:
            raise ValueError(f"Unknown theorem id {theorem_id!r}; known: {', '.join(cls.THEOREMS)}")
        return cls.THEOREMS[theorem_id]
