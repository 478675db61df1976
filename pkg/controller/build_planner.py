"""
Build Planner - Reference distances, seeding targets and build plans for [n, 6] LCD codes

Reference data:
    SMALL_LENGTH_BOUNDS  n = 6..50 -> (Griesmer bound, d_a, d_l)
    GLUED_DISTANCES      n = 51..68 -> d of the optimal LCD code
    RESIDUE_OFFSETS      t = 0..62 -> (d_a offset, (lower, upper) d_l offset);
                         the optimal distance at n = 63s + t is 32s + offset
    K4_TARGETS, K5_TARGETS  distances of the small LCD codes used for gluing
"""

from typing import Dict, Iterable, List, Optional, Tuple

from modules.constructs import K33_PARAMS, BuildPlan, SeedTarget, has_recipe, split_length

_SMALL_GRIESMER = "1 2 2 3 4 4 4 5 6 6 7 8 8 8 8 9 10 10 11 12 12 12 13 14 14 15 16 16 16 16 16 17 18 18 19 20 20 20 21 22 22 23 24 24 24"
_SMALL_DA = "1 2 2 2 3 4 4 4 5 6 6 7 8 8 8 8 9 10 10 11 12 12 12 13 14 15 16 16 16 16 16 17 18 18 18 19 20 20 21 22 22 23 24 24 24"
_SMALL_DL = "1 2 2 2 3 4 4 4 5 6 6 6 7 8 8 8 9 10 10 10 11 12 12 12 13 14 14 14 15 16 16 16 17 18 18 19 20 20 20 21 22 22 22 23 24"

_RESIDUE_DA = (
    "0 0 0 0 0 0 1 2 2 3 4 4 4 5 6 6 7 8 8 8 8 9 10 10 11 12 12 12 13 14 14 15 16 16 16 16 16 "
    "17 18 18 19 20 20 20 21 22 22 23 24 24 24 24 25 26 26 27 28 28 28 29 30 30 31"
)
_RESIDUE_DL = (
    "-2 -2 -1 0 0 0 1 2 2 2 3 4 4 4 5 6 6 6 7 8 8 8/9 9/10 10 10 10/11 11/12 12 12 12 13 14 14 "
    "14/15 15/16 16 16 16/17 17/18 18 18 19 20 20 20 20/21 21/22 22 22 23 24 24 24 25 26 26 26 27 "
    "28 28 28 29 30"
)


def _ints(text: str) -> List[int]:
    return [int(x) for x in text.split()]


def _interval(text: str) -> Tuple[int, int]:
    low, _, high = text.partition("/")
    return int(low), int(high or low)


SMALL_LENGTH_BOUNDS: Dict[int, Tuple[int, int, int]] = {
    n: triple for n, triple in zip(range(6, 51), zip(_ints(_SMALL_GRIESMER), _ints(_SMALL_DA), _ints(_SMALL_DL)))
}

GLUED_DISTANCES: Dict[int, int] = dict(
    zip(range(51, 69), [24, 24, 25, 26, 26, 26, 27, 28, 28, 28, 29, 30, 30, 30, 31, 32, 32, 32])
)

RESIDUE_OFFSETS: Dict[int, Tuple[int, Tuple[int, int]]] = {
    t: (d_a, _interval(d_l)) for t, (d_a, d_l) in enumerate(zip(_ints(_RESIDUE_DA), _RESIDUE_DL.split()))
}

# d_l(m, 4) from ExhaustiveSearch; test_searchlab re-derives every entry
K4_TARGETS: Dict[int, int] = dict(zip(range(6, 20), [2, 2, 3, 4, 4, 4, 5, 6, 6, 6, 7, 8, 8, 9]))

GLUE45_RANGE = range(51, 65)
GLUE33_LENGTHS = (65, 67, 68)
EXTENSION_LENGTH = 66


def _k5_target(m: int) -> int:
    """
    Distance the [m, 5] extension needs so that gluing with K_6,33 (d2 = 16) reaches the table

    [33, 5] only feeds the [66, 6, 31] glue that parity extension lifts to 32.
    """
    n = m + K33_PARAMS[0]
    goal = GLUED_DISTANCES[n] if n in GLUE33_LENGTHS else GLUED_DISTANCES[n - 1]
    return goal - K33_PARAMS[2]


K5_TARGETS: Dict[int, int] = {m: _k5_target(m) for m in range(32, 36)}

RESIDUE_CLASSES = {0: "i", 1: "ii", 2: "iii"}


def record_name(n: int, k: int) -> str:
    return f"n{n}_k{k}"


def reference_dl(t: int) -> Tuple[int, Optional[int]]:
    """
    (expected, upper) distance of the [t, 6] base record, 6 <= t <= 68

    upper is None when the residue is settled.
    """
    if 63 <= t <= 68:
        return GLUED_DISTANCES[t], None
    if not 6 <= t <= 62:
        raise ValueError(f"No base record for residue t={t}")
    low, high = RESIDUE_OFFSETS[t][1]
    return low, (high if high != low else None)


def plan_for(n: int) -> BuildPlan:
    s, t = split_length(n)
    low, high = reference_dl(t)
    return BuildPlan(
        n=n,
        s=s,
        t=t,
        base_record_name=record_name(t, 6),
        expected_d=32 * s + low,
        upper_d=None if high is None else 32 * s + high,
    )


def residue_class(t: int) -> str:
    """i, ii or iii by the gap between d_a and the (lower) d_l offset; iv added for open entries."""
    d_a, (low, high) = RESIDUE_OFFSETS[t]
    gap = d_a - low
    if gap not in RESIDUE_CLASSES:
        raise ValueError(f"Residue t={t} has gap {gap} between d_a and d_l")
    label = RESIDUE_CLASSES[gap]
    return f"{label},iv" if high != low else label


def table_rows(s_max: int) -> List[Dict]:
    """
    Residue table rows for s = 0..s_max; s = 0 only lists n >= 42

    Raises:
        ValueError: s_max < 0
    """
    if s_max < 0:
        raise ValueError(f"s_max must be nonnegative, got {s_max}")
    rows = []
    for s in range(s_max + 1):
        for t, (d_a, (low, high)) in RESIDUE_OFFSETS.items():
            n = 63 * s + t
            if s == 0 and n < 42:
                continue
            rows.append(
                {
                    "t": t,
                    "d_a": d_a,
                    "d_l": str(low) if low == high else f"{low}/{high}",
                    "status": "settled" if low == high else "open",
                    "s": s,
                    "n": n,
                    "class": residue_class(t),
                }
            )
    return rows


def _k6_target(n: int) -> SeedTarget:
    if n in SMALL_LENGTH_BOUNDS:
        d = SMALL_LENGTH_BOUNDS[n][2]
        method = "recipe" if has_recipe(n, 6) else "climb"
        low, high = RESIDUE_OFFSETS[n][1]
        if high != low and low < d:
            # open residue: the base record only has to carry the lower offset
            return SeedTarget(n, 6, low, method, reference_d=d)
        return SeedTarget(n, 6, d, method)
    if n in GLUE45_RANGE:
        return SeedTarget(n, 6, GLUED_DISTANCES[n], "glue45", source=(n - 45, 4))
    if n in GLUE33_LENGTHS:
        return SeedTarget(n, 6, GLUED_DISTANCES[n], "glue33", source=(n - 33, 5))
    if n == EXTENSION_LENGTH:
        return SeedTarget(n, 6, GLUED_DISTANCES[n], "extend", source=(65, 6))
    raise ValueError(f"No seeding target for [{n}, 6]; lengths 6..68 are supported")


def seeding_targets(lengths: Optional[Iterable[int]] = None) -> List[SeedTarget]:
    """
    Targets for the requested k = 6 lengths (default 6..68) plus whatever they glue or extend

    Dependencies come first: k = 4 and k = 5 records, then the k = 6 sources.
    """
    wanted = sorted(set(lengths)) if lengths is not None else list(range(6, 69))
    k6: Dict[int, SeedTarget] = {}

    def add(n: int) -> None:
        if n in k6:
            return
        target = _k6_target(n)
        if target.source and target.source[1] == 6:
            add(target.source[0])
        k6[n] = target

    for n in wanted:
        add(n)

    extra: List[SeedTarget] = []
    for target in k6.values():
        if target.source and target.source[1] == 4:
            m = target.source[0]
            extra.append(SeedTarget(m, 4, K4_TARGETS[m], "recipe"))
        elif target.source and target.source[1] == 5:
            m = target.source[0]
            extra.append(SeedTarget(m, 5, K5_TARGETS[m], "recipe"))

    unique = {(t.n, t.k): t for t in extra}
    small = sorted(unique.values(), key=lambda t: (t.k, t.n))
    return small + sorted(k6.values(), key=lambda t: t.n)
