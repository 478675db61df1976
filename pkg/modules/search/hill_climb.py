"""
Hill Climbing - Local search over defining vectors

A move shifts one unit of multiplicity from position i to position j. The
weight vector after every move is evaluated in one numpy pass from
W = P_k L: removing alpha_i subtracts column i of P_k, adding alpha_j adds
column j. Moving one unit flips the parity of l_i and l_j, so the Gram
matrix changes by alpha_i alpha_i^T + alpha_j alpha_j^T.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from modules.codes import CodeRecord, make_record
from modules.defvec import DefiningVector, code_from_defvec, gram_from_defvec, pk_array
from modules.gf2 import rank_of_rows
from modules.search.budget import SearchBudget

MAX_K = 8
MAX_N = 10_000
# Bound on |sources| * N * N entries evaluated at once
MOVE_CHUNK = 1 << 21


def _outer_rows(alpha: int, k: int) -> List[int]:
    return [alpha if (alpha >> r) & 1 else 0 for r in range(k)]


@dataclass
class ClimbState:
    entries: np.ndarray
    weights: np.ndarray
    gram_rows: List[int]

    def score(self, k: int, require_lcd: bool) -> Tuple[int, int, int]:
        d = int(self.weights.min())
        lcd = int(rank_of_rows(self.gram_rows) == k) if require_lcd else 0
        return d, lcd, -int((self.weights == d).sum())


class HillClimber:
    """Randomised restarts of a sideways-tolerant hill climb towards an [n, k, target_d] code"""

    def __init__(self, n: int, k: int, target_d: int, require_lcd: bool, budget: SearchBudget):
        if not 2 <= k <= MAX_K:
            raise ValueError(f"Hill climbing supports 2 <= k <= {MAX_K}, got k={k}")
        if not k <= n <= MAX_N:
            raise ValueError(f"Hill climbing supports k <= n <= {MAX_N}, got n={n}")
        if target_d < 1:
            raise ValueError(f"Target distance must be positive, got {target_d}")
        self.n = n
        self.k = k
        self.target_d = target_d
        self.require_lcd = require_lcd
        self.budget = budget
        self.size = (1 << k) - 1
        self.p = pk_array(k)
        self.logger = self._setup_logger()

    def _setup_logger(self) -> logging.Logger:
        logger = logging.getLogger("HillClimber")
        logger.setLevel(logging.INFO)
        return logger

    def run(self) -> Optional[CodeRecord]:
        """
        Run all restarts; the lowest successful restart index wins

        Returns:
            Verified record, or None when no restart reaches the target
        """
        seeds = np.random.SeedSequence(self.budget.seed).spawn(self.budget.restarts)
        workers = self.budget.workers
        self.logger.info(
            f"Climbing to [{self.n}, {self.k}, {self.target_d}] lcd={self.require_lcd} "
            f"restarts={self.budget.restarts} iterations={self.budget.max_iterations}"
        )
        for start in range(0, len(seeds), workers):
            batch = list(enumerate(seeds[start : start + workers], start=start))
            if workers > 1:
                with ThreadPoolExecutor(max_workers=workers) as pool:
                    results = list(pool.map(lambda item: self._climb(*item), batch))
            else:
                results = [self._climb(*item) for item in batch]
            for index, entries in zip((i for i, _ in batch), results):
                if entries is not None:
                    return self._record(entries, index)
        self.logger.info(f"Target [{self.n}, {self.k}, {self.target_d}] not reached")
        return None

    def _record(self, entries: np.ndarray, index: int) -> CodeRecord:
        code = code_from_defvec(DefiningVector.of(self.k, entries.tolist()))
        if code.min_distance < self.target_d or (self.require_lcd and not code.is_lcd()):
            raise ArithmeticError(f"Restart {index} reported a state that fails verification: {code}")
        self.logger.info(f"Restart {index} reached {code}")
        return make_record(
            f"n{self.n}_k{self.k}", code, "searched", seed=self.budget.seed, notes=f"hill climb restart {index}"
        )

    def _initial(self, rng: np.random.Generator) -> ClimbState:
        base, extra = divmod(self.n, self.size)
        entries = np.full(self.size, base, dtype=np.int64)
        entries[rng.choice(self.size, size=extra, replace=False)] += 1
        vector = DefiningVector.of(self.k, entries.tolist())
        return ClimbState(entries, self.p @ entries, list(gram_from_defvec(vector).rows))

    def _reached(self, score: Tuple[int, int, int]) -> bool:
        return score[0] >= self.target_d and (score[1] == 1 or not self.require_lcd)

    def _candidates(self, state: ClimbState, rng: np.random.Generator) -> List[Tuple[int, int, int, int]]:
        """All moves as (d, min-weight count, i, j), best first, random order within ties."""
        sources = np.flatnonzero(state.entries > 0)
        chunk = max(1, MOVE_CHUNK // (self.size * self.size))
        d_parts, c_parts = [], []
        for lo in range(0, len(sources), chunk):
            part = sources[lo : lo + chunk]
            removed = state.weights[None, :] - self.p[:, part].T
            moved = removed[:, :, None] + self.p[None, :, :]
            d_new = moved.min(axis=1)
            d_parts.append(d_new)
            c_parts.append((moved == d_new[:, None, :]).sum(axis=1))
        d_all = np.concatenate(d_parts)
        counts = np.concatenate(c_parts)
        src_idx, dst = np.nonzero(sources[:, None] != np.arange(self.size)[None, :])
        d_flat = d_all[src_idx, dst]
        c_flat = counts[src_idx, dst]
        noise = rng.permutation(len(d_flat))
        order = np.lexsort((noise, c_flat, -d_flat))
        return [(int(d_flat[o]), int(c_flat[o]), int(sources[src_idx[o]]), int(dst[o])) for o in order]

    def _apply(self, state: ClimbState, i: int, j: int) -> ClimbState:
        entries = state.entries.copy()
        entries[i] -= 1
        entries[j] += 1
        weights = state.weights - self.p[:, i] + self.p[:, j]
        gram = list(state.gram_rows)
        for alpha in (i + 1, j + 1):
            gram = [g ^ o for g, o in zip(gram, _outer_rows(alpha, self.k))]
        return ClimbState(entries, weights, gram)

    def _climb(self, index: int, seed: np.random.SeedSequence) -> Optional[np.ndarray]:
        rng = np.random.default_rng(seed)
        state = self._initial(rng)
        score = state.score(self.k, self.require_lcd)
        sideways = 0
        for _ in range(self.budget.max_iterations):
            if self._reached(score):
                return state.entries
            best_state, best_score = None, None
            probes = 0
            for d, count, i, j in self._candidates(state, rng):
                if best_score is not None and d < best_score[0]:
                    break
                if self.require_lcd:
                    if probes >= self.budget.lcd_probe_limit:
                        break
                    probes += 1
                candidate = self._apply(state, i, j)
                candidate_score = candidate.score(self.k, self.require_lcd)
                if best_score is None or candidate_score > best_score:
                    best_state, best_score = candidate, candidate_score
                if not self.require_lcd or candidate_score[1] == 1:
                    break
            if best_state is None or best_score < score:
                break
            if best_score == score:
                sideways += 1
                if sideways > self.budget.max_sideways:
                    break
            else:
                sideways = 0
            state, score = best_state, best_score
        return state.entries if self._reached(score) else None


def hill_climb(n: int, k: int, target_d: int, require_lcd: bool, budget: SearchBudget) -> Optional[CodeRecord]:
    return HillClimber(n, k, target_d, require_lcd, budget).run()
