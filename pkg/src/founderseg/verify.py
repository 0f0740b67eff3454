"""Randomized agreement checks between the streaming solver and the oracles."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Optional

from .founders import founders_for, validate_founders
from .model import RecombinantMatrix, matrix_from_ranks
from .oracle import distinct_count, enumerate_segmentations, oracle_dp
from .segmenter import backtrack, run_streaming

DEFAULT_SEED = 20180529


def random_matrix(rng: random.Random, m: int, n: int, sigma: int) -> RecombinantMatrix:
    rows = [bytes(rng.randrange(sigma) for _ in range(n)) for _ in range(m)]
    return matrix_from_ranks(rows, sigma=sigma)


def check_instance(matrix: RecombinantMatrix, min_length: int, mode: str = "jump") -> List[str]:
    """Return the list of disagreements found on one instance (empty when all checks pass)."""
    problems = []
    res = run_streaming(
        matrix.columns(), matrix.m, matrix.n, min_length, mode=mode, allow_infeasible=True
    )
    dp = oracle_dp(matrix, min_length)
    brute = enumerate_segmentations(matrix, min_length)
    if not res.M_n == dp.M_n == brute:
        problems.append(f"M(n): streaming={res.M_n} dp={dp.M_n} enumeration={brute}")
        return problems
    if not res.feasible:
        return problems
    seg = backtrack(res.bt, matrix.n, min_length, matrix.columns(), matrix.m)
    lengths = [hi - lo for lo, hi in zip(seg.boundaries, seg.boundaries[1:])]
    if seg.boundaries[0] != 0 or seg.boundaries[-1] != matrix.n or min(lengths) < min_length:
        problems.append(f"invalid segmentation {seg.boundaries}")
    cards = [distinct_count(matrix, a, b) for a, b in seg.segments()]
    if tuple(cards) != seg.per_segment_card or max(cards) != res.M_n:
        problems.append(f"segment cardinalities {cards} vs M(n)={res.M_n}")
    fs = founders_for(matrix, seg)
    if fs.K != res.M_n or not validate_founders(matrix, fs):
        problems.append("founder set invalid")
    return problems


@dataclass
class VerifyReport:
    cases: int = 0
    ok: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.ok == self.cases


def run_verify(
    cases: int = 500,
    max_n: int = 16,
    max_m: int = 8,
    max_L: int = 6,
    seed: Optional[int] = DEFAULT_SEED,
    mode: str = "jump",
) -> VerifyReport:
    rng = random.Random(seed)
    report = VerifyReport()
    for case in range(cases):
        m = rng.randint(1, max_m)
        sigma = rng.choice((2, 4))
        L = rng.randint(1, max_L)
        n = rng.randint(min(L, max_n), max_n)
        matrix = random_matrix(rng, m, n, sigma)
        problems = check_instance(matrix, L, mode=mode)
        report.cases += 1
        if problems:
            report.failures.append(f"case {case} (m={m}, n={n}, L={L}): " + "; ".join(problems))
        else:
            report.ok += 1
    return report
