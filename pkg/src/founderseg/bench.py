"""Timing helpers for the ``bench`` command and the scaling test."""

from __future__ import annotations

import math
import statistics
import time
from typing import List, Sequence

import numpy as np

from .pbwt import ScratchBuffers, pbwt_init, pbwt_step_jump
from .segmenter import backtrack, run_streaming


def random_columns(m: int, n: int, sigma: int, seed: int = 0) -> List[bytes]:
    """``n`` uniformly random columns of ``m`` symbols, as bytes."""
    arr = np.random.default_rng(seed).integers(0, sigma, size=(n, m), dtype=np.uint8)
    return [arr[k].tobytes() for k in range(n)]


def time_segment(columns: Sequence[bytes], m: int, min_length: int, mode: str = "jump") -> float:
    """Seconds for one full solve: the streaming pass plus backtracking."""
    n = len(columns)
    start = time.perf_counter()
    res = run_streaming(columns, m, n, min_length, mode=mode)
    backtrack(res.bt, n, min_length, columns, m)
    return time.perf_counter() - start


def median_time(
    columns: Sequence[bytes], m: int, min_length: int, mode: str = "jump", repeats: int = 5
) -> float:
    return statistics.median(time_segment(columns, m, min_length, mode) for _ in range(repeats))


def jump_touches_per_column(columns: Sequence[bytes], m: int, sigma: int) -> float:
    """Average number of positions visited by the jump-pointer maxima per column."""
    scratch = ScratchBuffers(sigma)
    state = pbwt_init(m)
    for col in columns:
        state = pbwt_step_jump(state, col, scratch)
    return scratch.touches / max(len(columns), 1)


def touch_ratio(columns: Sequence[bytes], m: int, sigma: int) -> float:
    """Touches per column divided by ``m * log2(sigma)`` (``m`` when sigma <= 2)."""
    bound = m * max(math.log2(sigma), 1.0)
    return jump_touches_per_column(columns, m, sigma) / bound
