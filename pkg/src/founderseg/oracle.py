"""Slow reference implementations used by the tests and the ``verify`` command.

Nothing here shares code with the streaming path: distinct counts come from
hashing substrings, the recurrence is evaluated over every split point, and
the exhaustive solver tries every admissible set of boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple

from .errors import OutOfRange, TooLarge
from .model import RecombinantMatrix

ENUMERATION_LIMIT = 24


def distinct_count(matrix: RecombinantMatrix, j: int, k: int) -> int:
    """``|R[j, k]|``: the number of distinct row substrings over columns ``j..k``."""
    if not 1 <= j <= k <= matrix.n:
        raise OutOfRange(f"range [{j}, {k}] outside [1, {matrix.n}]")
    return len({row[j - 1 : k] for row in matrix.rows})


@dataclass(frozen=True)
class OracleResult:
    """``M_table[k]`` for ``k = 0..n`` (index 0 is the sentinel) and one optimal segmentation."""

    M_table: Tuple[int, ...]
    boundaries: Optional[Tuple[int, ...]]
    sentinel: int

    @property
    def M_n(self) -> int:
        return self.M_table[-1]


def oracle_dp(matrix: RecombinantMatrix, min_length: int) -> OracleResult:
    """Evaluate the segmentation recurrence directly over every split point. O(m n^2)."""
    n, L = matrix.n, min_length
    inf = matrix.m + 1
    M: List[int] = [inf] * (n + 1)
    choice = [0] * (n + 1)
    for k in range(1, n + 1):
        if k < L:
            continue
        card = [0] * (k + 1)
        for j in range(1, k + 1):
            card[j] = distinct_count(matrix, j, k)
        if k < 2 * L:
            M[k] = card[1]
            continue
        best, arg = inf + 1, 0
        for j in range(0, k - L + 1):
            val = max(M[j], card[j + 1])
            if val < best:
                best, arg = val, j
        M[k] = best
        choice[k] = arg
    bounds = None
    if n >= L and M[n] < inf:
        ends = [n]
        k = n
        while choice[k]:
            k = choice[k]
            ends.append(k)
        ends.append(0)
        bounds = tuple(reversed(ends))
    return OracleResult(M_table=tuple(M), boundaries=bounds, sentinel=inf)


def segmentation_cost(matrix: RecombinantMatrix, boundaries: Tuple[int, ...]) -> int:
    return max(
        distinct_count(matrix, lo + 1, hi) for lo, hi in zip(boundaries, boundaries[1:])
    )


def enumerate_segmentations(matrix: RecombinantMatrix, min_length: int) -> int:
    """Minimum over all segmentations with segments of length >= L of the largest segment cardinality.

    Returns the sentinel ``m + 1`` when no segmentation exists.
    """
    n, L = matrix.n, min_length
    if n > ENUMERATION_LIMIT:
        raise TooLarge(f"n={n} exceeds the enumeration limit {ENUMERATION_LIMIT}")
    best = matrix.m + 1
    inner = range(1, n)
    for cuts in range(0, n):
        for chosen in combinations(inner, cuts):
            bounds = (0,) + chosen + (n,)
            if any(b - a < L for a, b in zip(bounds, bounds[1:])):
                continue
            best = min(best, segmentation_cost(matrix, bounds))
    return best
