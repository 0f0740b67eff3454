"""Positional Burrows-Wheeler transform over integer alphabets.

For column ``k`` the transform is a pair of arrays:

* ``a`` - the rows ``1..m`` ordered by their reversed prefixes ``R_i[k] R_i[k-1] ... R_i[1]``;
* ``d`` - ``d[i]`` is the 1-based start of the longest common suffix of the
  prefixes of rows ``a[i-1]`` and ``a[i]``, or ``k + 1`` when that suffix is
  empty or ``i`` is the first position.

Both arrays are stored in 0-based Python lists, but their *values* follow the
1-based row and column numbering above. Two update rules are provided. The
first answers the range maxima over the previous divergence array with a
sparse table; the second overwrites the previous arrays with a jump table and
compresses the pointers it walks, which is faster in practice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from .errors import OutOfRange, SymbolOutOfRange
from .model import RecombinantMatrix
from .rmq import SparseTableMax


@dataclass
class PbwtColumn:
    k: int
    a: List[int]
    d: List[int]

    @property
    def m(self) -> int:
        return len(self.a)


class ScratchBuffers:
    """Counting-sort buffers reused across column updates.

    ``touches`` accumulates the number of positions visited by :func:`maxd`,
    which is what the jump-pointer update's running time is proportional to.
    """

    def __init__(self, sigma: int):
        self.sigma = sigma
        self.C = [0] * (sigma + 1)
        self.P = [0] * sigma
        self.touches = 0

    def reset(self) -> None:
        C, P = self.C, self.P
        for b in range(len(C)):
            C[b] = 0
        for b in range(len(P)):
            P[b] = 0


def pbwt_init(m: int) -> PbwtColumn:
    """Column 0: identity order, every suffix empty so ``d = k + 1 = 1``."""
    if m < 1:
        raise ValueError("need at least one row")
    return PbwtColumn(k=0, a=list(range(1, m + 1)), d=[1] * m)


def _bucket_starts(col: Sequence[int], scratch: ScratchBuffers) -> List[int]:
    scratch.reset()
    C = scratch.C
    sigma = scratch.sigma
    for b in col:
        if b >= sigma:
            raise SymbolOutOfRange(f"symbol {b} >= alphabet size {sigma}")
        C[b + 1] += 1
    for b in range(1, sigma):
        C[b] += C[b - 1]
    return C


def _scratch_for(col: Sequence[int], scratch: Optional[ScratchBuffers]) -> ScratchBuffers:
    if scratch is None:
        scratch = ScratchBuffers(max(col) + 1 if len(col) else 1)
    return scratch


def pbwt_step_rmq(
    prev: PbwtColumn, col: Sequence[int], scratch: Optional[ScratchBuffers] = None
) -> PbwtColumn:
    """Compute column ``prev.k + 1`` answering divergence maxima with a sparse table.

    ``col[r]`` is the symbol of row ``r + 1``. ``prev`` is left untouched.
    """
    scratch = _scratch_for(col, scratch)
    C = _bucket_starts(col, scratch)
    P = scratch.P
    m = len(prev.a)
    k = prev.k + 1
    a_prev, d_prev = prev.a, prev.d
    rmq = SparseTableMax(d_prev)
    a = [0] * m
    d = [0] * m
    for i in range(1, m + 1):
        row = a_prev[i - 1]
        b = col[row - 1]
        C[b] += 1
        pos = C[b]
        a[pos - 1] = row
        p = P[b]
        if p == 0:
            d[pos - 1] = k + 1
        else:
            # max over 1-based (p, i] is 0-based [p, i)
            d[pos - 1] = rmq.query(p, i)
        P[b] = i
    return PbwtColumn(k=k, a=a, d=d)


def maxd(
    j: int,
    i: int,
    aux_a: List[int],
    aux_d: List[int],
    counter: Optional[ScratchBuffers] = None,
) -> int:
    """Maximum of the original ``aux_d[j..i]`` (0-based, inclusive) via jump pointers.

    Every position ``p`` in ``[j, i]`` that has been touched satisfies
    ``p < aux_a[p] <= i + 1`` and ``aux_d[p] == max(original[p:aux_a[p]])``.
    The walk follows ``j, aux_a[j], ...`` up to ``i``, then redirects every
    visited pointer to ``i + 1`` and stores the accumulated suffix maxima,
    exactly as the recursive formulation would. Iterative so that chains of
    length ``m`` do not hit the recursion limit.
    """
    if j == i:
        if counter is not None:
            counter.touches += 1
        return aux_d[i]
    path = []
    p = j
    while p != i:
        path.append(p)
        p = aux_a[p]
    if counter is not None:
        counter.touches += len(path) + 1
    acc = aux_d[i]
    stop = i + 1
    for p in reversed(path):
        v = aux_d[p]
        if v > acc:
            acc = v
        else:
            aux_d[p] = acc
        aux_a[p] = stop
    return acc


def pbwt_step_jump(
    prev: PbwtColumn, col: Sequence[int], scratch: Optional[ScratchBuffers] = None
) -> PbwtColumn:
    """Compute column ``prev.k + 1`` with the jump-pointer maxima.

    ``prev.a`` and ``prev.d`` are consumed: they are rewritten into the jump
    table and hold no meaningful pBWT data afterwards.
    """
    scratch = _scratch_for(col, scratch)
    C = _bucket_starts(col, scratch)
    P = scratch.P
    m = len(prev.a)
    k = prev.k + 1
    aux_a, aux_d = prev.a, prev.d
    a = [0] * m
    d = [0] * m
    for i in range(m):
        row = aux_a[i]
        b = col[row - 1]
        C[b] += 1
        pos = C[b] - 1
        a[pos] = row
        aux_a[i] = i + 1
        p = P[b]
        if p == 0:
            d[pos] = k + 1
        else:
            # 1-based P[b] + 1 is 0-based P[b]
            d[pos] = maxd(p, i, aux_a, aux_d, scratch)
        P[b] = i + 1
    return PbwtColumn(k=k, a=a, d=d)


def build_pbwt(matrix: RecombinantMatrix, k: int, mode: str = "jump") -> PbwtColumn:
    """Run the column updates from column 0 up to column ``k``."""
    if not 0 <= k <= matrix.n:
        raise OutOfRange(f"column {k} outside [0, {matrix.n}]")
    step = pbwt_step_jump if mode == "jump" else pbwt_step_rmq
    scratch = ScratchBuffers(max(matrix.sigma, 1))
    state = pbwt_init(matrix.m)
    for c in range(1, k + 1):
        state = step(state, matrix.column(c), scratch)
    return state


def naive_pbwt(matrix: RecombinantMatrix, k: int) -> PbwtColumn:
    """Reference transform by sorting reversed prefixes directly. O(m^2 k); tests only."""
    if not 1 <= k <= matrix.n:
        raise OutOfRange(f"column {k} outside [1, {matrix.n}]")
    rev = [matrix.rows[r][:k][::-1] for r in range(matrix.m)]
    order = sorted(range(matrix.m), key=lambda r: rev[r])
    d = [k + 1]
    for x, y in zip(order, order[1:]):
        lcs = 0
        while lcs < k and rev[x][lcs] == rev[y][lcs]:
            lcs += 1
        d.append(k + 1 - lcs)
    return PbwtColumn(k=k, a=[r + 1 for r in order], d=d)
