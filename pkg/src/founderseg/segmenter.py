"""Streaming minimum segmentation in O(mn) time and O(m + L) working space.

The recurrence being evaluated is

    M(k) = inf                                     if k < L
         = |R[1, k]|                               if L <= k < 2L
         = min_{0 <= j <= k-L} max(M(j), |R[j+1, k]|)  otherwise

where ``|R[j, k]|`` is the number of distinct substrings of the rows over
columns ``j..k``. ``|R[j+1, k]|`` is a step function of ``j`` that only
changes at positions ``d_k[i] - 1`` of the pBWT divergence array, so the
minimum splits into at most ``m`` classes. The segmenter never stores ``d_k``
itself; it keeps

* ``s``: the sorted distinct values of ``d_k`` (always ending with ``k + 1``),
* ``t``: how often each value of ``s`` occurs in ``d_k``,
* ``e``: for every pBWT position the index into ``s`` of its divergence value,
* ``u``: per class of ``s`` the minimum of the already final ``M`` values in
  the split positions ``s[j-1]-1 .. s[j]-2`` together with the position
  attaining it,

and ``|R[s[j]-1, k]|`` is the suffix sum ``t[j] + ... + t[r]``.

Infinity is represented by the sentinel ``m + 1``, which exceeds every
finite ``M`` value and every cardinality.

``M(0)`` is the sentinel, so the split ``j = 0`` never wins for ``k >= 2L``.
That is harmless: any split ``L <= j <= k - L`` gives
``max(M(j), |R[j+1, k]|) <= |R[1, k]|`` because ``M(j) <= |R[1, j]|``.

Ties are broken deterministically: inside a class the smallest position
attaining the minimum is kept, and among classes the leftmost one wins.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import (
    CorruptBacktrack,
    InfeasibleLength,
    InvalidL,
    OutOfRange,
    SourceExhausted,
    SymbolOutOfRange,
)
from .model import RecombinantMatrix, Segmentation
from .rmq import SparseTableMax

MODES = ("jump", "rmq")


def working_space_bound(m: int, min_length: int, sigma: int) -> int:
    """Slot budget for the streaming state: ``10 (m + L)`` plus the counting buffers."""
    return 10 * (m + min_length) + 2 * sigma + 2


class StreamingSegmenter:
    """Column-by-column evaluation of the segmentation recurrence.

    Call :meth:`step` once per column; it returns ``M(k)`` and the backtrack
    entry for that column. All working arrays are allocated once in the
    constructor with fixed capacities; :meth:`slot_count` reports their total
    size.

    :param m: number of recombinants
    :param min_length: minimum segment length ``L``
    :param sigma: alphabet size; when omitted the counting buffers grow on demand
    :param mode: ``"jump"`` (jump-pointer maxima, default) or ``"rmq"`` (sparse table)
    """

    def __init__(self, m: int, min_length: int, sigma: Optional[int] = None, mode: str = "jump"):
        if min_length < 1:
            raise InvalidL(f"minimum segment length must be >= 1, got {min_length}")
        if m < 1:
            raise ValueError("need at least one recombinant")
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
        self.m = m
        self.L = min_length
        self.mode = mode
        self.sentinel = m + 1
        self.k = 0
        self.fixed_sigma = sigma
        # both a buffers take turns as the compaction map, which needs |s| <= m + 1 slots
        self._a = list(range(1, m + 1)) + [0]
        self._a_prev = [0] * (m + 1)
        self._e = [1] * m
        self._e_prev = [0] * m
        self._s = [0] * (m + 1)
        self._t = [0] * (m + 1)
        # one extra slot for the dummy element appended during compaction
        self._uv = [0] * (m + 2)
        self._up = [0] * (m + 2)
        self._s[0] = 1
        self._t[0] = m
        self._uv[0] = self.sentinel
        self._r = 1
        self._ring = [self.sentinel] * min_length
        nsig = sigma if sigma else 1
        self._C = [0] * (nsig + 1)
        self._P = [0] * nsig
        assert self.slot_count() <= working_space_bound(m, min_length, nsig)

    # -- introspection ------------------------------------------------------

    @property
    def r(self) -> int:
        return self._r

    @property
    def s(self) -> List[int]:
        return self._s[: self._r]

    @property
    def t(self) -> List[int]:
        return self._t[: self._r]

    @property
    def e(self) -> List[int]:
        return list(self._e)

    @property
    def a(self) -> List[int]:
        return self._a[: self.m]

    @property
    def u(self) -> List[Tuple[int, int]]:
        """``(min_value, argmin_position)`` per class; position 0 when the value is the sentinel."""
        return list(zip(self._uv[: self._r], self._up[: self._r]))

    @property
    def d(self) -> List[int]:
        """The divergence array implied by ``s`` and ``e``."""
        s = self._s
        return [s[x - 1] for x in self._e]

    def suffix_sum_t(self, j: int) -> int:
        """``t[j] + ... + t[r]`` for 1-based ``j``, which equals ``|R[s[j]-1, k]|``."""
        if not 1 <= j <= self._r:
            raise OutOfRange(f"class {j} outside [1, {self._r}]")
        return sum(self._t[j - 1 : self._r])

    def prefix_cardinality(self) -> int:
        """``|R[1, k]|``: rows sharing all of ``1..k`` form the class with ``s = 1``."""
        total = sum(self._t[: self._r])
        if self._s[0] == 1:
            total -= self._t[0]
        return total

    def M(self, ell: int) -> int:
        """``M(ell)`` for ``k - L < ell <= k``, read from the ring buffer."""
        if ell < 1:
            return self.sentinel
        if not self.k - self.L < ell <= self.k:
            raise OutOfRange(f"M({ell}) is no longer retained at k={self.k}")
        return self._ring[ell % self.L]

    def slot_count(self) -> int:
        """Total length of all working arrays (the backtrack array is not included)."""
        return sum(
            len(x)
            for x in (
                self._a, self._a_prev, self._e, self._e_prev, self._s, self._t,
                self._uv, self._up, self._ring, self._C, self._P,
            )
        )

    # -- the update ---------------------------------------------------------

    def _ensure_sigma(self, col: Sequence[int]) -> int:
        top = max(col) + 1
        sigma = len(self._P)
        if top > sigma:
            if self.fixed_sigma:
                raise SymbolOutOfRange(f"symbol {top - 1} >= alphabet size {sigma}")
            self._C.extend([0] * (top - sigma))
            self._P.extend([0] * (top - sigma))
            sigma = top
        return sigma

    def step(self, col: Sequence[int]) -> Tuple[int, int]:
        """Consume column ``k = self.k + 1`` and return ``(M(k), bt(k))``.

        ``col[i]`` is the symbol of row ``i + 1``. ``bt(k)`` is 0 when the
        optimum for the prefix is a single segment, otherwise the end of the
        previous segment in an optimal segmentation of ``1..k``.
        """
        m = self.m
        if len(col) != m:
            raise ValueError(f"column has {len(col)} symbols, expected {m}")
        sigma = self._ensure_sigma(col)
        L = self.L
        sentinel = self.sentinel
        k = self.k + 1
        s, t, uv, up = self._s, self._t, self._uv, self._up
        a_prev, e_prev = self._a, self._e
        a, e = self._a_prev, self._e_prev
        ring = self._ring
        r = self._r

        # append k + 1 to s and M'(k - 1) to u
        s[r] = k + 1
        ns = r + 1
        if L == 1 and k > 1:
            uv[r] = ring[(k - 1) % L]
            up[r] = k - 1
        else:
            uv[r] = sentinel
            up[r] = 0

        # bucket starts for the counting sort
        C, P = self._C, self._P
        acc = 0
        for b in range(sigma):
            C[b] = acc
            P[b] = 0
            acc += col.count(b)
        for x in range(ns):
            t[x] = 0

        if self.mode == "jump":
            for i in range(m):
                row = a_prev[i]
                b = col[row - 1]
                pos = C[b]
                C[b] = pos + 1
                a[pos] = row
                a_prev[i] = i + 1
                p = P[b]
                if p == 0:
                    e[pos] = ns
                elif p == i:
                    e[pos] = e_prev[i]
                else:
                    # jump-pointer maximum of e_prev over 0-based [p, i]
                    path = []
                    j = p
                    while j != i:
                        path.append(j)
                        j = a_prev[j]
                    best = e_prev[i]
                    stop = i + 1
                    for q in reversed(path):
                        v = e_prev[q]
                        if v > best:
                            best = v
                        else:
                            e_prev[q] = best
                        a_prev[q] = stop
                    e[pos] = best
                P[b] = i + 1
        else:
            rmq = SparseTableMax(e_prev)
            for i in range(m):
                row = a_prev[i]
                b = col[row - 1]
                pos = C[b]
                C[b] = pos + 1
                a[pos] = row
                p = P[b]
                if p == 0:
                    e[pos] = ns
                else:
                    e[pos] = rmq.query(p, i + 1)
                P[b] = i + 1

        for x in e:
            t[x - 1] += 1

        # drop classes of s that no longer occur, merging their u minima
        # into the next surviving class, and fold in the newly final M(k - L)
        kl = k - L
        if kl >= 1:
            m_kl = ring[kl % L]
        else:
            m_kl = sentinel
        uv[ns] = sentinel
        up[ns] = 0
        tmp = a_prev
        jj = 0
        for i in range(ns):
            vi = uv[i]
            if vi < uv[jj] or (vi == uv[jj] and up[i] < up[jj] and vi != sentinel):
                uv[jj] = vi
                up[jj] = up[i]
            if t[i]:
                tmp[i] = jj + 1
                sj = s[i]
                s[jj] = sj
                t[jj] = t[i]
                uv[jj + 1] = uv[i + 1]
                up[jj + 1] = up[i + 1]
                if sj - 1 > kl and (jj == 0 or s[jj - 1] - 1 <= kl):
                    if m_kl < uv[jj] or (m_kl == uv[jj] and kl < up[jj] and m_kl != sentinel):
                        uv[jj] = m_kl
                        up[jj] = kl
                jj += 1
        r = jj
        for i in range(m):
            e[i] = tmp[e[i] - 1]

        self._a, self._a_prev = a, a_prev
        self._e, self._e_prev = e, e_prev
        self._r = r
        self.k = k

        # evaluate the recurrence from the class sums and minima
        if k < L:
            mk, bt = sentinel, 0
        elif k < 2 * L:
            mk = self.prefix_cardinality()
            bt = 0
        else:
            mk = sentinel + 1
            bj = 0
            suffix = 0
            for j in range(r - 1, -1, -1):
                suffix += t[j]
                cand = uv[j] if uv[j] > suffix else suffix
                if cand <= mk:
                    mk = cand
                    bj = j
            bt = up[bj]
        ring[k % L] = mk
        return mk, bt


@dataclass(frozen=True)
class StreamResult:
    """Outcome of a full streaming run.

    ``bt`` has exactly ``n`` entries; ``bt[k - 1]`` belongs to column ``k``.
    """

    M_n: int
    bt: array
    n: int
    m: int
    min_length: int
    sentinel: int
    working_slots: int

    @property
    def feasible(self) -> bool:
        return self.M_n != self.sentinel


def run_streaming(
    source: Iterable[Sequence[int]],
    m: int,
    n: int,
    min_length: int,
    mode: str = "jump",
    sigma: Optional[int] = None,
    allow_infeasible: bool = False,
) -> StreamResult:
    """Feed ``n`` columns from ``source`` through a :class:`StreamingSegmenter`.

    Only the segmenter state and the length-``n`` backtrack array are kept.
    Raises :class:`InfeasibleLength` when ``n < L`` unless ``allow_infeasible``
    is set, in which case the sentinel is returned as ``M_n``.
    """
    seg = StreamingSegmenter(m, min_length, sigma=sigma, mode=mode)
    bt = array("q", bytes(8 * n))
    mk = seg.sentinel
    it = iter(source)
    for k in range(n):
        try:
            col = next(it)
        except StopIteration:
            raise SourceExhausted(f"column source ended after {k} of {n} columns") from None
        mk, bt[k] = seg.step(col)
    result = StreamResult(
        M_n=mk, bt=bt, n=n, m=m, min_length=min_length,
        sentinel=seg.sentinel, working_slots=seg.slot_count(),
    )
    if not result.feasible and not allow_infeasible:
        raise InfeasibleLength(n, min_length, mk)
    return result


def backtrack_boundaries(bt: Sequence[int], n: int, min_length: int) -> Tuple[int, ...]:
    """Follow ``bt`` from column ``n`` back to 0 and return ``(0, i_2, ..., n)``."""
    if n < min_length:
        raise CorruptBacktrack(f"no segmentation of length {n} with L={min_length}")
    ends = [n]
    k = n
    for _ in range(n):
        j = bt[k - 1]
        if j != 0 and (j < min_length or k - j < min_length or j >= k):
            raise CorruptBacktrack(f"bt[{k}] = {j} violates L={min_length}")
        ends.append(j)
        if j == 0:
            return tuple(reversed(ends))
        k = j
    raise CorruptBacktrack("backtrack pointers do not reach 0")


def iter_segment_cardinalities(
    columns: Iterable[Sequence[int]], boundaries: Sequence[int], m: int
) -> Iterator[int]:
    """Distinct-row count per segment from one left-to-right pass over the columns.

    Row classes are refined column by column and reset at every boundary, so
    only O(m) state is kept.
    """
    it = iter(columns)
    for start, end in zip(boundaries, boundaries[1:]):
        ids = [0] * m
        for _ in range(end - start):
            col = next(it)
            names: dict = {}
            ids = [names.setdefault((x, c), len(names)) for x, c in zip(ids, col)]
        yield len(set(ids))


def backtrack(
    bt: Sequence[int], n: int, min_length: int, columns: Iterable[Sequence[int]], m: int
) -> Segmentation:
    """Reconstruct an optimal segmentation and measure each segment's cardinality."""
    bounds = backtrack_boundaries(bt, n, min_length)
    cards = tuple(iter_segment_cardinalities(columns, bounds, m))
    return Segmentation(boundaries=bounds, per_segment_card=cards, min_length=min_length)


def segment(matrix: RecombinantMatrix, min_length: int, mode: str = "jump") -> Tuple[Segmentation, StreamResult]:
    """Solve the minimum segmentation problem for an in-memory panel."""
    res = run_streaming(
        matrix.columns(), matrix.m, matrix.n, min_length, mode=mode, sigma=max(matrix.sigma, 1)
    )
    seg = backtrack(res.bt, matrix.n, min_length, matrix.columns(), matrix.m)
    return seg, res
