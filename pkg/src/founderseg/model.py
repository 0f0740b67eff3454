"""Input panel representation and the result types shared by the other modules.

Recombinants are stored row-major as ``bytes`` objects holding dense symbol
ranks, so a panel with ``m`` rows and ``n`` columns costs ``m * n`` bytes.
Ranks are assigned globally in first-occurrence order (row by row, left to
right).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import AlphabetTooLarge, EmptyInput, OutOfRange, UnequalLengths

MAX_SIGMA = 256


@dataclass(frozen=True)
class RecombinantMatrix:
    """An ``m x n`` panel of equal-length haplotypes over ranks ``0..sigma-1``."""

    rows: Tuple[bytes, ...]
    symbols: Tuple[str, ...]

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def sigma(self) -> int:
        return len(self.symbols)

    @property
    def symbol_table(self) -> Dict[str, int]:
        """Mapping from input character to rank; ``symbols`` is the inverse."""
        return {c: r for r, c in enumerate(self.symbols)}

    def column(self, k: int) -> bytes:
        """Symbols ``R_1[k], ..., R_m[k]`` for the 1-based column ``k``."""
        if not 1 <= k <= self.n:
            raise OutOfRange(f"column {k} outside [1, {self.n}]")
        return bytes(row[k - 1] for row in self.rows)

    def columns(self) -> Iterator[bytes]:
        """Yield every column left to right."""
        for col in zip(*self.rows):
            yield bytes(col)

    def decode_row(self, i: int) -> str:
        return "".join(self.symbols[c] for c in self.rows[i])

    def decode(self) -> List[str]:
        return [self.decode_row(i) for i in range(self.m)]

    def substring(self, i: int, start: int, end: int) -> bytes:
        """Ranks of ``R_i[start..end]`` with 0-based ``i`` and 1-based inclusive columns."""
        return self.rows[i][start - 1 : end]


def build_matrix(rows: Sequence[str], alphabet: Optional[Sequence[str]] = None) -> RecombinantMatrix:
    """Remap raw symbol strings to dense ranks and validate the panel shape.

    Ranks follow first occurrence unless ``alphabet`` fixes the order of some
    (or all) symbols up front; unlisted symbols are appended as they appear.

    >>> mat = build_matrix(["baaaa", "baaab", "babab"])
    >>> (mat.m, mat.n, mat.sigma, mat.symbols)
    (3, 5, 2, ('b', 'a'))
    >>> build_matrix(["baaaa", "baaab", "babab"], alphabet="ab").symbols
    ('a', 'b')
    """
    if not rows:
        raise EmptyInput("no recombinants given")
    n = len(rows[0])
    table: Dict[str, int] = {}
    for ch in alphabet or ():
        table.setdefault(ch, len(table))
    if len(table) > MAX_SIGMA:
        raise AlphabetTooLarge(f"more than {MAX_SIGMA} distinct symbols in alphabet")
    encoded = []
    for idx, row in enumerate(rows):
        if len(row) != n:
            raise UnequalLengths(
                f"row {idx + 1} has length {len(row)}, expected {n}"
            )
        for ch in row:
            if ch not in table:
                if len(table) == MAX_SIGMA:
                    raise AlphabetTooLarge(
                        f"more than {MAX_SIGMA} distinct symbols in input"
                    )
                table[ch] = len(table)
        encoded.append(bytes(table[ch] for ch in row))
    return RecombinantMatrix(rows=tuple(encoded), symbols=tuple(table))


def matrix_from_ranks(rows: Sequence[Sequence[int]], sigma: int = 0) -> RecombinantMatrix:
    """Wrap already-ranked rows; symbols are rendered as their decimal rank.

    Used for panels read from the binary column stream and for random panels.
    """
    if not rows:
        raise EmptyInput("no recombinants given")
    n = len(rows[0])
    top = 0
    packed = []
    for idx, row in enumerate(rows):
        if len(row) != n:
            raise UnequalLengths(f"row {idx + 1} has length {len(row)}, expected {n}")
        b = bytes(row)
        if b:
            top = max(top, max(b) + 1)
        packed.append(b)
    sigma = max(sigma, top)
    return RecombinantMatrix(rows=tuple(packed), symbols=tuple(_rank_symbol(r) for r in range(sigma)))


def _rank_symbol(r: int) -> str:
    # single characters keep decoded rows aligned with columns
    return "0123456789"[r] if r < 10 else chr(0x100 + r)


@dataclass(frozen=True)
class Segmentation:
    """Segment right ends ``0 = i_1 < ... < i_r = n`` with per-segment cardinalities.

    ``boundaries`` includes the leading 0, so segment ``q`` covers the 1-based
    columns ``boundaries[q] + 1 .. boundaries[q + 1]``.
    """

    boundaries: Tuple[int, ...]
    per_segment_card: Tuple[int, ...]
    min_length: int

    @property
    def K(self) -> int:
        return max(self.per_segment_card)

    @property
    def n(self) -> int:
        return self.boundaries[-1]

    def segments(self) -> List[Tuple[int, int]]:
        """Inclusive 1-based ``(start, end)`` column ranges."""
        b = self.boundaries
        return [(b[q] + 1, b[q + 1]) for q in range(len(b) - 1)]

    def __len__(self) -> int:
        return len(self.boundaries) - 1


@dataclass(frozen=True)
class FounderSet:
    """Founder strings (as ranks) together with a parse of every recombinant.

    ``parses[i][q]`` is the 0-based founder index used by recombinant ``i`` in
    segment ``q``; parses are constant within segments by construction.
    """

    founders: Tuple[bytes, ...]
    parses: Tuple[Tuple[int, ...], ...]
    segmentation: Segmentation
    crossover_count: int = field(default=0)

    @property
    def K(self) -> int:
        return len(self.founders)

    def position_parse(self, i: int) -> List[int]:
        """Expand the segment-level parse of recombinant ``i`` to one founder index per column."""
        out: List[int] = []
        for (start, end), f in zip(self.segmentation.segments(), self.parses[i]):
            out.extend([f] * (end - start + 1))
        return out
