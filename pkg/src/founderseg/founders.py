"""Founder sequences from a segmentation.

Every segment contributes its distinct row substrings ("blocks"). Founder
``f`` is the concatenation, segment by segment, of the block placed in slot
``f``. Which block goes to which slot is free; the assignment here is a greedy
heuristic that tries to keep each recombinant on the same founder across a
boundary, so crossovers are avoided where that is cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .errors import SegmentationMismatch
from .model import FounderSet, RecombinantMatrix, Segmentation


@dataclass(frozen=True)
class SegmentBlocks:
    """Distinct substrings per segment and each recombinant's block index.

    ``blocks[q]`` lists the distinct substrings of segment ``q`` ordered by
    their reversal; ``membership[q][i]`` is the block used by row ``i``.
    """

    segmentation: Segmentation
    blocks: Tuple[Tuple[bytes, ...], ...]
    membership: Tuple[Tuple[int, ...], ...]

    def card(self, q: int) -> int:
        return len(self.blocks[q])

    def support(self, q: int) -> List[int]:
        counts = [0] * len(self.blocks[q])
        for b in self.membership[q]:
            counts[b] += 1
        return counts


def _check_segmentation(matrix: RecombinantMatrix, seg: Segmentation) -> None:
    b = seg.boundaries
    if len(b) < 2 or b[0] != 0 or b[-1] != matrix.n:
        raise SegmentationMismatch(f"boundaries {b} do not cover columns 1..{matrix.n}")
    if any(y <= x for x, y in zip(b, b[1:])):
        raise SegmentationMismatch(f"boundaries {b} are not strictly increasing")


def extract_blocks(matrix: RecombinantMatrix, seg: Segmentation) -> SegmentBlocks:
    _check_segmentation(matrix, seg)
    blocks = []
    membership = []
    for q, (start, end) in enumerate(seg.segments()):
        pieces = [row[start - 1 : end] for row in matrix.rows]
        distinct = sorted(set(pieces), key=lambda piece: piece[::-1])
        if q < len(seg.per_segment_card) and seg.per_segment_card[q] != len(distinct):
            raise SegmentationMismatch(
                f"segment {q + 1} has {len(distinct)} distinct blocks, "
                f"segmentation claims {seg.per_segment_card[q]}"
            )
        index = {piece: x for x, piece in enumerate(distinct)}
        blocks.append(tuple(distinct))
        membership.append(tuple(index[p] for p in pieces))
    return SegmentBlocks(segmentation=seg, blocks=tuple(blocks), membership=tuple(membership))


def _fill_slots(slot_block: List[int], support: Sequence[int]) -> None:
    """Give every empty slot a copy of the block used by the most recombinants."""
    top = max(range(len(support)), key=lambda b: (support[b], -b))
    for f, b in enumerate(slot_block):
        if b < 0:
            slot_block[f] = top


def _assign_slots(
    membership: Sequence[int], nblocks: int, prev_slot: Sequence[int], K: int
) -> List[int]:
    """Map blocks of one segment to founder slots, favouring unchanged slots.

    Candidate (block, slot) pairs are ranked by how many recombinants of the
    block sat in that slot in the previous segment; pairs are taken greedily,
    ties going to the lower slot and then the lower block.
    """
    overlap: Dict[Tuple[int, int], int] = {}
    for b, f in zip(membership, prev_slot):
        overlap[b, f] = overlap.get((b, f), 0) + 1
    slot_block = [-1] * K
    block_slot = [-1] * nblocks
    for (b, f), _ in sorted(overlap.items(), key=lambda kv: (-kv[1], kv[0][1], kv[0][0])):
        if block_slot[b] < 0 and slot_block[f] < 0:
            block_slot[b] = f
            slot_block[f] = b
    free = iter(f for f in range(K) if slot_block[f] < 0)
    for b in range(nblocks):
        if block_slot[b] < 0:
            f = next(free)
            block_slot[b] = f
            slot_block[f] = b
    return slot_block


def assemble_founders(blocks: SegmentBlocks, K: int) -> FounderSet:
    """Build ``K`` founders and a segment-level parse of every recombinant."""
    nseg = len(blocks.blocks)
    m = len(blocks.membership[0]) if nseg else 0
    if any(len(bl) > K for bl in blocks.blocks):
        raise ValueError(f"a segment has more than K={K} blocks")
    pieces: List[List[bytes]] = [[] for _ in range(K)]
    parses: List[List[int]] = [[] for _ in range(m)]
    prev_slot = [0] * m
    crossovers = 0
    for q in range(nseg):
        member = blocks.membership[q]
        nblocks = len(blocks.blocks[q])
        if q == 0:
            slot_block = list(range(nblocks)) + [-1] * (K - nblocks)
        else:
            slot_block = _assign_slots(member, nblocks, prev_slot, K)
        _fill_slots(slot_block, blocks.support(q))
        primary: Dict[int, int] = {}
        for f, b in enumerate(slot_block):
            primary.setdefault(b, f)
            pieces[f].append(blocks.blocks[q][b])
        for i, b in enumerate(member):
            if q and slot_block[prev_slot[i]] == b:
                f = prev_slot[i]
            else:
                f = primary[b]
                if q:
                    crossovers += f != prev_slot[i]
            parses[i].append(f)
            prev_slot[i] = f
    return FounderSet(
        founders=tuple(b"".join(p) for p in pieces),
        parses=tuple(tuple(p) for p in parses),
        segmentation=blocks.segmentation,
        crossover_count=crossovers,
    )


def validate_founders(matrix: RecombinantMatrix, fs: FounderSet) -> bool:
    """Check that every recombinant is spelled by its parse, position by position."""
    n = matrix.n
    if any(len(f) != n for f in fs.founders) or len(fs.parses) != matrix.m:
        return False
    nseg = len(fs.segmentation)
    for i, row in enumerate(matrix.rows):
        if len(fs.parses[i]) != nseg:
            return False
        path = fs.position_parse(i)
        if len(path) != n:
            return False
        for j in range(n):
            f = path[j]
            if not 0 <= f < fs.K or fs.founders[f][j] != row[j]:
                return False
    return True


def decode_founders(matrix: RecombinantMatrix, fs: FounderSet) -> List[str]:
    return ["".join(matrix.symbols[c] for c in f) for f in fs.founders]


def founders_for(matrix: RecombinantMatrix, seg: Segmentation) -> FounderSet:
    return assemble_founders(extract_blocks(matrix, seg), seg.K)
