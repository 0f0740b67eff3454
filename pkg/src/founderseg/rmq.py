"""Range-maximum queries over a static integer array using a sparse table."""

from typing import List, Sequence


class SparseTableMax:
    """
    Constant-time range-maximum queries over an immutable sequence.

    Preprocessing costs O(N log N) time and space, where N = len(data).
    """

    def __init__(self, data: Sequence[int]):
        level = list(data)
        self.table: List[List[int]] = [level]
        width = 1
        while 2 * width <= len(level):
            prev = self.table[-1]
            nxt = [
                a if a >= b else b
                for a, b in zip(prev, prev[width:])
            ]
            self.table.append(nxt)
            width *= 2

    def query(self, start: int, stop: int) -> int:
        """
        Maximum of ``data[start:stop]``.

        :param start: first index of the range (0-based)
        :param stop: index one past the last element; must exceed ``start``
        """
        depth = (stop - start).bit_length() - 1
        row = self.table[depth]
        left = row[start]
        right = row[stop - (1 << depth)]
        return left if left >= right else right

    def slot_count(self) -> int:
        return sum(len(row) for row in self.table)
