"""Reading panels and writing results.

Three input formats are understood:

``rows``
    one recombinant per line; surrounding whitespace is stripped.
``fasta``
    ``>`` header lines followed by (possibly wrapped) sequence lines.
``colstream``
    the binary column-major ``FSEG1`` stream: the 5-byte magic ``FSEG1``, the
    row count as a little-endian u32, the column count as a little-endian
    u64, then one block of ``m`` bytes (already ranked symbols) per column.
    It can be consumed one column at a time.
"""

from __future__ import annotations

import struct
from pathlib import Path
from typing import BinaryIO, Iterable, Iterator, List, Sequence, TextIO, Union

from .errors import BadMagic, EmptyInput, InputError, Truncated
from .model import FounderSet, RecombinantMatrix, Segmentation, build_matrix, matrix_from_ranks

MAGIC = b"FSEG1"
HEADER = struct.Struct("<IQ")
FORMATS = ("auto", "fasta", "rows", "colstream")

PathLike = Union[str, Path]


def parse_rows(lines: Iterable[str]) -> List[str]:
    rows = [line.strip() for line in lines]
    while rows and not rows[-1]:
        rows.pop()
    while rows and not rows[0]:
        rows.pop(0)
    if any(not r for r in rows):
        raise InputError("blank line inside rows input")
    return rows


def parse_fasta(lines: Iterable[str]) -> List[str]:
    seqs: List[List[str]] = []
    for line in lines:
        line = line.strip()
        if not line:
            continue
        if line.startswith(">"):
            seqs.append([])
        elif not seqs:
            raise InputError("FASTA sequence data before the first header")
        else:
            seqs[-1].append(line)
    return ["".join(parts) for parts in seqs]


def sniff_format(path: PathLike) -> str:
    with open(path, "rb") as fh:
        head = fh.read(len(MAGIC))
        if head == MAGIC:
            return "colstream"
        fh.seek(0)
        for raw in fh:
            stripped = raw.strip()
            if stripped:
                return "fasta" if stripped.startswith(b">") else "rows"
    return "rows"


def read_rows(path: PathLike, fmt: str = "auto") -> RecombinantMatrix:
    """Load a whole panel into memory; every format is accepted."""
    if fmt == "auto":
        fmt = sniff_format(path)
    if fmt == "colstream":
        with ColumnStream(path) as stream:
            if stream.n == 0:
                return RecombinantMatrix(rows=tuple(b"" for _ in range(stream.m)), symbols=())
            cols = list(stream)
        return matrix_from_ranks([bytes(r) for r in zip(*cols)])
    with open(path, encoding="ascii") as fh:
        text = fh.read().splitlines()
    rows = parse_fasta(text) if fmt == "fasta" else parse_rows(text)
    if not rows:
        raise EmptyInput(f"{path}: no sequences")
    return build_matrix(rows)


class ColumnStream:
    """Iterate the columns of an ``FSEG1`` file without materializing the panel."""

    def __init__(self, path: PathLike):
        self.path = path
        self._fh: BinaryIO = open(path, "rb")
        try:
            magic = self._fh.read(len(MAGIC))
            if magic != MAGIC:
                raise BadMagic(f"{path}: not an FSEG1 column stream")
            header = self._fh.read(HEADER.size)
            if len(header) != HEADER.size:
                raise Truncated(f"{path}: header is truncated")
            self.m, self.n = HEADER.unpack(header)
            if self.m == 0:
                raise EmptyInput(f"{path}: zero recombinants")
        except Exception:
            self._fh.close()
            raise

    def __iter__(self) -> Iterator[bytes]:
        m = self.m
        read = self._fh.read
        for k in range(self.n):
            block = read(m)
            if len(block) != m:
                raise Truncated(f"{self.path}: column {k + 1} of {self.n} is truncated")
            yield block

    def close(self) -> None:
        self._fh.close()

    def __enter__(self) -> "ColumnStream":
        return self

    def __exit__(self, *exc) -> None:
        self.close()


def read_colstream(path: PathLike) -> ColumnStream:
    return ColumnStream(path)


def write_colstream(path: PathLike, columns: Iterable[Sequence[int]], m: int, n: int) -> None:
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(HEADER.pack(m, n))
        written = 0
        for col in columns:
            block = bytes(col)
            if len(block) != m:
                raise ValueError(f"column {written + 1} has {len(block)} symbols, expected {m}")
            fh.write(block)
            written += 1
        if written != n:
            raise ValueError(f"wrote {written} columns, header announced {n}")


def write_matrix_colstream(path: PathLike, matrix: RecombinantMatrix) -> None:
    write_colstream(path, matrix.columns(), matrix.m, matrix.n)


def write_segmentation(out: TextIO, seg: Segmentation) -> None:
    for (start, end), card in zip(seg.segments(), seg.per_segment_card):
        out.write(f"{start}\t{end}\t{card}\n")
    out.write(f"K\t{seg.K}\n")


def write_founders_fasta(out: TextIO, founders: Sequence[str]) -> None:
    for f, seq in enumerate(founders, 1):
        out.write(f">founder_{f}\n{seq}\n")


def write_parses(out: TextIO, fs: FounderSet) -> None:
    """One ``recombinant, segment, founder`` line per pair, all 1-based."""
    for i, parse in enumerate(fs.parses, 1):
        for q, f in enumerate(parse, 1):
            out.write(f"{i}\t{q}\t{f + 1}\n")
