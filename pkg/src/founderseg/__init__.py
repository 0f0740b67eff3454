"""Minimum segmentation for founder sequence reconstruction in linear time."""

__version__ = "0.1.0"

from .errors import FounderSegError, InfeasibleLength  # noqa: E402
from .founders import assemble_founders, extract_blocks, founders_for, validate_founders  # noqa: E402
from .model import FounderSet, RecombinantMatrix, Segmentation, build_matrix  # noqa: E402
from .segmenter import StreamingSegmenter, backtrack, run_streaming, segment  # noqa: E402

__all__ = [
    "FounderSegError",
    "FounderSet",
    "InfeasibleLength",
    "RecombinantMatrix",
    "Segmentation",
    "StreamingSegmenter",
    "assemble_founders",
    "backtrack",
    "build_matrix",
    "extract_blocks",
    "founders_for",
    "run_streaming",
    "segment",
    "validate_founders",
]
