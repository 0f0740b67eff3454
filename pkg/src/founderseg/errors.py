"""Exception types raised across the package."""


class FounderSegError(Exception):
    """Base class for all errors raised by founderseg."""


class InputError(FounderSegError):
    """Malformed or unusable input data."""


class EmptyInput(InputError):
    pass


class UnequalLengths(InputError):
    pass


class AlphabetTooLarge(InputError):
    pass


class SymbolOutOfRange(InputError):
    pass


class BadMagic(InputError):
    pass


class Truncated(InputError):
    pass


class SourceExhausted(InputError):
    """The column source yielded fewer columns than announced."""


class OutOfRange(FounderSegError, IndexError):
    pass


class InvalidL(FounderSegError, ValueError):
    pass


class InfeasibleLength(FounderSegError):
    """No segmentation exists because the panel is shorter than L.

    ``m_n`` holds the sentinel value reached by the recurrence.
    """

    def __init__(self, n: int, min_length: int, m_n: int):
        super().__init__(
            f"infeasible: panel length {n} is shorter than minimum segment length {min_length}"
        )
        self.n = n
        self.min_length = min_length
        self.m_n = m_n


class CorruptBacktrack(FounderSegError):
    pass


class SegmentationMismatch(FounderSegError, ValueError):
    pass


class TooLarge(FounderSegError, ValueError):
    pass
