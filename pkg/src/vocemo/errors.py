"""Exception hierarchy shared by the whole package.

The CLI maps these to exit codes: usage problems exit 2, data problems
exit 3, violated internal invariants exit 4.
"""


class VocemoError(Exception):
    """Base class for all package errors."""


class ParameterError(VocemoError):
    """An argument is outside its documented range."""


class DataError(VocemoError):
    """Input data violates a documented precondition or file format."""


class TooShortError(DataError):
    """Signal shorter than one analysis frame.

    Carries the minimum number of samples that would have been needed.
    """

    def __init__(self, msg: str, min_samples: int):
        super().__init__(msg)
        self.min_samples = min_samples


class DimensionError(DataError):
    """Matrix or vector has the wrong number of columns/entries."""


class SpeakerMismatchError(DataError):
    """Per-speaker context applied to a recording of another speaker."""


class MissingClassError(DataError):
    """Training set lacks at least one sample of some class."""


class CacheInvalidError(DataError):
    """Feature cache was produced by an incompatible pipeline/config."""


class InternalError(VocemoError):
    """An internal invariant failed; indicates a bug, not bad input."""
