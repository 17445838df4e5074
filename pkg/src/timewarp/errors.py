"""Exception types raised across the library."""


class TimewarpError(Exception):
    """Base class for all library errors."""


class LengthMismatchError(TimewarpError, ValueError):
    """Two series that must have equal length do not."""


class TimestampMismatchError(TimewarpError, ValueError):
    """Two series that must share a timestamp grid do not."""


class DimensionMismatchError(TimewarpError, ValueError):
    """Sample value vectors have incompatible dimensions."""


class EmptySeriesError(TimewarpError, ValueError):
    """An operation that needs at least one sample received an empty series."""


class CorridorTooNarrowError(TimewarpError, ValueError):
    """The alignment corridor excludes every admissible path."""


class NotSymmetricError(TimewarpError, ValueError):
    """A matrix expected to be symmetric is not."""


class TooLargeError(TimewarpError, ValueError):
    """Input exceeds the size bound of an exhaustive-enumeration routine."""


class EmptyParamsError(TimewarpError, ValueError):
    """A kernel family is missing the cost parameters it requires."""


class GramBuildError(TimewarpError, RuntimeError):
    """A pairwise measure failed while filling a Gram matrix."""

    def __init__(self, i, j, cause):
        super().__init__(f"measure failed on item pair ({i}, {j}): {cause}")
        self.item_indices = (i, j)
        self.__cause__ = cause


class ParseError(TimewarpError, ValueError):
    """A data file could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class RaggedRowsError(ParseError):
    """Rows in one file have different lengths."""


class EmptyFileError(ParseError):
    """The file contains no data rows."""
