class SplitbupError(Exception):
    """Base class for every error raised by the algebra and job layers."""


class ParseError(SplitbupError, ValueError):
    """Malformed element or polynomial text."""


class FieldMismatchError(SplitbupError, ValueError):
    """Operands belong to different field contexts."""


class NonSplitExponentError(SplitbupError, ValueError):
    """sigma** of this prime power does not split over the field."""


class DegreeCapExceeded(SplitbupError):
    """A brute-force computation would exceed the configured cap."""


class InvariantViolation(SplitbupError):
    """A self-check on a known identity failed."""
