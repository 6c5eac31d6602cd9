"""Exception hierarchy shared by all hamlie modules."""


class HamLieError(ValueError):
    """Base class for every error raised by the package."""


class DimensionError(HamLieError):
    """Operands live in ambient spaces of different size."""


class ArityError(HamLieError):
    """A tensor has the wrong number of slots for the operation."""


class SlotIndexError(HamLieError, IndexError):
    """A coordinate index p lies outside 1..n."""


class HomogeneityError(HamLieError):
    """An input is required to be homogeneous for the grading but is not."""


class ConstraintError(HamLieError):
    """A precondition stated as an algebraic identity does not hold.

    ``defect`` holds the nonzero element that should have vanished.
    """

    def __init__(self, message, defect=None):
        super().__init__(message)
        self.defect = defect


class ParseError(HamLieError):
    """Malformed JSON input. ``location`` is a JSON-pointer-like path."""

    def __init__(self, message, location=""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location
