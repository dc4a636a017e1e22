"""Exception hierarchy shared by the library and the command line tool."""


class LRError(Exception):
    """Base class for all errors raised by :mod:`lrrule`."""

    category = "error"


class ParseError(LRError, ValueError):
    category = "parse"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class PreconditionError(LRError, ValueError):
    category = "precondition"


class ShapeMismatchError(PreconditionError):
    pass


class IncompatibleWeightError(PreconditionError):
    pass


class NotSemistandardError(PreconditionError):
    def __init__(self, message, cell=None):
        super().__init__(message)
        self.cell = cell


class DominanceError(PreconditionError):
    """The tableau has no companion over the requested inner partition.

    ``cell`` is the first cell (in row-major, right-to-left traversal) at
    which the running weight stopped being a partition.
    """

    def __init__(self, message, cell=None):
        super().__init__(message)
        self.cell = cell


class ResourceError(LRError, RuntimeError):
    category = "resource"
