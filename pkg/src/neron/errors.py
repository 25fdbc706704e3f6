"""Exception types shared across the package."""


class NeronError(Exception):
    """Base class for all package errors."""


class PrecisionExhausted(NeronError):
    """A valuation or digit was needed beyond the certified precision.

    Carries the bound that was certified, so drivers can decide whether
    escalating the working precision can help.
    """

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class PrecisionCapReached(NeronError):
    """Precision escalation hit the hard cap."""


class TowerTooLarge(NeronError):
    """An unramified extension would exceed the configured tower cap."""


class NotSquarefree(NeronError):
    """The boundary polynomial has a repeated factor."""


class UnsupportedInput(NeronError):
    """Input outside the supported curve classes (e.g. genus >= 2)."""


class UnsupportedBoundary(NeronError):
    """A boundary point description outside the supported shapes."""


class Char2Unsupported(NeronError):
    """Residue characteristic 2 in the Laurent-series case (conics only)."""


class CenterNotSmooth(NeronError):
    """Dilatation center is an intersection point, not a smooth point."""


class DepthCapReached(NeronError):
    """Internal marker: the blow-up loop hit max_depth in truncated mode."""


class ParseError(NeronError):
    """Malformed job file."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field
