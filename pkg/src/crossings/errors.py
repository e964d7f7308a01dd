"""Exception hierarchy shared by all modules.

The CLI maps ``ValidationError`` subclasses to exit code 3 and
``CapabilityError`` subclasses to exit code 4.
"""


class CrossingsError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(CrossingsError, ValueError):
    pass


class SelfLoopError(ValidationError):
    pass


class DuplicateEdgeError(ValidationError):
    pass


class VertexRangeError(ValidationError):
    pass


class ParseError(ValidationError):
    pass


class CapabilityError(CrossingsError):
    pass


class CapExceededError(CapabilityError):
    pass


class BoundUndefinedError(CapabilityError):
    """Raised when the Kolmogorov bound has zero variance or no 2-matchings."""


class BoundInapplicableError(CapabilityError):
    """Raised when the bound's radicand is negative; never clamped."""


class DegenerateVarianceError(CapabilityError):
    pass


class NoCouplingError(CapabilityError):
    """The graph has no 2-matching, so the size-bias coupling is undefined."""
