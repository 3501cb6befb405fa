class HomalgError(Exception):
    """Base class for all errors raised by this package."""


class StructureError(HomalgError):
    """A structure violates one of its declared invariants (degree law,
    duplicate labels, degenerate pairing, ...)."""


class CompositionError(HomalgError):
    """Operations were combined with incompatible shapes."""


class DocumentError(HomalgError):
    """A structure document failed to parse or resolve."""

    def __init__(self, message, location=None):
        super().__init__(message if location is None else f"{location}: {message}")
        self.location = location


class ConstructionError(HomalgError):
    """A construction was refused because a precondition failed.

    Carries the blocking residual report when one exists.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
