"""Exception taxonomy shared by every module in the package.

All exceptions derive from :class:`SteinerKitError` so callers can catch one
base class at API boundaries (the CLI maps subclasses to exit codes).
"""


class SteinerKitError(Exception):
    """Base class for all package-specific errors."""


class NotATree(SteinerKitError):
    """Input fails a tree invariant (edge count, connectivity, simplicity)."""


class NotAGraph(SteinerKitError):
    """Input is not a simple connected graph."""


class BadVertex(SteinerKitError):
    """A vertex id is outside ``range(n)`` or duplicated where forbidden."""


class EmptySet(SteinerKitError):
    """A vertex set that must be non-empty is empty."""


class BadK(SteinerKitError):
    """A (k, k') request is outside the defined range for the operation."""


class BadSpec(SteinerKitError):
    """A family spec string or parameter set is malformed."""


class UnsupportedKind(SteinerKitError):
    """A family kind or bound name is not one of the supported tokens."""


class TooLarge(SteinerKitError):
    """A resource guard tripped; the exact computation was not attempted."""


class MalformedGraph6(SteinerKitError):
    """graph6 input is invalid; ``offset`` is the first offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnknownSuite(SteinerKitError):
    """A verification suite name is not registered."""


class PreconditionError(SteinerKitError):
    """An operation's stated precondition does not hold for the input."""
