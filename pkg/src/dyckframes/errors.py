"""Exception types shared across the package."""


class DyckFramesError(Exception):
    """Base class for all library-specific errors."""


class MalformedPath(DyckFramesError, ValueError):
    """Text does not describe a valid lattice path."""


class NotDyck(DyckFramesError, ValueError):
    """The operation needs a path without horizontal steps."""


class ResourceLimit(DyckFramesError):
    """An enumeration would exceed its configured size cap."""


class Underflow(DyckFramesError, ValueError):
    """A sequence operation would produce a negative entry."""


class NotLifted(DyckFramesError, ValueError):
    """The sequence has no leading 2 to remove."""


class NotAdmissible(DyckFramesError, ValueError):
    """The sequence is not the frame of any Dyck path."""
