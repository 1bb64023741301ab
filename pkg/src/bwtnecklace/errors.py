"""Exception hierarchy shared by every module.

Each class name doubles as the machine-readable error ``kind`` reported by
the command line front end.
"""


class NecklaceError(Exception):
    """Base class for all domain errors raised by the library."""

    @property
    def kind(self) -> str:
        return type(self).__name__


class DigitOutOfRange(NecklaceError, ValueError):
    pass


class BoundExceeded(NecklaceError):
    """An exhaustive search would exceed the configured enumeration bound."""


class NotACycle(NecklaceError, ValueError):
    pass


class NotABwtImage(NecklaceError, ValueError):
    pass


class NotBalanced(NecklaceError, ValueError):
    pass


class DivisibilityError(NecklaceError, ValueError):
    pass


class DimensionMismatch(NecklaceError, ValueError):
    pass


class ModulusMismatch(NecklaceError, ValueError):
    pass


class NotPrime(NecklaceError, ValueError):
    pass


class NotInvertible(NecklaceError, ValueError):
    pass


class NotStronglyConnected(NecklaceError):
    """A Laplacian had more than one zero invariant factor."""
