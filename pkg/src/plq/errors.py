"""Exception types shared across the package."""


class PlqError(Exception):
    """Base class for all errors raised by this package."""


class UnknownFamily(PlqError, ValueError):
    """Monoid family tag is not one of the supported presentations."""


class NotStabilized(PlqError):
    """The bounded congruence closure did not stabilize within the cap policy.

    Carries the largest cap that was attempted; retry with a larger
    explicit cap if the input is known to be small enough.
    """

    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap


class NotUnique(PlqError):
    """A unique J-minimal class was required but does not exist."""


class OccurrenceOutOfRange(PlqError, IndexError):
    """A word does not contain the requested occurrence of a letter."""


class ContentMismatch(PlqError, ValueError):
    """An evaluation's support does not match the object's content."""


class LengthMismatch(PlqError, ValueError):
    """A Dyck path's length does not match the letter set."""


class IndexOutOfRange(PlqError, IndexError):
    """A sequence was queried outside its defined range."""
