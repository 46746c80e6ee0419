"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`BraidError`,
so callers (the CLI in particular) can catch one base class.
"""


class BraidError(Exception):
    """Base class for all library errors."""


# -- graphs --------------------------------------------------------------

class OutOfRange(BraidError, ValueError):
    pass


class SelfLoop(BraidError, ValueError):
    pass


class RankTooSmall(BraidError, ValueError):
    pass


class NotTriangleFree(BraidError):
    pass


# -- words ---------------------------------------------------------------

class IntervalOutOfRange(BraidError, IndexError):
    pass


class NotReduced(BraidError, ValueError):
    pass


class NotAShadow(BraidError, ValueError):
    pass


class NotACommutation(BraidError, ValueError):
    pass


# -- classes and links ---------------------------------------------------

class CapExceeded(BraidError):
    """Enumeration grew past its cap; ``count`` is the size reached so far."""

    def __init__(self, message, count=None):
        super().__init__(message)
        self.count = count


class NotInClass(BraidError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotALink(BraidError, ValueError):
    pass


class NotFibonacci(BraidError, ValueError):
    pass


class SpecInvalid(BraidError, ValueError):
    pass


class NoSuchMember(BraidError):
    """A member whose existence is guaranteed by theory was not found."""


class InternalInvariantViolation(BraidError, AssertionError):
    pass


# -- graphs / cubes / oracles --------------------------------------------

class LabelCollision(BraidError, ValueError):
    pass


class DimensionTooLarge(BraidError, ValueError):
    pass


class Disconnected(BraidError, ValueError):
    pass


class NotPartialCube(BraidError):
    pass


class BoundExceeded(BraidError):
    pass


class TooLarge(BraidError, ValueError):
    pass
