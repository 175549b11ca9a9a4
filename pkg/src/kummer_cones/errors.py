"""Exception hierarchy shared by all modules."""


class KummerConeError(Exception):
    """Base class for every error raised by this package."""


class TrivialPell(KummerConeError):
    """The Pell-type equation only has the solutions (0, +-1)."""


class IntegrityError(KummerConeError):
    """An exact-arithmetic identity that must hold did not."""


class NotOrthogonal(KummerConeError):
    """A Mukai vector was expected to lie in the orthogonal complement of v."""


class DegenerateWall(KummerConeError):
    """The vector is proportional to v, so it defines no wall."""


class VerticalWall(KummerConeError):
    """The wall is the delta axis and does not meet the positive cone."""


class Incomplete(KummerConeError):
    """A bounded enumeration could not see the wall it needed to see."""

    def __init__(self, message, needed=None, bound=None):
        super().__init__(message)
        self.needed = needed
        self.bound = bound


class UnsupportedNef(KummerConeError):
    """Nef cones are only computed for l = 3."""


class InternalError(KummerConeError):
    """A search exceeded a cap that theory says it never reaches."""
