"""Exception types raised across the package."""


class UnitRingError(Exception):
    """Base class for all errors raised by unitring."""


class NotInSubgroup(UnitRingError):
    pass


class InfiniteGroup(UnitRingError):
    pass


class InfiniteAbelianization(InfiniteGroup):
    pass


class NotAGroup(UnitRingError):
    pass


class RingValidationError(UnitRingError):
    pass


class TooLarge(UnitRingError):
    """An exhaustive oracle was asked to scan beyond its size guard."""


class NotPAnnihilated(UnitRingError):
    pass


class NotPRing(UnitRingError):
    pass


class NotSemisimple(UnitRingError):
    pass


class SplitFailure(UnitRingError):
    pass


class NotNilpotent(UnitRingError):
    pass


class NotDeterminantOne(UnitRingError):
    pass


class NotExact(UnitRingError):
    pass


class IndexOutOfRange(UnitRingError, IndexError):
    pass


class Exhausted(UnitRingError):
    """Coset enumeration exceeded its coset cap."""
