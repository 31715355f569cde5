"""Exception types shared across the package."""


class SievelabError(Exception):
    """Base class for all sievelab errors."""


class DomainError(SievelabError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class RangeError(SievelabError, IndexError):
    """A request reaches past the indices covered by a sieve."""


class CapacityError(SievelabError, OverflowError):
    """A sieve bound is too large to represent."""


class ShapeError(SievelabError, ValueError):
    """Two segments of different lengths were combined."""


class UndefinedRatioError(SievelabError, ZeroDivisionError):
    """A ratio was requested whose denominator count is zero."""
