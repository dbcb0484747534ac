"""Exception types shared across the package."""


class HaefligerError(Exception):
    """Base class for every error raised by this package."""


class NotSquareError(HaefligerError):
    """Gram matrix input is not square."""


class NotSymmetricError(HaefligerError):
    """Gram matrix input is not symmetric."""


class SingularFormError(HaefligerError):
    """Operation requires a nonsingular form but det = 0."""


class DimensionMismatchError(HaefligerError):
    """Vector length does not match the lattice rank."""


class NonUnimodularError(HaefligerError):
    """Operation requires |det| = 1."""


class NotCharacteristicError(HaefligerError):
    """Vector fails the mod-2 characteristic condition.

    The attribute `index` carries the first basis index where
    <x, g_i> and <g_i, g_i> disagree mod 2.
    """

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class InternalCongruenceViolationError(HaefligerError):
    """sigma - e.e was not divisible by 8; unreachable for valid models."""


class ParityViolationError(HaefligerError):
    """3*sigma + cusps is odd, so the data is not realizable."""


class OddSmaleInvariantError(HaefligerError):
    """Compression requested for an odd Smale invariant."""


class SearchSpaceTooLargeError(HaefligerError):
    """Exhaustive enumeration refused; the search space exceeds the guard."""
