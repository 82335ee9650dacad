"""Exception hierarchy shared across the library.

Everything derives from :class:`FftError` so callers can catch one type; the
length/shape/domain subclasses also derive from :class:`ValueError` to stay
friendly to generic code.
"""


class FftError(Exception):
    """Base class for all errors raised by this package."""


class InvalidLengthError(FftError, ValueError):
    """Length is empty, non-positive, or not a power of two where required."""


class UnsupportedLengthError(InvalidLengthError):
    """Length is valid in form but outside the engine's supported range."""


class PlanError(FftError, ValueError):
    """Stage list, radix, stride, or twiddle table inconsistent with the data."""


class ShapeError(FftError, ValueError):
    """Array arguments disagree in shape or dimensionality."""


class DomainError(FftError, ValueError):
    """Numeric argument outside the operation's domain (NaN/Inf, negative, ...)."""


class InsufficientDataError(FftError, ValueError):
    """Too few usable samples, records, or bins to compute the statistic."""
