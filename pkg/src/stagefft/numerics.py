"""Root-of-unity twiddle factors and their precomputed tables.

Samples and spectra are single-precision complex (``numpy.complex64``)
throughout the package.  Twiddle angles are evaluated in double precision
with the platform libm and rounded to single exactly once, so every consumer
of a table sees bit-identical factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidLengthError
from .validation import COMPLEX_DTYPE

#: Largest table length a plan may request.
TABLE_MAX_LENGTH = 4096


def is_power_of_two(n: int) -> bool:
    """True when ``n`` is a positive power of two."""
    return n > 0 and (n & (n - 1)) == 0


def twiddle(n: int, k: int) -> np.complex64:
    """Return ``exp(-2*pi*i*k/n)``, the k-th twiddle factor for length n.

    ``k`` may be any integer; it is reduced mod n.  The angle is computed in
    double precision and rounded once to single.
    """
    if n < 1:
        raise InvalidLengthError(f"twiddle length must be >= 1, got {n}")
    k %= n
    angle = -2.0 * math.pi * k / n
    return np.complex64(complex(math.cos(angle), math.sin(angle)))


@dataclass(frozen=True, eq=False)
class TwiddleTable:
    """All ``n`` twiddle factors for transforms of length ``n``.

    ``factors[k] == exp(-2*pi*i*k/n)`` as complex64; the array is read-only.
    """

    n: int
    factors: np.ndarray

    def __len__(self) -> int:
        return self.n


def build_twiddle_table(n: int) -> TwiddleTable:
    """Precompute the full-length twiddle table for a power-of-two ``n``.

    Accepts 1 <= n <= 4096; ``factors[0]`` is exactly ``1+0j``.
    """
    if not is_power_of_two(n):
        raise InvalidLengthError(f"table length must be a power of two, got {n}")
    if n > TABLE_MAX_LENGTH:
        raise InvalidLengthError(
            f"table length must be <= {TABLE_MAX_LENGTH}, got {n}"
        )
    k = np.arange(n, dtype=np.float64)
    angle = (-2.0 * np.pi / n) * k
    factors = (np.cos(angle) + 1j * np.sin(angle)).astype(COMPLEX_DTYPE)
    factors[0] = 1.0 + 0.0j
    factors.setflags(write=False)
    return TwiddleTable(n=n, factors=factors)
