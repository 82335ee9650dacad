"""Direct-summation reference DFT.

This is the ground truth the fast paths are verified against: an O(n^2)
matrix-vector product that accumulates every output bin in double precision
and rounds to single exactly once.  It works for any positive length, not
just powers of two, and never shares code with the staged kernels.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidLengthError
from .planner import Direction
from .validation import COMPLEX_DTYPE, as_signal


def dft_matrix(n: int, direction: Direction = Direction.FORWARD) -> np.ndarray:
    """The full n-by-n Fourier matrix in double precision.

    Entry (k, m) is ``exp(sign * 2*pi*i * k*m / n)`` with sign -1 forward and
    +1 inverse.  The integer product ``k*m`` is reduced mod n before the
    complex exponential so large lengths lose no phase accuracy.
    """
    if n < 1:
        raise InvalidLengthError(f"transform length must be >= 1, got {n}")
    direction = Direction(direction)
    k = np.arange(n, dtype=np.int64)
    sign = 2.0j if direction is Direction.INVERSE else -2.0j
    return np.exp((sign * np.pi / n) * (np.outer(k, k) % n))


def naive_dft(signal, direction: Direction = Direction.FORWARD) -> np.ndarray:
    """Transform ``signal`` by direct summation.

    forward:  X[k] = sum_m x[m] * exp(-2*pi*i*k*m/n)
    inverse:  x[k] = (1/n) * sum_m X[m] * exp(+2*pi*i*k*m/n)

    Input of any positive length is accepted.  Accumulation happens in
    complex128; the result is rounded to complex64 at the end.  The input
    array is never modified.
    """
    x = as_signal(signal)
    direction = Direction(direction)
    n = x.shape[0]
    out = dft_matrix(n, direction) @ x.astype(np.complex128)
    if direction is Direction.INVERSE:
        out /= n
    return out.astype(COMPLEX_DTYPE)
