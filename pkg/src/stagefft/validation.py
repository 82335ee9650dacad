"""Input validation helpers shared by the library and the estimator API."""

from __future__ import annotations

import numpy as np

from .errors import DomainError, InvalidLengthError, ShapeError

#: Canonical sample dtype: single-precision complex throughout the engine.
COMPLEX_DTYPE = np.complex64


def as_signal(values, *, name: str = "signal") -> np.ndarray:
    """Coerce ``values`` to a 1-D complex64 array.

    Rejects empty and non-finite input.  Already-complex64 arrays are passed
    through without copying, so callers must treat the result as read-only.
    """
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise ShapeError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise InvalidLengthError(f"{name} is empty")
    if arr.dtype.kind not in "fciu":
        raise DomainError(f"{name} has non-numeric dtype {arr.dtype}")
    arr = arr.astype(COMPLEX_DTYPE, copy=False)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} contains NaN or Inf values")
    return arr


def check_same_length(a: np.ndarray, b: np.ndarray, *, names=("lhs", "rhs")) -> None:
    """Raise :class:`ShapeError` unless the two 1-D arrays agree in length."""
    if a.shape[0] != b.shape[0]:
        raise ShapeError(
            f"{names[0]} and {names[1]} lengths differ: {a.shape[0]} vs {b.shape[0]}"
        )


def check_signal_matrix(X, *, name: str = "X") -> np.ndarray:
    """Validate a 2-D batch of row signals and cast it to complex64."""
    arr = np.asarray(X)
    if arr.ndim == 1:
        raise ShapeError(
            f"{name} must be 2-D with one signal per row; "
            "reshape a single signal with X.reshape(1, -1)"
        )
    if arr.ndim != 2:
        raise ShapeError(f"{name} must be 2-D, got shape {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise InvalidLengthError(f"{name} is empty, shape {arr.shape}")
    if arr.dtype.kind not in "fciu":
        raise DomainError(f"{name} has non-numeric dtype {arr.dtype}")
    arr = arr.astype(COMPLEX_DTYPE, copy=False)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} contains NaN or Inf values")
    return arr
