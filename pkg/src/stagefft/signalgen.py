"""Deterministic test-signal generation shared by the bench, verification,
and CLI layers."""

from __future__ import annotations

import numpy as np

from .errors import InvalidLengthError
from .validation import COMPLEX_DTYPE

KINDS = ("ramp", "impulse", "constant", "random")


def generate(kind: str, n: int, seed: int = 0) -> np.ndarray:
    """Generate a length-``n`` complex64 test signal.

    ramp      sample k is (k, 0) - the linear function f(x) = x
    impulse   (1, 0) at index 0, zero elsewhere
    constant  (1, 0) everywhere
    random    re and im drawn uniformly from [-1, 1] using numpy's Philox
              counter-based generator keyed by ``seed``, so streams are
              reproducible across platforms and independent across seeds

    ``seed`` only affects the random kind.
    """
    if n < 1:
        raise InvalidLengthError(f"signal length must be >= 1, got {n}")
    kind = str(kind).lower()
    if kind == "ramp":
        return np.arange(n, dtype=np.float64).astype(COMPLEX_DTYPE)
    if kind == "impulse":
        out = np.zeros(n, dtype=COMPLEX_DTYPE)
        out[0] = 1.0
        return out
    if kind == "constant":
        return np.ones(n, dtype=COMPLEX_DTYPE)
    if kind == "random":
        rng = np.random.Generator(np.random.Philox(key=seed))
        parts = rng.uniform(-1.0, 1.0, size=(2, n))
        return (parts[0] + 1j * parts[1]).astype(COMPLEX_DTYPE)
    raise ValueError(f"unknown signal kind {kind!r}; expected one of {KINDS}")
