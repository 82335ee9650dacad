"""Plan construction: stage factorization, digit-reversal permutations, and
the immutable execution recipe consumed by the kernels.

All host-side cost (factorizing, building the input permutation, tabulating
twiddles) is paid once in :func:`make_plan`; executing a plan does no
planning work.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import InvalidLengthError, PlanError, UnsupportedLengthError
from .numerics import TwiddleTable, build_twiddle_table, is_power_of_two

ENGINE_MIN_LENGTH = 8
ENGINE_MAX_LENGTH = 2048
SUPPORTED_RADICES = (2, 4, 8)
#: Transform lengths the fast paths accept: 2**3 .. 2**11.
SUPPORTED_LENGTHS = tuple(2**p for p in range(3, 12))


class Direction(Enum):
    FORWARD = "forward"
    INVERSE = "inverse"


class Algorithm(Enum):
    MIXED_RADIX = "mixed"
    SPLIT_RADIX = "split"


def factorize_stages(n: int) -> list[int]:
    """Factor ``n`` into the stage radices the pipeline will run, in order.

    Greedy largest-radix-first: emit 8 while the remainder divides by 8,
    then one final 4 or 2 if anything is left.  ``n`` must be a power of two
    within the engine's supported range.
    """
    if not is_power_of_two(n):
        raise InvalidLengthError(f"transform length must be a power of two, got {n}")
    if not ENGINE_MIN_LENGTH <= n <= ENGINE_MAX_LENGTH:
        raise UnsupportedLengthError(
            f"length {n} outside supported range "
            f"[{ENGINE_MIN_LENGTH}, {ENGINE_MAX_LENGTH}]"
        )
    stages = []
    remaining = n
    while remaining % 8 == 0:
        stages.append(8)
        remaining //= 8
    if remaining > 1:
        stages.append(remaining)  # remaining is 2 or 4 here
    return stages


def digit_reversal_permutation(stages) -> np.ndarray:
    """Input reordering for an iterative decimation-in-time pass over ``stages``.

    Returns ``perm`` such that the working buffer is loaded as
    ``work[p] = x[perm[p]]``.  Index ``p`` is read as mixed-radix digits with
    the *last* stage's radix most significant (the stage applied last
    decimates the input at the top level), and the digits are reversed to
    form the source index.  For an all-radix-2 stage list this is classical
    bit reversal.
    """
    stages = [int(r) for r in stages]
    if not stages:
        raise PlanError("stage list is empty")
    for r in stages:
        if r not in SUPPORTED_RADICES:
            raise PlanError(f"unsupported radix {r}; expected one of {SUPPORTED_RADICES}")
    n = math.prod(stages)
    perm = np.empty(n, dtype=np.intp)
    for p in range(n):
        src, mult, rem, weight = 0, 1, p, n
        for r in reversed(stages):
            weight //= r
            digit, rem = divmod(rem, weight)
            src += digit * mult
            mult *= r
        perm[p] = src
    perm.setflags(write=False)
    return perm


@dataclass(frozen=True)
class FftPlan:
    """Immutable recipe for one transform length, direction, and algorithm.

    ``stages`` multiplies out to ``length``; ``permutation`` is the input
    reordering (identity for split-radix plans, whose recursion schedules
    itself); ``scale`` is the normalization applied after the last stage
    (1 forward, 1/length inverse).  ``chunk`` is a dispatch-granularity hint
    reserved for batched execution; the current engine runs whole transforms,
    so it always equals ``length``.

    Plans compare equal when built from equal arguments; the derived arrays
    are deterministic functions of those arguments.
    """

    length: int
    direction: Direction
    algorithm: Algorithm
    stages: tuple[int, ...]
    permutation: np.ndarray
    twiddles: TwiddleTable
    scale: float
    chunk: int
    # Per-thread scratch pool used by the executor; no shared mutable state
    # crosses threads through a plan.
    _scratch: threading.local = field(
        init=False, repr=False, compare=False, default_factory=threading.local
    )

    def __eq__(self, other) -> bool:
        if not isinstance(other, FftPlan):
            return NotImplemented
        return (
            self.length == other.length
            and self.direction is other.direction
            and self.algorithm is other.algorithm
            and self.stages == other.stages
            and self.scale == other.scale
            and self.chunk == other.chunk
        )

    def __hash__(self) -> int:
        return hash(
            (self.length, self.direction, self.algorithm, self.stages, self.scale)
        )


def make_plan(
    length: int,
    direction: Direction = Direction.FORWARD,
    algorithm: Algorithm = Algorithm.MIXED_RADIX,
    *,
    stages=None,
) -> FftPlan:
    """Build the execution recipe for one transform shape.

    ``direction`` and ``algorithm`` accept the enum members or their string
    values.  ``stages`` optionally overrides the greedy factorization with an
    explicit radix list (useful for comparing equivalent pipelines); it must
    multiply out to ``length``.  Split-radix plans ignore the ordering of
    ``stages`` at execution time - the recursion schedules itself - and get
    an identity input permutation.
    """
    direction = Direction(direction)
    algorithm = Algorithm(algorithm)
    default_stages = factorize_stages(length)  # validates length
    if stages is None:
        stage_tuple = tuple(default_stages)
    else:
        stage_tuple = tuple(int(r) for r in stages)
        for r in stage_tuple:
            if r not in SUPPORTED_RADICES:
                raise PlanError(
                    f"unsupported radix {r}; expected one of {SUPPORTED_RADICES}"
                )
        if math.prod(stage_tuple) != length:
            raise PlanError(
                f"stages {stage_tuple} multiply to {math.prod(stage_tuple)}, "
                f"not {length}"
            )
    if algorithm is Algorithm.SPLIT_RADIX:
        permutation = np.arange(length, dtype=np.intp)
        permutation.setflags(write=False)
    else:
        permutation = digit_reversal_permutation(stage_tuple)
    twiddles = build_twiddle_table(length)
    scale = 1.0 / length if direction is Direction.INVERSE else 1.0
    return FftPlan(
        length=length,
        direction=direction,
        algorithm=algorithm,
        stages=stage_tuple,
        permutation=permutation,
        twiddles=twiddles,
        scale=scale,
        chunk=length,
    )
