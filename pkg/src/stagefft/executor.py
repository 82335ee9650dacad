"""Plan execution with separately timed dispatch and compute phases.

``execute`` is strict about its contract: the input signal is never written,
output always lands in fresh memory, and running the same plan on the same
input is bit-identical each time.  Scratch buffers are pooled per plan and
per thread, with fresh allocation as the fallback, so distinct transforms
sharing one plan may run concurrently.
"""

from __future__ import annotations

import time
from typing import NamedTuple

import numpy as np

from .errors import DomainError, ShapeError
from .kernels import StageBuffer, _split_radix, radix2_stage, radix4_stage, radix8_stage
from .planner import Algorithm, Direction, FftPlan
from .validation import COMPLEX_DTYPE

_RADIX_STAGE = {2: radix2_stage, 4: radix4_stage, 8: radix8_stage}

#: Scratch arrays kept per plan and thread; beyond this, buffers are dropped.
_POOL_LIMIT = 4


class TimedExecution(NamedTuple):
    output: np.ndarray
    dispatch_us: float
    compute_us: float


def _acquire(plan: FftPlan) -> np.ndarray:
    pool = getattr(plan._scratch, "free", None)
    if pool:
        return pool.pop()
    return np.empty(plan.length, dtype=COMPLEX_DTYPE)


def _release(plan: FftPlan, *buffers: np.ndarray) -> None:
    pool = getattr(plan._scratch, "free", None)
    if pool is None:
        pool = plan._scratch.free = []
    for buf in buffers:
        if len(pool) < _POOL_LIMIT:
            pool.append(buf)


def execute(plan: FftPlan, signal) -> np.ndarray:
    """Run ``plan`` on ``signal`` and return a fresh output array."""
    return execute_timed(plan, signal).output


def execute_timed(plan: FftPlan, signal) -> TimedExecution:
    """Run ``plan`` on ``signal``, timing dispatch and compute separately.

    Dispatch covers argument validation, scratch acquisition, and loading the
    permuted working copy; compute covers the butterfly stages plus the final
    normalization.  Both times are reported in microseconds.
    """
    t0 = time.perf_counter_ns()
    x = np.asarray(signal)
    if x.ndim != 1:
        raise ShapeError(f"signal must be one-dimensional, got shape {x.shape}")
    if x.shape[0] != plan.length:
        raise ShapeError(
            f"signal length {x.shape[0]} does not match plan length {plan.length}"
        )
    if x.dtype.kind not in "fciu":
        raise DomainError(f"signal has non-numeric dtype {x.dtype}")
    if not np.all(np.isfinite(x)):
        raise DomainError("signal contains NaN or Inf values")
    x = x.astype(COMPLEX_DTYPE, copy=False)
    work = _acquire(plan)
    spare = _acquire(plan)
    np.take(x, plan.permutation, out=work)
    t1 = time.perf_counter_ns()
    if plan.algorithm is Algorithm.SPLIT_RADIX:
        out = _split_radix(
            work, plan.twiddles.factors, plan.length, plan.direction, False
        )
        _release(plan, work, spare)
    else:
        buf = StageBuffer(work, 1)
        targets = (spare, work)  # stages ping-pong between the two scratch arrays
        for index, radix in enumerate(plan.stages):
            buf = _RADIX_STAGE[radix](
                buf, plan.twiddles, index, plan.direction, out=targets[index % 2]
            )
        out = buf.data.copy()
        _release(plan, work, spare)
    if plan.scale != 1.0:
        out *= plan.scale
    t2 = time.perf_counter_ns()
    return TimedExecution(out, (t1 - t0) / 1000.0, (t2 - t1) / 1000.0)
