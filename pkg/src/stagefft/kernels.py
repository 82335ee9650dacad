"""Butterfly kernels: iterative radix-2/4/8 stages and the recursive
split-radix transform.

A stage consumes a :class:`StageBuffer` whose contiguous runs of ``stride``
samples each hold the spectrum of one decimated subsequence, combines
``radix`` of them at a time, and returns a new buffer with stride scaled by
the radix.  Stages read their input and write a separate output array; the
internal radix-point transforms multiply only by +-1, +-i and, for radix 8,
the eighth-root constants +-sqrt(2)/2 +- i*sqrt(2)/2.  Per-point twiddles
are gathered from the plan's shared table, conjugated for the inverse
direction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidLengthError, PlanError
from .numerics import TwiddleTable, is_power_of_two
from .planner import Algorithm, Direction, FftPlan
from .validation import as_signal

SQRT1_2 = float(np.sqrt(0.5))


@dataclass
class StageBuffer:
    """Working set of one pipeline pass.

    ``data`` is the flat complex64 working array; ``stride`` is the length of
    the sub-spectra entering the next stage (1 before the first stage, the
    full transform length after the last).
    """

    data: np.ndarray
    stride: int


def _twiddled_groups(
    buf: StageBuffer,
    twiddles: TwiddleTable,
    radix: int,
    stage_index: int,
    direction: Direction,
) -> np.ndarray:
    """Gather stage twiddles and apply them, returning a (blocks, radix, m) array.

    For sub-length m and group span M = radix*m, operand (q, j) of each group
    is scaled by ``table[(n/M) * q * j mod n]`` - the factor that aligns
    sub-spectrum q with the length-M spectrum being assembled.
    """
    n = buf.data.shape[0]
    m = buf.stride
    span = radix * m
    if m < 1 or n % span != 0:
        raise PlanError(
            f"stage {stage_index}: radix-{radix} stage needs stride dividing "
            f"{n}//{radix}, got stride {m} for buffer length {n}"
        )
    if twiddles.n != n:
        raise PlanError(
            f"stage {stage_index}: twiddle table length {twiddles.n} "
            f"does not match buffer length {n}"
        )
    q = np.arange(radix, dtype=np.int64).reshape(radix, 1)
    j = np.arange(m, dtype=np.int64).reshape(1, m)
    w = twiddles.factors[(n // span) * q * j % n]
    if direction is Direction.INVERSE:
        w = np.conj(w)
    return buf.data.reshape(n // span, radix, m) * w


def _out_for(buf: StageBuffer, shape, out: np.ndarray | None) -> np.ndarray:
    if out is None:
        return np.empty(buf.data.shape[0], dtype=buf.data.dtype).reshape(shape)
    if out.shape != buf.data.shape or out.dtype != buf.data.dtype:
        raise PlanError("output buffer must match the stage buffer's shape and dtype")
    return out.reshape(shape)


def radix2_stage(
    buf: StageBuffer,
    twiddles: TwiddleTable,
    stage_index: int,
    direction: Direction = Direction.FORWARD,
    out: np.ndarray | None = None,
) -> StageBuffer:
    """Combine pairs of length-``stride`` sub-spectra: (a, b) -> (a+wb, a-wb)."""
    v = _twiddled_groups(buf, twiddles, 2, stage_index, direction)
    dst = _out_for(buf, v.shape, out)
    np.add(v[:, 0], v[:, 1], out=dst[:, 0])
    np.subtract(v[:, 0], v[:, 1], out=dst[:, 1])
    return StageBuffer(dst.reshape(-1), buf.stride * 2)


def _dft4(v0, v1, v2, v3, rot):
    # 4-point DFT of already-twiddled operands; rot is -i forward, +i inverse.
    t0 = v0 + v2
    t1 = v0 - v2
    t2 = v1 + v3
    t3 = rot * (v1 - v3)
    return t0 + t2, t1 + t3, t0 - t2, t1 - t3


def radix4_stage(
    buf: StageBuffer,
    twiddles: TwiddleTable,
    stage_index: int,
    direction: Direction = Direction.FORWARD,
    out: np.ndarray | None = None,
) -> StageBuffer:
    """Combine quadruples of sub-spectra via 4-point DFTs (+-1, +-i only)."""
    v = _twiddled_groups(buf, twiddles, 4, stage_index, direction)
    rot = -1j if direction is Direction.FORWARD else 1j
    dst = _out_for(buf, v.shape, out)
    y0, y1, y2, y3 = _dft4(v[:, 0], v[:, 1], v[:, 2], v[:, 3], rot)
    dst[:, 0] = y0
    dst[:, 1] = y1
    dst[:, 2] = y2
    dst[:, 3] = y3
    return StageBuffer(dst.reshape(-1), buf.stride * 4)


def radix8_stage(
    buf: StageBuffer,
    twiddles: TwiddleTable,
    stage_index: int,
    direction: Direction = Direction.FORWARD,
    out: np.ndarray | None = None,
) -> StageBuffer:
    """Combine octuples of sub-spectra: two 4-point DFTs plus eighth roots."""
    v = _twiddled_groups(buf, twiddles, 8, stage_index, direction)
    rot = -1j if direction is Direction.FORWARD else 1j
    e0, e1, e2, e3 = _dft4(v[:, 0], v[:, 2], v[:, 4], v[:, 6], rot)
    o0, o1, o2, o3 = _dft4(v[:, 1], v[:, 3], v[:, 5], v[:, 7], rot)
    # Eighth roots: w8^1 = sqrt(2)/2 * (1 -+ i), w8^2 = -+i, w8^3 = sqrt(2)/2 * (-1 -+ i).
    o1 = (SQRT1_2 * (1 + rot)) * o1
    o2 = rot * o2
    o3 = (SQRT1_2 * (rot - 1)) * o3
    dst = _out_for(buf, v.shape, out)
    dst[:, 0] = e0 + o0
    dst[:, 4] = e0 - o0
    dst[:, 1] = e1 + o1
    dst[:, 5] = e1 - o1
    dst[:, 2] = e2 + o2
    dst[:, 6] = e2 - o2
    dst[:, 3] = e3 + o3
    dst[:, 7] = e3 - o3
    return StageBuffer(dst.reshape(-1), buf.stride * 8)


def _check_quarter_turn(factors: np.ndarray, n: int, idx1: np.ndarray) -> None:
    # Quarter-period identities consumed by the split recursion:
    #   w[k + n/4] == -i * w[k]        for the w^k branch
    #   w[3k + 3n/4 mod n] == +i * w[3k]  for the w^3k branch
    quarter = n // 4
    lhs1 = factors[idx1 + quarter]
    rhs1 = -1j * factors[idx1]
    assert np.allclose(lhs1, rhs1, atol=1e-6), "quarter-turn identity failed (w^k)"
    idx3 = (3 * idx1) % n
    lhs3 = factors[(idx3 + 3 * quarter) % n]
    rhs3 = 1j * factors[idx3]
    assert np.allclose(lhs3, rhs3, atol=1e-6), "quarter-turn identity failed (w^3k)"


def _split_radix(x, factors, n_full, direction, verify):
    length = x.shape[0]
    if length == 1:
        return x.copy()
    if length == 2:
        out = np.empty(2, dtype=x.dtype)
        out[0] = x[0] + x[1]
        out[1] = x[0] - x[1]
        return out
    # Split x into one half-length even transform and two quarter-length odd
    # transforms, then stitch with w^k and w^3k twiddles.
    quarter = length // 4
    even = _split_radix(x[0::2], factors, n_full, direction, verify)
    odd1 = _split_radix(x[1::4], factors, n_full, direction, verify)
    odd3 = _split_radix(x[3::4], factors, n_full, direction, verify)
    step = n_full // length
    k = np.arange(quarter, dtype=np.int64) * step
    if verify:
        _check_quarter_turn(factors, n_full, k)
    w1 = factors[k]
    w3 = factors[(3 * k) % n_full]
    if direction is Direction.INVERSE:
        w1 = np.conj(w1)
        w3 = np.conj(w3)
    rot = -1j if direction is Direction.FORWARD else 1j
    a = w1 * odd1
    b = w3 * odd3
    s = a + b
    d = rot * (a - b)
    out = np.empty(length, dtype=x.dtype)
    out[:quarter] = even[:quarter] + s
    out[quarter : 2 * quarter] = even[quarter:] + d
    out[2 * quarter : 3 * quarter] = even[:quarter] - s
    out[3 * quarter :] = even[quarter:] - d
    return out


def split_radix_transform(
    signal,
    twiddles: TwiddleTable,
    direction: Direction = Direction.FORWARD,
    *,
    verify_twiddles: bool = False,
) -> np.ndarray:
    """Whole-transform split-radix recursion.

    Halves the even indices and quarters the odd ones at every level, so the
    twiddle work per level stays on the odd quarter only.  The inverse
    direction conjugates twiddles and applies the 1/n normalization itself.
    ``verify_twiddles=True`` asserts the quarter-period rotation identities
    on every twiddle index the recursion consumes (a debugging aid).
    """
    x = as_signal(signal)
    n = x.shape[0]
    if not is_power_of_two(n):
        raise InvalidLengthError(f"transform length must be a power of two, got {n}")
    direction = Direction(direction)
    if twiddles.n != n:
        raise PlanError(
            f"twiddle table length {twiddles.n} does not match signal length {n}"
        )
    out = _split_radix(x, twiddles.factors, n, direction, verify_twiddles)
    if direction is Direction.INVERSE:
        out /= n
    return out


def _split_butterfly_count(length: int) -> int:
    # B(1) = 0, B(2) = 1, B(n) = B(n/2) + 2 B(n/4) + 3n/4 two-input pairs.
    if length <= 1:
        return 0
    if length == 2:
        return 1
    return (
        _split_butterfly_count(length // 2)
        + 2 * _split_butterfly_count(length // 4)
        + 3 * (length // 4)
    )


def count_butterflies(plan: FftPlan) -> int:
    """Number of two-input add/subtract butterfly pairs the plan executes.

    A radix-r stage over n samples performs (n/2) * log2(r) of them, so any
    full mixed-radix pipeline totals (n/2) * log2(n); the split-radix
    recursion is counted directly and lands on the same total.
    """
    n = plan.length
    if plan.algorithm is Algorithm.SPLIT_RADIX:
        return _split_butterfly_count(n)
    return sum((n // 2) * (r.bit_length() - 1) for r in plan.stages)
