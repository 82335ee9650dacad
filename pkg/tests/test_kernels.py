import numpy as np
import pytest

from stagefft import (
    Algorithm,
    Direction,
    InvalidLengthError,
    PlanError,
    StageBuffer,
    build_twiddle_table,
    count_butterflies,
    digit_reversal_permutation,
    make_plan,
    naive_dft,
    radix2_stage,
    radix4_stage,
    radix8_stage,
    split_radix_transform,
)
from stagefft.planner import FftPlan

STAGE = {2: radix2_stage, 4: radix4_stage, 8: radix8_stage}


def run_pipeline(x, stages, direction=Direction.FORWARD):
    """Digit-reverse, then fold the radix stages left to right."""
    x = np.asarray(x, dtype=np.complex64)
    n = x.shape[0]
    table = build_twiddle_table(n)
    buf = StageBuffer(x[digit_reversal_permutation(stages)], 1)
    for index, radix in enumerate(stages):
        buf = STAGE[radix](buf, table, index, direction)
    out = buf.data
    if direction is Direction.INVERSE:
        out = out / n
    return out


def rel_l2(a, b):
    return float(np.linalg.norm(a - b) / np.linalg.norm(b))


def test_radix2_single_butterfly():
    table = build_twiddle_table(2)
    out = radix2_stage(StageBuffer(np.array([1, 1], np.complex64), 1), table, 0)
    np.testing.assert_allclose(out.data, [2, 0], atol=1e-7)
    assert out.stride == 2

    out = radix2_stage(StageBuffer(np.array([1, 2], np.complex64), 1), table, 0)
    np.testing.assert_allclose(out.data, [3, -1], atol=1e-7)


def test_radix4_ramp():
    # A lone radix-4 stage is the full 4-point DFT (a single digit reverses
    # to itself).  DFT([0,1,2,3]) worked by hand: 6, -2+2i, -2, -2-2i.
    table = build_twiddle_table(4)
    out = radix4_stage(StageBuffer(np.arange(4, dtype=np.complex64), 1), table, 0)
    np.testing.assert_allclose(out.data, [6, -2 + 2j, -2, -2 - 2j], atol=1e-6)


def test_radix8_impulse_and_constant():
    table = build_twiddle_table(8)
    impulse = np.zeros(8, np.complex64)
    impulse[0] = 1.0
    out = radix8_stage(StageBuffer(impulse.copy(), 1), table, 0)
    np.testing.assert_allclose(out.data, np.ones(8), atol=1e-6)

    out = radix8_stage(StageBuffer(np.ones(8, np.complex64), 1), table, 0)
    expected = np.zeros(8, np.complex64)
    expected[0] = 8.0
    np.testing.assert_allclose(out.data, expected, atol=1e-6)


@pytest.mark.parametrize("stages", [[2, 2, 2], [8]])
def test_length8_pipelines_match_oracle(stages):
    x = np.arange(8, dtype=np.float64)
    assert rel_l2(run_pipeline(x, stages), naive_dft(x)) <= 1e-4


@pytest.mark.parametrize("stages", [[8, 2], [2, 8], [4, 4], [2, 2, 2, 2]])
def test_length16_pipelines_match_oracle(stages):
    rng = np.random.default_rng(16)
    x = (rng.uniform(-1, 1, 16) + 1j * rng.uniform(-1, 1, 16)).astype(np.complex64)
    assert rel_l2(run_pipeline(x, stages), naive_dft(x)) <= 1e-4


def test_inverse_pipeline_round_trip():
    rng = np.random.default_rng(5)
    x = (rng.uniform(-1, 1, 64) + 1j * rng.uniform(-1, 1, 64)).astype(np.complex64)
    spectrum = run_pipeline(x, [8, 8])
    back = run_pipeline(spectrum, [8, 8], Direction.INVERSE)
    assert rel_l2(back, x) <= 1e-4


def test_stage_rejects_bad_stride():
    table = build_twiddle_table(8)
    with pytest.raises(PlanError):
        radix8_stage(StageBuffer(np.ones(8, np.complex64), 2), table, 0)
    with pytest.raises(PlanError):
        radix2_stage(StageBuffer(np.ones(8, np.complex64), 3), table, 0)


def test_stage_rejects_mismatched_table():
    table = build_twiddle_table(16)
    with pytest.raises(PlanError):
        radix2_stage(StageBuffer(np.ones(8, np.complex64), 1), table, 0)


def test_stage_rejects_mismatched_out_buffer():
    table = build_twiddle_table(8)
    with pytest.raises(PlanError):
        radix2_stage(
            StageBuffer(np.ones(8, np.complex64), 1),
            table,
            0,
            out=np.empty(4, np.complex64),
        )


def test_stage_leaves_input_intact():
    table = build_twiddle_table(8)
    data = np.arange(8, dtype=np.complex64)
    snapshot = data.copy()
    radix4_stage(StageBuffer(data, 1), table, 0)
    assert np.array_equal(data, snapshot)


def test_split_radix_trivial_lengths():
    one = np.array([5 + 3j], np.complex64)
    np.testing.assert_array_equal(
        split_radix_transform(one, build_twiddle_table(1)), one
    )
    two = np.array([1 + 0j, 2 + 0j], np.complex64)
    np.testing.assert_allclose(
        split_radix_transform(two, build_twiddle_table(2)), [3, -1], atol=1e-7
    )


@pytest.mark.parametrize("n", [4, 8, 16, 64, 256, 2048])
def test_split_radix_matches_oracle(n):
    rng = np.random.default_rng(n + 1)
    x = (rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)).astype(np.complex64)
    out = split_radix_transform(x, build_twiddle_table(n))
    assert rel_l2(out, naive_dft(x)) <= 1e-4


def test_split_radix_inverse_normalizes():
    rng = np.random.default_rng(77)
    x = (rng.uniform(-1, 1, 32) + 1j * rng.uniform(-1, 1, 32)).astype(np.complex64)
    table = build_twiddle_table(32)
    back = split_radix_transform(
        split_radix_transform(x, table), table, Direction.INVERSE
    )
    assert rel_l2(back, x) <= 1e-4


def test_split_radix_verify_twiddles_mode():
    x = np.arange(64, dtype=np.float64)
    table = build_twiddle_table(64)
    checked = split_radix_transform(x, table, verify_twiddles=True)
    plain = split_radix_transform(x, table)
    np.testing.assert_array_equal(checked, plain)


def test_split_radix_rejects_bad_input():
    with pytest.raises(InvalidLengthError):
        split_radix_transform(np.ones(12, np.complex64), build_twiddle_table(16))
    with pytest.raises(PlanError):
        split_radix_transform(np.ones(8, np.complex64), build_twiddle_table(16))


def _plan_with_stages(n, stages):
    return make_plan(n, stages=stages)


def test_butterfly_counts_single_stage():
    # A lone radix-2 stage over two samples is one butterfly.  Lengths this
    # small sit below the engine gate, so assemble the plan directly.
    table = build_twiddle_table(2)
    plan = FftPlan(
        length=2,
        direction=Direction.FORWARD,
        algorithm=Algorithm.MIXED_RADIX,
        stages=(2,),
        permutation=np.arange(2),
        twiddles=table,
        scale=1.0,
        chunk=2,
    )
    assert count_butterflies(plan) == 1


@pytest.mark.parametrize("n", [8, 16, 64, 512, 2048])
def test_butterfly_counts_pure_radix2(n):
    bits = n.bit_length() - 1
    plan = make_plan(n, stages=[2] * bits)
    assert count_butterflies(plan) == (n // 2) * bits


@pytest.mark.parametrize("n", [8, 16, 64, 512, 2048])
def test_butterfly_counts_agree_across_algorithms(n):
    # Greedy mixed-radix and split-radix both land on (n/2)*log2(n)
    # two-input add/subtract pairs.
    bits = n.bit_length() - 1
    mixed = count_butterflies(make_plan(n))
    split = count_butterflies(make_plan(n, algorithm=Algorithm.SPLIT_RADIX))
    assert mixed == split == (n // 2) * bits
