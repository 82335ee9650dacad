import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import Pipeline

from stagefft import FourierTransformer, execute, make_plan
from stagefft.errors import ShapeError, UnsupportedLengthError


def signals(rows, width, seed=0):
    rng = np.random.default_rng(seed)
    return (rng.uniform(-1, 1, (rows, width)) + 1j * rng.uniform(-1, 1, (rows, width))).astype(np.complex64)


def test_fit_transform_matches_execute():
    X = signals(5, 64)
    est = FourierTransformer()
    out = est.fit_transform(X)
    assert out.shape == (5, 64)
    plan = make_plan(64)
    for row_in, row_out in zip(X, out):
        assert np.array_equal(row_out, execute(plan, row_in))


def test_round_trip():
    X = signals(3, 128)
    est = FourierTransformer().fit(X)
    back = est.inverse_transform(est.transform(X))
    assert np.linalg.norm(back - X) / np.linalg.norm(X) <= 1e-4


def test_split_algorithm_parameter():
    X = signals(2, 32, seed=5)
    mixed = FourierTransformer(algorithm="mixed").fit_transform(X)
    split = FourierTransformer(algorithm="split").fit_transform(X)
    assert np.linalg.norm(mixed - split) / np.linalg.norm(mixed) <= 1e-4


def test_inverse_direction_parameter():
    X = signals(2, 16, seed=6)
    inv = FourierTransformer(direction="inverse").fit(X)
    fwd = FourierTransformer(direction="forward").fit(X)
    # inverse.transform followed by forward.transform is the identity
    back = fwd.transform(inv.transform(X))
    assert np.linalg.norm(back - X) / np.linalg.norm(X) <= 1e-4


def test_get_params_and_clone():
    est = FourierTransformer(direction="inverse", algorithm="split")
    assert est.get_params() == {"direction": "inverse", "algorithm": "split"}
    copy = clone(est)
    assert copy.get_params() == est.get_params()


def test_works_in_pipeline():
    X = signals(4, 8)
    pipe = Pipeline([("fft", FourierTransformer())])
    out = pipe.fit_transform(X)
    assert out.shape == (4, 8)


def test_unfitted_raises():
    with pytest.raises(NotFittedError):
        FourierTransformer().transform(signals(1, 8))


def test_wrong_width_raises():
    est = FourierTransformer().fit(signals(2, 64))
    with pytest.raises(ShapeError):
        est.transform(signals(2, 32))


def test_one_dimensional_input_raises():
    with pytest.raises(ShapeError):
        FourierTransformer().fit(np.ones(64, np.complex64))


def test_unsupported_width_raises():
    with pytest.raises(UnsupportedLengthError):
        FourierTransformer().fit(signals(2, 4))
