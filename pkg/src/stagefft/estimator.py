"""Scikit-learn style wrapper so planned transforms compose with pipelines.

Rows of ``X`` are fixed-length signals; fitting builds the plan for the row
width, transforming executes it row by row.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .errors import ShapeError
from .executor import execute
from .planner import Algorithm, Direction, make_plan
from .validation import check_signal_matrix


class FourierTransformer(TransformerMixin, BaseEstimator):
    """Planned FFT over the rows of a 2-D array.

    Parameters
    ----------
    direction : {"forward", "inverse"}, default="forward"
        Transform direction applied by :meth:`transform`;
        :meth:`inverse_transform` always applies the opposite.
    algorithm : {"mixed", "split"}, default="mixed"
        "mixed" runs the iterative radix-2/4/8 pipeline, "split" the
        recursive split-radix transform.

    The transform length is the number of columns seen at fit time and must
    be a power of two between 8 and 2048.

    Examples
    --------
    >>> import numpy as np
    >>> from stagefft import FourierTransformer
    >>> X = np.arange(16, dtype=np.float64).reshape(2, 8)
    >>> spectra = FourierTransformer().fit_transform(X)
    >>> spectra.shape
    (2, 8)
    """

    def __init__(self, direction: str = "forward", algorithm: str = "mixed"):
        self.direction = direction
        self.algorithm = algorithm

    def fit(self, X, y=None):
        """Plan for the row width of ``X``; ``y`` is ignored."""
        X = check_signal_matrix(X)
        direction = Direction(self.direction)
        algorithm = Algorithm(self.algorithm)
        opposite = (
            Direction.INVERSE if direction is Direction.FORWARD else Direction.FORWARD
        )
        self.n_features_in_ = X.shape[1]
        self.plan_ = make_plan(X.shape[1], direction, algorithm)
        self.inverse_plan_ = make_plan(X.shape[1], opposite, algorithm)
        return self

    def _apply(self, X, plan):
        X = check_signal_matrix(X)
        if X.shape[1] != self.n_features_in_:
            raise ShapeError(
                f"X has {X.shape[1]} columns; the transformer was fit on "
                f"{self.n_features_in_}"
            )
        return np.stack([execute(plan, row) for row in X])

    def transform(self, X) -> np.ndarray:
        """Apply the fitted plan to every row of ``X``."""
        check_is_fitted(self, "plan_")
        return self._apply(X, self.plan_)

    def inverse_transform(self, X) -> np.ndarray:
        """Apply the opposite-direction plan to every row of ``X``."""
        check_is_fitted(self, "inverse_plan_")
        return self._apply(X, self.inverse_plan_)
