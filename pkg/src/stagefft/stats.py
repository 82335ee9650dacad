"""Spectrum-comparison toolkit.

Agreement between two transforms is judged the same way end to end: build
magnitude histograms over shared bin edges, form the reduced chi-square
statistic against the reference counts, convert it to a survival-function
p-value through a hand-rolled regularized incomplete gamma (series for small
arguments, continued fraction for large), and report the worst elementwise
relative difference alongside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InsufficientDataError, ShapeError
from .validation import as_signal, check_same_length

GAMMA_TOL = 1e-12
GAMMA_MAX_ITER = 500

BIN_SOURCES = ("magnitude", "real", "imag")


@dataclass(frozen=True, eq=False)
class Histogram:
    """Counts over shared bin edges.

    ``degenerate`` marks the all-values-equal case, where the range collapses
    to a single artificial unit-wide bin.
    """

    bin_edges: np.ndarray
    counts: np.ndarray
    degenerate: bool = False


@dataclass(frozen=True)
class ChiSquareReport:
    """Everything one spectrum comparison produced."""

    chi2_reduced: float
    ndf: int
    p_value: float
    bins_used: int
    bins_skipped: int
    max_rel_diff: float
    abs_diff_max: float


def _binned_values(x: np.ndarray, bin_on: str) -> np.ndarray:
    if bin_on == "magnitude":
        return np.abs(x).astype(np.float64)
    if bin_on == "real":
        return x.real.astype(np.float64)
    if bin_on == "imag":
        return x.imag.astype(np.float64)
    raise ValueError(f"bin_on must be one of {BIN_SOURCES}, got {bin_on!r}")


def build_histograms(a, b, bins: int, bin_on: str = "magnitude"):
    """Histogram two equal-length spectra over one shared set of bin edges.

    Edges run linearly from the smaller of the two minima to the larger of
    the two maxima, so every value of both inputs is counted.  Returns the
    pair ``(hist_a, hist_b)``.
    """
    xa = as_signal(a, name="a")
    xb = as_signal(b, name="b")
    check_same_length(xa, xb, names=("a", "b"))
    if bins < 2:
        raise DomainError(f"bins must be >= 2, got {bins}")
    va = _binned_values(xa, bin_on)
    vb = _binned_values(xb, bin_on)
    lo = min(va.min(), vb.min())
    hi = max(va.max(), vb.max())
    degenerate = lo == hi
    if degenerate:
        edges = np.array([lo, lo + 1.0])
    else:
        edges = np.linspace(lo, hi, bins + 1)
    edges.setflags(write=False)
    counts_a, _ = np.histogram(va, bins=edges)
    counts_b, _ = np.histogram(vb, bins=edges)
    return (
        Histogram(edges, counts_a.astype(np.float64), degenerate),
        Histogram(edges, counts_b.astype(np.float64), degenerate),
    )


def chi2_reduced(sample: Histogram, reference: Histogram) -> tuple[float, int]:
    """Reduced chi-square of ``sample`` counts against ``reference`` counts.

    chi2 = sum over bins with reference count n_i > 0 of (s_i - n_i)^2 / n_i,
    divided by ndf = (number of used bins) - 1.  Returns ``(chi2/ndf, ndf)``.
    """
    if not np.array_equal(sample.bin_edges, reference.bin_edges):
        raise ShapeError("histograms must share identical bin edges")
    mask = reference.counts > 0
    used = int(mask.sum())
    if used < 2:
        raise InsufficientDataError(
            f"only {used} usable bin(s); need at least 2 for a chi-square"
        )
    ndf = used - 1
    diff = sample.counts[mask] - reference.counts[mask]
    chi2 = float(np.sum(diff * diff / reference.counts[mask]))
    return chi2 / ndf, ndf


def _lower_gamma_series(a: float, x: float) -> float:
    # P(a, x) by power series: converges fast for x < a + 1 and is the
    # deliberately independent counterpart of the continued-fraction path.
    if x == 0.0:
        return 0.0
    term = 1.0 / a
    total = term
    denom = a
    for _ in range(GAMMA_MAX_ITER):
        denom += 1.0
        term *= x / denom
        total += term
        if abs(term) < abs(total) * GAMMA_TOL:
            return total * math.exp(-x + a * math.log(x) - math.lgamma(a))
    raise ArithmeticError(
        f"lower incomplete gamma series did not converge for a={a}, x={x}"
    )


def _upper_gamma_contfrac(a: float, x: float) -> float:
    # Q(a, x) by modified Lentz continued fraction; best for x >= a + 1.
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, GAMMA_MAX_ITER + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < GAMMA_TOL:
            return h * math.exp(-x + a * math.log(x) - math.lgamma(a))
    raise ArithmeticError(
        f"upper incomplete gamma continued fraction did not converge for a={a}, x={x}"
    )


def lower_regularized_gamma(a: float, x: float) -> float:
    """P(a, x), always via the power series (independent of the Q path)."""
    if a <= 0:
        raise DomainError(f"gamma shape parameter must be > 0, got {a}")
    if x < 0 or math.isnan(x):
        raise DomainError(f"gamma argument must be >= 0, got {x}")
    return _lower_gamma_series(a, x)


def upper_regularized_gamma(a: float, x: float) -> float:
    """Q(a, x) = 1 - P(a, x), choosing series or continued fraction by region."""
    if a <= 0:
        raise DomainError(f"gamma shape parameter must be > 0, got {a}")
    if x < 0 or math.isnan(x):
        raise DomainError(f"gamma argument must be >= 0, got {x}")
    if x == 0.0:
        return 1.0
    if x < a + 1.0:
        return 1.0 - _lower_gamma_series(a, x)
    return _upper_gamma_contfrac(a, x)


def chi2_p_value(chi2_total: float, ndf: int) -> float:
    """Probability of a chi-square this large or larger under ndf freedoms.

    This is the survival function Q(ndf/2, chi2_total/2); 0 maps to exactly
    1.0 and the function is non-increasing in ``chi2_total``.
    """
    if ndf < 1:
        raise DomainError(f"ndf must be >= 1, got {ndf}")
    if math.isnan(chi2_total) or chi2_total < 0:
        raise DomainError(f"chi2 must be finite and >= 0, got {chi2_total}")
    return upper_regularized_gamma(ndf / 2.0, chi2_total / 2.0)


def relative_difference(a, b) -> np.ndarray:
    """Elementwise |a_k - b_k| / |a_k| on complex magnitudes, as float64.

    Both zero -> 0; |a_k| = 0 with |b_k| > 0 -> inf (flagged, not raised).
    """
    xa = as_signal(a, name="a").astype(np.complex128)
    xb = as_signal(b, name="b").astype(np.complex128)
    check_same_length(xa, xb, names=("a", "b"))
    num = np.abs(xa - xb)
    den = np.abs(xa)
    out = np.full(den.shape, np.inf, dtype=np.float64)
    np.divide(num, den, out=out, where=den > 0)
    out[(den == 0) & (np.abs(xb) == 0)] = 0.0
    return out


def compare_spectra(
    lhs,
    rhs,
    bins: int | None = None,
    bin_on: str = "magnitude",
) -> ChiSquareReport:
    """Full agreement report of spectrum ``lhs`` against reference ``rhs``.

    ``bins`` defaults to the spectrum length.  The chi-square treats ``rhs``
    as the reference counts; the relative difference uses ``lhs`` magnitudes
    as denominators.
    """
    xa = as_signal(lhs, name="lhs")
    xb = as_signal(rhs, name="rhs")
    check_same_length(xa, xb, names=("lhs", "rhs"))
    if bins is None:
        bins = xa.shape[0]
    hist_lhs, hist_rhs = build_histograms(xa, xb, bins, bin_on)
    reduced, ndf = chi2_reduced(hist_lhs, hist_rhs)
    p_value = chi2_p_value(reduced * ndf, ndf)
    rel = relative_difference(xa, xb)
    abs_diff = np.abs(xa.astype(np.complex128) - xb.astype(np.complex128))
    return ChiSquareReport(
        chi2_reduced=reduced,
        ndf=ndf,
        p_value=p_value,
        bins_used=ndf + 1,
        bins_skipped=int(hist_rhs.counts.shape[0]) - (ndf + 1),
        max_rel_diff=float(rel.max()),
        abs_diff_max=float(abs_diff.max()),
    )
