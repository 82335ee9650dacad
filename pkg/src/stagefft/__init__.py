"""Planned single-precision FFT with benchmark and verification tooling.

The package is organized around an explicit plan/execute split:``make_plan``
pays all host-side cost (stage factorization, digit-reversal permutation,
twiddle table) once, ``execute`` runs the staged radix-2/4/8 pipeline or the
recursive split-radix transform on complex64 buffers, and the oracle, bench,
and stats modules provide the ground truth, timing protocol, and chi-square
agreement tooling around it.
"""

from .bench import (
    BenchmarkRecord,
    BenchmarkResult,
    BenchmarkSummary,
    export_records,
    export_summaries,
    flag_outliers,
    load_records,
    run_benchmark,
    summarize,
)
from .errors import (
    DomainError,
    FftError,
    InsufficientDataError,
    InvalidLengthError,
    PlanError,
    ShapeError,
    UnsupportedLengthError,
)
from .estimator import FourierTransformer
from .executor import TimedExecution, execute, execute_timed
from .kernels import (
    StageBuffer,
    count_butterflies,
    radix2_stage,
    radix4_stage,
    radix8_stage,
    split_radix_transform,
)
from .numerics import TwiddleTable, build_twiddle_table, twiddle
from .oracle import dft_matrix, naive_dft
from .planner import (
    ENGINE_MAX_LENGTH,
    ENGINE_MIN_LENGTH,
    SUPPORTED_LENGTHS,
    Algorithm,
    Direction,
    FftPlan,
    digit_reversal_permutation,
    factorize_stages,
    make_plan,
)
from .signalgen import generate
from .sigio import read_signal, write_signal
from .stats import (
    ChiSquareReport,
    Histogram,
    build_histograms,
    chi2_p_value,
    chi2_reduced,
    compare_spectra,
    lower_regularized_gamma,
    relative_difference,
    upper_regularized_gamma,
)

__version__ = "0.1.0"

__all__ = [
    "Algorithm",
    "BenchmarkRecord",
    "BenchmarkResult",
    "BenchmarkSummary",
    "ChiSquareReport",
    "Direction",
    "DomainError",
    "ENGINE_MAX_LENGTH",
    "ENGINE_MIN_LENGTH",
    "FftError",
    "FftPlan",
    "FourierTransformer",
    "Histogram",
    "InsufficientDataError",
    "InvalidLengthError",
    "PlanError",
    "ShapeError",
    "StageBuffer",
    "SUPPORTED_LENGTHS",
    "TimedExecution",
    "TwiddleTable",
    "UnsupportedLengthError",
    "build_histograms",
    "build_twiddle_table",
    "chi2_p_value",
    "chi2_reduced",
    "compare_spectra",
    "count_butterflies",
    "dft_matrix",
    "digit_reversal_permutation",
    "execute",
    "execute_timed",
    "export_records",
    "export_summaries",
    "factorize_stages",
    "flag_outliers",
    "generate",
    "load_records",
    "lower_regularized_gamma",
    "make_plan",
    "naive_dft",
    "radix2_stage",
    "radix4_stage",
    "radix8_stage",
    "read_signal",
    "relative_difference",
    "run_benchmark",
    "split_radix_transform",
    "summarize",
    "twiddle",
    "upper_regularized_gamma",
    "write_signal",
]
