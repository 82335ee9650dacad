"""Benchmark protocol: repeated timed transforms with warm-up marking,
outlier flagging, summary statistics, and per-iteration record export.

The protocol is deliberately rigid so runs are comparable: one plan and one
input signal per length, every iteration recorded in execution order, the
leading ``warmup_count`` iterations flagged (never silently dropped), and
summary statistics computed only over kept records while the per-length
optimum is the minimum over *all* non-warm-up records, outliers included.
"""

from __future__ import annotations

import csv
import hashlib
import json
import os
import statistics
from dataclasses import asdict, dataclass, replace
from typing import NamedTuple

from .errors import DomainError, InsufficientDataError, InvalidLengthError, PlanError
from .executor import execute_timed
from .planner import Algorithm, Direction, make_plan
from .signalgen import generate

RECORD_COLUMNS = (
    "length",
    "iteration",
    "warmup",
    "outlier",
    "dispatch_us",
    "compute_us",
    "total_us",
)

EXPORT_FORMATS = ("csv", "json")


@dataclass(frozen=True)
class BenchmarkRecord:
    """One timed transform execution."""

    length: int
    iteration: int
    dispatch_us: float
    compute_us: float
    total_us: float
    warmup: bool
    outlier: bool = False


@dataclass(frozen=True)
class BenchmarkSummary:
    """Per-length statistics over the kept (non-warm-up, non-outlier) records.

    ``variance_us2`` is the population variance (divide by the number of kept
    records, not N-1).  ``optimal_us`` is the smallest total over all
    non-warm-up records including flagged outliers, so it never exceeds
    ``mean_us``.
    """

    length: int
    iterations_kept: int
    mean_us: float
    variance_us2: float
    stddev_us: float
    optimal_us: float
    outliers_discarded: int


class BenchmarkResult(NamedTuple):
    """Everything one benchmark run produced.

    ``records`` are in execution order.  ``errors`` maps lengths that could
    not be planned to the reason; remaining lengths still run.  ``checksums``
    maps each completed length to the SHA-256 of its (deterministic) output
    bytes, recorded once per length.
    """

    records: list[BenchmarkRecord]
    errors: dict[int, str]
    checksums: dict[int, str]


def run_benchmark(
    lengths,
    iterations: int = 1000,
    warmup_count: int = 1,
    algorithm: Algorithm = Algorithm.MIXED_RADIX,
    signal: str = "ramp",
    seed: int = 0,
) -> BenchmarkResult:
    """Time ``warmup_count + iterations`` transforms at each length.

    Per length: build one forward plan, generate one signal, then run and
    record every iteration.  The first ``warmup_count`` records carry
    ``warmup=True``.  Outlier flags are left to :func:`flag_outliers` /
    :func:`summarize` so the flagging rule stays a post-processing choice.
    """
    if iterations < 1:
        raise DomainError(f"iterations must be >= 1, got {iterations}")
    if warmup_count < 0:
        raise DomainError(f"warmup_count must be >= 0, got {warmup_count}")
    records: list[BenchmarkRecord] = []
    errors: dict[int, str] = {}
    checksums: dict[int, str] = {}
    for length in lengths:
        length = int(length)
        try:
            plan = make_plan(length, Direction.FORWARD, algorithm)
        except (InvalidLengthError, PlanError) as exc:
            errors[length] = str(exc)
            continue
        x = generate(signal, length, seed)
        for iteration in range(warmup_count + iterations):
            timed = execute_timed(plan, x)
            if length not in checksums:
                checksums[length] = hashlib.sha256(timed.output.tobytes()).hexdigest()
            records.append(
                BenchmarkRecord(
                    length=length,
                    iteration=iteration,
                    dispatch_us=timed.dispatch_us,
                    compute_us=timed.compute_us,
                    total_us=timed.dispatch_us + timed.compute_us,
                    warmup=iteration < warmup_count,
                )
            )
    return BenchmarkResult(records, errors, checksums)


def flag_outliers(
    records,
    outlier_factor: float = 10.0,
    reference: str = "median",
) -> list[BenchmarkRecord]:
    """Return records with outlier flags set, preserving order.

    A non-warm-up record is an outlier when its total exceeds
    ``outlier_factor`` times the reference statistic (median by default,
    mean with ``reference="mean"``) of its length's non-warm-up totals.
    Warm-up records are never flagged.
    """
    if outlier_factor <= 1.0:
        raise DomainError(f"outlier_factor must be > 1, got {outlier_factor}")
    if reference not in ("median", "mean"):
        raise ValueError(f"reference must be 'median' or 'mean', got {reference!r}")
    totals: dict[int, list[float]] = {}
    for rec in records:
        if not rec.warmup:
            totals.setdefault(rec.length, []).append(rec.total_us)
    cutoffs = {}
    for length, values in totals.items():
        center = statistics.median(values) if reference == "median" else statistics.fmean(values)
        cutoffs[length] = outlier_factor * center
    out = []
    for rec in records:
        flagged = (not rec.warmup) and rec.total_us > cutoffs[rec.length]
        out.append(rec if rec.outlier == flagged else replace(rec, outlier=flagged))
    return out


def summarize(
    records,
    outlier_factor: float = 10.0,
    reference: str = "median",
) -> list[BenchmarkSummary]:
    """Reduce records to one :class:`BenchmarkSummary` per length, ascending.

    Flags outliers first (see :func:`flag_outliers`), then averages the kept
    records.  Raises :class:`InsufficientDataError` for a length with no
    non-warm-up records.
    """
    flagged = flag_outliers(records, outlier_factor, reference)
    by_length: dict[int, list[BenchmarkRecord]] = {}
    for rec in flagged:
        by_length.setdefault(rec.length, []).append(rec)
    summaries = []
    for length in sorted(by_length):
        measured = [r for r in by_length[length] if not r.warmup]
        if not measured:
            raise InsufficientDataError(
                f"length {length}: every record is a warm-up; nothing to summarize"
            )
        kept = [r.total_us for r in measured if not r.outlier]
        mean = statistics.fmean(kept)
        variance = statistics.pvariance(kept, mu=mean)
        summaries.append(
            BenchmarkSummary(
                length=length,
                iterations_kept=len(kept),
                mean_us=mean,
                variance_us2=variance,
                stddev_us=variance**0.5,
                optimal_us=min(r.total_us for r in measured),
                outliers_discarded=len(measured) - len(kept),
            )
        )
    return summaries


def _infer_export_format(path) -> str:
    ext = os.path.splitext(str(path))[1].lower()
    return "json" if ext == ".json" else "csv"


def export_records(records, destination, format: str | None = None) -> None:
    """Write per-iteration records to ``destination`` (path or file object).

    CSV columns are exactly ``length,iteration,warmup,outlier,dispatch_us,
    compute_us,total_us`` in that order; zero records produce a header-only
    file.  JSON is a list of record objects with the same keys.  Floats are
    written with full repr precision and booleans as ``true``/``false``, so
    :func:`load_records` round-trips exactly.
    """
    fmt = format or _infer_export_format(destination)
    if fmt not in EXPORT_FORMATS:
        raise ValueError(f"unknown export format {fmt!r}; expected one of {EXPORT_FORMATS}")
    if hasattr(destination, "write"):
        _dump_records(records, destination, fmt)
    else:
        with open(destination, "w", encoding="utf-8", newline="") as fp:
            _dump_records(records, fp, fmt)


def _dump_records(records, fp, fmt: str) -> None:
    rows = [asdict(rec) for rec in records]
    if fmt == "json":
        json.dump([{col: row[col] for col in RECORD_COLUMNS} for row in rows], fp, indent=2)
        fp.write("\n")
        return
    writer = csv.writer(fp)
    writer.writerow(RECORD_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                row["length"],
                row["iteration"],
                "true" if row["warmup"] else "false",
                "true" if row["outlier"] else "false",
                repr(row["dispatch_us"]),
                repr(row["compute_us"]),
                repr(row["total_us"]),
            ]
        )


def load_records(source, format: str | None = None) -> list[BenchmarkRecord]:
    """Read records previously written by :func:`export_records`."""
    fmt = format or _infer_export_format(source)
    with open(source, "r", encoding="utf-8", newline="") as fp:
        text = fp.read()
    if fmt == "json":
        data = json.loads(text)
        return [
            BenchmarkRecord(
                length=int(row["length"]),
                iteration=int(row["iteration"]),
                dispatch_us=float(row["dispatch_us"]),
                compute_us=float(row["compute_us"]),
                total_us=float(row["total_us"]),
                warmup=bool(row["warmup"]),
                outlier=bool(row["outlier"]),
            )
            for row in data
        ]
    reader = csv.reader(text.splitlines())
    header = next(reader, None)
    if header is None or tuple(header) != RECORD_COLUMNS:
        raise DomainError(f"unexpected record CSV header: {header!r}")
    out = []
    for row in reader:
        if not row:
            continue
        rec = dict(zip(RECORD_COLUMNS, row))
        out.append(
            BenchmarkRecord(
                length=int(rec["length"]),
                iteration=int(rec["iteration"]),
                dispatch_us=float(rec["dispatch_us"]),
                compute_us=float(rec["compute_us"]),
                total_us=float(rec["total_us"]),
                warmup=rec["warmup"] == "true",
                outlier=rec["outlier"] == "true",
            )
        )
    return out


def export_summaries(summaries, destination, metadata: dict | None = None) -> None:
    """Write per-length summaries plus run metadata as a JSON document.

    The document has two keys: ``metadata`` (the protocol knobs that shaped
    the numbers: variance convention, outlier rule, warm-up count, ...) and
    ``summaries`` (one object per length).
    """
    doc = {
        "metadata": {"variance": "population", **(metadata or {})},
        "summaries": [asdict(s) for s in summaries],
    }
    if hasattr(destination, "write"):
        json.dump(doc, destination, indent=2)
        destination.write("\n")
    else:
        with open(destination, "w", encoding="utf-8") as fp:
            json.dump(doc, fp, indent=2)
            fp.write("\n")
