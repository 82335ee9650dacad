import pytest

from stagefft import (
    BenchmarkRecord,
    flag_outliers,
    load_records,
    run_benchmark,
    summarize,
)
from stagefft.bench import RECORD_COLUMNS, export_records, export_summaries
from stagefft.errors import DomainError, InsufficientDataError


def record(length, iteration, total, warmup=False):
    return BenchmarkRecord(
        length=length,
        iteration=iteration,
        dispatch_us=total / 4,
        compute_us=3 * total / 4,
        total_us=total,
        warmup=warmup,
    )


def test_run_produces_warmup_plus_iterations():
    result = run_benchmark([8], iterations=3, warmup_count=1)
    assert len(result.records) == 4
    assert [r.warmup for r in result.records] == [True, False, False, False]
    assert [r.iteration for r in result.records] == [0, 1, 2, 3]
    for r in result.records:
        assert r.length == 8
        assert r.total_us == pytest.approx(r.dispatch_us + r.compute_us)


def test_run_skips_unsupported_lengths_but_continues():
    result = run_benchmark([12, 4096, 8], iterations=2, warmup_count=0)
    assert set(result.errors) == {12, 4096}
    assert {r.length for r in result.records} == {8}


def test_run_records_checksum_once_per_length():
    a = run_benchmark([8, 16], iterations=2, warmup_count=0)
    b = run_benchmark([8, 16], iterations=5, warmup_count=1)
    assert set(a.checksums) == {8, 16}
    # deterministic engine, same signal: checksums agree across runs
    assert a.checksums == b.checksums


def test_summary_basics():
    records = [record(8, i, t) for i, t in enumerate([5.0, 3.0, 4.0])]
    (summary,) = summarize(records)
    assert summary.mean_us == pytest.approx(4.0)
    assert summary.optimal_us == pytest.approx(3.0)
    assert summary.iterations_kept == 3
    assert summary.outliers_discarded == 0


def test_population_variance():
    records = [record(8, i, t) for i, t in enumerate([2.0, 4.0])]
    (summary,) = summarize(records)
    assert summary.variance_us2 == pytest.approx(1.0)
    assert summary.stddev_us == pytest.approx(1.0)


def test_outlier_discard_median_rule():
    totals = [10.0, 10.0, 10.0, 500.0]
    records = [record(8, i, t) for i, t in enumerate(totals)]
    (summary,) = summarize(records, outlier_factor=10.0)
    assert summary.outliers_discarded == 1
    assert summary.mean_us == pytest.approx(10.0)
    # the optimum still ranges over every non-warm-up record
    assert summary.optimal_us == pytest.approx(10.0)


def test_outlier_mean_rule_differs():
    # median of [1,1,1,1,30] is 1 -> 30 is an outlier at factor 10;
    # mean is 6.8 -> cutoff 68 keeps it.
    totals = [1.0, 1.0, 1.0, 1.0, 30.0]
    records = [record(8, i, t) for i, t in enumerate(totals)]
    by_median = summarize(records, outlier_factor=10.0, reference="median")
    by_mean = summarize(records, outlier_factor=10.0, reference="mean")
    assert by_median[0].outliers_discarded == 1
    assert by_mean[0].outliers_discarded == 0


def test_warmup_records_never_counted():
    records = [record(8, 0, 10_000.0, warmup=True)] + [
        record(8, i, 2.0) for i in range(1, 4)
    ]
    (summary,) = summarize(records)
    assert summary.mean_us == pytest.approx(2.0)
    assert summary.optimal_us == pytest.approx(2.0)
    assert summary.iterations_kept == 3
    flagged = flag_outliers(records)
    assert not flagged[0].outlier


def test_optimal_never_exceeds_mean():
    result = run_benchmark([8, 64], iterations=30, warmup_count=1)
    for summary in summarize(result.records):
        assert summary.optimal_us <= summary.mean_us


def test_all_warmup_is_an_error():
    records = [record(8, 0, 1.0, warmup=True)]
    with pytest.raises(InsufficientDataError):
        summarize(records)


def test_bad_outlier_factor():
    with pytest.raises(DomainError):
        flag_outliers([record(8, 0, 1.0)], outlier_factor=1.0)


def test_summaries_sorted_by_length():
    records = [record(64, 0, 2.0), record(8, 0, 1.0)]
    lengths = [s.length for s in summarize(records)]
    assert lengths == [8, 64]


def test_flagging_is_idempotent_and_pure():
    records = [record(8, i, t) for i, t in enumerate([1.0, 1.0, 50.0])]
    once = flag_outliers(records)
    twice = flag_outliers(once)
    assert once == twice
    assert records[2].outlier is False  # inputs untouched


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_export_round_trip(tmp_path, fmt):
    result = run_benchmark([8, 16], iterations=10, warmup_count=1)
    records = flag_outliers(result.records)
    path = tmp_path / f"records.{fmt}"
    export_records(records, path)
    assert load_records(path) == records


def test_export_zero_records_is_header_only(tmp_path):
    path = tmp_path / "records.csv"
    export_records([], path)
    assert path.read_text().strip() == ",".join(RECORD_COLUMNS)


def test_export_csv_column_order(tmp_path):
    path = tmp_path / "records.csv"
    export_records([record(8, 0, 1.0)], path)
    header = path.read_text().splitlines()[0]
    assert header == "length,iteration,warmup,outlier,dispatch_us,compute_us,total_us"


def test_summary_export_includes_metadata(tmp_path):
    import json

    result = run_benchmark([8], iterations=5, warmup_count=1)
    summaries = summarize(result.records)
    path = tmp_path / "summary.json"
    export_summaries(summaries, path, {"signal": "ramp"})
    doc = json.loads(path.read_text())
    assert doc["metadata"]["variance"] == "population"
    assert doc["metadata"]["signal"] == "ramp"
    assert doc["summaries"][0]["length"] == 8
    assert set(doc["summaries"][0]) == {
        "length",
        "iterations_kept",
        "mean_us",
        "variance_us2",
        "stddev_us",
        "optimal_us",
        "outliers_discarded",
    }
