"""Command-line interface.

Subcommands: ``transform`` (run one FFT), ``plan`` (inspect a plan),
``bench`` (run the benchmark protocol), ``verify`` (chi-square agreement of
two transform routes).

Exit codes: 0 success, 2 usage or invalid argument, 3 unsupported transform
length, 4 file I/O failure, 5 verification below the requested p-value.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .bench import export_records, export_summaries, flag_outliers, run_benchmark, summarize
from .errors import FftError, UnsupportedLengthError
from .executor import execute
from .oracle import naive_dft
from .planner import Algorithm, Direction, make_plan
from .signalgen import KINDS, generate
from .sigio import dump_signal, infer_format, read_signal, write_signal
from .stats import BIN_SOURCES, compare_spectra

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_IO = 4
EXIT_VERIFY = 5


def _err(message: str) -> None:
    print(f"stagefft: error: {message}", file=sys.stderr)


def parse_lengths(expr: str) -> list[int]:
    """Parse a length list: ``8,16,64``, a single value, or ``8:2048:pow2``."""
    expr = expr.strip()
    if ":" in expr:
        parts = expr.split(":")
        if len(parts) != 3 or parts[2] != "pow2":
            raise ValueError(
                f"bad length range {expr!r}; expected START:STOP:pow2"
            )
        start, stop = int(parts[0]), int(parts[1])
        if start < 1 or stop < start:
            raise ValueError(f"bad length range {expr!r}: need 1 <= START <= STOP")
        lengths = []
        value = start
        while value <= stop:
            lengths.append(value)
            value *= 2
        return lengths
    lengths = [int(token) for token in expr.split(",") if token.strip()]
    if not lengths:
        raise ValueError(f"no lengths in {expr!r}")
    return lengths


def _load_input_signal(path, length: int):
    signal = read_signal(path)
    if signal.shape[0] != length:
        raise ValueError(
            f"{path} holds {signal.shape[0]} samples but --length is {length}"
        )
    return signal


def _cmd_transform(args) -> int:
    if args.input is not None:
        signal = _load_input_signal(args.input, args.length)
    else:
        signal = generate(args.signal, args.length, args.seed)
    if args.algorithm == "oracle":
        spectrum = naive_dft(signal, Direction(args.direction))
    else:
        plan = make_plan(args.length, Direction(args.direction), Algorithm(args.algorithm))
        spectrum = execute(plan, signal)
    if args.output is None:
        dump_signal(spectrum, sys.stdout, args.format or "csv")
    else:
        write_signal(args.output, spectrum, args.format)
    return EXIT_OK


def _cmd_plan(args) -> int:
    plan = make_plan(args.length, Direction(args.direction), Algorithm(args.algorithm))
    print(f"length: {plan.length}")
    print(f"direction: {plan.direction.value}")
    print(f"algorithm: {plan.algorithm.value}")
    print(f"stages: {','.join(str(r) for r in plan.stages)}")
    print(f"permutation_length: {plan.permutation.shape[0]}")
    print(f"twiddle_count: {plan.twiddles.n}")
    print(f"scale: {plan.scale!r}")
    return EXIT_OK


def _cmd_bench(args) -> int:
    lengths = parse_lengths(args.lengths)
    result = run_benchmark(
        lengths,
        iterations=args.iterations,
        warmup_count=args.warmup,
        algorithm=Algorithm(args.algorithm),
        signal=args.signal,
        seed=args.seed,
    )
    records = flag_outliers(result.records, args.outlier_factor, args.outlier_reference)
    summaries = summarize(records, args.outlier_factor, args.outlier_reference) if records else []
    for summary in summaries:
        print(
            f"length={summary.length} kept={summary.iterations_kept} "
            f"mean_us={summary.mean_us:.3f} stddev_us={summary.stddev_us:.3f} "
            f"optimal_us={summary.optimal_us:.3f} "
            f"outliers={summary.outliers_discarded}"
        )
    for length, reason in sorted(result.errors.items()):
        print(f"stagefft: bench: length {length} skipped: {reason}", file=sys.stderr)
    if args.records is not None:
        export_records(records, args.records)
    if args.summary is not None:
        metadata = {
            "lengths": args.lengths,
            "iterations": args.iterations,
            "warmup_count": args.warmup,
            "algorithm": args.algorithm,
            "signal": args.signal,
            "seed": args.seed,
            "outlier_factor": args.outlier_factor,
            "outlier_reference": args.outlier_reference,
            "optimal": "min total over all non-warmup records, outliers included",
            "checksums": {str(k): v for k, v in result.checksums.items()},
        }
        export_summaries(summaries, args.summary, metadata)
    return EXIT_UNSUPPORTED if result.errors else EXIT_OK


def _route_spectrum(route: str, signal, length: int):
    if route == "oracle":
        return naive_dft(signal, Direction.FORWARD)
    if route in ("mixed", "split"):
        plan = make_plan(length, Direction.FORWARD, Algorithm(route))
        return execute(plan, signal)
    if route.startswith("file:"):
        return _load_input_signal(route[len("file:") :], length)
    raise ValueError(
        f"bad route {route!r}; expected mixed, split, oracle, or file:PATH"
    )


def _cmd_verify(args) -> int:
    signal = generate(args.signal, args.length, args.seed)
    lhs = _route_spectrum(args.lhs, signal, args.length)
    rhs = _route_spectrum(args.rhs, signal, args.length)
    bins = args.bins if args.bins is not None else args.length
    report = compare_spectra(lhs, rhs, bins=bins, bin_on=args.bin_on)
    text = json.dumps(asdict(report), indent=2)
    if args.report is None:
        print(text)
    else:
        with open(args.report, "w", encoding="utf-8") as fp:
            fp.write(text + "\n")
    if args.fail_under_p is not None and report.p_value < args.fail_under_p:
        _err(
            f"verification failed: p_value {report.p_value:.6g} "
            f"< threshold {args.fail_under_p:.6g}"
        )
        return EXIT_VERIFY
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stagefft",
        description="Planned radix-2/4/8 and split-radix FFT tools",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tr = sub.add_parser("transform", help="run one transform and emit the spectrum")
    p_tr.add_argument("--length", type=int, required=True, help="transform length")
    p_tr.add_argument("--direction", choices=["forward", "inverse"], default="forward")
    p_tr.add_argument(
        "--algorithm", choices=["mixed", "split", "oracle"], default="mixed"
    )
    source = p_tr.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="read the input signal from this file")
    source.add_argument("--signal", choices=list(KINDS), help="generate this signal")
    p_tr.add_argument("--seed", type=int, default=0, help="seed for --signal random")
    p_tr.add_argument("--output", help="write the spectrum here (default: stdout)")
    p_tr.add_argument(
        "--format",
        choices=["csv", "json"],
        help="output format (default: by extension, csv on stdout)",
    )
    p_tr.set_defaults(func=_cmd_transform)

    p_pl = sub.add_parser("plan", help="print what a plan would execute")
    p_pl.add_argument("--length", type=int, required=True)
    p_pl.add_argument("--direction", choices=["forward", "inverse"], default="forward")
    p_pl.add_argument("--algorithm", choices=["mixed", "split"], default="mixed")
    p_pl.set_defaults(func=_cmd_plan)

    p_be = sub.add_parser(
        "bench",
        help="run the benchmark protocol",
        description="Exit code 3 if any requested length is unsupported; "
        "the remaining lengths still run and export.",
    )
    p_be.add_argument(
        "--lengths", default="8:2048:pow2", help="e.g. 8:2048:pow2 or 8,64,512"
    )
    p_be.add_argument("--iterations", type=int, default=1000)
    p_be.add_argument("--warmup", type=int, default=1, help="leading flagged runs")
    p_be.add_argument("--algorithm", choices=["mixed", "split"], default="mixed")
    p_be.add_argument("--signal", choices=list(KINDS), default="ramp")
    p_be.add_argument("--seed", type=int, default=0)
    p_be.add_argument("--outlier-factor", type=float, default=10.0)
    p_be.add_argument(
        "--outlier-reference",
        choices=["median", "mean"],
        default="median",
        help="statistic the outlier cutoff multiplies",
    )
    p_be.add_argument("--records", help="export per-iteration records (csv/json)")
    p_be.add_argument("--summary", help="export per-length summary JSON")
    p_be.set_defaults(func=_cmd_bench)

    p_ve = sub.add_parser(
        "verify", help="chi-square agreement report between two transform routes"
    )
    p_ve.add_argument("--length", type=int, required=True)
    p_ve.add_argument("--signal", choices=list(KINDS), default="ramp")
    p_ve.add_argument("--seed", type=int, default=0)
    p_ve.add_argument(
        "--lhs", default="mixed", help="mixed | split | oracle | file:PATH"
    )
    p_ve.add_argument(
        "--rhs", default="oracle", help="mixed | split | oracle | file:PATH"
    )
    p_ve.add_argument("--bins", type=int, help="histogram bins (default: length)")
    p_ve.add_argument("--bin-on", choices=list(BIN_SOURCES), default="magnitude")
    p_ve.add_argument("--report", help="write the JSON report here (default: stdout)")
    p_ve.add_argument(
        "--fail-under-p",
        type=float,
        help="exit 5 when the p-value falls below this threshold",
    )
    p_ve.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UnsupportedLengthError as exc:
        _err(str(exc))
        return EXIT_UNSUPPORTED
    except (FftError, ValueError) as exc:
        _err(str(exc))
        return EXIT_USAGE
    except OSError as exc:
        _err(str(exc))
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
