"""Signal file formats.

CSV: one ``re,im`` pair per line, nine significant digits (enough to
round-trip single precision exactly); an optional ``re,im`` header line is
tolerated on read and omitted on write.  JSON: a flat array of two-element
``[re, im]`` arrays.
"""

from __future__ import annotations

import json
import os

import numpy as np

from .errors import DomainError
from .validation import COMPLEX_DTYPE, as_signal

FORMATS = ("csv", "json")


def _fmt(value: float) -> str:
    return f"{float(value):.9g}"


def infer_format(path) -> str:
    """Pick a signal format from a file extension, defaulting to CSV."""
    ext = os.path.splitext(str(path))[1].lower()
    return "json" if ext == ".json" else "csv"


def dump_signal(signal, fp, format: str = "csv") -> None:
    """Write ``signal`` to an open text file object."""
    x = as_signal(signal)
    if format == "csv":
        fp.write("\n".join(f"{_fmt(v.real)},{_fmt(v.imag)}" for v in x))
        fp.write("\n")
    elif format == "json":
        json.dump([[float(v.real), float(v.imag)] for v in x], fp)
        fp.write("\n")
    else:
        raise ValueError(f"unknown signal format {format!r}; expected one of {FORMATS}")


def write_signal(path, signal, format: str | None = None) -> None:
    """Write ``signal`` to ``path``, inferring the format from the extension."""
    fmt = format or infer_format(path)
    with open(path, "w", encoding="utf-8") as fp:
        dump_signal(signal, fp, fmt)


def _parse_csv(text: str, path) -> np.ndarray:
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if lineno == 1 and parts[:2] == ["re", "im"]:
            continue  # optional header
        if len(parts) != 2:
            raise DomainError(f"{path}:{lineno}: expected 're,im', got {raw!r}")
        try:
            values.append(complex(float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise DomainError(f"{path}:{lineno}: {exc}") from exc
    return np.asarray(values, dtype=COMPLEX_DTYPE)


def _parse_json(text: str, path) -> np.ndarray:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise DomainError(f"{path}: expected a JSON array of [re, im] pairs")
    values = []
    for i, item in enumerate(data):
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise DomainError(f"{path}: entry {i} is not an [re, im] pair")
        values.append(complex(float(item[0]), float(item[1])))
    return np.asarray(values, dtype=COMPLEX_DTYPE)


def read_signal(path, format: str | None = None) -> np.ndarray:
    """Read a complex64 signal from ``path`` (format inferred when omitted)."""
    fmt = format or infer_format(path)
    with open(path, "r", encoding="utf-8") as fp:
        text = fp.read()
    if fmt == "csv":
        return _parse_csv(text, path)
    if fmt == "json":
        return _parse_json(text, path)
    raise ValueError(f"unknown signal format {fmt!r}; expected one of {FORMATS}")
