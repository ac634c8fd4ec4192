"""Parsing of zero lists and serialisation of results.

Complex literals accept ``a``, ``a+bi``, ``a-bi`` and ``bi`` (``j`` works in
place of ``i``) with decimal or exponent floats; all whitespace is ignored.
A zero list is comma-separated: ``0.2+0.3i, -0.1``.

JSON output is canonical: keys in schema order, floats in their shortest
round-trip form (never more than 17 significant digits), non-finite floats
as ``null`` and complex numbers as literals in the input grammar. Identical
inputs therefore produce byte-identical output.
"""

from __future__ import annotations

import csv
import json
import math
import re
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import IO, Any

import numpy as np

from .exceptions import ZeroParseError
from .foias_tannenbaum import FTScan
from .numrange_oracle import BoundarySample

_NUMBER = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(
    rf"""
    ^(?:
        (?P<real>[+-]?{_NUMBER})(?:(?P<sign>[+-])(?P<imag>{_NUMBER})?[ij])?
      | (?P<pure>[+-]?{_NUMBER})?[ij]
      | (?P<unit>[+-])[ij]
    )$
    """,
    re.VERBOSE,
)

BOUNDARY_CSV_HEADER = ("theta", "support_value", "re", "im")
FT_TRACE_CSV_HEADER = ("rho", "valid", "re", "im", "abs")

# JSON floats are routed through a marked string so they can carry 17 digits.
_NUMBER_MARK = "\x00"
_MARKED_NUMBER = re.compile(r'"\\u0000([^"\\]*)\\u0000"')


def parse_complex(text: str) -> complex:
    """Parse one complex literal; raises :class:`ZeroParseError`."""
    compact = "".join(str(text).split())
    match = _COMPLEX_RE.match(compact)
    if not compact or match is None:
        raise ZeroParseError(f"cannot parse complex number {text!r}", details={"text": str(text)})
    if match["real"] is not None:
        real = float(match["real"])
        if match["sign"] is None:
            return complex(real, 0.0)
        imag = float(match["imag"]) if match["imag"] is not None else 1.0
        return complex(real, imag if match["sign"] == "+" else -imag)
    if match["unit"] is not None:
        return complex(0.0, -1.0 if match["unit"] == "-" else 1.0)
    pure = match["pure"]
    return complex(0.0, float(pure) if pure is not None else 1.0)


def parse_zeros(text: str) -> tuple[complex, ...]:
    """Parse a comma-separated zero list; empty entries are an error."""
    parts = str(text).split(",")
    if not "".join(parts).strip():
        raise ZeroParseError("zero list is empty")
    zeros: list[complex] = []
    for position, part in enumerate(parts, start=1):
        if not part.strip():
            raise ZeroParseError(f"zero #{position} is empty in {text!r}", details={"text": str(text)})
        zeros.append(parse_complex(part))
    return tuple(zeros)


def format_float(value: float) -> str:
    return repr(float(value))


def format_complex(z: complex) -> str:
    """Inverse of :func:`parse_complex` (exact for finite values)."""
    z = complex(z)
    real = format_float(z.real + 0.0)
    if z.imag == 0.0:
        return real
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{real}{sign}{format_float(abs(z.imag))}i"


def jsonable(value: Any) -> Any:
    """Recursively convert numpy scalars, tuples, complex and non-finite floats."""
    if isinstance(value, dict):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, list | tuple):
        return [jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return [jsonable(item) for item in value.tolist()]
    if isinstance(value, bool | np.bool_):
        return bool(value)
    if isinstance(value, int | np.integer):
        return int(value)
    if isinstance(value, float | np.floating):
        number = float(value)
        return number if math.isfinite(number) else None
    if isinstance(value, complex | np.complexfloating):
        z = complex(value)
        return format_complex(z) if math.isfinite(z.real) and math.isfinite(z.imag) else None
    return value


def format_json_number(value: float) -> str:
    """17 significant digits, keeping a decimal point so the value reads back as a float."""
    text = format(float(value), ".17g")
    return text if any(mark in text for mark in ".e") else f"{text}.0"


def _marked_numbers(value: Any) -> Any:
    if isinstance(value, dict):
        return {key: _marked_numbers(item) for key, item in value.items()}
    if isinstance(value, list):
        return [_marked_numbers(item) for item in value]
    if isinstance(value, float):
        return f"{_NUMBER_MARK}{format_json_number(value)}{_NUMBER_MARK}"
    return value


def canonical_json(payload: Any, *, pretty: bool = False) -> str:
    """One canonical line, or an ``indent=2`` document when ``pretty``; floats carry 17 significant digits."""
    text = json.dumps(
        _marked_numbers(jsonable(payload)), indent=2 if pretty else None, allow_nan=False, ensure_ascii=False
    )
    return _MARKED_NUMBER.sub(r"\1", text)


def _cell(value: float) -> str:
    return format_float(value) if math.isfinite(value) else ""


def boundary_rows(samples: Iterable[BoundarySample]) -> list[tuple[str, str, str, str]]:
    return [
        (
            _cell(s.theta),
            _cell(s.support_value),
            _cell(s.boundary_point.real),
            _cell(s.boundary_point.imag),
        )
        for s in samples
    ]


def ft_trace_rows(scan: FTScan) -> list[tuple[str, str, str, str, str]]:
    """One row per scanned ``rho``; invalid samples leave the defect columns empty."""
    rows = []
    for rho, valid, defect in zip(scan.rhos, scan.valid, scan.defects):
        z = complex(defect)
        rows.append(
            (
                _cell(float(rho)),
                "1" if valid else "0",
                _cell(z.real),
                _cell(z.imag),
                _cell(abs(z)) if valid else "",
            )
        )
    return rows


def write_csv(stream: IO[str], header: Sequence[str], rows: Iterable[Sequence[str]]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def write_csv_file(path: str | Path, header: Sequence[str], rows: Iterable[Sequence[str]]) -> None:
    """Write a CSV file; ``OSError`` propagates to the caller."""
    with Path(path).open("w", encoding="utf-8", newline="") as handle:
        write_csv(handle, header, rows)
