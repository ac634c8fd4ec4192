"""Tests for zero-list parsing and output formats."""

import io
import json
import math

import numpy as np
import pytest

from blaschke_radius.blaschke import BlaschkeProduct
from blaschke_radius.exceptions import ZeroParseError
from blaschke_radius.foias_tannenbaum import ft_scan
from blaschke_radius.formats import (
    BOUNDARY_CSV_HEADER,
    FT_TRACE_CSV_HEADER,
    boundary_rows,
    canonical_json,
    format_complex,
    format_json_number,
    ft_trace_rows,
    jsonable,
    parse_complex,
    parse_zeros,
    write_csv,
    write_csv_file,
)
from blaschke_radius.numrange_oracle import BoundarySample

# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "text,expected",
    [
        ("0.5", 0.5),
        ("-0.1", -0.1),
        (".25", 0.25),
        ("1e-3", 0.001),
        ("0.2+0.3i", 0.2 + 0.3j),
        ("0.2-0.3j", 0.2 - 0.3j),
        ("0.2 + 0.3 i", 0.2 + 0.3j),
        ("0.4i", 0.4j),
        ("-0.4i", -0.4j),
        ("i", 1j),
        ("-i", -1j),
        ("0.1+i", 0.1 + 1j),
        ("2.5e-1-1E-2i", 0.25 - 0.01j),
    ],
)
def test_parse_complex(text, expected):
    assert parse_complex(text) == expected


@pytest.mark.parametrize("text", ["", "abc", "0.2+0.3", "0.5ii", "1..2", "0.2+-0.3i", "nan"])
def test_parse_complex_rejects(text):
    with pytest.raises(ZeroParseError) as excinfo:
        parse_complex(text)
    assert excinfo.value.code == "parse_error"


def test_parse_zeros():
    assert parse_zeros("0.2+0.3i, -0.1,0") == (0.2 + 0.3j, -0.1 + 0j, 0j)


@pytest.mark.parametrize("text", ["", "  ", "0.1,,0.2", "0.1,"])
def test_parse_zeros_rejects_empty_entries(text):
    with pytest.raises(ZeroParseError):
        parse_zeros(text)


@pytest.mark.parametrize("z", [0.75, -0.6, 0.25 - 0.5j, 1e-20j, 0.1 + 0.2j, -0.3333333333333333 + 0.7j])
def test_format_complex_inverts_parse(z):
    assert parse_complex(format_complex(z)) == z


def test_format_complex_normalises_negative_zero():
    assert format_complex(complex(-0.0, 0.0)) == "0.0"
    assert format_complex(0.5 - 0.25j) == "0.5-0.25i"


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def test_jsonable_converts_numpy_and_complex():
    payload = jsonable(
        {
            "a": np.float64(0.5),
            "b": (1, np.int64(2)),
            "c": np.array([0.25, np.nan]),
            "d": 0.5 + 0.5j,
            "e": np.bool_(True),
            "f": float("inf"),
        }
    )
    assert payload == {"a": 0.5, "b": [1, 2], "c": [0.25, None], "d": "0.5+0.5i", "e": True, "f": None}


def test_canonical_json_minimal_example():
    assert canonical_json({"value": 0.75}) == '{"value": 0.75}'


def test_canonical_json_is_deterministic_and_round_trip():
    payload = {"value": 1 / 3, "zeros": [0.1 + 0.2j], "missing": math.nan}
    first = canonical_json(payload)
    assert first == canonical_json(payload)
    assert '"value": 0.33333333333333331' in first
    assert json.loads(first)["value"] == 1 / 3
    assert '"missing": null' in first


@pytest.mark.parametrize(
    "value,text",
    [(0.1, "0.10000000000000001"), (1.0, "1.0"), (-2.0, "-2.0"), (0.0, "0.0"), (1e-20, "9.9999999999999995e-21")],
)
def test_json_numbers_carry_17_significant_digits(value, text):
    assert format_json_number(value) == text
    assert canonical_json({"value": value, "nested": [value]}) == f'{{"value": {text}, "nested": [{text}]}}'
    assert json.loads(text) == value


def test_canonical_json_keeps_strings_and_integers():
    payload = {"t": "0.1", "samples": 16, "ok": True}
    assert canonical_json(payload) == '{"t": "0.1", "samples": 16, "ok": true}'


def test_canonical_json_pretty():
    assert canonical_json({"value": 0.75}, pretty=True) == '{\n  "value": 0.75\n}'


# ---------------------------------------------------------------------------
# CSV
# ---------------------------------------------------------------------------


def test_boundary_rows():
    rows = boundary_rows([BoundarySample(theta=0.0, support_value=0.75, boundary_point=0.75 + 0j)])
    assert rows == [("0.0", "0.75", "0.75", "0.0")]


def test_ft_trace_rows_mark_invalid_samples():
    scan = ft_scan(BlaschkeProduct((0.0, 0.5)), 0.1, samples=200)
    rows = ft_trace_rows(scan)
    assert len(rows) == 200
    first = rows[0]
    assert first[1] == "0"
    assert first[2:] == ("", "", "")
    valid = [row for row in rows if row[1] == "1"]
    assert valid
    assert all(row[4] for row in valid)


def test_write_csv():
    stream = io.StringIO()
    write_csv(stream, BOUNDARY_CSV_HEADER, [("0.0", "0.75", "0.75", "0.0")])
    assert stream.getvalue() == "theta,support_value,re,im\n0.0,0.75,0.75,0.0\n"


def test_write_csv_file(tmp_path):
    path = tmp_path / "trace.csv"
    write_csv_file(path, FT_TRACE_CSV_HEADER, [("0.5", "1", "0.0", "-0.1", "0.1")])
    assert path.read_text(encoding="utf-8").splitlines() == ["rho,valid,re,im,abs", "0.5,1,0.0,-0.1,0.1"]


def test_write_csv_file_missing_directory(tmp_path):
    with pytest.raises(OSError):
        write_csv_file(tmp_path / "missing" / "out.csv", BOUNDARY_CSV_HEADER, [])
