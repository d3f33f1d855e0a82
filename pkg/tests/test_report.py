import csv
import io
import json

import pytest

from fracweyl.chains import ExternalTable, SearchBounds, corner_cases_upto, search_min_chain
from fracweyl.report import emit_report


def corner_results():
    table = ExternalTable.bundled()
    cases = [c.to_json() for group in corner_cases_upto(14, table).values() for c in group]
    return {"kind": "corner_table", "cases": cases}


def test_corner_table_six_rows():
    md = emit_report(corner_results(), "markdown").strip().splitlines()
    assert len(md) == 2 + 6
    rows = list(csv.reader(io.StringIO(emit_report(corner_results(), "csv"))))
    assert len(rows) == 1 + 6
    assert {(r[0], r[1]) for r in rows[1:]} == {("3", "9"), ("4", "8"), ("6", "8"),
                                                ("4", "10"), ("3", "6"), ("4", "6")}


def test_no_survivors_row():
    cert = search_min_chain(SearchBounds(3, 4, 4, 3)).to_json()
    cert["kind"] = "search_certificate"
    assert "no survivors" in emit_report(cert, "markdown")
    assert "no survivors" in emit_report(cert, "csv")


def test_json_is_lossless():
    cert = search_min_chain(SearchBounds(10, 6, 6, 3)).to_json()
    assert json.loads(emit_report(cert, "json")) == cert
    assert json.loads(emit_report(corner_results(), "json")) == corner_results()


def test_unknown_format():
    with pytest.raises(ValueError):
        emit_report({}, "xml")
