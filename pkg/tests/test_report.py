import json

import pytest

from veronese.report import Report, emit_report
from veronese.runner import RunConfig, dispatch


def test_empty_report_is_meta_only():
    out = emit_report(Report({"q": 2}))
    assert out == b'{"meta":{"q":2}}\n'


def test_large_integers_become_strings():
    R = Report({"q": 2}, {"value": [2 ** 53, 2 ** 53 + 1, -(2 ** 60)]})
    d = json.loads(emit_report(R))
    assert d["value"] == [2 ** 53, str(2 ** 53 + 1), str(-(2 ** 60))]


def test_word_count_check_is_exact_string():
    d = json.loads(emit_report(dispatch(RunConfig("verify", q=4))))
    check = next(c for c in d["verification"]["checks"] if c["name"] == "gwp.word_count.m6")
    assert check["expected"] == check["got"] == str(4 ** 36)


def test_q2_spectra_contains_top_entry():
    d = json.loads(emit_report(dispatch(RunConfig("spectra", q=2))))
    assert {"r": 6, "w": 7, "count": 1} in d["spectra"]
    assert len(d["spectra"]) == 19


def test_keys_sorted_and_meta_complete():
    raw = emit_report(dispatch(RunConfig("betti", q=3, options={"level": 1})))
    d = json.loads(raw)
    assert list(d) == sorted(d)
    assert set(d["meta"]) == {"q", "n", "k", "modulus", "point_order_hash", "version"}
    assert d["betti"][0]["level"] == 1
    assert raw == json.dumps(d, sort_keys=True, separators=(",", ":")).encode() + b"\n"


@pytest.mark.parametrize("command", ["census", "betti", "gwp", "spectra", "verify", "reference"])
def test_byte_identical_across_runs_and_threads(command):
    a = emit_report(dispatch(RunConfig(command, q=3, threads=1)))
    b = emit_report(dispatch(RunConfig(command, q=3, threads=4)))
    assert a == b


def test_csv_and_table_render():
    R = dispatch(RunConfig("spectra", q=2, options={"check": ("formulas",)}))
    csv = emit_report(R, "csv").decode()
    assert "# spectra" in csv and "count,r,w" in csv and "# verification.checks" in csv
    table = emit_report(R, "table").decode()
    assert "[spectra]" in table and "q=2" in table
    with pytest.raises(ValueError):
        emit_report(R, "xml")


def test_generator_export():
    d = json.loads(emit_report(dispatch(RunConfig("generator", q=2))))
    g = d["generator"]
    assert len(g["rows"]) == 6 and len(g["points"]) == 7 and g["monomials"][0] == "x^2"


@pytest.mark.parametrize("q,alt", [(8, (1, 0, 1, 1)), (9, (2, 1, 1))])
def test_modulus_independence(q, alt):
    a = json.loads(emit_report(dispatch(RunConfig("verify", q=q))))
    b = json.loads(emit_report(dispatch(RunConfig("verify", q=q, modulus=alt))))
    assert a["meta"].pop("modulus") != b["meta"].pop("modulus")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
