import csv
import io
import json

import pytest

from zil import __version__
from zil.cli import CSV_COLUMNS, CliConfig, main, parse_config
from zil.numkernel import ConfigurationError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_verify_passing_entry(capsys):
    code, out, _ = run(capsys, "verify", "--id", "E6.28", "--digits", "30")
    assert code == 0
    assert out.startswith("E6.28")


def test_unknown_id_exit_2(capsys):
    code, _, err = run(capsys, "verify", "--id", "NOPE")
    assert code == 2
    assert "NOPE" in err


def test_bad_digits_exit_2(capsys):
    code, _, err = run(capsys, "verify", "--id", "E6.28", "--digits", "8")
    assert code == 2


def test_bad_env_digits(monkeypatch, capsys):
    monkeypatch.setenv("ZIL_DIGITS", "x")
    assert main(["verify", "--id", "E6.28"]) == 2


def test_env_digits(monkeypatch):
    monkeypatch.setenv("ZIL_DIGITS", "33")
    assert parse_config(["list"]).digits == 33


def test_failing_proven_exit_1(capsys):
    code, out, _ = run(capsys, "verify", "--id", "E6.30i", "--digits", "30")
    assert code == 1
    assert " fail " in out


def test_conjecture_and_adjudication_exit_0(capsys):
    code, _, _ = run(capsys, "verify", "--id", "C-8.61", "--id", "A-6.135", "--digits", "30")
    assert code == 0


def test_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--id", "E6.28", "--id", "A-6.135", "--format", "json", "--digits", "30")
    data = json.loads(out)
    assert code == 0
    assert set(data) == {"tool_version", "digits", "results", "summary"}
    assert data["digits"] == 30
    assert data["summary"] == {"pass": 1, "fail": 0, "adjudicated": 1, "conjectures": 0}
    row = data["results"][0]
    for key in ("id", "section", "status", "anchor", "lhs", "rhs", "abs_err", "rel_err", "verdict", "elapsed"):
        assert key in row
    assert float(row["lhs"]) == pytest.approx(1.8319311883544380301)
    claims = data["results"][1]["claims"]
    assert [c["classification"] for c in claims] == ["inconsistent", "consistent"]


def test_csv_columns(capsys):
    code, out, _ = run(capsys, "verify", "--section", "S7", "--format", "csv", "--digits", "20")
    rows = list(csv.reader(io.StringIO(out)))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert [r[0] for r in rows[1:]] == ["E7.5", "E7.8", "E7.17"]


def test_list_section(capsys):
    code, out, _ = run(capsys, "list", "--section", "S7")
    assert code == 0
    assert len(out.strip().splitlines()) == 3


def test_out_file(tmp_path, capsys):
    path = tmp_path / "r.json"
    assert main(["verify", "--id", "E7.5", "--digits", "20", "--format", "json", "--out", str(path)]) == 0
    assert json.loads(path.read_text())["results"][0]["id"] == "E7.5"
    assert capsys.readouterr().out == ""


def test_config_validation():
    with pytest.raises(ConfigurationError):
        CliConfig("verify", jobs=0)
    with pytest.raises(ConfigurationError):
        CliConfig("verify", fmt="xml")


def test_exact_entry_serializes(capsys):
    code, out, _ = run(capsys, "verify", "--id", "E8.11d", "--format", "json", "--digits", "20")
    row = json.loads(out)["results"][0]
    assert code == 0 and row["verdict"] == "pass"
    assert row["points"][1]["lhs"].startswith("0.6666666666")
