import json
from importlib import resources

import pytest

from symring.cli import main


def data_file(group, name):
    return str(resources.files("symring") / "data" / group / name)


def test_hilbert_verify_pass(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["hilbert-verify", "--n", "3", "--mode", "both", "--out", str(out)])
    assert code == 0
    text = capsys.readouterr().out
    assert "PASS" in text
    report = json.loads(out.read_text())
    assert report["pass"] and report["n"] == 3
    assert len(report["checks"]) == 6  # 2 generators x 3 basis elements
    assert report["dims"] == [1, 1, 1]


def test_hilbert_verify_degenerate_n1(tmp_path):
    out = tmp_path / "r.json"
    assert main(["hilbert-verify", "--n", "1", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["pass"] and report["checks"] == [] and report["dims"] == [1]


def test_hilbert_verify_refuses_large_n(capsys):
    code = main(["hilbert-verify", "--n", "9"])
    assert code == 2
    assert "refused" in capsys.readouterr().err


def test_hilbert_verify_cache_dir(tmp_path):
    cache = tmp_path / "cache"
    code = main(
        ["hilbert-verify", "--n", "3", "--mode", "oracle",
         "--cache-dir", str(cache), "--out", str(tmp_path / "r.json")]
    )
    assert code == 0
    assert any(cache.glob("structure_constants_n3.json"))


def test_hilbert_table(capsys):
    assert main(["hilbert-table", "--n-max", "4"]) == 0
    rows = capsys.readouterr().out.strip().split("\n")
    assert rows[0].split("\t") == ["1", "1"]
    assert rows[2].split("\t") == ["3", "1", "1", "1"]
    assert rows[3].split("\t") == ["4", "1", "1", "2", "1"]


def test_hilbert_table_cap(capsys):
    assert main(["hilbert-table", "--n-max", "13"]) == 2


def test_spaltenstein_verify(tmp_path, capsys):
    out = tmp_path / "r.json"
    code = main(
        ["spaltenstein-verify", "--file", data_file("spaltenstein", "springer_p1.json"),
         "--out", str(out)]
    )
    assert code == 0
    report = json.loads(out.read_text())
    assert report["pass"] and report["dims"] == [1, 1]


def test_spaltenstein_verify_flag3(tmp_path):
    out = tmp_path / "r.json"
    code = main(
        ["spaltenstein-verify", "--file", data_file("spaltenstein", "flag3.json"),
         "--out", str(out)]
    )
    assert code == 0
    assert json.loads(out.read_text())["dims"] == [1, 2, 2, 1]


def test_hypertoric_verify(tmp_path, capsys):
    out = tmp_path / "r.json"
    code = main(
        ["hypertoric-verify", "--file", data_file("hypertoric", "tp1.json"),
         "--out", str(out)]
    )
    assert code == 0
    report = json.loads(out.read_text())
    assert report["pass"] and report["dims"] == [1, 1]


def test_malformed_json_is_usage_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["hypertoric-verify", "--file", str(bad)]) == 2
    assert main(["spaltenstein-verify", "--file", str(bad)]) == 2


def test_wrong_schema_is_usage_error(tmp_path):
    f = tmp_path / "wrong.json"
    f.write_text(json.dumps({"n": 2, "lambda": [2, 0]}))  # missing mu
    assert main(["spaltenstein-verify", "--file", str(f)]) == 2


def test_missing_file_is_usage_error():
    assert main(["hypertoric-verify", "--file", "/nonexistent/x.json"]) == 2


def test_usage_error_exit_code_from_argparse():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_reports_are_byte_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        assert main(["hilbert-verify", "--n", "4", "--out", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()
    c, d = tmp_path / "c.json", tmp_path / "d.json"
    for out in (c, d):
        assert (
            main(["hypertoric-verify", "--file", data_file("hypertoric", "tp2.json"),
                  "--seed", "7", "--out", str(out)]) == 0
        )
    assert c.read_bytes() == d.read_bytes()


def test_verification_failure_exit_code(tmp_path):
    # a non-unimodular configuration fails the gate: exit 1, not 2
    f = tmp_path / "cfg.json"
    f.write_text(json.dumps({"vectors": [[1, 0], [0, 1], [1, 1], [1, -1]]}))
    assert main(["hypertoric-verify", "--file", str(f)]) == 1


def test_spaltenstein_refuses_large_n(tmp_path, capsys):
    f = tmp_path / "big.json"
    f.write_text(json.dumps({"n": 5, "lambda": [5, 0, 0, 0, 0], "mu": [1, 1, 1, 1, 1]}))
    assert main(["spaltenstein-verify", "--file", str(f)]) == 2
    assert "refused" in capsys.readouterr().err
