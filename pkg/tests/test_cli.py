"""Command-line dispatcher: exit codes, JSON output, round-trips."""

import json

import pytest

from conftest import FIXTURES
from permpack.cli import run


def run_json(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_build_tree(capsys):
    code, data = run_json(capsys, "build-tree", "--tree", "3,2")
    assert code == 0
    assert data["n"] == 5 and data["epsilon"] == [3, 4]
    assert data["num_vertices"] == 120


def test_verify_fixture_uniform(capsys):
    code, data = run_json(capsys, "verify", "--tree", "3,2", "--uniform",
                          str(FIXTURES / "x32_uniform_5_6.json"))
    assert code == 0
    assert data["valid"] and data["alpha"] == "5/6" and data["uniform"]


def test_verify_failure_exits_1(tmp_path, capsys):
    with open(FIXTURES / "x22_eset_5_6.json") as fh:
        cert = json.load(fh)
    cert["centers"][1] = cert["centers"][0][:2] + cert["centers"][0][:2][::-1]
    # overlapping spheres: tamper by duplicating a center's neighborhood
    cert["centers"][1] = "2134"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(cert))
    code = run(["verify", "--tree", "2,2", str(bad)])
    out = json.loads(capsys.readouterr().out)
    assert code == 1
    assert not out["valid"]


def test_usage_errors_exit_2(capsys, tmp_path):
    assert run(["verify", "--tree", "nonsense", "x.json"]) == 2
    assert run(["verify", "--tree", "2,2", str(tmp_path / "missing.json")]) == 2
    garbled = tmp_path / "garbled.json"
    garbled.write_text("{")
    assert run(["verify", "--tree", "2,2", str(garbled)]) == 2
    assert run(["no-such-command"]) == 2
    capsys.readouterr()


def test_search_eset_none_exhaustive(capsys):
    code, data = run_json(capsys, "search", "eset", "--tree", "2,2")
    assert code == 0
    assert data["status"] == "none_exhaustive"
    assert data["nodes_explored"] > 0


def test_search_maxpack(capsys):
    code, data = run_json(capsys, "search", "maxpack", "--tree", "2,2",
                          "--budget", "60s")
    assert code == 0
    assert data["status"] == "found"
    assert len(data["certificate"]["centers"]) == 5


def test_construct_verify_roundtrip(tmp_path, capsys):
    out_path = tmp_path / "cert.json"
    code = run(["construct", "uniform", "--tree", "3,2",
                "--structure", str(FIXTURES / "nest_g35.json"),
                "-o", str(out_path)])
    capsys.readouterr()
    assert code == 0
    emitted = json.loads(out_path.read_text())
    cert_path = tmp_path / "bare.json"
    cert_path.write_text(json.dumps(emitted["certificate"]))
    code, report = run_json(capsys, "verify", "--tree", "3,2", str(cert_path))
    assert code == 0 and report["valid"] and report["alpha"] == "5/6"


def test_construct_xprime(capsys):
    code, data = run_json(capsys, "construct", "xprime", "2")
    assert code == 0
    assert len(data["certificate"]["centers"]) == 4
    assert data["report"]["is_eset"]


def test_construct_nonuniform(capsys):
    code, data = run_json(capsys, "construct", "nonuniform", "3")
    assert code == 0
    assert data["achieved_alpha"] == "4/5"
    assert not data["shortfall"]


def test_johnson_expand_cc(capsys):
    code, data = run_json(capsys, "johnson", "expand-cc", "1,2,3,4,5", "3")
    assert code == 0
    assert data["found"] and data["exact"]
    assert len(data["structure"]["vertices"]) == 5


def test_johnson_exact_2factor_absent(capsys):
    code, data = run_json(capsys, "johnson", "exact-2factor", "6", "4")
    assert code == 0
    assert data == {"found": False}


def test_johnson_alternate(capsys):
    code, data = run_json(capsys, "johnson", "alternate", "1123", "2113", "7")
    assert code == 0
    assert data["found"] and len(data["structure"]["vertices"]) == 14


def test_johnson_validate_nest(tmp_path, capsys):
    code, data = run_json(capsys, "johnson", "validate-nest", "5", "3",
                          str(FIXTURES / "nest_g35.json"))
    assert code == 0 and data["valid"]


def test_tables_tsv(capsys):
    code = run(["tables", "3"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("r\t")
    assert lines[1].split("\t")[:5] == ["2", "6", "4/1", "0", "2/3"]
    assert lines[2].split("\t")[:5] == ["3", "20", "16/1", "12", "4/5"]


def test_tables_json(capsys):
    code, data = run_json(capsys, "tables", "3", "--format", "json")
    assert code == 0
    assert data[1]["alpha"] == "4/5" and data[1]["T"] == [8, 12]
