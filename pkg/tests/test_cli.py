from __future__ import annotations

import json

import pytest

from hgc.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, parse_primes, run


def out_json(capsys):
    return json.loads(capsys.readouterr().out)


def test_parse_primes():
    assert parse_primes("7..20") == [7, 11, 13, 17, 19]
    assert parse_primes("13,7, 11") == [7, 11, 13]
    with pytest.raises(ValueError):
        parse_primes("9")


def test_euler_golden(capsys):
    assert run(["euler", "--datum", "H1", "--p", "5"]) == EXIT_OK
    cap = capsys.readouterr()
    assert json.loads(cap.out) == [1, 36, 1390, 112500, 9765625]
    assert "-25" in cap.err


def test_euler_full_and_lambda(capsys):
    assert run(["euler", "--datum", "H5", "--p", "5", "--lambda", "-1"]) == EXIT_OK
    assert out_json(capsys) == [1, 21, 130, 3250, 328125, 9765625]


def test_profile(capsys, tmp_path):
    svg = tmp_path / "h1.svg"
    assert run(["profile", "--datum", "H1", "--p", "7", "--svg", str(svg)]) == EXIT_OK
    doc = out_json(capsys)
    assert (doc["s"], doc["w"], doc["connected"]) == (-1, 6, True)
    assert doc["bottom"] == [["1/6", "1/3"]]
    assert doc["t"] % 2 == 0
    assert svg.exists()


def test_truncate(capsys):
    assert run(["truncate", "--datum", "alpha=1/2,1/2; beta=1,1", "--m", "2"]) == EXIT_OK
    assert out_json(capsys)["value"] == "89/64"


def test_hp_methods_agree(capsys):
    vals = []
    for method in ("gamma", "general", "complex"):
        assert run(["hp", "--datum", "alpha=1/2,1/2,1/3,2/3; beta=1,1,1,1", "--p", "7", "--method", method]) == EXIT_OK
        vals.append(out_json(capsys)["value"])
    assert len(set(vals)) == 1


def test_verify_exit_codes(capsys, tmp_path):
    out = tmp_path / "r.json"
    assert run(["verify", "--catalog", "mortenson", "--primes", "7,11", "--out", str(out)]) == EXIT_OK
    rows = json.loads(out.read_text())
    assert [r["verdict"] for r in rows] == ["holds", "holds"]
    assert run(["verify", "--catalog", "4f3-f", "--primes", "7"]) == EXIT_FAIL


def test_sequences(capsys):
    assert run(["sequences", "--name", "A", "--primes", "7,11"]) == EXIT_OK
    assert out_json(capsys)["values"] == [30, 42]


def test_fixtures(capsys, tmp_path):
    assert run(["fixtures", "check"]) == EXIT_OK
    assert run(["fixtures", "check", "--dir", str(tmp_path)]) == EXIT_USAGE
    assert run(["fixtures", "fetch", "--labels", "8.4.1.a", "--dir", str(tmp_path)]) == EXIT_USAGE


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["bogus"])
    assert exc.value.code == EXIT_USAGE
    assert run(["euler", "--datum", "H1", "--p", "3"]) == EXIT_USAGE
    assert run(["euler", "--datum", "alpha=1/2", "--p", "5"]) == EXIT_USAGE
