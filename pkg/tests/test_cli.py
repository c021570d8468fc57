import json

import pytest

from yokonuma import cache
from yokonuma.cli import LimitExceeded, SessionConfig, UsageError, main
from yokonuma.scalars import Specialization


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dim_examples(capsys):
    code, out, _ = run(capsys, "dim", "--r", "2", "--n", "2", "--no-cache")
    data = json.loads(out)
    assert code == 0
    assert data["Y"] == 8 and data["YS"] == 11
    assert data["specht_modules"] == {"2 | -": 1, "1,1 | -": 1, "1 | 1": 2, "- | 2": 1, "- | 1,1": 1}
    assert data["permutation_modules"]["1 | 1"] == 2
    code, out, _ = run(capsys, "dim", "--r", "1", "--n", "0", "--no-cache")
    assert json.loads(out)["Y"] == 1 and json.loads(out)["extended_YS"] == 4


def test_dim_text_output(capsys):
    code, out, _ = run(capsys, "dim", "--r", "1", "--n", "2", "--format", "text", "--no-cache")
    assert code == 0 and "dim YS = 5" in out


def test_unknown_check_is_a_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--r", "1", "--n", "2", "no-such-check")
    assert code == 2 and "no-such-check" in err


def test_bad_arguments(capsys):
    assert run(capsys, "dim", "--r", "0", "--n", "2")[0] == 2
    assert run(capsys, "dim", "--n", "2")[0] == 2
    assert run(capsys, "dim", "--r", "2", "--n", "2", "--spec", "x")[0] == 2
    assert run(capsys, "dim", "--r", "2", "--n", "2", "--spec", "4", "--ambient-order", "6")[0] == 2
    assert run(capsys, "gram", "--r", "2", "--n", "2", "--shape", "[[1]]")[0] == 2


def test_limit(capsys):
    code, _, err = run(capsys, "dim", "--r", "3", "--n", "5")
    assert code == 2 and "limit" in err
    with pytest.raises(LimitExceeded):
        SessionConfig(3, 5)
    assert SessionConfig(3, 5, limit=10**6).r == 3


def test_session_config_ambient_order():
    cfg = SessionConfig(2, 2, specializations=[Specialization(3)])
    assert cfg.ambient_order == 6
    assert cfg.specializations[0].ambient == 6
    with pytest.raises(UsageError):
        SessionConfig(2, 2, ambient_order=3)


def test_verify_reports(capsys):
    code, out, _ = run(capsys, "verify", "--r", "1", "--n", "2", "algebra-rank", "schur-dimension")
    data = json.loads(out)
    assert code == 0
    assert {d["name"] for d in data} == {"algebra-rank", "schur-dimension"}
    assert all(d["status"] == "pass" and "elapsed" not in d for d in data)


def test_verify_is_byte_deterministic(capsys):
    argv = ("verify", "--r", "1", "--n", "2", "--spec", "generic", "--spec", "4", "weyl-modules", "decomposition-matrix")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_checks_lists_descriptions(capsys):
    code, out, _ = run(capsys, "checks")
    assert code == 0
    lines = out.strip().splitlines()
    assert any(line.startswith("algebra-rank: ") for line in lines)
    assert len(lines) >= 30


def test_gram(capsys):
    code, out, _ = run(capsys, "gram", "--r", "1", "--n", "2", "--shape", "[[2]]", "--spec", "generic", "--spec", "4")
    data = json.loads(out)
    assert code == 0
    assert [d["radical_dim"] for d in data] == [0, 1]


def test_decomp_at_a_fourth_root(capsys):
    code, out, _ = run(capsys, "decomp", "--r", "1", "--n", "2", "--spec", "4")
    (entry,) = json.loads(out)
    assert code == 0 and entry["e"] == 2
    assert entry["schur_side"] == [[1, 1], [0, 1]]
    assert entry["hecke_side"] == [[1], [1]]


def test_schur_cache_round_trip(capsys, tmp_path):
    argv = ("schur", "--r", "1", "--n", "2", "--cache-dir", str(tmp_path))
    code, out, _ = run(capsys, *argv)
    first = json.loads(out)
    assert code == 0 and first["cache_hit"] is False
    assert len(list(tmp_path.glob("schur-*.json"))) == 1
    code, out, _ = run(capsys, *argv)
    second = json.loads(out)
    assert second["cache_hit"] is True and second["constants"] == first["constants"]


def test_corrupt_cache_is_recomputed(capsys, tmp_path):
    argv = ("schur", "--r", "1", "--n", "2", "--cache-dir", str(tmp_path))
    run(capsys, *argv)
    (path,) = tmp_path.glob("schur-*.json")
    path.write_text("{not json")
    code, out, _ = run(capsys, *argv)
    assert code == 0 and json.loads(out)["cache_hit"] is False
    assert json.loads(path.read_text())["key"]["format"] == cache.FORMAT_VERSION


def test_cache_dir_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    assert cache.default_dir() == tmp_path


def test_out_file(capsys, tmp_path):
    target = tmp_path / "dims.json"
    code, out, _ = run(capsys, "dim", "--r", "1", "--n", "2", "--no-cache", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["YS"] == 5


def test_tilting_report(capsys):
    code, out, _ = run(capsys, "tilting", "--r", "1", "--n", "2", "--no-cache")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 2
    assert all(row["theta_basis"] and row["theta_prime_basis"] for row in rows)
