import json

import pytest

from kronlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_kron_example(capsys):
    code, out, _ = run_cli(capsys, "kron", "--lambda", "2,1", "--mu", "2,1", "--nu", "2,1", "--no-cache")
    assert code == 0
    assert out == "1\n"


def test_bcoeff_example(capsys):
    code, out, _ = run_cli(capsys, "bcoeff", "--alpha", "3", "--beta", "3", "--gamma", "3", "--no-cache")
    assert code == 0
    assert out == "-1597\n"


def test_bcoeff_hook_form(capsys):
    code, out, _ = run_cli(
        capsys, "bcoeff", "--alpha", "2", "--beta", "1", "--gamma", "1", "--form", "hook", "--no-cache"
    )
    assert code == 0
    assert out == "-25\n"


def test_reduced(capsys):
    code, out, _ = run_cli(capsys, "reduced", "--alpha", "1", "--beta", "1", "--gamma", "1", "--no-cache")
    assert code == 0
    assert out == "1\n"


def test_table_weight_zero(capsys):
    code, out, _ = run_cli(capsys, "table", "--max-weight", "0", "--format", "csv", "--no-cache")
    assert code == 0
    assert out.splitlines()[1] == "-,-,-,1,1,1"


def test_table_diff_fixture(capsys):
    code, out, _ = run_cli(capsys, "table", "--max-weight", "3", "--diff-fixture", "--no-cache")
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"] == 84
    assert payload["mismatches"] == []


def test_bounds_json(capsys):
    code, out, _ = run_cli(
        capsys, "bounds", "--alpha", "2,1", "--beta", "1,1", "--gamma", "1", "--no-cache"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["columnBounds"] == {"k1": 8, "k2": 6, "k3": 6}
    assert payload["rowBounds"]["k3"] == 10
    assert payload["sharp"] is True


def test_scan_json(capsys):
    code, out, err = run_cli(capsys, "scan-conjecture", "--max-weight", "2", "--no-cache")
    assert code == 0
    payload = json.loads(out)
    assert payload["maxWeight"] == 2
    assert payload["counterexamples"] == []
    assert payload["elapsed"] is None  # timing only goes to stderr / report
    assert "scanned" in err


def test_scan_jobs_match(capsys):
    _, single, _ = run_cli(capsys, "scan-conjecture", "--max-weight", "3", "--no-cache")
    _, double, _ = run_cli(capsys, "scan-conjecture", "--max-weight", "3", "--jobs", "2", "--no-cache")
    assert single == double


def test_stability_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "stability",
        "--lambda", "1", "--mu", "1", "--nu", "1",
        "--vector", "1,1,1,2",
        "--no-cache",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["inDom"] is True
    assert payload["semigroup"]["member"] is False
    assert payload["semigroup"]["coneMember"] is True
    assert payload["grownTriple"] == ["2,1", "2,1", "2,1"]


def test_malformed_partition_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["kron", "--lambda", "2,x", "--mu", "1", "--nu", "1", "--no-cache"])
    assert err.value.code == 2


def test_weight_mismatch_exits_2(capsys):
    code, _, err = run_cli(capsys, "kron", "--lambda", "2", "--mu", "1", "--nu", "1", "--no-cache")
    assert code == 2
    assert "error" in err


def test_resource_guard_exits_3(capsys):
    code, _, err = run_cli(
        capsys,
        "kron",
        "--lambda", "8,8", "--mu", "8,8", "--nu", "8,8",
        "--max-table-n", "10",
        "--no-cache",
    )
    assert code == 3
    assert "resource guard" in err


def test_deterministic_stdout(capsys):
    args = ("bcoeff", "--alpha", "2,1", "--beta", "2", "--gamma", "1", "--no-cache")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_cold_and_warm_cache_agree(tmp_path, capsys):
    cache = str(tmp_path / "cache")
    args = ("kron", "--lambda", "3,2", "--mu", "3,1,1", "--nu", "4,1", "--cache-dir", cache)
    _, cold, _ = run_cli(capsys, *args)
    assert (tmp_path / "cache" / "characters_n5.json").exists()
    _, warm, _ = run_cli(capsys, *args)
    assert cold == warm and cold.endswith("\n")


def test_dump_series(tmp_path, capsys):
    target = tmp_path / "series.json"
    code, out, _ = run_cli(
        capsys,
        "bcoeff",
        "--alpha", "1", "--beta", "1", "--gamma", "-",
        "--dump-series", str(target),
        "--no-cache",
    )
    assert code == 0
    payload = json.loads(target.read_text())
    # the series cache may hand back one with componentwise larger caps
    assert all(have >= want for have, want in zip(payload["caps"], [1, 1, 0]))
    assert payload["coefficients"]["-|-|-"] == "1"


def test_report_schema(tmp_path, capsys):
    report = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys,
        "kron",
        "--lambda", "2,1", "--mu", "2,1", "--nu", "2,1",
        "--report", str(report),
        "--no-cache",
    )
    assert code == 0
    payload = json.loads(report.read_text())
    assert set(payload) == {"command", "inputs", "outputs", "elapsed_ms", "cache", "version"}
    assert payload["command"] == "kron"
    assert payload["outputs"] == {"value": 1}
    assert set(payload["cache"]) == {"hits", "misses"}


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as err:
        main(["--version"])
    assert err.value.code == 0
