"""Command-line behavior: subcommands, formats, exit codes, determinism."""

import json

import pytest

from psiring import cli


def run(args, capsysbinary):
    code = cli.main(args)
    out = capsysbinary.readouterr().out
    return code, out


def run_json(args, capsysbinary):
    code, out = run(args + ["--format", "json"], capsysbinary)
    return code, json.loads(out)


def test_presentation_dump(capsysbinary):
    code, d = run_json(["presentation", "dump", "--n", "4"], capsysbinary)
    assert code == 0
    assert d["overall"] == "pass"
    assert d["payload"]["relation_count"] == 6
    assert len(d["payload"]["variables"]) == 8


def test_hilbert_lee_three_points_all_ones(capsysbinary):
    code, out = run(["hilbert", "lee", "--n", "3", "--max-total", "4",
                     "--format", "csv"], capsysbinary)
    assert code == 0
    rows = [l for l in out.decode().splitlines()
            if l and not l.startswith("#") and not l.startswith("a[")]
    assert len(rows) == 35
    assert all(r.rsplit(",", 1)[1] == "1" for r in rows)


def test_hilbert_verify_emits_anchor_checks(capsysbinary):
    code, d = run_json(["hilbert", "verify", "--n", "4", "--max-total", "3"], capsysbinary)
    assert code == 0
    names = {c["name"] for c in d["checks"]}
    assert {"slice-vs-series", "series-anchor-e", "series-anchor-pair",
            "curve-module-factorization"} <= names
    assert d["overall"] == "pass"


def test_hilbert_brute_table_shape(capsysbinary):
    code, d = run_json(["hilbert", "brute", "--n", "4", "--max-total", "2"], capsysbinary)
    assert code == 0
    t = d["tables"]["dimensions"]
    assert len(t["rows"]) == 15
    assert t["columns"][-1] == "method"


def test_conifold_verify(capsysbinary):
    code, d = run_json(["hilbert", "verify", "--kind", "bnm", "--n", "2",
                        "--m", "2", "--max-total", "5"], capsysbinary)
    assert code == 0
    assert "conifold-coefficients" in {c["name"] for c in d["checks"]}


def test_gb_run(capsysbinary):
    code, d = run_json(["gb", "run", "--n", "4"], capsysbinary)
    assert code == 0
    assert d["payload"]["basis_size"] == 6
    names = {c["name"] for c in d["checks"]}
    assert "krull-dimension" in names and "groebner-cross-field" in names


def test_gb_capped_run_skips_krull(capsysbinary):
    code, d = run_json(["gb", "run", "--n", "4", "--cap", "2"], capsysbinary)
    assert code == 0
    assert d["payload"]["complete"] is False
    assert "krull-dimension" not in {c["name"] for c in d["checks"]}


def test_koszul_command(capsysbinary):
    code, d = run_json(["koszul", "--n", "4", "--kmax", "3"], capsysbinary)
    assert code == 0
    assert d["payload"]["tower"] == [1, 8, 34, 112]
    assert d["payload"]["verdict"] == "match"


def test_koszul_budget_refusal_exit_code(capsys):
    code = cli.main(["koszul", "--n", "5", "--kmax", "4"])
    assert code == 2
    err = capsys.readouterr().err
    assert "refused" in err


def test_sample_command(capsysbinary):
    code, d = run_json(["sample", "--n", "4", "--count", "5"], capsysbinary)
    assert code == 0
    assert len(d["payload"]["points"]) == 5
    assert {c["status"] for c in d["checks"]} == {"pass"}


def test_singular_command(capsysbinary):
    code, d = run_json(["singular", "--n", "4"], capsysbinary)
    assert code == 0
    assert d["payload"]["singular_dim"] == 0


def test_verify_theorem_a(capsysbinary):
    code, d = run_json(["verify-theorem-a", "--n", "4", "--max-total", "4"], capsysbinary)
    assert code == 0
    names = [c["name"] for c in d["checks"]]
    assert "groebner-slice-agreement" in names
    assert d["config"]["subcommand"] == "verify-theorem-a"


@pytest.mark.parametrize("argv", [
    ["hilbert", "lee", "--n", "2", "--kind", "an"],
    ["hilbert", "lee", "--n", "4", "--max-total", "-1"],
    ["presentation", "dump", "--n", "4", "--m", "1"],
    ["presentation", "dump", "--n", "4", "--pivot", "spiral"],
    ["koszul", "--kind", "bnm", "--n", "3", "--m", "1"],
    ["sample", "--n", "4", "--count", "0"],
    ["gb", "run", "--n", "4", "--field", "galois"],
    ["verify-theorem-a", "--kind", "bnm", "--n", "3", "--m", "1"],
])
def test_usage_errors_exit_two(argv, capsys):
    assert cli.main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_math_failure_exits_one(monkeypatch, capsysbinary):
    # force a wrong dimension through the krull hook: the report must fail
    monkeypatch.setattr(cli, "krull_dimension", lambda gb: -99)
    code, d = run_json(["gb", "run", "--n", "4"], capsysbinary)
    assert code == 1
    assert d["overall"] == "fail"


def test_out_writes_file(tmp_path, capsysbinary):
    target = tmp_path / "r.json"
    code = cli.main(["presentation", "dump", "--n", "4", "--out", str(target),
                     "--format", "json"])
    assert code == 0
    assert capsysbinary.readouterr().out == b""
    assert json.loads(target.read_text())["overall"] == "pass"


def test_thread_count_does_not_change_bytes(capsysbinary):
    outs = []
    for t in ("1", "8"):
        _, out = run(["sample", "--n", "5", "--count", "8", "--threads", t,
                      "--format", "json"], capsysbinary)
        outs.append(out)
    assert outs[0] == outs[1]
    outs = []
    for t in ("1", "8"):
        _, out = run(["hilbert", "verify", "--n", "4", "--max-total", "4",
                      "--threads", t, "--format", "csv"], capsysbinary)
        outs.append(out)
    assert outs[0] == outs[1]


def test_seed_changes_sample_payload(capsysbinary):
    _, d1 = run_json(["sample", "--n", "4", "--count", "3", "--seed", "1"], capsysbinary)
    _, d2 = run_json(["sample", "--n", "4", "--count", "3", "--seed", "2"], capsysbinary)
    assert d1["payload"] != d2["payload"]
    _, d3 = run_json(["sample", "--n", "4", "--count", "3", "--seed", "1"], capsysbinary)
    assert d1["payload"] == d3["payload"]


def test_timings_are_opt_in(capsysbinary):
    _, d = run_json(["hilbert", "lee", "--n", "4", "--max-total", "2"], capsysbinary)
    assert "timings" not in d
    _, d = run_json(["hilbert", "lee", "--n", "4", "--max-total", "2",
                     "--timings"], capsysbinary)
    assert d["timings"]


def test_console_script_installed():
    import shutil
    assert shutil.which("psiring")
