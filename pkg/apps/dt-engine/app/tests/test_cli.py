from __future__ import annotations

import json
from pathlib import Path

import pytest

from app import cli
from app.utils.config import load_config
from app.workflows.dt_invariants import Comparison, IndependenceReport
from app.workflows.green_engine import SelfDualityViolated


@pytest.fixture(autouse=True)
def _reset_config_cache():
    load_config.cache_clear()
    yield
    load_config.cache_clear()


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_build_parser_uses_config_defaults(monkeypatch):
    monkeypatch.setenv("DT_BUDGET", "77")
    load_config.cache_clear()

    args = cli.build_parser().parse_args(["run", "a2.json", "a2_long.json"])

    assert args.budget == 77
    assert args.json is False


def test_mutate_three_cycle(capsys):
    code = cli.run(["mutate", "cycle3.json", "1"])

    assert code == cli.EXIT_OK
    assert capsys.readouterr().out.strip() == '{"arrows": [[1, 2, 1], [3, 1, 1]], "vertices": 3}'


def test_mutate_twice_is_identity(capsys):
    code = cli.run(["mutate", "a2.json", "1,1"])

    assert code == 0
    assert _json(capsys) == {"arrows": [[1, 2, 1]], "vertices": 2}


def test_mutate_bad_vertex(capsys):
    code = cli.run(["mutate", "a2.json", "3"])

    assert code == cli.EXIT_INVALID
    assert "vertex out of range" in capsys.readouterr().err


def test_run_human_table(capsys):
    code = cli.run(["run", "a2.json", "a2_long.json"])
    out = capsys.readouterr().out.splitlines()

    assert code == 0
    assert out[1].split() == ["1", "2", "(0,1)", "0.750000"]
    assert out[3].split() == ["3", "2", "(1,0)", "0.250000"]
    assert out[-1] == "permutation: 2 1"


def test_run_json_transcript(capsys):
    code = cli.run(["run", "a2.json", "a2_short.json", "--json"])
    payload = _json(capsys)

    assert code == 0
    assert payload["status"] == "maximal"
    assert [s["class"] for s in payload["steps"]] == [[1, 0], [0, 1]]
    assert payload["permutation"] == [1, 2]


def test_run_budget_exceeded(capsys):
    code = cli.run(["run", "kronecker.json", "kronecker_divergent.json", "--budget", "50", "--json"])
    payload = _json(capsys)

    assert code == cli.EXIT_BUDGET
    assert payload["status"] == "budget_exceeded"
    assert len(payload["steps"]) == 50


def test_run_nondiscrete(capsys):
    code = cli.run(["run", "a2.json", "a2_tie.json"])

    assert code == cli.EXIT_NONDISCRETE
    assert capsys.readouterr().err.startswith("error:")


def test_dt_single_vertex(capsys):
    code = cli.run(["dt", "one_vertex.json", "one_vertex_charge.json", "--degree", "3"])
    payload = _json(capsys)

    assert code == 0
    assert payload["degree"] == 3
    assert len(payload["terms"]) == 4


def test_dt_infinite_spectrum(capsys):
    code = cli.run(["dt", "kronecker.json", "kronecker_divergent.json", "--budget", "20"])

    assert code == cli.EXIT_BUDGET


def test_check_pentagon(capsys):
    code = cli.run(["check", "a2.json", "a2_long.json", "a2_short.json", "--degree", "12"])
    out = capsys.readouterr().out

    assert code == 0
    assert '"equal": true' in out


def test_check_exit_code_when_series_differ(monkeypatch, capsys):
    def fake_check(quiver, charges, degree, budget):
        return IndependenceReport(results=[], comparisons=[Comparison(0, 1, False)])

    monkeypatch.setattr(cli, "check_independence", fake_check)

    code = cli.run(["check", "a2.json", "a2_long.json", "a2_short.json"])

    assert code == cli.EXIT_UNEQUAL


def test_check_notes_when_nothing_was_compared(capsys):
    code = cli.run([
        "check",
        "kronecker.json",
        "kronecker_divergent.json",
        "kronecker_divergent.json",
        "--budget",
        "20",
    ])
    captured = capsys.readouterr()

    assert code == cli.EXIT_OK
    assert json.loads(captured.out)["comparisons"] == []
    assert "note: nothing compared, 0 of 2 charges" in captured.err


def test_check_with_comparisons_prints_no_note(capsys):
    cli.run(["check", "a2.json", "a2_long.json", "a2_short.json"])

    assert "note:" not in capsys.readouterr().err


def test_engine_guard_failure_has_its_own_exit_code(monkeypatch, capsys):
    def broken_check(run):
        raise SelfDualityViolated("final quiver is not a relabeling")

    monkeypatch.setattr(cli, "self_duality_check", broken_check)

    code = cli.run(["run", "a2.json", "a2_long.json"])

    assert code == cli.EXIT_ENGINE
    assert code not in (cli.EXIT_OK, cli.EXIT_UNEQUAL, cli.EXIT_NONDISCRETE, cli.EXIT_BUDGET, cli.EXIT_INVALID)
    assert "error: final quiver is not a relabeling" in capsys.readouterr().err


def test_check_needs_two_charges(capsys):
    assert cli.run(["check", "a2.json", "a2_long.json"]) == cli.EXIT_INVALID


def test_enumerate_a2(capsys):
    code = cli.run(["enumerate", "a2.json"])

    assert code == 0
    assert capsys.readouterr().out.splitlines() == ["1 2", "2 1 2"]


def test_enumerate_partial(capsys):
    code = cli.run(["enumerate", "a3.json", "--node-budget", "3", "--json"])
    payload = _json(capsys)

    assert code == cli.EXIT_BUDGET
    assert payload["partial"] is True


def test_oracle(capsys):
    code = cli.run(["oracle", "2", "a2_long.json"])

    assert code == 0
    assert _json(capsys)["classes"] == [[0, 1], [1, 1], [1, 0]]


def test_sweep_is_seeded(capsys):
    first = cli.run(["sweep", "a3.json", "--samples", "3", "--seed", "5", "--degree", "4"])
    first_out = _json(capsys)
    second = cli.run(["sweep", "a3.json", "--samples", "3", "--seed", "5", "--degree", "4"])
    second_out = _json(capsys)

    assert first == second == 0
    assert first_out == second_out
    assert first_out["seed"] == 5
    assert len(first_out["charges"]) == 3


def test_malformed_quiver_file(tmp_path: Path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": 2, "arrows": [[1, 1]]}', encoding="utf-8")

    assert cli.run(["mutate", str(bad)]) == cli.EXIT_INVALID
    assert "loop" in capsys.readouterr().err


def test_missing_file(capsys):
    assert cli.run(["mutate", "does-not-exist.json"]) == cli.EXIT_INVALID


def test_invalid_budget_flag(capsys):
    assert cli.run(["run", "a2.json", "a2_long.json", "--budget", "0"]) == cli.EXIT_INVALID


def test_log_level_flag(capsys):
    assert cli.run(["--log-level", "debug", "enumerate", "a2.json"]) == 0
    cli.run(["--log-level", "warning", "mutate", "a2.json"])
