import json
import subprocess
import sys

import pytest

from sympsing.cli import main
from sympsing.config import ConfigError, RunConfig, config_from_mapping, load_config, parse_config_text, parse_range
from sympsing.report import CheckResult, VerificationReport, check
from sympsing.suites import RANGE_KEYS, RUNNERS, SUITES, negative_controls


def run_cli(*args, env=None):
    return subprocess.run([sys.executable, "-m", "sympsing", *args], capture_output=True, text=True, env=env)


def test_gen_y5(capsys):
    assert main(["gen", "--kind", "Y", "--d", "5"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["counts"] == {"linear": 4, "quadratic": 10}
    assert len(out["relations"]) == 14


def test_gen_chart_needs_r(capsys):
    assert main(["gen", "--kind", "chart-Yr", "--d", "5"]) == 2
    assert main(["gen", "--kind", "chart-Yr", "--d", "5", "--r", "2"]) == 0


def test_verify_identities_exit_zero(capsys):
    assert main(["verify", "--suite", "identities", "--d", "4..10"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["summary"]["fail"] == 0 and rep["summary"]["pass"] > 0
    assert rep["config"]["ranges"]["identities"] == "4..10"


def test_d_below_four_is_a_usage_error():
    r = run_cli("verify", "--suite", "quiver", "--d", "3")
    assert r.returncode == 2
    assert "d must be >= 4" in r.stderr
    assert r.stdout == ""


def test_unknown_flag_is_a_usage_error():
    assert run_cli("verify", "--suite", "nope").returncode == 2
    assert run_cli("verify", "--bogus").returncode == 2


def test_malformed_config_prints_a_diagnostic(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    r = run_cli("quiver", "--config", str(bad))
    assert r.returncode == 2 and "malformed JSON config" in r.stderr
    kv = tmp_path / "bad.cfg"
    kv.write_text("series_N = twelve\n")
    r = run_cli("quiver", "--config", str(kv))
    assert r.returncode == 2 and "series_N" in r.stderr


def test_config_file_and_env_output(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# narrow run\nrange.quiver = 4..5\ntrials = 2\n")
    out = tmp_path / "report.json"
    env = {**__import__("os").environ, "SYMPSING_REPORT": str(out)}
    r = run_cli("quiver", "--config", str(cfg), env=env)
    assert r.returncode == 0, r.stderr
    rep = json.loads(out.read_text())
    assert rep["config"]["ranges"]["quiver"] == "4..5"
    assert rep["config"]["trials"] == 2
    assert "output" not in rep["config"]


def test_failure_gives_exit_one(monkeypatch, capsys):
    import sympsing.suites as suites

    def broken(cfg):
        rep = VerificationReport()
        rep.add(check("broken", {}, False, witness=[1]))
        return rep

    monkeypatch.setitem(suites.RUNNERS, "psi", broken)
    assert main(["verify", "--suite", "psi"]) == 1


def test_skipped_budget_does_not_fail(monkeypatch, capsys):
    import sympsing.suites as suites

    def slow(cfg):
        rep = VerificationReport()
        rep.add(CheckResult("slow", {}, "skipped-budget", details={"reason": "budget"}))
        return rep

    monkeypatch.setitem(suites.RUNNERS, "psi", slow)
    assert main(["verify", "--suite", "psi"]) == 0
    assert "skipped on budget" in capsys.readouterr().err


def test_time_budget_converts_to_skip():
    cfg = RunConfig(time_budget=0.001, ranges={**RunConfig().ranges, "quiver": (10, 10)})
    rep = RUNNERS["quiver"](cfg)
    assert rep.skipped and not rep.failures


def test_ranges_and_config_validation():
    assert parse_range("4..8") == (4, 8) and parse_range("6") == (6, 6)
    for bad in ("8..4", "x", "4..y"):
        with pytest.raises(ConfigError):
            parse_range(bad)
    with pytest.raises(ConfigError):
        RunConfig(trials=0)
    with pytest.raises(ConfigError):
        config_from_mapping({"nope": 1})
    assert parse_config_text('{"psi_N": 20}') == {"psi_N": 20}
    assert load_config(None, env={}).output is None


def test_failed_check_requires_a_witness():
    with pytest.raises(ValueError):
        CheckResult("x", {}, "fail")
    assert check("x", {}, False).witness


def test_every_suite_has_a_range_entry_and_controls():
    assert set(RUNNERS) == set(SUITES) == set(RANGE_KEYS)
    for name in SUITES:
        rep = negative_controls(name)
        assert rep.results and rep.all_passed, name


def test_check_ids_belong_to_one_suite():
    cfg = RunConfig(ranges={k: (4, 5) for k in RunConfig().ranges}, psi_N=10)
    owners = {}
    for name in SUITES:
        for r in RUNNERS[name](cfg).results:
            owners.setdefault(r.check_id, set()).add(name)
    shared = {k: v for k, v in owners.items() if len(v) > 1}
    assert not shared
