"""Tests for the command-line interface."""

import json

import pytest

from qauth.cli import (
    DEFAULT_SEED,
    EXIT_CONFIG,
    EXIT_OK,
    main,
    resolve_code,
)
from qauth.cli import ConfigError


def run_cli(*argv):
    return main(list(argv))


class TestResolveCode:
    def test_builtins(self):
        assert resolve_code("rep3").n == 3
        assert resolve_code("rep5").t == 2
        assert resolve_code("hamming74").m == 4

    def test_bch_shorthand(self):
        code = resolve_code("bch-63-18")
        assert (code.n, code.m, code.t) == (63, 18, 10)

    def test_bch_explicit_t(self):
        code = resolve_code("bch-15-7-2")
        assert (code.n, code.m, code.t) == (15, 7, 2)

    def test_unknown_selector(self):
        with pytest.raises(ConfigError):
            resolve_code("fountain-code")

    def test_unknown_bch_shorthand(self):
        with pytest.raises(ConfigError):
            resolve_code("bch-63-20")

    def test_spec_file(self, tmp_path):
        path = tmp_path / "spec.json"
        resolve_code("hamming74").save_spec(path)
        code = resolve_code(str(path))
        assert (code.n, code.m, code.t) == (7, 4, 1)


class TestCodeBuild:
    def test_bch_kv_style(self, capsys, tmp_path):
        out = tmp_path / "c.json"
        rc = run_cli("code", "build", "--bch", "w=6", "t=10", "--out", str(out))
        assert rc == EXIT_OK
        assert "n=63 m=18 t=10" in capsys.readouterr().out
        spec = json.loads(out.read_text())
        assert spec["n"] == 63 and spec["m"] == 18

    def test_bch_plain_style(self, capsys):
        assert run_cli("code", "build", "--bch", "7", "23") == EXIT_OK
        assert "n=127 m=22 t=23" in capsys.readouterr().out

    def test_repetition(self, capsys):
        assert run_cli("code", "build", "--repetition", "3") == EXIT_OK
        assert "n=3 m=1 t=1" in capsys.readouterr().out

    def test_missing_choice_is_config_error(self, capsys):
        assert run_cli("code", "build") == EXIT_CONFIG

    def test_bad_bch_params(self, capsys):
        assert run_cli("code", "build", "--bch", "w=9", "t=1") == EXIT_CONFIG


class TestAnalyticsTable:
    def test_csv_single_code(self, capsys):
        rc = run_cli("analytics", "table", "--code", "rep3")
        assert rc == EXIT_OK
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "code,n,m,t,p_f,p_dec,p_f_prime,key_overhead"
        assert "rep3,3,1,1,4.2e-01,8.4e-01,6.6e-01,3.00" in out

    def test_json_exact(self, capsys):
        rc = run_cli(
            "analytics", "table", "--code", "rep3", "--format", "json", "--exact"
        )
        assert rc == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["schema_version"] == 1
        row = report["results"][0]
        assert row["p_f_exact"] == {"numerator": "27", "denominator": "64"}


class TestSimulate:
    def test_honest_short_run(self, capsys):
        rc = run_cli(
            "simulate", "honest", "--code", "hamming74", "--trials", "50",
            "--seed", "5",
        )
        assert rc == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["results"]["successes"] == 50

    def test_default_seed_documented(self, capsys):
        rc = run_cli("simulate", "honest", "--code", "rep3", "--trials", "5")
        assert rc == EXIT_OK
        assert json.loads(capsys.readouterr().out)["config"]["seed"] == DEFAULT_SEED

    def test_deterministic_output(self, tmp_path):
        paths = [tmp_path / "a.json", tmp_path / "b.json"]
        for p in paths:
            rc = run_cli(
                "simulate", "no-message", "--code", "rep3",
                "--trials", "300", "--seed", "42", "--out", str(p),
            )
            assert rc == EXIT_OK
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_forged_message_length_checked(self, capsys):
        rc = run_cli(
            "simulate", "no-message", "--code", "hamming74",
            "--trials", "5", "--forged-message", "10",
        )
        assert rc == EXIT_CONFIG


class TestOracle:
    def test_pdec_gap_zero(self, capsys):
        rc = run_cli("oracle", "pdec", "--code", "hamming74")
        assert rc == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["results"]["equal"] is True
        assert report["results"]["gap"] == "0"

    def test_nomsg_values(self, capsys):
        rc = run_cli("oracle", "nomsg", "--code", "rep3")
        assert rc == EXIT_OK
        results = json.loads(capsys.readouterr().out)["results"]
        assert results["exact_value"] == "27/64"
        assert results["any_codeword"] == "7/16"

    def test_ir_reports_gap_without_failing(self, capsys):
        rc = run_cli("oracle", "ir", "--code", "rep3")
        assert rc == EXIT_OK
        results = json.loads(capsys.readouterr().out)["results"]
        assert results["equal"] is False

    def test_size_bound_is_config_error(self, capsys):
        rc = run_cli("oracle", "pdec", "--code", "bch-63-18")
        assert rc == EXIT_CONFIG
        assert "smaller code" in capsys.readouterr().err
