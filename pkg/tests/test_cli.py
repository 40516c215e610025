"""Exit codes, JSON envelopes, and file outputs of the command line tool."""

import json
import math

import numpy as np
import pytest

from logriesz import ProblemParams, Side, UClass, classify
from logriesz.cli import main, parse_number, parse_profile, parse_radii, parse_window
from logriesz.errors import ParameterError


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run(capsys, argv)
    return code, json.loads(out), err


class TestParsers:
    def test_rational_and_float_literals(self):
        assert parse_number("2.5") == 2.5
        assert math.isclose(parse_number("7/6"), 7.0 / 6.0, rel_tol=1e-15)
        assert parse_number(" 1e3 ") == 1000.0
        with pytest.raises(ParameterError):
            parse_number("seven")
        with pytest.raises(ParameterError):
            parse_number("1/0")

    def test_radii_grid(self):
        radii = parse_radii("2:1000:3")
        assert np.allclose(radii, np.geomspace(2.0, 1000.0, 3))
        for bad in ("5:4:3", "0:10:3", "1:10", "1:10:1"):
            with pytest.raises(ParameterError):
                parse_radii(bad)

    def test_window(self):
        assert parse_window("1e3:1e7") == (1e3, 1e7)
        with pytest.raises(ParameterError):
            parse_window("1e7:1e3")

    def test_profiles(self):
        ball = parse_profile("ball:2", 3)
        assert ball.support_radius == 2.0
        power = parse_profile("power:4:0:10", 3)
        assert power.infinity_spec.power == -4.0
        ansatz = parse_profile("ansatz:2.5:0:10", 3)
        assert ansatz.infinity_spec.power == -2.5
        with pytest.raises(ParameterError):
            parse_profile("gauss:1", 3)
        with pytest.raises(ParameterError):
            parse_profile("ball:1:2", 3)


class TestClassifyCommand:
    def test_existence_exit_zero(self, capsys):
        code, env, _ = run_json(capsys, [
            "classify", "--side", "P+", "--N", "3", "--p", "2", "--q", "4",
            "--alpha", "1", "--beta", "-1.5",
        ])
        assert code == 0
        assert env["command"] == "classify"
        assert env["version"] == "0.1.0"
        assert env["result"]["verdict"] == "Exists"
        assert env["result"]["construction"]["case_id"] == "2"

    def test_nonexistence_exit_three(self, capsys):
        code, env, _ = run_json(capsys, [
            "classify", "--side", "P+", "--N", "3", "--p", "1", "--q", "1",
            "--alpha", "1", "--beta", "0",
        ])
        assert code == 3
        assert env["result"]["verdict"] == "NotExists"
        assert env["result"]["clause"] == "Thm2(ii)"

    def test_open_exit_four(self, capsys):
        code, env, _ = run_json(capsys, [
            "classify", "--side", "P+", "--N", "3", "--p", "4", "--q", "1",
            "--alpha", "1", "--beta", "-1.5",
        ])
        assert code == 4
        assert env["result"]["verdict"] == "Open"
        assert env["result"]["clause"] == "Table1-row5"

    def test_invalid_parameters_exit_two(self, capsys):
        code, out, err = run(capsys, [
            "classify", "--side", "P+", "--N", "3", "--p", "2", "--q", "2",
            "--alpha", "4", "--beta", "0",
        ])
        assert code == 2
        assert out == ""
        assert "invalid parameters" in err

    def test_rational_exponent_literal(self, capsys):
        code, env, _ = run_json(capsys, [
            "classify", "--side", "P+", "--N", "5", "--p", "7/6", "--q", "1",
            "--alpha", "1", "--beta", "0",
        ])
        assert code == 3
        assert math.isclose(env["inputs"]["p"], 7.0 / 6.0, rel_tol=1e-15)

    def test_damped_side_with_class_restriction(self, capsys):
        code, env, _ = run_json(capsys, [
            "classify", "--side", "P-", "--N", "3", "--p", "0.5", "--q", "1",
            "--alpha", "1", "--beta", "0", "--u-class", "bounded",
        ])
        assert code == 3
        assert env["result"]["clause"] == "Thm1(ii)"

    def test_text_format_is_flat(self, capsys):
        code, out, _ = run(capsys, [
            "classify", "--side", "P+", "--N", "3", "--p", "1", "--q", "1",
            "--alpha", "1", "--beta", "0", "--format", "text",
        ])
        assert code == 3
        assert "{" not in out
        assert "result.verdict = NotExists" in out

    def test_envelope_matches_library_call(self, capsys):
        rng = np.random.default_rng(11)
        for _ in range(12):
            N = int(rng.integers(3, 6))
            alpha = round(float(rng.uniform(0.1, N - 0.1)), 3)
            beta = round(float(rng.uniform(alpha - N + 0.05, 2.0)), 3)
            p = round(float(rng.uniform(0.2, 5.0)), 3)
            q = round(float(rng.uniform(0.2, 5.0)), 3)
            code, env, _ = run_json(capsys, [
                "classify", "--side", "P+", "--N", str(N), "--p", str(p),
                "--q", str(q), "--alpha", str(alpha), "--beta", str(beta),
            ])
            expected = classify(
                ProblemParams(Side.PPLUS, N, p, q, alpha, beta, u_class=UClass.GENERAL)
            )
            assert env["result"] == expected.to_dict()
            assert set(env) == {"command", "inputs", "result", "version"}
            assert code == {"Exists": 0, "NotExists": 3, "Open": 4}[expected.verdict.value]

    def test_deterministic_output(self, capsys):
        argv = ["classify", "--side", "P+", "--N", "3", "--p", "2", "--q", "4",
                "--alpha", "1", "--beta", "-1.5"]
        _, out1, _ = run(capsys, argv)
        _, out2, _ = run(capsys, argv)
        assert out1 == out2


class TestConvolveCommand:
    def test_ball_rows_and_csv(self, capsys, tmp_path):
        out_file = tmp_path / "rows.csv"
        code, env, _ = run_json(capsys, [
            "convolve", "--N", "3", "--alpha", "1", "--beta", "0",
            "--profile", "ball:1", "--radii", "2:1000:3", "--out", str(out_file),
        ])
        assert code == 0
        rows = env["result"]["rows"]
        assert len(rows) == 3
        mass = 4.0 * math.pi / 3.0
        for row in rows:
            assert math.isclose(row["value"], mass / row["r"], rel_tol=1e-6)
        lines = out_file.read_text().strip().splitlines()
        assert lines[0] == "r,value,error_estimate"
        assert len(lines) == 4
        for row, line in zip(rows, lines[1:]):
            assert math.isclose(float(line.split(",")[1]), row["value"], rel_tol=1e-12)

    def test_divergent_source_exit_six(self, capsys):
        code, out, err = run(capsys, [
            "convolve", "--N", "3", "--alpha", "1", "--beta", "0",
            "--profile", "power:1:0:10", "--radii", "1:100:3",
        ])
        assert code == 6
        assert "slow-decay regime" in err

    def test_bad_profile_exit_two(self, capsys):
        code, _, err = run(capsys, [
            "convolve", "--N", "3", "--alpha", "1", "--beta", "0",
            "--profile", "blob:1", "--radii", "1:100:3",
        ])
        assert code == 2
        assert "invalid parameters" in err


class TestAsymptoticsCommand:
    def test_upper_envelope_report(self, capsys, tmp_path):
        out_file = tmp_path / "fit.csv"
        code, env, _ = run_json(capsys, [
            "asymptotics", "--N", "3", "--alpha", "1", "--beta", "0",
            "--profile", "power:4:0:10", "--kind", "upper",
            "--window", "1e3:1e6", "--case-id", "cli-check", "--out", str(out_file),
        ])
        assert code == 0
        assert env["result"]["pass"] is True
        assert env["result"]["case_id"] == "cli-check"
        assert math.isclose(env["result"]["predicted"]["power"], -1.0, abs_tol=1e-12)
        lines = out_file.read_text().strip().splitlines()
        assert lines[0] == "r,value,predicted,fitted"
        assert len(lines) == 9


class TestAnsatzCommand:
    def test_threshold_and_decay(self, capsys):
        code, env, _ = run_json(capsys, [
            "ansatz", "--N", "3", "--gamma", "3", "--tau", "0",
        ])
        assert code == 0
        assert math.isclose(env["result"]["lambda_star"], 0.12, rel_tol=1e-4)
        assert env["result"]["potential_power"] == -1.0
        assert env["result"]["potential_logpower"] == 1.0
        assert math.isclose(env["result"]["scale"], math.sqrt(10.0), rel_tol=1e-12)

    def test_invalid_gamma_exit_two(self, capsys):
        code, _, err = run(capsys, ["ansatz", "--N", "3", "--gamma", "5", "--tau", "0"])
        assert code == 2
        assert "invalid parameters" in err


class TestVerifyCommand:
    def test_certified_construction(self, capsys):
        code, env, _ = run_json(capsys, [
            "verify", "--case", "2", "--N", "3", "--alpha", "1", "--beta", "-1.5",
            "--p", "2", "--q", "4",
        ])
        assert code == 0
        assert env["result"]["pass"] is True
        assert env["result"]["stable"] is True
        assert 0.0 < env["result"]["S"] < 1e4
        assert env["result"]["lambda"] > env["result"]["lambda_star"]

    def test_wrong_exponents_exit_two(self, capsys):
        code, _, err = run(capsys, [
            "verify", "--case", "5", "--N", "3", "--alpha", "0.5", "--beta", "-1.5",
            "--p", "2.5", "--q", "3",
        ])
        assert code == 2
        assert err


class TestProbeCommand:
    def test_testfn_constant(self, capsys):
        code, env, _ = run_json(capsys, [
            "probe", "--kind", "testfn", "--N", "3", "--k", "5", "--delta", "2",
            "--R", "10", "--lam", "5",
        ])
        assert code == 0
        assert math.isclose(env["result"]["constant"], 886.1142, rel_tol=1e-5)
        assert env["result"]["delta_power_valid"] is True

    def test_harnack_ball(self, capsys):
        code, env, _ = run_json(capsys, [
            "probe", "--kind", "harnack", "--N", "3", "--profile", "ball:1",
            "--p", "2", "--R", "10",
        ])
        assert code == 0
        assert math.isclose(env["result"]["mass"], 4.0 * math.pi / 3.0, rel_tol=1e-8)

    def test_certificate_with_csv(self, capsys, tmp_path):
        out_file = tmp_path / "cert.csv"
        code, env, _ = run_json(capsys, [
            "probe", "--kind", "certificate", "--N", "3", "--p", "2", "--q", "2",
            "--alpha", "0", "--beta", "0", "--out", str(out_file),
        ])
        assert code == 0
        assert env["result"]["clause"] == "Thm2(iv)"
        assert env["result"]["strictly_increasing"] is True
        lines = out_file.read_text().strip().splitlines()
        assert len(lines) == 26

    def test_chain_probe(self, capsys):
        code, env, _ = run_json(capsys, [
            "probe", "--kind", "chain", "--N", "3", "--alpha", "1", "--beta", "0",
            "--p", "3", "--radii", "100:1e6:6",
        ])
        assert code == 0
        assert math.isclose(env["result"]["predicted"]["power"], -1.0, abs_tol=1e-12)
        assert len(env["result"]["values"]) == 6

    def test_certificate_existence_region_exit_two(self, capsys):
        code, _, err = run(capsys, [
            "probe", "--kind", "certificate", "--N", "3", "--p", "4", "--q", "2",
            "--alpha", "1", "--beta", "-1.5",
        ])
        assert code == 2
        assert "no nonexistence clause" in err


class TestTableCommand:
    def test_json_table(self, capsys, tmp_path):
        out_file = tmp_path / "table.json"
        code, env, _ = run_json(capsys, [
            "table", "--N", "5", "--out", str(out_file),
        ])
        assert code == 0
        assert env["result"]["all_match"] is True
        assert len(env["result"]["records"]) == 151
        saved = json.loads(out_file.read_text())
        assert saved["result"] == env["result"]

    def test_text_table(self, capsys):
        code, out, _ = run(capsys, ["table", "--N", "3", "--format", "text"])
        assert code == 0
        assert "all_match = True" in out
        assert out.count("[ok]") == 125
