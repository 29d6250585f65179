"""
Tests for the powersum-cert command-line interface
"""

import json

import pytest

from powersum_cert.tools.cli import main


def _invoke(runner, args):
    return runner.invoke(main, args, catch_exceptions=False)


def _json(runner, args):
    result = _invoke(runner, ["--json"] + args)
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


def test_bernoulli_text(runner):
    result = _invoke(runner, ["bernoulli", "--k", "4"])
    assert result.exit_code == 0
    assert result.output.strip() == "x^4 - 2*x^3 + x^2 - 1/30"


def test_euler_json(runner):
    data = _json(runner, ["euler", "--k", "5"])
    assert data == {"k": 5, "poly": "x^5 - 5/2*x^4 + 5/2*x^2 - 1/2", "value_at_zero": "-1/2"}


def test_bernoulli_json_number(runner):
    data = _json(runner, ["bernoulli", "--k", "12"])
    assert data["number"] == "-691/2730"


def test_powersum_eval_matches_oracle(runner):
    data = _json(runner, ["powersum", "--family", "S", "--a", "2", "--b", "1", "--k", "2",
                          "--eval", "3"])
    assert data["eval"] == {"n": 3, "value": "35", "oracle": "35", "oracle_applies": True,
                            "matches": True}


def test_powersum_parity_flag(runner):
    data = _json(runner, ["powersum", "--family", "T+", "--a", "1", "--b", "1", "--k", "2",
                          "--eval", "4"])
    assert data["poly"] == "1/2*x^2 + 1/2*x"
    assert data["eval"]["oracle_applies"] is False
    assert data["eval"]["oracle"] == "-10"


def test_solve_squares_quadratic(runner):
    data = _json(runner, ["solve", "--family", "S", "--a", "1", "--b", "0", "--k", "2",
                          "--rhs-quad", "1,0,0", "--xmin", "0", "--xmax", "100"])
    assert {(s["x"], s["y"]) for s in data} == {(0, 0), (1, 0), (2, -1), (2, 1), (25, -70), (25, 70)}
    assert all("ell" not in s for s in data)


def test_solve_squares_power(runner):
    data = _json(runner, ["solve", "--family", "S", "--a", "1", "--b", "0", "--k", "2",
                          "--rhs-power", "1,0,2", "--xmin", "0", "--xmax", "50"])
    assert [(s["x"], s["y"], s["ell"], s["schaffer_n"]) for s in data] == [
        (25, -70, 2, 24), (25, 70, 2, 24),
    ]


def test_solve_text_table(runner):
    result = _invoke(runner, ["solve", "--family", "T+", "--a", "1", "--b", "1", "--k", "2",
                              "--rhs-power", "1,0,unknown", "--xmin", "1", "--xmax", "50",
                              "--ellmax", "3"])
    assert result.exit_code == 0
    assert "lhs_value" in result.output
    assert "1225" in result.output


def test_solve_negative_offset(runner):
    data = _json(runner, ["solve", "--family", "S", "--a", "1", "--b", "0", "--k", "1",
                          "--rhs-power", "1,9,3", "--xmin=-2", "--xmax", "3"])
    assert [(s["x"], s["y"], s["ell"]) for s in data] == [(-1, -2, 3), (2, -2, 3)]


def test_certify_out_of_range(runner):
    data = _json(runner, ["certify", "--theorem", "1", "--a", "1", "--b", "0", "--k", "3"])
    assert data["verdict"] == "OUT_OF_THEOREM_RANGE"
    assert data["theorem_id"] == 1
    assert data["notes"]


def test_certify_power_by_family(runner):
    data = _json(runner, ["certify", "--family", "S", "--a", "1", "--b", "0", "--k", "4",
                          "--c", "1", "--l", "3"])
    assert data["theorem_id"] == 4
    assert data["verdict"] == "CERTIFIED"
    assert data["rhs"]["ell"] == 3


def test_certify_quadratic_text(runner):
    result = _invoke(runner, ["certify", "--family", "T-", "--a", "1", "--b", "1", "--k", "7",
                              "--A", "1", "--C=-1/2"])
    assert result.exit_code == 0
    assert "CERTIFIED" in result.output
    assert "simple_roots" in result.output


def test_lemma_check_euler_json(runner):
    data = _json(runner, ["lemma-check", "--lemma", "6", "--kmax", "8"])
    assert [record["k"] for record in data] == list(range(1, 9))
    assert all(record["verdict"] == "PASS" for record in data)
    assert data[4]["multiple_factor"] == "x^2 - x - 1"


def test_lemma_check_explicit_shifts(runner):
    data = _json(runner, ["lemma-check", "--lemma", "4", "--k", "5", "--shifts", "0,1/2"])
    assert [record["s"] for record in data] == ["0", "1/2"]
    assert data[0]["counts"] == {"odd_multiplicity_roots": 5}


def test_lemma_check_table(runner):
    result = _invoke(runner, ["lemma-check", "--lemma", "5", "--kmax", "8"])
    assert result.exit_code == 0
    assert "verdict" in result.output
    assert "FAIL" not in result.output


def test_probe_json(runner):
    data = _json(runner, ["probe", "--family", "T-", "--a", "1", "--b", "0", "--k", "8",
                          "--d", "1/2"])
    assert data["verdict"] == "PASS"
    assert data["forbidden_multiplicity"] == 6


@pytest.mark.parametrize("args", [
    ["powersum", "--family", "S", "--a", "2", "--b", "4", "--k", "2"],
    ["powersum", "--family", "S", "--a", "0", "--b", "1", "--k", "2"],
    ["bernoulli", "--k", "-1"],
    ["solve", "--family", "S", "--a", "1", "--b", "0", "--k", "2", "--rhs-quad", "1,0,0",
     "--rhs-power", "1,0,2", "--xmin", "0", "--xmax", "5"],
    ["solve", "--family", "S", "--a", "1", "--b", "0", "--k", "2", "--rhs-power", "1,0,1",
     "--xmin", "0", "--xmax", "5"],
    ["solve", "--family", "S", "--a", "1", "--b", "0", "--k", "2", "--rhs-quad", "1,0",
     "--xmin", "0", "--xmax", "5"],
    ["solve", "--family", "S", "--a", "1", "--b", "0", "--k", "2", "--rhs-quad", "1,y,0",
     "--xmin", "0", "--xmax", "5"],
    ["solve", "--family", "S", "--a", "1", "--b", "0", "--k", "2", "--rhs-quad", "1,0,0",
     "--xmin", "5", "--xmax", "0"],
    ["lemma-check", "--lemma", "4", "--k", "4"],
    ["lemma-check", "--lemma", "3"],
    ["certify", "--theorem", "1", "--family", "S", "--a", "1", "--b", "0", "--k", "2"],
    ["certify", "--theorem", "4", "--a", "1", "--b", "0", "--k", "2", "--A", "1"],
    ["certify", "--family", "S", "--a", "1", "--b", "0", "--k", "2", "--A", "1", "--c", "1"],
    ["probe", "--family", "S", "--a", "1", "--b", "0", "--k", "1"],
])
def test_usage_errors_exit_2(runner, args):
    result = runner.invoke(main, args)
    assert result.exit_code == 2, result.output


def test_missing_config_file_is_usage_error(runner, tmp_path):
    result = runner.invoke(main, ["--config", str(tmp_path / "absent.yaml"), "bernoulli", "--k", "1"])
    assert result.exit_code == 2
    assert "E001" in result.output


def test_config_file_drives_defaults(runner, config_file):
    result = _invoke(runner, ["--json", "--config", str(config_file), "config", "show",
                              "--format", "json"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["max_k"] == 32
    assert data["base_shifts"] == ["0", "1/2", "-1"]

    data = _json(runner, ["--config", str(config_file), "lemma-check", "--lemma", "4", "--k", "5"])
    shifts = [record["s"] for record in data]
    assert shifts[:3] == ["0", "1/2", "-1"]
    assert len(shifts) == len(set(shifts))


def test_config_generate_and_validate(runner, tmp_path):
    path = tmp_path / "generated.yaml"
    result = _invoke(runner, ["config", "generate", "--output", str(path), "--max-k", "48"])
    assert result.exit_code == 0
    assert path.exists()

    result = _invoke(runner, ["config", "validate", str(path), "--verbose"])
    assert result.exit_code == 0
    assert "max_k: 48" in result.output


def test_config_validate_rejects_bad_values(runner, tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("max_k: 0\n")
    result = runner.invoke(main, ["config", "validate", str(path)])
    assert result.exit_code == 1
    assert "validation failed" in result.output
