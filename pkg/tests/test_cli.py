import json

import pytest
from click.testing import CliRunner

from rhorep import __version__
from rhorep.cli import cli, main, run
from rhorep.config import RunConfig


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, list(args), catch_exceptions=False)


def test_dims(runner):
    result = invoke(runner, "dims", "--n", "3", "--l", "2", "--r", "4")
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"kappa": 6, "dimA": 3, "dimB": 3, "dimW": 3}


def test_dims_bad_parameters(runner):
    result = runner.invoke(cli, ["dims", "--n", "1", "--l", "2", "--r", "4"])
    assert result.exit_code == 2


def test_dims_table(runner):
    result = invoke(runner, "dims", "--n", "3", "--l", "2", "--r", "4", "--format", "table")
    assert result.exit_code == 0
    assert "kappa" in result.stdout
    assert "dimW" in result.stdout


def test_matrices_float_check(runner):
    result = invoke(runner, "matrices", "--rep", "V", "--n", "3", "--l", "2", "--r", "3", "--float-check")
    assert result.exit_code == 0
    doc = json.loads(result.stdout)
    assert set(doc["matrices"]) == {"1", "2"}
    assert all(d < 1e-9 for d in doc["float_check"]["max_deviation"].values())


def test_matrices_word_on_W(runner):
    result = invoke(runner, "matrices", "--rep", "W", "--n", "3", "--l", "2", "--r", "4", "--word", "1,-1")
    assert result.exit_code == 0
    doc = json.loads(result.stdout)
    assert doc["dim"] == 3
    matrix = doc["matrices"]["1,-1"]
    assert (matrix["rows"], matrix["cols"]) == (3, 3)
    # identity: diagonal entries are the field's one
    assert matrix["entries"][0][0]["coeffs"][0] == "1"


def test_matrices_float_check_needs_V(runner):
    result = runner.invoke(cli, ["matrices", "--rep", "W", "--n", "3", "--l", "2", "--r", "4", "--float-check"])
    assert result.exit_code == 2


def test_matrices_bad_word(runner):
    result = runner.invoke(cli, ["matrices", "--n", "3", "--l", "1", "--r", "3", "--word", "1,5"])
    assert result.exit_code == 2


def test_twist(runner):
    result = invoke(runner, "twist", "--n", "3", "--l", "2", "--r", "4")
    assert result.exit_code == 0
    doc = json.loads(result.stdout)
    assert doc["scalar_exponent"] == 16
    assert doc["matches_formula"] is True


def test_twist_needs_l_below_r(runner):
    result = runner.invoke(cli, ["twist", "--n", "3", "--l", "4", "--r", "4"])
    assert result.exit_code == 2


def test_split_check_reports_certificate(runner):
    result = invoke(runner, "split-check", "--rep", "N20", "--n", "3", "--r", "4")
    assert result.exit_code == 0
    doc = json.loads(result.stdout)
    assert doc["split"] is False
    assert doc["certificate"]["augmented_rank"] > doc["certificate"]["rank"]


def test_split_check_SR(runner):
    result = invoke(runner, "split-check", "--rep", "SR", "--n", "3", "--l", "2", "--r", "4")
    assert result.exit_code == 0
    assert json.loads(result.stdout)["rep"] == "SR"


def test_generic(runner):
    result = invoke(runner, "generic", "--rep", "N20", "--n", "3")
    doc = json.loads(result.stdout)
    assert doc["ring"] == "laurent"
    assert set(doc["matrices"]) == {"1", "2"}
    assert doc["matrices"]["1"]["rows"] == 4


def test_generic_specialized(runner):
    result = invoke(runner, "generic", "--rep", "N21", "--n", "4", "--specialize", "3")
    doc = json.loads(result.stdout)
    assert doc["ring"] == "cyclotomic"
    assert doc["r"] == 3


def test_hecke_quotient(runner):
    result = invoke(runner, "hecke", "--check", "quotient42")
    assert result.exit_code == 0
    assert json.loads(result.stdout)["matches"] is True


def test_output_file(runner, tmp_path):
    target = tmp_path / "dims.json"
    result = invoke(runner, "dims", "--n", "2", "--l", "1", "--r", "3", "--output", str(target))
    assert result.exit_code == 0
    assert result.stdout == ""
    assert json.loads(target.read_text())["kappa"] == 2


def test_version(runner):
    result = invoke(runner, "--version")
    assert __version__ in result.stdout


def test_main_returns_status():
    assert main(["dims", "--n", "2", "--l", "0", "--r", "3"]) == 0
    assert main(["twist", "--n", "1", "--l", "0", "--r", "3"]) == 2


def test_run_dispatch():
    status, doc = run(RunConfig(command="dims", n=3, l=2, r=4))
    assert status == 0
    assert doc["kappa"] == 6
