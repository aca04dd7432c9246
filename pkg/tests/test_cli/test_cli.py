"""Tests for the command-line front end."""

import json

import pytest
from click.testing import CliRunner

from src.cli import cli
from tests.conftest import BOUNDARY_DOC, EDGE_DOC, hypergraph_doc


def error_json(stderr):
    """The error document, which follows any log records on stderr."""
    start = 0 if stderr.startswith("{") else stderr.index("\n{") + 1
    return json.loads(stderr[start:])


@pytest.fixture
def runner(clean_env):
    return CliRunner()


def test_euler_of_the_boundary(runner, write_json):
    result = runner.invoke(cli, ["euler", write_json(BOUNDARY_DOC)])
    assert result.exit_code == 0, result.stderr
    out = json.loads(result.stdout)
    assert out["euler"] == out["hall"] == out["bounded"] == 0
    assert out["face_count"] == 0


def test_marginal_report_of_an_edge(runner, write_json):
    result = runner.invoke(cli, ["marginal", write_json(EDGE_DOC), "--oracle"])
    assert result.exit_code == 0, result.stderr
    out = json.loads(result.stdout)
    assert out["h0_restricted"] == 3
    assert out["index"] == 4
    assert out["oracle"] == {"free": 4, "restricted": 3}
    assert out["split"]["holds"]


def test_cech_reads_stdin(runner):
    result = runner.invoke(cli, ["cech", "-"], input=json.dumps(BOUNDARY_DOC))
    assert result.exit_code == 0, result.stderr
    out = json.loads(result.stdout)
    assert out["cohomology"] == [7, 1, 0]
    assert out["functor"] == "free_copresheaf"
    assert "complex" not in out


def test_cech_options(runner, write_json):
    path = write_json(BOUNDARY_DOC)
    exported = json.loads(runner.invoke(cli, ["cech", path, "--export", "--max-degree", "2"]).stdout)
    assert set(exported["complex"]) == {"0", "1", "2"}
    constant = json.loads(runner.invoke(cli, ["cech", path, "--functor", "constant_copresheaf"]).stdout)
    assert constant["cohomology"] == [1, 1, 0]
    relative = runner.invoke(cli, ["cech", path, "--functor", "constant_copresheaf", "--subset", "{1}"])
    assert relative.exit_code == 0, relative.stderr
    assert json.loads(relative.stdout)["relative"]["exact"]


def test_functor_key_in_the_document_wins(runner, write_json):
    doc = {"hypergraph": BOUNDARY_DOC, "functor": "constant_copresheaf"}
    out = json.loads(runner.invoke(cli, ["cech", write_json(doc)]).stdout)
    assert out["cohomology"] == [1, 1, 0]


def test_failed_check_prints_the_witness(runner, write_json):
    small = write_json(EDGE_DOC)
    large = write_json(hypergraph_doc([["1"], ["2"]]))
    result = runner.invoke(cli, ["surjectivity", small, large])
    assert result.exit_code == 1
    out = json.loads(result.stdout)
    assert out["error_code"] == "CHECK_FAILED"
    assert out["witness"]["face"] == "{1,2}"


def test_malformed_json_reports_the_position(runner, write_json):
    result = runner.invoke(cli, ["euler", write_json('{"faces": [["1"],\n  oops]}')])
    assert result.exit_code == 2
    error = error_json(result.stderr)
    assert error["error_code"] == "INPUT_ERROR"
    assert error["line"] == 2


def test_invalid_poset_is_an_input_error(runner, write_json):
    doc = {"elements": ["a", "b"], "arrows": [["a", "b"], ["b", "a"]]}
    result = runner.invoke(cli, ["mobius", write_json(doc)])
    assert result.exit_code == 2
    assert result.stdout == ""


def test_missing_input(runner):
    result = runner.invoke(cli, ["euler"])
    assert result.exit_code == 2
    assert "No input document" in result.stderr


@pytest.mark.parametrize("flags", [["--field", "fp:6"], ["--max-degree", "0"], ["--seed", "-3"]])
def test_invalid_flags(runner, write_json, flags):
    result = runner.invoke(cli, ["euler", write_json(EDGE_DOC), *flags])
    assert result.exit_code == 2
    assert error_json(result.stderr)["error_code"] == "CONFIG_ERROR"


def test_output_is_deterministic(runner, write_json):
    path = write_json(BOUNDARY_DOC)
    first = runner.invoke(cli, ["marginal", path, "--seed", "7"]).stdout
    second = runner.invoke(cli, ["marginal", path, "--seed", "7"]).stdout
    assert first == second


def test_table_format(runner, write_json):
    result = runner.invoke(cli, ["predicates", write_json(EDGE_DOC), "--format", "table"])
    assert result.exit_code == 0
    assert "conditional_products" in result.stdout
    assert "intersection.weak" in result.stdout


def test_prime_field(runner, write_json):
    result = runner.invoke(cli, ["oracle", write_json(BOUNDARY_DOC), "--field", "fp:3"])
    assert result.exit_code == 0, result.stderr
    assert json.loads(result.stdout)["pipeline_restricted"] == 6


def test_check_g_reports_as_data(runner, write_json):
    result = runner.invoke(cli, ["check-g", write_json(EDGE_DOC)])
    assert result.exit_code == 0, result.stderr
    assert "holds" in json.loads(result.stdout)


def test_self_test_runs_the_command_suite(runner):
    result = runner.invoke(cli, ["euler", "--self-test"])
    assert result.exit_code == 0, result.stdout
    out = json.loads(result.stdout)
    assert out["passed"]
    assert list(out["suites"]) == ["poset"]


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "0.1.0" in result.stdout
