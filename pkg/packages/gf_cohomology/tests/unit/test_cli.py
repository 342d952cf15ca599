import json

import pytest
from typer.testing import CliRunner

from gf_cohomology import __version__
from gf_cohomology.cli import app
from gf_cohomology.linalg import BettiTable

runner = CliRunner()

SIGN_ACTION = '{"field":"real","group":{"cyclic":2},"eigen":{"plus1":0,"minus1":1}}'
TRIVIAL_LINE = '{"field":"real","dimV0":1}'
COMPLEX_PAIR = '{"field":"complex","group":{"cyclic":3},"weights":[0,1]}'


def _json(result) -> dict:
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def test_version():
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.stdout


def test_decompose_sign_action():
    data = _json(runner.invoke(app, ["decompose", "-i", SIGN_ACTION]))
    assert data["schema_version"] == "1"
    assert (data["field"], data["dimV0"], data["mMinus1"], data["factors"]) == ("real", 0, 1, [])


def test_decompose_is_idempotent():
    first = runner.invoke(app, ["decompose", "-i", SIGN_ACTION])
    second = runner.invoke(app, ["decompose", "-i", first.stdout])
    assert second.exit_code == 0
    assert second.stdout == first.stdout


def test_cohomology_of_the_line():
    data = _json(runner.invoke(app, ["cohomology", "-i", TRIVIAL_LINE, "--max-degree", "3"]))
    assert data["betti"] == [1, 0, 0, 1, 0]
    assert data["truncation_bound"] == 2


def test_cohomology_reports_unknown_top():
    data = _json(runner.invoke(app, ["cohomology", "-i", TRIVIAL_LINE, "--max-degree", "1"]))
    assert data["betti"] == [1, 0, "unknown"]


def test_oracle_agrees():
    data = _json(runner.invoke(app, ["oracle", "-i", COMPLEX_PAIR, "--max-degree", "4"]))
    assert data["match"] is True
    assert data["weil"]["betti"][:5] == [1, 0, 0, 3, 2]


def test_oracle_mismatch_exits_one(monkeypatch):
    monkeypatch.setattr(
        "gf_cohomology.cli._weight_zero_betti", lambda d, max_degree, jobs: (BettiTable((1, 1, 0, 0)), [1, 1, 1, 1], 1)
    )
    result = runner.invoke(app, ["oracle", "-i", TRIVIAL_LINE, "--max-degree", "2"])
    assert result.exit_code == 1


def test_classes_for_a_decomposition():
    data = _json(runner.invoke(app, ["classes", "-i", TRIVIAL_LINE, "--max-degree", "3"]))
    secondary = [c for c in data["classes"] if c["kind"] == "secondary"]
    assert [(c["degree"], c["filtration"], c["corner"]) for c in secondary] == [(3, 2, True)]
    assert data["vanishing"]["all_vanish"] is True


def test_classes_for_an_action():
    data = _json(runner.invoke(app, ["classes", "-i", SIGN_ACTION, "--max-degree", "1"]))
    assert [c["label"] for c in data["components"]] == ["e", "g"]
    assert data["group_order"] == 2


def test_table_format():
    result = runner.invoke(app, ["decompose", "-i", SIGN_ACTION, "--format", "table"])
    assert result.exit_code == 0
    assert "dimV0" in result.stdout


def test_invariants():
    data = _json(runner.invoke(app, ["invariants", "--r", "1", "--s", "0", "--dim-v0", "1", "--dim-w", "1"]))
    assert data["predicted"] == data["bruteforce"] == 1


def test_e2_euler_characteristic():
    data = _json(runner.invoke(app, ["e2", "-i", TRIVIAL_LINE, "--max-degree", "3"]))
    assert data["euler_e2"] == data["euler_betti"] == 0
    assert data["totals"] == [1, 1, 1, 1]


def test_schema():
    data = _json(runner.invoke(app, ["schema", "decomposition"]))
    assert "dimV0" in data["properties"]


def test_selfcheck():
    data = _json(runner.invoke(app, ["selfcheck", "--seed", "3", "--samples", "2"]))
    assert data["ok"] is True
    assert len(data["cases"]) == 2


@pytest.mark.slow
def test_selfcheck_twenty_random_decompositions():
    data = _json(runner.invoke(app, ["selfcheck", "--seed", "2024", "--samples", "20"]))
    assert data["ok"] is True
    assert len(data["cases"]) == 20
    assert all(c["d_squared_zero"] and c["vanishing"] for c in data["cases"])


def test_output_is_byte_identical_across_runs():
    for args in (
        ["classes", "-i", TRIVIAL_LINE, "--max-degree", "3"],
        ["classes", "-i", SIGN_ACTION, "--max-degree", "1"],
        ["oracle", "-i", COMPLEX_PAIR, "--max-degree", "3"],
    ):
        first, second = runner.invoke(app, args), runner.invoke(app, args)
        assert first.exit_code == second.exit_code == 0
        assert first.stdout_bytes == second.stdout_bytes


def test_malformed_input_exits_two():
    assert runner.invoke(app, ["decompose", "-i", "{not json"]).exit_code == 2
    assert runner.invoke(app, ["cohomology", "-i", TRIVIAL_LINE, "--mode", "sideways"]).exit_code == 2
    assert runner.invoke(app, ["schema", "nothing"]).exit_code == 2
    mixed = '{"field":"complex","dimV0":1,"mMinus1":1}'
    assert runner.invoke(app, ["cohomology", "-i", mixed]).exit_code == 2
    odd = {"field": "real", "dimV0": 1, "factors": [{"label": "a", "multiplicity": 1, "dimension": 3}]}
    assert runner.invoke(app, ["classes", "-i", json.dumps(odd)]).exit_code == 2


def test_quaternionic_exits_three():
    doc = {
        "field": "real",
        "dimV0": 1,
        "factors": [{"label": "q", "multiplicity": 1, "dimension": 4, "type": "quaternionic"}],
        "source": "supplied",
    }
    assert runner.invoke(app, ["classes", "-i", json.dumps(doc)]).exit_code == 3


def test_infeasible_exits_four():
    assert runner.invoke(app, ["cohomology", "-i", '{"field":"complex","dimV0":5}']).exit_code == 4


def test_computation_error_exits_one():
    doc = '{"field":"complex","dimV0":1}'
    assert runner.invoke(app, ["classes", "-i", doc, "--mode", "relative-so"]).exit_code == 1


def _quaternion_units() -> list:
    one = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    i = [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
    j = [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]
    k = [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]
    units = [one, i, j, k]
    return units + [[[-x for x in row] for row in m] for m in units]


@pytest.mark.parametrize("extra", [["decompose"], ["classes", "--max-degree", "2"]])
def test_quaternion_group_action_exits_three(extra):
    doc = json.dumps({"field": "real", "group": {"matrices": _quaternion_units()}})
    assert runner.invoke(app, [*extra, "-i", doc]).exit_code == 3
