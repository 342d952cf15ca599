import json

import pytest
from pydantic import ValidationError

from gf_cohomology.decompose import GroupAction
from gf_cohomology.documents import (
    ActionDocument,
    DecompositionDocument,
    JobConfig,
    SCHEMAS,
    dump,
    load_input,
)


def test_action_document_to_action():
    doc = ActionDocument.model_validate({"field": "real", "group": {"cyclic": 2}, "eigen": {"plus1": 0, "minus1": 1}})
    action = doc.to_action()
    assert isinstance(action, GroupAction)
    assert (action.order, action.minus1, action.kind) == (2, 1, "blocks")


def test_rational_entries():
    doc = ActionDocument.model_validate(
        {"field": "real", "group": {"cyclic": 2}, "generator": [[-1, "0"], ["0/1", "-1"]]}
    )
    assert doc.to_action().generator[0][0] == -1
    with pytest.raises(ValidationError):
        ActionDocument.model_validate({"field": "real", "group": {"cyclic": 2}, "generator": [["x"]]})


def test_unknown_keys_rejected():
    with pytest.raises(ValidationError):
        ActionDocument.model_validate({"field": "real", "group": {"cyclic": 2}, "colour": "red"})
    with pytest.raises(ValidationError):
        ActionDocument.model_validate({"field": "real", "group": {"cyclic": 2}, "schema_version": "2"})


def test_decomposition_document_uses_camel_case(sign_line):
    data = json.loads(dump(DecompositionDocument.of(sign_line)))
    assert list(data)[:4] == ["schema_version", "field", "dimV0", "mMinus1"]
    assert data["mMinus1"] == 1
    assert data["factors"] == []


def test_decomposition_document_back_to_domain(complex_line_plus_character):
    doc = DecompositionDocument.of(complex_line_plus_character)
    assert doc.to_decomposition() == complex_line_plus_character


def test_decomposition_document_checks_the_domain_rules():
    with pytest.raises(ValidationError):
        DecompositionDocument.model_validate({"field": "complex", "dimV0": 1, "mMinus1": 1})
    with pytest.raises(ValidationError):
        DecompositionDocument.model_validate(
            {"field": "real", "dimV0": 0, "factors": [{"label": "a", "multiplicity": 1, "dimension": 3}]}
        )
    twice = [{"label": "a", "multiplicity": 1, "dimension": 2}] * 2
    with pytest.raises(ValidationError):
        DecompositionDocument.model_validate({"field": "real", "dimV0": 0, "factors": twice})


def test_load_input_inline_and_path(tmp_path):
    assert isinstance(load_input('{"field": "complex", "dimV0": 1}'), DecompositionDocument)
    path = tmp_path / "action.json"
    path.write_text(json.dumps({"field": "complex", "group": {"cyclic": 3}, "weights": [0, 1]}))
    assert isinstance(load_input(str(path)), ActionDocument)


def test_job_config_validation():
    assert JobConfig(command="oracle").max_degree >= 0
    with pytest.raises(ValidationError):
        JobConfig(command="oracle", jobs=0)
    with pytest.raises(ValidationError):
        JobConfig(command="classes", mode="relative-sp")
    with pytest.raises(ValidationError):
        JobConfig(command="classes", output_format="yaml")


def test_every_schema_renders():
    for name, model in SCHEMAS.items():
        assert model.model_json_schema(by_alias=True)["type"] == "object", name
