import pytest

from lienil.core.catalog.table import corank_row
from lienil.core.serializer.json import json_serializer, json_sorted_serializer


def test_json_serializer():
    """Test the JSON serializer."""
    value = {"hello": "world"}
    serialized = json_serializer.serialize(value)
    assert json_serializer.deserialize(serialized) == value


def test_sorted_json_serializer():
    expected = b'{\n  "a": [\n    2\n  ],\n  "b": 1\n}'
    assert json_sorted_serializer.serialize({"b": 1, "a": [2]}) == expected
    assert json_sorted_serializer.name == "lienil-json-sorted"


def test_reports_serialize():
    report = corank_row(1).to_dict()
    assert json_serializer.deserialize(json_serializer.serialize(report)) == {
        "corank": 1,
        "names": ["L3_2"],
        "computed": [1],
        "flags": [],
    }


def test_json_rejects_nan():
    with pytest.raises(ValueError):
        json_serializer.serialize({"x": float("nan")})
