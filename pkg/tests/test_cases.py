import json

import pytest
from hypothesis import given

from arrlab.cases import CaseError, CaseFile, parse_case, serialize_case, write_case
from arrlab.geometry import Arrangement
from arrlab.graph import MultiDigraph
from test_geometry import arrangements


def test_digraph_roundtrip(tmp_path):
    case = parse_case('{"n": 3, "edges": [[1, 2], [2, 3]], "mult": [2, 1], "description": "path"}')
    assert case.kind == "digraph"
    assert case.payload == MultiDigraph(3, {(1, 2): 2, (2, 3): 1})
    path = write_case(case, tmp_path / "sub" / "c.json")
    assert parse_case(path) == case
    assert parse_case(str(path)) == case


def test_arrangement_parse():
    case = parse_case('{"n": 2, "hyperplanes": [{"i": 1, "j": 2, "a": "3/2"}, {"i": 2, "j": 1, "a": 1}]}')
    assert case.kind == "arrangement"
    assert case.payload == Arrangement(2, ((1, 2, "3/2"), (2, 1, 1)))
    assert json.loads(serialize_case(case))["kind"] == "arrangement"


@pytest.mark.parametrize(
    "text, needle",
    [
        ('{"n": 2, "edges": [[1, 2],]}', "line 1, column"),
        ("[1, 2]", "JSON object"),
        ('{"n": 2}', "either"),
        ('{"n": 2, "edges": [[1, 2, 3]]}', "edges[0]"),
        ('{"n": 2, "edges": [[1, 3]]}', "edges[0]: vertex 3"),
        ('{"n": 2, "edges": [[1, 1]]}', "loop"),
        ('{"n": 2, "edges": [[1, 2], [1, 2]]}', "repeats edges[0]"),
        ('{"n": 2, "edges": [[1, 2]], "mult": [1, 1]}', "field mult"),
        ('{"n": 2, "edges": [[1, 2]], "mult": [0]}', "mult[0]"),
        ('{"n": 2, "edges": [], "colour": "red"}', "Additional properties"),
        ('{"n": 2, "hyperplanes": [{"i": 1, "j": 2, "a": "x"}]}', "hyperplanes[0].a"),
        ('{"n": 2, "hyperplanes": [{"i": 1, "j": 2, "a": "-1"}]}', "positive"),
        ('{"n": 2, "hyperplanes": [{"i": 1, "j": 2}]}', "hyperplanes[0]"),
        ('{"n": 2, "hyperplanes": [{"i": 1, "j": 2, "a": 1}, {"i": 1, "j": 2, "a": "1"}]}', "duplicate"),
        ('{"n": 2, "hyperplanes": [{"i": 2, "j": 2, "a": 1}]}', "differ"),
    ],
)
def test_diagnostics(text, needle):
    with pytest.raises(CaseError) as exc:
        parse_case(text)
    assert needle in str(exc.value)


def test_missing_file(tmp_path):
    with pytest.raises(CaseError, match="cannot read"):
        parse_case(str(tmp_path / "nope.json"))


def test_multiline_error_position():
    with pytest.raises(CaseError, match="line 3"):
        parse_case('{\n "n": 2,\n "edges": [[1 2]]\n}')


@given(arrangements())
def test_arrangement_roundtrip(arr):
    case = CaseFile("arrangement", arr, "random")
    assert parse_case(serialize_case(case)) == case
