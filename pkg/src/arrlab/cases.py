"""JSON case files: a digraph or an arrangement, with an optional description.

Digraph body::

    {"n": 4, "edges": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4]], "mult": [1, 1, 1, 1, 1]}

Arrangement body::

    {"n": 3, "hyperplanes": [{"i": 1, "j": 2, "a": "1"}, {"i": 1, "j": 3, "a": "2/3"}]}
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

import jsonschema

from .geometry.arrangement import Arrangement, Hyperplane, arrangement_to_json
from .graph import MultiDigraph, graph_to_json

DIGRAPH_SCHEMA = {
    "type": "object",
    "required": ["n", "edges"],
    "additionalProperties": False,
    "properties": {
        "kind": {"const": "digraph"},
        "description": {"type": "string"},
        "n": {"type": "integer", "minimum": 0},
        "edges": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        },
        "mult": {"type": "array", "items": {"type": "integer"}},
    },
}

ARRANGEMENT_SCHEMA = {
    "type": "object",
    "required": ["n", "hyperplanes"],
    "additionalProperties": False,
    "properties": {
        "kind": {"const": "arrangement"},
        "description": {"type": "string"},
        "n": {"type": "integer", "minimum": 1},
        "hyperplanes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["i", "j", "a"],
                "additionalProperties": False,
                "properties": {
                    "i": {"type": "integer"},
                    "j": {"type": "integer"},
                    "a": {"type": ["string", "integer"]},
                },
            },
        },
    },
}

SCHEMAS = {"digraph": DIGRAPH_SCHEMA, "arrangement": ARRANGEMENT_SCHEMA}


class CaseError(ValueError):
    """Invalid case input; the message names the offending line or field."""


@dataclass(frozen=True)
class CaseFile:
    kind: str
    payload: Union[MultiDigraph, Arrangement]
    description: Optional[str] = None


def _field_path(err: jsonschema.ValidationError) -> str:
    path = "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in err.absolute_path)
    return path.lstrip(".") or "<root>"


def _best_error(schema, body) -> Optional[jsonschema.ValidationError]:
    errors = sorted(jsonschema.Draft7Validator(schema).iter_errors(body), key=lambda e: list(e.absolute_path))
    if not errors:
        return None
    return max(errors, key=lambda e: len(e.absolute_path))


def _read(source) -> str:
    if isinstance(source, os.PathLike):
        return Path(source).read_text(encoding="utf-8")
    if isinstance(source, str) and not source.lstrip().startswith(("{", "[")):
        try:
            return Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise CaseError(f"cannot read {source}: {exc.strerror}") from None
    return source


def parse_case(source) -> CaseFile:
    """Parse a case from a path or from JSON text and validate it."""
    text = _read(source)
    try:
        body = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CaseError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(body, dict):
        raise CaseError("case must be a JSON object")

    verdicts = {kind: _best_error(schema, body) for kind, schema in SCHEMAS.items()}
    valid = [kind for kind, err in verdicts.items() if err is None]
    if len(valid) != 1:
        if "hyperplanes" in body:
            guess = "arrangement"
        elif "edges" in body:
            guess = "digraph"
        else:
            raise CaseError("case must have either 'edges' (digraph) or 'hyperplanes' (arrangement)")
        err = verdicts[guess]
        raise CaseError(f"{guess} case, field {_field_path(err)}: {err.message}")
    kind = valid[0]
    desc = body.get("description")
    if kind == "digraph":
        return CaseFile(kind, _digraph(body), desc)
    return CaseFile(kind, _arrangement(body), desc)


def _digraph(body) -> MultiDigraph:
    n = body["n"]
    edges = body["edges"]
    mult = body.get("mult")
    if mult is not None and len(mult) != len(edges):
        raise CaseError(f"field mult: has {len(mult)} entries but there are {len(edges)} edges")
    seen = {}
    for idx, (i, j) in enumerate(edges):
        for v in (i, j):
            if not 1 <= v <= n:
                raise CaseError(f"field edges[{idx}]: vertex {v} outside 1..{n}")
        if i == j:
            raise CaseError(f"field edges[{idx}]: loop at vertex {i}")
        if (i, j) in seen:
            raise CaseError(
                f"field edges[{idx}]: edge ({i}, {j}) repeats edges[{seen[(i, j)]}]; use 'mult' for multiplicity"
            )
        seen[(i, j)] = idx
    counts = {}
    for idx, (i, j) in enumerate(edges):
        m = 1 if mult is None else mult[idx]
        if m < 1:
            raise CaseError(f"field mult[{idx}]: multiplicity must be at least 1, got {m}")
        counts[(i, j)] = m
    return MultiDigraph(n, counts)


def _arrangement(body) -> Arrangement:
    n = body["n"]
    hs = []
    seen = {}
    for idx, item in enumerate(body["hyperplanes"]):
        i, j, raw = item["i"], item["j"], item["a"]
        where = f"field hyperplanes[{idx}]"
        for v in (i, j):
            if not 1 <= v <= n:
                raise CaseError(f"{where}: vertex {v} outside 1..{n}")
        if i == j:
            raise CaseError(f"{where}: i and j must differ")
        try:
            a = Fraction(raw)
        except (ValueError, ZeroDivisionError):
            raise CaseError(f"{where}.a: {raw!r} is not a rational 'p/q' or integer") from None
        if a <= 0:
            raise CaseError(f"{where}.a: a must be positive, got {a}")
        if (i, j, a) in seen:
            raise CaseError(f"{where}: duplicate of hyperplanes[{seen[(i, j, a)]}]")
        seen[(i, j, a)] = idx
        hs.append(Hyperplane(i, j, a))
    return Arrangement(n, tuple(hs))


def case_to_json(case: CaseFile) -> dict:
    if case.kind == "digraph":
        body = graph_to_json(case.payload)
    else:
        body = arrangement_to_json(case.payload)
    body = {"kind": case.kind, **body}
    if case.description is not None:
        body["description"] = case.description
    return body


def serialize_case(case: CaseFile) -> str:
    return json.dumps(case_to_json(case), indent=2) + "\n"


def write_case(case: CaseFile, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_case(case), encoding="utf-8")
    return path
