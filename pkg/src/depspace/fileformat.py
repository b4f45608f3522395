"""JSON documents for spaces, graphs and matrices.

Space::

    {"version": 1, "elements": ["a", "b", "c"],
     "delta": [["a", "b", "c"]], "provenance": "optional text"}

Graph (vertices are 0-based)::

    {"version": 1, "vertex-count": 3, "edges": [[0, 1, "t1"], [1, 2, "t2"], [2, 0, "t3"]]}

Matrix (``labels`` optional, default c1..cn)::

    {"version": 1, "rows": [[1, 0, 1], [0, 1, 1]], "labels": ["x", "y", "z"]}
"""

from __future__ import annotations

import hashlib
import json

from depspace.core import DependenceError, DependenceSpace, RawSpace, WellFormednessError
from depspace.instances import GraphSpec

FORMAT_VERSION = 1


class FormatError(DependenceError):
    """Malformed document text or an unsupported format version."""


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"syntax error at line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    version = doc.get("version")
    if version != FORMAT_VERSION:
        raise FormatError(f"unknown format version {version!r} (supported: {FORMAT_VERSION})")
    return doc


def _string_list(value, what: str) -> list:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise FormatError(f"{what} must be a list of strings")
    return value


def parse_raw(text: str) -> tuple[RawSpace, str | None]:
    """Parse a space document without checking well-formedness."""
    doc = _load(text)
    elements = _string_list(doc.get("elements"), "elements")
    delta = doc.get("delta")
    if not isinstance(delta, list):
        raise FormatError("delta must be a list of lists of strings")
    members = tuple(tuple(_string_list(d, "delta member")) for d in delta)
    provenance = doc.get("provenance")
    if provenance is not None and not isinstance(provenance, str):
        raise FormatError("provenance must be a string")
    return RawSpace(tuple(elements), members), provenance


def parse_space(text: str) -> DependenceSpace:
    raw, provenance = parse_raw(text)
    # from_labels runs the well-formedness check and raises on failure
    try:
        return DependenceSpace.from_labels(raw.elements, raw.delta, provenance)
    except WellFormednessError:
        raise
    except DependenceError as e:
        raise FormatError(str(e)) from None


def serialize_space(space: DependenceSpace) -> str:
    delta = sorted(list(m) for m in space.delta_sets())
    lines = [
        "{",
        f'  "version": {FORMAT_VERSION},',
        f'  "elements": {json.dumps(list(space.labels))},',
    ]
    if delta:
        lines.append('  "delta": [')
        body = [f"    {json.dumps(m)}" for m in delta]
        lines.append(",\n".join(body))
        lines.append("  ]" + ("," if space.provenance is not None else ""))
    else:
        lines.append('  "delta": []' + ("," if space.provenance is not None else ""))
    if space.provenance is not None:
        lines.append(f'  "provenance": {json.dumps(space.provenance)}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def space_hash(space: DependenceSpace) -> str:
    """sha256 of the canonical serialization, without provenance."""
    bare = DependenceSpace(space.labels, space.delta)
    return hashlib.sha256(serialize_space(bare).encode()).hexdigest()


def parse_graph(text: str) -> GraphSpec:
    doc = _load(text)
    count = doc.get("vertex-count")
    edges = doc.get("edges")
    if not isinstance(count, int) or not isinstance(edges, list):
        raise FormatError("graph needs integer vertex-count and a list of edges")
    triples = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 3 and isinstance(e[0], int)
                and isinstance(e[1], int) and isinstance(e[2], str)):
            raise FormatError(f"edge {e!r} must be [u, v, label]")
        triples.append(tuple(e))
    return GraphSpec(count, tuple(triples))


def serialize_graph(graph: GraphSpec) -> str:
    doc = {"version": FORMAT_VERSION, "vertex-count": graph.vertex_count,
           "edges": [list(e) for e in graph.edges]}
    return json.dumps(doc) + "\n"


def parse_matrix(text: str) -> tuple[list, list | None]:
    doc = _load(text)
    rows = doc.get("rows")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise FormatError("rows must be a list of lists of 0/1")
    for r in rows:
        if not all(v in (0, 1) and isinstance(v, int) for v in r):
            raise FormatError(f"row {r!r} must contain only 0 and 1")
    labels = doc.get("labels")
    if labels is not None:
        labels = _string_list(labels, "labels")
    return rows, labels


def serialize_matrix(rows, labels=None) -> str:
    doc = {"version": FORMAT_VERSION, "rows": [list(r) for r in rows]}
    if labels is not None:
        doc["labels"] = list(labels)
    return json.dumps(doc) + "\n"
