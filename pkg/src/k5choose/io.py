"""JSON instance documents and colouring files.

An instance document looks like::

    {"vertices": [0, 1, 2],
     "edges": [[0, 1], [1, 2], [0, 2]],
     "lists": {"0": [1], "1": [2], "2": [1, 2, 3]},
     "A": [0, 1],
     "B": [0, 1, 2]}

``A`` and ``B`` default to empty.  Ids and colours are non-negative
integers; JSON object keys carry ids as decimal strings.
"""

from __future__ import annotations

import json

from .boundary import Instance
from .graph import Graph


class DocumentError(ValueError):
    """Malformed document; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


def _key_line(text: str, key: str) -> int | None:
    needle = f'"{key}"'
    for i, row in enumerate(text.splitlines(), 1):
        if needle in row:
            return i
    return None


def _load(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(e.msg, e.lineno, e.colno) from None


def _int(x, text, key, what):
    if not isinstance(x, int) or isinstance(x, bool) or x < 0:
        raise DocumentError(f"{key}: {what} must be a non-negative integer, got {x!r}",
                            _key_line(text, key))
    return x


def _int_list(doc, text, key, default=None):
    if key not in doc:
        if default is None:
            raise DocumentError(f'missing member "{key}"')
        return default
    val = doc[key]
    if not isinstance(val, list):
        raise DocumentError(f"{key}: expected a list", _key_line(text, key))
    return [_int(x, text, key, "every entry") for x in val]


def parse_graph(text: str, doc=None) -> Graph:
    """The graph part of a document; raises DocumentError or ValueError."""
    doc = _load(text) if doc is None else doc
    if not isinstance(doc, dict):
        raise DocumentError("top level must be an object", 1)
    vertices = _int_list(doc, text, "vertices")
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise DocumentError("edges: expected a list", _key_line(text, "edges"))
    edges = []
    for e in raw_edges:
        if not isinstance(e, list) or len(e) != 2:
            raise DocumentError(f"edges: expected a pair of ids, got {e!r}", _key_line(text, "edges"))
        edges.append(tuple(_int(x, text, "edges", "an edge endpoint") for x in e))
    if len(set(vertices)) != len(vertices):
        raise ValueError("vertices: duplicate ids")
    return Graph(vertices, edges)


def parse_instance(text: str) -> Instance:
    doc = _load(text)
    g = parse_graph(text, doc)
    raw = doc.get("lists")
    if not isinstance(raw, dict):
        raise DocumentError('"lists" must be an object mapping ids to colour lists',
                            _key_line(text, "lists"))
    lists = {}
    for k, cols in raw.items():
        try:
            v = int(k)
        except ValueError:
            raise DocumentError(f"lists: key {k!r} is not an integer id",
                                _key_line(text, "lists")) from None
        if not isinstance(cols, list):
            raise DocumentError(f"lists: L({k}) must be a list", _key_line(text, "lists"))
        lists[v] = frozenset(_int(c, text, "lists", "a colour") for c in cols)
    a = _int_list(doc, text, "A", [])
    b = _int_list(doc, text, "B", [])
    return Instance(g, frozenset(a), frozenset(b), lists)


def dump_instance(inst: Instance) -> str:
    doc = {
        "vertices": inst.graph.sorted_vertices(),
        "edges": [list(e) for e in inst.graph.sorted_edges()],
        "lists": {str(v): sorted(c) for v, c in inst.lists.items()},
        "A": sorted(inst.A),
        "B": sorted(inst.B),
    }
    return json.dumps(doc, indent=1) + "\n"


def dump_coloring(col, as_json: bool = False) -> str:
    if as_json:
        return json.dumps({"coloring": {str(v): c for v, c in sorted(col.items())}}, indent=1) + "\n"
    return "".join(f"{v}:{c}\n" for v, c in sorted(col.items()))


def parse_coloring(text: str) -> dict[int, int]:
    """Accept either ``dump_coloring`` format."""
    stripped = text.strip()
    if stripped.startswith("{"):
        doc = _load(text)
        doc = doc.get("coloring", doc) if isinstance(doc, dict) else doc
        if not isinstance(doc, dict):
            raise DocumentError("coloring must be an object", 1)
        try:
            return {int(k): int(v) for k, v in doc.items()}
        except (TypeError, ValueError) as e:
            raise DocumentError(f"coloring: {e}", _key_line(text, "coloring")) from None
    col = {}
    for i, row in enumerate(text.splitlines(), 1):
        row = row.strip()
        if not row:
            continue
        v, sep, c = row.partition(":")
        try:
            if not sep:
                raise ValueError
            col[int(v)] = int(c)
        except ValueError:
            raise DocumentError(f"expected 'vertex:colour', got {row!r}", i) from None
    return col
