"""Graph JSON format.

``{"vertices": [{"id": "a", "m": 1.0}, ...], "edges": [{"from": "a", "to": "b", "b": 1.0}, ...]}``

Ids are strings, ``m`` and ``b`` default to 1.0, duplicate ``(from, to)`` pairs
are merged by summation.
"""

from __future__ import annotations

import json

from .graph import DirectedWeightedGraph, GraphError

__all__ = ["GraphFormatError", "parse_graph", "graph_to_dict", "serialize_graph", "load_graph"]


class GraphFormatError(GraphError):
    pass


def _number(value, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise GraphFormatError(f"{what} must be a number, got {value!r}")
    return float(value)


def graph_from_dict(doc) -> DirectedWeightedGraph:
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise GraphFormatError('graph JSON must be an object with a "vertices" list')
    verts = []
    for i, v in enumerate(doc["vertices"]):
        if not isinstance(v, dict) or "id" not in v:
            raise GraphFormatError(f"vertices[{i}] must be an object with an \"id\"")
        m = _number(v.get("m", 1.0), f"vertices[{i}].m")
        if m <= 0:
            raise GraphFormatError(f"vertices[{i}] ({v['id']!r}): m = {m} must be positive")
        verts.append((str(v["id"]), m))
    edges = []
    for i, e in enumerate(doc.get("edges", [])):
        if not isinstance(e, dict) or "from" not in e or "to" not in e:
            raise GraphFormatError(f'edges[{i}] must be an object with "from" and "to"')
        b = _number(e.get("b", 1.0), f"edges[{i}].b")
        x, y = str(e["from"]), str(e["to"])
        if b <= 0:
            raise GraphFormatError(f"edges[{i}] ({x!r} -> {y!r}): b = {b} must be positive")
        if x == y:
            raise GraphFormatError(f"edges[{i}]: self-loop at {x!r} is not allowed (no loops)")
        edges.append((x, y, b))
    try:
        g = DirectedWeightedGraph(verts, edges)
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None
    return g


def parse_graph(data: bytes | str) -> DirectedWeightedGraph:
    """Parse the graph JSON format; raises ``json.JSONDecodeError`` or ``GraphFormatError``."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return graph_from_dict(json.loads(data))


def graph_to_dict(g: DirectedWeightedGraph) -> dict:
    return {
        "vertices": [{"id": v, "m": g.m(v)} for v in g.order],
        "edges": [{"from": x, "to": y, "b": g.b(x, y)} for x, y in g.edges],
    }


def serialize_graph(g: DirectedWeightedGraph, indent: int | None = None) -> str:
    return json.dumps(graph_to_dict(g), indent=indent)


def load_graph(path) -> DirectedWeightedGraph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read())
