"""JSON and DOT serialization for graphs and weight functions.

Graph JSON carries family, n/t when applicable, labels in canonical order,
and the sorted edge list.  Weight JSON binds the weights to a specific graph
through a SHA-256 digest of the canonical graph JSON bytes, so a weight file
cannot silently be verified against the wrong instance.  All emitters are
byte-stable: same input, same bytes, no timestamps.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any, Sequence

from .domination import check_weights
from .errors import InvalidInputError
from .graphs import Graph, build_complete, build_from_edges, build_path, build_sierpinski

_FAMILIES = ("sierpinski", "complete", "path", "custom")


def graph_to_dict(g: Graph) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "family": g.family,
        "vertices": g.labels(),
        "edges": [[u, v] for u, v in g.edges()],
    }
    if g.family == "sierpinski":
        payload["n"] = g.n  # type: ignore[attr-defined]
        payload["t"] = g.t  # type: ignore[attr-defined]
    elif g.family == "complete":
        payload["n"] = g.n_vertices
    return payload


def canonical_json_bytes(obj: Any) -> bytes:
    """Canonical encoding: sorted keys, no whitespace, trailing newline."""
    return (json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n").encode("utf-8")


def graph_hash(g: Graph) -> str:
    return hashlib.sha256(canonical_json_bytes(graph_to_dict(g))).hexdigest()


def _require(payload: dict, key: str, kind: type) -> Any:
    if key not in payload:
        raise InvalidInputError(f"graph JSON missing field {key!r}")
    value = payload[key]
    if kind is int and isinstance(value, bool) or not isinstance(value, kind):
        raise InvalidInputError(f"graph JSON field {key!r} has wrong type")
    return value


def graph_from_dict(payload: dict[str, Any]) -> Graph:
    """Rebuild a graph, re-deriving known families and checking consistency.

    For the sierpinski/complete/path families the graph is reconstructed
    from its parameters and the stored vertices/edges must match exactly;
    custom graphs are taken as given.
    """
    if not isinstance(payload, dict):
        raise InvalidInputError("graph JSON must be an object")
    family = _require(payload, "family", str)
    if family not in _FAMILIES:
        raise InvalidInputError(f"unknown graph family {family!r}")
    vertices = _require(payload, "vertices", list)
    edges = _require(payload, "edges", list)
    for label in vertices:
        if not isinstance(label, str):
            raise InvalidInputError("vertex labels must be strings")
    pairs: list[tuple[int, int]] = []
    for item in edges:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(r, int) and not isinstance(r, bool) for r in item)
        ):
            raise InvalidInputError(f"bad edge entry {item!r}")
        pairs.append((item[0], item[1]))

    if family == "custom":
        return build_from_edges(len(vertices), pairs, labels=vertices)
    if family == "sierpinski":
        g: Graph = build_sierpinski(_require(payload, "n", int), _require(payload, "t", int))
    elif family == "complete":
        g = build_complete(_require(payload, "n", int))
    else:
        g = build_path(len(vertices))
    if g.labels() != vertices or g.edges() != pairs:
        raise InvalidInputError(f"{family} graph JSON is inconsistent with its parameters")
    return g


def weights_to_dict(
    g: Graph, weights: Sequence[int], extra: dict[str, Any] | None = None
) -> dict[str, Any]:
    check_weights(g, weights)
    payload: dict[str, Any] = {"graph_hash": graph_hash(g), "weights": list(weights)}
    if extra:
        payload.update(extra)
    return payload


def weights_from_dict(g: Graph, payload: dict[str, Any]) -> list[int]:
    """Extract weights bound to g; the stored hash must match g's."""
    if not isinstance(payload, dict):
        raise InvalidInputError("weight JSON must be an object")
    stored = _require(payload, "graph_hash", str)
    actual = graph_hash(g)
    if stored != actual:
        raise InvalidInputError(
            f"weight file is bound to graph {stored[:12]}..., not {actual[:12]}..."
        )
    weights = _require(payload, "weights", list)
    for w in weights:
        if not isinstance(w, int) or isinstance(w, bool):
            raise InvalidInputError("weights must be integers")
    check_weights(g, weights)
    return list(weights)


_DOT_FILL = {0: "white", 1: "lightblue", 2: "gold"}


def _dot_quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, weights: Sequence[int] | None = None) -> str:
    """Undirected DOT text; vertices are colored by weight when given."""
    if weights is not None:
        check_weights(g, weights)
    lines = ["graph G {", "  node [shape=circle];"]
    for v in range(g.n_vertices):
        name = _dot_quote(g.label(v))
        if weights is None:
            lines.append(f"  {name};")
        else:
            fill = _DOT_FILL[weights[v]]
            lines.append(f'  {name} [style=filled, fillcolor="{fill}"];')
    for u, v in g.edges():
        lines.append(f"  {_dot_quote(g.label(u))} -- {_dot_quote(g.label(v))};")
    lines.append("}")
    return "\n".join(lines) + "\n"
