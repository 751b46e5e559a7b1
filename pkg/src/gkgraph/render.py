"""Graph serialization: the JSON interchange schema, DOT emission, and the
plain-text tables the CLI prints.

JSON schema (primes are decimal strings so consumers never hit integer-width
traps):

    {"label": str | null,
     "vertices": ["2", "3", ...],
     "edges": [["2", "3"], ...] | null,
     "partition": [["2", "3"], ...] | null}

Edges carry the smaller endpoint first and are sorted numerically.  A null
edge list marks a components-only record (partition known, adjacency not).
"""

from __future__ import annotations

import json

from .graphs import ComponentPartition, GKGraph


def graph_to_dict(g: GKGraph, partition: ComponentPartition | None = None) -> dict:
    return {
        "label": g.label,
        "vertices": [str(v) for v in g.sorted_vertices()],
        "edges": [[str(a), str(b)] for a, b in g.sorted_edges()],
        "partition": _partition_lists(partition),
    }


def partition_only_to_dict(label: str, partition: ComponentPartition) -> dict:
    return {
        "label": label,
        "vertices": [str(v) for v in sorted(partition.vertex_set())],
        "edges": None,
        "partition": _partition_lists(partition),
    }


def _partition_lists(partition: ComponentPartition | None):
    if partition is None:
        return None
    return [[str(v) for v in sorted(block)] for block in partition.blocks]


def graph_from_dict(data: dict) -> GKGraph:
    """Parse and validate the JSON schema; raises ValueError on bad input."""
    if not isinstance(data, dict):
        raise ValueError("graph document must be a JSON object")
    for key in ("vertices", "edges"):
        if key not in data:
            raise ValueError(f"graph document is missing '{key}'")
    label = data.get("label")
    if label is not None and not isinstance(label, str):
        raise ValueError("label must be a string or null")
    try:
        vertices = [int(v) for v in data["vertices"]]
    except (TypeError, ValueError):
        raise ValueError("vertices must be decimal strings") from None
    if data["edges"] is None:
        raise ValueError("document has no edge list (components-only record)")
    try:
        edges = [(int(a), int(b)) for a, b in data["edges"]]
    except (TypeError, ValueError):
        raise ValueError("edges must be pairs of decimal strings") from None
    return GKGraph.build(vertices, edges, label=label)


def dumps(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def loads_graph(text: str) -> GKGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from None
    return graph_from_dict(data)


# ---------------------------------------------------------------------------
# DOT
# ---------------------------------------------------------------------------

def to_dot(label: str | None, partition: ComponentPartition,
           g: GKGraph | None) -> str:
    """DOT text with one cluster per connected component; edge statements are
    omitted (with a marker comment) for components-only records."""
    name = json.dumps(label or "prime graph")
    lines = [f"graph {name} {{"]
    for i, block in enumerate(partition.blocks):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="component {i + 1}";')
        for v in sorted(block):
            lines.append(f'    "{v}";')
        lines.append("  }")
    if g is None:
        lines.append("  // edges unavailable (components-only record)")
    else:
        for a, b in g.sorted_edges():
            lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# plain-text tables
# ---------------------------------------------------------------------------

def to_table(label: str | None, partition: ComponentPartition,
             g: GKGraph | None) -> str:
    lines = []
    if label:
        lines.append(label)
    verts = sorted(partition.vertex_set())
    lines.append(f"vertices ({len(verts)}): " + " ".join(map(str, verts)))
    if g is None:
        lines.append("edges: unavailable (components-only record)")
    else:
        lines.append(f"edges ({len(g.edges)}): " +
                     " ".join(f"{a}-{b}" for a, b in g.sorted_edges()))
    lines.append(f"components ({partition.s}):")
    for i, block in enumerate(partition.blocks):
        lines.append(f"  {i + 1}: {{" + ", ".join(map(str, sorted(block))) + "}")
    if g is not None:
        degs = {v: len(g.adjacency[v]) for v in verts}
        lines.append("degrees:")
        for v in verts:
            lines.append(f"  deg({v}) = {degs[v]}")
    return "\n".join(lines) + "\n"
