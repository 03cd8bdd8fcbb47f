"""DIMACS undirected edge-format reader and writer.

Header "p edge <order> <edges>", edge lines "e <u> <v>" with 1-based
endpoints, comments starting with "c". Vertex labels ride along in
comment lines of the form "c label <v> <text>".
"""

from __future__ import annotations

from pathlib import Path

from .graphs import Graph, GraphError, make_graph
from .labels import format_label, parse_label


def dimacs_dumps(g: Graph) -> str:
    lines = []
    if g.labels is not None:
        for v, lab in enumerate(g.labels):
            lines.append(f"c label {v + 1} {format_label(lab)}")
    lines.append(f"p edge {g.order} {g.edge_count}")
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def write_dimacs(g: Graph, path) -> None:
    Path(path).write_text(dimacs_dumps(g))


def dimacs_loads(text: str) -> Graph:
    order = None
    edges = []
    labels: dict[int, object] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            parts = line.split(maxsplit=3)
            if len(parts) == 4 and parts[1] == "label":
                labels[int(parts[2]) - 1] = parse_label(parts[3])
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) < 4 or parts[1] != "edge":
                raise GraphError(f"malformed problem line: {line!r}")
            order = int(parts[2])
            continue
        if line.startswith("e"):
            if order is None:
                raise GraphError("edge line before the problem line")
            parts = line.split()
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
    if order is None:
        raise GraphError("missing 'p edge' header")
    lab_tuple = None
    if labels:
        if sorted(labels) != list(range(order)):
            raise GraphError("label comments must cover every vertex exactly once")
        lab_tuple = tuple(labels[i] for i in range(order))
    return make_graph(order, edges, lab_tuple)


def read_dimacs(path) -> Graph:
    return dimacs_loads(Path(path).read_text())
