"""Text renderings: DOT for graphs, stable JSON, and CSV helpers."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Mapping, Sequence

from .core import BiregularGraph
from .petersen import ColoredGraph

__all__ = ["export_dot", "vertex_text", "export_colored_dot", "colored_graph_dict", "dumps", "rows_to_csv"]


def _quote(text: str) -> str:
    escaped = str(text).replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
    return f'"{escaped}"'


def export_dot(graph: BiregularGraph, aliases: Mapping[str, str] | None = None, name: str = "H") -> str:
    """Undirected DOT with one rank per part and edges labelled by tag.

    Node labels show the vertex name and, when ``aliases`` knows it, the
    alias on a second line.  Output depends only on the graph.
    """
    aliases = aliases or {}
    lines = [f"graph {_quote(name)} {{", "  rankdir=LR;"]
    if not graph.edges and graph.y_count == 0 and graph.x_count == 0:
        lines.append("}")
        return "\n".join(lines) + "\n"
    for side, count, namer in (("Y", graph.y_count, graph.y_name), ("X", graph.x_count, graph.x_name)):
        ids = []
        for v in range(count):
            label = namer(v)
            if label in aliases:
                label = f"{label}\n{aliases[label]}"
            lines.append(f"  {side}{v} [label={_quote(label)}];")
            ids.append(f"{side}{v}")
        if ids:
            lines.append(f"  {{rank=same; {'; '.join(ids)};}}")
    for y, x, tag in graph.edges:
        lines.append(f"  Y{y} -- X{x} [label={_quote(tag)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def vertex_text(v) -> str:
    return "".join(str(s) for s in v) if isinstance(v, tuple) else str(v)


def export_colored_dot(g: ColoredGraph, name: str = "O3") -> str:
    lines = [f"graph {_quote(name)} {{"]
    for v in g.vertices:
        lines.append(f"  {_quote(vertex_text(v))};")
    for u, v, c in g.edges:
        lines.append(f"  {_quote(vertex_text(u))} -- {_quote(vertex_text(v))} [label={_quote(c)}, colorscheme=set15, color={c}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def colored_graph_dict(g: ColoredGraph) -> dict:
    return {
        "vertices": [vertex_text(v) for v in g.vertices],
        "edges": [[vertex_text(u), vertex_text(v), c] for u, v, c in g.edges],
    }


def dumps(doc) -> str:
    """JSON with insertion-ordered keys and a trailing newline."""
    return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"


def rows_to_csv(header: Sequence, rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()
