"""
DOT text for networkx graphs.

Nodes and edges are emitted in sorted order with their ``label``
attribute, so the same graph always renders to the same text.
"""
from __future__ import annotations

from typing import Any

import networkx as nx


def _quote(value: Any) -> str:
    text = str(value).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{text}"'


def _attrs(data: dict[str, Any]) -> str:
    items = [f"{key}={_quote(data[key])}" for key in sorted(data) if not key.startswith("_")]
    return f" [{', '.join(items)}]" if items else ""


def to_dot(graph: nx.Graph, name: str = "G") -> str:
    """
    Render ``graph`` as DOT.

    Example:
        >>> g = nx.Graph()
        >>> g.add_edge(1, 2, label="s=(0,2)")
        >>> print(to_dot(g, "gamma"))
        graph "gamma" {
          "1";
          "2";
          "1" -- "2" [label="s=(0,2)"];
        }
    """
    directed = graph.is_directed()
    keyword, arrow = ("digraph", "->") if directed else ("graph", "--")
    lines = [f"{keyword} {_quote(name)} {{"]
    for node in sorted(graph.nodes, key=str):
        lines.append(f"  {_quote(node)}{_attrs(graph.nodes[node])};")
    edges = []
    for u, v, data in graph.edges(data=True):
        if not directed and str(v) < str(u):
            u, v = v, u
        edges.append((str(u), str(v), data))
    for u, v, data in sorted(edges, key=lambda e: (e[0], e[1])):
        lines.append(f"  {_quote(u)} {arrow} {_quote(v)}{_attrs(data)};")
    lines.append("}")
    return "\n".join(lines)
