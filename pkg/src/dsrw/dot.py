"""Graphviz export."""

from __future__ import annotations

from .graph import Graph


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: Graph, name: str = "G") -> str:
    """Render ``g`` as a DOT digraph.

    Output depends only on the graph value: nodes and edges come out in
    sorted order, one statement per line.
    """
    lines = [f"digraph {_quote(name)} {{"]
    for n in g.sorted_nodes():
        label = f"{n}:{g.labels[n]}" if g.is_labeled(n) else f"{n}:•"
        lines.append(f"  {_quote(n)} [label={_quote(label)}];")
    for n, i in g.edges():
        lines.append(f"  {_quote(n)} -> {_quote(g.successors[n][i - 1])} [label=\"{i}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
