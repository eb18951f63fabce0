"""Display model for tag graphs: ten-bin sizes/widths plus JSON and DOT output.

Vertex frequencies map to font-size bins and edge similarities to line-width
bins via min-max normalization into bins 1..10 (a degenerate range collapses
to bin 5). Layout is left entirely to the renderer.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .clustering import TagGraph


@dataclass
class DisplayGraph:
    """Binned graph ready for rendering; vertices sorted by tag, edges by pair."""

    vertices: list[tuple[str, int, int]]  # (tag, freq, size_bin)
    edges: list[tuple[str, str, float, int]]  # (tagA, tagB, phi, width_bin)


def _bin(value: float, lo: float, hi: float) -> int:
    if hi == lo:
        return 5
    return 1 + math.floor(9.0 * (value - lo) / (hi - lo))


def bin_vertices(graph: TagGraph) -> dict[str, int]:
    """Size bin (1..10) per vertex from min-max normalized frequencies."""
    lo = min(graph.vertices.values())
    hi = max(graph.vertices.values())
    return {tag: _bin(freq, lo, hi) for tag, freq in graph.vertices.items()}


def bin_edges(graph: TagGraph) -> dict[tuple[str, str], int]:
    """Width bin (1..10) per edge from min-max normalized similarities."""
    if not graph.edges:
        return {}
    lo = min(graph.edges.values())
    hi = max(graph.edges.values())
    return {pair: _bin(phi, lo, hi) for pair, phi in graph.edges.items()}


def build_display_graph(graph: TagGraph) -> DisplayGraph:
    if not graph.vertices:
        return DisplayGraph(vertices=[], edges=[])
    size_bins = bin_vertices(graph)
    width_bins = bin_edges(graph)
    vertices = [(tag, graph.vertices[tag], size_bins[tag]) for tag in sorted(graph.vertices)]
    edges = [
        (pair[0], pair[1], graph.edges[pair], width_bins[pair]) for pair in sorted(graph.edges)
    ]
    return DisplayGraph(vertices=vertices, edges=edges)


def _json_str(s: str) -> str:
    return json.dumps(s, ensure_ascii=False)


def to_json(display: DisplayGraph) -> bytes:
    """Canonical UTF-8 JSON: sorted vertices/edges, phi fixed to 6 decimals."""
    vertex_parts = [
        f'{{"tag":{_json_str(tag)},"freq":{freq},"size":{size}}}'
        for tag, freq, size in display.vertices
    ]
    edge_parts = [
        f'{{"a":{_json_str(a)},"b":{_json_str(b)},"phi":{phi:.6f},"width":{width}}}'
        for a, b, phi, width in display.edges
    ]
    body = '{"vertices":[' + ",".join(vertex_parts) + '],"edges":[' + ",".join(edge_parts) + "]}"
    return body.encode("utf-8")


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(display: DisplayGraph) -> bytes:
    """Undirected DOT graph; fontsize = 8 + 2*size_bin, penwidth = width_bin."""
    lines = ["graph tagcluster {"]
    if display.vertices:
        lines.append("  node [shape=plaintext];")
    for tag, _freq, size in display.vertices:
        lines.append(f"  {_dot_quote(tag)} [fontsize={8 + 2 * size}];")
    for a, b, _phi, width in display.edges:
        lines.append(f"  {_dot_quote(a)} -- {_dot_quote(b)} [penwidth={width}];")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")
