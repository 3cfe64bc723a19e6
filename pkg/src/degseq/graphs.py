"""Simple undirected graphs on integer-labeled vertices.

Loop-free and multi-edge-free throughout; isolated vertices are allowed
(they matter for induced subgraphs even though degree sequences never
contain zeros).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class SimpleGraph:
    """An undirected graph: ``vertex_count`` vertices, edges as (u, v) with u < v."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(
                    f"edge ({u}, {v}) out of range for {self.vertex_count} vertices")
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(normalized))

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def graph_from_edges(vertex_count: int, pairs: Iterable[tuple[int, int]]) -> SimpleGraph:
    return SimpleGraph(vertex_count, frozenset(tuple(p) for p in pairs))


def sorted_edges(graph: SimpleGraph) -> list[tuple[int, int]]:
    return sorted(graph.edges)


def adjacency(graph: SimpleGraph) -> list[list[int]]:
    """Sorted neighbor lists, one per vertex."""
    neigh: list[list[int]] = [[] for _ in range(graph.vertex_count)]
    for u, v in sorted(graph.edges):
        neigh[u].append(v)
        neigh[v].append(u)
    for lst in neigh:
        lst.sort()
    return neigh


def degree_sequence(graph: SimpleGraph) -> list[int]:
    """Vertex degrees sorted nonincreasing. Zeros appear for isolated vertices."""
    degrees = [0] * graph.vertex_count
    for u, v in graph.edges:
        degrees[u] += 1
        degrees[v] += 1
    return sorted(degrees, reverse=True)


def disjoint_union(first: SimpleGraph, second: SimpleGraph) -> SimpleGraph:
    """Place ``second`` after ``first``, shifting its vertex labels."""
    shift = first.vertex_count
    edges = set(first.edges)
    edges.update((u + shift, v + shift) for u, v in second.edges)
    return SimpleGraph(first.vertex_count + second.vertex_count, frozenset(edges))


def components_with_vertices(graph: SimpleGraph) -> list[tuple[SimpleGraph, tuple[int, ...]]]:
    """Connected components with their original vertex lists.

    Each component is relabeled 0..k-1 following ascending original ids;
    the paired tuple maps new label -> original vertex. Components are
    ordered by their smallest original vertex.
    """
    neigh = adjacency(graph)
    seen = [False] * graph.vertex_count
    out: list[tuple[SimpleGraph, tuple[int, ...]]] = []
    for start in range(graph.vertex_count):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        members = []
        while stack:
            v = stack.pop()
            members.append(v)
            for w in neigh[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        members.sort()
        index = {v: i for i, v in enumerate(members)}
        sub = frozenset(
            (index[u], index[v])
            for u, v in graph.edges
            if u in index and v in index
        )
        out.append((SimpleGraph(len(members), sub), tuple(members)))
    return out


def components(graph: SimpleGraph) -> list[SimpleGraph]:
    """Connected components as standalone relabeled graphs."""
    return [part for part, _ in components_with_vertices(graph)]


# Serialization. Text form:
#     p <vertex_count>
#     u v        (one line per edge, sorted lexicographically)
# Lines starting with 'c' are comments. JSON form mirrors the dataclass.


def to_edge_list_text(graph: SimpleGraph) -> str:
    lines = [f"p {graph.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in sorted(graph.edges))
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> SimpleGraph:
    vertex_count = None
    edges = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            vertex_count = int(line.split()[1])
            continue
        u, v = line.split()
        edges.append((int(u), int(v)))
    if vertex_count is None:
        raise ValueError("missing 'p <vertex_count>' header line")
    return SimpleGraph(vertex_count, frozenset(edges))


def to_json_dict(graph: SimpleGraph) -> dict:
    return {
        "vertex_count": graph.vertex_count,
        "edges": [[u, v] for u, v in sorted(graph.edges)],
    }


def from_json_dict(data: dict) -> SimpleGraph:
    return SimpleGraph(data["vertex_count"],
                       frozenset((u, v) for u, v in data["edges"]))


def to_json_text(graph: SimpleGraph) -> str:
    return json.dumps(to_json_dict(graph), indent=2) + "\n"
