"""Wire formats for graphs and orders."""

import json
from typing import Literal

from pydantic import BaseModel, Field, ValidationError

from common.errors import InputError
from graph_core.graph import Graph, graph_from_edges
from graph_core.order import StrictPartialOrder

Vertex = int | str
GraphFormat = Literal["json", "edgelist"]


class GraphModel(BaseModel):
    """JSON form of a graph."""

    n: int = Field(description="Number of vertices, indexed 0..n-1", ge=0)
    edges: list[tuple[int, int]] = Field(
        default_factory=list, description="Unordered pairs of distinct vertices"
    )
    labels: dict[int, str] | None = Field(
        default=None, description="Optional display names keyed by vertex index"
    )

    def to_graph(self) -> Graph:
        """Build the domain graph."""
        return graph_from_edges(self.n, self.edges, self.labels)

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphModel":
        """Describe ``g``."""
        return cls(
            n=g.n,
            edges=sorted(g.edges),
            labels={v: g.labels[v] for v in sorted(g.labels)} or None,
        )


def name(g: Graph, v: int) -> Vertex:
    """Return the label of ``v`` when the graph has one, else its index."""
    return g.label(v)


def name_pairs(g: Graph, pairs) -> list[list[Vertex]]:
    """Return sorted pairs of vertex names."""
    return [[name(g, u), name(g, v)] for u, v in sorted(pairs)]


def order_pairs(g: Graph, o: StrictPartialOrder) -> list[list[Vertex]]:
    """Return the relation of ``o`` as named pairs."""
    return name_pairs(g, o.rel)


def parse_json_graph(text: str) -> Graph:
    """Parse the JSON graph format.

    Raises:
        InputError: The document is not valid JSON or misses required fields.
    """
    try:
        return GraphModel.model_validate(json.loads(text)).to_graph()
    except (json.JSONDecodeError, ValidationError) as e:
        raise InputError(f"malformed graph JSON: {e}") from e


def parse_edgelist(text: str) -> Graph:
    """Parse the edge-list format: ``n`` on the first line, then one ``u v`` per line.

    Everything after ``#`` on a line is ignored, as are blank lines.

    Raises:
        InputError: The vertex count is missing or a line is not a pair of integers.
    """
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise InputError("edge list is empty: expected the vertex count first")
    try:
        n = int(lines[0])
        edges = []
        for line in lines[1:]:
            u, v = line.split()
            edges.append((int(u), int(v)))
    except ValueError as e:
        raise InputError(f"malformed edge list: {e}") from e
    return graph_from_edges(n, edges)


def parse_graph(text: str, fmt: GraphFormat = "json") -> Graph:
    """Parse ``text`` according to ``fmt``."""
    if fmt == "json":
        return parse_json_graph(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise InputError(f"unknown graph format {fmt!r}")


__all__ = [
    "GraphFormat",
    "GraphModel",
    "Vertex",
    "name",
    "name_pairs",
    "order_pairs",
    "parse_edgelist",
    "parse_graph",
    "parse_json_graph",
]
