"""Wire format for gadget graphs."""

from pydantic import BaseModel, Field

from gadgets.staged import GadgetOutput
from graph_core.output import GraphModel, Vertex, name
from representation.output import RepresentationModel


class GadgetModel(BaseModel):
    """JSON form of a gadget with its predicted buried subgraph."""

    f: list[int]
    stages: int
    graph: GraphModel
    representation: RepresentationModel
    predicted_B: list[Vertex] = Field(description="The buried subgraph B(a, b)")
    predicted_K: list[Vertex] = Field(description="Vertices adjacent to all of B")
    predicted_R: list[Vertex] = Field(description="Vertices outside B and K")

    @classmethod
    def from_output(cls, out: GadgetOutput) -> "GadgetModel":
        """Describe ``out``."""
        g = out.graph
        return cls(
            f=list(out.spec.f),
            stages=out.spec.s,
            graph=GraphModel.from_graph(g),
            representation=RepresentationModel.from_representation(out.representation),
            predicted_B=[name(g, v) for v in sorted(out.predicted_B)],
            predicted_K=[name(g, v) for v in sorted(out.predicted_K)],
            predicted_R=[name(g, v) for v in sorted(out.predicted_R)],
        )


__all__ = ["GadgetModel"]
