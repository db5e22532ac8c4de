"""Wire format for obstructions."""

from pydantic import BaseModel, Field

from graph_core import Graph
from graph_core.output import Vertex, name
from recognition.obstruction import Obstruction


class ObstructionModel(BaseModel):
    """JSON form of an obstruction."""

    kind: str = Field(description="chordless_cycle or asteroidal_triple")
    cycle: list[Vertex] | None = Field(default=None, description="The chordless cycle")
    triple: list[Vertex] | None = Field(default=None, description="The asteroidal triple")
    witness_paths: list[list[Vertex]] | None = Field(
        default=None, description="x-y, x-z and y-z paths avoiding the third vertex's neighborhood"
    )

    @classmethod
    def from_obstruction(cls, g: Graph, obstruction: Obstruction) -> "ObstructionModel":
        """Describe ``obstruction`` with the vertex names of ``g``."""
        return cls(
            kind=obstruction.kind,
            cycle=[name(g, v) for v in obstruction.cycle] if obstruction.cycle else None,
            triple=[name(g, v) for v in obstruction.triple] if obstruction.triple else None,
            witness_paths=[[name(g, v) for v in p] for p in obstruction.witness_paths]
            if obstruction.witness_paths
            else None,
        )


__all__ = ["ObstructionModel"]
