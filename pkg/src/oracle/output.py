"""Wire format for enumerated orders."""

from pydantic import BaseModel, Field

from graph_core import Graph
from graph_core.output import Vertex, order_pairs
from oracle.orientations import OrientationSet


class OrientationSetModel(BaseModel):
    """JSON form of the associated orders of a graph."""

    count: int
    dual_classes: int = Field(description="Classes of the listed orders under duality")
    truncated: bool = False
    orders: list[list[list[Vertex]]]

    @classmethod
    def from_orientations(cls, g: Graph, found: OrientationSet) -> "OrientationSetModel":
        """Describe ``found`` with the vertex names of ``g``."""
        return cls(
            count=len(found.orders),
            dual_classes=found.dual_classes,
            truncated=found.truncated,
            orders=[order_pairs(g, o) for o in found.orders],
        )


__all__ = ["OrientationSetModel"]
