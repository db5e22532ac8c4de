"""Wire formats for verdicts, buried subgraphs and the pair graph."""

from pydantic import BaseModel, Field

from graph_core import Graph
from graph_core.output import Vertex, name, order_pairs
from orderability.buried import BuriedCertificate, LeveledSet
from orderability.orders import NonUniquenessWitness
from orderability.verdict import UniquenessVerdict
from orderability.wq import WQGraph


def _names(g: Graph, vertices) -> list[Vertex]:
    return [name(g, v) for v in sorted(vertices)]


class BuriedModel(BaseModel):
    """JSON form of a buried subgraph."""

    B: list[Vertex] = Field(description="The buried vertex set")
    K: list[Vertex] = Field(description="Vertices adjacent to every member of B")
    R: list[Vertex] = Field(description="The remaining vertices, none adjacent to B")
    witness_nonedge: list[Vertex] | None = Field(
        default=None, description="Two non-adjacent members of B"
    )
    witness_outside: Vertex | None = Field(default=None, description="A member of R")

    @classmethod
    def from_certificate(
        cls, g: Graph, cert: BuriedCertificate, *, witnesses: bool = False
    ) -> "BuriedModel":
        """Describe ``cert``; the witnesses are included on request."""
        return cls(
            B=_names(g, cert.B),
            K=_names(g, cert.K),
            R=_names(g, cert.R),
            witness_nonedge=_names(g, cert.witness_nonedge) if witnesses else None,
            witness_outside=name(g, cert.witness_outside) if witnesses else None,
        )


class LeveledSetModel(BaseModel):
    """JSON form of ``B(v, u)`` with stage levels."""

    v: Vertex
    u: Vertex
    members: list[Vertex]
    levels: dict[str, int] = Field(description="Stage at which each member entered")

    @classmethod
    def from_leveled(cls, g: Graph, leveled: LeveledSet) -> "LeveledSetModel":
        """Describe ``leveled``."""
        return cls(
            v=name(g, leveled.v),
            u=name(g, leveled.u),
            members=_names(g, leveled.members),
            levels={str(name(g, w)): leveled.level[w] for w in sorted(leveled.level)},
        )


class WitnessModel(BaseModel):
    """JSON form of two orders that are neither equal nor dual."""

    order1: list[list[Vertex]]
    order2: list[list[Vertex]]
    triple: list[Vertex] = Field(description="Three vertices on which the orders disagree")

    @classmethod
    def from_witness(cls, g: Graph, witness: NonUniquenessWitness) -> "WitnessModel":
        """Describe ``witness``."""
        return cls(
            order1=order_pairs(g, witness.order1),
            order2=order_pairs(g, witness.order2),
            triple=[name(g, v) for v in witness.triple],
        )


class VerdictModel(BaseModel):
    """JSON form of a unique-orderability verdict."""

    unique: bool
    order: list[list[Vertex]] | None = Field(
        default=None, description="The associated order, present when unique"
    )
    witness: WitnessModel | None = Field(
        default=None, description="Two disagreeing associated orders, present when not unique"
    )
    buried: BuriedModel | None = None
    wq_components: int = Field(description="Number of components of (W, Q)")

    @classmethod
    def from_verdict(cls, g: Graph, verdict: UniquenessVerdict) -> "VerdictModel":
        """Describe ``verdict``."""
        return cls(
            unique=verdict.unique,
            order=order_pairs(g, verdict.order) if verdict.order is not None else None,
            witness=WitnessModel.from_witness(g, verdict.witness)
            if verdict.witness is not None
            else None,
            buried=BuriedModel.from_certificate(g, verdict.buried)
            if verdict.buried is not None
            else None,
            wq_components=verdict.wq_components,
        )


class WQModel(BaseModel):
    """JSON form of the pair graph's components."""

    pairs: int = Field(description="Size of W")
    component_count: int
    components: list[list[list[Vertex]]] = Field(
        description="The pairs of each component, components ordered by least pair"
    )
    path: list[list[Vertex]] | None = Field(
        default=None, description="A shortest Q-path between two requested pairs"
    )

    @classmethod
    def from_wq(
        cls, wq: WQGraph, path: list[tuple[int, int]] | None = None
    ) -> "WQModel":
        """Describe ``wq`` and optionally a path in it."""
        g = wq.base
        return cls(
            pairs=len(wq.pairs),
            component_count=wq.component_count,
            components=[
                [[name(g, a), name(g, b)] for a, b in wq.members(i)]
                for i in range(wq.component_count)
            ],
            path=[[name(g, a), name(g, b)] for a, b in path] if path is not None else None,
        )


__all__ = ["BuriedModel", "LeveledSetModel", "VerdictModel", "WQModel", "WitnessModel"]
