"""Test-family generators: the staged gadget, random interval graphs and named graphs."""

from gadgets.corpus import (
    ATLAS_MAX_N,
    connected_interval_graphs,
    random_injective_prefix,
    random_interval_graph,
    random_interval_order,
    random_representation,
)
from gadgets.named import NamedGraph, named_graphs
from gadgets.staged import (
    GadgetOutput,
    GadgetSpec,
    aca_gadget,
    gadget_witness_orders,
    true_stages,
)

__all__ = [
    "ATLAS_MAX_N",
    "GadgetOutput",
    "GadgetSpec",
    "NamedGraph",
    "aca_gadget",
    "connected_interval_graphs",
    "gadget_witness_orders",
    "named_graphs",
    "random_injective_prefix",
    "random_interval_graph",
    "random_interval_order",
    "random_representation",
    "true_stages",
]
