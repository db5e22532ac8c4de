"""Closed interval representations and the representation/order bridges."""

from representation.interval_order import (
    find_two_plus_two,
    is_interval_order,
    order_to_representation,
)
from representation.representation import (
    ClosedRepresentation,
    Endpoint,
    induced_graph,
    interval_precedes,
    normalize_distinguishing,
    representation_to_order,
    verify_representation,
)

__all__ = [
    "ClosedRepresentation",
    "Endpoint",
    "find_two_plus_two",
    "induced_graph",
    "interval_precedes",
    "is_interval_order",
    "normalize_distinguishing",
    "order_to_representation",
    "representation_to_order",
    "verify_representation",
]
