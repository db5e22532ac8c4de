"""Unique orderability of interval graphs."""

from orderability.buried import (
    BuriedCertificate,
    BuriedCheck,
    LeveledSet,
    buried_subsets,
    construct_b,
    core_of,
    find_buried,
    is_buried,
    is_minimal_buried,
)
from orderability.orders import (
    NonUniquenessWitness,
    triple_disagrees,
    two_orders_from_buried,
    unique_order_from_wq,
    validate_witness,
)
from orderability.verdict import UniquenessVerdict, decide_unique, validate_verdict
from orderability.wq import WQGraph, build_wq, q_path

__all__ = [
    "BuriedCertificate",
    "BuriedCheck",
    "LeveledSet",
    "NonUniquenessWitness",
    "UniquenessVerdict",
    "WQGraph",
    "build_wq",
    "buried_subsets",
    "construct_b",
    "core_of",
    "decide_unique",
    "find_buried",
    "is_buried",
    "is_minimal_buried",
    "q_path",
    "triple_disagrees",
    "two_orders_from_buried",
    "unique_order_from_wq",
    "validate_verdict",
    "validate_witness",
]
