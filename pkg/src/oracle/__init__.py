"""Exhaustive enumeration of associated orders, used as ground truth."""

from oracle.orientations import (
    OrientationSet,
    dual_class_count,
    enumerate_associated_orders,
    oracle_unique,
)

__all__ = [
    "OrientationSet",
    "dual_class_count",
    "enumerate_associated_orders",
    "oracle_unique",
]
