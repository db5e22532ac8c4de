"""Interval graph recognition."""

from recognition.asteroidal import find_asteroidal_triple, least_shortest_path
from recognition.cliques import consecutive_clique_ordering, maximal_cliques
from recognition.obstruction import Obstruction, validate_obstruction
from recognition.orientation import associated_order
from recognition.recognize import is_interval_graph, obstruction_of, recognize
from recognition.triangulated import check_triangulated

__all__ = [
    "Obstruction",
    "associated_order",
    "check_triangulated",
    "consecutive_clique_ordering",
    "find_asteroidal_triple",
    "is_interval_graph",
    "least_shortest_path",
    "maximal_cliques",
    "obstruction_of",
    "recognize",
    "validate_obstruction",
]
