"""Fixtures for tests."""

import os

FIXTURES_PATH = os.path.dirname(__file__)
GRAPHS_PATH = os.path.join(FIXTURES_PATH, "graphs")


def read_graph_file(name: str) -> bytes:
    """Return the raw bytes of a graph fixture."""
    with open(os.path.join(GRAPHS_PATH, name), "rb") as f:
        return f.read()
