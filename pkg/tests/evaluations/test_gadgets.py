"""The staged gadget reproduces its predicted buried subgraph for many prefixes."""

import random

import pytest

from gadgets import GadgetSpec, aca_gadget, gadget_witness_orders, random_injective_prefix
from gadgets.staged import A, B
from orderability import (
    build_wq,
    buried_subsets,
    construct_b,
    decide_unique,
    find_buried,
    is_buried,
)
from representation import verify_representation

FIXED = [(0, 1, 2), (2, 0, 1), (5,)]


def _prefixes() -> list[tuple[int, ...]]:
    rng = random.Random(7)
    drawn = [random_injective_prefix(rng.randint(1, 6), rng.randrange(2**32)) for _ in range(50)]
    return FIXED + drawn


@pytest.mark.parametrize("f", _prefixes())
def test_gadget(f) -> None:
    out = aca_gadget(GadgetSpec(f=f, s=len(f)))
    g = out.graph

    assert verify_representation(g, out.representation)
    assert construct_b(g, A, B).members == out.predicted_B

    check = is_buried(g, out.predicted_B)
    assert check
    assert check.K == out.predicted_K
    assert check.R == out.predicted_R

    cert = find_buried(g)
    assert cert is not None
    assert cert.B == out.predicted_B

    assert build_wq(g).component_count >= 4
    assert not decide_unique(g).unique
    gadget_witness_orders(out)


@pytest.mark.parametrize("f", FIXED)
def test_every_stage_count(f) -> None:
    for s in range(len(f) + 1):
        out = aca_gadget(GadgetSpec(f=f, s=s))

        assert construct_b(out.graph, A, B).members == out.predicted_B


@pytest.mark.parametrize("f", [(0, 1, 2), (2, 0, 1), (5,), (1, 0), (2, 1, 0)])
def test_predicted_set_is_the_only_buried_set(f) -> None:
    out = aca_gadget(GadgetSpec(f=f, s=len(f)))

    assert buried_subsets(out.graph) == [out.predicted_B]
