"""Cross-check every criterion on the named graphs, the small atlas, random graphs and gadgets."""

import random

from pydantic import BaseModel, Field

from common.configuration import Configuration
from common.errors import UniqordError
from common.logging import get_logger
from gadgets import (
    GadgetSpec,
    aca_gadget,
    connected_interval_graphs,
    named_graphs,
    random_interval_graph,
)
from gadgets.staged import A, B
from graph_core import Graph
from oracle import oracle_unique
from orderability import construct_b, decide_unique, is_buried
from recognition import recognize, validate_obstruction
from representation import ClosedRepresentation

logger = get_logger(__name__)

ATLAS_SIZE = 6
RANDOM_MIN_N = 7
RANDOM_MAX_N = 12
GADGET_PREFIXES = [(0, 1, 2), (2, 0, 1), (5,)]


class SelftestReport(BaseModel):
    """Summary of a self-test run."""

    checked: int = 0
    corpora: dict[str, int] = Field(default_factory=dict, description="Graphs per corpus")
    failures: list[str] = Field(default_factory=list)


def _check_unique(g: Graph, config: Configuration, expected: bool | None = None) -> list[str]:
    verdict = decide_unique(g)
    problems = []
    if expected is not None and verdict.unique != expected:
        problems.append(f"expected unique={expected}, decided {verdict.unique}")
    if g.n <= config.max_n and oracle_unique(g, max_n=config.max_n) != verdict.unique:
        problems.append(f"oracle disagrees with the decided unique={verdict.unique}")
    return problems


def _check_named(config: Configuration) -> tuple[int, list[str]]:
    failures = []
    named = named_graphs()
    for item in named:
        found = recognize(item.graph)
        interval = isinstance(found, ClosedRepresentation)
        if interval != item.interval:
            failures.append(f"{item.name}: expected interval={item.interval}")
            continue
        if not isinstance(found, ClosedRepresentation):
            if not validate_obstruction(item.graph, found):
                failures.append(f"{item.name}: obstruction does not validate")
            continue
        failures += [f"{item.name}: {p}" for p in _check_unique(item.graph, config, item.unique)]
    return len(named), failures


def _check_atlas(config: Configuration) -> tuple[int, list[str]]:
    graphs = connected_interval_graphs(ATLAS_SIZE)
    failures = []
    for i, g in enumerate(graphs):
        failures += [f"atlas #{i} (n={g.n}): {p}" for p in _check_unique(g, config)]
    return len(graphs), failures


def _check_random(config: Configuration) -> tuple[int, list[str]]:
    rng = random.Random(config.seed)
    hi = max(1, min(RANDOM_MAX_N, config.max_n))
    lo = min(RANDOM_MIN_N, hi)
    failures = []
    for i in range(config.selftest_samples):
        n, seed = rng.randint(lo, hi), rng.randrange(2**32)
        g, _ = random_interval_graph(n, seed)
        failures += [f"random #{i} (n={n}, seed={seed}): {p}" for p in _check_unique(g, config)]
    return config.selftest_samples, failures


def _check_gadgets() -> tuple[int, list[str]]:
    failures = []
    for f in GADGET_PREFIXES:
        out = aca_gadget(GadgetSpec(f=f, s=len(f)))
        members = construct_b(out.graph, A, B).members
        check = is_buried(out.graph, members)
        if members != out.predicted_B:
            failures.append(f"gadget {list(f)}: B(a, b) differs from the prediction")
        if not check or check.K != out.predicted_K or check.R != out.predicted_R:
            failures.append(f"gadget {list(f)}: predicted K and R do not match")
        if decide_unique(out.graph).unique:
            failures.append(f"gadget {list(f)}: decided uniquely orderable")
    return len(GADGET_PREFIXES), failures


def run_selftest(config: Configuration) -> SelftestReport:
    """Run every corpus and collect failures instead of stopping at the first."""
    report = SelftestReport()
    corpora = {
        "named": lambda: _check_named(config),
        "atlas": lambda: _check_atlas(config),
        "random": lambda: _check_random(config),
        "gadgets": _check_gadgets,
    }
    for name, check in corpora.items():
        try:
            count, failures = check()
        except UniqordError as e:
            logger.error(f"{name} corpus aborted: {e}")
            count, failures = 0, [f"{name}: {type(e).__name__}: {e}"]
        logger.info(f"{name}: {count} graphs, {len(failures)} failures")
        report.corpora[name] = count
        report.checked += count
        report.failures.extend(failures)
    return report


__all__ = ["SelftestReport", "run_selftest"]
