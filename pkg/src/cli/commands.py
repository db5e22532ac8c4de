"""The subcommands: their arguments and what each one runs."""

import argparse
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from cli.configuration import CliConfig
from cli.selftest import run_selftest
from gadgets import GadgetSpec, aca_gadget
from gadgets.output import GadgetModel
from graph_core import Graph
from graph_core.output import order_pairs
from oracle import enumerate_associated_orders
from oracle.output import OrientationSetModel
from orderability import build_wq, construct_b, decide_unique, find_buried, is_buried, q_path
from orderability.output import BuriedModel, LeveledSetModel, VerdictModel, WQModel
from recognition import recognize
from recognition.output import ObstructionModel
from representation import ClosedRepresentation, representation_to_order
from representation.output import RepresentationModel

EXIT_POSITIVE = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2
EXIT_INCONSISTENT = 3


@dataclass
class Outcome:
    """What a command produced: an exit code, a headline and the JSON payload."""

    code: int
    headline: str
    payload: dict[str, Any] = field(default_factory=dict)


def _pair(text: str) -> tuple[int, int]:
    try:
        u, v = (int(part) for part in text.split(","))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected two vertex indices like 0,2, got {text!r}") from e
    return u, v


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from e


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "input",
        nargs="?",
        default=None,
        help="Path to the graph file; omitted or '-' reads standard input.",
    )


def recognize_graph(config: CliConfig, g: Graph) -> Outcome:
    """Execute the ``recognize`` command."""
    found = recognize(g)
    if isinstance(found, ClosedRepresentation):
        return Outcome(
            EXIT_POSITIVE,
            "interval graph",
            {
                "interval": True,
                "representation": RepresentationModel.from_representation(found),
                "order": order_pairs(g, representation_to_order(found)),
            },
        )
    return Outcome(
        EXIT_NEGATIVE,
        f"not an interval graph ({found.kind.replace('_', ' ')})",
        {"interval": False, "obstruction": ObstructionModel.from_obstruction(g, found)},
    )


def decide_graph(config: CliConfig, g: Graph) -> Outcome:
    """Execute the ``decide`` command."""
    verdict = decide_unique(g)
    model = VerdictModel.from_verdict(g, verdict)
    if verdict.unique:
        return Outcome(EXIT_POSITIVE, "uniquely orderable", model.model_dump(exclude_none=True))
    return Outcome(EXIT_NEGATIVE, "not uniquely orderable", model.model_dump(exclude_none=True))


def buried_graph(config: CliConfig, g: Graph) -> Outcome:
    """Execute the ``buried`` command."""
    if config.pair is not None:
        v, u = config.pair
        leveled = construct_b(g, v, u)
        check = is_buried(g, leveled.members)
        payload: dict[str, Any] = {"leveled": LeveledSetModel.from_leveled(g, leveled)}
        cert = check.certificate()
        if cert is None:
            payload["reason"] = check.reason
            return Outcome(EXIT_NEGATIVE, f"B({v}, {u}) is not buried", payload)
        payload["buried"] = BuriedModel.from_certificate(g, cert, witnesses=True)
        return Outcome(EXIT_POSITIVE, f"B({v}, {u}) is buried", payload)

    cert = find_buried(g)
    if cert is None:
        return Outcome(EXIT_NEGATIVE, "no buried subgraph", {"buried": None})
    return Outcome(
        EXIT_POSITIVE,
        "buried subgraph found",
        {"buried": BuriedModel.from_certificate(g, cert, witnesses=True)},
    )


def wq_graph(config: CliConfig, g: Graph) -> Outcome:
    """Execute the ``wq`` command."""
    wq = build_wq(g)
    path = None
    if config.pair is not None and config.target is not None:
        path = q_path(wq, config.pair, config.target)
    model = WQModel.from_wq(wq, path)
    headline = f"(W, Q) has {wq.component_count} components"
    code = EXIT_POSITIVE if wq.component_count == 2 else EXIT_NEGATIVE
    return Outcome(code, headline, model.model_dump(exclude_none=True))


def orders_graph(config: CliConfig, g: Graph) -> Outcome:
    """Execute the ``orders`` command."""
    found = enumerate_associated_orders(
        g, max_n=config.max_n, limit=None if config.enumerate else 3
    )
    unique = 0 < len(found.orders) <= 2 and found.dual_classes == 1 and not found.truncated
    model = OrientationSetModel.from_orientations(g, found)
    return Outcome(
        EXIT_POSITIVE if unique else EXIT_NEGATIVE,
        f"{len(found.orders)}{'+' if found.truncated else ''} associated orders",
        {"unique": unique, **model.model_dump()},
    )


def gadget(config: CliConfig, g: Graph | None) -> Outcome:
    """Execute the ``gadget`` command."""
    out = aca_gadget(GadgetSpec(f=config.f, s=config.stages or 0))
    return Outcome(
        EXIT_POSITIVE,
        f"gadget on {out.graph.n} vertices",
        GadgetModel.from_output(out).model_dump(),
    )


def selftest(config: CliConfig, g: Graph | None) -> Outcome:
    """Execute the ``selftest`` command."""
    report = run_selftest(config)
    if report.failures:
        return Outcome(
            EXIT_INCONSISTENT,
            f"{len(report.failures)} of {report.checked} checks failed",
            report.model_dump(),
        )
    return Outcome(EXIT_POSITIVE, f"all {report.checked} checks passed", report.model_dump())


Execute = Callable[[CliConfig, Any], Outcome]


def add_parser_recognize(parser, parents) -> None:
    """Add a ``recognize`` command to the parser."""
    p = parser.add_parser(
        "recognize",
        parents=parents,
        help="Decide whether a graph is an interval graph.",
        description="Emit a closed interval representation, or a chordless cycle or "
        "asteroidal triple when the graph is not an interval graph.",
    )
    _add_input(p)


def add_parser_decide(parser, parents) -> None:
    """Add a ``decide`` command to the parser."""
    p = parser.add_parser(
        "decide",
        parents=parents,
        help="Decide whether an interval graph is uniquely orderable.",
    )
    _add_input(p)


def add_parser_buried(parser, parents) -> None:
    """Add a ``buried`` command to the parser."""
    p = parser.add_parser(
        "buried",
        parents=parents,
        help="Search for a buried subgraph, or build B(v, u) for one pair.",
    )
    _add_input(p)
    p.add_argument("--pair", type=_pair, help="Two non-adjacent vertices v,u.")


def add_parser_wq(parser, parents) -> None:
    """Add a ``wq`` command to the parser."""
    p = parser.add_parser(
        "wq",
        parents=parents,
        help="Show the components of (W, Q) and optionally a shortest Q-path.",
    )
    _add_input(p)
    p.add_argument("--from", dest="pair", type=_pair, help="Source pair a,b of the Q-path.")
    p.add_argument("--to", dest="target", type=_pair, help="Target pair c,d of the Q-path.")


def add_parser_orders(parser, parents) -> None:
    """Add an ``orders`` command to the parser."""
    p = parser.add_parser(
        "orders",
        parents=parents,
        help="Enumerate the associated orders by brute force.",
    )
    _add_input(p)
    p.add_argument(
        "--enumerate",
        action="store_true",
        help="List every associated order instead of stopping after three.",
    )


def add_parser_gadget(parser, parents) -> None:
    """Add a ``gadget`` command to the parser."""
    p = parser.add_parser(
        "gadget",
        parents=parents,
        help="Build the staged gadget graph of an injective sequence.",
        epilog="Example: uniqord gadget --f 2,0,1 --stages 3 --json",
    )
    p.add_argument("--f", type=_int_list, default=(), help="Injective prefix, e.g. 2,0,1.")
    p.add_argument("--stages", type=int, help="Number of stages (default: length of --f).")


def add_parser_selftest(parser, parents) -> None:
    """Add a ``selftest`` command to the parser."""
    p = parser.add_parser(
        "selftest",
        parents=parents,
        help="Cross-check every criterion on the named, atlas and random corpora.",
    )


PARSERS = [
    add_parser_recognize,
    add_parser_decide,
    add_parser_buried,
    add_parser_wq,
    add_parser_orders,
    add_parser_gadget,
    add_parser_selftest,
]

EXECUTORS: dict[str, Execute] = {
    "recognize": recognize_graph,
    "decide": decide_graph,
    "buried": buried_graph,
    "wq": wq_graph,
    "orders": orders_graph,
    "gadget": gadget,
    "selftest": selftest,
}


__all__ = [
    "EXECUTORS",
    "EXIT_INCONSISTENT",
    "EXIT_INPUT_ERROR",
    "EXIT_NEGATIVE",
    "EXIT_POSITIVE",
    "PARSERS",
    "Outcome",
]
