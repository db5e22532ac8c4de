"""Command line entry point.

Exit codes: 0 for a positive verdict, 1 for a negative verdict with its
certificate, 2 for invalid input and 3 when two independent criteria disagree.
"""

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path

from dotenv import load_dotenv
from termcolor import colored

from cli.commands import (
    EXECUTORS,
    EXIT_INCONSISTENT,
    EXIT_INPUT_ERROR,
    EXIT_POSITIVE,
    PARSERS,
    Outcome,
)
from cli.configuration import CliConfig
from common import dumps
from common.errors import InputError, InternalInconsistencyError, NotIntervalGraphError
from common.logging import get_logger, set_level
from graph_core import Graph
from graph_core.output import parse_graph
from recognition.output import ObstructionModel

logger = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """Return the parser with one subcommand per operation."""
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--format", choices=["json", "edgelist"], default="json", help="Input graph format."
    )
    shared.add_argument(
        "--json", dest="output", action="store_const", const="json", default="text",
        help="Emit JSON instead of text.",
    )
    shared.add_argument("--seed", type=int, help="Seed of the random self-test corpus.")
    shared.add_argument("--max-n", dest="max_n", type=int, help="Vertex bound of the oracle.")
    shared.add_argument("--verbose", action="store_true", help="Log decision details.")

    parser = argparse.ArgumentParser(
        prog="uniqord",
        description="Interval graph recognition and unique orderability with certificates.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for add_parser in PARSERS:
        add_parser(commands, [shared])
    return parser


def _config(args: argparse.Namespace) -> CliConfig:
    explicit = {k: v for k, v in vars(args).items() if v is not None}
    return CliConfig.from_env(**explicit)


def _parse_input(config: CliConfig, input_bytes: bytes) -> Graph:
    try:
        text = input_bytes.decode("utf-8")
    except UnicodeDecodeError as e:
        raise InputError(f"input is not UTF-8: {e}") from e
    return parse_graph(text, config.format)


def render_text(outcome: Outcome) -> str:
    """Return the human-readable form of ``outcome``, derived from its JSON payload."""
    color = "green" if outcome.code == EXIT_POSITIVE else "yellow"
    if outcome.code >= EXIT_INPUT_ERROR:
        color = "red"
    lines = [colored(outcome.headline, color, attrs=["bold"])]
    payload = json.loads(dumps(outcome.payload))
    for key, value in payload.items():
        lines.append(f"{colored(key, 'cyan'):<30}: {json.dumps(value, sort_keys=False)}")
    return "\n".join(lines) + "\n"


def render(config: CliConfig, outcome: Outcome) -> bytes:
    """Return the output bytes in the configured format."""
    if config.output == "json":
        return (dumps(outcome.payload) + "\n").encode("utf-8")
    return render_text(outcome).encode("utf-8")


def run(config: CliConfig, input_bytes: bytes) -> tuple[int, bytes]:
    """Run the configured command on ``input_bytes`` and return the exit code and output."""
    if config.verbose:
        set_level("DEBUG")
    g: Graph | None = None
    try:
        if config.needs_graph:
            g = _parse_input(config, input_bytes)
        outcome = EXECUTORS[config.command](config, g)
    except NotIntervalGraphError as e:
        logger.error(str(e))
        payload: dict[str, object] = {"error": str(e)}
        if g is not None and e.obstruction is not None:
            payload["obstruction"] = ObstructionModel.from_obstruction(g, e.obstruction)
        outcome = Outcome(EXIT_INPUT_ERROR, str(e), payload)
    except InputError as e:
        logger.error(str(e))
        return EXIT_INPUT_ERROR, b""
    except InternalInconsistencyError as e:
        logger.error(f"internal inconsistency: {e}")
        return EXIT_INCONSISTENT, b""
    return outcome.code, render(config, outcome)


def _read_input(config: CliConfig) -> bytes:
    if not config.needs_graph:
        return b""
    if config.input in (None, "-"):
        return sys.stdin.buffer.read()
    path = Path(config.input)
    if not path.is_file():
        raise InputError(f"cannot find {config.input}")
    return path.read_bytes()


def main(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, run the command, write its output and return the exit code."""
    load_dotenv()
    args = build_parser().parse_args(argv)
    try:
        config = _config(args)
        input_bytes = _read_input(config)
    except InputError as e:
        logger.error(str(e))
        return EXIT_INPUT_ERROR
    code, output = run(config, input_bytes)
    sys.stdout.buffer.write(output)
    sys.stdout.flush()
    return code


__all__ = ["build_parser", "main", "render", "render_text", "run"]
