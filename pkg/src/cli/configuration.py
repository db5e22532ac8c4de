"""Configuration for one command-line invocation."""

from dataclasses import dataclass
from typing import Literal

from common.configuration import Configuration
from common.errors import InputError
from graph_core import Pair
from graph_core.output import GraphFormat

Command = Literal["recognize", "decide", "buried", "wq", "orders", "gadget", "selftest"]
OutputFormat = Literal["json", "text"]

COMMANDS: tuple[Command, ...] = (
    "recognize",
    "decide",
    "buried",
    "wq",
    "orders",
    "gadget",
    "selftest",
)
FORMATS: tuple[GraphFormat, ...] = ("json", "edgelist")


@dataclass(kw_only=True)
class CliConfig(Configuration):
    """Main configuration class for the command-line front end."""

    command: Command
    input: str | None = None
    """Path of the graph file; ``None`` or ``-`` reads standard input."""
    format: GraphFormat = "json"
    output: OutputFormat = "text"
    enumerate: bool = False
    """List every associated order instead of stopping at three."""
    f: tuple[int, ...] = ()
    stages: int | None = None
    """Number of gadget stages; defaults to the length of ``f``."""
    pair: Pair | None = None
    """Generating pair of ``B(v, u)`` for ``buried``, or the source pair for ``wq``."""
    target: Pair | None = None
    """Target pair of a ``Q``-path for ``wq``."""
    verbose: bool = False

    def __post_init__(self):
        """Validate the command and its arguments."""
        super().__post_init__()
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise InputError(f"unknown graph format {self.format!r}")
        if self.output not in ("json", "text"):
            raise InputError(f"unknown output format {self.output!r}")
        if self.command == "gadget" and self.stages is None:
            self.stages = len(self.f)
        if (self.target is None) != (self.pair is None) and self.command == "wq":
            raise InputError("a Q-path needs both --from and --to")

    @property
    def needs_graph(self) -> bool:
        """Return whether the command reads a graph."""
        return self.command not in ("gadget", "selftest")


__all__ = ["COMMANDS", "FORMATS", "CliConfig", "Command", "OutputFormat"]
