"""Command line front end."""

from cli.configuration import CliConfig
from cli.main import main, run

__all__ = ["CliConfig", "main", "run"]
