"""Logging utilities."""

import logging
import os

DEFAULT_LOG_LEVEL = "WARNING"


def get_logger(name: str) -> logging.Logger:
    """Initialize the logger.

    The level comes from the ``LOG_LEVEL`` environment variable so that the
    command line stays quiet unless asked otherwise.
    """
    log = logging.getLogger(name)

    if not log.handlers:
        handler = logging.StreamHandler()
        formatter = logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        )
        handler.setFormatter(formatter)
        log.addHandler(handler)

    log.setLevel(os.getenv("LOG_LEVEL", DEFAULT_LOG_LEVEL).upper())
    return log


def set_level(level: str) -> None:
    """Apply ``level`` to every logger created through :func:`get_logger`."""
    level = level.upper()
    os.environ["LOG_LEVEL"] = level
    for name, log in logging.Logger.manager.loggerDict.items():
        if isinstance(log, logging.Logger) and log.handlers:
            log.setLevel(level)
