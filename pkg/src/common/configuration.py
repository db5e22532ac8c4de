"""Define the configurable parameters shared by the decision procedures."""

import os
from dataclasses import dataclass
from typing import Any

from dotenv import load_dotenv

from common.errors import InputError

DEFAULT_MAX_N = 12
"""Largest graph the brute-force oracle enumerates."""
MAX_N_CEILING = 16
"""Hard ceiling for ``max_n`` whatever the configuration says."""

_ENV_PREFIX = "UNIQORD_"
_ENV_FIELDS = ["max_n", "seed", "selftest_samples"]


@dataclass(kw_only=True)
class Configuration:
    """Base configuration class for the library entry points."""

    max_n: int = DEFAULT_MAX_N
    """Vertex bound of the brute-force oracle."""
    seed: int = 0
    """Seed of every random corpus."""
    selftest_samples: int = 200
    """Number of seeded random graphs checked by the self test."""

    def __post_init__(self):
        """Validate the numeric knobs."""
        if not 0 <= self.max_n <= MAX_N_CEILING:
            raise InputError(
                f"max_n must lie between 0 and {MAX_N_CEILING}, got {self.max_n}"
            )
        if self.selftest_samples < 0:
            raise InputError("selftest_samples must be non-negative")

    @classmethod
    def env_overrides(cls) -> dict[str, Any]:
        """Return the integer fields set through ``UNIQORD_*`` environment variables.

        A ``.env`` file in the working directory is loaded first.
        """
        load_dotenv()
        overrides: dict[str, Any] = {}
        for name in _ENV_FIELDS:
            raw = os.getenv(f"{_ENV_PREFIX}{name.upper()}")
            if raw is None:
                continue
            try:
                overrides[name] = int(raw)
            except ValueError as e:
                raise InputError(f"{_ENV_PREFIX}{name.upper()} must be an integer") from e
        return overrides

    @classmethod
    def from_env(cls, **kwargs: Any) -> "Configuration":
        """Build a configuration from the environment, explicit keywords winning."""
        return cls(**{**cls.env_overrides(), **kwargs})


__all__ = ["Configuration", "DEFAULT_MAX_N", "MAX_N_CEILING"]
