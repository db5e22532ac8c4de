"""Common packages."""

import json
from dataclasses import asdict, is_dataclass
from fractions import Fraction

from pydantic import BaseModel


class CertificateEncoder(json.JSONEncoder):
    """JSON encoder for certificates.

    Rationals become ``[numerator, denominator]`` (integers stay integers) and
    sets are emitted sorted so that output is byte-identical across runs.
    """

    def default(self, obj):  # noqa: D102
        if isinstance(obj, Fraction):
            if obj.denominator == 1:
                return obj.numerator
            return [obj.numerator, obj.denominator]
        elif isinstance(obj, (set, frozenset)):
            return sorted(obj, key=_sort_key)
        elif isinstance(obj, BaseModel):
            return obj.model_dump(exclude_none=True)
        elif is_dataclass(obj) and not isinstance(obj, type):
            return asdict(obj)
        return super().default(obj)


def _sort_key(value):
    # mixed label/index collections sort by their text form
    return (isinstance(value, str), str(value) if isinstance(value, str) else value)


def dumps(payload, *, indent: int | None = 2) -> str:
    """Serialize ``payload`` with :class:`CertificateEncoder`."""
    return json.dumps(payload, cls=CertificateEncoder, indent=indent)


__all__ = ["CertificateEncoder", "dumps"]
