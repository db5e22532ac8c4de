"""Wire format for closed representations."""

import json
from fractions import Fraction

from pydantic import BaseModel, Field, ValidationError, field_validator

from common.errors import InputError
from representation.representation import ClosedRepresentation

Rational = int | tuple[int, int]
"""An integer or a ``[numerator, denominator]`` pair."""


def to_rational(value: Fraction) -> Rational:
    """Return the wire form of ``value``."""
    if value.denominator == 1:
        return value.numerator
    return (value.numerator, value.denominator)


def from_rational(value: Rational) -> Fraction:
    """Return the fraction denoted by ``value``."""
    if isinstance(value, int):
        return Fraction(value)
    numerator, denominator = value
    return Fraction(numerator, denominator)


class RepresentationModel(BaseModel):
    """JSON form of a closed representation."""

    n: int = Field(description="Number of vertices", ge=0)
    intervals: list[tuple[Rational, Rational]] = Field(
        description="One [left, right] pair per vertex; rationals as [numerator, denominator]"
    )

    @field_validator("intervals")
    @classmethod
    def _nonzero_denominators(cls, intervals):
        for pair in intervals:
            for value in pair:
                if isinstance(value, tuple) and value[1] == 0:
                    raise ValueError("denominator must be non-zero")
        return intervals

    def to_representation(self) -> ClosedRepresentation:
        """Build the domain representation."""
        if len(self.intervals) != self.n:
            raise InputError(f"expected {self.n} intervals, got {len(self.intervals)}")
        return ClosedRepresentation.from_intervals(
            [(from_rational(lo), from_rational(hi)) for lo, hi in self.intervals]
        )

    @classmethod
    def from_representation(cls, r: ClosedRepresentation) -> "RepresentationModel":
        """Describe ``r``."""
        return cls(
            n=r.n,
            intervals=[(to_rational(lo), to_rational(hi)) for lo, hi in r.intervals()],
        )


def parse_representation(text: str) -> ClosedRepresentation:
    """Parse the JSON representation format.

    Raises:
        InputError: The document is malformed.
    """
    try:
        return RepresentationModel.model_validate(json.loads(text)).to_representation()
    except (json.JSONDecodeError, ValidationError) as e:
        raise InputError(f"malformed representation JSON: {e}") from e


__all__ = [
    "Rational",
    "RepresentationModel",
    "from_rational",
    "parse_representation",
    "to_rational",
]
