import json
from fractions import Fraction

import pytest
from pydantic import BaseModel

from common import CertificateEncoder, dumps
from common.configuration import DEFAULT_MAX_N, MAX_N_CEILING, Configuration
from common.errors import InputError, NotIntervalGraphError, UniqordError


class TestConfiguration:
    """Tests for the shared configuration."""

    def test_defaults(self, monkeypatch):
        """Without environment overrides the documented defaults apply."""
        monkeypatch.delenv("UNIQORD_MAX_N", raising=False)
        monkeypatch.delenv("UNIQORD_SEED", raising=False)

        config = Configuration.from_env()

        assert config.max_n == DEFAULT_MAX_N
        assert config.seed == 0

    def test_environment_override(self, monkeypatch):
        """UNIQORD_* variables are read as integers."""
        monkeypatch.setenv("UNIQORD_MAX_N", "9")
        monkeypatch.setenv("UNIQORD_SEED", "17")

        config = Configuration.from_env()

        assert config.max_n == 9
        assert config.seed == 17

    def test_explicit_keywords_win(self, monkeypatch):
        """Keywords passed by the caller take precedence over the environment."""
        monkeypatch.setenv("UNIQORD_MAX_N", "9")

        assert Configuration.from_env(max_n=5).max_n == 5

    def test_malformed_environment(self, monkeypatch):
        """A non-integer override is an input error."""
        monkeypatch.setenv("UNIQORD_MAX_N", "many")

        with pytest.raises(InputError):
            Configuration.from_env()

    @pytest.mark.parametrize("max_n", [-1, MAX_N_CEILING + 1])
    def test_max_n_is_bounded(self, max_n):
        """The oracle bound cannot exceed the hard ceiling."""
        with pytest.raises(InputError):
            Configuration(max_n=max_n)

    def test_negative_samples(self):
        """The self-test sample count cannot be negative."""
        with pytest.raises(InputError):
            Configuration(selftest_samples=-1)


class TestCertificateEncoder:
    """Tests for the certificate JSON encoder."""

    def test_rationals(self):
        """Integral rationals stay integers, others become pairs."""
        assert json.loads(dumps([Fraction(1, 2), Fraction(4, 2)])) == [[1, 2], 2]

    def test_sets_are_sorted(self):
        """Sets serialize in sorted order."""
        assert json.loads(dumps({"B": frozenset({3, 1, 2})})) == {"B": [1, 2, 3]}

    def test_models_drop_missing_fields(self):
        """Pydantic models serialize without their unset optional fields."""

        class Sample(BaseModel):
            value: int
            note: str | None = None

        assert json.loads(json.dumps(Sample(value=1), cls=CertificateEncoder)) == {"value": 1}

    def test_unknown_objects_still_fail(self):
        """Objects the encoder does not know are rejected."""
        with pytest.raises(TypeError):
            dumps(object())


def test_error_hierarchy() -> None:
    error = NotIntervalGraphError("no", obstruction=None)

    assert isinstance(error, InputError)
    assert isinstance(error, UniqordError)
    assert isinstance(error, ValueError)
