"""
Unit tests for SimplicialSourceFactory.

Tests generator selection and the truncation policy.
"""

import os
from unittest.mock import patch

import pytest

from simplicial_dgla.infrastructure.config import ComputationSettings
from simplicial_dgla.infrastructure.generator_factory import (
    SimplicialSourceFactory,
    moore_length_of,
    source_kind,
)
from simplicial_dgla.models.exceptions import LevelOutOfRangeError
from tests.fixtures.builders import (
    chain_complex_of_length_three,
    constant_simplicial,
    fixture_crossed_module,
    two_dim_algebra,
    weight_module_complex,
    weighted_two_crossed_module,
)


def _settings(**env) -> ComputationSettings:
    with patch.dict(os.environ, env, clear=True):
        return ComputationSettings(_env_file=None)


@pytest.fixture
def factory():
    """Factory with the default margin of one level."""
    return SimplicialSourceFactory(_settings())


class TestSourceKinds:
    """Test source classification."""

    @pytest.mark.parametrize(
        "source,kind,length",
        [
            (fixture_crossed_module(), "crossed_module", 1),
            (weighted_two_crossed_module(), "two_crossed_module", 2),
            (chain_complex_of_length_three(), "chain_complex", 3),
            (weight_module_complex(3), "module_complex", 3),
            (constant_simplicial(two_dim_algebra()), "simplicial", None),
        ],
    )
    def test_kind_and_length(self, source, kind, length):
        """Test the kind name and the Moore length a generator will produce."""
        assert source_kind(source) == kind
        assert moore_length_of(source) == length

    def test_unsupported_source(self):
        """Test that unknown objects are rejected."""
        with pytest.raises(ValueError, match="Unsupported source type"):
            source_kind("crossed_module")


class TestTruncationPolicy:
    """Test the stored truncation K."""

    def test_default_is_length_plus_margin(self, factory):
        """Test K = k + 1 with the default margin."""
        assert factory.truncation_for(fixture_crossed_module()) == 2
        assert factory.truncation_for(chain_complex_of_length_three()) == 4

    def test_margin_from_settings(self):
        """Test that SDGLA_TRUNCATION_MARGIN widens K."""
        factory = SimplicialSourceFactory(_settings(SDGLA_TRUNCATION_MARGIN="2"))
        assert factory.truncation_for(weighted_two_crossed_module()) == 4

    def test_override_wins(self, factory):
        """Test that an explicit truncation is used as given."""
        assert factory.truncation_for(fixture_crossed_module(), 5) == 5

    def test_simplicial_keeps_its_levels(self, factory):
        """Test that direct input defaults to the levels it carries."""
        assert factory.truncation_for(constant_simplicial(two_dim_algebra(), 3)) == 3


class TestCreate:
    """Test generator dispatch."""

    @pytest.mark.parametrize(
        "source,truncation",
        [
            (fixture_crossed_module(), 2),
            (weighted_two_crossed_module(), 3),
            (chain_complex_of_length_three(), 4),
            (weight_module_complex(3), 4),
        ],
    )
    def test_generated_truncation(self, factory, source, truncation):
        """Test that each generator stores k + 1 levels."""
        assert factory.create(source).truncation == truncation

    def test_dispatches_to_generator(self, factory, mocker):
        """Test that crossed modules go through from_crossed_module."""
        generator = mocker.patch(
            "simplicial_dgla.infrastructure.generator_factory.from_crossed_module"
        )
        spec = fixture_crossed_module()
        factory.create(spec, 3)
        generator.assert_called_once_with(spec, 3)

    def test_simplicial_is_cut_down(self, factory):
        """Test that a lower truncation keeps levels 0..K of direct input."""
        g = constant_simplicial(two_dim_algebra(), 3)
        cut = factory.create(g, 1)
        assert cut.truncation == 1
        assert cut.levels == g.levels[:2]
        assert factory.create(g) is g

    def test_simplicial_cannot_grow(self, factory):
        """Test that levels missing from the input cannot be requested."""
        with pytest.raises(LevelOutOfRangeError):
            factory.create(constant_simplicial(two_dim_algebra(), 2), 3)

    def test_generator_minimum(self, factory):
        """Test that a 2-crossed module needs K >= 3."""
        with pytest.raises(LevelOutOfRangeError):
            factory.create(weighted_two_crossed_module(), 2)
