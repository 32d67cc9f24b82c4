"""
Unit tests for PipelineService.

Runs every command pipeline on small presentations and checks which stage
fails and what the partial result carries.
"""

import dataclasses
import os
from unittest.mock import patch

import pytest

from simplicial_dgla.infrastructure.config import ComputationSettings
from simplicial_dgla.infrastructure.generator_factory import SimplicialSourceFactory
from simplicial_dgla.models.exceptions import LevelOutOfRangeError
from simplicial_dgla.models.linear import BilinearMap, ExactMatrix
from simplicial_dgla.models.multi_index import MultiIndex, PeifferPair
from simplicial_dgla.services.dgla_service import build_dgla
from simplicial_dgla.services.nerve_service import from_two_crossed_module
from simplicial_dgla.services.pipeline_service import PipelineService, presentation_report
from tests.fixtures.builders import (
    chain_complex_of_length_three,
    constant_simplicial,
    fixture_crossed_module,
    two_dim_algebra,
    weighted_two_crossed_module,
)


def _service(**overrides) -> PipelineService:
    with patch.dict(os.environ, {}, clear=True):
        settings = ComputationSettings(_env_file=None, **overrides)
    return PipelineService(SimplicialSourceFactory(settings), settings)


def _broken_crossed_module():
    """E . X = 2X is not equivariant."""
    return dataclasses.replace(
        fixture_crossed_module(), action=BilinearMap.from_array([[[2]], [[0]]], 2, 1, 1)
    )


class TestPresentationReport:
    """Test presentation_report dispatch."""

    def test_crossed_module(self):
        """Test that a crossed module gets the crossed module laws."""
        assert presentation_report(fixture_crossed_module()).subject == "crossed_module"

    def test_sources_without_presentation_laws(self):
        """Test that chain complexes and simplicial input have no presentation report."""
        assert presentation_report(chain_complex_of_length_three()) is None
        assert presentation_report(constant_simplicial(two_dim_algebra())) is None


class TestValidate:
    """Test the validate pipeline."""

    def test_valid_crossed_module(self):
        """Test that a valid crossed module passes both validators."""
        result = _service().validate(fixture_crossed_module())
        assert result.ok
        assert result.kind == "crossed_module"
        assert [r.subject for r in result.validations] == ["crossed_module", "simplicial"]
        assert result.simplicial.truncation == 2

    def test_truncation_override(self):
        """Test that an explicit truncation replaces k + margin."""
        result = _service().validate(fixture_crossed_module(), truncation=3)
        assert result.simplicial.truncation == 3

    def test_broken_presentation_stops_before_generation(self):
        """Test that a failing law names the validate stage and skips the nerve."""
        result = _service().validate(_broken_crossed_module())
        assert not result.ok
        assert result.failed_stage == "validate"
        assert result.simplicial is None
        assert result.validations[0].laws() == ["CM-equivariance"]
        assert "CM-equivariance" in result.message

    def test_broken_simplicial_input(self):
        """Test that a bad face map fails the validate stage."""
        g = constant_simplicial(two_dim_algebra(), 2)
        faces = [list(level) for level in g.faces]
        faces[1][0] = ExactMatrix.zeros(2, 2)
        broken = dataclasses.replace(g, faces=tuple(tuple(level) for level in faces))
        result = _service().validate(broken)
        assert result.failed_stage == "validate"
        assert result.validations[-1].subject == "simplicial"
        assert not result.validations[-1].ok

    def test_truncation_too_small_is_an_input_error(self):
        """Test that K below the generator minimum propagates."""
        with pytest.raises(LevelOutOfRangeError):
            _service().validate(fixture_crossed_module(), truncation=1)


class TestMoore:
    """Test the moore pipeline."""

    def test_crossed_module(self):
        """Test Moore dims, homology and the absence of Peiffer tables."""
        result = _service().moore(fixture_crossed_module())
        assert result.ok
        assert result.moore.dims == (2, 1, 0)
        assert result.homology == (1, 0, 0)
        assert result.peiffer == {}
        assert result.symmetric_peiffer is None
        assert result.validations[-1].subject == "moore"

    def test_weighted_two_crossed_module(self):
        """Test that the Peiffer table on P-bar(2) and its symmetrization are reported."""
        result = _service().moore(weighted_two_crossed_module())
        assert result.ok
        pair = PeifferPair(2, MultiIndex.of(0), MultiIndex.of(1))
        assert list(result.peiffer) == [pair]
        assert result.peiffer[pair].value(0, 0) == (1,)
        assert result.symmetric_peiffer.value(0, 0) == (2,)


class TestDGLA:
    """Test the dgla pipeline."""

    def test_crossed_module(self):
        """Test that the DGLA is built, verified and compared with the oracle."""
        result = _service().dgla(fixture_crossed_module())
        assert result.ok
        assert result.dgla.dims == (2, 1)
        assert result.verification.ok
        assert result.comparison.ok

    def test_oracle_can_be_switched_off(self):
        """Test that run_oracle = False skips the comparison."""
        result = _service(run_oracle=False).dgla(weighted_two_crossed_module())
        assert result.ok
        assert result.comparison is None

    def test_max_oracle_level_is_an_input_error(self):
        """Test that a DGLA longer than max_oracle_level is refused."""
        with pytest.raises(LevelOutOfRangeError):
            _service(max_oracle_level=1).dgla(weighted_two_crossed_module())

    def test_chain_complex(self):
        """Test that the chain complex DGLA passes with zero brackets."""
        result = _service().dgla(chain_complex_of_length_three())
        assert result.ok
        assert result.dgla.length == 3

    def test_invalid_presentation(self):
        """Test that the dgla pipeline also stops at validation."""
        result = _service().dgla(_broken_crossed_module())
        assert result.failed_stage == "validate"
        assert result.dgla is None


class TestOracle:
    """Test the oracle pipeline."""

    def test_level_zero_tables(self):
        """Test the oracle differential and bracket at level 0."""
        result = _service().oracle(fixture_crossed_module(), 0)
        assert result.ok
        tables = result.oracle
        assert tables.level == 0
        assert tables.differential == result.moore.delta(1)
        assert list(tables.brackets) == [(0, 0)]

    def test_level_one_on_weighted(self):
        """Test the mixed brackets at level 1."""
        result = _service().oracle(weighted_two_crossed_module(), 1)
        assert set(result.oracle.brackets) == {(0, 1), (1, 0)}
        assert result.oracle.brackets[(0, 1)].value(0, 0) == (1,)

    def test_level_above_moore_length(self):
        """Test that levels above k are input errors."""
        with pytest.raises(LevelOutOfRangeError):
            _service().oracle(fixture_crossed_module(), 2)

    def test_level_above_configured_maximum(self):
        """Test that levels above max_oracle_level are refused before any work."""
        with pytest.raises(LevelOutOfRangeError, match="configured maximum"):
            _service(max_oracle_level=0).oracle(fixture_crossed_module(), 1)


class TestRecheck:
    """Test recheck of DGLAs read back from output."""

    def test_clean_dgla(self):
        """Test that a built DGLA rechecks clean."""
        L = build_dgla(from_two_crossed_module(weighted_two_crossed_module()))
        result = _service().recheck(L)
        assert result.ok
        assert (result.command, result.kind) == ("recheck", "dgla")

    def test_perturbed_dgla(self):
        """Test that a perturbed constant fails the verify stage."""
        L = build_dgla(from_two_crossed_module(weighted_two_crossed_module()))
        perturbed = dataclasses.replace(
            L, brackets={**L.brackets, (0, 1): BilinearMap.from_array([[[3]]], 1, 1, 1)}
        )
        result = _service().recheck(perturbed)
        assert result.failed_stage == "verify"
        assert not result.verification.ok
