"""
Unit tests for the presentation validators.
"""

import dataclasses

import pytest

from simplicial_dgla.models.lie_algebra import LieAlgebra
from simplicial_dgla.models.linear import BilinearMap, ExactMatrix
from simplicial_dgla.models.presentations import ModuleComplexSpec
from simplicial_dgla.services.presentation_validator import (
    validate_crossed_module,
    validate_module_complex,
    validate_structure_constants,
    validate_two_crossed_module,
)
from tests.fixtures.builders import (
    crossed_module_family,
    fixture_crossed_module,
    two_crossed_module_family,
    two_dim_algebra,
    weight_module_complex,
    weighted_two_crossed_module,
)


class TestStructureConstants:
    """Test suite for validate_structure_constants."""

    def test_jacobi_failure_names_the_triple(self):
        """Test that a Jacobi failure reports the basis triple and residual."""
        table = BilinearMap.from_array(
            [
                [[0, 0, 0], [0, 1, 0], [0, 0, 0]],
                [[0, -1, 0], [0, 0, 0], [1, 0, 0]],
                [[0, 0, 0], [-1, 0, 0], [0, 0, 0]],
            ],
            3,
            3,
            3,
        )
        report = validate_structure_constants("d_algebra", table)
        assert report.subject == "d_algebra"
        assert [(v.law, v.witness, v.residual) for v in report.violations] == [
            ("lie-jacobi", (0, 1, 2), (1, 0, 0))
        ]

    def test_antisymmetry_failure(self):
        """Test that a symmetric bracket is reported with its pair."""
        table = BilinearMap.from_array([[[0, 0], [0, 1]], [[0, 1], [0, 0]]], 2, 2, 2)
        report = validate_structure_constants("algebra", table)
        assert [(v.law, v.witness, v.residual) for v in report.violations] == [
            ("lie-antisymmetry", (0, 1), (0, 2))
        ]

    def test_valid_table(self):
        """Test that a Lie algebra's own table passes."""
        assert validate_structure_constants("algebra", two_dim_algebra().structure).ok


class TestCrossedModules:
    """Test suite for validate_crossed_module."""

    def test_fixture_is_valid(self):
        """Test the crossed module {E, F} acting on {X}."""
        report = validate_crossed_module(fixture_crossed_module())
        assert report.ok
        assert report.subject == "crossed_module"

    def test_broken_equivariance(self):
        """Test that E . X = 2X breaks equivariance at exactly one witness."""
        spec = dataclasses.replace(
            fixture_crossed_module(), action=BilinearMap.from_array([[[2]], [[0]]], 2, 1, 1)
        )
        report = validate_crossed_module(spec)
        assert [(v.law, v.witness, v.residual) for v in report.violations] == [
            ("CM-equivariance", (0, 0), (0, 1))
        ]

    @pytest.mark.parametrize("index", range(len(crossed_module_family())))
    def test_family_is_valid(self, index):
        """Test that the generated crossed module family satisfies every law."""
        assert validate_crossed_module(crossed_module_family()[index]).ok


class TestTwoCrossedModules:
    """Test suite for validate_two_crossed_module."""

    @pytest.mark.parametrize("index", range(len(two_crossed_module_family())))
    def test_family_is_valid(self, index):
        """Test that the 2-crossed module family satisfies every law."""
        report = validate_two_crossed_module(two_crossed_module_family()[index])
        assert report.ok, report.violations

    def test_non_equivariant_bracket(self):
        """Test that a wrong weight on h breaks equivariance of the Peiffer bracket."""
        spec = dataclasses.replace(
            weighted_two_crossed_module(1),
            action_on_h=BilinearMap.from_array([[[3]]], 1, 1, 1),
        )
        report = validate_two_crossed_module(spec)
        assert [(v.law, v.witness, v.residual) for v in report.violations] == [
            ("2CM-equivariance-bracket", (0, 0, 0), (1,))
        ]

    def test_delta_composite_must_vanish(self):
        """Test that delta1 delta2 != 0 breaks 2CM-i."""
        spec = dataclasses.replace(
            weighted_two_crossed_module(0),
            delta1=ExactMatrix.identity(1),
            delta2=ExactMatrix.identity(1),
        )
        report = validate_two_crossed_module(spec)
        assert "2CM-i" in report.laws()


class TestModuleComplexes:
    """Test suite for validate_module_complex."""

    def test_weight_complex_is_valid(self):
        """Test the weight module complex."""
        assert validate_module_complex(weight_module_complex(3)).ok

    def test_non_equivariant_differential(self):
        """Test that delta_2 between different weights is not equivariant."""
        spec = ModuleComplexSpec(
            algebra=two_dim_algebra(),
            representations=(
                BilinearMap.from_array([[[1]], [[0]]], 2, 1, 1),
                BilinearMap.from_array([[[2]], [[0]]], 2, 1, 1),
            ),
            differentials=(ExactMatrix.identity(1),),
        )
        report = validate_module_complex(spec)
        assert [(v.law, v.witness, v.residual) for v in report.violations] == [
            ("MC-equivariance", (2, 0, 0), (1,))
        ]

    def test_abelian_algebra_with_zero_modules(self):
        """Test a module complex with trivial actions."""
        spec = ModuleComplexSpec(
            algebra=LieAlgebra.abelian(1),
            representations=(BilinearMap.zero(1, 2, 2),),
            differentials=(),
        )
        assert validate_module_complex(spec).ok
