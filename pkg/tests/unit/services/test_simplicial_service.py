"""
Unit tests for simplicial validation and the Moore complex.
"""

import dataclasses

import pytest

from simplicial_dgla.models.exceptions import InvalidSimplicialError, LevelOutOfRangeError
from simplicial_dgla.models.lie_algebra import LieAlgebra
from simplicial_dgla.models.linear import ExactMatrix
from simplicial_dgla.models.multi_index import MultiIndex
from simplicial_dgla.services.nerve_service import (
    from_chain_complex,
    from_crossed_module,
    from_two_crossed_module,
)
from simplicial_dgla.services.simplicial_service import (
    decomposition_check,
    moore_complex,
    moore_homology,
    moore_invariant_report,
    moore_projector,
    s_alpha,
    validate_simplicial,
)
from tests.fixtures.builders import (
    chain_complex_of_length_three,
    constant_simplicial,
    fixture_crossed_module,
    two_dim_algebra,
    weighted_two_crossed_module,
)


def _with_face(g, n, i, face):
    faces = [list(level) for level in g.faces]
    faces[n][i] = face
    return dataclasses.replace(g, faces=tuple(tuple(level) for level in faces))


class TestValidateSimplicial:
    """Test suite for validate_simplicial."""

    def test_generated_crossed_module_is_valid(self):
        """Test that the generated simplicial Lie algebra passes every identity."""
        report = validate_simplicial(from_crossed_module(fixture_crossed_module()))
        assert report.ok
        assert report.subject == "simplicial"
        assert report.checks > 0

    def test_constant_simplicial_is_valid(self):
        """Test that identities everywhere form a simplicial Lie algebra."""
        assert validate_simplicial(constant_simplicial(two_dim_algebra(), 3)).ok

    def test_corrupted_face_is_reported(self):
        """Test that replacing d_1 at level 1 breaks a face-degeneracy identity."""
        g = from_crossed_module(fixture_crossed_module())
        broken = _with_face(g, 1, 1, ExactMatrix.zeros(2, 3))
        report = validate_simplicial(broken)
        assert not report.ok
        assert "face_degeneracy_identity" in report.laws()

    def test_non_morphism_face_is_reported(self):
        """Test that a linear face which is not a Lie morphism is flagged."""
        algebra = two_dim_algebra()
        g = constant_simplicial(algebra, 1)
        swapped = ExactMatrix.from_rows([[0, 1], [1, 0]])
        report = validate_simplicial(_with_face(g, 1, 0, swapped))
        assert "face_lie_morphism" in report.laws()

    def test_violations_are_sorted(self):
        """Test that violations come ordered by level, law and witness."""
        g = from_crossed_module(fixture_crossed_module())
        report = validate_simplicial(_with_face(g, 2, 0, ExactMatrix.zeros(3, 4)))
        keys = [v.sort_key for v in report.violations]
        assert keys == sorted(keys)


class TestMooreComplex:
    """Test suite for moore_complex and its invariants."""

    def test_crossed_module_dims(self):
        """Test that the Moore complex of the nerve is h -> d."""
        g = from_crossed_module(fixture_crossed_module())
        moore = moore_complex(g)
        assert g.dims == (2, 3, 4)
        assert moore.dims == (2, 1, 0)
        assert moore.length == 1
        assert moore.delta(1) == ExactMatrix.from_rows([[0], [1]])

    def test_two_crossed_module_dims(self):
        """Test level and Moore dimensions for the weighted 2-crossed module."""
        g = from_two_crossed_module(weighted_two_crossed_module())
        moore = moore_complex(g)
        assert g.dims == (1, 2, 4, 7)
        assert moore.dims == (1, 1, 1, 0)
        assert moore.length == 2

    def test_chain_complex_round_trip_dims(self):
        """Test that Gamma(N) has Moore complex N."""
        moore = moore_complex(from_chain_complex(chain_complex_of_length_three()))
        assert moore.dims == (1, 2, 2, 1, 0)
        assert moore.length == 3

    def test_homology(self):
        """Test Moore homology of the crossed module and the chain complex."""
        g = from_crossed_module(fixture_crossed_module())
        assert moore_homology(moore_complex(g)) == (1, 0, 0)
        chain = moore_complex(from_chain_complex(chain_complex_of_length_three()))
        assert moore_homology(chain) == (0, 0, 0, 0, 0)

    def test_constant_simplicial_has_length_zero(self):
        """Test that the constant simplicial Lie algebra has N g_n = 0 for n >= 1."""
        moore = moore_complex(constant_simplicial(LieAlgebra.abelian(1), 2))
        assert moore.dims == (1, 0, 0)
        assert moore.length == 0

    def test_invalid_input_raises(self):
        """Test that the Moore complex refuses an invalid simplicial Lie algebra."""
        g = from_crossed_module(fixture_crossed_module())
        with pytest.raises(InvalidSimplicialError) as excinfo:
            moore_complex(_with_face(g, 1, 1, ExactMatrix.zeros(2, 3)))
        assert excinfo.value.report is not None

    def test_invariants_hold(self):
        """Test delta^2 = 0, projectors and the decomposition on generated data."""
        for g in (
            from_crossed_module(fixture_crossed_module()),
            from_two_crossed_module(weighted_two_crossed_module()),
            from_chain_complex(chain_complex_of_length_three()),
        ):
            report = moore_invariant_report(g, moore_complex(g))
            assert report.ok, report.violations


class TestProjectorsAndDegeneracies:
    """Test projectors, composite degeneracies and the decomposition."""

    def test_projector_is_idempotent_with_moore_image(self):
        """Test p_n p_n = p_n and that p_n kills degenerate elements."""
        g = from_crossed_module(fixture_crossed_module())
        p = moore_projector(g, 1)
        assert p @ p == p
        degenerate = g.degeneracy(0, 0).apply((1, 0))
        assert p.apply(degenerate) == (0, 0, 0)

    def test_projector_level_range(self):
        """Test that p_0 is not a projector level."""
        g = from_crossed_module(fixture_crossed_module())
        with pytest.raises(LevelOutOfRangeError):
            moore_projector(g, 0)

    def test_s_alpha_composes_in_order(self):
        """Test s_{1,0} = s_1 s_0 on level 0."""
        g = from_crossed_module(fixture_crossed_module())
        expected = g.degeneracy(1, 1) @ g.degeneracy(0, 0)
        assert s_alpha(g, MultiIndex.of(1, 0), 2) == expected
        assert s_alpha(g, MultiIndex(), 1) == ExactMatrix.identity(3)

    def test_s_alpha_out_of_range(self):
        """Test that alpha must fit the level."""
        g = from_crossed_module(fixture_crossed_module())
        with pytest.raises(LevelOutOfRangeError):
            s_alpha(g, MultiIndex.of(2), 2)

    def test_decomposition(self):
        """Test that every level splits over S(n)."""
        g = from_two_crossed_module(weighted_two_crossed_module())
        moore = moore_complex(g)
        assert all(decomposition_check(g, moore, n) for n in range(g.truncation + 1))
