"""
Unit tests for the superfield oracle.
"""

import pytest

from simplicial_dgla.models.exceptions import LevelOutOfRangeError, SubspaceMembershipError
from simplicial_dgla.services.nerve_service import from_crossed_module, from_two_crossed_module
from simplicial_dgla.services.simplicial_service import moore_complex
from simplicial_dgla.services.superfield_oracle import (
    assemble_superfield,
    bracket_normalization,
    check_superfield_relations,
    differential_normalization,
    make_entries,
    oracle_bracket_table,
    oracle_differential,
    oracle_differential_table,
    pair_oracle_sign,
    sign_table,
)
from tests.fixtures.builders import fixture_crossed_module, weighted_two_crossed_module

# E, F in degree 0 and X in degree 1
COMPONENTS = [[(1, 0), (0, 1)], [(1, 0, 0)]]


@pytest.fixture
def crossed():
    g = from_crossed_module(fixture_crossed_module())
    return g, moore_complex(g)


@pytest.fixture
def weighted():
    g = from_two_crossed_module(weighted_two_crossed_module())
    return g, moore_complex(g)


class TestNormalization:
    """Test the grading normalizations."""

    @pytest.mark.parametrize(
        "n1,n2,expected", [(0, 0, 1), (1, 0, -1), (1, 1, 1), (1, 2, -1), (2, 1, 1)]
    )
    def test_bracket_normalization(self, n1, n2, expected):
        """Test (-1)^(n1 (n2 + 1))."""
        assert bracket_normalization(n1, n2) == expected

    def test_differential_normalization(self):
        """Test (-1)^m."""
        assert [differential_normalization(m) for m in range(4)] == [1, -1, 1, -1]


class TestAssembly:
    """Test superfield assembly."""

    def test_entries_get_markers_in_order(self):
        """Test marker numbering and marker parities."""
        entries = make_entries(COMPONENTS)
        assert [e.key for e in entries] == [(0, 0), (0, 1), (1, 0)]
        assert [e.marker for e in entries] == [0, 1, 2]
        assert [e.parity for e in entries] == [1, 1, 0]

    def test_level_zero_superfield(self, crossed):
        """Test that a_0 is the sum of the marked degree-zero components."""
        g, moore = crossed
        field = assemble_superfield(g, moore, 0, COMPONENTS)
        assert field.marker_count == 3
        assert field.theta_bar.coefficient((0,)) == (1, 0)
        assert field.theta_bar.coefficient((1,)) == (0, 1)
        assert field.theta == field.theta_bar

    def test_level_one_superfield(self, crossed):
        """Test that a_1 = s_0 a^0 + a^1 theta-bar."""
        g, moore = crossed
        field = assemble_superfield(g, moore, 1, [[(1, 0)], [(1, 0, 0)]])
        assert field.marker_count == 2
        assert field.theta_bar.coefficient((0,)) == (0, 1, 0)
        assert field.theta_bar.coefficient((1, field.slot(0))) == (1, 0, 0)

    def test_non_moore_component_is_rejected(self, crossed):
        """Test that a degenerate element cannot be a component."""
        g, moore = crossed
        with pytest.raises(SubspaceMembershipError):
            assemble_superfield(g, moore, 1, [[], [(0, 1, 0)]])

    def test_level_above_truncation(self, crossed):
        """Test that levels above K are refused."""
        g, moore = crossed
        with pytest.raises(LevelOutOfRangeError):
            assemble_superfield(g, moore, 3, COMPONENTS)

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_superfield_relations_hold(self, crossed, n):
        """Test the face and degeneracy relations on the crossed module nerve."""
        g, moore = crossed
        report = check_superfield_relations(g, moore, COMPONENTS, n)
        assert report.subject == "superfield"
        assert report.ok


class TestOracleDifferential:
    """Test the expansion of the differential."""

    def test_level_zero_terms(self, crossed):
        """Test the linear term -delta X and the cross term [E, F] at level 0."""
        g, moore = crossed
        result = oracle_differential(g, moore, 0, COMPONENTS)
        assert result.linear == {(1, 0): (0, -1)}
        assert result.quadratic == {((0, 0), (0, 1)): (0, 1)}
        assert result.total == (0, 0)

    def test_top_level_is_refused(self, crossed):
        """Test that the differential at level K needs level K + 1."""
        g, moore = crossed
        with pytest.raises(LevelOutOfRangeError):
            oracle_differential(g, moore, 2, COMPONENTS)

    def test_differential_table_matches_delta(self, crossed):
        """Test that the normalized linear part is the Moore differential."""
        g, moore = crossed
        assert oracle_differential_table(g, moore, 1) == moore.delta(1)

    @pytest.mark.parametrize("m", [1, 2])
    def test_differential_table_of_two_crossed_module(self, weighted, m):
        """Test the oracle differential out of degrees one and two, expanded at levels 0 and 1."""
        g, moore = weighted
        assert oracle_differential_table(g, moore, m) == moore.delta(m)

    def test_differential_table_degree_range(self, crossed):
        """Test that degree 0 has no differential table."""
        g, moore = crossed
        with pytest.raises(LevelOutOfRangeError):
            oracle_differential_table(g, moore, 0)


class TestOracleBrackets:
    """Test oracle bracket tables."""

    def test_degree_zero_is_the_lie_bracket(self, crossed):
        """Test that the oracle bracket on L_0 is the bracket of g_0."""
        g, moore = crossed
        assert oracle_bracket_table(g, moore, 0, 0) == g.level(0).structure

    def test_action_on_degree_one(self, crossed):
        """Test [E, X] = X from the oracle."""
        g, moore = crossed
        table = oracle_bracket_table(g, moore, 0, 1)
        assert table.value(0, 0) == (1,)
        assert table.value(1, 0) == (0,)

    def test_peiffer_term(self, weighted):
        """Test [D, D] = -2X from the oracle."""
        g, moore = weighted
        assert oracle_bracket_table(g, moore, 1, 1).value(0, 0) == (-2,)

    def test_degrees_beyond_moore_length(self, crossed):
        """Test that brackets into degree k + 1 are refused."""
        g, moore = crossed
        with pytest.raises(LevelOutOfRangeError):
            oracle_bracket_table(g, moore, 1, 1)


class TestSignTable:
    """Test the sign bookkeeping of Peiffer pairs."""

    def test_rows_per_level(self):
        """Test one row at level 2 and three at level 3."""
        rows = sign_table(3)
        assert [row.n for row in rows] == [2, 3, 3, 3]
        assert sign_table(1) == ()

    def test_normalized_oracle_sign_is_the_shuffle_sign(self):
        """Test that every row agrees."""
        for row in sign_table(4):
            assert row.agrees
            assert row.normalized_sign == row.shuffle_sign
            assert row.normalized_sign == row.oracle_sign * bracket_normalization(row.n1, row.n2)

    def test_prose_rule_antisymmetry(self):
        """Test that the prose sign respects antisymmetry only for equal degree parities."""
        for row in sign_table(3):
            assert row.prose_antisymmetric == ((row.n1 - row.n2) % 2 == 0)
        assert [row.prose_antisymmetric for row in sign_table(3)] == [True, False, False, False]

    def test_pair_oracle_sign_matches_table(self):
        """Test that the table reuses pair_oracle_sign."""
        for row in sign_table(3):
            assert pair_oracle_sign(row.n, row.alpha, row.beta) == row.oracle_sign
