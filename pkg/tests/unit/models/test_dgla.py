"""
Unit tests for the DGLA container.
"""

import pytest

from simplicial_dgla.models.dgla import DGLA
from simplicial_dgla.models.exceptions import DimensionMismatchError, LevelOutOfRangeError
from simplicial_dgla.models.linear import BilinearMap, ExactMatrix


def _brackets(dims):
    k = len(dims) - 1
    return {
        (a, b): BilinearMap.zero(dims[a], dims[b], dims[a + b])
        for a in range(k + 1)
        for b in range(k + 1 - a)
    }


class TestDGLA:
    """Test suite for DGLA."""

    def test_length_and_default_labels(self):
        """Test the length and generated labels."""
        dgla = DGLA((2, 1), (ExactMatrix.zeros(2, 1),), _brackets((2, 1)))
        assert dgla.length == 1
        assert dgla.label(1, 0) == "x1_0"

    def test_brackets_beyond_length_vanish(self):
        """Test that [L_-1, L_-1] is None in a DGLA of length one."""
        dgla = DGLA((2, 1), (ExactMatrix.zeros(2, 1),), _brackets((2, 1)))
        assert dgla.bracket(1, (1,), 1, (1,)) is None
        assert dgla.bracket(0, (1, 0), 1, (1,)) == (0,)

    def test_differential_on_degree_zero_is_empty(self):
        """Test that d vanishes on L_0."""
        dgla = DGLA((1,), (), _brackets((1,)))
        assert dgla.differential(0, (1,)) == ()

    def test_wrong_differential_shape(self):
        """Test that d_n must map L_-n to L_-(n-1)."""
        with pytest.raises(DimensionMismatchError):
            DGLA((2, 1), (ExactMatrix.zeros(1, 2),), _brackets((2, 1)))

    def test_missing_bracket_table(self):
        """Test that every bracket with n1 + n2 <= k must be present."""
        brackets = _brackets((2, 1))
        del brackets[(1, 0)]
        with pytest.raises(DimensionMismatchError, match="missing"):
            DGLA((2, 1), (ExactMatrix.zeros(2, 1),), brackets)

    def test_degree_out_of_range(self):
        """Test that degrees below -k are rejected."""
        dgla = DGLA((1,), (), _brackets((1,)))
        with pytest.raises(LevelOutOfRangeError):
            dgla.differential(1, (1,))

    def test_empty_dims_rejected(self):
        """Test that a DGLA has at least a degree zero part."""
        with pytest.raises(ValueError):
            DGLA((), (), {})
