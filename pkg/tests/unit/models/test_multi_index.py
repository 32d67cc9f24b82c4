"""
Unit tests for multi-indices and Peiffer index pairs.
"""

import pytest

from simplicial_dgla.models.multi_index import MultiIndex, PeifferPair


class TestMultiIndex:
    """Test suite for MultiIndex."""

    def test_of_sorts_decreasing(self):
        """Test that entries are stored in decreasing order."""
        assert MultiIndex.of(0, 2, 1).indices == (2, 1, 0)
        assert MultiIndex.of(0, 2).ascending() == (0, 2)

    def test_increasing_entries_raise(self):
        """Test that the constructor enforces strict decrease."""
        with pytest.raises(ValueError):
            MultiIndex((0, 1))

    def test_repeated_entries_raise(self):
        """Test that repeated indices are rejected."""
        with pytest.raises(ValueError):
            MultiIndex.of(1, 1)

    def test_negative_entries_raise(self):
        """Test that indices must be non-negative."""
        with pytest.raises(ValueError):
            MultiIndex((-1,))

    def test_total_order(self):
        """Test the chain {} < {0} < {1} < {1,0} < {2} < {2,0}."""
        chain = [
            MultiIndex(),
            MultiIndex.of(0),
            MultiIndex.of(1),
            MultiIndex.of(1, 0),
            MultiIndex.of(2),
            MultiIndex.of(2, 0),
        ]
        assert sorted(reversed(chain)) == chain
        assert MultiIndex.of(1, 0) > MultiIndex.of(1)

    def test_complement(self):
        """Test complements inside {0, ..., n-1}."""
        assert MultiIndex.of(1).complement(3) == MultiIndex.of(2, 0)
        assert MultiIndex().complement(2) == MultiIndex.of(1, 0)
        with pytest.raises(ValueError):
            MultiIndex.of(3).complement(3)

    def test_str(self):
        """Test the brace notation."""
        assert str(MultiIndex.of(0, 2)) == "{2,0}"
        assert str(MultiIndex()) == "{}"


class TestPeifferPair:
    """Test suite for PeifferPair."""

    def test_valid_pair(self):
        """Test degrees and complementarity of ({0}, {1}) at level 2."""
        pair = PeifferPair(2, MultiIndex.of(0), MultiIndex.of(1))
        assert pair.degrees == (1, 1)
        assert pair.is_complementary

    def test_non_complementary_pair(self):
        """Test that ({0}, {1}) at level 3 is not complementary."""
        pair = PeifferPair(3, MultiIndex.of(0), MultiIndex.of(1))
        assert not pair.is_complementary
        assert pair.degrees == (2, 2)

    def test_empty_alpha_raises(self):
        """Test that alpha must be non-empty."""
        with pytest.raises(ValueError):
            PeifferPair(2, MultiIndex(), MultiIndex.of(1))

    def test_wrong_order_raises(self):
        """Test that alpha must precede beta."""
        with pytest.raises(ValueError):
            PeifferPair(2, MultiIndex.of(1), MultiIndex.of(0))

    def test_overlap_raises(self):
        """Test that alpha and beta must be disjoint."""
        with pytest.raises(ValueError):
            PeifferPair(3, MultiIndex.of(1), MultiIndex.of(1, 0))

    def test_out_of_range_raises(self):
        """Test that indices must be below the level."""
        with pytest.raises(ValueError):
            PeifferPair(2, MultiIndex.of(0), MultiIndex.of(2))
