"""Tests for the simplicial DGLA toolkit."""
