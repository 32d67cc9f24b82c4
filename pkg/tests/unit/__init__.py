"""Unit tests for Simplicial DGLA."""
