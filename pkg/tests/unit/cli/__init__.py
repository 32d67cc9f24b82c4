"""Unit tests for CLI components."""
