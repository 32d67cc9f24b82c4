"""Unit tests for presenters."""
