"""Unit tests for gateways."""
