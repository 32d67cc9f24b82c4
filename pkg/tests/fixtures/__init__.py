"""Builders and JSON documents shared by the tests."""
