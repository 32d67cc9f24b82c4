"""CLI module for the simplicial DGLA toolkit."""
