"""Simplicial DGLA - simplicial Lie algebras, Moore complexes and their k-term DGLAs."""

__version__ = "0.1.0"
