"""
Infrastructure components for configuration and generator selection.

This module contains the infrastructure layer components that support
the application's cross-cutting concerns.
"""

from simplicial_dgla.infrastructure.config import ApplicationConfig, config
from simplicial_dgla.infrastructure.generator_factory import SimplicialSourceFactory

__all__ = ["config", "ApplicationConfig", "SimplicialSourceFactory"]
