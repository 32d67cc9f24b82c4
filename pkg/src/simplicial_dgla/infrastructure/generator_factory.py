"""
Factory turning any supported source into a truncated simplicial Lie algebra.

Implements Factory Pattern for centralized generator selection with the
truncation policy taken from configuration.
"""

import logging
from typing import Optional

from simplicial_dgla.gateways.base import Source
from simplicial_dgla.infrastructure.config import ComputationSettings
from simplicial_dgla.models.exceptions import LevelOutOfRangeError
from simplicial_dgla.models.presentations import (
    ChainComplexSpec,
    CrossedModuleSpec,
    ModuleComplexSpec,
    TwoCrossedModuleSpec,
)
from simplicial_dgla.models.simplicial import SimplicialLieAlgebra
from simplicial_dgla.services.nerve_service import (
    from_chain_complex,
    from_crossed_module,
    from_module_complex,
    from_two_crossed_module,
)

logger = logging.getLogger(__name__)


def source_kind(source: Source) -> str:
    """Input kind of a source object."""
    if isinstance(source, SimplicialLieAlgebra):
        return "simplicial"
    if isinstance(source, CrossedModuleSpec):
        return "crossed_module"
    if isinstance(source, TwoCrossedModuleSpec):
        return "two_crossed_module"
    if isinstance(source, ChainComplexSpec):
        return "chain_complex"
    if isinstance(source, ModuleComplexSpec):
        return "module_complex"
    raise ValueError(f"Unsupported source type: {type(source).__name__}")


def moore_length_of(source: Source) -> Optional[int]:
    """Moore length a generator will produce, None for direct simplicial input."""
    if isinstance(source, CrossedModuleSpec):
        return 1
    if isinstance(source, TwoCrossedModuleSpec):
        return 2
    if isinstance(source, ChainComplexSpec):
        return source.length
    if isinstance(source, ModuleComplexSpec):
        return len(source.module_dims)
    return None


class SimplicialSourceFactory:
    """
    Factory for simplicial Lie algebras from presentations.

    Design Pattern: Factory Pattern
    Responsibility: Pick the generator for a source kind and the stored truncation

    Supported Kinds:
    - crossed_module: from_crossed_module
    - two_crossed_module: from_two_crossed_module
    - chain_complex: from_chain_complex
    - module_complex: from_module_complex
    - simplicial: passed through, optionally cut down to a lower truncation

    Usage:
        >>> factory = SimplicialSourceFactory(config.computation)
        >>> g = factory.create(spec)  # K = k + truncation_margin
        >>> g = factory.create(spec, truncation=4)  # Override K
    """

    SUPPORTED_KINDS = {
        "simplicial",
        "crossed_module",
        "two_crossed_module",
        "chain_complex",
        "module_complex",
    }

    def __init__(self, settings: ComputationSettings):
        """
        Initialize factory.

        Args:
            settings: Computation settings (truncation margin)
        """
        self.settings = settings
        logger.debug(f"Initialized SimplicialSourceFactory (margin: {settings.truncation_margin})")

    def truncation_for(self, source: Source, truncation: Optional[int] = None) -> int:
        """Requested K, or k + margin for generated sources."""
        if truncation is not None:
            return truncation
        length = moore_length_of(source)
        if length is None:
            assert isinstance(source, SimplicialLieAlgebra)
            return source.truncation
        return length + self.settings.truncation_margin

    def create(self, source: Source, truncation: Optional[int] = None) -> SimplicialLieAlgebra:
        """
        Create the simplicial Lie algebra of a source.

        Args:
            source: Presentation or simplicial Lie algebra
            truncation: Top stored level K; if None, k + truncation_margin

        Returns:
            Truncated simplicial Lie algebra

        Raises:
            ValueError: If the source kind is not supported
            LevelOutOfRangeError: If K is too small for the source
            InvalidPresentationError: If the presentation fails its laws
            ConstructionError: If a higher level cannot be solved from the faces
        """
        kind = source_kind(source)
        if kind not in self.SUPPORTED_KINDS:
            raise ValueError(
                f"Unsupported source kind: {kind}. "
                f"Must be one of: {', '.join(sorted(self.SUPPORTED_KINDS))}"
            )
        top = self.truncation_for(source, truncation)
        logger.info(f"Creating simplicial Lie algebra from {kind} (K = {top})")

        if isinstance(source, SimplicialLieAlgebra):
            return self._truncate(source, top)
        if isinstance(source, CrossedModuleSpec):
            return from_crossed_module(source, top)
        if isinstance(source, TwoCrossedModuleSpec):
            return from_two_crossed_module(source, top)
        if isinstance(source, ChainComplexSpec):
            return from_chain_complex(source, top)
        return from_module_complex(source, top)

    @staticmethod
    def _truncate(g: SimplicialLieAlgebra, top: int) -> SimplicialLieAlgebra:
        """Keep levels 0..top of a directly given simplicial Lie algebra."""
        if top > g.truncation:
            raise LevelOutOfRangeError(
                f"Truncation {top} exceeds the {g.truncation} levels given in the input"
            )
        if top == g.truncation:
            return g
        return SimplicialLieAlgebra(
            g.levels[: top + 1], g.faces[: top + 1], g.degeneracies[:top]
        )
