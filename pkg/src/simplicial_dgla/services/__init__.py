"""
Computation services for simplicial-dgla.

This module contains the stateless services: generators, validators,
the Moore complex, Peiffer pairings, DGLA construction and verification,
and the superfield oracle. PipelineService orchestrates them and is
imported from simplicial_dgla.services.pipeline_service.
"""

from simplicial_dgla.services.dgla_service import (
    build_dgla,
    oracle_compare,
    verify_dgla,
)
from simplicial_dgla.services.nerve_service import (
    from_chain_complex,
    from_crossed_module,
    from_module_complex,
    from_two_crossed_module,
)
from simplicial_dgla.services.peiffer_service import peiffer, peiffer_table
from simplicial_dgla.services.presentation_validator import (
    validate_crossed_module,
    validate_two_crossed_module,
)
from simplicial_dgla.services.simplicial_service import (
    moore_complex,
    moore_projector,
    s_alpha,
    validate_simplicial,
)
from simplicial_dgla.services.superfield_oracle import oracle_differential, sign_table

__all__ = [
    "from_crossed_module",
    "from_two_crossed_module",
    "from_chain_complex",
    "from_module_complex",
    "validate_crossed_module",
    "validate_two_crossed_module",
    "validate_simplicial",
    "s_alpha",
    "moore_projector",
    "moore_complex",
    "peiffer",
    "peiffer_table",
    "build_dgla",
    "verify_dgla",
    "oracle_compare",
    "oracle_differential",
    "sign_table",
]
