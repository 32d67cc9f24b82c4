"""
Domain models for simplicial-dgla.

This module contains the exact linear algebra kernel, Lie algebras,
simplicial Lie algebras, presentations, the DGLA and the report types.
"""

from simplicial_dgla.models.dgla import DGLA
from simplicial_dgla.models.exceptions import (
    ConstructionError,
    DimensionMismatchError,
    InvalidPresentationError,
    InvalidSimplicialError,
    LevelOutOfRangeError,
    LieAlgebraError,
    OracleMismatchError,
    SimplicialDglaError,
    SubspaceMembershipError,
    TruncationError,
)
from simplicial_dgla.models.lie_algebra import LieAlgebra
from simplicial_dgla.models.linear import BilinearMap, ExactMatrix, Subspace
from simplicial_dgla.models.multi_index import MultiIndex, PeifferPair
from simplicial_dgla.models.presentations import (
    ChainComplexSpec,
    CrossedModuleSpec,
    ModuleComplexSpec,
    TwoCrossedModuleSpec,
)
from simplicial_dgla.models.reports import (
    OracleDiscrepancy,
    SignRow,
    ValidationReport,
    VerificationReport,
    Violation,
)
from simplicial_dgla.models.results import OracleTables, PipelineResult
from simplicial_dgla.models.simplicial import MooreComplex, SimplicialLieAlgebra

__all__ = [
    "DGLA",
    "BilinearMap",
    "ExactMatrix",
    "Subspace",
    "LieAlgebra",
    "MultiIndex",
    "PeifferPair",
    "SimplicialLieAlgebra",
    "MooreComplex",
    "CrossedModuleSpec",
    "TwoCrossedModuleSpec",
    "ChainComplexSpec",
    "ModuleComplexSpec",
    "Violation",
    "ValidationReport",
    "OracleDiscrepancy",
    "SignRow",
    "VerificationReport",
    "OracleTables",
    "PipelineResult",
    "SimplicialDglaError",
    "DimensionMismatchError",
    "LieAlgebraError",
    "SubspaceMembershipError",
    "LevelOutOfRangeError",
    "InvalidPresentationError",
    "InvalidSimplicialError",
    "ConstructionError",
    "TruncationError",
    "OracleMismatchError",
]
