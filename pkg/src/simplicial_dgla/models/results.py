"""
Results handed from the pipeline to the gateway and the presenters.
"""

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Optional

from simplicial_dgla.models.dgla import DGLA
from simplicial_dgla.models.linear import BilinearMap, ExactMatrix
from simplicial_dgla.models.multi_index import PeifferPair
from simplicial_dgla.models.reports import ValidationReport, VerificationReport
from simplicial_dgla.models.simplicial import MooreComplex, SimplicialLieAlgebra


@dataclass(frozen=True)
class OracleTables:
    """
    Normalized oracle tables read off the superfield differential at level n.

    Attributes:
        level: n
        differential: Linear part N g_(n+1) -> N g_n, None when level n + 1 is not stored
        brackets: Quadratic part per (n1, n2) with n1 + n2 = n
    """

    level: int
    differential: Optional[ExactMatrix]
    brackets: Mapping[tuple[int, int], BilinearMap]


@dataclass(frozen=True)
class PipelineResult:
    """
    Everything one command computed, up to the first failing stage.

    Attributes:
        command: validate, moore, dgla or oracle
        kind: Input kind
        simplicial: The simplicial Lie algebra (given or generated)
        validations: Presentation and simplicial validation reports
        moore: Moore complex
        homology: Dimensions of the Moore homology
        peiffer: Peiffer tables on P-bar(n) for 2 <= n <= k
        symmetric_peiffer: F(x, y) + F(y, x) on N g_1 when k >= 2
        dgla: Built DGLA
        verification: Axiom verification of the DGLA
        comparison: Oracle comparison of the DGLA
        oracle: Oracle tables of the oracle command
        failed_stage: Name of the stage that failed, None on success
        message: Failure message
    """

    command: str
    kind: str
    simplicial: Optional[SimplicialLieAlgebra] = None
    validations: tuple[ValidationReport, ...] = ()
    moore: Optional[MooreComplex] = None
    homology: tuple[int, ...] = ()
    peiffer: Mapping[PeifferPair, BilinearMap] = field(default_factory=dict)
    symmetric_peiffer: Optional[BilinearMap] = None
    dgla: Optional[DGLA] = None
    verification: Optional[VerificationReport] = None
    comparison: Optional[VerificationReport] = None
    oracle: Optional[OracleTables] = None
    failed_stage: Optional[str] = None
    message: str = ""

    @property
    def ok(self) -> bool:
        """True when no stage failed and every report is clean."""
        if self.failed_stage is not None:
            return False
        if not all(report.ok for report in self.validations):
            return False
        return all(
            report is None or report.ok for report in (self.verification, self.comparison)
        )
