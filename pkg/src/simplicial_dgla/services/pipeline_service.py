"""
Pipeline service orchestrating generation, validation, Moore complex,
DGLA construction, verification and the oracle.

Responsibilities:
- Run the stages a command needs, in order, stopping at the first failure
- Turn mathematical failures into a named failed stage instead of an exception
- Let input errors (bad truncation, bad oracle level) propagate to the caller

Design Pattern: Facade over the stateless services
"""

import logging
from collections.abc import Callable
from typing import Optional, TypeVar

from simplicial_dgla.gateways.base import Source
from simplicial_dgla.infrastructure.config import ComputationSettings
from simplicial_dgla.infrastructure.generator_factory import (
    SimplicialSourceFactory,
    source_kind,
)
from simplicial_dgla.models.dgla import DGLA
from simplicial_dgla.models.exceptions import (
    ConstructionError,
    InvalidPresentationError,
    InvalidSimplicialError,
    LevelOutOfRangeError,
    OracleMismatchError,
    SubspaceMembershipError,
    TruncationError,
)
from simplicial_dgla.models.presentations import (
    CrossedModuleSpec,
    ModuleComplexSpec,
    TwoCrossedModuleSpec,
)
from simplicial_dgla.models.reports import ValidationReport
from simplicial_dgla.models.results import OracleTables, PipelineResult
from simplicial_dgla.models.simplicial import MooreComplex, SimplicialLieAlgebra
from simplicial_dgla.services.dgla_service import build_dgla, oracle_compare, verify_dgla
from simplicial_dgla.services.peiffer_service import peiffer_tables, symmetric_peiffer_table
from simplicial_dgla.services.presentation_validator import (
    validate_crossed_module,
    validate_module_complex,
    validate_two_crossed_module,
)
from simplicial_dgla.services.simplicial_service import (
    moore_complex,
    moore_homology,
    moore_invariant_report,
    validate_simplicial,
)
from simplicial_dgla.services.superfield_oracle import (
    oracle_bracket_table,
    oracle_differential_table,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")

STAGE_ERRORS = (
    InvalidPresentationError,
    InvalidSimplicialError,
    ConstructionError,
    TruncationError,
    OracleMismatchError,
    SubspaceMembershipError,
)


class StageFailed(Exception):
    """Internal signal carrying the partial result of a failed stage."""

    def __init__(self, result: PipelineResult):
        super().__init__(result.message)
        self.result = result


def presentation_report(source: Source) -> Optional[ValidationReport]:
    """Presentation laws of a generated source, None for simplicial and chain inputs."""
    if isinstance(source, CrossedModuleSpec):
        return validate_crossed_module(source)
    if isinstance(source, TwoCrossedModuleSpec):
        return validate_two_crossed_module(source)
    if isinstance(source, ModuleComplexSpec):
        return validate_module_complex(source)
    return None


class PipelineService:
    """
    Orchestrates the command pipelines.

    Stages: generate -> validate -> moore -> dgla -> verify -> oracle.
    A stage that raises one of STAGE_ERRORS ends the run with a result
    naming that stage; the CLI maps it to exit code 1.
    """

    def __init__(self, factory: SimplicialSourceFactory, settings: ComputationSettings):
        """
        Initialize pipeline.

        Args:
            factory: Generator factory
            settings: Computation settings (oracle switches)
        """
        self.factory = factory
        self.settings = settings

    def _stage(self, partial: PipelineResult, name: str, action: Callable[[], T]) -> T:
        logger.info(f"Stage {name}")
        try:
            return action()
        except STAGE_ERRORS as e:
            logger.warning(f"Stage {name} failed: {e}")
            report = getattr(e, "report", None)
            validations = partial.validations + ((report,) if report is not None else ())
            raise StageFailed(
                PipelineResult(
                    command=partial.command,
                    kind=partial.kind,
                    simplicial=partial.simplicial,
                    validations=validations,
                    moore=partial.moore,
                    dgla=partial.dgla,
                    failed_stage=name,
                    message=str(e),
                )
            ) from e

    def _validated(
        self, command: str, source: Source, truncation: Optional[int]
    ) -> PipelineResult:
        """Generate and validate; a result with failed_stage set on failure."""
        kind = source_kind(source)
        partial = PipelineResult(command=command, kind=kind)
        reports: list[ValidationReport] = []
        presentation = presentation_report(source)
        if presentation is not None:
            reports.append(presentation)
            if not presentation.ok:
                return PipelineResult(
                    command=command,
                    kind=kind,
                    validations=tuple(reports),
                    failed_stage="validate",
                    message=f"{presentation.subject} laws fail: {', '.join(presentation.laws())}",
                )
        g = self._stage(partial, "generate", lambda: self.factory.create(source, truncation))
        simplicial = validate_simplicial(g)
        reports.append(simplicial)
        failed = None if simplicial.ok else "validate"
        message = "" if simplicial.ok else f"simplicial laws fail: {', '.join(simplicial.laws())}"
        return PipelineResult(
            command=command,
            kind=kind,
            simplicial=g,
            validations=tuple(reports),
            failed_stage=failed,
            message=message,
        )

    def validate(self, source: Source, truncation: Optional[int] = None) -> PipelineResult:
        """Presentation and simplicial validation only."""
        try:
            return self._validated("validate", source, truncation)
        except StageFailed as failure:
            return failure.result

    def moore(self, source: Source, truncation: Optional[int] = None) -> PipelineResult:
        """Validation, Moore complex, homology and hypercrossed Peiffer data."""
        try:
            result = self._validated("moore", source, truncation)
            if result.failed_stage is not None or result.simplicial is None:
                return result
            g = result.simplicial
            moore = self._stage(result, "moore", lambda: moore_complex(g, check=False))
            invariants = moore_invariant_report(g, moore)
            peiffer = {}
            for n in range(2, min(moore.length, g.truncation) + 1):
                peiffer.update(peiffer_tables(g, moore, n))
            symmetric = symmetric_peiffer_table(g, moore) if moore.length >= 2 else None
            return PipelineResult(
                command="moore",
                kind=result.kind,
                simplicial=g,
                validations=(*result.validations, invariants),
                moore=moore,
                homology=moore_homology(moore),
                peiffer=peiffer,
                symmetric_peiffer=symmetric,
                failed_stage=None if invariants.ok else "moore",
                message="" if invariants.ok else "Moore complex invariants fail",
            )
        except StageFailed as failure:
            return failure.result

    def dgla(self, source: Source, truncation: Optional[int] = None) -> PipelineResult:
        """Validate, Moore, build, verify and (if enabled) compare with the oracle."""
        try:
            result = self._validated("dgla", source, truncation)
            if result.failed_stage is not None or result.simplicial is None:
                return result
            g = result.simplicial
            moore = self._stage(result, "moore", lambda: moore_complex(g, check=False))
            staged = PipelineResult(
                command="dgla",
                kind=result.kind,
                simplicial=g,
                validations=result.validations,
                moore=moore,
            )
            # The oracle stage below reports discrepancies instead of aborting on the first
            L = self._stage(  # noqa: N806
                staged, "dgla", lambda: build_dgla(g, moore, reconcile=False)
            )
            verification = verify_dgla(L)
            comparison = None
            if self.settings.run_oracle:
                comparison = self._stage(
                    staged,
                    "oracle",
                    lambda: oracle_compare(g, L, moore, self.settings.max_oracle_level),
                )
            failed = None
            message = ""
            if not verification.ok:
                failed, message = "verify", "DGLA axioms fail"
            elif comparison is not None and not comparison.ok:
                failed, message = "oracle", "Built DGLA disagrees with the oracle"
            return PipelineResult(
                command="dgla",
                kind=result.kind,
                simplicial=g,
                validations=result.validations,
                moore=moore,
                homology=moore_homology(moore),
                dgla=L,
                verification=verification,
                comparison=comparison,
                failed_stage=failed,
                message=message,
            )
        except StageFailed as failure:
            return failure.result

    def oracle(
        self, source: Source, level: int, truncation: Optional[int] = None
    ) -> PipelineResult:
        """
        Oracle tables at level n without building the DGLA.

        Raises:
            LevelOutOfRangeError: If n exceeds the Moore length or max_oracle_level
        """
        if level > self.settings.max_oracle_level:
            raise LevelOutOfRangeError(
                f"Oracle level {level} exceeds the configured maximum "
                f"{self.settings.max_oracle_level}"
            )
        try:
            result = self._validated("oracle", source, truncation)
            if result.failed_stage is not None or result.simplicial is None:
                return result
            g = result.simplicial
            moore = self._stage(result, "moore", lambda: moore_complex(g, check=False))
            if not 0 <= level <= moore.length:
                raise LevelOutOfRangeError(
                    f"Oracle level {level} outside 0..{moore.length} (Moore length {moore.length})"
                )
            staged = PipelineResult(
                command="oracle",
                kind=result.kind,
                simplicial=g,
                validations=result.validations,
                moore=moore,
            )
            tables = self._stage(staged, "oracle", lambda: self._oracle_tables(g, moore, level))
            return PipelineResult(
                command="oracle",
                kind=result.kind,
                simplicial=g,
                validations=result.validations,
                moore=moore,
                oracle=tables,
            )
        except StageFailed as failure:
            return failure.result

    @staticmethod
    def _oracle_tables(
        g: SimplicialLieAlgebra, moore: MooreComplex, level: int
    ) -> OracleTables:
        differential = None
        if level + 1 <= g.truncation:
            differential = oracle_differential_table(g, moore, level + 1)
        brackets = {
            (n1, level - n1): oracle_bracket_table(g, moore, n1, level - n1)
            for n1 in range(level + 1)
        }
        return OracleTables(level, differential, brackets)

    def recheck(self, dgla: DGLA) -> PipelineResult:
        """Re-run the axiom checks on a DGLA read back from an output document."""
        verification = verify_dgla(dgla)
        return PipelineResult(
            command="recheck",
            kind="dgla",
            dgla=dgla,
            verification=verification,
            failed_stage=None if verification.ok else "verify",
            message="" if verification.ok else "DGLA axioms fail",
        )
