"""
JSON document gateway.

Reads input documents of every kind, converts them to presentations or
simplicial Lie algebras, and serializes pipeline results as output
documents with provenance.
"""

import hashlib
import logging
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from simplicial_dgla import __version__
from simplicial_dgla.gateways.base import (
    DocumentParseError,
    IDocumentGateway,
    LoadedDocument,
    Source,
)
from simplicial_dgla.models.dgla import DGLA
from simplicial_dgla.models.documents import (
    BracketDocument,
    ChainComplexDocument,
    CrossedModuleDocument,
    DglaDocument,
    DiscrepancyDocument,
    LieAlgebraDocument,
    MatrixDocument,
    MatrixRows,
    ModuleComplexDocument,
    MooreDocument,
    OracleDocument,
    OutputDocument,
    PeifferDocument,
    Provenance,
    RunOptions,
    SignRowDocument,
    SimplicialDocument,
    Tensor,
    TwoCrossedModuleDocument,
    ValidationDocument,
    VerificationDocument,
    ViolationDocument,
    input_adapter,
)
from simplicial_dgla.models.exceptions import (
    DimensionMismatchError,
    InvalidPresentationError,
)
from simplicial_dgla.models.lie_algebra import LieAlgebra
from simplicial_dgla.models.linear import (
    BilinearMap,
    ExactMatrix,
    Vector,
    as_vector,
    format_rational,
)
from simplicial_dgla.models.presentations import (
    ChainComplexSpec,
    CrossedModuleSpec,
    ModuleComplexSpec,
    TwoCrossedModuleSpec,
)
from simplicial_dgla.models.reports import ValidationReport, VerificationReport, Violation
from simplicial_dgla.models.results import PipelineResult
from simplicial_dgla.models.simplicial import MooreComplex, SimplicialLieAlgebra
from simplicial_dgla.services.presentation_validator import validate_structure_constants

logger = logging.getLogger(__name__)


def _scalars(v: Vector) -> list[str]:
    return [format_rational(c) for c in v]


def _rows(m: ExactMatrix) -> list[list[str]]:
    return [_scalars(tuple(row)) for row in m.to_rows()]


def _tensor(b: BilinearMap) -> list[list[list[str]]]:
    return [[_scalars(v) for v in row] for row in b.values]


def moore_name(n: int) -> str:
    return f"N_{n}"


def dgla_name(n: int) -> str:
    return f"L_-{n}" if n else "L_0"


class JsonDocumentGateway(IDocumentGateway):
    """
    Document gateway backed by JSON files.

    Input documents are validated by the pydantic schema; shapes are
    checked against the declared dimensions while converting. Output
    carries the SHA-256 of the input bytes and the tool version and no
    timestamps, so identical input gives byte-identical output.
    """

    def __init__(self, indent: int = 2):
        """
        Initialize gateway.

        Args:
            indent: JSON indentation of written documents
        """
        self.indent = indent

    # ------------------------------------------------------------------ input

    def read(self, path: Path) -> LoadedDocument:
        try:
            raw = Path(path).read_bytes()
        except OSError as e:
            raise DocumentParseError(f"Cannot read {path}: {e}") from e
        return self.parse_bytes(raw, str(path))

    def parse_bytes(self, raw: bytes, origin: str = "<input>") -> LoadedDocument:
        """Validate raw JSON bytes against the input schema."""
        try:
            document = input_adapter.validate_json(raw)
        except ValidationError as e:
            first = e.errors()[0]
            where = ".".join(str(p) for p in first["loc"])
            raise DocumentParseError(
                f"{origin}: {e.error_count()} schema error(s); first at {where}: {first['msg']}"
            ) from e
        digest = hashlib.sha256(raw).hexdigest()
        logger.info(f"Read {document.kind} document from {origin} (sha256 {digest[:12]})")
        return LoadedDocument(document, digest)

    def to_source(self, loaded: LoadedDocument) -> Source:
        document = loaded.document
        try:
            if isinstance(document, SimplicialDocument):
                return self._simplicial(document)
            if isinstance(document, CrossedModuleDocument):
                return self._crossed_module(document)
            if isinstance(document, TwoCrossedModuleDocument):
                return self._two_crossed_module(document)
            if isinstance(document, ChainComplexDocument):
                return self._chain_complex(document)
            return self._module_complex(document)
        except DimensionMismatchError as e:
            raise DocumentParseError(f"Shape mismatch in {document.kind} document: {e}") from e
        except InvalidPresentationError:
            raise
        except ValueError as e:
            raise InvalidPresentationError(str(e)) from e

    @staticmethod
    def _matrix(name: str, rows: MatrixRows, shape: tuple[int, int]) -> ExactMatrix:
        m = ExactMatrix.from_rows(rows, cols=shape[1])
        if m.shape != shape:
            raise DimensionMismatchError(f"{name} has shape {m.shape}, expected {shape}")
        return m

    @staticmethod
    def _bilinear(
        name: str, values: Optional[Tensor], left: int, right: int, target: int
    ) -> BilinearMap:
        if values is None:
            return BilinearMap.zero(left, right, target)
        try:
            return BilinearMap.from_array(values, left, right, target)
        except DimensionMismatchError as e:
            raise DimensionMismatchError(f"{name}: {e}") from e

    def _algebra(self, name: str, doc: LieAlgebraDocument) -> LieAlgebra:
        labels = tuple(doc.labels)
        if doc.structure is None:
            return LieAlgebra.abelian(doc.dim, labels)
        table = self._bilinear(name, doc.structure, doc.dim, doc.dim, doc.dim)
        report = validate_structure_constants(name, table)
        if not report.ok:
            raise InvalidPresentationError(
                f"Structure constants of {name} do not define a Lie algebra", report
            )
        return LieAlgebra(doc.dim, table, labels)

    def _crossed_module(self, doc: CrossedModuleDocument) -> CrossedModuleSpec:
        d = self._algebra("d_algebra", doc.d_algebra)
        h = self._algebra("h_algebra", doc.h_algebra)
        return CrossedModuleSpec(
            d_algebra=d,
            h_algebra=h,
            delta1=self._matrix("delta1", doc.delta1, (d.dim, h.dim)),
            action=self._bilinear("action", doc.action, d.dim, h.dim, h.dim),
        )

    def _two_crossed_module(self, doc: TwoCrossedModuleDocument) -> TwoCrossedModuleSpec:
        k = self._algebra("k_algebra", doc.k_algebra)
        d = self._algebra("d_algebra", doc.d_algebra)
        h = self._algebra("h_algebra", doc.h_algebra)
        return TwoCrossedModuleSpec(
            k_algebra=k,
            d_algebra=d,
            h_algebra=h,
            delta2=self._matrix("delta2", doc.delta2, (d.dim, h.dim)),
            delta1=self._matrix("delta1", doc.delta1, (k.dim, d.dim)),
            action_on_d=self._bilinear("action_on_d", doc.action_on_d, k.dim, d.dim, d.dim),
            action_on_h=self._bilinear("action_on_h", doc.action_on_h, k.dim, h.dim, h.dim),
            peiffer_bracket=self._bilinear(
                "peiffer_bracket", doc.peiffer_bracket, d.dim, d.dim, h.dim
            ),
        )

    def _chain_complex(self, doc: ChainComplexDocument) -> ChainComplexSpec:
        dims = tuple(doc.dims)
        if len(doc.differentials) != len(dims) - 1:
            raise DimensionMismatchError(
                f"{len(dims)} spaces need {len(dims) - 1} differentials"
            )
        differentials = tuple(
            self._matrix(f"delta_{n}", rows, (dims[n - 1], dims[n]))
            for n, rows in enumerate(doc.differentials, start=1)
        )
        return ChainComplexSpec(dims, differentials)

    def _module_complex(self, doc: ModuleComplexDocument) -> ModuleComplexSpec:
        g = self._algebra("algebra", doc.algebra)
        dims = tuple(doc.module_dims)
        if len(doc.representations) != len(dims):
            raise DimensionMismatchError(
                f"{len(dims)} modules need {len(dims)} representations"
            )
        if len(doc.differentials) != max(len(dims) - 1, 0):
            raise DimensionMismatchError(
                f"{len(dims)} modules need {max(len(dims) - 1, 0)} differentials"
            )
        representations = tuple(
            self._bilinear(f"representation on N_{m}", values, g.dim, dims[m - 1], dims[m - 1])
            for m, values in enumerate(doc.representations, start=1)
        )
        differentials = tuple(
            self._matrix(f"delta_{n}", rows, (dims[n - 2], dims[n - 1]))
            for n, rows in enumerate(doc.differentials, start=2)
        )
        return ModuleComplexSpec(g, representations, differentials)

    def _simplicial(self, doc: SimplicialDocument) -> SimplicialLieAlgebra:
        levels = tuple(self._algebra(f"level {n}", lv) for n, lv in enumerate(doc.levels))
        top = len(levels) - 1
        if len(doc.faces) != top or len(doc.degeneracies) != top:
            raise DimensionMismatchError(
                f"{top + 1} levels need {top} face lists and {top} degeneracy lists"
            )
        faces: list[tuple[ExactMatrix, ...]] = [()]
        for n, maps in enumerate(doc.faces, start=1):
            shape = (levels[n - 1].dim, levels[n].dim)
            faces.append(
                tuple(self._matrix(f"d_{i} at level {n}", m, shape) for i, m in enumerate(maps))
            )
        degeneracies = []
        for n, maps in enumerate(doc.degeneracies):
            shape = (levels[n + 1].dim, levels[n].dim)
            degeneracies.append(
                tuple(self._matrix(f"s_{i} at level {n}", m, shape) for i, m in enumerate(maps))
            )
        return SimplicialLieAlgebra(levels, tuple(faces), tuple(degeneracies))

    def read_dgla(self, path: Path) -> tuple[DGLA, str]:
        try:
            raw = Path(path).read_bytes()
            output = OutputDocument.model_validate_json(raw)
        except OSError as e:
            raise DocumentParseError(f"Cannot read {path}: {e}") from e
        except ValidationError as e:
            raise DocumentParseError(
                f"{path} is not an output document: {e.error_count()} error(s)"
            ) from e
        if output.dgla is None:
            raise DocumentParseError(f"{path} has no DGLA section")
        section = output.dgla
        dims = tuple(section.dims)
        try:
            differentials = tuple(
                self._matrix(f"d_{n}", m.rows, (dims[n - 1], dims[n]))
                for n, m in enumerate(section.differentials, start=1)
            )
            brackets = {
                (b.degrees[0], b.degrees[1]): self._bilinear(
                    f"bracket {b.degrees}",
                    b.values,
                    dims[b.degrees[0]],
                    dims[b.degrees[1]],
                    dims[b.degrees[0] + b.degrees[1]],
                )
                for b in section.brackets
            }
            dgla = DGLA(
                dims=dims,
                differentials=differentials,
                brackets=brackets,
                labels=tuple(tuple(ls) for ls in section.labels),
                bases=tuple(tuple(as_vector(v) for v in basis) for basis in section.bases),
            )
        except (DimensionMismatchError, IndexError) as e:
            raise DocumentParseError(f"Unusable DGLA section in {path}: {e}") from e
        return dgla, hashlib.sha256(raw).hexdigest()

    def input_schema(self) -> dict[str, object]:
        return input_adapter.json_schema()

    # ----------------------------------------------------------------- output

    def dumps(self, output: OutputDocument) -> str:
        return output.model_dump_json(indent=self.indent or None) + "\n"

    def to_output(self, result: PipelineResult, input_sha256: str) -> OutputDocument:
        """Serialize a pipeline result with provenance."""
        return OutputDocument(
            command=result.command,
            ok=result.ok,
            failed_stage=result.failed_stage,
            message=result.message,
            validation=[self._validation(r) for r in result.validations],
            moore=self._moore(result, result.moore) if result.moore is not None else None,
            dgla=self.dgla_document(result.dgla) if result.dgla is not None else None,
            verification=self._verification(result.verification),
            oracle_comparison=self._verification(result.comparison),
            oracle=self._oracle(result),
            provenance=Provenance(
                input_sha256=input_sha256, tool_version=__version__, kind=result.kind
            ),
        )

    @staticmethod
    def _violation(v: Violation) -> ViolationDocument:
        return ViolationDocument(
            law=v.law,
            levels=list(v.levels),
            witness=list(v.witness),
            residual=_scalars(v.residual),
            detail=v.detail,
        )

    def _validation(self, report: ValidationReport) -> ValidationDocument:
        return ValidationDocument(
            subject=report.subject,
            ok=report.ok,
            checks=report.checks,
            violations=[self._violation(v) for v in report.violations],
        )

    def _verification(
        self, report: Optional[VerificationReport]
    ) -> Optional[VerificationDocument]:
        if report is None:
            return None
        return VerificationDocument(
            ok=report.ok,
            check_counts=dict(sorted(report.check_counts.items())),
            violations=[self._violation(v) for v in report.violations],
            oracle_diffs=[
                DiscrepancyDocument(
                    quantity=d.quantity,
                    degrees=list(d.degrees),
                    witness=list(d.witness),
                    built=_scalars(d.built),
                    oracle=_scalars(d.oracle),
                )
                for d in report.oracle_diffs
            ],
            sign_table=[
                SignRowDocument(
                    n=row.n,
                    alpha=list(row.alpha),
                    beta=list(row.beta),
                    n1=row.n1,
                    n2=row.n2,
                    shuffle_sign=row.shuffle_sign,
                    prose_sign=row.prose_sign,
                    oracle_sign=row.oracle_sign,
                    normalized_sign=row.normalized_sign,
                    agrees=row.agrees,
                    prose_antisymmetric=row.prose_antisymmetric,
                )
                for row in report.sign_table
            ],
        )

    def _moore(self, result: PipelineResult, moore: MooreComplex) -> MooreDocument:
        return MooreDocument(
            truncation=moore.truncation,
            dims=list(moore.dims),
            length=moore.length,
            homology=list(result.homology),
            bases=[[_scalars(v) for v in moore.space(n).basis] for n in range(len(moore.dims))],
            deltas=[
                MatrixDocument(
                    domain=moore_name(n), codomain=moore_name(n - 1), rows=_rows(moore.delta(n))
                )
                for n in range(1, moore.truncation + 1)
            ],
            peiffer=[
                PeifferDocument(
                    level=pair.n,
                    alpha=list(pair.alpha.indices),
                    beta=list(pair.beta.indices),
                    values=_tensor(table),
                )
                for pair, table in result.peiffer.items()
            ],
            symmetric_peiffer=(
                None if result.symmetric_peiffer is None else _tensor(result.symmetric_peiffer)
            ),
        )

    @staticmethod
    def _bracket(degrees: tuple[int, int], table: BilinearMap) -> BracketDocument:
        n1, n2 = degrees
        return BracketDocument(
            degrees=(n1, n2),
            left=dgla_name(n1),
            right=dgla_name(n2),
            target=dgla_name(n1 + n2),
            values=_tensor(table),
        )

    def dgla_document(self, dgla: DGLA) -> DglaDocument:
        """DGLA section: dims, labels, bases, differentials and every bracket table."""
        return DglaDocument(
            length=dgla.length,
            dims=list(dgla.dims),
            labels=[[dgla.label(n, i) for i in range(dim)] for n, dim in enumerate(dgla.dims)],
            bases=[[_scalars(v) for v in basis] for basis in dgla.bases],
            differentials=[
                MatrixDocument(domain=dgla_name(n), codomain=dgla_name(n - 1), rows=_rows(d))
                for n, d in enumerate(dgla.differentials, start=1)
            ],
            brackets=[self._bracket(key, dgla.brackets[key]) for key in sorted(dgla.brackets)],
        )

    def _oracle(self, result: PipelineResult) -> Optional[OracleDocument]:
        tables = result.oracle
        if tables is None:
            return None
        n = tables.level
        differential = None
        if tables.differential is not None:
            differential = MatrixDocument(
                domain=moore_name(n + 1), codomain=moore_name(n), rows=_rows(tables.differential)
            )
        return OracleDocument(
            level=n,
            differential=differential,
            brackets=[self._bracket(key, tables.brackets[key]) for key in sorted(tables.brackets)],
        )

    def to_simplicial_document(
        self, g: SimplicialLieAlgebra, options: Optional[RunOptions] = None
    ) -> SimplicialDocument:
        """Any simplicial Lie algebra as a direct-input document."""
        return SimplicialDocument(
            kind="simplicial",
            levels=[
                LieAlgebraDocument(
                    dim=level.dim,
                    labels=list(level.labels),
                    structure=None if level.structure.is_zero() else _tensor(level.structure),
                )
                for level in g.levels
            ],
            faces=[[_rows(m) for m in g.faces[n]] for n in range(1, g.truncation + 1)],
            degeneracies=[[_rows(m) for m in g.degeneracies[n]] for n in range(g.truncation)],
            options=options or RunOptions(),
        )

    def dump_input(self, document: SimplicialDocument) -> str:
        """Serialize an input document."""
        return document.model_dump_json(indent=self.indent or None) + "\n"

