"""
Input and output document schemas.

Documents are JSON with every number written as an integer or a "p/q"
string, so no floating point value ever reaches the exact kernel.
Shapes are declared through dimensions and checked when the gateway
turns a document into domain objects.
"""

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, TypeAdapter

from simplicial_dgla.models.linear import format_rational, parse_rational


def _canonical_scalar(value: object) -> str:
    """Accept "p/q" strings and integers, return lowest-terms text."""
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ValueError(f"Expected an integer or a 'p/q' string, got {value!r}")
    return format_rational(parse_rational(value))


Scalar = Annotated[str, BeforeValidator(_canonical_scalar)]
MatrixRows = list[list[Scalar]]
Tensor = list[list[list[Scalar]]]


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class LieAlgebraDocument(_Document):
    """Lie algebra by dimension, labels and dense structure constants (absent = abelian)."""

    dim: int = Field(ge=0)
    labels: list[str] = Field(default_factory=list)
    structure: Optional[Tensor] = Field(
        default=None, description="structure[i][j] = [e_i, e_j] in coordinates"
    )


class RunOptions(_Document):
    """Options stored with the input; command-line flags take precedence."""

    truncation: Optional[int] = Field(default=None, ge=1, description="Top stored level K")


class CrossedModuleDocument(_Document):
    """delta1: h -> d with d acting on h; action[x][y] = e_x . e_y."""

    kind: Literal["crossed_module"]
    d_algebra: LieAlgebraDocument
    h_algebra: LieAlgebraDocument
    delta1: MatrixRows
    action: Optional[Tensor] = None
    options: RunOptions = Field(default_factory=RunOptions)


class TwoCrossedModuleDocument(_Document):
    """h -> d -> k with k-actions and the Peiffer bracket {,}: d x d -> h."""

    kind: Literal["two_crossed_module"]
    k_algebra: LieAlgebraDocument
    d_algebra: LieAlgebraDocument
    h_algebra: LieAlgebraDocument
    delta2: MatrixRows
    delta1: MatrixRows
    action_on_d: Optional[Tensor] = None
    action_on_h: Optional[Tensor] = None
    peiffer_bracket: Optional[Tensor] = None
    options: RunOptions = Field(default_factory=RunOptions)


class ChainComplexDocument(_Document):
    """N_0 <- N_1 <- ... <- N_k; differentials[n - 1] is delta_n."""

    kind: Literal["chain_complex"]
    dims: list[int] = Field(min_length=1)
    differentials: list[MatrixRows] = Field(default_factory=list)
    options: RunOptions = Field(default_factory=RunOptions)


class ModuleComplexDocument(_Document):
    """Lie algebra acting on N_1 <- ... <- N_k; differentials[n - 2] is delta_n."""

    kind: Literal["module_complex"]
    algebra: LieAlgebraDocument
    module_dims: list[int] = Field(default_factory=list)
    representations: list[Tensor] = Field(default_factory=list)
    differentials: list[MatrixRows] = Field(default_factory=list)
    options: RunOptions = Field(default_factory=RunOptions)


class SimplicialDocument(_Document):
    """
    Direct input of levels g_0..g_K.

    faces[n - 1] lists d_0..d_n: g_n -> g_(n-1) and degeneracies[n] lists
    s_0..s_n: g_n -> g_(n+1).
    """

    kind: Literal["simplicial"]
    levels: list[LieAlgebraDocument] = Field(min_length=1)
    faces: list[list[MatrixRows]] = Field(default_factory=list)
    degeneracies: list[list[MatrixRows]] = Field(default_factory=list)
    options: RunOptions = Field(default_factory=RunOptions)


InputDocument = Annotated[
    Union[
        SimplicialDocument,
        CrossedModuleDocument,
        TwoCrossedModuleDocument,
        ChainComplexDocument,
        ModuleComplexDocument,
    ],
    Field(discriminator="kind"),
]

input_adapter: TypeAdapter[InputDocument] = TypeAdapter(InputDocument)

INPUT_KINDS = (
    "simplicial",
    "crossed_module",
    "two_crossed_module",
    "chain_complex",
    "module_complex",
)


class MatrixDocument(_Document):
    """Matrix with named domain and codomain."""

    domain: str
    codomain: str
    rows: MatrixRows


class BracketDocument(_Document):
    """Bracket table values[i][j] = [e_i, e_j] between named spaces."""

    degrees: tuple[int, int]
    left: str
    right: str
    target: str
    values: Tensor


class PeifferDocument(_Document):
    """F_(alpha,beta) on Moore bases."""

    level: int
    alpha: list[int]
    beta: list[int]
    values: Tensor


class ViolationDocument(_Document):
    law: str
    levels: list[int]
    witness: list[int]
    residual: list[Scalar]
    detail: str


class ValidationDocument(_Document):
    subject: str
    ok: bool
    checks: int
    violations: list[ViolationDocument]


class DiscrepancyDocument(_Document):
    quantity: str
    degrees: list[int]
    witness: list[int]
    built: list[Scalar]
    oracle: list[Scalar]


class SignRowDocument(_Document):
    n: int
    alpha: list[int]
    beta: list[int]
    n1: int
    n2: int
    shuffle_sign: int
    prose_sign: int
    oracle_sign: int
    normalized_sign: int
    agrees: bool
    prose_antisymmetric: bool


class VerificationDocument(_Document):
    ok: bool
    check_counts: dict[str, int]
    violations: list[ViolationDocument]
    oracle_diffs: list[DiscrepancyDocument]
    sign_table: list[SignRowDocument]


class MooreDocument(_Document):
    """Moore complex summary with hypercrossed data."""

    truncation: int
    dims: list[int]
    length: int
    homology: list[int]
    bases: list[list[list[Scalar]]]
    deltas: list[MatrixDocument]
    peiffer: list[PeifferDocument]
    symmetric_peiffer: Optional[Tensor] = None


class DglaDocument(_Document):
    """The DGLA L_0 + ... + L_-k; re-ingested by dgla --recheck."""

    length: int
    dims: list[int]
    labels: list[list[str]]
    bases: list[list[list[Scalar]]]
    differentials: list[MatrixDocument]
    brackets: list[BracketDocument]


class OracleDocument(_Document):
    """Normalized oracle tables at one level n."""

    level: int
    differential: Optional[MatrixDocument] = None
    brackets: list[BracketDocument]


class Provenance(_Document):
    input_sha256: str
    tool_version: str
    kind: str


class OutputDocument(_Document):
    """Everything a command produced; byte-identical for identical input."""

    command: str
    ok: bool
    failed_stage: Optional[str] = None
    message: str = ""
    validation: list[ValidationDocument] = Field(default_factory=list)
    moore: Optional[MooreDocument] = None
    dgla: Optional[DglaDocument] = None
    verification: Optional[VerificationDocument] = None
    oracle_comparison: Optional[VerificationDocument] = None
    oracle: Optional[OracleDocument] = None
    provenance: Provenance
