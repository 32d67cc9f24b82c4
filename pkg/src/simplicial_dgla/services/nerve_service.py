"""
Simplicial Lie algebras generated from algebraic presentations.

Responsibilities:
- Realize crossed modules, 2-crossed modules, chain complexes and module
  complexes as truncated simplicial Lie algebras
- Lay out every level as the Dold-Kan sum of degenerated Moore spaces
- Solve the brackets of levels above the Moore length from the faces

Design Pattern: Builder
- Face and degeneracy matrices come from DoldKanLayout
- Brackets of low levels come from explicit block rules
- Brackets of higher levels are the unique ones making every face a Lie morphism
"""

import logging
from collections.abc import Callable, Sequence

from simplicial_dgla.models.exceptions import (
    ConstructionError,
    InvalidPresentationError,
    LevelOutOfRangeError,
    LieAlgebraError,
)
from simplicial_dgla.models.lie_algebra import LieAlgebra
from simplicial_dgla.models.linear import (
    ExactMatrix,
    Vector,
    add_vectors,
    scale_vector,
    unit_vector,
    zero_vector,
)
from simplicial_dgla.models.multi_index import MultiIndex
from simplicial_dgla.models.presentations import (
    ChainComplexSpec,
    CrossedModuleSpec,
    ModuleComplexSpec,
    TwoCrossedModuleSpec,
)
from simplicial_dgla.models.simplicial import SimplicialLieAlgebra
from simplicial_dgla.services.dold_kan import DoldKanLayout
from simplicial_dgla.services.presentation_validator import (
    validate_crossed_module,
    validate_module_complex,
    validate_two_crossed_module,
)

logger = logging.getLogger(__name__)

# rule(alpha, x, beta, y) -> {alpha': component} for blocks alpha <= beta
BlockRule = Callable[[MultiIndex, Vector, MultiIndex, Vector], dict[MultiIndex, Vector]]

EMPTY = MultiIndex.of()
S0 = MultiIndex.of(0)
S1 = MultiIndex.of(1)
S10 = MultiIndex.of(1, 0)


def _neg(x: Vector) -> Vector:
    return scale_vector(-1, x)


def _algebra_from_rule(
    layout: DoldKanLayout, n: int, rule: BlockRule, labels: Sequence[str]
) -> LieAlgebra:
    """Tabulate a level bracket given block by block."""
    dim = layout.dim(n)

    def value(i: int, j: int) -> Vector:
        left, left_pos = layout.locate(n, i)
        right, right_pos = layout.locate(n, j)
        x = unit_vector(left.dim, left_pos)
        y = unit_vector(right.dim, right_pos)
        out = zero_vector(dim)
        for alpha, component in rule(left.alpha, x, right.alpha, y).items():
            out = add_vectors(out, layout.embed(n, alpha, component))
        return out

    try:
        return LieAlgebra.from_basis_bracket(dim, value, labels)
    except LieAlgebraError as e:
        raise ConstructionError(f"Level {n} bracket is not a Lie bracket: {e}") from e


def _algebra_from_faces(
    n: int, faces: Sequence[ExactMatrix], lower: LieAlgebra, labels: Sequence[str]
) -> LieAlgebra:
    """
    The bracket on level n for which every face is a Lie morphism.

    Requires the faces to be jointly injective, which holds above the
    Moore length. The bracket is solved on an invertible set of rows of
    the stacked face matrix and checked against all rows.

    Raises:
        ConstructionError: If the faces are not jointly injective or no
            bracket is compatible with them
    """
    dim = faces[0].cols
    if dim == 0:
        return LieAlgebra.abelian(0)
    stacked = ExactMatrix.vstack(*faces)
    _, pivots = stacked.transpose().entries.rref()
    if len(pivots) != dim:
        raise ConstructionError(
            f"Faces of level {n} are not jointly injective (rank {len(pivots)} < {dim})"
        )
    rows = list(pivots)
    solver = ExactMatrix.from_rows([stacked.row(r) for r in rows], cols=dim).inverse()
    images = [[face.column(j) for j in range(dim)] for face in faces]

    def value(i: int, j: int) -> Vector:
        target = tuple(c for cols in images for c in lower.bracket(cols[i], cols[j]))
        solution = solver.apply(tuple(target[r] for r in rows))
        if stacked.apply(solution) != target:
            raise ConstructionError(
                f"No bracket on level {n} is compatible with the faces at basis pair ({i}, {j})"
            )
        return solution

    logger.debug(f"Solving level {n} bracket from {len(faces)} faces, dim {dim}")
    try:
        return LieAlgebra.from_basis_bracket(dim, value, labels)
    except LieAlgebraError as e:
        raise ConstructionError(f"Level {n} bracket is not a Lie bracket: {e}") from e


def _build(
    layout: DoldKanLayout,
    deltas: Sequence[ExactMatrix],
    moore_labels: Sequence[Sequence[str]],
    rules: dict[int, BlockRule],
) -> SimplicialLieAlgebra:
    """Assemble levels 0..K: rule-defined levels first, the rest solved from faces."""
    top = layout.truncation
    faces: list[tuple[ExactMatrix, ...]] = [()]
    faces += [
        tuple(layout.face_matrix(n, i, deltas) for i in range(n + 1)) for n in range(1, top + 1)
    ]
    degeneracies = [
        tuple(layout.degeneracy_matrix(n, i) for i in range(n + 1)) for n in range(top)
    ]
    levels: list[LieAlgebra] = []
    for n in range(top + 1):
        labels = layout.labels(n, moore_labels)
        if n in rules:
            levels.append(_algebra_from_rule(layout, n, rules[n], labels))
        else:
            levels.append(_algebra_from_faces(n, faces[n], levels[n - 1], labels))
    g = SimplicialLieAlgebra(tuple(levels), tuple(faces), tuple(degeneracies))
    logger.info(f"Generated simplicial Lie algebra with level dims {g.dims}")
    return g


def _check_truncation(truncation: int, minimum: int, what: str) -> None:
    if truncation < minimum:
        raise LevelOutOfRangeError(f"A {what} needs truncation K >= {minimum}, got {truncation}")


def from_crossed_module(spec: CrossedModuleSpec, truncation: int = 2) -> SimplicialLieAlgebra:
    """
    Simplicial Lie algebra with Moore complex h -> d (the nerve of the crossed module).

    Level 1 is h semidirect s_0 d with [s_0 y, h] = y . h.

    Args:
        spec: Crossed module presentation
        truncation: Top level K, at least 2

    Raises:
        InvalidPresentationError: If a crossed-module law fails (carries the report)
        LevelOutOfRangeError: If K < 2
    """
    _check_truncation(truncation, 2, "crossed module")
    report = validate_crossed_module(spec)
    if not report.ok:
        raise InvalidPresentationError(
            f"Crossed-module laws fail: {', '.join(report.laws())}", report
        )
    d, h, act = spec.d_algebra, spec.h_algebra, spec.action.apply

    def level_zero(a: MultiIndex, x: Vector, b: MultiIndex, y: Vector) -> dict[MultiIndex, Vector]:
        return {EMPTY: d.bracket(x, y)}

    def level_one(a: MultiIndex, x: Vector, b: MultiIndex, y: Vector) -> dict[MultiIndex, Vector]:
        if (a, b) == (EMPTY, EMPTY):
            return {EMPTY: h.bracket(x, y)}
        if (a, b) == (EMPTY, S0):
            return {EMPTY: _neg(act(y, x))}
        return {S0: d.bracket(x, y)}

    layout = DoldKanLayout(spec.moore_dims, truncation)
    return _build(
        layout, (spec.delta1,), (d.labels, h.labels), {0: level_zero, 1: level_one}
    )


def from_two_crossed_module(
    spec: TwoCrossedModuleSpec, truncation: int = 3
) -> SimplicialLieAlgebra:
    """
    Simplicial Lie algebra with Moore complex h -> d -> k.

    Level 2 on the blocks h, s_0 u, s_1 v, s_1 s_0 k uses the Peiffer
    bracket through [s_0 u, s_1 v] = {v, u} + s_0 [u, v].

    Args:
        spec: 2-crossed module presentation
        truncation: Top level K, at least 3

    Raises:
        InvalidPresentationError: If a linearized 2-crossed-module law fails
        LevelOutOfRangeError: If K < 3
        ConstructionError: If a higher level cannot be solved from its faces
    """
    _check_truncation(truncation, 3, "2-crossed module")
    report = validate_two_crossed_module(spec)
    if not report.ok:
        raise InvalidPresentationError(
            f"2-crossed-module laws fail: {', '.join(report.laws())}", report
        )
    k, d, h = spec.k_algebra, spec.d_algebra, spec.h_algebra
    act_d, act_h = spec.action_on_d.apply, spec.action_on_h.apply
    delta1, delta2 = spec.delta1.apply, spec.delta2.apply
    pb = spec.peiffer_bracket.apply

    def level_zero(a: MultiIndex, x: Vector, b: MultiIndex, y: Vector) -> dict[MultiIndex, Vector]:
        return {EMPTY: k.bracket(x, y)}

    def level_one(a: MultiIndex, x: Vector, b: MultiIndex, y: Vector) -> dict[MultiIndex, Vector]:
        if (a, b) == (EMPTY, EMPTY):
            return {EMPTY: d.bracket(x, y)}
        if (a, b) == (EMPTY, S0):
            return {EMPTY: _neg(act_d(y, x))}
        return {S0: k.bracket(x, y)}

    level_two_rules: dict[tuple[MultiIndex, MultiIndex], BlockRule] = {
        (EMPTY, EMPTY): lambda a, x, b, y: {EMPTY: h.bracket(x, y)},
        (EMPTY, S0): lambda a, x, b, y: {EMPTY: pb(delta2(x), y)},
        (EMPTY, S1): lambda a, x, b, y: {EMPTY: _neg(act_h(delta1(y), x))},
        (EMPTY, S10): lambda a, x, b, y: {EMPTY: _neg(act_h(y, x))},
        (S0, S0): lambda a, x, b, y: {S0: d.bracket(x, y)},
        (S0, S1): lambda a, x, b, y: {EMPTY: pb(y, x), S0: d.bracket(x, y)},
        (S0, S10): lambda a, x, b, y: {S0: _neg(act_d(y, x))},
        (S1, S1): lambda a, x, b, y: {S1: d.bracket(x, y)},
        (S1, S10): lambda a, x, b, y: {S1: _neg(act_d(y, x))},
        (S10, S10): lambda a, x, b, y: {S10: k.bracket(x, y)},
    }

    def level_two(a: MultiIndex, x: Vector, b: MultiIndex, y: Vector) -> dict[MultiIndex, Vector]:
        return level_two_rules[(a, b)](a, x, b, y)

    layout = DoldKanLayout(spec.moore_dims, truncation)
    return _build(
        layout,
        (spec.delta1, spec.delta2),
        (k.labels, d.labels, h.labels),
        {0: level_zero, 1: level_one, 2: level_two},
    )


def from_chain_complex(
    spec: ChainComplexSpec, truncation: int | None = None
) -> SimplicialLieAlgebra:
    """
    Abelian simplicial Lie algebra Gamma(N) of a chain complex.

    Args:
        spec: Chain complex N_0 <- ... <- N_k
        truncation: Top level K, at least k + 1 (default k + 1)
    """
    top = spec.length + 1 if truncation is None else truncation
    _check_truncation(top, spec.length + 1, f"chain complex of length {spec.length}")
    layout = DoldKanLayout(spec.dims, top)

    def abelian(a: MultiIndex, x: Vector, b: MultiIndex, y: Vector) -> dict[MultiIndex, Vector]:
        return {}

    return _build(layout, spec.differentials, (), {n: abelian for n in range(top + 1)})


def from_module_complex(
    spec: ModuleComplexSpec, truncation: int | None = None
) -> SimplicialLieAlgebra:
    """
    Semidirect product of the constant Lie algebra g with Gamma(N) of a g-module complex.

    g sits in the block s_{n-1}...s_0 of every level and acts on each other
    block through its module; all other brackets vanish.

    Args:
        spec: Lie algebra with a chain complex of modules N_1 <- ... <- N_k
        truncation: Top level K, at least k + 1 (default k + 1)

    Raises:
        InvalidPresentationError: If a module or equivariance law fails
    """
    length = len(spec.module_dims)
    top = length + 1 if truncation is None else truncation
    _check_truncation(top, length + 1, f"module complex of length {length}")
    report = validate_module_complex(spec)
    if not report.ok:
        raise InvalidPresentationError(
            f"Module-complex laws fail: {', '.join(report.laws())}", report
        )
    g = spec.algebra
    first = spec.module_dims[0] if spec.module_dims else 0
    deltas = (ExactMatrix.zeros(g.dim, first), *spec.differentials)

    def make_rule(n: int) -> BlockRule:
        full = MultiIndex.of(*range(n))

        def rule(a: MultiIndex, x: Vector, b: MultiIndex, y: Vector) -> dict[MultiIndex, Vector]:
            if a == full and b == full:
                return {full: g.bracket(x, y)}
            if b == full:
                module = spec.representations[n - a.size - 1]
                return {a: _neg(module.apply(y, x))}
            return {}

        return rule

    layout = DoldKanLayout(spec.moore_dims, top)
    return _build(layout, deltas, (g.labels,), {n: make_rule(n) for n in range(top + 1)})
