"""
Simplicial identities, Moore complex, projectors and decomposition checks.

Responsibilities:
- Validate a truncated simplicial Lie algebra (simplicial identities and
  Lie-morphism property of every structure map)
- Compute the Moore complex N g with differentials and projectors p_n
- Check the semidirect decomposition of g_n over S(n)
- Compute Moore homology dimensions
"""

import logging
from functools import reduce
from itertools import combinations

from simplicial_dgla.models.exceptions import (
    InvalidSimplicialError,
    LevelOutOfRangeError,
    SimplicialDglaError,
)
from simplicial_dgla.models.lie_algebra import lie_morphism_defects
from simplicial_dgla.models.linear import (
    ExactMatrix,
    Subspace,
    Vector,
    image,
    intersect,
    is_zero_vector,
    kernel,
)
from simplicial_dgla.models.multi_index import MultiIndex
from simplicial_dgla.models.reports import ValidationReport, Violation
from simplicial_dgla.models.simplicial import MooreComplex, SimplicialLieAlgebra
from simplicial_dgla.services.combinatorics import enum_S

logger = logging.getLogger(__name__)


def _flatten(m: ExactMatrix) -> Vector:
    return tuple(v for row in m.to_rows() for v in row)


def _compare(
    law: str,
    level: int,
    witness: tuple[int, ...],
    lhs: ExactMatrix,
    rhs: ExactMatrix,
    detail: str,
) -> list[Violation]:
    difference = lhs - rhs
    if difference.is_zero():
        return []
    return [Violation(law, (level,), witness, _flatten(difference), detail)]


def validate_simplicial(g: SimplicialLieAlgebra) -> ValidationReport:
    """
    Check every simplicial identity and Lie-morphism condition exactly.

    Levels in the report are the level of the domain of the composite.

    Returns:
        ValidationReport (subject "simplicial"); empty iff all identities hold
    """
    violations: list[Violation] = []
    checks = 0
    top = g.truncation

    for n in range(2, top + 1):
        for i, j in combinations(range(n + 1), 2):
            checks += 1
            violations += _compare(
                "face_face",
                n,
                (i, j),
                g.face(n - 1, i) @ g.face(n, j),
                g.face(n - 1, j - 1) @ g.face(n, i),
                f"d_{i} d_{j} = d_{j - 1} d_{i}",
            )

    for n in range(top - 1):
        for i in range(n + 1):
            for j in range(i, n + 1):
                checks += 1
                violations += _compare(
                    "degeneracy_degeneracy",
                    n,
                    (i, j),
                    g.degeneracy(n + 1, i) @ g.degeneracy(n, j),
                    g.degeneracy(n + 1, j + 1) @ g.degeneracy(n, i),
                    f"s_{i} s_{j} = s_{j + 1} s_{i}",
                )

    for n in range(top):
        for j in range(n + 1):
            for i in range(n + 2):
                checks += 1
                lhs = g.face(n + 1, i) @ g.degeneracy(n, j)
                if i < j:
                    rhs = g.degeneracy(n - 1, j - 1) @ g.face(n, i)
                    law, detail = "face_degeneracy_low", f"d_{i} s_{j} = s_{j - 1} d_{i}"
                elif i in (j, j + 1):
                    rhs = ExactMatrix.identity(g.level(n).dim)
                    law, detail = "face_degeneracy_identity", f"d_{i} s_{j} = id"
                else:
                    rhs = g.degeneracy(n - 1, j) @ g.face(n, i - 1)
                    law, detail = "face_degeneracy_high", f"d_{i} s_{j} = s_{j} d_{i - 1}"
                violations += _compare(law, n, (i, j), lhs, rhs, detail)

    for n in range(1, top + 1):
        for i in range(n + 1):
            defects = lie_morphism_defects(g.face(n, i), g.level(n), g.level(n - 1))
            checks += 1
            violations += [
                Violation(
                    "face_lie_morphism", (n,), (i, a, b), residual, f"d_{i} is a Lie morphism"
                )
                for a, b, residual in defects
            ]
    for n in range(top):
        for i in range(n + 1):
            defects = lie_morphism_defects(g.degeneracy(n, i), g.level(n), g.level(n + 1))
            checks += 1
            violations += [
                Violation(
                    "degeneracy_lie_morphism", (n,), (i, a, b), residual, f"s_{i} is a Lie morphism"
                )
                for a, b, residual in defects
            ]

    report = ValidationReport.build("simplicial", violations, checks)
    logger.info(
        f"Validated simplicial Lie algebra with dims {g.dims}: "
        f"{len(report.violations)} violation(s) in {checks} checks"
    )
    return report


def s_alpha(g: SimplicialLieAlgebra, alpha: MultiIndex, n: int) -> ExactMatrix:
    """
    Composite degeneracy s_alpha: g_{n - #alpha} -> g_n.

    For alpha = {i_l > ... > i_1} this is s_{i_l} ... s_{i_1}, with s_{i_1}
    applied first so every index is legal at its level.

    Raises:
        LevelOutOfRangeError: If n exceeds the truncation or alpha does not fit level n
    """
    if not 0 <= n <= g.truncation or not alpha.fits(n):
        raise LevelOutOfRangeError(f"Multi-index {alpha} is not admissible at level {n}")
    level = n - alpha.size
    matrix = ExactMatrix.identity(g.level(level).dim)
    for index in alpha.ascending():
        matrix = g.degeneracy(level, index) @ matrix
        level += 1
    return matrix


def moore_projector(g: SimplicialLieAlgebra, n: int) -> ExactMatrix:
    """
    Projector p_n = p_n^1 p_n^2 ... p_n^n with p_n^i = id - s_{i-1} d_i.

    p_n^n is applied first. The result is idempotent with image N g_n and
    kills every degenerate element.

    Raises:
        LevelOutOfRangeError: Unless 1 <= n <= K
    """
    if not 1 <= n <= g.truncation:
        raise LevelOutOfRangeError(f"Projector level {n} outside 1..{g.truncation}")
    identity = ExactMatrix.identity(g.level(n).dim)
    factors = [identity - g.degeneracy(n - 1, i - 1) @ g.face(n, i) for i in range(1, n + 1)]
    return reduce(lambda acc, factor: acc @ factor, factors, identity)


def _check_rank_nullity(m: ExactMatrix, null: Subspace) -> None:
    if m.rank() + null.dim != m.cols:
        raise SimplicialDglaError(f"Rank-nullity fails for a {m.rows}x{m.cols} matrix")


def moore_complex(g: SimplicialLieAlgebra, check: bool = True) -> MooreComplex:
    """
    Compute N g_n = intersection of ker d_i for i >= 1, with delta_n and p_n.

    Args:
        g: Simplicial Lie algebra
        check: Validate simplicial identities first (skip only for already validated input)

    Returns:
        MooreComplex with length = largest n such that N g_n != 0

    Raises:
        InvalidSimplicialError: If validation fails
    """
    if check:
        report = validate_simplicial(g)
        if not report.ok:
            raise InvalidSimplicialError(
                f"Simplicial identities fail: {', '.join(report.laws())}", report
            )

    spaces = [Subspace.whole(g.level(0).dim)]
    for n in range(1, g.truncation + 1):
        kernels = []
        for i in range(1, n + 1):
            face = g.face(n, i)
            null = kernel(face)
            _check_rank_nullity(face, null)
            kernels.append(null)
        spaces.append(reduce(intersect, kernels))

    deltas = []
    for n in range(1, g.truncation + 1):
        face = g.face(n, 0)
        images = [face.apply(v) for v in spaces[n].basis]
        if not all(spaces[n - 1].contains(v) for v in images):
            raise InvalidSimplicialError(f"d_0 does not map N g_{n} into N g_{n - 1}")
        deltas.append(
            ExactMatrix.from_columns(
                [spaces[n - 1].coordinates(v) for v in images], spaces[n - 1].dim
            )
        )

    projectors = [ExactMatrix.identity(g.level(0).dim)]
    projectors += [moore_projector(g, n) for n in range(1, g.truncation + 1)]

    length = max((n for n, space in enumerate(spaces) if space.dim), default=0)
    moore = MooreComplex(length, tuple(spaces), tuple(deltas), tuple(projectors))
    logger.info(f"Moore complex dims {moore.dims}, length {length}")
    return moore


def decomposition_check(g: SimplicialLieAlgebra, moore: MooreComplex, n: int) -> bool:
    """
    True iff g_n is the direct sum of s_alpha(N g_{n - #alpha}) over alpha in S(n).

    Raises:
        LevelOutOfRangeError: If n is outside 0..K
    """
    if not 0 <= n <= g.truncation:
        raise LevelOutOfRangeError(f"Level {n} outside 0..{g.truncation}")
    columns: list[Vector] = []
    for alpha in enum_S(n):
        embedding = s_alpha(g, alpha, n)
        columns += [embedding.apply(v) for v in moore.space(n - alpha.size).basis]
    dim = g.level(n).dim
    if len(columns) != dim:
        return False
    return ExactMatrix.from_columns(columns, dim).rank() == dim


def moore_homology(moore: MooreComplex) -> tuple[int, ...]:
    """
    Dimensions of H_n = ker delta_n / im delta_{n+1} for n = 0..K.

    delta_0 is zero and delta_{K+1} is taken as zero beyond the truncation.
    """
    dims = []
    for n in range(moore.truncation + 1):
        cycles = moore.space(n).dim if n == 0 else kernel(moore.delta(n)).dim
        boundaries = moore.delta(n + 1).rank() if n < moore.truncation else 0
        dims.append(cycles - boundaries)
    return tuple(dims)


def moore_invariant_report(g: SimplicialLieAlgebra, moore: MooreComplex) -> ValidationReport:
    """
    Re-check the Moore complex invariants on computed data.

    Laws: "delta_squared", "projector_idempotent", "projector_image",
    "delta_image_ideal", "decomposition".
    """
    violations: list[Violation] = []
    checks = 0

    for n in range(2, moore.truncation + 1):
        checks += 1
        composite = moore.delta(n - 1) @ moore.delta(n)
        if not composite.is_zero():
            violations.append(
                Violation("delta_squared", (n,), (), _flatten(composite), "delta delta = 0")
            )

    for n in range(1, moore.truncation + 1):
        p = moore.projector(n)
        checks += 2
        if p @ p != p:
            violations.append(
                Violation("projector_idempotent", (n,), (), _flatten(p @ p - p), "p_n p_n = p_n")
            )
        if image(p) != moore.space(n):
            violations.append(Violation("projector_image", (n,), (), (), "image(p_n) = N g_n"))

    for n in range(1, moore.truncation + 1):
        ambient = g.level(n - 1)
        boundary_images = [
            moore.space(n - 1).embed(moore.delta(n).column(j)) for j in range(moore.delta(n).cols)
        ]
        boundaries = Subspace.span(boundary_images, ambient.dim)
        for a, x in enumerate(moore.space(n - 1).basis):
            for b, y in enumerate(boundaries.basis):
                checks += 1
                value = ambient.bracket(x, y)
                if not is_zero_vector(value) and not boundaries.contains(value):
                    violations.append(
                        Violation(
                            "delta_image_ideal", (n,), (a, b), value, "delta_n N g_n is an ideal"
                        )
                    )

    for n in range(g.truncation + 1):
        checks += 1
        if not decomposition_check(g, moore, n):
            violations.append(
                Violation("decomposition", (n,), (), (), "g_n = sum of s_alpha N g_(n - #alpha)")
            )

    return ValidationReport.build("moore", violations, checks)
