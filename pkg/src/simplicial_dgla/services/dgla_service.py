"""
DGLA service: closed-form DGLA of a simplicial Lie algebra, axiom checks
and comparison with the superfield oracle.

Responsibilities:
- Build L_-n = N g_n with d = delta and brackets from Peiffer pairings
- Verify d^2 = 0, graded antisymmetry, graded Jacobi and graded Leibniz
- Compare the built structure with the oracle tables on every basis tuple

Design Pattern: Stateless service functions over immutable models
"""

import logging
from itertools import product

from simplicial_dgla.models.dgla import DGLA
from simplicial_dgla.models.exceptions import (
    DimensionMismatchError,
    LevelOutOfRangeError,
    OracleMismatchError,
    TruncationError,
)
from simplicial_dgla.models.linear import (
    BilinearMap,
    ExactMatrix,
    Vector,
    add_vectors,
    format_combination,
    is_zero_vector,
    scale_vector,
    sub_vectors,
    unit_vector,
    zero_vector,
)
from simplicial_dgla.models.multi_index import MultiIndex
from simplicial_dgla.models.reports import OracleDiscrepancy, VerificationReport, Violation
from simplicial_dgla.models.simplicial import MooreComplex, SimplicialLieAlgebra
from simplicial_dgla.services.combinatorics import enum_Pbar_parts, shuffle_sign
from simplicial_dgla.services.peiffer_service import peiffer_table, require_moore
from simplicial_dgla.services.simplicial_service import moore_complex, moore_projector, s_alpha
from simplicial_dgla.services.superfield_oracle import (
    oracle_bracket_table,
    oracle_differential_table,
    sign_table,
)

logger = logging.getLogger(__name__)

AXIOMS = ("antisymmetry", "d_squared", "jacobi", "leibniz")


def _koszul(n1: int, n2: int) -> int:
    """(-1)^(n1 n2)."""
    return -1 if (n1 * n2) % 2 else 1


def action(g: SimplicialLieAlgebra, x0: Vector, xn: Vector, n: int) -> Vector:
    """
    [s_(n-1) ... s_0 x0, xn] for x0 in N g_0 = g_0 and xn in N g_n.

    For n = 0 this is the Lie bracket of g_0.

    Raises:
        SubspaceMembershipError: If xn is not a Moore element
        OracleMismatchError: If the value is not fixed by p_n
    """
    require_moore(g, 0, x0, "x0")
    require_moore(g, n, xn, "xn")
    lifted = s_alpha(g, MultiIndex.of(*range(n)), n).apply(x0)
    value = g.level(n).bracket(lifted, xn)
    if n and moore_projector(g, n).apply(value) != value:
        raise OracleMismatchError(f"The action of N g_0 on N g_{n} leaves N g_{n}")
    return value


def moore_labels(g: SimplicialLieAlgebra, moore: MooreComplex) -> tuple[tuple[str, ...], ...]:
    """Labels of the canonical Moore bases, written in the level labels."""
    return tuple(
        tuple(format_combination(v, g.level(n).labels) for v in moore.space(n).basis)
        for n in range(moore.truncation + 1)
    )


def _mixed_table(g: SimplicialLieAlgebra, moore: MooreComplex, n: int) -> BilinearMap:
    """[x0, xn] on Moore bases, in Moore coordinates."""
    source, target = moore.space(n), moore.space(n)
    lift = s_alpha(g, MultiIndex.of(*range(n)), n)
    level = g.level(n)
    p = moore.projector(n)

    def value(i: int, j: int) -> Vector:
        raw = level.bracket(lift.apply(moore.space(0).basis[i]), source.basis[j])
        if p.apply(raw) != raw:
            raise OracleMismatchError(f"The action of N g_0 on N g_{n} leaves N g_{n}")
        return target.coordinates(raw)

    return BilinearMap.from_function(moore.dims[0], source.dim, target.dim, value)


def _peiffer_bracket(
    g: SimplicialLieAlgebra, moore: MooreComplex, n1: int, n2: int
) -> BilinearMap:
    """
    Bracket L_-n1 x L_-n2 for n1, n2 >= 1.

    [x, y] = sum over P-bar(n1, n2) of eps F(x, y)
             - (-1)^(n1 n2) sum over P-bar(n2, n1) of eps F(y, x)
    """
    n = n1 + n2
    forward = [
        (shuffle_sign(n, p.alpha, p.beta), peiffer_table(g, moore, p))
        for p in enum_Pbar_parts(n1, n2)
    ]
    backward = [
        (shuffle_sign(n, p.alpha, p.beta), peiffer_table(g, moore, p))
        for p in enum_Pbar_parts(n2, n1)
    ]
    twist = _koszul(n1, n2)
    target_dim = moore.dims[n]

    def value(i: int, j: int) -> Vector:
        acc = zero_vector(target_dim)
        for sign, table in forward:
            acc = add_vectors(acc, scale_vector(sign, table.value(i, j)))
        for sign, table in backward:
            acc = sub_vectors(acc, scale_vector(twist * sign, table.value(j, i)))
        return acc

    return BilinearMap.from_function(moore.dims[n1], moore.dims[n2], target_dim, value)


def _swapped(table: BilinearMap) -> BilinearMap:
    """(x, y) -> -table(y, x)."""
    return BilinearMap.from_function(
        table.right_dim,
        table.left_dim,
        table.target_dim,
        lambda i, j: scale_vector(-1, table.value(j, i)),
    )


def _reconcile(
    g: SimplicialLieAlgebra, moore: MooreComplex, brackets: dict[tuple[int, int], BilinearMap]
) -> None:
    """Check every bracket table against the oracle; the oracle is normative."""
    k = moore.length
    disagreeing = [row for row in sign_table(k) if not row.agrees]
    if disagreeing:
        row = disagreeing[0]
        raise OracleMismatchError(
            f"Oracle sign {row.oracle_sign} of pair {row.alpha}, {row.beta} at level {row.n} "
            f"is not the shuffle sign {row.shuffle_sign} after normalization"
        )
    for (n1, n2), table in sorted(brackets.items()):
        diffs: list[OracleDiscrepancy] = []
        _compare_bracket(diffs, (n1, n2), table, oracle_bracket_table(g, moore, n1, n2))
        if diffs:
            first = diffs[0]
            raise OracleMismatchError(
                f"Bracket at degrees {first.degrees} disagrees with the oracle on basis pair "
                f"{first.witness}: built {first.built}, oracle {first.oracle}"
            )
    logger.debug(f"{len(brackets)} bracket table(s) reconciled with the oracle")


def build_dgla(
    g: SimplicialLieAlgebra, moore: MooreComplex | None = None, reconcile: bool = True
) -> DGLA:
    """
    Build the k-term DGLA of g, k the Moore length.

    d_n = delta_n; [x0, y0] is the Lie bracket; [x0, yn] is the action
    [s_(n-1) ... s_0 x0, yn] with [yn, x0] = -[x0, yn]; brackets of
    positive degrees are signed sums of Peiffer pairings. With reconcile,
    every bracket table is checked against the oracle before returning.

    Args:
        g: Simplicial Lie algebra, already validated when moore is given
        moore: Its Moore complex, computed (with validation) when omitted
        reconcile: Compare the brackets with oracle_bracket_table

    Raises:
        InvalidSimplicialError: If g fails validation
        TruncationError: If k >= K, so the brackets into degree k + 1 are not determined
        OracleMismatchError: If reconcile finds a bracket the oracle disagrees with
    """
    if moore is None:
        moore = moore_complex(g)
    k = moore.length
    if k >= g.truncation:
        raise TruncationError(
            f"Moore length {k} needs at least {k + 1} stored levels, got K = {g.truncation}"
        )
    logger.info(f"Building DGLA of length {k} with dims {moore.dims[: k + 1]}")

    brackets: dict[tuple[int, int], BilinearMap] = {}
    algebra = g.level(0).structure
    brackets[(0, 0)] = algebra
    for n in range(1, k + 1):
        mixed = _mixed_table(g, moore, n)
        brackets[(0, n)] = mixed
        brackets[(n, 0)] = _swapped(mixed)
    for n1 in range(1, k + 1):
        for n2 in range(1, k + 1 - n1):
            brackets[(n1, n2)] = _peiffer_bracket(g, moore, n1, n2)
            logger.debug(f"Bracket ({n1}, {n2}) built")
    if reconcile:
        _reconcile(g, moore, brackets)

    return DGLA(
        dims=moore.dims[: k + 1],
        differentials=tuple(moore.delta(n) for n in range(1, k + 1)),
        brackets=brackets,
        labels=moore_labels(g, moore)[: k + 1],
        bases=tuple(moore.space(n).basis for n in range(k + 1)),
    )


def _bracket_or_zero(L: DGLA, n1: int, x: Vector, n2: int, y: Vector) -> Vector:  # noqa: N803
    value = L.bracket(n1, x, n2, y)
    if value is None:
        return ()
    return value


def verify_dgla(L: DGLA) -> VerificationReport:  # noqa: N803
    """
    Check every DGLA axiom on every basis tuple, exactly.

    Laws:
        d_squared: d_(n-1) d_n = 0
        antisymmetry: [x, y] + (-1)^(n1 n2) [y, x] = 0
        jacobi: [x, [y, z]] - [[x, y], z] - (-1)^(n1 n2) [y, [x, z]] = 0, n1 + n2 + n3 <= k
        leibniz: d[x, y] - [dx, y] - (-1)^n1 [x, dy] = 0, n1 + n2 <= k + 1

    Brackets into degrees below -k are zero and d vanishes on L_0.
    """
    k = L.length
    violations: list[Violation] = []
    counts = dict.fromkeys(AXIOMS, 0)

    for n in range(2, k + 1):
        counts["d_squared"] += 1
        composite = L.differentials[n - 2] @ L.differentials[n - 1]
        for j in range(composite.cols):
            column = composite.column(j)
            if not is_zero_vector(column):
                violations.append(
                    Violation("d_squared", (n,), (j,), column, f"d_{n - 1} d_{n} = 0")
                )

    for n1 in range(k + 1):
        for n2 in range(k + 1 - n1):
            twist = _koszul(n1, n2)
            forward, backward = L.brackets[(n1, n2)], L.brackets[(n2, n1)]
            for i, j in product(range(L.dims[n1]), range(L.dims[n2])):
                counts["antisymmetry"] += 1
                residual = add_vectors(
                    forward.value(i, j), scale_vector(twist, backward.value(j, i))
                )
                if not is_zero_vector(residual):
                    violations.append(
                        Violation(
                            "antisymmetry",
                            (n1, n2),
                            (i, j),
                            residual,
                            "[x, y] = -(-1)^(n1 n2) [y, x]",
                        )
                    )

    for n1, n2, n3 in product(range(k + 1), repeat=3):
        if n1 + n2 + n3 > k:
            continue
        twist = _koszul(n1, n2)
        for i, j, m in product(range(L.dims[n1]), range(L.dims[n2]), range(L.dims[n3])):
            counts["jacobi"] += 1
            x = unit_vector(L.dims[n1], i)
            y = unit_vector(L.dims[n2], j)
            z = unit_vector(L.dims[n3], m)
            lhs = _bracket_or_zero(L, n1, x, n2 + n3, _bracket_or_zero(L, n2, y, n3, z))
            first = _bracket_or_zero(L, n1 + n2, _bracket_or_zero(L, n1, x, n2, y), n3, z)
            second = _bracket_or_zero(L, n2, y, n1 + n3, _bracket_or_zero(L, n1, x, n3, z))
            residual = sub_vectors(sub_vectors(lhs, first), scale_vector(twist, second))
            if not is_zero_vector(residual):
                violations.append(
                    Violation(
                        "jacobi",
                        (n1, n2, n3),
                        (i, j, m),
                        residual,
                        "[x, [y, z]] = [[x, y], z] + (-1)^(n1 n2) [y, [x, z]]",
                    )
                )

    for n1 in range(k + 1):
        for n2 in range(k + 2 - n1):
            if n1 > k or n2 > k or (n1 == 0 and n2 == 0):
                continue
            n = n1 + n2
            sign = -1 if n1 % 2 else 1
            for i, j in product(range(L.dims[n1]), range(L.dims[n2])):
                counts["leibniz"] += 1
                x, y = unit_vector(L.dims[n1], i), unit_vector(L.dims[n2], j)
                residual = zero_vector(L.dims[n - 1])
                if n <= k:
                    residual = L.differential(n, L.brackets[(n1, n2)].value(i, j))
                if n1 >= 1:
                    dx_y = L.bracket(n1 - 1, L.differential(n1, x), n2, y)
                    if dx_y is not None:
                        residual = sub_vectors(residual, dx_y)
                if n2 >= 1:
                    x_dy = L.bracket(n1, x, n2 - 1, L.differential(n2, y))
                    if x_dy is not None:
                        residual = sub_vectors(residual, scale_vector(sign, x_dy))
                if not is_zero_vector(residual):
                    violations.append(
                        Violation(
                            "leibniz",
                            (n1, n2),
                            (i, j),
                            residual,
                            "d[x, y] = [dx, y] + (-1)^n1 [x, dy]",
                        )
                    )

    violations.sort(key=lambda v: (v.law, v.levels, v.witness))
    report = VerificationReport(tuple(violations), counts)
    logger.info(
        f"DGLA verification: {len(violations)} violation(s) in {sum(counts.values())} checks"
    )
    return report


def _compare_matrix(
    diffs: list[OracleDiscrepancy], m: int, built: ExactMatrix, oracle: ExactMatrix
) -> None:
    for j in range(built.cols):
        left, right = built.column(j), oracle.column(j)
        if left != right:
            diffs.append(OracleDiscrepancy("differential", (m,), (j,), left, right))


def _compare_bracket(
    diffs: list[OracleDiscrepancy],
    degrees: tuple[int, int],
    built: BilinearMap,
    oracle: BilinearMap,
) -> None:
    for i, j in product(range(built.left_dim), range(built.right_dim)):
        left, right = built.value(i, j), oracle.value(i, j)
        if left != right:
            diffs.append(OracleDiscrepancy("bracket", degrees, (i, j), left, right))


def oracle_compare(
    g: SimplicialLieAlgebra,
    L: DGLA,  # noqa: N803
    moore: MooreComplex | None = None,
    max_level: int | None = None,
) -> VerificationReport:
    """
    Compare L with the normalized oracle tables on every basis tuple.

    Args:
        g: The simplicial Lie algebra L was built from
        L: build_dgla(g)
        moore: Moore complex of g, recomputed when omitted
        max_level: Refuse DGLAs longer than this

    Returns:
        Report with oracle_diffs and the sign table up to level k

    Raises:
        LevelOutOfRangeError: If k exceeds max_level
        DimensionMismatchError: If L does not sit on the Moore complex of g
    """
    k = L.length
    if max_level is not None and k > max_level:
        raise LevelOutOfRangeError(f"Oracle comparison limited to level {max_level}, k = {k}")
    if moore is None:
        moore = moore_complex(g)
    if tuple(L.dims) != moore.dims[: k + 1] or moore.length != k:
        raise DimensionMismatchError(
            f"DGLA dims {L.dims} do not match the Moore complex {moore.dims}"
        )

    diffs: list[OracleDiscrepancy] = []
    counts = {"oracle_bracket": 0, "oracle_differential": 0}
    for m in range(1, k + 1):
        counts["oracle_differential"] += L.dims[m]
        _compare_matrix(diffs, m, L.differentials[m - 1], oracle_differential_table(g, moore, m))
    for n1 in range(k + 1):
        for n2 in range(k + 1 - n1):
            counts["oracle_bracket"] += L.dims[n1] * L.dims[n2]
            _compare_bracket(
                diffs, (n1, n2), L.brackets[(n1, n2)], oracle_bracket_table(g, moore, n1, n2)
            )

    diffs.sort(key=lambda d: (d.quantity, d.degrees, d.witness))
    logger.info(f"Oracle comparison: {len(diffs)} discrepancy(ies) up to level {k}")
    return VerificationReport((), counts, tuple(diffs), sign_table(k))
