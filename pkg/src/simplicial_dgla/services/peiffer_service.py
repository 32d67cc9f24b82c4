"""
Peiffer pairings F_{alpha,beta}(x, y) = p_n [s_alpha x, s_beta y].
"""

import logging

from simplicial_dgla.models.exceptions import OracleMismatchError, SubspaceMembershipError
from simplicial_dgla.models.linear import (
    BilinearMap,
    ExactMatrix,
    Vector,
    add_vectors,
    is_zero_vector,
)
from simplicial_dgla.models.multi_index import MultiIndex, PeifferPair
from simplicial_dgla.models.simplicial import MooreComplex, SimplicialLieAlgebra
from simplicial_dgla.services.combinatorics import enum_Pbar
from simplicial_dgla.services.simplicial_service import moore_projector, s_alpha

logger = logging.getLogger(__name__)


def in_moore_subspace(g: SimplicialLieAlgebra, m: int, x: Vector) -> bool:
    """True iff d_i x = 0 for every i >= 1."""
    return all(is_zero_vector(g.face(m, i).apply(x)) for i in range(1, m + 1))


def require_moore(g: SimplicialLieAlgebra, m: int, x: Vector, name: str = "argument") -> None:
    """
    Raises:
        SubspaceMembershipError: If x is not in N g_m
    """
    if len(x) != g.level(m).dim or not in_moore_subspace(g, m, x):
        raise SubspaceMembershipError(f"{name} is not an element of N g_{m}")


def peiffer(
    g: SimplicialLieAlgebra,
    pair: PeifferPair,
    x: Vector,
    y: Vector,
    projector: ExactMatrix | None = None,
) -> Vector:
    """
    Evaluate F_{alpha,beta}(x, y) in g_n.

    Args:
        g: Simplicial Lie algebra
        pair: (alpha, beta) at level n
        x: Element of N g_{n - #alpha}, in level coordinates
        y: Element of N g_{n - #beta}, in level coordinates
        projector: p_n, if already computed

    Returns:
        Element of N g_n in level coordinates

    Raises:
        SubspaceMembershipError: If x or y is not a Moore element
        OracleMismatchError: If the projected value is not fixed by p_n
    """
    n = pair.n
    n1, n2 = pair.degrees
    require_moore(g, n1, x, "first argument")
    require_moore(g, n2, y, "second argument")
    p = projector if projector is not None else moore_projector(g, n)
    left = s_alpha(g, pair.alpha, n).apply(x)
    right = s_alpha(g, pair.beta, n).apply(y)
    value = p.apply(g.level(n).bracket(left, right))
    if p.apply(value) != value:
        raise OracleMismatchError(f"F_{pair} is not fixed by p_{n}")
    return value


def peiffer_table(g: SimplicialLieAlgebra, moore: MooreComplex, pair: PeifferPair) -> BilinearMap:
    """F_{alpha,beta} as a table N g_{n1} x N g_{n2} -> N g_n in Moore coordinates."""
    n = pair.n
    n1, n2 = pair.degrees
    left, right, target = moore.space(n1), moore.space(n2), moore.space(n)
    p = moore.projector(n)
    embed_left = s_alpha(g, pair.alpha, n)
    embed_right = s_alpha(g, pair.beta, n)
    level = g.level(n)

    def value(i: int, j: int) -> Vector:
        raw = level.bracket(embed_left.apply(left.basis[i]), embed_right.apply(right.basis[j]))
        return target.coordinates(p.apply(raw))

    return BilinearMap.from_function(left.dim, right.dim, target.dim, value)


def peiffer_tables(
    g: SimplicialLieAlgebra, moore: MooreComplex, n: int
) -> dict[PeifferPair, BilinearMap]:
    """Every F_{alpha,beta} with (alpha, beta) in P-bar(n), in enum_Pbar order."""
    tables = {pair: peiffer_table(g, moore, pair) for pair in enum_Pbar(n)}
    logger.debug(f"Computed {len(tables)} Peiffer table(s) at level {n}")
    return tables


def symmetric_peiffer_table(g: SimplicialLieAlgebra, moore: MooreComplex) -> BilinearMap:
    """
    F(x, y) + F(y, x) on N g_1 for the unique pair ({0}, {1}) of P-bar(2).

    For a 2-crossed module this is the symmetrized Peiffer bracket
    {y, x} + {x, y}.
    """
    table = peiffer_table(g, moore, PeifferPair(2, MultiIndex.of(0), MultiIndex.of(1)))
    return BilinearMap.from_function(
        table.left_dim,
        table.right_dim,
        table.target_dim,
        lambda i, j: add_vectors(table.value(i, j), table.value(j, i)),
    )
