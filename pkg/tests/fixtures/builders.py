"""
Builders for presentations and simplicial Lie algebras used across tests.

Every builder returns exact data; random families take a seeded
random.Random so failures are reproducible.
"""

import random
from pathlib import Path

from simplicial_dgla.models.lie_algebra import LieAlgebra
from simplicial_dgla.models.linear import BilinearMap, ExactMatrix
from simplicial_dgla.models.presentations import (
    ChainComplexSpec,
    CrossedModuleSpec,
    ModuleComplexSpec,
    TwoCrossedModuleSpec,
)
from simplicial_dgla.models.simplicial import SimplicialLieAlgebra

DOCUMENTS = Path(__file__).parent / "documents"


# ---------------------------------------------------------------- Lie algebras


def two_dim_algebra() -> LieAlgebra:
    """[E, F] = F."""
    return LieAlgebra.from_structure_constants(
        [[[0, 0], [0, 1]], [[0, -1], [0, 0]]], labels=("E", "F")
    )


def sl2() -> LieAlgebra:
    """Basis H, E, F with [H, E] = 2E, [H, F] = -2F, [E, F] = H."""
    return LieAlgebra.from_structure_constants(
        [
            [[0, 0, 0], [0, 2, 0], [0, 0, -2]],
            [[0, -2, 0], [0, 0, 0], [1, 0, 0]],
            [[0, 0, 2], [-1, 0, 0], [0, 0, 0]],
        ],
        labels=("H", "E", "F"),
    )


def heisenberg() -> LieAlgebra:
    """[x, y] = z."""
    return LieAlgebra.from_structure_constants(
        [
            [[0, 0, 0], [0, 0, 1], [0, 0, 0]],
            [[0, 0, -1], [0, 0, 0], [0, 0, 0]],
            [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
        ],
        labels=("x", "y", "z"),
    )


def sample_algebras() -> list[LieAlgebra]:
    """Small Lie algebras of dimension <= 3, abelian and not."""
    return [
        LieAlgebra.abelian(1),
        LieAlgebra.abelian(2),
        two_dim_algebra(),
        sl2(),
        heisenberg(),
    ]


def adjoint(algebra: LieAlgebra) -> BilinearMap:
    """The adjoint action x . y = [x, y]."""
    return algebra.structure


# ------------------------------------------------------------- crossed modules


def fixture_crossed_module() -> CrossedModuleSpec:
    """d = {E, F} with [E, F] = F acting on h = {X} by E . X = X, delta1 X = F."""
    return CrossedModuleSpec(
        d_algebra=two_dim_algebra(),
        h_algebra=LieAlgebra.abelian(1, ("X",)),
        delta1=ExactMatrix.from_rows([[0], [1]]),
        action=BilinearMap.from_array([[[1]], [[0]]], 2, 1, 1),
    )


def identity_crossed_module(algebra: LieAlgebra) -> CrossedModuleSpec:
    """delta1 = id on a Lie algebra acting on itself by the adjoint action."""
    return CrossedModuleSpec(
        d_algebra=algebra,
        h_algebra=algebra,
        delta1=ExactMatrix.identity(algebra.dim),
        action=adjoint(algebra),
    )


def module_crossed_module(algebra: LieAlgebra) -> CrossedModuleSpec:
    """delta1 = 0 into a Lie algebra acting on an abelian copy of itself."""
    return CrossedModuleSpec(
        d_algebra=algebra,
        h_algebra=LieAlgebra.abelian(algebra.dim),
        delta1=ExactMatrix.zeros(algebra.dim, algebra.dim),
        action=adjoint(algebra),
    )


def _random_matrix(rng: random.Random, rows: int, cols: int) -> ExactMatrix:
    return ExactMatrix.from_rows(
        [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)], cols=cols
    )


def abelian_crossed_module(rng: random.Random, d_dim: int, h_dim: int) -> CrossedModuleSpec:
    """Abelian d and h, trivial action, random delta1."""
    return CrossedModuleSpec(
        d_algebra=LieAlgebra.abelian(d_dim),
        h_algebra=LieAlgebra.abelian(h_dim),
        delta1=_random_matrix(rng, d_dim, h_dim),
        action=BilinearMap.zero(d_dim, h_dim, h_dim),
    )


def unitriangular(rng: random.Random, dim: int) -> ExactMatrix:
    """Random integer unitriangular matrix (invertible over the integers)."""
    return ExactMatrix.from_rows(
        [
            [1 if i == j else (rng.randint(-2, 2) if j > i else 0) for j in range(dim)]
            for i in range(dim)
        ],
        cols=dim,
    )


def transport_algebra(algebra: LieAlgebra, change: ExactMatrix) -> LieAlgebra:
    """The same Lie algebra in the basis given by the columns of change."""
    structure = algebra.structure.transformed(change, change, change.inverse())
    return LieAlgebra(algebra.dim, structure)


def transported_crossed_module(spec: CrossedModuleSpec, rng: random.Random) -> CrossedModuleSpec:
    """An isomorphic crossed module written in random unitriangular bases."""
    p = unitriangular(rng, spec.d_algebra.dim)
    q = unitriangular(rng, spec.h_algebra.dim)
    return CrossedModuleSpec(
        d_algebra=transport_algebra(spec.d_algebra, p),
        h_algebra=transport_algebra(spec.h_algebra, q),
        delta1=p.inverse() @ spec.delta1 @ q,
        action=spec.action.transformed(p, q, q.inverse()),
    )


def crossed_module_family() -> list[CrossedModuleSpec]:
    """Crossed modules with component dimensions <= 3 for property checks."""
    rng = random.Random(20240611)
    family = [fixture_crossed_module()]
    for algebra in sample_algebras():
        family.append(identity_crossed_module(algebra))
        family.append(module_crossed_module(algebra))
    for d_dim, h_dim in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        family.append(abelian_crossed_module(rng, d_dim, h_dim))
    family.append(transported_crossed_module(fixture_crossed_module(), rng))
    family.append(transported_crossed_module(identity_crossed_module(two_dim_algebra()), rng))
    return family


# ----------------------------------------------------------- 2-crossed modules


def weighted_two_crossed_module(weight: int = 1) -> TwoCrossedModuleSpec:
    """
    k = {E} acting on d = {D} with weight w and on h = {X} with weight 2w.

    Both deltas vanish and {D, D} = X. With w = 0 this is the bare Peiffer
    fixture.
    """
    return TwoCrossedModuleSpec(
        k_algebra=LieAlgebra.abelian(1, ("E",)),
        d_algebra=LieAlgebra.abelian(1, ("D",)),
        h_algebra=LieAlgebra.abelian(1, ("X",)),
        delta2=ExactMatrix.zeros(1, 1),
        delta1=ExactMatrix.zeros(1, 1),
        action_on_d=BilinearMap.from_array([[[weight]]], 1, 1, 1),
        action_on_h=BilinearMap.from_array([[[2 * weight]]], 1, 1, 1),
        peiffer_bracket=BilinearMap.from_array([[[1]]], 1, 1, 1),
    )


def abelian_two_crossed_module(
    rng: random.Random, k_dim: int, split: tuple[int, int], h_dim: int
) -> TwoCrossedModuleSpec:
    """
    Abelian 2-crossed module with random deltas and delta1 delta2 = 0.

    d = A + B with dims split; delta2 lands in A and delta1 only reads B.
    """
    a, b = split
    d_dim = a + b
    delta2 = ExactMatrix.vstack(_random_matrix(rng, a, h_dim), ExactMatrix.zeros(b, h_dim))
    delta1 = ExactMatrix.hstack(ExactMatrix.zeros(k_dim, a), _random_matrix(rng, k_dim, b))
    return TwoCrossedModuleSpec(
        k_algebra=LieAlgebra.abelian(k_dim),
        d_algebra=LieAlgebra.abelian(d_dim),
        h_algebra=LieAlgebra.abelian(h_dim),
        delta2=delta2,
        delta1=delta1,
        action_on_d=BilinearMap.zero(k_dim, d_dim, d_dim),
        action_on_h=BilinearMap.zero(k_dim, h_dim, h_dim),
        peiffer_bracket=BilinearMap.zero(d_dim, d_dim, h_dim),
    )


def crossed_module_as_two_crossed(spec: CrossedModuleSpec) -> TwoCrossedModuleSpec:
    """A crossed module h -> d seen as the 2-crossed module 0 -> h -> d."""
    d, h = spec.d_algebra, spec.h_algebra
    return TwoCrossedModuleSpec(
        k_algebra=d,
        d_algebra=h,
        h_algebra=LieAlgebra.abelian(0),
        delta2=ExactMatrix.zeros(h.dim, 0),
        delta1=spec.delta1,
        action_on_d=spec.action,
        action_on_h=BilinearMap.zero(d.dim, 0, 0),
        peiffer_bracket=BilinearMap.zero(h.dim, h.dim, 0),
    )


def bracket_two_crossed_module(algebra: LieAlgebra) -> TwoCrossedModuleSpec:
    """h = d = algebra with delta2 = id, {x, y} = [x, y] and a trivial k = {E}."""
    dim = algebra.dim
    return TwoCrossedModuleSpec(
        k_algebra=LieAlgebra.abelian(1, ("E",)),
        d_algebra=algebra,
        h_algebra=algebra,
        delta2=ExactMatrix.identity(dim),
        delta1=ExactMatrix.zeros(1, dim),
        action_on_d=BilinearMap.zero(1, dim, dim),
        action_on_h=BilinearMap.zero(1, dim, dim),
        peiffer_bracket=algebra.structure,
    )


def two_crossed_module_family() -> list[TwoCrossedModuleSpec]:
    """2-crossed modules with component dimensions <= 4 for property checks."""
    rng = random.Random(7)
    family = [weighted_two_crossed_module(0), weighted_two_crossed_module(1)]
    family.append(weighted_two_crossed_module(-2))
    for k_dim, split, h_dim in [(1, (1, 1), 1), (2, (1, 1), 2), (1, (2, 1), 1)]:
        family.append(abelian_two_crossed_module(rng, k_dim, split, h_dim))
    family.append(crossed_module_as_two_crossed(fixture_crossed_module()))
    family.append(bracket_two_crossed_module(two_dim_algebra()))
    family.append(bracket_two_crossed_module(heisenberg()))
    return family


# ------------------------------------------------------------- chain complexes


def chain_complex_of_length_three() -> ChainComplexSpec:
    """N_0 <- N_1 <- N_2 <- N_3 with dims (1, 2, 2, 1) and delta delta = 0."""
    return ChainComplexSpec(
        dims=(1, 2, 2, 1),
        differentials=(
            ExactMatrix.from_rows([[1, 0]]),
            ExactMatrix.from_rows([[0, 0], [1, 0]]),
            ExactMatrix.from_rows([[0], [1]]),
        ),
    )


def weight_module_complex(length: int = 3) -> ModuleComplexSpec:
    """
    {E, F} with [E, F] = F acting on one-dimensional modules by E . v = v.

    delta_2 is the identity; higher differentials vanish.
    """
    rep = BilinearMap.from_array([[[1]], [[0]]], 2, 1, 1)
    differentials = [ExactMatrix.identity(1)] + [ExactMatrix.zeros(1, 1)] * (length - 2)
    return ModuleComplexSpec(
        algebra=two_dim_algebra(),
        representations=(rep,) * length,
        differentials=tuple(differentials[: max(length - 1, 0)]),
    )


def shifted_module_complex() -> ModuleComplexSpec:
    """
    {E, F} acting by E . v = 2v on N_1 and E . v = v on N_2, N_3.

    delta_2 vanishes and delta_3 is the identity.
    """
    return ModuleComplexSpec(
        algebra=two_dim_algebra(),
        representations=(
            BilinearMap.from_array([[[2]], [[0]]], 2, 1, 1),
            BilinearMap.from_array([[[1]], [[0]]], 2, 1, 1),
            BilinearMap.from_array([[[1]], [[0]]], 2, 1, 1),
        ),
        differentials=(ExactMatrix.zeros(1, 1), ExactMatrix.identity(1)),
    )


def constant_simplicial(algebra: LieAlgebra, truncation: int = 2) -> SimplicialLieAlgebra:
    """Every level is the algebra and every face and degeneracy is the identity."""
    eye = ExactMatrix.identity(algebra.dim)
    return SimplicialLieAlgebra(
        levels=(algebra,) * (truncation + 1),
        faces=((),) + tuple((eye,) * (n + 1) for n in range(1, truncation + 1)),
        degeneracies=tuple((eye,) * (n + 1) for n in range(truncation)),
    )
