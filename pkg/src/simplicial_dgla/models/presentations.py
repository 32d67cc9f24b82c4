"""
Algebraic presentations from which simplicial Lie algebras are generated.

Crossed modules (Moore length 1), 2-crossed modules (length 2), plain
chain complexes and chain complexes of modules over a Lie algebra.
"""

from dataclasses import dataclass

from simplicial_dgla.models.exceptions import DimensionMismatchError
from simplicial_dgla.models.lie_algebra import LieAlgebra
from simplicial_dgla.models.linear import BilinearMap, ExactMatrix


def _check_matrix(name: str, m: ExactMatrix, rows: int, cols: int) -> None:
    if m.shape != (rows, cols):
        raise DimensionMismatchError(f"{name} has shape {m.shape}, expected {(rows, cols)}")


def _check_bilinear(name: str, b: BilinearMap, left: int, right: int, target: int) -> None:
    shape = (b.left_dim, b.right_dim, b.target_dim)
    if shape != (left, right, target):
        raise DimensionMismatchError(f"{name} has shape {shape}, expected {(left, right, target)}")


@dataclass(frozen=True)
class CrossedModuleSpec:
    """
    Infinitesimal crossed module delta1: h -> d with d acting on h.

    Attributes:
        d_algebra: The Lie algebra d (Moore level 0)
        h_algebra: The Lie algebra h (Moore level 1)
        delta1: Matrix of delta1: h -> d
        action: action(x, y) = x . y for x in d, y in h
    """

    d_algebra: LieAlgebra
    h_algebra: LieAlgebra
    delta1: ExactMatrix
    action: BilinearMap

    def __post_init__(self) -> None:
        """Validate shapes."""
        d, h = self.d_algebra.dim, self.h_algebra.dim
        _check_matrix("delta1", self.delta1, d, h)
        _check_bilinear("action", self.action, d, h, h)

    @property
    def moore_dims(self) -> tuple[int, int]:
        """(dim d, dim h)."""
        return (self.d_algebra.dim, self.h_algebra.dim)


@dataclass(frozen=True)
class TwoCrossedModuleSpec:
    """
    Infinitesimal 2-crossed module h -> d -> k.

    Attributes:
        k_algebra: Moore level 0
        d_algebra: Moore level 1
        h_algebra: Moore level 2
        delta2: Matrix of delta2: h -> d
        delta1: Matrix of delta1: d -> k
        action_on_d: (x, y) -> x . y for x in k, y in d
        action_on_h: (x, y) -> x . y for x in k, y in h
        peiffer_bracket: {-, -}: d x d -> h
    """

    k_algebra: LieAlgebra
    d_algebra: LieAlgebra
    h_algebra: LieAlgebra
    delta2: ExactMatrix
    delta1: ExactMatrix
    action_on_d: BilinearMap
    action_on_h: BilinearMap
    peiffer_bracket: BilinearMap

    def __post_init__(self) -> None:
        """Validate shapes."""
        k, d, h = self.k_algebra.dim, self.d_algebra.dim, self.h_algebra.dim
        _check_matrix("delta2", self.delta2, d, h)
        _check_matrix("delta1", self.delta1, k, d)
        _check_bilinear("action_on_d", self.action_on_d, k, d, d)
        _check_bilinear("action_on_h", self.action_on_h, k, h, h)
        _check_bilinear("peiffer_bracket", self.peiffer_bracket, d, d, h)

    @property
    def moore_dims(self) -> tuple[int, int, int]:
        """(dim k, dim d, dim h)."""
        return (self.k_algebra.dim, self.d_algebra.dim, self.h_algebra.dim)


@dataclass(frozen=True)
class ChainComplexSpec:
    """
    Chain complex N_0 <- N_1 <- ... <- N_k of vector spaces.

    Attributes:
        dims: (dim N_0, ..., dim N_k)
        differentials: differentials[n - 1] is delta_n: N_n -> N_{n-1}
    """

    dims: tuple[int, ...]
    differentials: tuple[ExactMatrix, ...]

    def __post_init__(self) -> None:
        """Validate shapes and delta delta = 0."""
        if not self.dims:
            raise ValueError("A chain complex needs at least N_0")
        if len(self.differentials) != len(self.dims) - 1:
            raise DimensionMismatchError(
                f"{len(self.dims)} spaces need {len(self.dims) - 1} differentials"
            )
        for n, delta in enumerate(self.differentials, start=1):
            _check_matrix(f"delta_{n}", delta, self.dims[n - 1], self.dims[n])
        for n in range(2, len(self.dims)):
            composite = self.differentials[n - 2] @ self.differentials[n - 1]
            if not composite.is_zero():
                raise ValueError(f"delta_{n - 1} delta_{n} is not zero")

    @property
    def length(self) -> int:
        """Largest n with N_n != 0."""
        return max((n for n, d in enumerate(self.dims) if d), default=0)


@dataclass(frozen=True)
class ModuleComplexSpec:
    """
    Lie algebra g acting on a chain complex of g-modules N_1 <- ... <- N_k.

    The complex has delta_1 = 0, so g is N_0 and the only non-trivial
    brackets of the generated simplicial Lie algebra are those of g and
    the action of g.

    Attributes:
        algebra: The Lie algebra g
        representations: representations[m - 1](x, v) = x . v on N_m
        differentials: differentials[n - 2] is delta_n: N_n -> N_{n-1}, n >= 2
    """

    algebra: LieAlgebra
    representations: tuple[BilinearMap, ...]
    differentials: tuple[ExactMatrix, ...]

    def __post_init__(self) -> None:
        """Validate shapes and delta delta = 0 (equivariance is a validator concern)."""
        g = self.algebra.dim
        module_dims = self.module_dims
        for m, rep in enumerate(self.representations, start=1):
            _check_bilinear(f"representation on N_{m}", rep, g, rep.right_dim, rep.right_dim)
        expected = max(len(module_dims) - 1, 0)
        if len(self.differentials) != expected:
            raise DimensionMismatchError(
                f"{len(module_dims)} modules need {expected} differentials"
            )
        for n, delta in enumerate(self.differentials, start=2):
            _check_matrix(f"delta_{n}", delta, module_dims[n - 2], module_dims[n - 1])
        for n in range(3, len(module_dims) + 1):
            composite = self.differentials[n - 3] @ self.differentials[n - 2]
            if not composite.is_zero():
                raise ValueError(f"delta_{n - 1} delta_{n} is not zero")

    @property
    def module_dims(self) -> tuple[int, ...]:
        """(dim N_1, ..., dim N_k)."""
        return tuple(rep.right_dim for rep in self.representations)

    @property
    def moore_dims(self) -> tuple[int, ...]:
        """(dim g, dim N_1, ..., dim N_k)."""
        return (self.algebra.dim, *self.module_dims)
