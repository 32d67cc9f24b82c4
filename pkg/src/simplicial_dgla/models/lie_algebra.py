"""
Finite-dimensional Lie algebras over the rationals.

A LieAlgebra is given by structure constants c[i][j][k] with
[e_i, e_j] = sum_k c[i][j][k] e_k. Construction rejects any table that
fails antisymmetry or the Jacobi identity, exactly.
"""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from itertools import combinations

from sympy import S

from simplicial_dgla.models.exceptions import DimensionMismatchError, LieAlgebraError
from simplicial_dgla.models.linear import (
    BilinearMap,
    ExactMatrix,
    RationalLike,
    Vector,
    add_vectors,
    is_zero_vector,
    sub_vectors,
    unit_vector,
    zero_vector,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LieAlgebra:
    """
    Lie algebra with a fixed ordered basis.

    Attributes:
        dim: Dimension
        structure: Bracket as a bilinear map dim x dim -> dim
        labels: Display names of the basis vectors (defaults to e0, e1, ...)

    Example:
        >>> # the 2-dimensional non-abelian algebra [E, F] = F
        >>> algebra = LieAlgebra.from_structure_constants(
        ...     [[[0, 0], [0, 1]], [[0, -1], [0, 0]]], labels=("E", "F")
        ... )
        >>> algebra.bracket((1, 0), (0, 1))
        (0, 1)
    """

    dim: int
    structure: BilinearMap
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        """Validate shape, antisymmetry and the Jacobi identity."""
        s = self.structure
        if (s.left_dim, s.right_dim, s.target_dim) != (self.dim, self.dim, self.dim):
            raise DimensionMismatchError(
                f"Structure constants of shape {s.left_dim}x{s.right_dim}x{s.target_dim} "
                f"for a {self.dim}-dimensional algebra"
            )
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"e{i}" for i in range(self.dim)))
        elif len(self.labels) != self.dim:
            raise DimensionMismatchError(
                f"{len(self.labels)} basis labels for a {self.dim}-dimensional algebra"
            )

        for i in range(self.dim):
            if not is_zero_vector(s.value(i, i)):
                raise LieAlgebraError(f"Antisymmetry fails: [e{i}, e{i}] != 0")
            for j in range(i + 1, self.dim):
                if add_vectors(s.value(i, j), s.value(j, i)) != zero_vector(self.dim):
                    raise LieAlgebraError(f"Antisymmetry fails on basis pair ({i}, {j})")

        for i, j, k in combinations(range(self.dim), 3):
            cyclic = add_vectors(
                add_vectors(
                    self._bracket_with_basis(s.value(i, j), k),
                    self._bracket_with_basis(s.value(j, k), i),
                ),
                self._bracket_with_basis(s.value(k, i), j),
            )
            if not is_zero_vector(cyclic):
                raise LieAlgebraError(f"Jacobi identity fails on basis triple ({i}, {j}, {k})")

    def _bracket_with_basis(self, x: Vector, k: int) -> Vector:
        """[x, e_k] using only the k-th column of the table."""
        acc = [S.Zero] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for t, v in enumerate(self.structure.value(i, k)):
                if v != 0:
                    acc[t] += xi * v
        return tuple(acc)

    @classmethod
    def abelian(cls, dim: int, labels: Sequence[str] = ()) -> "LieAlgebra":
        """Abelian Lie algebra of the given dimension."""
        return cls(dim, BilinearMap.zero(dim, dim, dim), tuple(labels))

    @classmethod
    def from_structure_constants(
        cls,
        constants: Sequence[Sequence[Sequence[RationalLike]]],
        labels: Sequence[str] = (),
    ) -> "LieAlgebra":
        """
        Build from a dense rank-3 array c[i][j][k].

        Raises:
            DimensionMismatchError: If the array is not cubical
            LieAlgebraError: If the constants fail antisymmetry or Jacobi
        """
        dim = len(constants)
        return cls(dim, BilinearMap.from_array(constants, dim, dim, dim), tuple(labels))

    @classmethod
    def from_basis_bracket(
        cls,
        dim: int,
        bracket: Callable[[int, int], Vector],
        labels: Sequence[str] = (),
    ) -> "LieAlgebra":
        """
        Build from a function giving [e_i, e_j] for i < j.

        The diagonal is zero and the lower triangle is filled by antisymmetry.
        """
        upper = {(i, j): tuple(bracket(i, j)) for i, j in combinations(range(dim), 2)}

        def value(i: int, j: int) -> Vector:
            if i == j:
                return zero_vector(dim)
            if i < j:
                return upper[(i, j)]
            return tuple(-v for v in upper[(j, i)])

        return cls(dim, BilinearMap.from_function(dim, dim, dim, value), tuple(labels))

    @property
    def is_abelian(self) -> bool:
        """True when every bracket vanishes."""
        return self.structure.is_zero()

    def bracket(self, x: Vector, y: Vector) -> Vector:
        """
        Lie bracket of two coordinate vectors.

        Raises:
            DimensionMismatchError: If x or y has the wrong length
        """
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatchError(
                f"Cannot bracket vectors of lengths ({len(x)}, {len(y)}) "
                f"in a {self.dim}-dimensional Lie algebra"
            )
        return self.structure.apply(x, y)

    def basis_vector(self, i: int) -> Vector:
        """The i-th basis vector."""
        return unit_vector(self.dim, i)

    def adjoint(self, x: Vector) -> ExactMatrix:
        """Matrix of ad_x = [x, -]."""
        return ExactMatrix.from_columns(
            [self.bracket(x, self.basis_vector(j)) for j in range(self.dim)], self.dim
        )


def bracket(g: LieAlgebra, x: Vector, y: Vector) -> Vector:
    """Evaluate [x, y] in g."""
    return g.bracket(x, y)


def lie_morphism_defects(
    m: ExactMatrix, source: LieAlgebra, target: LieAlgebra
) -> list[tuple[int, int, Vector]]:
    """
    Basis pairs on which a linear map fails to preserve brackets.

    Returns:
        List of (i, j, m[e_i, e_j] - [m e_i, m e_j]) with non-zero residual, i < j

    Raises:
        DimensionMismatchError: If m does not map source coordinates to target coordinates
    """
    if m.cols != source.dim or m.rows != target.dim:
        raise DimensionMismatchError(
            f"A {m.rows}x{m.cols} matrix cannot map a {source.dim}-dimensional algebra "
            f"to a {target.dim}-dimensional one"
        )
    images = [m.column(j) for j in range(source.dim)]
    defects = []
    for i, j in combinations(range(source.dim), 2):
        residual = sub_vectors(
            m.apply(source.structure.value(i, j)), target.bracket(images[i], images[j])
        )
        if not is_zero_vector(residual):
            defects.append((i, j, residual))
    return defects


def is_lie_morphism(m: ExactMatrix, source: LieAlgebra, target: LieAlgebra) -> bool:
    """True iff m[x, y] = [m x, m y] on all basis pairs."""
    return not lie_morphism_defects(m, source, target)
