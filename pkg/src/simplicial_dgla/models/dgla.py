"""
Truncated differential graded Lie algebra L_0 + L_-1 + ... + L_-k.
"""

from collections.abc import Mapping
from dataclasses import dataclass, field

from simplicial_dgla.models.exceptions import DimensionMismatchError, LevelOutOfRangeError
from simplicial_dgla.models.linear import BilinearMap, ExactMatrix, Vector, zero_vector


@dataclass(frozen=True)
class DGLA:
    """
    Differential graded Lie algebra with homological grading |x| = -n on L_-n.

    Attributes:
        dims: dims[n] = dim L_-n for n = 0..k
        differentials: differentials[n - 1] is d_n: L_-n -> L_-(n-1)
        brackets: (n1, n2) -> table L_-n1 x L_-n2 -> L_-(n1+n2), for every n1 + n2 <= k
        labels: Optional basis labels per degree
        bases: Optional level coordinates of each basis vector (Moore complex embedding)
    """

    dims: tuple[int, ...]
    differentials: tuple[ExactMatrix, ...]
    brackets: Mapping[tuple[int, int], BilinearMap]
    labels: tuple[tuple[str, ...], ...] = ()
    bases: tuple[tuple[Vector, ...], ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        """Validate shapes and completeness of the bracket tables."""
        if not self.dims:
            raise ValueError("A DGLA needs at least L_0")
        k = self.length
        if len(self.differentials) != k:
            raise DimensionMismatchError(f"Length {k} needs {k} differentials")
        for n, d in enumerate(self.differentials, start=1):
            if d.shape != (self.dims[n - 1], self.dims[n]):
                raise DimensionMismatchError(
                    f"d_{n} has shape {d.shape}, expected {(self.dims[n - 1], self.dims[n])}"
                )
        expected = {(a, b) for a in range(k + 1) for b in range(k + 1 - a)}
        if set(self.brackets) != expected:
            missing = sorted(expected - set(self.brackets))
            extra = sorted(set(self.brackets) - expected)
            raise DimensionMismatchError(
                f"Bracket tables do not match degrees: missing {missing}, unexpected {extra}"
            )
        for (a, b), table in self.brackets.items():
            shape = (table.left_dim, table.right_dim, table.target_dim)
            wanted = (self.dims[a], self.dims[b], self.dims[a + b])
            if shape != wanted:
                raise DimensionMismatchError(
                    f"Bracket ({a}, {b}) has shape {shape}, expected {wanted}"
                )
        if self.labels and [len(ls) for ls in self.labels] != list(self.dims):
            raise DimensionMismatchError("Basis labels do not match the dimensions")

    @property
    def length(self) -> int:
        """k: the lowest degree is -k."""
        return len(self.dims) - 1

    def label(self, n: int, i: int) -> str:
        """Display name of the i-th basis vector of L_-n."""
        if self.labels:
            return self.labels[n][i]
        return f"x{n}_{i}"

    def differential(self, n: int, x: Vector) -> Vector:
        """d x for x in L_-n; zero on L_0."""
        self._check_degree(n)
        if n == 0:
            return ()
        return self.differentials[n - 1].apply(x)

    def bracket(self, n1: int, x: Vector, n2: int, y: Vector) -> Vector | None:
        """
        [x, y] for x in L_-n1, y in L_-n2.

        Returns:
            The bracket, or None when n1 + n2 > k (the bracket vanishes there)
        """
        self._check_degree(n1)
        self._check_degree(n2)
        if n1 + n2 > self.length:
            return None
        return self.brackets[(n1, n2)].apply(x, y)

    def zero(self, n: int) -> Vector:
        """Zero vector of L_-n."""
        return zero_vector(self.dims[n])

    def _check_degree(self, n: int) -> None:
        if not 0 <= n <= self.length:
            raise LevelOutOfRangeError(f"Degree -{n} outside 0..-{self.length}")
