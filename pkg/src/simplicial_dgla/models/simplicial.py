"""
Truncated simplicial Lie algebras and their Moore complexes.
"""

from dataclasses import dataclass

from simplicial_dgla.models.exceptions import DimensionMismatchError, LevelOutOfRangeError
from simplicial_dgla.models.lie_algebra import LieAlgebra
from simplicial_dgla.models.linear import ExactMatrix, Subspace


@dataclass(frozen=True)
class SimplicialLieAlgebra:
    """
    Levels 0..K of a simplicial Lie algebra with face and degeneracy matrices.

    Shapes are checked on construction; the simplicial identities and the
    Lie-morphism property are checked by validate_simplicial, which reports
    instead of raising.

    Attributes:
        levels: Lie algebras g_0..g_K
        faces: faces[n][i] is d_i: g_n -> g_{n-1}; faces[0] is empty
        degeneracies: degeneracies[n][i] is s_i: g_n -> g_{n+1}, n = 0..K-1
    """

    levels: tuple[LieAlgebra, ...]
    faces: tuple[tuple[ExactMatrix, ...], ...]
    degeneracies: tuple[tuple[ExactMatrix, ...], ...]

    def __post_init__(self) -> None:
        """Validate counts and shapes of all structure maps."""
        if not self.levels:
            raise ValueError("A simplicial Lie algebra needs at least level 0")
        top = len(self.levels) - 1

        if len(self.faces) != top + 1 or self.faces[0]:
            raise DimensionMismatchError(
                f"Expected face lists for levels 0..{top} with none at level 0"
            )
        if len(self.degeneracies) != top:
            raise DimensionMismatchError(f"Expected degeneracy lists for levels 0..{top - 1}")

        for n in range(1, top + 1):
            if len(self.faces[n]) != n + 1:
                raise DimensionMismatchError(
                    f"Level {n} needs {n + 1} face maps, got {len(self.faces[n])}"
                )
            for i, face in enumerate(self.faces[n]):
                expected = (self.levels[n - 1].dim, self.levels[n].dim)
                if face.shape != expected:
                    raise DimensionMismatchError(
                        f"Face d_{i} at level {n} has shape {face.shape}, expected {expected}"
                    )
        for n in range(top):
            if len(self.degeneracies[n]) != n + 1:
                raise DimensionMismatchError(
                    f"Level {n} needs {n + 1} degeneracy maps, got {len(self.degeneracies[n])}"
                )
            for i, degeneracy in enumerate(self.degeneracies[n]):
                expected = (self.levels[n + 1].dim, self.levels[n].dim)
                if degeneracy.shape != expected:
                    raise DimensionMismatchError(
                        f"Degeneracy s_{i} at level {n} has shape {degeneracy.shape}, "
                        f"expected {expected}"
                    )

    @property
    def truncation(self) -> int:
        """Top stored level K."""
        return len(self.levels) - 1

    @property
    def dims(self) -> tuple[int, ...]:
        """Dimensions of g_0..g_K."""
        return tuple(level.dim for level in self.levels)

    def level(self, n: int) -> LieAlgebra:
        """The Lie algebra g_n."""
        self._check_level(n, 0, self.truncation)
        return self.levels[n]

    def face(self, n: int, i: int) -> ExactMatrix:
        """d_i: g_n -> g_{n-1}."""
        self._check_level(n, 1, self.truncation)
        if not 0 <= i <= n:
            raise LevelOutOfRangeError(f"Face index {i} out of range at level {n}")
        return self.faces[n][i]

    def degeneracy(self, n: int, i: int) -> ExactMatrix:
        """s_i: g_n -> g_{n+1}."""
        self._check_level(n, 0, self.truncation - 1)
        if not 0 <= i <= n:
            raise LevelOutOfRangeError(f"Degeneracy index {i} out of range at level {n}")
        return self.degeneracies[n][i]

    def _check_level(self, n: int, low: int, high: int) -> None:
        if not low <= n <= high:
            raise LevelOutOfRangeError(f"Level {n} outside the stored range {low}..{high}")


@dataclass(frozen=True)
class MooreComplex:
    """
    Moore complex N g of a simplicial Lie algebra.

    Attributes:
        length: Largest n with N g_n != 0 among the stored levels
        spaces: N g_n as subspaces of g_n, n = 0..K
        deltas: deltas[n - 1] is delta_n: N g_n -> N g_{n-1} in subspace coordinates
        projectors: projectors[n] is p_n: g_n -> g_n (p_0 is the identity)
        projector_order: How the projector factors were composed
    """

    length: int
    spaces: tuple[Subspace, ...]
    deltas: tuple[ExactMatrix, ...]
    projectors: tuple[ExactMatrix, ...]
    projector_order: str = "p_n = p_n^1 p_n^2 ... p_n^n (p_n^n applied first)"

    def __post_init__(self) -> None:
        """Check that the three sequences cover the same levels."""
        if len(self.deltas) != len(self.spaces) - 1:
            raise DimensionMismatchError("One differential per positive level is required")
        if len(self.projectors) != len(self.spaces):
            raise DimensionMismatchError("One projector per level is required")

    @property
    def truncation(self) -> int:
        """Top stored level K."""
        return len(self.spaces) - 1

    @property
    def dims(self) -> tuple[int, ...]:
        """Dimensions of N g_0..N g_K."""
        return tuple(space.dim for space in self.spaces)

    def space(self, n: int) -> Subspace:
        """N g_n."""
        if not 0 <= n <= self.truncation:
            raise LevelOutOfRangeError(f"Moore level {n} outside 0..{self.truncation}")
        return self.spaces[n]

    def delta(self, n: int) -> ExactMatrix:
        """delta_n: N g_n -> N g_{n-1} in subspace coordinates."""
        if not 1 <= n <= self.truncation:
            raise LevelOutOfRangeError(f"Moore differential delta_{n} outside 1..{self.truncation}")
        return self.deltas[n - 1]

    def projector(self, n: int) -> ExactMatrix:
        """p_n: g_n -> g_n."""
        if not 0 <= n <= self.truncation:
            raise LevelOutOfRangeError(f"Projector level {n} outside 0..{self.truncation}")
        return self.projectors[n]
