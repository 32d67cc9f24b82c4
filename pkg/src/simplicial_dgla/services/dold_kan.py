"""
Dold-Kan layout of a simplicial vector space built from a chain complex.

Level n is the direct sum over alpha in S(n) of blocks s_alpha N_{n - #alpha},
concatenated in S(n) order. Faces and degeneracies act block by block
through the simplicial identities, so the Moore subspace at every level
is exactly the block of alpha = {}.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Literal

from sympy import S

from simplicial_dgla.models.exceptions import DimensionMismatchError, LevelOutOfRangeError
from simplicial_dgla.models.linear import ExactMatrix, Vector, zero_vector
from simplicial_dgla.models.multi_index import MultiIndex
from simplicial_dgla.services.combinatorics import enum_S

FaceKind = Literal["identity", "delta", "zero"]


@dataclass(frozen=True)
class Block:
    """
    One summand s_alpha N_m of a level.

    Attributes:
        alpha: Degeneracy multi-index
        moore_level: m = n - #alpha
        offset: First coordinate of the block in the level
        dim: dim N_m
    """

    alpha: MultiIndex
    moore_level: int
    offset: int
    dim: int

    @property
    def stop(self) -> int:
        """One past the last coordinate of the block."""
        return self.offset + self.dim


def face_of_block(i: int, alpha: MultiIndex) -> tuple[MultiIndex, FaceKind]:
    """
    Rewrite d_i s_alpha with the simplicial identities.

    Returns:
        (alpha', kind) where d_i s_alpha x equals s_alpha' x ("identity"),
        s_alpha' d_0 x ("delta") or zero ("zero") for x in a Moore space
    """
    out: list[int] = []
    current = i
    indices = alpha.indices
    for pos, j in enumerate(indices):
        if current < j:
            out.append(j - 1)
        elif current in (j, j + 1):
            out.extend(indices[pos + 1 :])
            return MultiIndex.of(*out), "identity"
        else:
            out.append(j)
            current -= 1
    return MultiIndex.of(*out), ("delta" if current == 0 else "zero")


def degeneracy_of_block(i: int, alpha: MultiIndex) -> MultiIndex:
    """Multi-index of s_i s_alpha, using s_i s_j = s_{j+1} s_i for i <= j."""
    raised = [j + 1 for j in alpha.indices if j >= i]
    kept = [j for j in alpha.indices if j < i]
    return MultiIndex.of(*raised, i, *kept)


class DoldKanLayout:
    """
    Coordinates of the levels of Gamma(N) for a chain complex N.

    Usage:
        >>> layout = DoldKanLayout((2, 1), truncation=2)
        >>> layout.dim(2)
        4
        >>> [str(b.alpha) for b in layout.blocks(2)]
        ['{}', '{0}', '{1}', '{1,0}']
    """

    def __init__(self, moore_dims: Sequence[int], truncation: int):
        """
        Initialize layout.

        Args:
            moore_dims: (dim N_0, ..., dim N_k); higher Moore spaces are zero
            truncation: Top level K to lay out
        """
        if truncation < 0:
            raise LevelOutOfRangeError(f"Truncation must be non-negative, got {truncation}")
        if any(d < 0 for d in moore_dims):
            raise DimensionMismatchError(f"Negative Moore dimension in {tuple(moore_dims)}")
        self.moore_dims = tuple(moore_dims)
        self.truncation = truncation

    def moore_dim(self, m: int) -> int:
        """dim N_m (zero above the declared complex)."""
        return self.moore_dims[m] if 0 <= m < len(self.moore_dims) else 0

    @cached_property
    def _levels(self) -> tuple[tuple[Block, ...], ...]:
        levels = []
        for n in range(self.truncation + 1):
            offset = 0
            blocks = []
            for alpha in enum_S(n):
                m = n - alpha.size
                dim = self.moore_dim(m)
                blocks.append(Block(alpha, m, offset, dim))
                offset += dim
            levels.append(tuple(blocks))
        return tuple(levels)

    def blocks(self, n: int) -> tuple[Block, ...]:
        """Blocks of level n in S(n) order."""
        self._check(n)
        return self._levels[n]

    def block(self, n: int, alpha: MultiIndex) -> Block:
        """The block of alpha at level n."""
        for block in self.blocks(n):
            if block.alpha == alpha:
                return block
        raise LevelOutOfRangeError(f"Multi-index {alpha} is not in S({n})")

    def dim(self, n: int) -> int:
        """Dimension of level n."""
        blocks = self.blocks(n)
        return blocks[-1].stop if blocks else 0

    def locate(self, n: int, index: int) -> tuple[Block, int]:
        """Block containing a coordinate, and the coordinate's position inside it."""
        for block in self.blocks(n):
            if block.offset <= index < block.stop:
                return block, index - block.offset
        raise LevelOutOfRangeError(f"Coordinate {index} outside level {n}")

    def embed(self, n: int, alpha: MultiIndex, x: Vector) -> Vector:
        """Place x in N_m into the block of alpha at level n."""
        block = self.block(n, alpha)
        if len(x) != block.dim:
            raise DimensionMismatchError(
                f"Block {alpha} at level {n} has dimension {block.dim}, got {len(x)}"
            )
        out = list(zero_vector(self.dim(n)))
        out[block.offset : block.stop] = x
        return tuple(out)

    def component(self, n: int, alpha: MultiIndex, v: Vector) -> Vector:
        """The coordinates of v inside the block of alpha."""
        block = self.block(n, alpha)
        return tuple(v[block.offset : block.stop])

    def face_matrix(self, n: int, i: int, deltas: Sequence[ExactMatrix]) -> ExactMatrix:
        """
        Matrix of d_i: level n -> level n - 1.

        Args:
            n: Source level, 1 <= n <= K
            i: Face index, 0 <= i <= n
            deltas: deltas[m - 1] is delta_m: N_m -> N_{m-1}
        """
        self._check(n)
        if n < 1 or not 0 <= i <= n:
            raise LevelOutOfRangeError(f"Face d_{i} is not defined at level {n}")
        grid = [[S.Zero] * self.dim(n) for _ in range(self.dim(n - 1))]
        for block in self.blocks(n):
            if block.dim == 0:
                continue
            target_alpha, kind = face_of_block(i, block.alpha)
            if kind == "zero":
                continue
            target = self.block(n - 1, target_alpha)
            if kind == "identity":
                for r in range(block.dim):
                    grid[target.offset + r][block.offset + r] = S.One
            else:
                delta = deltas[block.moore_level - 1]
                for r, c, value in delta.nonzero_entries():
                    grid[target.offset + r][block.offset + c] = value
        return ExactMatrix.from_rows(grid, cols=self.dim(n))

    def degeneracy_matrix(self, n: int, i: int) -> ExactMatrix:
        """Matrix of s_i: level n -> level n + 1."""
        self._check(n + 1)
        if not 0 <= i <= n:
            raise LevelOutOfRangeError(f"Degeneracy s_{i} is not defined at level {n}")
        grid = [[S.Zero] * self.dim(n) for _ in range(self.dim(n + 1))]
        for block in self.blocks(n):
            target = self.block(n + 1, degeneracy_of_block(i, block.alpha))
            for r in range(block.dim):
                grid[target.offset + r][block.offset + r] = S.One
        return ExactMatrix.from_rows(grid, cols=self.dim(n))

    def labels(self, n: int, moore_labels: Sequence[Sequence[str]]) -> tuple[str, ...]:
        """Basis labels such as "X", "s0(E)" or "s1s0(E)"."""
        out = []
        for block in self.blocks(n):
            names = moore_labels[block.moore_level] if block.moore_level < len(moore_labels) else ()
            prefix = "".join(f"s{j}" for j in block.alpha.indices)
            for r in range(block.dim):
                name = names[r] if r < len(names) else f"n{block.moore_level}_{r}"
                out.append(f"{prefix}({name})" if prefix else name)
        return tuple(out)

    def _check(self, n: int) -> None:
        if not 0 <= n <= self.truncation:
            raise LevelOutOfRangeError(f"Level {n} outside 0..{self.truncation}")
