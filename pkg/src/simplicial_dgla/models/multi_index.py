"""
Multi-indices of degeneracy maps and Peiffer index pairs.
"""

from collections.abc import Iterator
from dataclasses import dataclass
from functools import total_ordering


@total_ordering
@dataclass(frozen=True)
class MultiIndex:
    """
    Strictly decreasing list of degeneracy indices, alpha = {i_l > ... > i_1}.

    Ordering follows the chain {} < {0} < {1} < {1,0} < {2} < {2,0} < ...,
    which is the order of the bitmask sum(2**i).

    Attributes:
        indices: Strictly decreasing non-negative integers
    """

    indices: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        """Validate the strictly decreasing invariant."""
        if any(i < 0 for i in self.indices):
            raise ValueError(f"Multi-index entries must be non-negative: {self.indices}")
        if any(a <= b for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError(f"Multi-index must be strictly decreasing: {self.indices}")

    @classmethod
    def of(cls, *indices: int) -> "MultiIndex":
        """Build from indices in any order."""
        if len(set(indices)) != len(indices):
            raise ValueError(f"Repeated entries in multi-index: {indices}")
        return cls(tuple(sorted(indices, reverse=True)))

    @property
    def size(self) -> int:
        """Cardinality of alpha."""
        return len(self.indices)

    @property
    def mask(self) -> int:
        """Bitmask sum(2**i) used for the ordering."""
        return sum(1 << i for i in self.indices)

    def ascending(self) -> tuple[int, ...]:
        """Entries in increasing order."""
        return tuple(reversed(self.indices))

    def fits(self, n: int) -> bool:
        """True if every entry is below n, i.e. alpha belongs to S(n)."""
        return all(i < n for i in self.indices)

    def complement(self, n: int) -> "MultiIndex":
        """{0, ..., n-1} minus alpha."""
        if not self.fits(n):
            raise ValueError(f"{self} is not a subset of {{0, ..., {n - 1}}}")
        return MultiIndex.of(*(i for i in range(n) if i not in self.indices))

    def isdisjoint(self, other: "MultiIndex") -> bool:
        """True if alpha and beta share no index."""
        return not set(self.indices) & set(other.indices)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, MultiIndex):
            return NotImplemented
        return self.mask < other.mask

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, i: object) -> bool:
        return i in self.indices

    def __str__(self) -> str:
        if not self.indices:
            return "{}"
        return "{" + ",".join(str(i) for i in self.indices) + "}"


@dataclass(frozen=True)
class PeifferPair:
    """
    Index pair (alpha, beta) of a Peiffer pairing at level n.

    Invariants: {} < alpha < beta, alpha and beta disjoint, both inside
    {0, ..., n-1}.

    Attributes:
        n: Simplicial level
        alpha: Degeneracies applied to the first argument
        beta: Degeneracies applied to the second argument
    """

    n: int
    alpha: MultiIndex
    beta: MultiIndex

    def __post_init__(self) -> None:
        """Validate ordering, disjointness and range."""
        if not (self.alpha.fits(self.n) and self.beta.fits(self.n)):
            raise ValueError(f"Pair ({self.alpha}, {self.beta}) does not fit level {self.n}")
        if not MultiIndex() < self.alpha < self.beta:
            raise ValueError(f"Pair must satisfy {{}} < alpha < beta: ({self.alpha}, {self.beta})")
        if not self.alpha.isdisjoint(self.beta):
            raise ValueError(f"Pair indices must be disjoint: ({self.alpha}, {self.beta})")

    @property
    def is_complementary(self) -> bool:
        """True when alpha and beta partition {0, ..., n-1} (membership in P-bar(n))."""
        return self.alpha.size + self.beta.size == self.n

    @property
    def degrees(self) -> tuple[int, int]:
        """(n - #alpha, n - #beta): Moore levels of the two arguments."""
        return (self.n - self.alpha.size, self.n - self.beta.size)

    def __str__(self) -> str:
        return f"({self.alpha}, {self.beta})"
