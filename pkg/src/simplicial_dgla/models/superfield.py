"""
Superfields: one Grassmann polynomial per level packing all Moore components.
"""

from collections.abc import Mapping
from dataclasses import dataclass

from simplicial_dgla.models.grassmann import GrassmannPoly
from simplicial_dgla.models.linear import Vector

# (Moore level m, position of the entry among the level-m components)
EntryKey = tuple[int, int]


@dataclass(frozen=True)
class SuperfieldEntry:
    """
    One component a^m_i with its marker generator.

    Attributes:
        key: (m, i)
        value: Element of N g_m in level coordinates
        marker: Generator index of the marker
        parity: (m + 1) mod 2, the parity of the marker
    """

    key: EntryKey
    value: Vector
    marker: int
    parity: int


@dataclass(frozen=True)
class Superfield:
    """
    Assembled superfield at level n.

    Markers occupy generators 0..M-1 and the n odd slots follow, so slot j
    is generator M + j. Slot j stands for theta_{j+1} of the level.

    Attributes:
        level: n
        entries: Every component entry in marker order (shared across levels)
        theta_bar: Sum of s_alpha a^(n - #alpha) theta-bar^(S(n) minus alpha)
        theta: The same polynomial in theta slots
    """

    level: int
    entries: tuple[SuperfieldEntry, ...]
    theta_bar: GrassmannPoly
    theta: GrassmannPoly

    @property
    def marker_count(self) -> int:
        """Number of marker generators M."""
        return len(self.entries)

    def slot(self, j: int) -> int:
        """Generator index of slot j."""
        return self.marker_count + j

    def top_slots(self) -> tuple[int, ...]:
        """Generators of the top slot monomial."""
        return tuple(self.slot(j) for j in range(self.level))


@dataclass(frozen=True)
class OracleDifferential:
    """
    Top slot coefficient of the superfield differential at level n.

    Values are raw (before the grading normalization) and live in N g_n,
    in level coordinates.

    Attributes:
        level: n
        linear: Linear term per level n + 1 entry, (-1)^(n+1) delta x
        quadratic: Cross term of 1/2 [a, a] per entry pair (diagonal only for even markers)
        total: Sum of all terms with every marker set to 1
    """

    level: int
    linear: Mapping[EntryKey, Vector]
    quadratic: Mapping[tuple[EntryKey, EntryKey], Vector]
    total: Vector
