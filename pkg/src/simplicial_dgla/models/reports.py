"""
Diagnostic reports produced by validators, axiom checks and the oracle.

Reports are immutable and deterministically ordered so that two runs on
the same input serialize identically.
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from simplicial_dgla.models.linear import Vector


@dataclass(frozen=True)
class Violation:
    """
    A single violated law.

    Attributes:
        law: Name of the identity or axiom (e.g. "face_degeneracy", "2CM-ii", "jacobi")
        levels: Simplicial levels or DGLA degrees involved
        witness: Indices (structure-map indices and/or basis indices) of the witness
        residual: Non-zero difference between the two sides, flattened row-major
        detail: Human-readable statement of the law
    """

    law: str
    levels: tuple[int, ...]
    witness: tuple[int, ...]
    residual: Vector = ()
    detail: str = ""

    @property
    def sort_key(self) -> tuple[tuple[int, ...], str, tuple[int, ...]]:
        """Ordering by level, then law, then witness."""
        return (self.levels, self.law, self.witness)


@dataclass(frozen=True)
class ValidationReport:
    """
    Outcome of a validator.

    Attributes:
        subject: What was validated (e.g. "simplicial", "crossed_module")
        violations: Sorted violations; empty iff every law holds
        checks: Number of individual law instances evaluated
    """

    subject: str
    violations: tuple[Violation, ...] = ()
    checks: int = 0

    @classmethod
    def build(
        cls, subject: str, violations: Iterable[Violation], checks: int
    ) -> "ValidationReport":
        """Create a report with violations in deterministic order."""
        return cls(subject, tuple(sorted(violations, key=lambda v: v.sort_key)), checks)

    @property
    def ok(self) -> bool:
        """True when no law is violated."""
        return not self.violations

    def laws(self) -> list[str]:
        """Distinct violated law names, in report order."""
        seen: list[str] = []
        for v in self.violations:
            if v.law not in seen:
                seen.append(v.law)
        return seen


@dataclass(frozen=True)
class OracleDiscrepancy:
    """
    A disagreement between the built DGLA and the superfield oracle.

    Attributes:
        quantity: "differential" or "bracket"
        degrees: Moore degrees of the arguments
        witness: Basis indices of the arguments
        built: Value computed from the closed formulas
        oracle: Normalized value from the Grassmann expansion
    """

    quantity: str
    degrees: tuple[int, ...]
    witness: tuple[int, ...]
    built: Vector
    oracle: Vector


@dataclass(frozen=True)
class SignRow:
    """
    Signs attached to one Peiffer index pair (alpha, beta) in P-bar(n).

    Attributes:
        n: Level
        alpha: Multi-index entries of alpha (decreasing)
        beta: Multi-index entries of beta (decreasing)
        n1: Moore degree n - #alpha of the first argument
        n2: Moore degree n - #beta of the second argument
        shuffle_sign: Parity of the shuffle (S(n) minus alpha, S(n) minus beta)
        prose_sign: (-1)^(n1 (n2 + 1)) times shuffle_sign
        oracle_sign: Sign of the pair's term in the raw Grassmann expansion
        normalized_sign: oracle_sign times the grading normalization (-1)^(n1 (n2 + 1))
        agrees: normalized_sign == shuffle_sign, i.e. the built bracket matches the oracle
        prose_antisymmetric: Whether the prose sign rule alone respects graded antisymmetry
    """

    n: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    n1: int
    n2: int
    shuffle_sign: int
    prose_sign: int
    oracle_sign: int
    normalized_sign: int
    agrees: bool
    prose_antisymmetric: bool


@dataclass(frozen=True)
class VerificationReport:
    """
    Outcome of DGLA axiom verification and/or oracle comparison.

    Attributes:
        violations: Axiom violations ordered by (axiom, degrees, basis tuple)
        check_counts: Number of checked instances per axiom family
        oracle_diffs: Discrepancies between built DGLA and oracle
        sign_table: Sign bookkeeping for every P-bar(n) pair
    """

    violations: tuple[Violation, ...] = ()
    check_counts: Mapping[str, int] = field(default_factory=dict)
    oracle_diffs: tuple[OracleDiscrepancy, ...] = ()
    sign_table: tuple[SignRow, ...] = ()

    @property
    def ok(self) -> bool:
        """True when there is no violation and no oracle discrepancy."""
        return not self.violations and not self.oracle_diffs

    def merged(self, other: "VerificationReport") -> "VerificationReport":
        """Combine two reports, keeping deterministic order."""
        counts = dict(self.check_counts)
        for name, count in other.check_counts.items():
            counts[name] = counts.get(name, 0) + count
        violations = sorted(
            (*self.violations, *other.violations),
            key=lambda v: (v.law, v.levels, v.witness),
        )
        diffs = sorted(
            (*self.oracle_diffs, *other.oracle_diffs),
            key=lambda d: (d.quantity, d.degrees, d.witness),
        )
        signs = self.sign_table or other.sign_table
        return VerificationReport(
            tuple(violations), dict(sorted(counts.items())), tuple(diffs), signs
        )
