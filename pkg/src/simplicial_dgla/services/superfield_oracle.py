"""
Superfield expansion of the differential, used as an independent oracle.

Responsibilities:
- Assemble the superfield of a level from Moore components
- Check the face and degeneracy relations the superfields must satisfy
- Expand the differential -d/dtheta_0 d_0 a - sum_i d/dtheta_i a + 1/2 [a, a]
  and read off its top slot coefficient
- Tabulate the oracle differential, brackets and the sign bookkeeping

Every component entry gets its own marker generator of parity (m + 1) mod 2,
placed left of the theta-bar monomial. Raw coefficients are normalized to
the DGLA grading by (-1)^m for the differential and (-1)^(n1 (n2 + 1))
for the bracket.
"""

import logging
from collections.abc import Sequence
from itertools import combinations_with_replacement

from sympy import Rational

from simplicial_dgla.models.exceptions import (
    LevelOutOfRangeError,
    OracleMismatchError,
    SubspaceMembershipError,
)
from simplicial_dgla.models.grassmann import (
    GrassmannPoly,
    LinearForm,
    change_vars_theta_bar,
    grassmann_derive,
    grassmann_mul,
    substitute,
)
from simplicial_dgla.models.linear import (
    BilinearMap,
    ExactMatrix,
    Vector,
    add_vectors,
    scale_vector,
    zero_vector,
)
from simplicial_dgla.models.reports import SignRow, ValidationReport, Violation
from simplicial_dgla.models.simplicial import MooreComplex, SimplicialLieAlgebra
from simplicial_dgla.models.superfield import (
    EntryKey,
    OracleDifferential,
    Superfield,
    SuperfieldEntry,
)
from simplicial_dgla.services.combinatorics import enum_Pbar, enum_S, shuffle_sign
from simplicial_dgla.services.simplicial_service import s_alpha

logger = logging.getLogger(__name__)


def bracket_normalization(n1: int, n2: int) -> int:
    """(-1)^(n1 (n2 + 1)): raw oracle bracket coefficient -> DGLA bracket."""
    return -1 if (n1 * (n2 + 1)) % 2 else 1


def differential_normalization(m: int) -> int:
    """(-1)^m: raw oracle linear coefficient of x in N g_m -> d x."""
    return -1 if m % 2 else 1


def make_entries(components: Sequence[Sequence[Vector]]) -> tuple[SuperfieldEntry, ...]:
    """Number the component entries level by level; components[m] lists entries of N g_m."""
    entries = []
    for m, values in enumerate(components):
        for i, value in enumerate(values):
            entries.append(SuperfieldEntry((m, i), tuple(value), len(entries), (m + 1) % 2))
    return tuple(entries)


def _check_entries(
    g: SimplicialLieAlgebra, moore: MooreComplex, entries: Sequence[SuperfieldEntry]
) -> None:
    for entry in entries:
        m = entry.key[0]
        if m > g.truncation:
            raise LevelOutOfRangeError(f"Component of level {m} above truncation {g.truncation}")
        if len(entry.value) != g.level(m).dim or not moore.space(m).contains(entry.value):
            raise SubspaceMembershipError(f"Component {entry.key} is not an element of N g_{m}")


def _assemble(g: SimplicialLieAlgebra, n: int, entries: Sequence[SuperfieldEntry]) -> Superfield:
    markers = len(entries)
    parities = tuple(e.parity for e in entries) + (1,) * n
    terms: dict[tuple[int, ...], Vector] = {}
    for alpha in enum_S(n):
        m = n - alpha.size
        level_entries = [e for e in entries if e.key[0] == m]
        if not level_entries:
            continue
        embedding = s_alpha(g, alpha, n)
        slots = tuple(markers + t for t in alpha.complement(n).ascending())
        for entry in level_entries:
            terms[(entry.marker, *slots)] = embedding.apply(entry.value)
    theta_bar = GrassmannPoly(parities, g.level(n).dim, terms)
    theta = change_vars_theta_bar(theta_bar, "to_theta", first=markers, count=n)
    return Superfield(n, tuple(entries), theta_bar, theta)


def assemble_superfield(
    g: SimplicialLieAlgebra,
    moore: MooreComplex,
    n: int,
    components: Sequence[Sequence[Vector]],
) -> Superfield:
    """
    Superfield sum over alpha in S(n) of s_alpha a^(n - #alpha) theta-bar^(S(n) minus alpha).

    Args:
        g: Simplicial Lie algebra
        moore: Its Moore complex
        n: Level
        components: components[m] lists elements of N g_m (level coordinates)

    Raises:
        LevelOutOfRangeError: If n exceeds the truncation
        SubspaceMembershipError: If a component is not a Moore element
    """
    if not 0 <= n <= g.truncation:
        raise LevelOutOfRangeError(f"Level {n} outside 0..{g.truncation}")
    entries = make_entries(components)
    _check_entries(g, moore, entries)
    return _assemble(g, n, entries)


def _slot_images(markers: int, slots: Sequence[int | None]) -> list[LinearForm]:
    """Identity on markers; slot j goes to target slot slots[j] (None sends it to zero)."""
    images: list[LinearForm] = [{i: 1} for i in range(markers)]
    images += [{} if t is None else {markers + t: 1} for t in slots]
    return images


def _half_bracket(g: SimplicialLieAlgebra, field: Superfield) -> GrassmannPoly:
    """1/2 [a, a] in theta slots.

    The product is formed in theta-bar slots and converted afterwards; the
    change of variables is an algebra map, so this equals the product of
    the theta forms.
    """
    n = field.level
    product = grassmann_mul(field.theta_bar, field.theta_bar, g.level(n).structure)
    half = product.scale(Rational(1, 2))
    return change_vars_theta_bar(half, "to_theta", first=field.marker_count, count=n)


def _linear_part(g: SimplicialLieAlgebra, lower: Superfield, upper: Superfield) -> GrassmannPoly:
    """-d/dtheta_0 d_0 a(theta_0, ..., theta_n) - sum_i d/dtheta_i a(theta_1, ..., theta_n)."""
    n = lower.level
    markers = lower.marker_count
    faced = upper.theta.map_coefficients(g.face(n + 1, 0))
    derived = -grassmann_derive(faced, upper.slot(0))
    shifted = substitute(
        derived,
        _slot_images(markers, [None, *range(n)]),
        lower.theta.parities,
    )
    result = shifted
    for j in range(n):
        result = result - grassmann_derive(lower.theta, lower.slot(j))
    return result


def _require_moore_value(moore: MooreComplex, n: int, value: Vector, what: str) -> None:
    if not moore.space(n).contains(value):
        raise OracleMismatchError(f"Oracle {what} is not an element of N g_{n}")


def oracle_differential(
    g: SimplicialLieAlgebra,
    moore: MooreComplex,
    n: int,
    components: Sequence[Sequence[Vector]],
) -> OracleDifferential:
    """
    Expand the differential of the superfield at level n.

    The top slot coefficient is extracted per entry (linear part) and per
    entry pair (quadratic part); the total evaluates every marker at 1.

    Args:
        components: components[m] lists elements of N g_m for m <= n + 1

    Raises:
        LevelOutOfRangeError: If n + 1 exceeds the truncation
        SubspaceMembershipError: If a component is not a Moore element
        OracleMismatchError: If a coefficient falls outside N g_n
    """
    if not 0 <= n < g.truncation:
        raise LevelOutOfRangeError(
            f"The differential at level {n} needs level {n + 1} <= {g.truncation}"
        )
    entries = make_entries(components)
    _check_entries(g, moore, entries)
    lower = _assemble(g, n, entries)
    upper = _assemble(g, n + 1, entries)
    top = lower.top_slots()

    linear_poly = _linear_part(g, lower, upper)
    quadratic_poly = _half_bracket(g, lower)

    linear: dict[EntryKey, Vector] = {}
    for entry in entries:
        if entry.key[0] == n + 1:
            linear[entry.key] = linear_poly.coefficient((entry.marker, *top))

    quadratic: dict[tuple[EntryKey, EntryKey], Vector] = {}
    for a, b in combinations_with_replacement(entries, 2):
        if a.key[0] + b.key[0] != n or (a is b and a.parity):
            continue
        quadratic[(a.key, b.key)] = quadratic_poly.coefficient((a.marker, b.marker, *top))

    total = zero_vector(g.level(n).dim)
    for value in (*linear.values(), *quadratic.values()):
        _require_moore_value(moore, n, value, "coefficient")
        total = add_vectors(total, value)
    logger.debug(
        f"Oracle differential at level {n}: "
        f"{len(linear)} linear, {len(quadratic)} quadratic term(s)"
    )
    return OracleDifferential(n, linear, quadratic, total)


def oracle_differential_table(
    g: SimplicialLieAlgebra, moore: MooreComplex, m: int
) -> ExactMatrix:
    """
    Normalized oracle differential N g_m -> N g_(m-1) in Moore coordinates.

    Raises:
        LevelOutOfRangeError: Unless 1 <= m <= K
    """
    if not 1 <= m <= g.truncation:
        raise LevelOutOfRangeError(f"Differential degree {m} outside 1..{g.truncation}")
    source, target = moore.space(m), moore.space(m - 1)
    components: list[Sequence[Vector]] = [() for _ in range(m)]
    components.append(source.basis)
    result = oracle_differential(g, moore, m - 1, components)
    sign = differential_normalization(m)
    columns = [
        target.coordinates(scale_vector(sign, result.linear[(m, j)])) for j in range(source.dim)
    ]
    return ExactMatrix.from_columns(columns, target.dim)


def oracle_bracket_table(
    g: SimplicialLieAlgebra, moore: MooreComplex, n1: int, n2: int
) -> BilinearMap:
    """
    Normalized oracle bracket N g_n1 x N g_n2 -> N g_(n1+n2) in Moore coordinates.

    Each basis element of N g_n1 and of N g_n2 gets its own marker (two
    copies when n1 = n2); the value for a basis pair is the coefficient of
    marker_x marker_y theta_top in 1/2 [a, a].

    Raises:
        LevelOutOfRangeError: If n1 + n2 exceeds the Moore length or the truncation
        OracleMismatchError: If a value falls outside N g_(n1+n2)
    """
    n = n1 + n2
    if n1 < 0 or n2 < 0 or n > moore.length or n > g.truncation:
        raise LevelOutOfRangeError(
            f"Bracket degrees ({n1}, {n2}) exceed the Moore length {moore.length}"
        )
    left, right, target = moore.space(n1), moore.space(n2), moore.space(n)
    entries = [SuperfieldEntry((n1, i), v, i, (n1 + 1) % 2) for i, v in enumerate(left.basis)]
    entries += [
        SuperfieldEntry((n2, j), v, left.dim + j, (n2 + 1) % 2) for j, v in enumerate(right.basis)
    ]
    field = _assemble(g, n, entries)
    half = _half_bracket(g, field)
    top = field.top_slots()
    sign = bracket_normalization(n1, n2)

    def value(i: int, j: int) -> Vector:
        raw = half.coefficient((i, left.dim + j, *top))
        _require_moore_value(moore, n, raw, f"bracket at degrees ({n1}, {n2})")
        return target.coordinates(scale_vector(sign, raw))

    return BilinearMap.from_function(left.dim, right.dim, target.dim, value)


def pair_oracle_sign(n: int, alpha_indices: Sequence[int], beta_indices: Sequence[int]) -> int:
    """
    Raw sign of the term of 1/2 [a, a] pairing s_alpha x with s_beta y.

    Computed as the top coefficient of (marker_x theta-bar^beta)(marker_y theta-bar^alpha)
    after conversion to theta slots.
    """
    n1, n2 = n - len(alpha_indices), n - len(beta_indices)
    parities = ((n1 + 1) % 2, (n2 + 1) % 2) + (1,) * n
    left = GrassmannPoly.monomial(parities, (0, *(2 + t for t in sorted(beta_indices))), (1,))
    right = GrassmannPoly.monomial(parities, (1, *(2 + t for t in sorted(alpha_indices))), (1,))
    product = change_vars_theta_bar(grassmann_mul(left, right), "to_theta", first=2, count=n)
    coefficient = product.coefficient((0, 1, *range(2, n + 2)))[0]
    return int(coefficient)


def sign_table(k: int) -> tuple[SignRow, ...]:
    """Sign bookkeeping for every pair of P-bar(n), 2 <= n <= k."""
    rows = []
    for n in range(2, k + 1):
        for pair in enum_Pbar(n):
            n1, n2 = pair.degrees
            epsilon = shuffle_sign(n, pair.alpha, pair.beta)
            factor = bracket_normalization(n1, n2)
            oracle = pair_oracle_sign(n, pair.alpha.indices, pair.beta.indices)
            rows.append(
                SignRow(
                    n=n,
                    alpha=pair.alpha.indices,
                    beta=pair.beta.indices,
                    n1=n1,
                    n2=n2,
                    shuffle_sign=epsilon,
                    prose_sign=factor * epsilon,
                    oracle_sign=oracle,
                    normalized_sign=oracle * factor,
                    agrees=oracle * factor == epsilon,
                    prose_antisymmetric=(n1 - n2) % 2 == 0,
                )
            )
    return tuple(rows)


def _compare_polys(
    violations: list[Violation],
    law: str,
    n: int,
    witness: tuple[int, ...],
    lhs: GrassmannPoly,
    rhs: GrassmannPoly,
    detail: str,
) -> None:
    difference = lhs - rhs
    if difference.is_zero:
        return
    monomial, residual = next(iter(difference.terms.items()))
    violations.append(Violation(law, (n,), witness, residual, f"{detail}; first term {monomial}"))


def check_superfield_relations(
    g: SimplicialLieAlgebra,
    moore: MooreComplex,
    components: Sequence[Sequence[Vector]],
    n: int,
) -> ValidationReport:
    """
    Check how faces and degeneracies act on the superfield of level n.

    Laws (in theta slots, markers fixed):
        face_relation: d_i a_n is a_(n-1) with its slots j >= i-1 moved up one (i >= 1)
        zeroed_face_relation: d_0 a_(n+1) at slot 0 = 0, shifted down, is a_n
        degeneracy_relation: s_i a_n is a_(n+1) with slots i-1 and i identified (i >= 1)
        zeroed_degeneracy_relation: s_0 a_n is a_(n+1) at slot 0 = 0, shifted down

    Relations involving level n + 1 are skipped when n = K.
    """
    if not 0 <= n <= g.truncation:
        raise LevelOutOfRangeError(f"Level {n} outside 0..{g.truncation}")
    entries = make_entries(components)
    _check_entries(g, moore, entries)
    markers = len(entries)
    current = _assemble(g, n, entries)
    violations: list[Violation] = []
    checks = 0

    if n >= 1:
        below = _assemble(g, n - 1, entries)
        for i in range(1, n + 1):
            checks += 1
            slots = [j if j < i - 1 else j + 1 for j in range(n - 1)]
            _compare_polys(
                violations,
                "face_relation",
                n,
                (i,),
                current.theta.map_coefficients(g.face(n, i)),
                substitute(below.theta, _slot_images(markers, slots), current.theta.parities),
                f"d_{i} a_{n} = a_{n - 1} with shifted slots",
            )

    if n < g.truncation:
        above = _assemble(g, n + 1, entries)
        dropped = _slot_images(markers, [None, *range(n)])
        checks += 1
        _compare_polys(
            violations,
            "zeroed_face_relation",
            n,
            (0,),
            substitute(
                above.theta.map_coefficients(g.face(n + 1, 0)), dropped, current.theta.parities
            ),
            current.theta,
            f"d_0 a_{n + 1} at slot 0 = 0 equals a_{n}",
        )
        for i in range(1, n + 1):
            checks += 1
            slots = [j if j <= i - 1 else j - 1 for j in range(n + 1)]
            _compare_polys(
                violations,
                "degeneracy_relation",
                n,
                (i,),
                current.theta.map_coefficients(g.degeneracy(n, i)),
                substitute(above.theta, _slot_images(markers, slots), current.theta.parities),
                f"s_{i} a_{n} = a_{n + 1} on the diagonal",
            )
        checks += 1
        _compare_polys(
            violations,
            "zeroed_degeneracy_relation",
            n,
            (0,),
            current.theta.map_coefficients(g.degeneracy(n, 0)),
            substitute(above.theta, dropped, current.theta.parities),
            f"s_0 a_{n} = a_{n + 1} at slot 0 = 0",
        )

    report = ValidationReport.build("superfield", violations, checks)
    logger.info(f"Superfield relations at level {n}: {len(report.violations)} violation(s)")
    return report
