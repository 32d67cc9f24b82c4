"""
Polynomials in graded-commutative generators with vector coefficients.

Generators carry a parity. Odd generators anticommute and square to zero;
even generators commute with everything and may repeat. Monomials are
stored as ascending tuples of generator indices, so every polynomial has
a single canonical form. Coefficients are even vectors; the grading of a
superfield entry is carried by a marker generator instead.
"""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Literal

from sympy import Rational, S

from simplicial_dgla.models.exceptions import DimensionMismatchError, LevelOutOfRangeError
from simplicial_dgla.models.linear import (
    BilinearMap,
    ExactMatrix,
    RationalLike,
    Vector,
    add_vectors,
    as_vector,
    is_zero_vector,
    scale_vector,
    to_rational,
    zero_vector,
)

Monomial = tuple[int, ...]
LinearForm = Mapping[int, RationalLike]
Direction = Literal["to_theta", "to_theta_bar"]


def monomial_product(
    parities: Sequence[int], left: Monomial, right: Monomial
) -> tuple[int, Monomial]:
    """
    Canonical product of two monomials.

    Returns:
        (sign, monomial); sign is 0 when an odd generator repeats
    """
    word = (*left, *right)
    inversions = 0
    for a in range(len(word)):
        if not parities[word[a]] & 1:
            continue
        for b in range(a + 1, len(word)):
            if word[b] < word[a] and parities[word[b]] & 1:
                inversions += 1
    ordered = tuple(sorted(word))
    for a in range(len(ordered) - 1):
        if ordered[a] == ordered[a + 1] and parities[ordered[a]] & 1:
            return 0, ()
    return (-1 if inversions % 2 else 1), ordered


@dataclass(frozen=True)
class GrassmannPoly:
    """
    Polynomial sum of coefficient * monomial.

    Attributes:
        parities: Parity (0 even, 1 odd) of every generator
        dim: Length of the coefficient vectors
        terms: Canonical monomial -> non-zero coefficient vector

    Example:
        >>> theta = GrassmannPoly.generator((1, 1), 0)
        >>> grassmann_mul(theta, theta).is_zero
        True
    """

    parities: tuple[int, ...]
    dim: int
    terms: Mapping[Monomial, Vector] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Validate monomials and coefficients, drop zero terms."""
        if any(p not in (0, 1) for p in self.parities):
            raise ValueError(f"Parities must be 0 or 1, got {self.parities}")
        clean: dict[Monomial, Vector] = {}
        for monomial, coefficient in self.terms.items():
            if any(not 0 <= g < self.n_vars for g in monomial):
                raise LevelOutOfRangeError(
                    f"Monomial {monomial} uses a generator outside 0..{self.n_vars - 1}"
                )
            if tuple(sorted(monomial)) != tuple(monomial):
                raise ValueError(f"Monomial {monomial} is not in canonical order")
            sign, _ = monomial_product(self.parities, tuple(monomial), ())
            if sign == 0:
                raise ValueError(f"Monomial {monomial} repeats an odd generator")
            if len(coefficient) != self.dim:
                raise DimensionMismatchError(
                    f"Coefficient of length {len(coefficient)} in a polynomial of dim {self.dim}"
                )
            if not is_zero_vector(coefficient):
                clean[tuple(monomial)] = tuple(coefficient)
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def zero(cls, parities: Sequence[int], dim: int) -> "GrassmannPoly":
        """The zero polynomial."""
        return cls(tuple(parities), dim, {})

    @classmethod
    def monomial(
        cls, parities: Sequence[int], generators: Sequence[int], coefficient: Vector
    ) -> "GrassmannPoly":
        """coefficient * g_1 g_2 ... in the given (not necessarily sorted) order."""
        sign, ordered = monomial_product(tuple(parities), tuple(generators), ())
        if sign == 0:
            return cls.zero(parities, len(coefficient))
        return cls(tuple(parities), len(coefficient), {ordered: scale_vector(sign, coefficient)})

    @classmethod
    def generator(cls, parities: Sequence[int], i: int) -> "GrassmannPoly":
        """The scalar polynomial g_i."""
        return cls.monomial(parities, (i,), (S.One,))

    @classmethod
    def scalar(cls, parities: Sequence[int], value: RationalLike = 1) -> "GrassmannPoly":
        """A scalar constant."""
        return cls(tuple(parities), 1, {(): (to_rational(value),)})

    @property
    def n_vars(self) -> int:
        """Number of generators."""
        return len(self.parities)

    @property
    def is_zero(self) -> bool:
        """True when there is no term."""
        return not self.terms

    def coefficient(self, monomial: Sequence[int]) -> Vector:
        """
        Coefficient of the product of the given generators, in that order.

        Reading a coefficient in a non-canonical order applies the sign of
        the reordering, so coefficient((1, 0)) == -coefficient((0, 1)) for
        odd generators.
        """
        sign, ordered = monomial_product(self.parities, tuple(monomial), ())
        if sign == 0:
            return zero_vector(self.dim)
        value = self.terms.get(ordered, zero_vector(self.dim))
        return scale_vector(sign, value)

    def __add__(self, other: "GrassmannPoly") -> "GrassmannPoly":
        self._check_compatible(other)
        terms = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            terms[monomial] = add_vectors(terms.get(monomial, zero_vector(self.dim)), coefficient)
        return GrassmannPoly(self.parities, self.dim, terms)

    def __neg__(self) -> "GrassmannPoly":
        return self.scale(-1)

    def __sub__(self, other: "GrassmannPoly") -> "GrassmannPoly":
        return self + (-other)

    def scale(self, c: RationalLike) -> "GrassmannPoly":
        """Multiply every coefficient by a scalar."""
        return GrassmannPoly(
            self.parities, self.dim, {m: scale_vector(c, v) for m, v in self.terms.items()}
        )

    def map_coefficients(self, m: ExactMatrix) -> "GrassmannPoly":
        """Apply a linear map to every coefficient."""
        if m.cols != self.dim:
            raise DimensionMismatchError(
                f"A {m.rows}x{m.cols} matrix cannot act on coefficients of dim {self.dim}"
            )
        terms = {k: m.apply(v) for k, v in self.terms.items()}
        return GrassmannPoly(self.parities, m.rows, terms)

    def _check_compatible(self, other: "GrassmannPoly") -> None:
        if self.parities != other.parities or self.dim != other.dim:
            raise DimensionMismatchError(
                "Polynomials over different generators or coefficient spaces"
            )


def grassmann_mul(
    p: GrassmannPoly, q: GrassmannPoly, pairing: BilinearMap | None = None
) -> GrassmannPoly:
    """
    Product p * q with coefficients combined by a bilinear pairing.

    Without a pairing one side must have scalar (dim 1) coefficients.

    Raises:
        DimensionMismatchError: On different generators or incompatible coefficients
    """
    if p.parities != q.parities:
        raise DimensionMismatchError(
            f"Generator mismatch: {p.n_vars} vs {q.n_vars} generators or different parities"
        )
    if pairing is not None:
        if (pairing.left_dim, pairing.right_dim) != (p.dim, q.dim):
            raise DimensionMismatchError("Pairing does not match the coefficient dimensions")
        dim = pairing.target_dim
    elif p.dim == 1 or q.dim == 1:
        dim = q.dim if p.dim == 1 else p.dim
    else:
        raise DimensionMismatchError("Multiplying two vector-valued polynomials needs a pairing")

    def combine(x: Vector, y: Vector) -> Vector:
        if pairing is not None:
            return pairing.apply(x, y)
        if p.dim == 1:
            return scale_vector(x[0], y)
        return scale_vector(y[0], x)

    terms: dict[Monomial, Vector] = {}
    for left, x in p.terms.items():
        for right, y in q.terms.items():
            sign, monomial = monomial_product(p.parities, left, right)
            if sign == 0:
                continue
            value = combine(x, y)
            if sign < 0:
                value = scale_vector(-1, value)
            terms[monomial] = add_vectors(terms.get(monomial, zero_vector(dim)), value)
    return GrassmannPoly(p.parities, dim, terms)


def grassmann_derive(p: GrassmannPoly, i: int) -> GrassmannPoly:
    """
    Left derivative d/dg_i.

    For an odd generator the generator is moved to the front first, which
    contributes (-1) per odd generator it passes. For an even generator
    the usual power rule applies.

    Raises:
        LevelOutOfRangeError: If i is not a generator index
    """
    if not 0 <= i < p.n_vars:
        raise LevelOutOfRangeError(f"Generator {i} outside 0..{p.n_vars - 1}")
    odd = p.parities[i] & 1
    terms: dict[Monomial, Vector] = {}
    for monomial, coefficient in p.terms.items():
        if i not in monomial:
            continue
        position = monomial.index(i)
        rest = monomial[:position] + monomial[position + 1 :]
        if odd:
            passed = sum(p.parities[g] & 1 for g in monomial[:position])
            factor = -1 if passed % 2 else 1
        else:
            factor = monomial.count(i)
        value = scale_vector(factor, coefficient)
        terms[rest] = add_vectors(terms.get(rest, zero_vector(p.dim)), value)
    return GrassmannPoly(p.parities, p.dim, terms)


def substitute(
    p: GrassmannPoly, images: Sequence[LinearForm], parities: Sequence[int]
) -> GrassmannPoly:
    """
    Apply the algebra map sending generator i to the linear form images[i].

    Args:
        p: Polynomial to transform
        images: One linear form {target generator: coefficient} per source generator;
            an empty form sends the generator to zero
        parities: Parities of the target generators

    Raises:
        ValueError: If an image mixes parities with its source generator
    """
    target = tuple(parities)
    if len(images) != p.n_vars:
        raise DimensionMismatchError(f"Need {p.n_vars} images, got {len(images)}")
    forms: list[list[tuple[int, Rational]]] = []
    for g, form in enumerate(images):
        entries = [(t, to_rational(c)) for t, c in sorted(form.items()) if to_rational(c) != 0]
        for t, _ in entries:
            if not 0 <= t < len(target):
                raise LevelOutOfRangeError(f"Image generator {t} outside 0..{len(target) - 1}")
            if target[t] != p.parities[g]:
                raise ValueError(f"Generator {g} cannot map to a generator of other parity")
        forms.append(entries)

    terms: dict[Monomial, Vector] = {}
    for monomial, coefficient in p.terms.items():
        expansion: dict[Monomial, Rational] = {(): S.One}
        for g in monomial:
            step: dict[Monomial, Rational] = {}
            for word, c in expansion.items():
                for t, a in forms[g]:
                    sign, product = monomial_product(target, word, (t,))
                    if sign:
                        step[product] = step.get(product, S.Zero) + sign * c * a
            expansion = {w: c for w, c in step.items() if c != 0}
        for word, c in expansion.items():
            value = scale_vector(c, coefficient)
            terms[word] = add_vectors(terms.get(word, zero_vector(p.dim)), value)
    return GrassmannPoly(target, p.dim, terms)


def theta_bar_forms(count: int, direction: Direction) -> list[dict[int, int]]:
    """
    Linear forms of the slot change of variables on count odd slots.

    "to_theta" expresses theta-bar slots through theta slots:
    bar_0 = t_0 and bar_j = t_j - t_{j-1}. "to_theta_bar" is the inverse,
    t_j = bar_0 + ... + bar_j. With no slots both give no forms.
    """
    if direction == "to_theta":
        return ([{0: 1}] if count else []) + [{j: 1, j - 1: -1} for j in range(1, count)]
    if direction == "to_theta_bar":
        return [{i: 1 for i in range(j + 1)} for j in range(count)]
    raise ValueError(f"Unknown direction {direction!r}")


def change_vars_theta_bar(
    p: GrassmannPoly, direction: Direction, first: int = 0, count: int | None = None
) -> GrassmannPoly:
    """
    Rewrite the slots first..first+count-1 between theta-bar and theta variables.

    Other generators are left unchanged. Converting one way and then the
    other is the identity.
    """
    count = p.n_vars - first if count is None else count
    if first < 0 or first + count > p.n_vars:
        raise LevelOutOfRangeError(f"Slots {first}..{first + count - 1} outside the generators")
    images: list[LinearForm] = [{g: 1} for g in range(p.n_vars)]
    for j, form in enumerate(theta_bar_forms(count, direction)):
        images[first + j] = {first + t: c for t, c in form.items()}
    return substitute(p, images, p.parities)


def scalar_poly(parities: Sequence[int], terms: Mapping[Monomial, RationalLike]) -> GrassmannPoly:
    """Scalar polynomial from {monomial: coefficient}, monomials in canonical order."""
    return GrassmannPoly(tuple(parities), 1, {m: as_vector([c]) for m, c in terms.items()})
