"""
Exact rational linear algebra.

Scalars are sympy Rationals and vectors are plain tuples of them. Matrices
wrap sympy's ImmutableMatrix; subspaces are stored by a canonical reduced
row echelon basis so that equal subspaces compare equal.
"""

import re
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from typing import Union

from sympy import ImmutableMatrix, Rational, S

from simplicial_dgla.models.exceptions import DimensionMismatchError, SubspaceMembershipError

Vector = tuple[Rational, ...]
RationalLike = Union[Rational, int, str]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def parse_rational(text: Union[str, int]) -> Rational:
    """
    Parse an exact rational from "p/q" or integer notation.

    Args:
        text: String such as "3", "-1/2" or a Python int

    Returns:
        Reduced sympy Rational

    Raises:
        ValueError: If the text is not a rational or the denominator is zero
    """
    if isinstance(text, bool):
        raise ValueError(f"Not a rational: {text!r}")
    if isinstance(text, int):
        return Rational(text)
    if not isinstance(text, str):
        raise ValueError(f"Rationals must be strings or integers, got {type(text).__name__}")

    match = _RATIONAL_PATTERN.match(text)
    if match is None:
        raise ValueError(f"Malformed rational: {text!r}")

    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"Zero denominator in rational: {text!r}")
    return Rational(numerator, denominator)


def format_rational(value: Rational) -> str:
    """Serialize a rational as "p" or "p/q" in lowest terms."""
    value = Rational(value)
    if value.q == 1:
        return str(value.p)
    return f"{value.p}/{value.q}"


def to_rational(value: RationalLike) -> Rational:
    """Coerce ints, strings and sympy numbers to Rational; floats are refused."""
    if isinstance(value, float):
        raise TypeError("Floating point values are not allowed in exact computations")
    if isinstance(value, str):
        return parse_rational(value)
    return Rational(value)


def as_vector(values: Iterable[RationalLike]) -> Vector:
    """Build a vector from any iterable of rational-like values."""
    return tuple(to_rational(v) for v in values)


def zero_vector(dim: int) -> Vector:
    """Return the zero vector of the given length."""
    return (S.Zero,) * dim


def unit_vector(dim: int, index: int) -> Vector:
    """Return the standard basis vector e_index of length dim."""
    if not 0 <= index < dim:
        raise DimensionMismatchError(f"Basis index {index} out of range for dimension {dim}")
    return tuple(S.One if i == index else S.Zero for i in range(dim))


def _check_same_length(x: Vector, y: Vector) -> None:
    if len(x) != len(y):
        raise DimensionMismatchError(f"Vector lengths differ: {len(x)} != {len(y)}")


def add_vectors(x: Vector, y: Vector) -> Vector:
    """Componentwise sum."""
    _check_same_length(x, y)
    return tuple(a + b for a, b in zip(x, y))


def sub_vectors(x: Vector, y: Vector) -> Vector:
    """Componentwise difference x - y."""
    _check_same_length(x, y)
    return tuple(a - b for a, b in zip(x, y))


def scale_vector(c: RationalLike, x: Vector) -> Vector:
    """Scalar multiple c * x."""
    c = to_rational(c)
    return tuple(c * a for a in x)


def is_zero_vector(x: Vector) -> bool:
    """True when every entry is zero."""
    return all(a == 0 for a in x)


def linear_combination(
    coefficients: Sequence[Rational], vectors: Sequence[Vector], dim: int
) -> Vector:
    """Return sum(c_i * v_i); an empty combination is the zero vector of length dim."""
    if len(coefficients) != len(vectors):
        raise DimensionMismatchError("Coefficient and vector counts differ")
    acc = [S.Zero] * dim
    for c, v in zip(coefficients, vectors):
        if c == 0:
            continue
        if len(v) != dim:
            raise DimensionMismatchError(f"Expected vectors of length {dim}, got {len(v)}")
        for k, entry in enumerate(v):
            if entry != 0:
                acc[k] += c * entry
    return tuple(acc)


def format_combination(v: Vector, names: Sequence[str]) -> str:
    """Readable combination such as "X", "-F" or "E + 1/2*F"; "0" for the zero vector."""
    text = ""
    for name, c in zip(names, v):
        if c == 0:
            continue
        magnitude = abs(Rational(c))
        term = name if magnitude == 1 else f"{format_rational(magnitude)}*{name}"
        if not text:
            text = f"-{term}" if c < 0 else term
        else:
            text += f" - {term}" if c < 0 else f" + {term}"
    return text or "0"


@dataclass(frozen=True)
class ExactMatrix:
    """
    Rational matrix of a linear map between coordinate spaces.

    A matrix with `rows` rows and `cols` columns maps vectors of length
    `cols` to vectors of length `rows`. Empty shapes (0 x m, m x 0) are
    valid and behave as zero maps.

    Attributes:
        rows: Number of rows (codomain dimension)
        cols: Number of columns (domain dimension)
        entries: Underlying sympy ImmutableMatrix
    """

    rows: int
    cols: int
    entries: ImmutableMatrix
    _sparse_rows: tuple[tuple[tuple[int, Rational], ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        """Validate shape and cache the non-zero entries per row."""
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError(f"Negative matrix shape: {self.rows}x{self.cols}")
        if tuple(self.entries.shape) != (self.rows, self.cols):
            raise DimensionMismatchError(
                f"Entry grid has shape {self.entries.shape}, declared {self.rows}x{self.cols}"
            )
        sparse = tuple(
            tuple(
                (j, self.entries[i, j]) for j in range(self.cols) if self.entries[i, j] != 0
            )
            for i in range(self.rows)
        )
        object.__setattr__(self, "_sparse_rows", sparse)

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[RationalLike]], cols: int | None = None
    ) -> "ExactMatrix":
        """
        Build a matrix from row lists.

        Args:
            rows: Row-major entries
            cols: Column count, required when there are no rows

        Raises:
            DimensionMismatchError: If rows have different lengths
        """
        n_rows = len(rows)
        if cols is None:
            if n_rows == 0:
                raise DimensionMismatchError("Column count is required for a matrix with no rows")
            cols = len(rows[0])
        flat: list[Rational] = []
        for row in rows:
            if len(row) != cols:
                raise DimensionMismatchError(f"Row of length {len(row)} in a {cols}-column matrix")
            flat.extend(to_rational(v) for v in row)
        return cls(n_rows, cols, ImmutableMatrix(n_rows, cols, flat))

    @classmethod
    def from_columns(cls, columns: Sequence[Vector], rows: int) -> "ExactMatrix":
        """Build a matrix whose j-th column is columns[j]."""
        for col in columns:
            if len(col) != rows:
                raise DimensionMismatchError(f"Column of length {len(col)}, expected {rows}")
        grid = [[columns[j][i] for j in range(len(columns))] for i in range(rows)]
        return cls.from_rows(grid, cols=len(columns))

    @classmethod
    def from_function(
        cls, rows: int, cols: int, entry: Callable[[int, int], RationalLike]
    ) -> "ExactMatrix":
        """Build a matrix from an entry function (i, j) -> value."""
        return cls.from_rows([[entry(i, j) for j in range(cols)] for i in range(rows)], cols=cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        """Zero matrix of the given shape."""
        return cls(rows, cols, ImmutableMatrix(rows, cols, [S.Zero] * (rows * cols)))

    @classmethod
    def identity(cls, dim: int) -> "ExactMatrix":
        """Identity matrix."""
        return cls.from_function(dim, dim, lambda i, j: 1 if i == j else 0)

    @staticmethod
    def hstack(*blocks: "ExactMatrix") -> "ExactMatrix":
        """Concatenate matrices with equal row counts side by side."""
        if not blocks:
            raise DimensionMismatchError("hstack needs at least one block")
        rows = blocks[0].rows
        if any(b.rows != rows for b in blocks):
            raise DimensionMismatchError("hstack blocks must share the row count")
        grid = [[v for b in blocks for v in b.row(i)] for i in range(rows)]
        return ExactMatrix.from_rows(grid, cols=sum(b.cols for b in blocks))

    @staticmethod
    def vstack(*blocks: "ExactMatrix") -> "ExactMatrix":
        """Stack matrices with equal column counts vertically."""
        if not blocks:
            raise DimensionMismatchError("vstack needs at least one block")
        cols = blocks[0].cols
        if any(b.cols != cols for b in blocks):
            raise DimensionMismatchError("vstack blocks must share the column count")
        grid = [list(b.row(i)) for b in blocks for i in range(b.rows)]
        return ExactMatrix.from_rows(grid, cols=cols)

    @property
    def shape(self) -> tuple[int, int]:
        """(rows, cols)."""
        return (self.rows, self.cols)

    def entry(self, i: int, j: int) -> Rational:
        """Entry at row i, column j."""
        return self.entries[i, j]

    def row(self, i: int) -> Vector:
        """Row i as a vector."""
        return tuple(self.entries[i, j] for j in range(self.cols))

    def column(self, j: int) -> Vector:
        """Column j as a vector, i.e. the image of the j-th basis vector."""
        return tuple(self.entries[i, j] for i in range(self.rows))

    def to_rows(self) -> list[list[Rational]]:
        """Row-major nested lists."""
        return [list(self.row(i)) for i in range(self.rows)]

    def apply(self, x: Vector) -> Vector:
        """Return the image of x."""
        if len(x) != self.cols:
            raise DimensionMismatchError(
                f"Cannot apply a {self.rows}x{self.cols} matrix to a vector of length {len(x)}"
            )
        out = []
        for sparse_row in self._sparse_rows:
            acc = S.Zero
            for j, value in sparse_row:
                if x[j] != 0:
                    acc += value * x[j]
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        """Composition: (self @ other) x = self(other(x))."""
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"Cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}"
            )
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return ExactMatrix.zeros(self.rows, other.cols)
        return ExactMatrix(self.rows, other.cols, ImmutableMatrix(self.entries * other.entries))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        if self.rows == 0 or self.cols == 0:
            return self
        return ExactMatrix(self.rows, self.cols, ImmutableMatrix(self.entries + other.entries))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        if self.rows == 0 or self.cols == 0:
            return self
        return ExactMatrix(self.rows, self.cols, ImmutableMatrix(self.entries - other.entries))

    def __neg__(self) -> "ExactMatrix":
        return self.scale(-1)

    def scale(self, c: RationalLike) -> "ExactMatrix":
        """Scalar multiple."""
        c = to_rational(c)
        return ExactMatrix.from_function(self.rows, self.cols, lambda i, j: c * self.entries[i, j])

    def transpose(self) -> "ExactMatrix":
        """Transposed matrix."""
        return ExactMatrix.from_function(self.cols, self.rows, lambda i, j: self.entries[j, i])

    def is_zero(self) -> bool:
        """True when every entry vanishes (always true for empty shapes)."""
        return all(not row for row in self._sparse_rows)

    def rank(self) -> int:
        """Exact rank."""
        if self.rows == 0 or self.cols == 0 or self.is_zero():
            return 0
        return int(self.entries.rank())

    def inverse(self) -> "ExactMatrix":
        """
        Exact inverse of a square matrix.

        Raises:
            DimensionMismatchError: If the matrix is not square or is singular
        """
        if self.rows != self.cols:
            raise DimensionMismatchError(f"Cannot invert a {self.rows}x{self.cols} matrix")
        if self.rows == 0:
            return self
        if self.rank() != self.rows:
            raise DimensionMismatchError("Matrix is singular")
        return ExactMatrix(self.rows, self.cols, ImmutableMatrix(self.entries.inv()))

    def nonzero_entries(self) -> Iterable[tuple[int, int, Rational]]:
        """Iterate (i, j, value) over non-zero entries in row-major order."""
        for i, sparse_row in enumerate(self._sparse_rows):
            for j, value in sparse_row:
                yield i, j, value

    def _check_same_shape(self, other: "ExactMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Shapes differ: {self.shape} != {other.shape}")


@dataclass(frozen=True)
class Subspace:
    """
    Linear subspace of a coordinate space, in canonical form.

    The basis is the list of non-zero rows of the reduced row echelon form
    of any spanning set, so two Subspace objects are equal exactly when
    they describe the same subspace.

    Attributes:
        ambient_dim: Dimension of the coordinate space
        basis: Canonical basis vectors
        pivots: Pivot column of each basis vector (derived)
    """

    ambient_dim: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self) -> None:
        """Check that the basis is already in reduced row echelon form."""
        pivots = []
        for vector in self.basis:
            if len(vector) != self.ambient_dim:
                raise DimensionMismatchError(
                    f"Basis vector of length {len(vector)} in ambient dimension {self.ambient_dim}"
                )
            lead = next((j for j, v in enumerate(vector) if v != 0), None)
            if lead is None or vector[lead] != 1:
                raise ValueError("Subspace basis must be in reduced row echelon form")
            if pivots and lead <= pivots[-1]:
                raise ValueError("Subspace pivots must be strictly increasing")
            pivots.append(lead)
        for r, pivot in enumerate(pivots):
            for s, other in enumerate(self.basis):
                if s != r and other[pivot] != 0:
                    raise ValueError("Subspace basis must be in reduced row echelon form")
        object.__setattr__(self, "pivots", tuple(pivots))

    @classmethod
    def span(cls, vectors: Iterable[Vector], ambient_dim: int) -> "Subspace":
        """Canonical subspace spanned by the given vectors."""
        rows = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(
                    f"Vector of length {len(v)} in ambient dimension {ambient_dim}"
                )
            if not is_zero_vector(v):
                rows.append(list(v))
        if not rows:
            return cls(ambient_dim, ())

        reduced, pivot_columns = ImmutableMatrix(rows).rref()
        basis = tuple(
            tuple(Rational(reduced[r, j]) for j in range(ambient_dim))
            for r in range(len(pivot_columns))
        )
        return cls(ambient_dim, basis)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        """The zero subspace."""
        return cls(ambient_dim, ())

    @classmethod
    def whole(cls, ambient_dim: int) -> "Subspace":
        """The whole coordinate space."""
        return cls(ambient_dim, tuple(unit_vector(ambient_dim, i) for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        """Dimension of the subspace."""
        return len(self.basis)

    def is_zero(self) -> bool:
        """True for the zero subspace."""
        return not self.basis

    def embed(self, coordinates: Vector) -> Vector:
        """Ambient vector with the given coordinates in the canonical basis."""
        if len(coordinates) != self.dim:
            raise DimensionMismatchError(
                f"Expected {self.dim} coordinates, got {len(coordinates)}"
            )
        return linear_combination(coordinates, self.basis, self.ambient_dim)

    def coordinates(self, vector: Vector) -> Vector:
        """
        Coordinates of an ambient vector in the canonical basis.

        Raises:
            SubspaceMembershipError: If the vector is not in the subspace
        """
        if len(vector) != self.ambient_dim:
            raise DimensionMismatchError(
                f"Vector of length {len(vector)} in ambient dimension {self.ambient_dim}"
            )
        coords = tuple(vector[p] for p in self.pivots)
        if self.embed(coords) != tuple(vector):
            raise SubspaceMembershipError("Vector does not lie in the subspace")
        return coords

    def contains(self, vector: Vector) -> bool:
        """Exact membership test."""
        try:
            self.coordinates(vector)
        except SubspaceMembershipError:
            return False
        return True

    def inclusion_matrix(self) -> ExactMatrix:
        """ambient_dim x dim matrix whose columns are the basis vectors."""
        return ExactMatrix.from_columns(list(self.basis), self.ambient_dim)

    def coordinate_matrix(self) -> ExactMatrix:
        """
        dim x ambient_dim matrix reading coordinates at the pivot columns.

        It is a left inverse of inclusion_matrix; on vectors outside the
        subspace its output is meaningless.
        """
        return ExactMatrix.from_function(
            self.dim, self.ambient_dim, lambda r, j: 1 if j == self.pivots[r] else 0
        )

    def is_subspace_of(self, other: "Subspace") -> bool:
        """Containment test."""
        return all(other.contains(v) for v in self.basis)


def kernel(m: ExactMatrix) -> Subspace:
    """
    Exact null space of a matrix.

    dim(kernel) = cols - rank(m) holds by construction.
    """
    if m.cols == 0:
        return Subspace.zero(0)
    if m.rows == 0 or m.is_zero():
        return Subspace.whole(m.cols)

    reduced, pivots = m.entries.rref()
    pivot_set = set(pivots)
    vectors = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [S.Zero] * m.cols
        v[free] = S.One
        for r, p in enumerate(pivots):
            v[p] = -Rational(reduced[r, free])
        vectors.append(tuple(v))
    return Subspace.span(vectors, m.cols)


def image(m: ExactMatrix) -> Subspace:
    """Column space of a matrix."""
    return Subspace.span([m.column(j) for j in range(m.cols)], m.rows)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """
    Exact intersection of two subspaces of the same ambient space.

    Raises:
        DimensionMismatchError: If the ambient dimensions differ
    """
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(
            f"Cannot intersect subspaces of dimensions {a.ambient_dim} and {b.ambient_dim}"
        )
    if a.is_zero() or b.is_zero():
        return Subspace.zero(a.ambient_dim)

    # a c = b c' exactly when (c, c') is in the kernel of [A | -B]
    stacked = ExactMatrix.hstack(a.inclusion_matrix(), -b.inclusion_matrix())
    solutions = kernel(stacked)
    return Subspace.span([a.embed(c[: a.dim]) for c in solutions.basis], a.ambient_dim)


@dataclass(frozen=True)
class BilinearMap:
    """
    Bilinear map between coordinate spaces, stored as a rank-3 table.

    values[i][j] is the image of the basis pair (e_i, e_j). Structure
    constants, actions, Peiffer pairings and DGLA brackets all use it.

    Attributes:
        left_dim: Dimension of the first argument
        right_dim: Dimension of the second argument
        target_dim: Dimension of the result
        values: Nested tuple of result vectors
    """

    left_dim: int
    right_dim: int
    target_dim: int
    values: tuple[tuple[Vector, ...], ...]
    _nonzero: tuple[tuple[int, int, tuple[tuple[int, Rational], ...]], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        """Validate the table shape and index its non-zero entries."""
        if len(self.values) != self.left_dim:
            raise DimensionMismatchError(
                f"Bilinear table has {len(self.values)} rows, expected {self.left_dim}"
            )
        nonzero = []
        for i, row in enumerate(self.values):
            if len(row) != self.right_dim:
                raise DimensionMismatchError(
                    f"Bilinear table row {i} has {len(row)} entries, expected {self.right_dim}"
                )
            for j, value in enumerate(row):
                if len(value) != self.target_dim:
                    raise DimensionMismatchError(
                        f"Bilinear value ({i}, {j}) has length {len(value)}, "
                        f"expected {self.target_dim}"
                    )
                sparse = tuple((k, v) for k, v in enumerate(value) if v != 0)
                if sparse:
                    nonzero.append((i, j, sparse))
        object.__setattr__(self, "_nonzero", tuple(nonzero))

    @classmethod
    def zero(cls, left_dim: int, right_dim: int, target_dim: int) -> "BilinearMap":
        """The zero bilinear map."""
        row = (zero_vector(target_dim),) * right_dim
        return cls(left_dim, right_dim, target_dim, (row,) * left_dim)

    @classmethod
    def from_function(
        cls,
        left_dim: int,
        right_dim: int,
        target_dim: int,
        value: Callable[[int, int], Vector],
    ) -> "BilinearMap":
        """Tabulate a function of basis indices (i, j) -> vector."""
        values = tuple(
            tuple(tuple(value(i, j)) for j in range(right_dim)) for i in range(left_dim)
        )
        return cls(left_dim, right_dim, target_dim, values)

    @classmethod
    def from_array(
        cls,
        array: Sequence[Sequence[Sequence[RationalLike]]],
        left_dim: int,
        right_dim: int,
        target_dim: int,
    ) -> "BilinearMap":
        """Build from a nested rank-3 array of rational-like entries."""
        if len(array) != left_dim:
            raise DimensionMismatchError(f"Expected {left_dim} rows, got {len(array)}")
        values = []
        for i, row in enumerate(array):
            if len(row) != right_dim:
                raise DimensionMismatchError(
                    f"Row {i}: expected {right_dim} entries, got {len(row)}"
                )
            values.append(tuple(as_vector(v) for v in row))
        return cls(left_dim, right_dim, target_dim, tuple(values))

    def value(self, i: int, j: int) -> Vector:
        """Image of the basis pair (e_i, e_j)."""
        return self.values[i][j]

    def apply(self, x: Vector, y: Vector) -> Vector:
        """Evaluate the bilinear map on (x, y)."""
        if len(x) != self.left_dim or len(y) != self.right_dim:
            raise DimensionMismatchError(
                f"Arguments of lengths ({len(x)}, {len(y)}) for a "
                f"{self.left_dim}x{self.right_dim} bilinear map"
            )
        acc = [S.Zero] * self.target_dim
        for i, j, sparse in self._nonzero:
            xi = x[i]
            if xi == 0:
                continue
            yj = y[j]
            if yj == 0:
                continue
            c = xi * yj
            for k, v in sparse:
                acc[k] += c * v
        return tuple(acc)

    def is_zero(self) -> bool:
        """True when every value vanishes."""
        return not self._nonzero

    def nonzero_entries(self) -> Iterable[tuple[int, int, Vector]]:
        """Iterate (i, j, value) over non-zero table entries."""
        for i, j, _ in self._nonzero:
            yield i, j, self.values[i][j]

    def to_array(self) -> list[list[list[Rational]]]:
        """Nested-list rank-3 array."""
        return [[list(v) for v in row] for row in self.values]

    def transformed(
        self, left: ExactMatrix, right: ExactMatrix, target: ExactMatrix
    ) -> "BilinearMap":
        """
        Change of coordinates: (x, y) -> target(B(left x, right y)).

        Args:
            left: Matrix taking new left coordinates to old ones
            right: Matrix taking new right coordinates to old ones
            target: Matrix taking old result coordinates to new ones
        """
        if (
            left.rows != self.left_dim
            or right.rows != self.right_dim
            or target.cols != self.target_dim
        ):
            raise DimensionMismatchError("Coordinate change does not match the bilinear map")
        return BilinearMap.from_function(
            left.cols,
            right.cols,
            target.rows,
            lambda i, j: target.apply(self.apply(left.column(i), right.column(j))),
        )


__all__ = [
    "BilinearMap",
    "ExactMatrix",
    "RationalLike",
    "Subspace",
    "Vector",
    "add_vectors",
    "as_vector",
    "format_rational",
    "image",
    "intersect",
    "is_zero_vector",
    "kernel",
    "linear_combination",
    "parse_rational",
    "scale_vector",
    "sub_vectors",
    "to_rational",
    "unit_vector",
    "zero_vector",
]
