"""Exact linear algebra over the rationals.

Scalars are ``fractions.Fraction`` throughout.  No floating point is used
anywhere, so every rank, kernel and characteristic polynomial computed here
is exact.  All values are immutable after construction and all operations
are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

QQ = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    """Coerce an int, string ("p/q") or Fraction to a Fraction."""
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Vector:
    """Dense rational vector.  Entries are 0-based internally; the public
    basis convention is 1-based (``e1`` is ``entries[0]``)."""

    entries: tuple[Fraction, ...]

    @staticmethod
    def of(values: Iterable) -> "Vector":
        return Vector(tuple(frac(v) for v in values))

    @staticmethod
    def zero(dim: int) -> "Vector":
        return Vector((ZERO,) * dim)

    @staticmethod
    def basis(dim: int, k: int) -> "Vector":
        """Standard basis vector e_k, 1-based."""
        if not 1 <= k <= dim:
            raise ValueError(f"basis index {k} out of range 1..{dim}")
        return Vector(tuple(ONE if i == k - 1 else ZERO for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def coord(self, k: int) -> Fraction:
        """1-based coordinate access."""
        return self.entries[k - 1]

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def __add__(self, other: "Vector") -> "Vector":
        return Vector(tuple(a + b for a, b in zip(self.entries, other.entries, strict=True)))

    def __sub__(self, other: "Vector") -> "Vector":
        return Vector(tuple(a - b for a, b in zip(self.entries, other.entries, strict=True)))

    def __neg__(self) -> "Vector":
        return Vector(tuple(-a for a in self.entries))

    def scale(self, c) -> "Vector":
        c = frac(c)
        return Vector(tuple(c * a for a in self.entries))

    def dot(self, other: "Vector") -> Fraction:
        return sum((a * b for a, b in zip(self.entries, other.entries, strict=True)), ZERO)

    def norm_sq(self) -> Fraction:
        return self.dot(self)

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


@dataclass(frozen=True)
class Matrix:
    """Dense rational matrix, row-major."""

    entries: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Matrix":
        tup = tuple(tuple(frac(v) for v in row) for row in rows)
        if tup and any(len(r) != len(tup[0]) for r in tup):
            raise ValueError("ragged rows")
        return Matrix(tup)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix(tuple((ZERO,) * cols for _ in range(rows)))

    @staticmethod
    def from_columns(cols: Sequence[Vector]) -> "Matrix":
        if not cols:
            raise ValueError("no columns")
        n = cols[0].dim
        return Matrix(tuple(tuple(c.entries[i] for c in cols) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> Vector:
        """1-based row."""
        return Vector(self.entries[i - 1])

    def column(self, j: int) -> Vector:
        """1-based column."""
        return Vector(tuple(r[j - 1] for r in self.entries))

    def entry(self, i: int, j: int) -> Fraction:
        """1-based entry access."""
        return self.entries[i - 1][j - 1]

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries, strict=True)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries, strict=True)))

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(tuple(-a for a in r) for r in self.entries))

    def scale(self, c) -> "Matrix":
        c = frac(c)
        return Matrix(tuple(tuple(c * a for a in r) for r in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        # Integer fast path: plain int arithmetic avoids per-step gcd
        # normalization and is exact either way.
        if (all(e.denominator == 1 for row in self.entries for e in row)
                and all(e.denominator == 1 for row in other.entries for e in row)):
            a = [[e.numerator for e in row] for row in self.entries]
            bt = list(zip(*[[e.numerator for e in row] for row in other.entries]))
            return Matrix(tuple(
                tuple(Fraction(sum(x * y for x, y in zip(row, col))) for col in bt)
                for row in a))
        bt = tuple(zip(*other.entries))
        return Matrix(tuple(
            tuple(sum((a * b for a, b in zip(row, col)), ZERO) for col in bt)
            for row in self.entries))

    def matvec(self, v: Vector) -> Vector:
        if self.cols != v.dim:
            raise ValueError("shape mismatch in matvec")
        return Vector(tuple(sum((a * b for a, b in zip(row, v.entries)), ZERO) for row in self.entries))

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.entries))) if self.entries else self

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ValueError("trace of non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), ZERO)

    def flatten(self) -> Vector:
        return Vector(tuple(e for row in self.entries for e in row))

    @staticmethod
    def unflatten(v: Vector, rows: int, cols: int) -> "Matrix":
        if v.dim != rows * cols:
            raise ValueError("length mismatch in unflatten")
        return Matrix(tuple(tuple(v.entries[i * cols + j] for j in range(cols)) for i in range(rows)))

    def is_zero(self) -> bool:
        return all(e == 0 for row in self.entries for e in row)

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)


@dataclass(frozen=True)
class Polynomial:
    """Univariate rational polynomial, coefficients in ascending degree.

    The zero polynomial is ``Polynomial(())``; otherwise the leading
    coefficient is nonzero.
    """

    coefficients: tuple[Fraction, ...]

    @staticmethod
    def of(coeffs: Iterable) -> "Polynomial":
        c = [frac(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        return Polynomial(tuple(c))

    @staticmethod
    def constant(c) -> "Polynomial":
        return Polynomial.of([c])

    @staticmethod
    def linear(constant, leading=ONE) -> "Polynomial":
        """leading*x + constant"""
        return Polynomial.of([constant, leading])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (ZERO,) * (n - len(self.coefficients))
        b = other.coefficients + (ZERO,) * (n - len(other.coefficients))
        return Polynomial.of(x + y for x, y in zip(a, b))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial(())
        out = [ZERO] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Polynomial.of(out)

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.of([1])
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self, x) -> Fraction:
        x = frac(x)
        acc = ZERO
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def evaluate_matrix(self, m: Matrix) -> Matrix:
        """Horner evaluation at a square matrix; degree-1 multiplications."""
        if not m.is_square():
            raise ValueError("polynomial evaluation needs a square matrix")
        n = m.rows
        eye = Matrix.identity(n)
        if self.is_zero():
            return Matrix.zeros(n, n)
        if self.degree == 0:
            return eye.scale(self.coefficients[0])
        c = self.coefficients
        acc = m.scale(c[-1]) + eye.scale(c[-2])
        for k in range(len(c) - 3, -1, -1):
            acc = acc @ m + eye.scale(c[k])
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                var = "x" if k == 1 else f"x^{k}"
                terms.append(var if c == 1 else (f"-{var}" if c == -1 else f"{c}*{var}"))
        return " + ".join(terms).replace("+ -", "- ")


class SpanBuilder:
    """Incrementally maintained reduced row-echelon span of rational vectors.

    Rows are kept fully reduced with pivot entry 1 at all times, so the row
    list sorted by pivot column is the canonical RREF basis of the span.
    """

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self._rows: list[list[Fraction]] = []
        self._pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: Sequence[Fraction]) -> list[Fraction]:
        v = list(vec)
        for row, p in zip(self._rows, self._pivots):
            c = v[p]
            if c != 0:
                for j in range(p, self.ambient_dim):
                    v[j] -= c * row[j]
        return v

    def contains(self, vec: Vector) -> bool:
        return all(e == 0 for e in self._reduce(vec.entries))

    def add(self, vec: Vector) -> bool:
        """Add a vector to the span.  Returns True iff the dimension grew."""
        if vec.dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        v = self._reduce(vec.entries)
        pivot = next((j for j, e in enumerate(v) if e != 0), None)
        if pivot is None:
            return False
        inv = ONE / v[pivot]
        v = [e * inv for e in v]
        for row in self._rows:
            c = row[pivot]
            if c != 0:
                for j in range(pivot, self.ambient_dim):
                    row[j] -= c * v[j]
        self._rows.append(v)
        self._pivots.append(pivot)
        return True

    def basis_rows(self) -> list[Vector]:
        order = sorted(range(len(self._rows)), key=lambda i: self._pivots[i])
        return [Vector(tuple(self._rows[i])) for i in order]

    def to_subspace(self) -> "Subspace":
        return Subspace(self.ambient_dim, tuple(self.basis_rows()))


@dataclass(frozen=True)
class Subspace:
    """Subspace of QQ^n with canonical RREF basis.

    Two subspaces are equal as values exactly when they are equal as
    subspaces, because the RREF basis with pivots in increasing column
    order is unique.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]

    @staticmethod
    def from_vectors(ambient_dim: int, vectors: Iterable[Vector]) -> "Subspace":
        sb = SpanBuilder(ambient_dim)
        for v in vectors:
            sb.add(v)
        return sb.to_subspace()

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, ())

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace.from_vectors(ambient_dim, (Vector.basis(ambient_dim, k) for k in range(1, ambient_dim + 1)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains_vector(self, v: Vector) -> bool:
        if v.dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        sb = SpanBuilder(self.ambient_dim)
        for b in self.basis:
            sb.add(b)
        return sb.contains(v)

    def contains(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return all(self.contains_vector(v) for v in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.from_vectors(self.ambient_dim, list(self.basis) + list(other.basis))


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form and rank.  Output keeps the input shape,
    with zero rows at the bottom."""
    sb = SpanBuilder(m.cols)
    for r in m.entries:
        sb.add(Vector(r))
    rows = [v.entries for v in sb.basis_rows()]
    rank = len(rows)
    rows += [(ZERO,) * m.cols] * (m.rows - rank)
    return Matrix(tuple(rows)), rank


def kernel_basis(m: Matrix) -> Subspace:
    """Null space of m, RREF-canonicalized."""
    reduced, rank = rref(m)
    pivots = []
    for i in range(rank):
        row = reduced.entries[i]
        pivots.append(next(j for j, e in enumerate(row) if e != 0))
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    vectors = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -reduced.entries[i][f]
        vectors.append(Vector(tuple(v)))
    return Subspace.from_vectors(m.cols, vectors)


def _charpoly_int(a: list[list[int]]) -> list[int]:
    """Faddeev-LeVerrier over the integers (all divisions are exact)."""
    n = len(a)
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    cs: list[int] = []
    for k in range(1, n + 1):
        prod = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        t = sum(prod[i][i] for i in range(n))
        ck, rem = divmod(-t, k)
        assert rem == 0
        cs.append(ck)
        m = prod
        for i in range(n):
            m[i][i] += ck
    return cs


def _charpoly_frac(a: tuple[tuple[Fraction, ...], ...]) -> list[Fraction]:
    n = len(a)
    m = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    cs: list[Fraction] = []
    for k in range(1, n + 1):
        prod = [[sum((a[i][t] * m[t][j] for t in range(n)), ZERO) for j in range(n)] for i in range(n)]
        t = sum((prod[i][i] for i in range(n)), ZERO)
        ck = -t / k
        cs.append(ck)
        m = prod
        for i in range(n):
            m[i][i] += ck
    return cs


def char_poly(m: Matrix) -> Polynomial:
    """Characteristic polynomial det(xI - m), monic, computed by the
    division-free Faddeev-LeVerrier recurrence."""
    if not m.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    if n == 0:
        return Polynomial.of([1])
    if all(e.denominator == 1 for row in m.entries for e in row):
        cs = _charpoly_int([[int(e) for e in row] for row in m.entries])
    else:
        cs = _charpoly_frac(m.entries)
    # det(xI - m) = x^n + c1 x^(n-1) + ... + cn
    return Polynomial.of([frac(c) for c in reversed(cs)] + [ONE])


def det(m: Matrix) -> Fraction:
    """Determinant via the characteristic polynomial: det(m) = (-1)^n chi(0)."""
    chi0 = char_poly(m).evaluate(0)
    return chi0 if m.rows % 2 == 0 else -chi0
