"""Builders for the Vidinli family and its relatives.

The central object is the Vidinli algebra V_{2n+1}: odd-dimensional rational
space with distinguished unit direction e1 and product

    a * b = (a.e1) b + (b.e1) a - (a.b) e1 + omega(a, b) e1,

where omega is a skew form on the hyperplane V0 = e1-perp (the standard one
couples the pairs (e_{2i}, e_{2i+1})).  Also provided: the symmetric-part
Jordan algebras, Heisenberg Lie algebras, spin factors, quaternions, the
twisted 3-dimensional products, and the 7-dimensional cross product with its
directional multiplications.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .algebra import Algebra, Element, multiply
from .linalg import Matrix, Vector, det, frac

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class SkewForm:
    """Skew-symmetric bilinear form on V0 = e1-perp, in the ordered basis
    (e2, ..., e_{2n+1}).  Degenerate forms are allowed; nondegeneracy is
    checked on demand."""

    n: int
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.rows != 2 * self.n or self.matrix.cols != 2 * self.n:
            raise ValueError("skew form matrix must be 2n x 2n")
        if self.matrix.transpose() != -self.matrix:
            raise ValueError("form matrix is not skew-symmetric")

    @staticmethod
    def from_pairs(n: int, pairs: Mapping[tuple[int, int], object]) -> "SkewForm":
        """Build from values on global basis pairs (i, j) with 2 <= i, j;
        skew-symmetry fills in the transposed entries."""
        m = [[_ZERO] * (2 * n) for _ in range(2 * n)]
        for (i, j), val in pairs.items():
            v = frac(val)
            m[i - 2][j - 2] = v
            m[j - 2][i - 2] = -v
        return SkewForm(n, Matrix.from_rows(m))

    def basis_value(self, i: int, j: int) -> Fraction:
        """omega(e_i, e_j) for global basis indices; e1 pairs to zero."""
        if i == 1 or j == 1:
            return _ZERO
        return self.matrix.entry(i - 1, j - 1)

    def apply(self, a: Vector, b: Vector) -> Fraction:
        """omega(a, b) for full (2n+1)-dimensional vectors; the e1
        coordinates do not contribute."""
        total = _ZERO
        for i in range(2 * self.n):
            ai = a.entries[i + 1]
            if ai == 0:
                continue
            row = self.matrix.entries[i]
            for j in range(2 * self.n):
                bj = b.entries[j + 1]
                if bj != 0 and row[j] != 0:
                    total += ai * row[j] * bj
        return total

    def is_nondegenerate(self) -> bool:
        return det(self.matrix) != 0

    def radical_dim(self) -> int:
        from .linalg import rref
        return 2 * self.n - rref(self.matrix)[1]


def standard_symplectic(n: int) -> SkewForm:
    """Block-diagonal [[0,1],[-1,0]] form: omega(e_{2i}, e_{2i+1}) = 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return SkewForm.from_pairs(n, {(2 * i, 2 * i + 1): 1 for i in range(1, n + 1)})


def _with_unit_products(dim: int, constants: dict[tuple[int, int], Vector]) -> dict:
    """Add the unit row and column for a unit at basis index 1."""
    for j in range(1, dim + 1):
        constants[(1, j)] = Vector.basis(dim, j)
        if j != 1:
            constants[(j, 1)] = Vector.basis(dim, j)
    return constants


def vidinli_type(n: int, omega: SkewForm, label: str = "") -> Algebra:
    """Vidinli-type algebra of dimension 2n+1 for an arbitrary skew form.

    Basis products: e1 is the unit; e_i * e_i = -e1 for i >= 2; and
    e_i * e_j = omega(e_i, e_j) e1 for distinct i, j >= 2.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if omega.n != n:
        raise ValueError("skew form size does not match n")
    dim = 2 * n + 1
    constants: dict[tuple[int, int], Vector] = {}
    for i in range(2, dim + 1):
        constants[(i, i)] = Vector.basis(dim, 1).scale(-1)
        for j in range(2, dim + 1):
            if i != j:
                w = omega.basis_value(i, j)
                if w != 0:
                    constants[(i, j)] = Vector.basis(dim, 1).scale(w)
    _with_unit_products(dim, constants)
    return Algebra(dim, constants, unit=1, label=label or f"V{dim}~")


@lru_cache(maxsize=None)
def vidinli(n: int) -> Algebra:
    """The Vidinli algebra V_{2n+1} with the standard symplectic form.

    Cached: algebras are immutable, so repeated calls share one instance.
    """
    return vidinli_type(n, standard_symplectic(n), label=f"V{2 * n + 1}")


def vidinli_jordan(m: int) -> Algebra:
    """The commutative unital Jordan algebra of dimension m with product
    a o b = (a.e1) b + (b.e1) a - (a.b) e1 (the symmetric part alone)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    constants: dict[tuple[int, int], Vector] = {}
    for i in range(2, m + 1):
        constants[(i, i)] = Vector.basis(m, 1).scale(-1)
    _with_unit_products(m, constants)
    return Algebra(m, constants, unit=1, label=f"VJ{m}")


def heisenberg(n: int) -> Algebra:
    """Heisenberg Lie algebra h_n, with the bracket stored as the algebra
    product.  Basis order (z, p1, q1, ..., pn, qn); [p_i, q_i] = z; no unit."""
    if n < 1:
        raise ValueError("n must be >= 1")
    dim = 2 * n + 1
    constants: dict[tuple[int, int], Vector] = {}
    for i in range(1, n + 1):
        constants[(2 * i, 2 * i + 1)] = Vector.basis(dim, 1)
        constants[(2 * i + 1, 2 * i)] = Vector.basis(dim, 1).scale(-1)
    return Algebra(dim, constants, unit=None, label=f"h{n}")


def jspin(n: int) -> Algebra:
    """Spin factor Jordan algebra of dimension n+1: unit first, then an
    orthonormal part with v_i o v_i = unit and v_i o v_j = 0."""
    if n < 1:
        raise ValueError("n must be >= 1")
    dim = n + 1
    constants: dict[tuple[int, int], Vector] = {}
    for i in range(2, dim + 1):
        constants[(i, i)] = Vector.basis(dim, 1)
    _with_unit_products(dim, constants)
    return Algebra(dim, constants, unit=1, label=f"JSpin{n}")


def complex_algebra() -> Algebra:
    """The complex numbers as a 2-dimensional algebra: basis (1, i)."""
    constants = {(2, 2): Vector.of([-1, 0])}
    _with_unit_products(2, constants)
    return Algebra(2, constants, unit=1, label="C")


def quaternions() -> Algebra:
    """The quaternions: basis (1, i, j, k) with the standard table."""
    dim = 4
    e = lambda k, s=1: Vector.basis(dim, k).scale(s)
    constants: dict[tuple[int, int], Vector] = {
        (2, 2): e(1, -1), (3, 3): e(1, -1), (4, 4): e(1, -1),
        (2, 3): e(4), (3, 2): e(4, -1),
        (3, 4): e(2), (4, 3): e(2, -1),
        (4, 2): e(3), (2, 4): e(3, -1),
    }
    _with_unit_products(dim, constants)
    return Algebra(dim, constants, unit=1, label="H")


def dual_numbers() -> Algebra:
    """QQ[eps]/(eps^2): 2-dimensional unital algebra with a square-zero
    generator (used as a non-simple building block in pushout tests)."""
    constants: dict[tuple[int, int], Vector] = {}
    _with_unit_products(2, constants)
    return Algebra(2, constants, unit=1, label="QQ[eps]")


def twisted_v3(t, u, v) -> Algebra:
    """The twisted 3-dimensional product: e2*e3 = t e1 + u e2 + v e3 and
    e3*e2 its negative, squares -e1, unit e1.  (1, 0, 0) is the Vidinli
    multiplication itself and returns vidinli(1) verbatim."""
    t, u, v = frac(t), frac(u), frac(v)
    if (t, u, v) == (1, 0, 0):
        return vidinli(1)
    tw = Vector.of([t, u, v])
    constants = {
        (2, 2): Vector.of([-1, 0, 0]),
        (3, 3): Vector.of([-1, 0, 0]),
        (2, 3): tw,
        (3, 2): -tw,
    }
    _with_unit_products(3, constants)
    return Algebra(3, constants, unit=1, label=f"V3t({t},{u},{v})")


def cross3(a: Vector, b: Vector) -> Vector:
    """Classical cross product on QQ^3."""
    a1, a2, a3 = a.entries
    b1, b2, b3 = b.entries
    return Vector.of([a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1])


def coordfree_product(v: Vector, a: Vector, b: Vector) -> Vector:
    """Coordinate-free 3-dimensional product
    (a.e1) b + (b.e1) a - (a.b) e1 + (e1.(a x b)) v; with v = (t, u, v) it
    agrees with the twisted product, and with v = e1 with vidinli(1)."""
    if not (v.dim == a.dim == b.dim == 3):
        raise ValueError("coordfree_product needs 3-dimensional inputs")
    e1 = Vector.basis(3, 1)
    out = b.scale(a.coord(1)) + a.scale(b.coord(1)) - e1.scale(a.dot(b))
    return out + v.scale(cross3(a, b).coord(1))


def quaternion_pushforward(a: Vector, b: Vector) -> Vector:
    """Push-forward of quaternion multiplication onto QQ^3 through the maps
    nu(a1,a2,a3) = (a1,0,a2,a3) and pi(x1,x2,x3,x4) = (x1+x2, x3, x4);
    equals the vidinli(1) product."""
    if a.dim != 3 or b.dim != 3:
        raise ValueError("inputs must be 3-dimensional")
    h = quaternions()
    nu = lambda x: h.element([x.coord(1), 0, x.coord(2), x.coord(3)])
    prod = multiply(h, nu(a), nu(b)).coords
    return Vector.of([prod.coord(1) + prod.coord(2), prod.coord(3), prod.coord(4)])


def cross7_formula(u: Vector, v: Vector) -> Vector:
    """The 7-dimensional cross product, component by component."""
    if u.dim != 7 or v.dim != 7:
        raise ValueError("inputs must be 7-dimensional")
    u1, u2, u3, u4, u5, u6, u7 = u.entries
    v1, v2, v3, v4, v5, v6, v7 = v.entries
    return Vector.of([
        u2 * v3 - u3 * v2 + u4 * v5 - u5 * v4 + u6 * v7 - u7 * v6,
        -u1 * v3 + u3 * v1 + u4 * v6 - u6 * v4 - u5 * v7 + u7 * v5,
        u1 * v2 - u2 * v1 - u4 * v7 + u7 * v4 + u5 * v6 - u6 * v5,
        -u1 * v5 + u5 * v1 - u2 * v6 + u6 * v2 + u3 * v7 - u7 * v3,
        u1 * v4 - u4 * v1 + u2 * v7 - u7 * v2 - u3 * v6 + u6 * v3,
        -u1 * v7 + u7 * v1 + u2 * v4 - u4 * v2 + u3 * v5 - u5 * v3,
        u1 * v6 - u6 * v1 - u2 * v5 + u5 * v2 + u3 * v4 - u4 * v3,
    ])


@dataclass(frozen=True)
class CrossProduct7:
    """Basis table of the 7-dimensional cross product (i, j) -> e_i x e_j."""

    table: Mapping[tuple[int, int], Vector]

    def basis_product(self, i: int, j: int) -> Vector:
        if i == j:
            return Vector.zero(7)
        return self.table[(i, j)]

    def apply(self, u: Vector, v: Vector) -> Vector:
        out = Vector.zero(7)
        for i in range(1, 8):
            ui = u.coord(i)
            if ui == 0:
                continue
            for j in range(1, 8):
                vj = v.coord(j)
                if vj != 0 and i != j:
                    out = out + self.table[(i, j)].scale(ui * vj)
        return out


def cross7() -> CrossProduct7:
    """Cross-product table built from the component formula on basis pairs."""
    table = {}
    for i in range(1, 8):
        for j in range(1, 8):
            if i != j:
                table[(i, j)] = cross7_formula(Vector.basis(7, i), Vector.basis(7, j))
    return CrossProduct7(table)


def vidinli7_directional(i: int) -> Algebra:
    """Directional 7-dimensional multiplication with principal axis e_i:
    a *_i b = (a.e_i) b + (b.e_i) a - (a.b) e_i + (e_i.(a x b)) e_i."""
    if not 1 <= i <= 7:
        raise ValueError("direction index must be in 1..7")
    ei = Vector.basis(7, i)
    constants: dict[tuple[int, int], Vector] = {}
    for a in range(1, 8):
        ea = Vector.basis(7, a)
        for b in range(1, 8):
            eb = Vector.basis(7, b)
            out = eb.scale(ea.coord(i)) + ea.scale(eb.coord(i)) - ei.scale(ea.dot(eb))
            out = out + ei.scale(cross7_formula(ea, eb).coord(i))
            if not out.is_zero():
                constants[(a, b)] = out
    return Algebra(7, constants, unit=i, label=f"V7dir{i}")


# --- element operations in the Vidinli family -------------------------------


def _require_unit_first(algebra: Algebra) -> None:
    if algebra.unit != 1:
        raise ValueError("operation requires the unit at basis index 1")


def conjugate(algebra: Algebra, a: Element) -> Element:
    """Reflection across the unit axis: 2(a.e1) e1 - a."""
    _require_unit_first(algebra)
    coords = list(a.coords.entries)
    coords = [coords[0]] + [-c for c in coords[1:]]
    return algebra.element(coords)


def inverse(algebra: Algebra, a: Element) -> Element:
    """Two-sided inverse conj(a) / |a|^2 of a nonzero element."""
    _require_unit_first(algebra)
    nsq = a.coords.norm_sq()
    if nsq == 0:
        raise ZeroDivisionError("zero has no inverse")
    return conjugate(algebra, a).scale(Fraction(1) / nsq)


def jordan_part(algebra: Algebra, a: Element, b: Element) -> Element:
    """Symmetric part (a.e1) b + (b.e1) a - (a.b) e1 (computed from the
    coordinate formula, independent of the table)."""
    _require_unit_first(algebra)
    e1 = Vector.basis(algebra.dim, 1)
    out = (b.coords.scale(a.coords.coord(1)) + a.coords.scale(b.coords.coord(1))
           - e1.scale(a.coords.dot(b.coords)))
    return algebra.element(out)


def lie_part(algebra: Algebra, a: Element, b: Element) -> Element:
    """Skew part, half the table commutator; equals omega(a, b) e1 in any
    Vidinli-type algebra."""
    diff = multiply(algebra, a, b) - multiply(algebra, b, a)
    return diff.scale(Fraction(1, 2))
