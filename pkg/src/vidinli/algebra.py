"""Structure-constant algebras over the rationals.

An algebra is a finite-dimensional vector space with a bilinear product
stored as a sparse table of basis products `e_i * e_j`.  Basis indices are
1-based everywhere (the unit, when present, is conventionally `e1`), which
matches the JSON interchange schema.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .linalg import Matrix, SpanBuilder, Subspace, Vector, frac


class Algebra:
    """Finite-dimensional algebra given by structure constants.

    `constants` maps 1-based basis pairs (i, j) to the product vector
    e_i * e_j; absent pairs mean the zero product.  Instances are treated
    as immutable after construction.
    """

    def __init__(self, dim: int, constants: Mapping[tuple[int, int], Vector],
                 unit: Optional[int] = None, label: str = ""):
        if dim < 1:
            raise ValueError("dimension must be positive")
        if unit is not None and not 1 <= unit <= dim:
            raise ValueError(f"unit index {unit} out of range")
        self.dim = dim
        self.unit = unit
        self.label = label
        table = [[None] * dim for _ in range(dim)]
        cleaned: dict[tuple[int, int], Vector] = {}
        for (i, j), v in constants.items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise ValueError(f"constant index ({i},{j}) out of range")
            if v.dim != dim:
                raise ValueError(f"product vector for ({i},{j}) has wrong length")
            if v.is_zero():
                continue
            cleaned[(i, j)] = v
            table[i - 1][j - 1] = v
        zero = Vector.zero(dim)
        self.constants = cleaned
        self._table = tuple(tuple(v if v is not None else zero for v in row) for row in table)

    def product_of_basis(self, i: int, j: int) -> Vector:
        """e_i * e_j, 1-based."""
        return self._table[i - 1][j - 1]

    def element(self, coords) -> "Element":
        v = coords if isinstance(coords, Vector) else Vector.of(coords)
        return Element(self, v)

    def basis_element(self, i: int) -> "Element":
        return Element(self, Vector.basis(self.dim, i))

    def zero_element(self) -> "Element":
        return Element(self, Vector.zero(self.dim))

    def unit_element(self) -> "Element":
        if self.unit is None:
            raise ValueError(f"algebra {self.label!r} has no unit")
        return self.basis_element(self.unit)

    def same_table(self, other: "Algebra") -> bool:
        """Structure-constant equality (dimension, unit index and all basis
        products); labels are ignored."""
        return (self.dim == other.dim and self.unit == other.unit
                and self._table == other._table)

    def relabel(self, label: str) -> "Algebra":
        return Algebra(self.dim, self.constants, self.unit, label)

    def unit_law_holds(self) -> bool:
        if self.unit is None:
            return True
        u = self.unit
        return all(self.product_of_basis(u, i) == Vector.basis(self.dim, i)
                   and self.product_of_basis(i, u) == Vector.basis(self.dim, i)
                   for i in range(1, self.dim + 1))

    def is_commutative(self) -> bool:
        return all(self.product_of_basis(i, j) == self.product_of_basis(j, i)
                   for i in range(1, self.dim + 1) for j in range(i, self.dim + 1))

    def is_anticommutative(self) -> bool:
        return all(self.product_of_basis(i, j) == -self.product_of_basis(j, i)
                   for i in range(1, self.dim + 1) for j in range(i, self.dim + 1))

    def __repr__(self) -> str:
        return f"Algebra({self.label or '?'}, dim={self.dim}, unit={self.unit})"


@dataclass(frozen=True)
class Element:
    """An element of an Algebra, as a coefficient vector in its basis."""

    algebra: Algebra
    coords: Vector

    def __post_init__(self):
        if self.coords.dim != self.algebra.dim:
            raise ValueError("coordinate length does not match algebra dimension")

    def __add__(self, other: "Element") -> "Element":
        _same_algebra(self, other)
        return Element(self.algebra, self.coords + other.coords)

    def __sub__(self, other: "Element") -> "Element":
        _same_algebra(self, other)
        return Element(self.algebra, self.coords - other.coords)

    def __neg__(self) -> "Element":
        return Element(self.algebra, -self.coords)

    def scale(self, c) -> "Element":
        return Element(self.algebra, self.coords.scale(c))

    def __mul__(self, other: "Element") -> "Element":
        return multiply(self.algebra, self, other)

    def is_zero(self) -> bool:
        return self.coords.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.coords == other.coords

    def __str__(self) -> str:
        return str(self.coords)


def _same_algebra(x: Element, y: Element) -> None:
    if x.algebra is not y.algebra and not x.algebra.same_table(y.algebra):
        raise ValueError("elements belong to different algebras")


def multiply(algebra: Algebra, x: Element, y: Element) -> Element:
    """Bilinear extension of the structure-constant table."""
    _same_algebra(x, y)
    if x.algebra is not algebra and not algebra.same_table(x.algebra):
        raise ValueError("elements do not belong to the given algebra")
    acc = [Fraction(0)] * algebra.dim
    xe = x.coords.entries
    ye = y.coords.entries
    for i, xc in enumerate(xe):
        if xc == 0:
            continue
        row = algebra._table[i]
        for j, yc in enumerate(ye):
            if yc == 0:
                continue
            prod = row[j]
            c = xc * yc
            for k, pk in enumerate(prod.entries):
                if pk != 0:
                    acc[k] += c * pk
    return Element(algebra, Vector(tuple(acc)))


def commutator(algebra: Algebra, x: Element, y: Element) -> Element:
    """x*y - y*x."""
    return multiply(algebra, x, y) - multiply(algebra, y, x)


def anticommutator(algebra: Algebra, x: Element, y: Element) -> Element:
    """x*y + y*x (the full sum; callers halve where a symmetric part is meant)."""
    return multiply(algebra, x, y) + multiply(algebra, y, x)


def left_mult_matrix(algebra: Algebra, a: Element) -> Matrix:
    """Matrix of x -> a*x; column j is a * e_j."""
    cols = [multiply(algebra, a, algebra.basis_element(j)).coords
            for j in range(1, algebra.dim + 1)]
    return Matrix.from_columns(cols)


def right_mult_matrix(algebra: Algebra, a: Element) -> Matrix:
    """Matrix of x -> x*a; column j is e_j * a."""
    cols = [multiply(algebra, algebra.basis_element(j), a).coords
            for j in range(1, algebra.dim + 1)]
    return Matrix.from_columns(cols)


@dataclass(frozen=True)
class Morphism:
    """Linear map between algebras, as a (target.dim x source.dim) matrix."""

    source: Algebra
    target: Algebra
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.rows != self.target.dim or self.matrix.cols != self.source.dim:
            raise ValueError("morphism matrix has wrong shape")

    def apply(self, x: Element) -> Element:
        return Element(self.target, self.matrix.matvec(x.coords))

    def apply_vector(self, v: Vector) -> Vector:
        return self.matrix.matvec(v)

    def is_injective(self) -> bool:
        from .linalg import rref
        return rref(self.matrix)[1] == self.source.dim


def morphism_defect(m: Morphism) -> Optional[tuple]:
    """First witness that `m` is not an algebra morphism, or None.

    A witness is ("pair", i, j) for a failing basis pair, or ("unit",) when
    both algebras are unital but the unit does not map to the unit.
    """
    src, tgt = m.source, m.target
    images = [Element(tgt, m.matrix.column(j)) for j in range(1, src.dim + 1)]
    for i in range(1, src.dim + 1):
        for j in range(1, src.dim + 1):
            lhs = m.apply_vector(src.product_of_basis(i, j))
            rhs = multiply(tgt, images[i - 1], images[j - 1]).coords
            if lhs != rhs:
                return ("pair", i, j)
    if src.unit is not None and tgt.unit is not None:
        if m.matrix.column(src.unit) != Vector.basis(tgt.dim, tgt.unit):
            return ("unit",)
    return None


def check_morphism(m: Morphism) -> bool:
    """True iff multiplicativity holds on all basis pairs (and the unit maps
    to the unit when both are declared).  Bilinearity makes basis pairs
    sufficient."""
    return morphism_defect(m) is None


def identity_morphism(algebra: Algebra) -> Morphism:
    return Morphism(algebra, algebra, Matrix.identity(algebra.dim))


def ideal_closure(algebra: Algebra, generators: Iterable[Element]) -> Subspace:
    """Smallest subspace containing the generators and closed under left and
    right multiplication by all basis vectors (iterated span growth)."""
    sb = SpanBuilder(algebra.dim)
    frontier = []
    for g in generators:
        if sb.add(g.coords):
            frontier.append(g.coords)
    while frontier:
        new_frontier = []
        for v in frontier:
            x = Element(algebra, v)
            for i in range(1, algebra.dim + 1):
                b = algebra.basis_element(i)
                for prod in (multiply(algebra, b, x), multiply(algebra, x, b)):
                    if sb.add(prod.coords):
                        new_frontier.append(prod.coords)
        frontier = new_frontier
    return sb.to_subspace()


def subalgebra_closure(algebra: Algebra, generators: Iterable[Element]) -> Subspace:
    """Smallest product-closed subspace containing the generators."""
    sb = SpanBuilder(algebra.dim)
    members: list[Vector] = []
    frontier: list[Vector] = []
    for g in generators:
        if sb.add(g.coords):
            members.append(g.coords)
            frontier.append(g.coords)
    while frontier:
        new_frontier = []
        for v in frontier:
            x = Element(algebra, v)
            for w in list(members):
                y = Element(algebra, w)
                for prod in (multiply(algebra, x, y), multiply(algebra, y, x)):
                    if sb.add(prod.coords):
                        members.append(prod.coords)
                        new_frontier.append(prod.coords)
        frontier = new_frontier
    return sb.to_subspace()


def induced_on_basis_indices(algebra: Algebra, indices: list[int],
                             label: str = "") -> Optional[Algebra]:
    """Restriction of the product to the span of the chosen basis vectors,
    re-expressed in those coordinates.  Returns None when the span is not
    product-closed.  The unit is carried over when it is among the indices."""
    pos = {g: k + 1 for k, g in enumerate(indices)}
    m = len(indices)
    constants: dict[tuple[int, int], Vector] = {}
    for a, ga in enumerate(indices, start=1):
        for b, gb in enumerate(indices, start=1):
            prod = algebra.product_of_basis(ga, gb)
            coeffs = [Fraction(0)] * m
            for k, c in enumerate(prod.entries, start=1):
                if c == 0:
                    continue
                if k not in pos:
                    return None
                coeffs[pos[k] - 1] = c
            v = Vector(tuple(coeffs))
            if not v.is_zero():
                constants[(a, b)] = v
    unit = pos.get(algebra.unit) if algebra.unit is not None else None
    return Algebra(m, constants, unit, label or f"{algebra.label}|{indices}")


def permute_basis(algebra: Algebra, new_to_old: list[int], label: str = "") -> Algebra:
    """Reorder the basis: position k of the result is old basis vector
    new_to_old[k-1] (1-based)."""
    if sorted(new_to_old) != list(range(1, algebra.dim + 1)):
        raise ValueError("not a permutation of 1..dim")
    out = induced_on_basis_indices(algebra, new_to_old, label or algebra.label)
    assert out is not None
    return out


@dataclass(frozen=True)
class SimplicityCertificate:
    """Outcome of the certified simplicity test.

    kind is "simple" (witnessed by a full multiplication algebra),
    "not_simple" (witnessed by an explicit proper nonzero ideal) or
    "inconclusive".
    """

    kind: str
    mult_algebra_dim: Optional[int] = None
    ideal: Optional[Subspace] = None

    @property
    def is_simple(self) -> bool:
        return self.kind == "simple"


def _refutation_probes(dim: int) -> list[Vector]:
    """All vectors with entries in {-1,0,1} and at most 2 nonzero coords."""
    probes = []
    for i in range(dim):
        for si in (1, -1):
            v = [0] * dim
            v[i] = si
            probes.append(Vector.of(v))
            for j in range(i + 1, dim):
                for sj in (1, -1):
                    w = list(v)
                    w[j] = sj
                    probes.append(Vector.of(w))
    return probes


def is_simple_certified(algebra: Algebra) -> SimplicityCertificate:
    """Certified (not decided) simplicity.

    A full multiplication algebra (dimension dim^2) certifies simplicity;
    a proper nonzero ideal generated by a probe vector refutes it; anything
    else is reported inconclusive.
    """
    if algebra.unit is None:
        raise ValueError("simplicity certification requires a unit")
    from .analysis import multiplication_algebra  # local import to avoid a cycle
    mdim = multiplication_algebra(algebra).dim
    if mdim == algebra.dim ** 2:
        return SimplicityCertificate("simple", mult_algebra_dim=mdim)
    for v in _refutation_probes(algebra.dim):
        closure = ideal_closure(algebra, [Element(algebra, v)])
        if 0 < closure.dim < algebra.dim:
            return SimplicityCertificate("not_simple", mult_algebra_dim=mdim, ideal=closure)
    return SimplicityCertificate("inconclusive", mult_algebra_dim=mdim)


# --- JSON interchange -------------------------------------------------------
#
# Schema: {"label": str, "dim": int, "unit": int|null,
#          "constants": [{"i": int, "j": int, "k": int, "value": "p/q"}]}
# Indices are 1-based; zero entries are omitted; values are exact rational
# strings "p/q" with q > 0 and gcd(p, q) = 1.


def _format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def algebra_to_json(algebra: Algebra) -> dict:
    entries = []
    for (i, j) in sorted(algebra.constants):
        v = algebra.constants[(i, j)]
        for k, c in enumerate(v.entries, start=1):
            if c != 0:
                entries.append({"i": i, "j": j, "k": k, "value": _format_rational(c)})
    return {"label": algebra.label, "dim": algebra.dim,
            "unit": algebra.unit, "constants": entries}


def algebra_from_json(data: dict) -> Algebra:
    dim = data["dim"]
    acc: dict[tuple[int, int], list[Fraction]] = {}
    for entry in data.get("constants", []):
        i, j, k = entry["i"], entry["j"], entry["k"]
        if not 1 <= k <= dim:
            raise ValueError(f"constant target index {k} out of range")
        vec = acc.setdefault((i, j), [Fraction(0)] * dim)
        vec[k - 1] += frac(entry["value"])
    constants = {key: Vector(tuple(v)) for key, v in acc.items()}
    return Algebra(dim, constants, data.get("unit"), data.get("label", ""))


def dumps_algebra(algebra: Algebra) -> str:
    """Canonical JSON serialization (deterministic bytes)."""
    return json.dumps(algebra_to_json(algebra), indent=2) + "\n"


def loads_algebra(text: str) -> Algebra:
    return algebra_from_json(json.loads(text))
