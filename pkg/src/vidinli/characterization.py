"""Local-to-global recognition of the Vidinli multiplication.

Splitting a product into symmetric and skew parts, the principal-plane
condition pins the symmetric part to (a.e1) b + (b.e1) a - (a.b) e1, and
the 3-plane condition pins the skew part to omega(a, b) e1 for a
nondegenerate skew form omega.  An algebra passing both is the Vidinli-type
algebra of that form, via the identity map on the basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import Algebra, Morphism, check_morphism, induced_on_basis_indices
from .constructors import SkewForm, standard_symplectic, vidinli, vidinli_type
from .linalg import Matrix, Vector

_ZERO = Fraction(0)
_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class SplitProduct:
    """Symmetric and skew structure tensors with S + K = product."""

    dim: int
    symmetric: dict[tuple[int, int], Vector]
    skew: dict[tuple[int, int], Vector]

    def s(self, i: int, j: int) -> Vector:
        return self.symmetric.get((i, j), Vector.zero(self.dim))

    def k(self, i: int, j: int) -> Vector:
        return self.skew.get((i, j), Vector.zero(self.dim))


def split(algebra: Algebra) -> SplitProduct:
    """S = (c(i,j) + c(j,i))/2, K = (c(i,j) - c(j,i))/2."""
    sym: dict[tuple[int, int], Vector] = {}
    skew: dict[tuple[int, int], Vector] = {}
    d = algebra.dim
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            cij = algebra.product_of_basis(i, j)
            cji = algebra.product_of_basis(j, i)
            s = (cij + cji).scale(_HALF)
            k = (cij - cji).scale(_HALF)
            if not s.is_zero():
                sym[(i, j)] = s
            if not k.is_zero():
                skew[(i, j)] = k
    return SplitProduct(d, sym, skew)


@dataclass(frozen=True)
class VaFailure:
    """Witness that the symmetric part is not the principal-plane form."""

    pair: tuple[int, int]
    expected: Vector
    actual: Vector


def _expected_symmetric(dim: int, i: int, j: int) -> Vector:
    e1 = Vector.basis(dim, 1)
    ei, ej = Vector.basis(dim, i), Vector.basis(dim, j)
    return (ej.scale(ei.coord(1)) + ei.scale(ej.coord(1))
            - e1.scale(Fraction(1) if i == j else Fraction(0)))


def check_Va(algebra: Algebra) -> Optional[VaFailure]:
    """None when every 2-plane through the unit behaves like the complex
    numbers: the symmetric part equals (a.e1) b + (b.e1) a - (a.b) e1 on
    all basis pairs and the skew part kills e1.  Basis checks suffice by
    bilinearity."""
    if algebra.unit != 1:
        raise ValueError("the principal-plane test requires the unit at index 1")
    parts = split(algebra)
    d = algebra.dim
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            expected = _expected_symmetric(d, i, j)
            actual = parts.s(i, j)
            if actual != expected:
                return VaFailure((i, j), expected, actual)
    for j in range(1, d + 1):
        k = parts.k(1, j)
        if not k.is_zero():
            return VaFailure((1, j), Vector.zero(d), k)
    return None


@dataclass(frozen=True)
class VbFailure:
    """Witness that the skew part is not a nondegenerate e1-valued form."""

    kind: str  # "off_axis" | "degenerate" | "plane"
    pair: Optional[tuple[int, int]] = None
    value: Optional[Vector] = None
    radical_dim: Optional[int] = None


def extract_skew_form(algebra: Algebra) -> tuple[Optional[SkewForm], Optional[VbFailure]]:
    """Read omega off the skew part; fails when any K(e_i, e_j) leaves the
    unit axis.  Requires odd dimension."""
    d = algebra.dim
    if d % 2 == 0:
        raise ValueError("skew form extraction needs odd dimension")
    n = (d - 1) // 2
    parts = split(algebra)
    pairs: dict[tuple[int, int], Fraction] = {}
    for i in range(2, d + 1):
        for j in range(2, d + 1):
            if i == j:
                continue
            k = parts.k(i, j)
            if any(c != 0 for c in k.entries[1:]):
                return None, VbFailure("off_axis", (i, j), k)
            if k.coord(1) != 0 and i < j:
                pairs[(i, j)] = k.coord(1)
    return SkewForm.from_pairs(n, pairs), None


def check_Vb(algebra: Algebra, omega: SkewForm) -> Optional[VbFailure]:
    """None when the skew part is omega(e_i, e_j) e1 with omega
    nondegenerate.  The coupled pairs (e_2i, e_{2i+1}) with pairing +-1 are
    re-tested through the direct 3-plane route (the span with e1 carries
    the 3-dimensional Vidinli table), a redundant check of the same
    condition."""
    if check_Va(algebra) is not None:
        raise ValueError("the principal-plane condition must be established first")
    d = algebra.dim
    parts = split(algebra)
    for i in range(2, d + 1):
        for j in range(2, d + 1):
            if i == j:
                continue
            expected = Vector.basis(d, 1).scale(omega.basis_value(i, j))
            if parts.k(i, j) != expected:
                return VbFailure("off_axis", (i, j), parts.k(i, j))
    if not omega.is_nondegenerate():
        return VbFailure("degenerate", radical_dim=omega.radical_dim())
    for i in range(1, omega.n + 1):
        w = omega.basis_value(2 * i, 2 * i + 1)
        if w not in (1, -1):
            continue  # the plane criterion applies only at pairing +-1
        induced = induced_on_basis_indices(algebra, [1, 2 * i, 2 * i + 1])
        if induced is None:
            return VbFailure("plane", (2 * i, 2 * i + 1))
        model = vidinli(1)
        flip = Matrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, w]])
        phi = Morphism(model, induced, flip)
        if not check_morphism(phi):
            return VbFailure("plane", (2 * i, 2 * i + 1))
    return None


@dataclass(frozen=True)
class Verdict:
    """Classification outcome.

    kind: "is_vidinli" | "fails_va" | "fails_vb" | "not_applicable".
    For a positive verdict, morphism is the identity-on-basis isomorphism
    onto the Vidinli-type algebra of the extracted form, and standard_form
    says whether that form is the standard symplectic one.
    """

    kind: str
    n: Optional[int] = None
    omega: Optional[SkewForm] = None
    morphism: Optional[Morphism] = None
    standard_form: bool = False
    va_failure: Optional[VaFailure] = None
    vb_failure: Optional[VbFailure] = None
    reason: str = ""

    def as_dict(self) -> dict:
        out = {"kind": self.kind}
        if self.kind == "is_vidinli":
            out["n"] = self.n
            out["standard_form"] = self.standard_form
            out["omega"] = [[str(v) for v in row] for row in self.omega.matrix.entries]
        elif self.kind == "fails_va":
            out["witness_pair"] = list(self.va_failure.pair)
            out["expected_symmetric_part"] = str(self.va_failure.expected)
            out["actual_symmetric_part"] = str(self.va_failure.actual)
        elif self.kind == "fails_vb":
            out["failure"] = self.vb_failure.kind
            if self.vb_failure.pair is not None:
                out["witness_pair"] = list(self.vb_failure.pair)
            if self.vb_failure.value is not None:
                out["skew_value"] = str(self.vb_failure.value)
            if self.vb_failure.radical_dim is not None:
                out["radical_dim"] = self.vb_failure.radical_dim
        else:
            out["reason"] = self.reason
        return out


def classify(algebra: Algebra) -> Verdict:
    """Total classifier: runs the principal-plane check, extracts the
    candidate skew form from the skew part, and demands nondegeneracy."""
    if algebra.dim % 2 == 0:
        return Verdict("not_applicable", reason="dimension is even")
    if algebra.unit != 1:
        return Verdict("not_applicable", reason="unit is not at basis index 1")
    va = check_Va(algebra)
    if va is not None:
        return Verdict("fails_va", va_failure=va)
    omega, failure = extract_skew_form(algebra)
    if failure is not None:
        return Verdict("fails_vb", vb_failure=failure)
    n = (algebra.dim - 1) // 2
    vb = check_Vb(algebra, omega)
    if vb is not None:
        return Verdict("fails_vb", omega=omega, vb_failure=vb)
    target = vidinli_type(n, omega)
    phi = Morphism(algebra, target, Matrix.identity(algebra.dim))
    assert check_morphism(phi)
    standard = omega.matrix == standard_symplectic(n).matrix
    if standard:
        phi = Morphism(algebra, vidinli(n), Matrix.identity(algebra.dim))
        assert check_morphism(phi)
    return Verdict("is_vidinli", n=n, omega=omega, morphism=phi,
                   standard_form=standard)


def table_diff(a: Algebra, b: Algebra) -> list[tuple[int, int, Vector, Vector]]:
    """Basis pairs where two same-dimension algebras disagree, with both
    product vectors."""
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    out = []
    for i in range(1, a.dim + 1):
        for j in range(1, a.dim + 1):
            pa, pb = a.product_of_basis(i, j), b.product_of_basis(i, j)
            if pa != pb:
                out.append((i, j, pa, pb))
    return out
