"""Operator-level analysis of the Vidinli family.

Multiplication algebras, centroids and derivation algebras are computed as
exact linear problems; automorphisms are certified through the orthogonal-
and-symplectic criterion; the semidirect bracket on (derivations + Heisenberg)
is realized as matrices; and the 3-plane / Lagrangian subalgebra geometry is
classified at the coordinate level.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import (
    Algebra,
    Element,
    Morphism,
    check_morphism,
    induced_on_basis_indices,
    left_mult_matrix,
    morphism_defect,
    multiply,
    right_mult_matrix,
)
from .constructors import (
    SkewForm,
    cross7_formula,
    standard_symplectic,
    vidinli,
    vidinli7_directional,
    vidinli_jordan,
)
from .linalg import Matrix, SpanBuilder, Subspace, Vector, kernel_basis, rref

_ZERO = Fraction(0)
_ONE = Fraction(1)


# --- multiplication algebra, centroid, derivations ---------------------------


@dataclass(frozen=True)
class MatrixAlgebraSpan:
    """Span of the unital algebra generated by all left and right
    multiplication operators, with a canonical (RREF-of-flattening) basis."""

    ambient_dim: int
    basis: tuple[Matrix, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, m: Matrix) -> bool:
        sb = SpanBuilder(self.ambient_dim ** 2)
        for b in self.basis:
            sb.add(b.flatten())
        return sb.contains(m.flatten())

    def is_product_closed(self) -> bool:
        sb = SpanBuilder(self.ambient_dim ** 2)
        for b in self.basis:
            sb.add(b.flatten())
        return all(not sb.add((x @ y).flatten()) for x in self.basis for y in self.basis)


def multiplication_algebra(algebra: Algebra) -> MatrixAlgebraSpan:
    """Span closure of {I, L_ei, R_ei} under composition."""
    d = algebra.dim
    gens = [Matrix.identity(d)]
    for i in range(1, d + 1):
        e = algebra.basis_element(i)
        gens.append(left_mult_matrix(algebra, e))
        gens.append(right_mult_matrix(algebra, e))
    sb = SpanBuilder(d * d)
    members: list[Matrix] = []
    frontier: list[Matrix] = []
    for g in gens:
        if sb.add(g.flatten()):
            members.append(g)
            frontier.append(g)
    # The identity is among the generators, so closing under left
    # composition with generators spans every word in them.
    while frontier:
        new_frontier = []
        for m in frontier:
            for g in gens:
                prod = g @ m
                if sb.add(prod.flatten()):
                    members.append(prod)
                    new_frontier.append(prod)
        frontier = new_frontier
    basis = tuple(Matrix.unflatten(v, d, d) for v in sb.to_subspace().basis)
    return MatrixAlgebraSpan(d, basis)


def _operator_space_kernel(rows: list[list[Fraction]], d: int) -> Subspace:
    """Kernel of a linear system over the d*d entries of an unknown operator,
    returned in the canonical flattened form."""
    nonzero = [r for r in rows if any(c != 0 for c in r)]
    if not nonzero:
        return Subspace.full(d * d)
    return kernel_basis(Matrix.from_rows(nonzero))


def centroid(algebra: Algebra) -> Subspace:
    """Operators theta with theta(x*y) = theta(x)*y = x*theta(y), as a
    subspace of flattened d x d matrices.

    The verdict is relative to the rational base field: algebras whose
    centroid is a larger field than QQ (the 2-dimensional complex algebra,
    for instance) get the full centroid over QQ, not a geometric answer
    over that larger field.
    """
    d = algebra.dim
    idx = lambda r, c: r * d + c
    rows: list[list[Fraction]] = []
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            prod = algebra.product_of_basis(i, j)
            for r in range(d):
                left_row = [_ZERO] * (d * d)
                right_row = [_ZERO] * (d * d)
                # theta(e_i*e_j)_r = sum_c theta[r][c] * prod_c
                for c in range(d):
                    pc = prod.entries[c]
                    if pc != 0:
                        left_row[idx(r, c)] += pc
                        right_row[idx(r, c)] += pc
                # (theta(e_i)*e_j)_r = sum_c theta[c][i-1] * (e_{c+1}*e_j)_r
                for c in range(d):
                    t = algebra.product_of_basis(c + 1, j).entries[r]
                    if t != 0:
                        left_row[idx(c, i - 1)] -= t
                # (e_i*theta(e_j))_r = sum_c theta[c][j-1] * (e_i*e_{c+1})_r
                for c in range(d):
                    t = algebra.product_of_basis(i, c + 1).entries[r]
                    if t != 0:
                        right_row[idx(c, j - 1)] -= t
                rows.append(left_row)
                rows.append(right_row)
    return _operator_space_kernel(rows, d)


def derivations(algebra: Algebra) -> Subspace:
    """Operators D with D(x*y) = D(x)*y + x*D(y), flattened."""
    d = algebra.dim
    idx = lambda r, c: r * d + c
    rows: list[list[Fraction]] = []
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            prod = algebra.product_of_basis(i, j)
            for r in range(d):
                row = [_ZERO] * (d * d)
                for c in range(d):
                    pc = prod.entries[c]
                    if pc != 0:
                        row[idx(r, c)] += pc
                for c in range(d):
                    t = algebra.product_of_basis(c + 1, j).entries[r]
                    if t != 0:
                        row[idx(c, i - 1)] -= t
                    t = algebra.product_of_basis(i, c + 1).entries[r]
                    if t != 0:
                        row[idx(c, j - 1)] -= t
                rows.append(row)
    return _operator_space_kernel(rows, d)


def is_azumaya(algebra: Algebra) -> bool:
    """Central (centroid of dimension 1) with full multiplication algebra.

    A full multiplication algebra makes every module over it generated by
    the algebra itself, which is the module-category half of the Azumaya
    property; centroid dimension 1 is centrality over QQ.
    """
    if algebra.unit is None:
        raise ValueError("Azumaya test requires a unit")
    if centroid(algebra).dim != 1:
        return False
    return multiplication_algebra(algebra).dim == algebra.dim ** 2


def find_idempotents_vidinli(n: int) -> tuple[Element, Element]:
    """The idempotents of vidinli(n): only 0 and e1.

    Writing x = x1 e1 + x0, the square condition forces 2 x1 x0 = x0 and
    x1^2 - |x0|^2 = x1.  A nonzero x0 would force x1 = 1/2 and then
    |x0|^2 = -1/4 < 0, impossible; so x0 = 0 and x1 is 0 or 1.
    """
    a = vidinli(n)
    zero, unit = a.zero_element(), a.unit_element()
    assert (unit * unit) == unit
    return (zero, unit)


# --- commutator Lie structure --------------------------------------------------


def commutator_algebra(algebra: Algebra) -> Algebra:
    """The bracket [x, y] = x*y - y*x stored as an algebra product."""
    constants: dict[tuple[int, int], Vector] = {}
    for i in range(1, algebra.dim + 1):
        for j in range(1, algebra.dim + 1):
            v = algebra.product_of_basis(i, j) - algebra.product_of_basis(j, i)
            if not v.is_zero():
                constants[(i, j)] = v
    return Algebra(algebra.dim, constants, unit=None,
                   label=f"[{algebra.label},{algebra.label}]")


def bracket_center(bracket: Algebra) -> Subspace:
    """Center of an anticommutative product: the kernel of the stacked
    left-bracket maps x -> [x, e_j]."""
    rows = []
    for j in range(1, bracket.dim + 1):
        rm = right_mult_matrix(bracket, bracket.basis_element(j))
        rows.extend(rm.entries)
    return kernel_basis(Matrix.from_rows(rows))


# --- automorphisms ------------------------------------------------------------


class NotOrthogonalError(ValueError):
    def __init__(self, entry: tuple[int, int]):
        super().__init__(f"psi^T psi differs from the identity at entry {entry}")
        self.entry = entry


class NotSymplecticError(ValueError):
    def __init__(self, entry: tuple[int, int]):
        super().__init__(f"psi^T Omega psi differs from Omega at entry {entry}")
        self.entry = entry


def unitary_to_automorphism(n: int, psi: Matrix) -> Morphism:
    """Extend an orthogonal-and-symplectic map of the hyperplane e1-perp to
    an automorphism of vidinli(n) fixing e1.

    Membership in the (realified) unitary group is exactly orthogonality
    together with preservation of the standard symplectic form.
    """
    if psi.rows != 2 * n or psi.cols != 2 * n:
        raise ValueError("psi must be a 2n x 2n matrix")
    gram = psi.transpose() @ psi
    eye = Matrix.identity(2 * n)
    if gram != eye:
        bad = next((i + 1, j + 1) for i in range(2 * n) for j in range(2 * n)
                   if gram.entries[i][j] != eye.entries[i][j])
        raise NotOrthogonalError(bad)
    omega = standard_symplectic(n).matrix
    sym = psi.transpose() @ omega @ psi
    if sym != omega:
        bad = next((i + 1, j + 1) for i in range(2 * n) for j in range(2 * n)
                   if sym.entries[i][j] != omega.entries[i][j])
        raise NotSymplecticError(bad)
    dim = 2 * n + 1
    rows = [[_ONE if j == 0 else _ZERO for j in range(dim)]]
    for i in range(2 * n):
        rows.append([_ZERO] + list(psi.entries[i]))
    phi = Morphism(vidinli(n), vidinli(n), Matrix.from_rows(rows))
    assert check_morphism(phi)
    return phi


# --- the semidirect bracket and its representation ----------------------------


def unitary_lie_algebra_basis(n: int) -> list[Matrix]:
    """Canonical basis of the real 2n x 2n matrices that are both
    skew-symmetric and infinitesimally symplectic (A^T = -A and
    A^T Omega + Omega A = 0); its dimension is n^2."""
    d = 2 * n
    omega = standard_symplectic(n).matrix
    idx = lambda r, c: r * d + c
    rows: list[list[Fraction]] = []
    for r in range(d):
        for c in range(d):
            skew = [_ZERO] * (d * d)
            skew[idx(r, c)] += _ONE
            skew[idx(c, r)] += _ONE
            rows.append(skew)
            symp = [_ZERO] * (d * d)
            # (A^T Omega + Omega A)[r][c] = sum_t A[t][r] Omega[t][c] + Omega[r][t] A[t][c]
            for t in range(d):
                if omega.entries[t][c] != 0:
                    symp[idx(t, r)] += omega.entries[t][c]
                if omega.entries[r][t] != 0:
                    symp[idx(t, c)] += omega.entries[r][t]
            rows.append(symp)
    ker = _operator_space_kernel(rows, d)
    return [Matrix.unflatten(v, d, d) for v in ker.basis]


@dataclass(frozen=True)
class SemidirectElement:
    """Element (A, u + lam*e1) of the semidirect sum of the derivation
    algebra with the Heisenberg algebra: A acts on the hyperplane, u lies in
    it, lam scales the central direction."""

    n: int
    a: Matrix
    u: Vector
    lam: Fraction

    def __post_init__(self):
        d = 2 * self.n
        if self.a.rows != d or self.a.cols != d or self.u.dim != d:
            raise ValueError("semidirect element has wrong shape")
        if self.a.transpose() != -self.a:
            raise ValueError("matrix part must be skew-symmetric")
        omega = standard_symplectic(self.n).matrix
        if self.a.transpose() @ omega + omega @ self.a != Matrix.zeros(d, d):
            raise ValueError("matrix part must preserve the symplectic form")

    @staticmethod
    def of(n: int, a: Matrix, u: Vector, lam=0) -> "SemidirectElement":
        return SemidirectElement(n, a, u, Fraction(lam))


def semidirect_bracket(x: SemidirectElement, y: SemidirectElement) -> SemidirectElement:
    """[(A, u + lam e1), (B, v + mu e1)] = ([A,B], A v - B u + 2 omega(u,v) e1)."""
    if x.n != y.n:
        raise ValueError("mixed sizes in semidirect bracket")
    omega = standard_symplectic(x.n).matrix
    mat = x.a @ y.a - y.a @ x.a
    vec = x.a.matvec(y.u) - y.a.matvec(x.u)
    lam = 2 * x.u.dot(omega.matvec(y.u))  # omega(u, v) = u^T Omega v
    return SemidirectElement(x.n, mat, vec, lam)


def rho_matrix(x: SemidirectElement) -> Matrix:
    """The action on vidinli(n): e1 -> 0 and v -> A(v) + 2 omega(u, v) e1
    for v in the hyperplane (the central part acts by zero)."""
    n = x.n
    d = 2 * n + 1
    omega = standard_symplectic(n).matrix
    rows = [[_ZERO] * d for _ in range(d)]
    # row 1: coefficient of e1 in the image of e_j (j >= 2) is 2 omega(u, e_j).
    ut_omega = [x.u.dot(omega.column(j + 1)) for j in range(2 * n)]
    for j in range(2 * n):
        rows[0][j + 1] = 2 * ut_omega[j]
    for i in range(2 * n):
        for j in range(2 * n):
            rows[i + 1][j + 1] = x.a.entries[i][j]
    return Matrix.from_rows(rows)


def rho_check(n: int) -> bool:
    """Representation property of rho on a spanning set.

    Verifies the two defining actions on basis inputs, the bracket
    compatibility [rho(x), rho(y)] = rho([x, y]) over a spanning set of
    (derivations + hyperplane + center), and the Jacobi identity of the
    semidirect bracket on 20 deterministic triples.
    """
    d2 = 2 * n
    zero_mat = Matrix.zeros(d2, d2)
    omega = standard_symplectic(n)
    basis_a = unitary_lie_algebra_basis(n)
    if len(basis_a) != n * n:
        return False
    span: list[SemidirectElement] = []
    span += [SemidirectElement.of(n, a, Vector.zero(d2)) for a in basis_a]
    span += [SemidirectElement.of(n, zero_mat, Vector.basis(d2, j)) for j in range(1, d2 + 1)]
    span += [SemidirectElement.of(n, zero_mat, Vector.zero(d2), 1)]

    # Defining actions.
    for a in basis_a:
        r = rho_matrix(SemidirectElement.of(n, a, Vector.zero(d2)))
        if not r.column(1).is_zero():
            return False
        for j in range(1, d2 + 1):
            img = r.matvec(Vector.basis(2 * n + 1, j + 1))
            expect = Vector(tuple([_ZERO] + list(a.column(j).entries)))
            if img != expect:
                return False
    for j in range(1, d2 + 1):
        u = Vector.basis(d2, j)
        r = rho_matrix(SemidirectElement.of(n, zero_mat, u))
        if not r.column(1).is_zero():
            return False
        for k in range(1, d2 + 1):
            v = Vector.basis(d2, k)
            img = r.matvec(Vector(tuple([_ZERO] + list(v.entries))))
            w = 2 * u.dot(omega.matrix.matvec(v))
            if img != Vector.basis(2 * n + 1, 1).scale(w):
                return False

    # Bracket compatibility on all spanning pairs.
    mats = [rho_matrix(x) for x in span]
    for i, x in enumerate(span):
        for j, y in enumerate(span):
            lhs = mats[i] @ mats[j] - mats[j] @ mats[i]
            rhs = rho_matrix(semidirect_bracket(x, y))
            if lhs != rhs:
                return False

    # Jacobi identity on deterministic triples.
    from .probes import deterministic_rationals
    coeffs = deterministic_rationals(60 * len(span), seed=5)
    pos = 0
    triples = []
    for _ in range(20):
        elems = []
        for _ in range(3):
            acc_a, acc_u, acc_l = zero_mat, Vector.zero(d2), Fraction(0)
            for b in span:
                c = coeffs[pos]
                pos += 1
                acc_a = acc_a + b.a.scale(c)
                acc_u = acc_u + b.u.scale(c)
                acc_l = acc_l + c * b.lam
            elems.append(SemidirectElement(n, acc_a, acc_u, acc_l))
        triples.append(tuple(elems))
    for x, y, z in triples:
        j1 = semidirect_bracket(x, semidirect_bracket(y, z))
        j2 = semidirect_bracket(y, semidirect_bracket(z, x))
        j3 = semidirect_bracket(z, semidirect_bracket(x, y))
        total_a = j1.a + j2.a + j3.a
        total_u = j1.u + j2.u + j3.u
        total_l = j1.lam + j2.lam + j3.lam
        if not total_a.is_zero() or not total_u.is_zero() or total_l != 0:
            return False
    return True


# --- the 7-dimensional cross product interplay --------------------------------


@dataclass(frozen=True)
class Cross7Report:
    calibration_ok: bool
    decomposition_ok: bool
    closed_planes_ok: bool

    @property
    def ok(self) -> bool:
        return self.calibration_ok and self.decomposition_ok and self.closed_planes_ok


def cross7_checks() -> Cross7Report:
    """Three interlocking identities of the 7-dimensional cross product:
    it calibrates the standard skew form on e1-perp, it is half the sum of
    the directional commutators, and e1 x u completes any unit u in e1-perp
    to a closed 3-plane carrying the 3-dimensional Vidinli table."""
    omega = standard_symplectic(3)
    calibration_ok = all(
        cross7_formula(Vector.basis(7, i), Vector.basis(7, j)).coord(1)
        == omega.basis_value(i, j)
        for i in range(2, 8) for j in range(2, 8))

    directionals = [vidinli7_directional(i) for i in range(1, 8)]
    decomposition_ok = True
    for i in range(1, 8):
        for j in range(i + 1, 8):
            u, v = Vector.basis(7, i), Vector.basis(7, j)
            total = Vector.zero(7)
            for alg in directionals:
                x, y = alg.element(u), alg.element(v)
                total = total + (multiply(alg, x, y) - multiply(alg, y, x)).coords
            if total.scale(Fraction(1, 2)) != cross7_formula(u, v):
                decomposition_ok = False

    v7 = vidinli(3)
    mix = [Fraction(0)] * 7
    mix[1], mix[3] = Fraction(3, 5), Fraction(4, 5)
    closed_planes_ok = True
    for u in [Vector.basis(7, i) for i in range(2, 8)] + [Vector.of(mix)]:
        w = cross7_formula(Vector.basis(7, 1), u)
        verdict = classify_3plane(3, u, w)
        if not verdict.is_v3:
            closed_planes_ok = False
            continue
        # u * (e1 x u) = e1 (the skew form pairs u with e1 x u at +1) and
        # the span is product-closed.
        eu, ew = v7.element(u), v7.element(w)
        if multiply(v7, eu, ew) != v7.unit_element():
            closed_planes_ok = False
        span = Subspace.from_vectors(7, [Vector.basis(7, 1), u, w])
        for x in (eu, ew, v7.unit_element()):
            for y in (eu, ew, v7.unit_element()):
                if not span.contains_vector(multiply(v7, x, y).coords):
                    closed_planes_ok = False
    return Cross7Report(calibration_ok, decomposition_ok, closed_planes_ok)


# --- subalgebra geometry -------------------------------------------------------


@dataclass(frozen=True)
class Plane3Verdict:
    """Outcome of the 3-plane test: the span of (e1, u, v) is a Vidinli
    3-algebra exactly when omega(u, v) = +-1."""

    is_v3: bool
    omega_value: Fraction
    morphism: Optional[Morphism] = None


def classify_3plane(n: int, u: Vector, v: Vector) -> Plane3Verdict:
    """Decide whether span(e1, u, v) in vidinli(n) is a 3-dimensional
    Vidinli subalgebra, for orthonormal u, v in the hyperplane."""
    dim = 2 * n + 1
    if u.dim != dim or v.dim != dim:
        raise ValueError("vectors have the wrong dimension")
    if u.coord(1) != 0 or v.coord(1) != 0:
        raise ValueError("u and v must lie in the hyperplane orthogonal to e1")
    if u.dot(v) != 0 or u.norm_sq() != 1 or v.norm_sq() != 1:
        raise ValueError("u and v must be orthonormal")
    w = standard_symplectic(n).apply(u, v)
    if w not in (1, -1):
        return Plane3Verdict(False, w)
    target = vidinli(n)
    v_adj = v if w == 1 else -v
    cols = [Vector.basis(dim, 1), u, v_adj]
    phi = Morphism(vidinli(1), target, Matrix.from_columns(cols))
    assert check_morphism(phi)
    return Plane3Verdict(True, w, phi)


def j_map(n: int, u: Vector) -> Vector:
    """The compatible complex structure on the hyperplane: e_{2k} maps to
    e_{2k+1} and e_{2k+1} to -e_{2k}; satisfies omega(u, v) = (J u) . v."""
    dim = 2 * n + 1
    if u.dim != dim:
        raise ValueError("vector has the wrong dimension")
    if u.coord(1) != 0:
        raise ValueError("J acts on the hyperplane orthogonal to e1")
    out = [_ZERO] * dim
    for k in range(1, n + 1):
        out[2 * k] = u.coord(2 * k)        # coefficient of e_{2k+1}
        out[2 * k - 1] = -u.coord(2 * k + 1)  # coefficient of e_{2k}
    return Vector(tuple(out))


def j_uniqueness_check(n: int, u: Vector) -> bool:
    """For a unit u in the hyperplane: omega(u, v) = (J u) . v on a
    deterministic family of v, and among probe unit vectors orthogonal to u
    only +-J u pairs with u at omega = +-1."""
    from .probes import deterministic_vectors
    if u.norm_sq() != 1 or u.coord(1) != 0:
        raise ValueError("u must be a unit vector in the hyperplane")
    dim = 2 * n + 1
    omega = standard_symplectic(n)
    ju = j_map(n, u)
    for w in deterministic_vectors(dim, 30, seed=11):
        v = Vector(tuple([_ZERO] + list(w.entries[1:])))
        if omega.apply(u, v) != ju.dot(v):
            return False
    from .probes import rational_unit_vectors_v0
    for v in rational_unit_vectors_v0(n):
        if u.dot(v) != 0:
            continue
        w = omega.apply(u, v)
        if w in (1, -1):
            if v != ju and v != -ju:
                return False
        else:
            if v == ju or v == -ju:
                return False
    return True


class NotIsotropicError(ValueError):
    def __init__(self, pair: tuple[int, int], value: Fraction):
        super().__init__(f"basis pair {pair} has nonzero skew pairing {value}")
        self.pair = pair
        self.value = value


def coordinate_lagrangians(n: int) -> list[Subspace]:
    """The 2^n Lagrangians spanned by one choice out of each coupled pair
    (e_{2i}, e_{2i+1}), enumerated by a binary counter."""
    dim = 2 * n + 1
    out = []
    for mask in range(2 ** n):
        vecs = []
        for i in range(1, n + 1):
            pick = 2 * i + ((mask >> (i - 1)) & 1)
            vecs.append(Vector.basis(dim, pick))
        out.append(Subspace.from_vectors(dim, vecs))
    return out


def jordan_from_lagrangian(n: int, lagrangian: Subspace) -> Algebra:
    """Induced algebra on e1 + an isotropic subspace of the hyperplane.

    Raises NotIsotropicError when the skew form does not vanish on the
    subspace.  On a coordinate Lagrangian the result carries the
    (n+1)-dimensional Vidinli-Jordan table exactly.
    """
    dim = 2 * n + 1
    if lagrangian.ambient_dim != dim:
        raise ValueError("ambient dimension mismatch")
    omega = standard_symplectic(n)
    basis = list(lagrangian.basis)
    for a, x in enumerate(basis):
        if x.coord(1) != 0:
            raise ValueError("subspace must lie in the hyperplane orthogonal to e1")
        for b, y in enumerate(basis):
            w = omega.apply(x, y)
            if w != 0:
                raise NotIsotropicError((a + 1, b + 1), w)
    alg = vidinli(n)
    m = len(basis) + 1
    e1 = Vector.basis(dim, 1)
    local = [e1] + basis
    constants: dict[tuple[int, int], Vector] = {}
    for a, x in enumerate(local, start=1):
        for b, y in enumerate(local, start=1):
            prod = multiply(alg, alg.element(x), alg.element(y)).coords
            # On an isotropic span every product lands in span(e1, x, y);
            # both x, y pair to zero under omega so only e1 and the unit
            # actions appear.
            coeffs = [_ZERO] * m
            rem = prod
            if a == 1:
                coeffs[b - 1] = _ONE
                rem = rem - y
            elif b == 1:
                coeffs[a - 1] = _ONE
                rem = rem - x
            else:
                coeffs[0] = prod.coord(1)
                rem = rem - e1.scale(prod.coord(1))
            if not rem.is_zero():
                raise ArithmeticError("product escaped the adjoined subspace")
            v = Vector(tuple(coeffs))
            if not v.is_zero():
                constants[(a, b)] = v
    return Algebra(m, constants, unit=1, label=f"VJ[e1+L] n={n}")


class EmbeddingError(ValueError):
    pass


def embed_sub_vidinli(n: int, pairs: Sequence[tuple[Vector, Vector]]) -> Morphism:
    """Injective morphism of vidinli(k) into vidinli(n) sending the coupled
    basis pairs to the given orthonormal symplectic pairs.

    Each pair must be orthonormal with skew pairing 1, and all products
    across distinct pairs must vanish in the ambient algebra.
    """
    dim = 2 * n + 1
    omega = standard_symplectic(n)
    ambient = vidinli(n)
    for idx, (u, v) in enumerate(pairs, start=1):
        if u.dim != dim or v.dim != dim:
            raise EmbeddingError(f"pair {idx}: wrong dimension")
        if u.coord(1) != 0 or v.coord(1) != 0:
            raise EmbeddingError(f"pair {idx}: not in the hyperplane")
        if u.norm_sq() != 1 or v.norm_sq() != 1 or u.dot(v) != 0:
            raise EmbeddingError(f"pair {idx}: not orthonormal")
        if omega.apply(u, v) != 1:
            raise EmbeddingError(f"pair {idx}: skew pairing is {omega.apply(u, v)}, not 1")
    flat = [w for p in pairs for w in p]
    for i in range(len(pairs)):
        for j in range(len(pairs)):
            if i == j:
                continue
            for x in pairs[i]:
                for y in pairs[j]:
                    prod = multiply(ambient, ambient.element(x), ambient.element(y))
                    if not prod.is_zero():
                        raise EmbeddingError(
                            f"pairs {i + 1} and {j + 1}: cross product is nonzero")
    k = len(pairs)
    cols = [Vector.basis(dim, 1)] + flat
    phi = Morphism(vidinli(k), ambient, Matrix.from_columns(cols))
    if not check_morphism(phi):
        raise EmbeddingError(f"map is not multiplicative: {morphism_defect(phi)}")
    if not phi.is_injective():
        raise EmbeddingError("pairs are linearly dependent")
    return phi
