"""Spectral analysis of left multiplication in the Vidinli algebras.

For a = a1 e1 + u the characteristic polynomial of L_a factors as
(x - a1)^(2n-1) ((x - a1)^2 + |u|^2), the determinant is a1^(2n-1) |a|^2,
and the space splits into the eigenspace at a1 and the kernel of the
quadratic factor, which is span(e1, u).  Every closed form here is checked
against a brute-force computation on the explicit operator matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import Element, left_mult_matrix, multiply
from .constructors import standard_symplectic, vidinli
from .linalg import Matrix, Polynomial, Subspace, Vector, char_poly, kernel_basis

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class SpectralReport:
    """Exact spectral data of L_a on vidinli(n).

    closed_form is the factored characteristic polynomial, stored expanded;
    oracle_poly is the Faddeev-LeVerrier computation on the matrix of L_a.
    principal_branch records how the principal eigenspace was found:
    "eigen" (a1 != 0), "kernel" (a1 = 0, eigenspace is ker L_a), or
    "scalar" for a in the unit axis, where L_a is a1 times the identity.
    """

    n: int
    a: Element
    a1: Fraction
    u_norm_sq: Fraction
    closed_form: Polynomial
    oracle_poly: Polynomial
    determinant: Fraction
    e_principal: Subspace
    e_quadratic: Subspace
    principal_branch: str
    explicit_basis_used: bool

    @property
    def degenerate(self) -> bool:
        return self.principal_branch == "scalar"


def _closed_form_poly(n: int, a1: Fraction, u_norm_sq: Fraction) -> Polynomial:
    linear = Polynomial.of([-a1, 1])
    quadratic = linear * linear + Polynomial.constant(u_norm_sq)
    return (linear ** (2 * n - 1)) * quadratic


def _explicit_principal_basis(n: int, a: Vector) -> Optional[Subspace]:
    """The eigenspace basis solved in coordinates: v1 = 0 together with
    sum_k (a_2k + a_{2k+1}) v_2k + (a_{2k+1} - a_2k) v_{2k+1} = 0, solving
    for the first coupled coordinate whose pair-sum is nonzero.  Returns
    None when every pair-sum vanishes (the kernel route still applies)."""
    dim = 2 * n + 1
    coeff = [_ZERO] * dim
    for k in range(1, n + 1):
        coeff[2 * k - 1] = a.coord(2 * k) + a.coord(2 * k + 1)
        coeff[2 * k] = a.coord(2 * k + 1) - a.coord(2 * k)
    pivot = next((2 * k for k in range(1, n + 1) if coeff[2 * k - 1] != 0), None)
    if pivot is None:
        return None
    vectors = []
    for free in range(2, dim + 1):
        if free == pivot:
            continue
        v = [_ZERO] * dim
        v[free - 1] = _ONE
        v[pivot - 1] = -coeff[free - 1] / coeff[pivot - 1]
        vectors.append(Vector(tuple(v)))
    return Subspace.from_vectors(dim, vectors)


def spectral_report(n: int, a: Element) -> SpectralReport:
    """Full spectral report for L_a, cross-checking each closed form against
    a matrix-level computation; raises ArithmeticError on any mismatch."""
    alg = vidinli(n)
    dim = 2 * n + 1
    if a.coords.dim != dim:
        raise ValueError("element has the wrong dimension")
    if a.is_zero():
        raise ValueError("spectral report of the zero element")
    av = a.coords
    a1 = av.coord(1)
    u = Vector(tuple([_ZERO] + list(av.entries[1:])))
    u_norm_sq = u.norm_sq()

    la = left_mult_matrix(alg, alg.element(av))
    oracle = char_poly(la)
    closed = _closed_form_poly(n, a1, u_norm_sq)
    if closed != oracle:
        raise ArithmeticError("closed-form characteristic polynomial mismatch")

    det_closed = a1 ** (2 * n - 1) * av.norm_sq()
    det_oracle = -oracle.evaluate(0)  # det(L) = (-1)^dim chi(0), dim odd
    if det_closed != det_oracle:
        raise ArithmeticError("determinant closed form mismatch")

    # q(x) = (x - a1)^2 + |u|^2, evaluated with a single matrix product.
    qla = la @ la - la.scale(2 * a1) + Matrix.identity(dim).scale(a1 * a1 + u_norm_sq)
    e_quadratic = kernel_basis(qla)

    if u_norm_sq == 0:
        # a = a1 e1: L_a is scalar; the whole space is the eigenspace.
        return SpectralReport(n, a, a1, u_norm_sq, closed, oracle, det_closed,
                              Subspace.full(dim), e_quadratic, "scalar", False)

    shifted = la - Matrix.identity(dim).scale(a1)
    e_principal = kernel_basis(shifted)
    explicit = _explicit_principal_basis(n, av)
    if explicit is not None and explicit != e_principal:
        raise ArithmeticError("explicit principal eigenspace disagrees with kernel")
    expected_quadratic = Subspace.from_vectors(dim, [Vector.basis(dim, 1), u])
    if e_quadratic != expected_quadratic:
        raise ArithmeticError("quadratic kernel is not span(e1, u)")
    if e_principal.dim != 2 * n - 1 or e_quadratic.dim != 2:
        raise ArithmeticError("eigenspace dimensions are off")
    if e_principal.sum(e_quadratic).dim != dim:
        raise ArithmeticError("eigenspaces do not span")
    branch = "eigen" if a1 != 0 else "kernel"
    return SpectralReport(n, a, a1, u_norm_sq, closed, oracle, det_closed,
                          e_principal, e_quadratic, branch, explicit is not None)


def is_zero_divisor(n: int, a: Element) -> bool:
    """A nonzero element is a zero divisor exactly when it is orthogonal to
    the unit axis; cross-checked against singularity of L_a."""
    if a.is_zero():
        raise ValueError("zero divisor test needs a nonzero element")
    alg = vidinli(n)
    result = a.coords.coord(1) == 0
    la = left_mult_matrix(alg, alg.element(a.coords))
    determinant = -char_poly(la).evaluate(0)
    if (determinant == 0) != result:
        raise ArithmeticError("determinant criterion disagrees with the axis test")
    return result


def zero_product_witness(n: int, a: Element, b: Element) -> bool:
    """For a, b in the hyperplane orthogonal to e1: the product vanishes
    exactly when omega(a, b) = a . b (asserted, then returned)."""
    if a.coords.coord(1) != 0 or b.coords.coord(1) != 0:
        raise ValueError("both inputs must be orthogonal to e1")
    alg = vidinli(n)
    omega = standard_symplectic(n)
    product_zero = multiply(alg, alg.element(a.coords), alg.element(b.coords)).is_zero()
    criterion = omega.apply(a.coords, b.coords) == a.coords.dot(b.coords)
    if product_zero != criterion:
        raise ArithmeticError("zero-product criterion mismatch")
    return product_zero
