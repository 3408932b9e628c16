"""Degenerate pushouts of structure-constant algebras.

The degenerate pushout glues algebras along a shared subalgebra Z and
annihilates every product between elements of distinct components outside
Z.  The quotient's normal form (Z plus one complement summand per
component) is built directly; the amalgamated free product, which is
infinite-dimensional, is never materialized.
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
    morphism_defect,
    multiply,
    permute_basis,
)
from .constructors import complex_algebra, jspin, vidinli
from .linalg import Matrix, SpanBuilder, Subspace, Vector

_ZERO = Fraction(0)
_ONE = Fraction(1)


class PushoutError(ValueError):
    pass


@dataclass(frozen=True)
class PushoutSpec:
    """Gluing data: components plus, per component, the ordered list of
    basis indices carrying the shared subalgebra Z (first entry is the
    shared unit slot when the components are unital).  Z must be
    basis-aligned, which covers every gluing used in practice."""

    components: tuple[Algebra, ...]
    z_indices: tuple[tuple[int, ...], ...]

    @staticmethod
    def over_common_unit(components: Sequence[Algebra]) -> "PushoutSpec":
        """Glue along the scalar span of each component's unit slot."""
        idx = []
        for c in components:
            idx.append((c.unit if c.unit is not None else 1,))
        return PushoutSpec(tuple(components), tuple(idx))

    @property
    def z_dim(self) -> int:
        return len(self.z_indices[0])

    def complement_indices(self, c: int) -> list[int]:
        z = set(self.z_indices[c])
        return [i for i in range(1, self.components[c].dim + 1) if i not in z]


def _z_local_table(algebra: Algebra, z: tuple[int, ...]) -> Optional[list[list[Vector]]]:
    """Structure constants of the Z-indexed sub-table in Z coordinates, or
    None when the span of the Z basis vectors is not product-closed."""
    pos = {g: k for k, g in enumerate(z)}
    table = []
    for a in z:
        row = []
        for b in z:
            prod = algebra.product_of_basis(a, b)
            coeffs = [_ZERO] * len(z)
            for k, coef in enumerate(prod.entries, start=1):
                if coef == 0:
                    continue
                if k not in pos:
                    return None
                coeffs[pos[k]] = coef
            row.append(Vector(tuple(coeffs)))
        table.append(row)
    return table


def _validate(spec: PushoutSpec) -> list[list[Vector]]:
    if len(spec.components) != len(spec.z_indices):
        raise PushoutError("one z-index list per component required")
    if not spec.components:
        raise PushoutError("at least one component required")
    zd = spec.z_dim
    unital = [c.unit is not None for c in spec.components]
    if any(unital) and not all(unital):
        raise PushoutError("components must be all unital or all non-unital")
    z_table: Optional[list[list[Vector]]] = None
    for c, (alg, z) in enumerate(zip(spec.components, spec.z_indices)):
        if len(z) != zd:
            raise PushoutError(f"component {c + 1}: z-index list has wrong length")
        if len(set(z)) != len(z) or any(not 1 <= i <= alg.dim for i in z):
            raise PushoutError(f"component {c + 1}: z indices must be distinct and in range")
        if alg.unit is not None:
            if alg.unit not in z:
                raise PushoutError(f"component {c + 1}: unit not in Z")
            if z[0] != alg.unit:
                raise PushoutError(f"component {c + 1}: the shared unit must be the first z index")
        table = _z_local_table(alg, z)
        if table is None:
            raise PushoutError(f"component {c + 1}: Z span is not product-closed")
        if z_table is None:
            z_table = table
        elif table != z_table:
            raise PushoutError(f"component {c + 1}: Z sub-table differs from component 1")
    assert z_table is not None
    return z_table


def degenerate_pushout(spec: PushoutSpec) -> tuple[Algebra, list[Morphism]]:
    """The degenerate pushout algebra and the component embeddings.

    Output basis: the Z slots first, then each component's complement in
    ascending index order.  Products inside Z come from the shared table,
    products touching a component stay in that component's table, and
    complements of distinct components multiply to zero.  The dimension is
    z_dim + sum(dim A_i - z_dim).
    """
    z_table = _validate(spec)
    zd = spec.z_dim
    comps = spec.components
    out_dim = zd + sum(c.dim - zd for c in comps)

    # Per component: local basis index -> output index.
    maps: list[dict[int, int]] = []
    offset = zd
    for c, alg in enumerate(comps):
        m = {z: s + 1 for s, z in enumerate(spec.z_indices[c])}
        for local in spec.complement_indices(c):
            offset += 1
            m[local] = offset
        maps.append(m)

    def lift(c: int, v: Vector) -> Vector:
        out = [_ZERO] * out_dim
        for k, coef in enumerate(v.entries, start=1):
            if coef != 0:
                out[maps[c][k] - 1] = coef
        return Vector(tuple(out))

    constants: dict[tuple[int, int], Vector] = {}
    for a in range(zd):
        for b in range(zd):
            prod = z_table[a][b]
            out = [_ZERO] * out_dim
            for s, coef in enumerate(prod.entries):
                out[s] = coef
            v = Vector(tuple(out))
            if not v.is_zero():
                constants[(a + 1, b + 1)] = v
    for c, alg in enumerate(comps):
        zset = set(spec.z_indices[c])
        for i in range(1, alg.dim + 1):
            for j in range(1, alg.dim + 1):
                if i in zset and j in zset:
                    continue  # shared table already installed
                v = lift(c, alg.product_of_basis(i, j))
                if not v.is_zero():
                    constants[(maps[c][i], maps[c][j])] = v
    unit = 1 if comps[0].unit is not None else None
    label = " (.) ".join(c.label or "?" for c in comps)
    result = Algebra(out_dim, constants, unit=unit, label=label)

    embeddings = []
    for c, alg in enumerate(comps):
        cols = [Vector.basis(out_dim, maps[c][i]) for i in range(1, alg.dim + 1)]
        phi = Morphism(alg, result, Matrix.from_columns(cols))
        assert check_morphism(phi)
        embeddings.append(phi)
    return result, embeddings


class UniversalPropertyError(ValueError):
    pass


def check_universal_property(spec: PushoutSpec, target: Algebra,
                             component_maps: Sequence[Morphism]) -> Morphism:
    """Construct and verify the unique mediating morphism.

    The component maps must be algebra morphisms into the target that agree
    on Z and annihilate cross-copy complement products; the mediating map is
    then determined on the normal-form basis, and uniqueness holds by
    construction since that basis lies in the images of Z and the
    components.
    """
    if len(component_maps) != len(spec.components):
        raise UniversalPropertyError("one component map per component required")
    for c, (alg, phi) in enumerate(zip(spec.components, component_maps)):
        if phi.source is not alg and not phi.source.same_table(alg):
            raise UniversalPropertyError(f"component {c + 1}: map has wrong source")
        if phi.target is not target and not phi.target.same_table(target):
            raise UniversalPropertyError(f"component {c + 1}: map has wrong target")
        defect = morphism_defect(phi)
        if defect is not None:
            raise UniversalPropertyError(
                f"component {c + 1}: map is not an algebra morphism (witness {defect})")
    zd = spec.z_dim
    for s in range(zd):
        images = [phi.matrix.column(spec.z_indices[c][s])
                  for c, phi in enumerate(component_maps)]
        if any(img != images[0] for img in images[1:]):
            raise UniversalPropertyError(f"component maps disagree on Z slot {s + 1}")
    for c1, phi1 in enumerate(component_maps):
        for c2, phi2 in enumerate(component_maps):
            if c1 == c2:
                continue
            for i in spec.complement_indices(c1):
                x = Element(target, phi1.matrix.column(i))
                for j in spec.complement_indices(c2):
                    y = Element(target, phi2.matrix.column(j))
                    if not multiply(target, x, y).is_zero():
                        raise UniversalPropertyError(
                            f"cross-copy product ({c1 + 1}:{i}) * ({c2 + 1}:{j}) "
                            f"is nonzero in the target")
    pushout, _ = degenerate_pushout(spec)
    cols = [component_maps[0].matrix.column(spec.z_indices[0][s]) for s in range(zd)]
    for c in range(len(spec.components)):
        for i in spec.complement_indices(c):
            cols.append(component_maps[c].matrix.column(i))
    phi = Morphism(pushout, target, Matrix.from_columns(cols))
    assert check_morphism(phi)
    return phi


def mixed_pushout_J() -> Algebra:
    """The 3-dimensional commutative algebra glueing the complex numbers to
    the 2-dimensional spin factor over the shared unit: basis (1, i, v)
    with i*i = -1, i*v = 0, v*v = 1."""
    spec = PushoutSpec.over_common_unit([complex_algebra(), jspin(1)])
    result, _ = degenerate_pushout(spec)
    return result.relabel("J")


def degenerate_example_U() -> Algebra:
    """Two 5-dimensional Vidinli algebras glued along the Jordan subalgebra
    spanned by (e1, e2, e4), presented on the basis order
    (e1, e2, e3, e3', e4, e5, e5').  The induced skew form on the
    hyperplane is degenerate (rank 4)."""
    v5 = vidinli(2)
    spec = PushoutSpec((v5, v5), ((1, 2, 4), (1, 2, 4)))
    result, _ = degenerate_pushout(spec)
    # Pushout order is (e1, e2, e4 | e3, e5 | e3', e5'); reorder to match
    # the documented coordinate formula.
    return permute_basis(result, [1, 2, 4, 6, 3, 5, 7], label="U")


def nilpotency_class(algebra: Algebra) -> Optional[int]:
    """Length of the lower central series of an anticommutative product
    until it reaches zero; None when the series stabilizes nonzero.

    The class is s when the (s+1)-st term vanishes but the s-th does not;
    an abelian bracket has class 1.
    """
    if not algebra.is_anticommutative():
        raise ValueError("nilpotency class requires an anticommutative product")
    d = algebra.dim
    current = Subspace.full(d)
    step = 1  # current term index of the series
    while step <= d + 1:
        sb = SpanBuilder(d)
        for v in current.basis:
            x = algebra.element(v)
            for i in range(1, d + 1):
                sb.add(multiply(algebra, algebra.basis_element(i), x).coords)
        nxt = sb.to_subspace()
        if nxt.dim == 0:
            return step
        if nxt == current:
            return None
        current = nxt
        step += 1
    return None
