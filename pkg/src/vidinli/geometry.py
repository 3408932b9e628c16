"""Binary projective geometry PG(k-1,2) and the reconstruction of the
Vidinli product from local subalgebra rules.

Points are the nonzero bit-vectors of length k, encoded as the integers
1..2^k-1; a set of points is a flat when it is closed under XOR (rank r
flats are the (r+1)-dimensional GF(2) subspaces).  With the labeling used
here the lines through the point 1 are exactly {1, 2i, 2i+1}, and for k=3
the line set coincides with the seven support triples of the 7-dimensional
cross product.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Mapping, Optional, Sequence

from .algebra import (
    Algebra,
    Morphism,
    check_morphism,
    induced_on_basis_indices,
    subalgebra_closure,
)
from .constructors import vidinli, vidinli_jordan
from .linalg import Matrix, Subspace, Vector


def _gf2_subspaces(k: int, d: int) -> list[tuple[int, ...]]:
    """All d-dimensional GF(2) subspaces of F_2^k as sorted tuples of their
    nonzero points, enumerated through reduced echelon bases (one basis per
    subspace)."""
    if d == 0:
        return []
    out = []
    for pivots in combinations(range(k), d):
        free_cells = [(r, c) for r in range(d) for c in range(k)
                      if c > pivots[r] and c not in pivots]
        for mask in range(1 << len(free_cells)):
            rows = [1 << (k - 1 - pivots[r]) for r in range(d)]
            for bit, (r, c) in enumerate(free_cells):
                if (mask >> bit) & 1:
                    rows[r] |= 1 << (k - 1 - c)
            points = set()
            for combo in range(1, 1 << d):
                v = 0
                for r in range(d):
                    if (combo >> r) & 1:
                        v ^= rows[r]
                points.add(v)
            out.append(tuple(sorted(points)))
    return sorted(out)


@dataclass(frozen=True)
class PGSpace:
    """Incidence data of PG(k-1,2): points, lines, and all flats by rank."""

    k: int
    points: tuple[int, ...]
    lines: tuple[tuple[int, ...], ...]
    flats: Mapping[int, tuple[tuple[int, ...], ...]]


def pg(k: int) -> PGSpace:
    """Full incidence data of PG(k-1,2); rank r flats for r = 0..k-1."""
    if k < 2:
        raise ValueError("k must be >= 2")
    points = tuple(range(1, 2 ** k))
    flats = {r: tuple(_gf2_subspaces(k, r + 1)) for r in range(k)}
    return PGSpace(k, points, flats[1], flats)


@dataclass(frozen=True)
class Labeling:
    """Bijection between points and basis labels 1..2^k-1.

    The identity labeling (a point's label is its bit-vector value) already
    places the lines through 1 at {1, 2i, 2i+1}: the third point of the
    line through 1 and a is a XOR 1, which couples 2i with 2i+1.
    """

    k: int
    point_to_label: Mapping[int, int]

    def label(self, point: int) -> int:
        return self.point_to_label[point]

    def label_flat(self, flat: Sequence[int]) -> tuple[int, ...]:
        return tuple(sorted(self.point_to_label[p] for p in flat))


def vidinli_labeling(k: int) -> Labeling:
    if k < 2:
        raise ValueError("k must be >= 2")
    return Labeling(k, {p: p for p in range(1, 2 ** k)})


class FlatKind(Enum):
    ANTI_CHAIN = "anti_chain"
    VJ_CHAIN = "vj_chain"
    NEITHER = "neither"


@dataclass(frozen=True)
class FlatClass:
    flat: tuple[int, ...]  # labels, sorted
    kind: FlatKind


def _classify_labeled_flat(labels: tuple[int, ...], n_pairs: int) -> FlatKind:
    members = set(labels)
    if 1 in members:
        ok = all((2 * i in members) == (2 * i + 1 in members)
                 for i in range(1, n_pairs + 1))
        return FlatKind.ANTI_CHAIN if ok else FlatKind.NEITHER
    ok = all((2 * i in members) != (2 * i + 1 in members)
             for i in range(1, n_pairs + 1)
             if (2 * i in members) or (2 * i + 1 in members))
    return FlatKind.VJ_CHAIN if ok else FlatKind.NEITHER


def classify_flats(space: PGSpace, labeling: Labeling) -> list[FlatClass]:
    """Classify every rank k-2 flat as a Vidinli anti-chain (contains the
    unit label and full coupled pairs) or a Vidinli-Jordan chain (avoids the
    unit label and meets each coupled pair exactly once)."""
    if labeling.k != space.k:
        raise ValueError("labeling size mismatch")
    n_pairs = 2 ** (space.k - 1) - 1
    out = []
    for flat in space.flats[space.k - 2]:
        labels = labeling.label_flat(flat)
        out.append(FlatClass(labels, _classify_labeled_flat(labels, n_pairs)))
    return out


class CompatibilityConflict(ValueError):
    def __init__(self, flat1: tuple[int, ...], flat2: tuple[int, ...],
                 pair: tuple[int, int]):
        super().__init__(
            f"local rules on flats {flat1} and {flat2} disagree on basis pair {pair}")
        self.flat1 = flat1
        self.flat2 = flat2
        self.pair = pair


class CoverageGap(ValueError):
    def __init__(self, pair: tuple[int, int]):
        super().__init__(f"basis pair {pair} is covered by no local rule")
        self.pair = pair


@dataclass(frozen=True)
class LocalRule:
    """A local multiplication rule: a model algebra installed on the span of
    the listed global basis indices (sorted; position s carries support[s])."""

    flat: tuple[int, ...]
    support: tuple[int, ...]
    model: Algebra


def local_rules(k: int, labeling: Optional[Labeling] = None) -> list[LocalRule]:
    """One rule per rank k-2 flat: a Vidinli algebra on each anti-chain span,
    a Vidinli-Jordan algebra on the unit line plus each chain span."""
    space = pg(k)
    labeling = labeling or vidinli_labeling(k)
    rules = []
    for fc in classify_flats(space, labeling):
        if fc.kind is FlatKind.ANTI_CHAIN:
            m = (len(fc.flat) - 1) // 2
            rules.append(LocalRule(fc.flat, fc.flat, vidinli(m)))
        elif fc.kind is FlatKind.VJ_CHAIN:
            support = tuple(sorted((1,) + fc.flat))
            rules.append(LocalRule(fc.flat, support, vidinli_jordan(len(support))))
        else:
            raise ValueError(f"flat {fc.flat} is neither an anti-chain nor a chain")
    return rules


def assemble_product(k: int, rules: Sequence[LocalRule]) -> tuple[Algebra, int]:
    """Assemble the global bilinear product from local rules.

    Every rule scatters its model's basis products into global coordinates;
    overlapping assignments must agree (CompatibilityConflict otherwise) and
    every unordered basis pair must be covered (CoverageGap otherwise).
    Returns the algebra and the number of overlap agreements checked.
    """
    dim = 2 ** k - 1
    products: dict[tuple[int, int], Vector] = {}
    owner: dict[tuple[int, int], tuple[int, ...]] = {}
    overlap_checks = 0
    for rule in rules:
        sup = rule.support
        if rule.model.dim != len(sup):
            raise ValueError("rule model does not match its support size")
        for a, ga in enumerate(sup, start=1):
            for b, gb in enumerate(sup, start=1):
                local = rule.model.product_of_basis(a, b)
                coeffs = [local.coord(s + 1) for s in range(len(sup))]
                out = [0] * dim
                for s, c in enumerate(coeffs):
                    out[sup[s] - 1] = c
                vec = Vector.of(out)
                key = (ga, gb)
                if key in products:
                    overlap_checks += 1
                    if products[key] != vec:
                        raise CompatibilityConflict(owner[key], rule.flat, key)
                else:
                    products[key] = vec
                    owner[key] = rule.flat
    for i in range(1, dim + 1):
        for j in range(i, dim + 1):
            if (i, j) not in products:
                raise CoverageGap((i, j))
    constants = {key: v for key, v in products.items() if not v.is_zero()}
    return Algebra(dim, constants, unit=1, label=f"PG({k - 1},2)-assembled"), overlap_checks


def reconstruct_product(k: int, labeling: Optional[Labeling] = None) -> Algebra:
    """The unique global product determined by the local flat rules; equals
    the Vidinli algebra of dimension 2^k - 1."""
    if k < 3:
        raise ValueError("reconstruction needs k >= 3")
    algebra, _ = assemble_product(k, local_rules(k, labeling))
    return algebra


@dataclass(frozen=True)
class LineAudit:
    line: tuple[int, ...]
    through_unit: bool
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class FanoAuditReport:
    lines: tuple[LineAudit, ...]

    @property
    def ok(self) -> bool:
        return all(entry.ok for entry in self.lines)

    @property
    def v3_line_count(self) -> int:
        return sum(1 for e in self.lines if e.through_unit and e.ok)

    @property
    def vj_line_count(self) -> int:
        return sum(1 for e in self.lines if not e.through_unit and e.ok)


def fano_subalgebra_audit(algebra: Algebra) -> FanoAuditReport:
    """Audit a 7-dimensional algebra against the Fano-plane decomposition:
    lines through 1 must span 3-dimensional Vidinli subalgebras, the other
    lines must extend by the unit to the 4-dimensional Jordan table."""
    if algebra.dim != 7 or algebra.unit != 1:
        raise ValueError("audit expects a 7-dimensional algebra with unit e1")
    space = pg(3)
    labeling = vidinli_labeling(3)
    entries = []
    for flat in space.lines:
        labels = labeling.label_flat(flat)
        if 1 in labels:
            closure = subalgebra_closure(
                algebra, [algebra.basis_element(i) for i in labels])
            span = Subspace.from_vectors(7, [Vector.basis(7, i) for i in labels])
            if closure != span:
                entries.append(LineAudit(labels, True, False, "span not closed"))
                continue
            cols = [Vector.basis(7, i) for i in labels]
            phi = Morphism(vidinli(1), algebra, Matrix.from_columns(cols))
            ok = check_morphism(phi)
            entries.append(LineAudit(labels, True, ok,
                                     "" if ok else "not a V3 copy"))
        else:
            support = tuple(sorted((1,) + labels))
            induced = induced_on_basis_indices(algebra, list(support))
            if induced is None:
                entries.append(LineAudit(labels, False, False, "span not closed"))
                continue
            ok = induced.same_table(vidinli_jordan(4))
            entries.append(LineAudit(labels, False, ok,
                                     "" if ok else "not the VJ4 table"))
    return FanoAuditReport(tuple(entries))
