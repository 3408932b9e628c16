"""PG(k-1,2) incidence, flat classification, and product reconstruction."""

import pytest

from vidinli.constructors import SkewForm, vidinli, vidinli_type
from vidinli.geometry import (
    CompatibilityConflict,
    CoverageGap,
    FlatKind,
    LocalRule,
    assemble_product,
    classify_flats,
    fano_subalgebra_audit,
    local_rules,
    pg,
    reconstruct_product,
    vidinli_labeling,
)
from vidinli.linalg import Vector


def gaussian_binomial(k, d):
    """Number of d-dimensional subspaces of F_2^k."""
    num = den = 1
    for i in range(d):
        num *= 2 ** (k - i) - 1
        den *= 2 ** (d - i) - 1
    return num // den


FANO_LINES = {(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6)}


def test_pg_counts():
    assert len(pg(2).points) == 3 and len(pg(2).lines) == 1
    assert len(pg(3).points) == 7 and len(pg(3).lines) == 7
    space4 = pg(4)
    assert len(space4.points) == 15
    assert len(space4.lines) == 35
    assert len(space4.flats[2]) == 15
    for k in range(2, 6):
        space = pg(k)
        assert len(space.points) == 2 ** k - 1
        assert len(space.lines) == (2 ** k - 1) * (2 ** (k - 1) - 1) // 3
        for r in range(1, k):
            assert len(space.flats[r]) == gaussian_binomial(k, r + 1)
    with pytest.raises(ValueError):
        pg(1)


def test_lines_are_xor_triples():
    for k in (3, 4):
        for line in pg(k).lines:
            a, b, c = line
            assert a ^ b == c
    # Every pair of distinct points lies on exactly one line.
    space = pg(4)
    for p in space.points:
        for q in space.points:
            if p != q:
                assert sum(1 for line in space.lines if p in line and q in line) == 1


def test_labeling_invariants():
    for k in (2, 3, 4, 5):
        labeling = vidinli_labeling(k)
        space = pg(k)
        for line in space.lines:
            labels = labeling.label_flat(line)
            if 1 in labels:
                _, a, b = labels
                assert a % 2 == 0 and b == a + 1
    assert {tuple(sorted(l)) for l in pg(3).lines} == FANO_LINES


def test_labeling_fano_lines():
    labeling = vidinli_labeling(3)
    space = pg(3)
    through = {labeling.label_flat(l) for l in space.lines if 1 in l}
    away = {labeling.label_flat(l) for l in space.lines if 1 not in l}
    assert through == {(1, 2, 3), (1, 4, 5), (1, 6, 7)}
    assert away == {(2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6)}


def test_classify_flats_counts():
    space3 = pg(3)
    classes3 = classify_flats(space3, vidinli_labeling(3))
    kinds3 = [fc.kind for fc in classes3]
    assert kinds3.count(FlatKind.ANTI_CHAIN) == 3
    assert kinds3.count(FlatKind.VJ_CHAIN) == 4
    assert FlatKind.NEITHER not in kinds3

    space4 = pg(4)
    classes4 = classify_flats(space4, vidinli_labeling(4))
    kinds4 = [fc.kind for fc in classes4]
    assert kinds4.count(FlatKind.ANTI_CHAIN) == 7
    assert kinds4.count(FlatKind.VJ_CHAIN) == 8
    assert FlatKind.NEITHER not in kinds4
    # Anti-chains contain label 1, chains do not; no flat is both.
    for fc in classes4:
        assert (1 in fc.flat) == (fc.kind is FlatKind.ANTI_CHAIN)


def test_reconstruction_equals_vidinli():
    assert reconstruct_product(3).same_table(vidinli(3).relabel("PG(2,2)-assembled"))
    assert reconstruct_product(4).same_table(vidinli(7).relabel("PG(3,2)-assembled"))
    with pytest.raises(ValueError):
        reconstruct_product(2)


def test_k3_has_no_overlap_constraints():
    _, overlaps = assemble_product(3, local_rules(3))
    # Distinct Fano lines meet in at most one point, so no off-diagonal
    # pair is assigned twice; the only re-assignments are diagonal squares
    # and unit products shared between rules.
    rules = local_rules(3)
    diagonal_overlaps = 0
    seen = set()
    for rule in rules:
        for a in rule.support:
            for b in rule.support:
                key = (a, b)
                if key in seen and a != b and 1 not in key:
                    raise AssertionError(f"off-diagonal overlap {key}")
                if key in seen:
                    diagonal_overlaps += 1
                seen.add(key)
    assert overlaps == diagonal_overlaps


def test_perturbed_rule_conflicts():
    # Flipping the sign of a single line rule for k=4 collides with the
    # other planes through that line.
    rules = local_rules(4)
    target = next(r for r in rules if r.flat[:3] == (1, 2, 3) and len(r.flat) == 7)
    flipped_constants = dict(target.model.constants)
    flipped_constants[(2, 3)] = -flipped_constants[(2, 3)]
    flipped_constants[(3, 2)] = -flipped_constants[(3, 2)]
    from vidinli.algebra import Algebra
    bad_model = Algebra(target.model.dim, flipped_constants, unit=1, label="bad")
    bad_rules = [LocalRule(r.flat, r.support, bad_model if r is target else r.model)
                 for r in rules]
    with pytest.raises(CompatibilityConflict):
        assemble_product(4, bad_rules)


def test_missing_rules_leave_gaps():
    rules = [r for r in local_rules(3) if 1 in r.flat]  # drop the VJ lines
    with pytest.raises(CoverageGap):
        assemble_product(3, rules)


def test_fano_audit_passes_on_v7():
    report = fano_subalgebra_audit(vidinli(3))
    assert report.ok
    assert report.v3_line_count == 3
    assert report.vj_line_count == 4


def test_fano_audit_fails_on_degenerate_form():
    degenerate = SkewForm.from_pairs(3, {(2, 3): 1, (4, 5): 1})  # (6,7) pair dead
    report = fano_subalgebra_audit(vidinli_type(3, degenerate))
    assert not report.ok
    bad = [e for e in report.lines if not e.ok]
    assert any(e.line == (1, 6, 7) for e in bad)
