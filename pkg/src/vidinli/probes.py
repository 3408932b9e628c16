"""Deterministic probe families used by checks and tests.

Everything here is random-free: sampled inputs come from fixed enumerations
or a fixed linear congruential stream, so suite reports are reproducible
byte for byte.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from .linalg import Vector


def spectral_probe_family(dim: int) -> list[Vector]:
    """All vectors with entries in {-1, 0, 1, 2} and at most 3 nonzero
    coordinates (nonzero ones excluded)."""
    values = (-1, 1, 2)
    probes = []
    for r in (1, 2, 3):
        if r > dim:
            break
        for positions in combinations(range(dim), r):
            for vals in product(values, repeat=r):
                v = [0] * dim
                for p, c in zip(positions, vals):
                    v[p] = c
                probes.append(Vector.of(v))
    return probes


def small_probe_vectors(dim: int) -> list[Vector]:
    """All nonzero vectors with entries in {-1, 0, 1} and at most 2 nonzero
    coordinates."""
    probes = []
    for r in (1, 2):
        if r > dim:
            break
        for positions in combinations(range(dim), r):
            for vals in product((-1, 1), repeat=r):
                v = [0] * dim
                for p, c in zip(positions, vals):
                    v[p] = c
                probes.append(Vector.of(v))
    return probes


class _LCG:
    """Tiny deterministic generator (64-bit LCG, fixed constants)."""

    def __init__(self, seed: int):
        self.state = seed & 0xFFFFFFFFFFFFFFFF

    def next(self) -> int:
        self.state = (6364136223846793005 * self.state + 1442695040888963407) % (1 << 64)
        return self.state >> 33


def deterministic_rationals(count: int, seed: int = 2024) -> list[Fraction]:
    """A fixed stream of small rationals with numerators in -4..4 and
    denominators in 1..3."""
    gen = _LCG(seed)
    out = []
    while len(out) < count:
        num = gen.next() % 9 - 4
        den = gen.next() % 3 + 1
        out.append(Fraction(num, den))
    return out


def deterministic_vectors(dim: int, count: int, seed: int = 2024) -> list[Vector]:
    """A fixed stream of small rational vectors."""
    vals = deterministic_rationals(dim * count, seed)
    return [Vector.of(vals[i * dim:(i + 1) * dim]) for i in range(count)]


def rational_unit_vectors_v0(n: int) -> list[Vector]:
    """Rational unit vectors in the hyperplane e1-perp of QQ^(2n+1): the
    basis directions plus Pythagorean (3/5, 4/5) mixtures of basis pairs."""
    dim = 2 * n + 1
    probes = [Vector.basis(dim, i) for i in range(2, dim + 1)]
    probes += [-Vector.basis(dim, i) for i in range(2, dim + 1)]
    mix = []
    for i in range(2, dim + 1):
        for j in range(i + 1, dim + 1):
            v = [0] * dim
            v[i - 1] = Fraction(3, 5)
            v[j - 1] = Fraction(4, 5)
            mix.append(Vector.of(v))
            w = [0] * dim
            w[i - 1] = Fraction(4, 5)
            w[j - 1] = Fraction(-3, 5)
            mix.append(Vector.of(w))
    return probes + mix
