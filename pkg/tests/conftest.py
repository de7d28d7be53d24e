"""Shared generators for randomized property tests (seeded, deterministic)."""

from __future__ import annotations

import random
from fractions import Fraction

from momentforge.polyring import SparsePoly
from momentforge.symd import enumerate_monomials


def random_rational_poly(
    rng: random.Random, n: int = 3, d: int = 3, density: float = 1.0
) -> SparsePoly:
    """Random nonzero polynomial with coefficients k/8 in [-2, 2].

    At least one coefficient has magnitude >= 1/2, keeping the squared norm
    comfortably away from zero for numerical comparisons.
    """
    basis = enumerate_monomials(n, d)
    while True:
        terms = {}
        for alpha in basis.order:
            if rng.random() <= density:
                c = Fraction(rng.randint(-16, 16), 8)
                if c != 0:
                    terms[alpha] = c
        if terms and max(abs(c) for c in terms.values()) >= Fraction(1, 2):
            return SparsePoly(n, d, dict(terms))


def random_sparse_poly(rng: random.Random, n: int = 3, d: int = 3) -> SparsePoly:
    return random_rational_poly(rng, n, d, density=0.5)
