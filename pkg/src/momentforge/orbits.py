"""Symmetric-group orbits of monomial support sets.

The permutation group of the variables acts on degree-``d`` forms by
substitution.  For enumerating candidate families it suffices to keep one
support set per orbit: the minimum of the orbit, where support sets are
compared through their exponent vectors sorted in descending canonical
order.  That comparison reproduces the ordering of the classical computer
algebra listings this package's fixtures come from (e.g. the class of
``{y^2 z, x^2 z}`` is represented by exactly that set, not by its image
``{x^2 y, y z^2}``).

Enumeration hashes canonical forms per cardinality instead of materializing
the full power set, which keeps the degree-4 case at millisecond cost.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .polyring import (
    ExponentVector,
    ParamPoly,
    SparsePoly,
    canonical_key,
    display_key,
)
from .symd import enumerate_monomials

SupportSet = frozenset[ExponentVector]

Permutation = tuple[int, ...]


def permute_exponents(sigma: Permutation, alpha: ExponentVector) -> ExponentVector:
    """Rename variable ``i`` to ``sigma[i]`` inside one exponent vector."""
    out = [0] * len(alpha)
    for i, e in enumerate(alpha):
        out[sigma[i]] = e
    return tuple(out)


def permute(sigma: Permutation, f: SparsePoly) -> SparsePoly:
    """Apply a coordinate permutation to a polynomial, coefficients carried along."""
    if sorted(sigma) != list(range(f.n)):
        raise ValueError(f"{sigma} is not a permutation of 0..{f.n - 1}")
    return SparsePoly(
        f.n, f.d, {permute_exponents(sigma, exp): c for exp, c in f.terms.items()}
    )


def support_order_key(support) -> tuple:
    """Comparison key: exponent vectors sorted descending in canonical order."""
    return tuple(sorted((canonical_key(a) for a in support), reverse=True))


def canonical_representative(support) -> SupportSet:
    """Minimum of the orbit of ``support`` under all coordinate permutations."""
    support = frozenset(support)
    n = len(next(iter(support)))
    best = None
    best_key = None
    for sigma in permutations(range(n)):
        image = frozenset(permute_exponents(sigma, a) for a in support)
        key = support_order_key(image)
        if best_key is None or key < best_key:
            best, best_key = image, key
    return best


def orbit_of(support) -> set[SupportSet]:
    """All distinct images of a support set under coordinate permutations."""
    support = frozenset(support)
    n = len(next(iter(support)))
    return {
        frozenset(permute_exponents(sigma, a) for a in support)
        for sigma in permutations(range(n))
    }


@dataclass(frozen=True)
class OrbitRepresentative:
    """Canonical support set of one orbit, tagged with its term count."""

    support: SupportSet
    term_count: int


def orbit_classes(n: int, d: int, m: int) -> list[OrbitRepresentative]:
    """Representatives of all orbits of size-``m`` support sets, sorted."""
    basis = enumerate_monomials(n, d)
    if not 1 <= m <= len(basis):
        raise ValueError(f"term count {m} out of range 1..{len(basis)}")
    seen: set[SupportSet] = set()
    for combo in combinations(basis.order, m):
        seen.add(canonical_representative(combo))
    reps = sorted(seen, key=support_order_key)
    return [OrbitRepresentative(s, m) for s in reps]


def uses_all_variables(support) -> bool:
    """True iff every variable has a positive exponent somewhere in the support."""
    support = frozenset(support)
    n = len(next(iter(support)))
    return all(any(a[i] > 0 for a in support) for i in range(n))


@dataclass(frozen=True)
class ParamFamily:
    """Parametric form over a support set.

    Terms are taken in display order (descending canonical); the first
    ``m - 1`` receive the symbols ``b1 .. b_{m-1}`` and the display-last
    term is pinned to coefficient 1, matching the classical presentation
    (e.g. ``{x^2 z, x y^2}`` becomes ``b1*x^2*z + x*y^2``).
    """

    support: SupportSet
    poly: SparsePoly
    nparams: int

    def display_terms(self) -> list[ExponentVector]:
        return sorted(self.support, key=display_key)

    def substitute(self, values) -> SparsePoly:
        from .polyring import substitute_params

        return substitute_params(self.poly, values)

    def __str__(self):
        from .polyring import format_monomial

        parts = []
        for k, alpha in enumerate(self.display_terms()):
            mono = format_monomial(self.poly.n, alpha)
            parts.append(mono if k == self.nparams else f"b{k + 1}*{mono}")
        return " + ".join(parts)


def build_family(support) -> ParamFamily:
    """Attach parameters to a support set of at least two monomials."""
    support = frozenset(support)
    if len(support) < 2:
        raise ValueError("a one-term support needs no parameters; monomials are handled directly")
    ordered = sorted(support, key=display_key)
    nparams = len(ordered) - 1
    n = len(ordered[0])
    terms = {}
    for k, alpha in enumerate(ordered[:-1]):
        terms[alpha] = ParamPoly.symbol(nparams, k)
    terms[ordered[-1]] = ParamPoly.const(nparams, Fraction(1))
    d = sum(ordered[0])
    return ParamFamily(support, SparsePoly.make(n, d, terms), nparams)
