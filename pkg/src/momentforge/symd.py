"""Structure of the space of degree-d forms in n variables.

Monomial basis enumeration in the canonical order, the permutation-invariant
weights ``w(a) = a_1! ... a_n! / d!``, the unitarily invariant inner product
built from them, coefficient vectors, and projective normalization.

Square roots are never materialized: every downstream use of the weighted
coefficient vector is quadratic, so the inner product folds the weight in
directly and stays rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .polyring import (
    ExponentVector,
    ParamPoly,
    RationalFunction,
    Scalar,
    SparsePoly,
    canonical_key,
    degree,
    multiply_scalars,
    scalar_is_zero,
)


@dataclass(frozen=True)
class MonomialBasis:
    """All degree-``d`` exponent vectors in ``n`` variables, canonically ordered."""

    n: int
    d: int
    order: tuple[ExponentVector, ...]

    def __len__(self) -> int:
        return len(self.order)

    def index(self, alpha: ExponentVector) -> int:
        return _basis_index(self.n, self.d)[tuple(alpha)]

    def weights(self) -> tuple[Fraction, ...]:
        return tuple(weight(alpha) for alpha in self.order)


def _compositions(n: int, d: int):
    # all length-n tuples of non-negative integers summing to d
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(n - 1, d - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_monomials(n: int, d: int) -> MonomialBasis:
    """The ordered monomial basis; its length is binomial(n+d-1, d)."""
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    order = tuple(sorted(_compositions(n, d), key=canonical_key))
    assert len(order) == comb(n + d - 1, d)
    return MonomialBasis(n, d, order)


@lru_cache(maxsize=None)
def _basis_index(n: int, d: int) -> dict[ExponentVector, int]:
    basis = enumerate_monomials(n, d)
    return {alpha: i for i, alpha in enumerate(basis.order)}


@lru_cache(maxsize=None)
def weight(alpha: ExponentVector) -> Fraction:
    """Squared norm of the monomial ``x^alpha``: a_1! ... a_n! / d!."""
    num = 1
    for e in alpha:
        num *= factorial(e)
    return Fraction(num, factorial(degree(alpha)))


def inner_product(f: SparsePoly, g: SparsePoly) -> Scalar:
    """Invariant hermitian product; conjugation is the identity on real scalars.

    Computed as ``sum_a conj(f_a) g_a w(a)`` with exact rational weights.
    """
    if (f.n, f.d) != (g.n, g.d):
        raise ValueError(f"inner product needs equal shapes, got {(f.n, f.d)} and {(g.n, g.d)}")
    total: Scalar = Fraction(0)
    small, large = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    for exp, c in small.terms.items():
        other = large.terms.get(exp)
        if other is None:
            continue
        total = total + multiply_scalars(multiply_scalars(c, other), weight(exp))
    return total


@dataclass(frozen=True)
class CoefficientVector:
    """Coefficients of a form aligned to the canonical basis order."""

    basis: MonomialBasis
    entries: tuple

    def __len__(self) -> int:
        return len(self.entries)


def coefficient_vector(f: SparsePoly) -> CoefficientVector:
    """Read off coefficients in canonical basis order, zeros filled in."""
    basis = enumerate_monomials(f.n, f.d)
    entries = tuple(f.terms.get(alpha, Fraction(0)) for alpha in basis.order)
    return CoefficientVector(basis, entries)


def poly_from_coefficients(basis: MonomialBasis, entries) -> SparsePoly:
    """Inverse of :func:`coefficient_vector`."""
    if len(entries) != len(basis):
        raise ValueError("entry count does not match basis size")
    terms = {
        alpha: c for alpha, c in zip(basis.order, entries) if not scalar_is_zero(c)
    }
    return SparsePoly(basis.n, basis.d, terms)


def _divide(entry, pivot):
    if isinstance(pivot, ParamPoly):
        if not isinstance(entry, ParamPoly):
            entry = ParamPoly.const(pivot.nsyms, entry)
        return RationalFunction.make(entry, pivot)
    if isinstance(entry, ParamPoly):
        return entry * (Fraction(1) / Fraction(pivot))
    return entry / pivot


def projective_normalize(v: CoefficientVector) -> CoefficientVector:
    """Divide by the first nonzero entry (canonical order); idempotent.

    Parametric vectors get rational-function entries, e.g. the family
    ``b3*z^3 + x*y*z + b2*y^3 + b1*x^3`` normalizes to
    ``[1, 0, 0, b2/b1, 0, 1/b1, 0, 0, 0, b3/b1]``.
    """
    pivot = None
    for entry in v.entries:
        if not scalar_is_zero(entry):
            pivot = entry
            break
    if pivot is None:
        raise ValueError("cannot projectively normalize the zero vector")
    if not isinstance(pivot, ParamPoly) and pivot == 1:
        return v
    entries = tuple(
        entry if scalar_is_zero(entry) else _divide(entry, pivot) for entry in v.entries
    )
    return CoefficientVector(v.basis, entries)


def multidegree(f: SparsePoly) -> ExponentVector:
    """Exponent vector of a single-monomial polynomial."""
    if len(f.terms) != 1:
        raise ValueError("multidegree is defined for single monomials only")
    return next(iter(f.terms))
