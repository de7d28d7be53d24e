"""Moment-map machinery for hypersurfaces.

For a nonzero degree-``d`` form ``f`` in ``n`` variables, the hermitian
matrix ``H(f)`` has entries ``<df/dx_j, df/dx_i> / (d * |f|^2)`` and the
(traceless) moment matrix is ``2 (H(f) - (d/n) I)``.  The square length
``Re Tr(m . m)`` is the Morse function whose critical points this package
hunts.

Everything is exact: gradients with respect to all coefficient directions
are obtained by a first-order expansion of the trace formula (quotient rule
applied once at the very end), never by numeric differentiation.  The
alternative flow construction differentiates the pulled-back norm along
one-parameter subgroups exactly, and the complex-coefficient variant splits
each coefficient into a real/imaginary symbol pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .polyring import (
    DegenerateInputError,
    ParamPoly,
    RationalFunction,
    Scalar,
    SparsePoly,
    scalar_is_zero,
)
from .symd import enumerate_monomials, inner_product, weight

__all__ = [
    "MomentMatrix",
    "SymbolicMomentMatrix",
    "RationalFunction",
    "norm_squared",
    "hermitian_matrix",
    "moment_matrix",
    "square_length",
    "symbolic_moment_matrix",
    "square_length_symbolic",
    "gradient",
    "gradient_symbolic",
    "flow_derivative",
    "complex_gradient_imag_parts",
]


@dataclass(frozen=True)
class MomentMatrix:
    """An ``n`` x ``n`` symmetric matrix of scalars (0-based indexing)."""

    n: int
    entries: tuple[tuple[Scalar, ...], ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def trace(self) -> Scalar:
        t = self.entries[0][0]
        for i in range(1, self.n):
            t = t + self.entries[i][i]
        return t

    def diagonal(self) -> tuple:
        return tuple(self.entries[i][i] for i in range(self.n))

    def is_diagonal(self) -> bool:
        return all(
            scalar_is_zero(self.entries[i][j])
            for i in range(self.n)
            for j in range(self.n)
            if i != j
        )


@dataclass(frozen=True)
class SymbolicMomentMatrix:
    """Moment matrix of a parametric family over a common denominator.

    ``numerators[i][j] / denominator`` is the (i, j) entry.  All entries and
    the denominator are integer polynomials in the parameters with overall
    content 1, which reproduces the printed normalization of the degree-4
    general matrix (denominator ``36 |f|^2``).
    """

    n: int
    numerators: tuple[tuple[ParamPoly, ...], ...]
    denominator: ParamPoly

    def entry(self, i: int, j: int) -> RationalFunction:
        return RationalFunction.make(self.numerators[i][j], self.denominator)


def norm_squared(f: SparsePoly) -> Scalar:
    """The invariant squared norm ``<f, f>``."""
    return inner_product(f, f)


def _require_nonzero(f: SparsePoly):
    if f.is_zero():
        raise DegenerateInputError("the zero polynomial has no moment matrix")


def _derivatives(f: SparsePoly) -> list[SparsePoly]:
    from .polyring import partial_derivative

    return [partial_derivative(f, i + 1) for i in range(f.n)]


def _gram(f: SparsePoly) -> list[list[Scalar]]:
    # entry (i, j) = <df/dx_j, df/dx_i>; real inputs make this symmetric
    derivs = _derivatives(f)
    n = f.n
    q: list[list[Scalar]] = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = inner_product(derivs[j], derivs[i])
            q[i][j] = v
            q[j][i] = v
    return q


def hermitian_matrix(f: SparsePoly) -> MomentMatrix:
    """The matrix ``H(f)``; exact for exact input."""
    _require_nonzero(f)
    if f.is_parametric():
        raise TypeError("parametric input: use symbolic_moment_matrix")
    q = _gram(f)
    scale = norm_squared(f) * f.d
    entries = tuple(tuple(q[i][j] / scale for j in range(f.n)) for i in range(f.n))
    return MomentMatrix(f.n, entries)


def moment_matrix(f: SparsePoly) -> MomentMatrix:
    """The traceless moment matrix ``2 (H(f) - (d/n) I)``."""
    h = hermitian_matrix(f)
    shift = Fraction(f.d, f.n)
    entries = tuple(
        tuple(
            2 * (h.entries[i][j] - shift) if i == j else 2 * h.entries[i][j]
            for j in range(f.n)
        )
        for i in range(f.n)
    )
    return MomentMatrix(f.n, entries)


def square_length(f: SparsePoly) -> Scalar:
    """``Re Tr(m . m)``; non-negative, and zero exactly at the minimal orbits."""
    m = moment_matrix(f)
    total: Scalar = Fraction(0)
    for i in range(f.n):
        for j in range(f.n):
            total = total + m.entries[i][j] * m.entries[j][i]
    return total


# ---------------------------------------------------------------------------
# symbolic (parametric) route
#
# m[i][j] = M[i][j] / (d * norm2) with the polynomial matrix
# M[i][j] = 2 Q[i][j] - (2 d^2 / n) delta_ij norm2, so no division happens
# until a rational function is assembled at the very end.


def _polynomial_matrix(f: SparsePoly):
    q = _gram(f)
    norm2 = norm_squared(f)
    shift = Fraction(2 * f.d * f.d, f.n)
    n = f.n
    m = [
        [
            2 * q[i][j] - shift * norm2 if i == j else 2 * q[i][j]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return m, norm2


def symbolic_moment_matrix(family: SparsePoly) -> SymbolicMomentMatrix:
    """Moment matrix of a parametric family over one integral denominator."""
    _require_nonzero(family)
    nsyms = _family_symbols(family)
    m, norm2 = _polynomial_matrix(_as_parametric(family, nsyms))
    denom = norm2 * family.d

    lcm = 1
    for p in [denom] + [e for row in m for e in row]:
        for c in p.terms.values():
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    m = [[e * lcm for e in row] for row in m]
    denom = denom * lcm
    g = 0
    for p in [denom] + [e for row in m for e in row]:
        g = gcd(g, p.content().numerator)
    if g > 1:
        m = [[e * Fraction(1, g) for e in row] for row in m]
        denom = denom * Fraction(1, g)
    return SymbolicMomentMatrix(
        family.n, tuple(tuple(row) for row in m), denom
    )


def _family_symbols(f: SparsePoly) -> int:
    from .polyring import parameter_symbols

    return parameter_symbols(f)


def _as_parametric(f: SparsePoly, nsyms: int) -> SparsePoly:
    """Lift every coefficient into the parameter ring so arithmetic is uniform."""
    terms = {}
    for exp, c in f.terms.items():
        if isinstance(c, ParamPoly):
            terms[exp] = c
        elif isinstance(c, float):
            raise TypeError("cannot mix float coefficients with parameters")
        else:
            terms[exp] = ParamPoly.const(nsyms, c)
    return SparsePoly(f.n, f.d, terms)


def square_length_symbolic(family: SparsePoly) -> RationalFunction:
    """``|m|^2`` of a parametric family as an exact rational function."""
    _require_nonzero(family)
    nsyms = _family_symbols(family)
    if nsyms == 0:
        value = square_length(family)
        return RationalFunction.make(
            ParamPoly.const(0, value), ParamPoly.const(0, 1)
        )
    m, norm2 = _polynomial_matrix(_as_parametric(family, nsyms))
    n = family.n
    p = ParamPoly(nsyms)
    for i in range(n):
        for j in range(n):
            p = p + m[i][j] * m[j][i]
    r = norm2 * norm2 * (family.d * family.d)
    return RationalFunction.make(p, r)


# ---------------------------------------------------------------------------
# exact coefficient gradients (first-order expansion in every direction)
#
# A jet is a pair (value, {direction: derivative}); products keep only the
# first-order part, so the whole trace formula stays polynomial and the
# quotient rule is applied once:
#
#   grad_a |m|^2 = (P_1^a * norm2 - 2 P_0 * norm2_1^a) / (d^2 * norm2^3)

Jet = tuple


def _jadd(a: Jet, b: Jet) -> Jet:
    av, ad = a
    bv, bd = b
    if not ad:
        d = bd
    elif not bd:
        d = ad
    else:
        d = dict(ad)
        for k, v in bd.items():
            if k in d:
                d[k] = d[k] + v
            else:
                d[k] = v
    return (av + bv, d)


def _jmul(a: Jet, b: Jet) -> Jet:
    av, ad = a
    bv, bd = b
    d: dict = {}
    if ad and bv != 0:
        for k, v in ad.items():
            d[k] = v * bv
    if bd and av != 0:
        for k, v in bd.items():
            if k in d:
                d[k] = d[k] + av * v
            else:
                d[k] = av * v
    return (av * bv, d)


def _jscale(a: Jet, c) -> Jet:
    av, ad = a
    return (av * c, {k: v * c for k, v in ad.items()})


def _jet_trace_parts(coeff_jets, basis, n, d, zero):
    """(P, norm2) jets of the trace formula for coefficient jets in basis order."""
    weights = [weight(alpha) for alpha in basis.order]
    norm2 = (zero, {})
    for jet, w in zip(coeff_jets, weights):
        norm2 = _jadd(norm2, _jscale(_jmul(jet, jet), w))

    # derivative polynomials as maps exponent -> jet
    derivs: list[dict] = []
    for i in range(n):
        dmap: dict = {}
        for alpha, jet in zip(basis.order, coeff_jets):
            if alpha[i] == 0:
                continue
            beta = list(alpha)
            beta[i] -= 1
            beta = tuple(beta)
            contrib = _jscale(jet, Fraction(alpha[i]))
            dmap[beta] = _jadd(dmap[beta], contrib) if beta in dmap else contrib
        derivs.append(dmap)

    shift = Fraction(2 * d * d, n)
    mjets = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            q = (zero, {})
            small, large = (derivs[i], derivs[j])
            if len(large) < len(small):
                small, large = large, small
            for beta, jet in small.items():
                other = large.get(beta)
                if other is not None:
                    q = _jadd(q, _jscale(_jmul(jet, other), weight(beta)))
            entry = _jscale(q, Fraction(2))
            if i == j:
                entry = _jadd(entry, _jscale(norm2, -shift))
            mjets[i][j] = entry
            mjets[j][i] = entry

    p = (zero, {})
    for i in range(n):
        for j in range(n):
            p = _jadd(p, _jmul(mjets[i][j], mjets[j][i]))
    return p, norm2


def _gradient_jets(f: SparsePoly):
    basis = enumerate_monomials(f.n, f.d)
    parametric = f.is_parametric()
    if parametric:
        nsyms = _family_symbols(f)
        zero = ParamPoly(nsyms)
        lifted = _as_parametric(f, nsyms)
        values = [lifted.terms.get(alpha, zero) for alpha in basis.order]
    elif f.is_exact():
        zero = Fraction(0)
        values = [f.terms.get(alpha, zero) for alpha in basis.order]
    else:
        zero = 0.0
        values = [float(f.terms[alpha]) if alpha in f.terms else 0.0 for alpha in basis.order]
    jets = [(v, {k: zero + 1}) for k, v in enumerate(values)]
    p, norm2 = _jet_trace_parts(jets, basis, f.n, f.d, zero)
    return p, norm2, len(basis), zero


def gradient(f: SparsePoly) -> list:
    """Partial derivatives of ``|m|^2`` in all ``binomial(n+d-1, d)`` coefficient
    directions, canonical basis order; exact for exact input."""
    _require_nonzero(f)
    if f.is_parametric():
        raise TypeError("parametric input: use gradient_symbolic")
    p, norm2, size, _ = _gradient_jets(f)
    p0, p1 = p
    n0, n1 = norm2
    if scalar_is_zero(n0):
        raise DegenerateInputError("squared norm vanishes at the evaluation point")
    denom = f.d * f.d * n0 * n0 * n0
    out = []
    for k in range(size):
        numer = p1.get(k, Fraction(0)) * n0 - 2 * p0 * n1.get(k, Fraction(0))
        out.append(numer / denom)
    return out


def gradient_symbolic(family: SparsePoly) -> tuple[list[ParamPoly], ParamPoly]:
    """Gradient numerators of a family plus their common denominator.

    Entry ``k`` of ``|m|^2``'s gradient equals ``numerators[k] / denominator``
    as a rational function of the parameters.
    """
    _require_nonzero(family)
    if _family_symbols(family) == 0:
        raise TypeError("numeric input: use gradient")
    p, norm2, size, zero = _gradient_jets(family)
    p0, p1 = p
    n0, n1 = norm2
    denom = n0 * n0 * n0 * (family.d * family.d)
    numerators = []
    for k in range(size):
        numerators.append(p1.get(k, zero) * n0 - 2 * p0 * n1.get(k, zero))
    return numerators, denom


# ---------------------------------------------------------------------------
# flow construction: exact derivative of t -> |exp(t E_ij).f|^2 / |f|^2


def _tpoly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y != 0:
                out[i + j] += x * y
    return out


def flow_derivative(f: SparsePoly, i: int, j: int) -> Scalar:
    """Derivative at ``t = 0`` of the normalized norm along ``exp(t E_ij)``.

    The elementary matrix ``E_ij`` acts by the substitution
    ``x_i -> x_i + t x_j`` for ``i != j`` (its exponential is ``I + t E_ij``)
    and by ``x_i -> e^t x_i`` on the diagonal; both cases are differentiated
    exactly.  Equals ``2 H(f)_ij`` entrywise, which ties Lie-algebra flows to
    the hermitian-matrix construction.
    """
    _require_nonzero(f)
    if f.is_parametric():
        raise TypeError("flow_derivative expects a numeric polynomial")
    if not (1 <= i <= f.n and 1 <= j <= f.n):
        raise ValueError(f"indices ({i}, {j}) out of range 1..{f.n}")
    norm2 = norm_squared(f)
    if i == j:
        # |f_t|^2 = sum_a w_a c_a^2 e^{2 a_i t}: an exact e^t-monomial sum
        gamma: dict[int, Scalar] = {}
        for alpha, c in f.terms.items():
            k = 2 * alpha[i - 1]
            v = c * c * weight(alpha)
            gamma[k] = gamma.get(k, Fraction(0)) + v
        deriv = sum((k * v for k, v in gamma.items()), Fraction(0))
        return deriv / norm2

    # coefficients of f_t as dense polynomials in t
    ii, jj = i - 1, j - 1
    coeffs: dict[tuple[int, ...], list] = {}
    for alpha, c in f.terms.items():
        a = alpha[ii]
        for s in range(a + 1):
            beta = list(alpha)
            beta[ii] = a - s
            beta[jj] += s
            beta = tuple(beta)
            tc = [Fraction(0)] * (s + 1)
            tc[s] = c * comb(a, s)
            if beta in coeffs:
                prev = coeffs[beta]
                if len(prev) < len(tc):
                    prev, tc = tc, prev
                for k, v in enumerate(tc):
                    prev[k] += v
                coeffs[beta] = prev
            else:
                coeffs[beta] = tc
    norm_t = [Fraction(0), Fraction(0)]
    for beta, tc in coeffs.items():
        sq = _tpoly_mul(tc, tc)
        w = weight(beta)
        for k in range(min(2, len(sq))):
            norm_t[k] += w * sq[k]
    return norm_t[1] / norm2


# ---------------------------------------------------------------------------
# complex-coefficient variant: coefficients a + i b, conjugation flips b


def _cjmul(a, b):
    (ar, ai), (br, bi) = a, b
    re = _jadd(_jmul(ar, br), _jscale(_jmul(ai, bi), Fraction(-1)))
    im = _jadd(_jmul(ar, bi), _jmul(ai, br))
    return (re, im)


def _cjconj(a):
    re, im = a
    return (re, _jscale(im, Fraction(-1)))


def complex_gradient_imag_parts(f: SparsePoly) -> list:
    """Gradient of ``|m|^2`` along the imaginary-part directions, at a real point.

    Each coefficient is modelled as an ordered pair of real symbols; the
    returned list holds the partial derivatives with respect to the imaginary
    symbols, evaluated with all of them zero.  These vanish identically for
    real input (criticality over the complexes reduces to real criticality).
    """
    _require_nonzero(f)
    if f.is_parametric():
        raise TypeError("complex variant expects a numeric polynomial")
    basis = enumerate_monomials(f.n, f.d)
    size = len(basis)
    exact = f.is_exact()
    zero = Fraction(0) if exact else 0.0
    one = Fraction(1) if exact else 1.0
    cjets = []
    for k, alpha in enumerate(basis.order):
        c = f.terms.get(alpha, zero)
        if not exact:
            c = float(c)
        re = (c, {k: one})
        im = (zero, {size + k: one})
        cjets.append((re, im))

    norm2 = (zero, {})
    for jet, alpha in zip(cjets, basis.order):
        re, im = jet
        mag = _jadd(_jmul(re, re), _jmul(im, im))
        norm2 = _jadd(norm2, _jscale(mag, weight(alpha)))

    n, d = f.n, f.d
    derivs = []
    for i in range(n):
        dmap: dict = {}
        for alpha, jet in zip(basis.order, cjets):
            if alpha[i] == 0:
                continue
            beta = list(alpha)
            beta[i] -= 1
            beta = tuple(beta)
            scaled = (
                _jscale(jet[0], Fraction(alpha[i])),
                _jscale(jet[1], Fraction(alpha[i])),
            )
            if beta in dmap:
                prev = dmap[beta]
                dmap[beta] = (_jadd(prev[0], scaled[0]), _jadd(prev[1], scaled[1]))
            else:
                dmap[beta] = scaled
        derivs.append(dmap)

    shift = Fraction(2 * d * d, n)
    czero = ((zero, {}), (zero, {}))
    mjets = [[czero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            # entry (i, j) = 2 <d_j f, d_i f> - shift * norm2 * delta_ij
            q = czero
            for beta, jet in derivs[j].items():
                other = derivs[i].get(beta)
                if other is not None:
                    prod = _cjmul(_cjconj(jet), other)
                    w = weight(beta)
                    q = (_jadd(q[0], _jscale(prod[0], w)), _jadd(q[1], _jscale(prod[1], w)))
            entry = (_jscale(q[0], Fraction(2)), _jscale(q[1], Fraction(2)))
            if i == j:
                entry = (_jadd(entry[0], _jscale(norm2, -shift)), entry[1])
            mjets[i][j] = entry

    p_re = (zero, {})
    for i in range(n):
        for j in range(n):
            prod = _cjmul(mjets[i][j], mjets[j][i])
            p_re = _jadd(p_re, prod[0])

    p0, p1 = p_re
    n0, n1 = norm2
    if scalar_is_zero(n0):
        raise DegenerateInputError("squared norm vanishes")
    denom = d * d * n0 * n0 * n0
    out = []
    for k in range(size, 2 * size):
        numer = p1.get(k, zero) * n0 - 2 * p0 * n1.get(k, zero)
        out.append(numer / denom)
    return out
