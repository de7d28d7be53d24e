"""Exact univariate polynomial tools for the solver.

Dense polynomials over the rationals (index = degree), with Euclidean
division, gcd, squarefree parts, Sturm chains, real-root isolation by
bisection on sign-variation counts, interval refinement, and the Sylvester
resultant of two bivariate polynomials (Bareiss fraction-free determinant,
so intermediate entries stay polynomial).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .polyring import ParamPoly

UPoly = list[Fraction]

ZERO = Fraction(0)


def trim(p: UPoly) -> UPoly:
    while p and p[-1] == 0:
        p.pop()
    return p


def deg(p: UPoly) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def is_zero(p: UPoly) -> bool:
    return not p


def add(p: UPoly, q: UPoly) -> UPoly:
    out = [ZERO] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def neg(p: UPoly) -> UPoly:
    return [-c for c in p]


def mul(p: UPoly, q: UPoly) -> UPoly:
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b != 0:
                out[i + j] += a * b
    return trim(out)


def scale(p: UPoly, c: Fraction) -> UPoly:
    if c == 0:
        return []
    return [a * c for a in p]


def divmod_poly(p: UPoly, q: UPoly) -> tuple[UPoly, UPoly]:
    if is_zero(q):
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(p)
    quo = [ZERO] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(r) >= len(q) and r:
        c = r[-1] / lead
        k = len(r) - len(q)
        quo[k] = c
        for i, b in enumerate(q):
            r[i + k] -= c * b
        trim(r)
    return trim(quo), r


def poly_gcd(p: UPoly, q: UPoly) -> UPoly:
    a, b = list(p), list(q)
    while not is_zero(b):
        a, b = b, divmod_poly(a, b)[1]
    if a:
        a = scale(a, 1 / a[-1])  # monic
    return a


def derivative(p: UPoly) -> UPoly:
    return trim([p[i] * i for i in range(1, len(p))])


def squarefree_part(p: UPoly) -> UPoly:
    """p / gcd(p, p'): same real roots, all simple."""
    if deg(p) <= 1:
        return list(p)
    g = poly_gcd(p, derivative(p))
    if deg(g) == 0:
        return list(p)
    return divmod_poly(p, g)[0]


def evaluate(p: UPoly, x) -> Fraction:
    total = x * 0
    for c in reversed(p):
        total = total * x + c
    return total


def content_primitive(p: UPoly) -> UPoly:
    """Integer-primitive form with positive leading coefficient."""
    if not p:
        return []
    num = 0
    den = 1
    for c in p:
        num = int_gcd(num, c.numerator)
        den = den * c.denominator // int_gcd(den, c.denominator)
    factor = Fraction(den, num)
    if p[-1] < 0:
        factor = -factor
    return [c * factor for c in p]


# ---------------------------------------------------------------------------
# Sturm-sequence real root isolation


def sturm_chain(p: UPoly) -> list[UPoly]:
    chain = [list(p), derivative(p)]
    while deg(chain[-1]) > 0:
        rem = divmod_poly(chain[-2], chain[-1])[1]
        if is_zero(rem):
            break
        chain.append(neg(rem))
    return [c for c in chain if not is_zero(c)]


def _sign_variations(chain: list[UPoly], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = evaluate(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain: list[UPoly], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in (lo, hi]."""
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def root_bound(p: UPoly) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    lead = abs(p[-1])
    b = max((abs(c) / lead for c in p[:-1]), default=ZERO)
    return b + 1


def isolate_real_roots(p: UPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open intervals, one simple root of the squarefree input each.

    Interval endpoints are never roots.
    """
    p = squarefree_part(p)
    if deg(p) <= 0:
        return []
    chain = sturm_chain(p)
    bound = root_bound(p)
    work = [(-bound, bound)]
    done: list[tuple[Fraction, Fraction]] = []
    while work:
        lo, hi = work.pop()
        k = count_roots(chain, lo, hi)
        if k == 0:
            continue
        if k == 1 and evaluate(p, lo) != 0 and evaluate(p, hi) != 0:
            done.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if evaluate(p, mid) == 0:
            # nudge the split point off the root (roots are finite, so this ends)
            shift = (hi - lo) / 8
            while evaluate(p, mid + shift) == 0:
                shift /= 3
            mid = mid + shift
        work.append((lo, mid))
        work.append((mid, hi))
    done.sort()
    return done


def refine_interval(
    p: UPoly, lo: Fraction, hi: Fraction, width: Fraction
) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval of a squarefree polynomial by bisection."""
    flo = evaluate(p, lo)
    if flo == 0:
        return lo, lo
    while hi - lo > width:
        mid = (lo + hi) / 2
        fmid = evaluate(p, mid)
        if fmid == 0:
            return mid, mid
        if (flo > 0) != (fmid > 0):
            hi = mid
        else:
            lo, flo = mid, fmid
    return lo, hi


def simplest_rational_in(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with the smallest denominator in [lo, hi] (Stern-Brocot)."""
    if lo > hi:
        lo, hi = hi, lo
    if lo == hi:
        return lo
    if lo <= 0 <= hi:
        return ZERO
    if hi < 0:
        return -simplest_rational_in(-hi, -lo)

    def rec(a: Fraction, b: Fraction) -> Fraction:
        fl = a.numerator // a.denominator
        if fl == b.numerator // b.denominator and a.numerator % a.denominator != 0:
            frac = rec(1 / (b - fl), 1 / (a - fl))
            return fl + 1 / frac
        return Fraction(fl if a.numerator % a.denominator == 0 else fl + 1)

    return rec(lo, hi)


# ---------------------------------------------------------------------------
# Sylvester resultant of bivariate polynomials
#
# Equations arrive as ParamPoly in k <= 3 symbols; eliminating symbol `var`
# views them as univariate in `var` with UPoly coefficients in the other
# symbol, and the determinant of the Sylvester matrix is taken by Bareiss
# elimination (exact division at every step).


def _as_poly_in(p: ParamPoly, var: int, other: int) -> list[UPoly]:
    """Coefficients of ``p`` as a polynomial in symbol ``var``; each
    coefficient is a dense UPoly in symbol ``other``."""
    dv = p.degree_in(var)
    douter = p.degree_in(other)
    rows: list[UPoly] = [[ZERO] * (douter + 1) for _ in range(dv + 1)]
    for exp, c in p.terms.items():
        rows[exp[var]][exp[other]] += c
    return [trim(r) for r in rows]


def _bareiss_det(mat: list[list[UPoly]]) -> UPoly:
    n = len(mat)
    if n == 0:
        return [Fraction(1)]
    m = [[list(e) for e in row] for row in mat]
    prev = [Fraction(1)]
    sign = 1
    for k in range(n - 1):
        if is_zero(m[k][k]):
            pivot_row = next(
                (r for r in range(k + 1, n) if not is_zero(m[r][k])), None
            )
            if pivot_row is None:
                return []
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                numer = add(mul(m[i][j], m[k][k]), neg(mul(m[i][k], m[k][j])))
                quo, rem = divmod_poly(numer, prev) if not is_zero(numer) else ([], [])
                assert is_zero(rem), "Bareiss division must be exact"
                m[i][j] = quo
            m[i][k] = []
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return neg(det) if sign < 0 else det


def resultant(p: ParamPoly, q: ParamPoly, eliminate: int) -> list[Fraction]:
    """Sylvester resultant of two bivariate polynomials, eliminating the
    given symbol; returns a dense UPoly in the remaining symbol."""
    if p.nsyms != q.nsyms:
        raise ValueError("parameter rings differ")
    if p.nsyms < 2:
        raise ValueError("resultant elimination needs at least two symbols")
    active = sorted(
        {i for i in range(p.nsyms) if p.degree_in(i) or q.degree_in(i)} | {eliminate}
    )
    others = [i for i in active if i != eliminate]
    if len(others) > 1:
        raise ValueError("resultant elimination needs bivariate input")
    other = others[0] if others else next(i for i in range(p.nsyms) if i != eliminate)
    a = _as_poly_in(p, eliminate, other)
    b = _as_poly_in(q, eliminate, other)
    da, db = len(a) - 1, len(b) - 1
    if da < 1 or db < 1:
        raise ValueError("both polynomials must contain the eliminated symbol")
    size = da + db
    mat: list[list[UPoly]] = [[[] for _ in range(size)] for _ in range(size)]
    for row in range(db):
        for i, coeff in enumerate(reversed(a)):
            mat[row][row + i] = list(coeff)
    for row in range(da):
        for i, coeff in enumerate(reversed(b)):
            mat[db + row][row + i] = list(coeff)
    det = _bareiss_det(mat)
    return det
