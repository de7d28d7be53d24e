"""Embedded reference data for the reproduction harness.

Read-only tables shipped with the package: the degree-2/3 monomial bases,
orbit-representative lists for plane cubics and quartics, the families with
identically diagonal moment matrices, the symbolic degree-4 moment matrix,
and the published critical curves.  Monomials are written compactly
("x2z" means x^2 z); radical coefficients are pairs (q, r) meaning q * sqrt(r).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .polyring import ExponentVector, SparsePoly


def mono(s: str) -> ExponentVector:
    """Parse a compact monomial string over x, y, z into an exponent vector."""
    exps = {"x": 0, "y": 0, "z": 0}
    i = 0
    while i < len(s):
        v = s[i]
        if v not in exps:
            raise ValueError(f"bad monomial string {s!r}")
        i += 1
        num = ""
        while i < len(s) and s[i].isdigit():
            num += s[i]
            i += 1
        exps[v] += int(num) if num else 1
    return (exps["x"], exps["y"], exps["z"])


def support(*names: str) -> frozenset[ExponentVector]:
    return frozenset(mono(s) for s in names)


# -- monomial bases as printed (canonical order) ----------------------------

M2_BASIS = ["x2", "xy", "y2", "xz", "yz", "z2"]
M3_BASIS = ["x3", "x2y", "xy2", "y3", "x2z", "xyz", "y2z", "xz2", "yz2", "z3"]

# -- orbit representatives, n = d = 3 ---------------------------------------

T1_CUBIC = [("x3",), ("x2y",), ("xyz",)]

T2_CUBIC = [
    ("x2y", "x3"),
    ("xy2", "x3"),
    ("xy2", "x2y"),
    ("y3", "x3"),
    ("x2z", "x2y"),
    ("x2z", "xy2"),
    ("x2z", "y3"),
    ("xyz", "x3"),
    ("xyz", "x2y"),
    ("y2z", "x2z"),
]

T3_CUBIC = [
    ("xy2", "x2y", "x3"),
    ("y3", "x2y", "x3"),
    ("x2z", "x2y", "x3"),
    ("x2z", "xy2", "x3"),
    ("x2z", "xy2", "x2y"),
    ("x2z", "y3", "x3"),
    ("x2z", "y3", "x2y"),
    ("x2z", "y3", "xy2"),
    ("xyz", "x2y", "x3"),
    ("xyz", "xy2", "x3"),
    ("xyz", "xy2", "x2y"),
    ("xyz", "y3", "x3"),
    ("xyz", "x2z", "x2y"),
    ("xyz", "x2z", "xy2"),
    ("xyz", "x2z", "y3"),
    ("y2z", "x2z", "x3"),
    ("y2z", "x2z", "x2y"),
    ("y2z", "xyz", "x2z"),
    ("xz2", "xy2", "x3"),
    ("xz2", "xy2", "x2y"),
    ("xz2", "y3", "x3"),
    ("xz2", "y3", "x2y"),
    ("xz2", "x2z", "y3"),
    ("xz2", "y2z", "x2y"),
    ("z3", "y3", "x3"),
]

# -- orbit representatives with two terms, n = 3, d = 4 ---------------------

T2_QUARTIC = [
    ("x3y", "x4"),
    ("x2y2", "x4"),
    ("x2y2", "x3y"),
    ("xy3", "x4"),
    ("xy3", "x3y"),
    ("y4", "x4"),
    ("x3z", "x3y"),
    ("x3z", "x2y2"),
    ("x3z", "xy3"),
    ("x3z", "y4"),
    ("x2yz", "x4"),
    ("x2yz", "x3y"),
    ("x2yz", "x2y2"),
    ("x2yz", "xy3"),
    ("x2yz", "y4"),
    ("xy2z", "x3z"),
    ("xy2z", "x2yz"),
    ("y3z", "x3z"),
    ("x2z2", "x2y2"),
    ("x2z2", "xy3"),
    ("x2z2", "y4"),
    ("x2z2", "xy2z"),
]

# -- families with identically diagonal moment matrices ---------------------
# supports listed in display order; parameters attach to all but the last term

DIAGONAL_CUBIC = [
    ("x2z", "xy2"),
    ("x2z", "y3"),
    ("xyz", "x3"),
    ("y2z", "x2z"),
    ("xyz", "y3", "x3"),
    ("xz2", "xy2", "x3"),
    ("xz2", "y3", "x3"),
    ("xz2", "y3", "x2y"),
    ("xz2", "y2z", "x2y"),
    ("z3", "y3", "x3"),
    ("z3", "xyz", "y3", "x3"),
]

DIAGONAL_QUARTIC_3TERM = [
    ("x3z", "y4", "x2y2"),
    ("x2yz", "xy3", "x4"),
    ("x2yz", "y4", "x4"),
    ("xy2z", "x3z", "y4"),
    ("y3z", "x3z", "x2y2"),
    ("x2z2", "x2y2", "x4"),
    ("x2z2", "xy3", "x4"),
    ("x2z2", "xy3", "x3y"),
    ("x2z2", "y4", "x4"),
    ("x2z2", "y4", "x3y"),
    ("x2z2", "y4", "x2y2"),
    ("x2z2", "xy2z", "x4"),
    ("x2z2", "xy2z", "x3y"),
    ("x2z2", "xy2z", "y4"),
    ("x2z2", "y3z", "x4"),
    ("x2z2", "y3z", "x3y"),
    ("x2z2", "y3z", "x2y2"),
    ("xyz2", "xy3", "x4"),
    ("xyz2", "xy3", "x3y"),
    ("xyz2", "y4", "x4"),
    ("xyz2", "x3z", "xy3"),
    ("xyz2", "x3z", "y4"),
    ("xyz2", "y3z", "x3z"),
    ("y2z2", "x2z2", "x2y2"),
    ("xz3", "xy3", "x4"),
    ("xz3", "xy3", "x3y"),
    ("xz3", "y4", "x4"),
    ("xz3", "y4", "x3y"),
    ("xz3", "x3z", "y4"),
    ("xz3", "y3z", "x3y"),
    ("z4", "y4", "x4"),
]

# -- published critical curves ----------------------------------------------
# term = (rational factor, radicand, monomial): coefficient q * sqrt(r)

CRITICAL_CUBICS = [
    [("1", 1, "y2z"), ("1", 1, "x2z")],
    [("1", 1, "x2z"), ("1", 1, "xy2")],
    [("1", 1, "z3"), ("1", 1, "y3"), ("1", 1, "x3")],
    [("1", 1, "xz2"), ("1", 1, "y2z"), ("1", 1, "x2y")],
    [("1", 2, "xz2"), ("1/3", 3, "y3"), ("1", 1, "x2y")],
    [("3", 1, "xz2"), ("1", 2, "y3"), ("1", 1, "x3")],
]

CRITICAL_QUARTICS = [
    [("1", 1, "x3z"), ("1", 1, "xy3")],
    [("1/3", 3, "x3z"), ("1", 1, "x2y2")],
    [("6", 2, "xy2z"), ("1", 1, "x4")],
    [("1", 15, "xy2z"), ("1", 1, "x3y")],
    [("1", 1, "y3z"), ("1", 1, "x3y")],
    [("1", 1, "y3z"), ("1", 1, "x3z")],
    [("1/3", 3, "y3z"), ("1", 1, "x2y2")],
    [("1", 3, "x2z2"), ("1", 1, "x3y")],
    [("1", 3, "x2z2"), ("2/3", 3, "y3z"), ("1", 1, "x2y2")],
    [("2", 6, "x2z2"), ("4", 1, "y3z"), ("1", 1, "x4")],
    [("1/2", 21, "x2z2"), ("1", 3, "y3z"), ("1", 1, "x3y")],
    [("3", 1, "xyz2"), ("1", 1, "x3y")],
    [("3", 1, "xyz2"), ("1", 1, "xy3")],
    [("6", 2, "xyz2"), ("1", 1, "x4")],
    [("6", 2, "xyz2"), ("2", 2, "xy3"), ("1", 1, "x4")],
    [("6", 2, "xyz2"), ("1", 1, "y4")],
    [("4", 2, "xyz2"), ("4/3", 3, "x3z"), ("1", 1, "y4")],
    [("1", 3, "xyz2"), ("1", 1, "y3z"), ("1", 1, "x3z")],
    [("2", 3, "xyz2"), ("1", 1, "xy3"), ("1", 1, "x3y")],
    [("4", 3, "xyz2"), ("1", 1, "y4"), ("1", 1, "x4")],
    [("1", 7, "xyz2"), ("1/3", 6, "x3z"), ("1", 1, "xy3")],
    [("1", 15, "xyz2"), ("1", 1, "x3z")],
    [("1", 1, "xz3"), ("1", 1, "x3y")],
    [("1", 1, "xz3"), ("1", 1, "y3z"), ("1", 1, "x3y")],
    [("2", 1, "xz3"), ("2", 1, "x3z"), ("1", 1, "y4")],
    [("4", 1, "xz3"), ("4", 1, "xy3"), ("1", 1, "x4")],
]


def critical_fixture_poly(entry) -> SparsePoly:
    """Build the polynomial of one critical-list entry.

    Rational when every radicand is 1, float otherwise.
    """
    exact = all(r == 1 for _, r, _ in entry)
    terms = {}
    for q, r, name in entry:
        q = Fraction(q)
        coeff = q if exact else float(q) * math.sqrt(r)
        terms[mono(name)] = coeff
    d = sum(next(iter(terms)))
    return SparsePoly.make(3, d, terms)


def cubic_x3_plus_y3() -> SparsePoly:
    return SparsePoly.make(3, 3, {mono("x3"): Fraction(1), mono("y3"): Fraction(1)})


X3Y3_MOMENT_DIAGONAL = (Fraction(1), Fraction(1), Fraction(-2))

# -- symbolic degree-4 moment matrix ----------------------------------------
# entries of the matrix numerators and the common denominator, as printed:
# (integer coefficient, first subscript, second subscript) meaning
# c * a_{i,j,k} * a_{l,m,n}; squares repeat the subscript.

QUARTIC_R_DENOMINATOR = [
    (36, (4, 0, 0), (4, 0, 0)),
    (9, (3, 1, 0), (3, 1, 0)),
    (9, (3, 0, 1), (3, 0, 1)),
    (6, (2, 2, 0), (2, 2, 0)),
    (3, (2, 1, 1), (2, 1, 1)),
    (6, (2, 0, 2), (2, 0, 2)),
    (9, (1, 3, 0), (1, 3, 0)),
    (3, (1, 2, 1), (1, 2, 1)),
    (3, (1, 1, 2), (1, 1, 2)),
    (9, (1, 0, 3), (1, 0, 3)),
    (36, (0, 4, 0), (0, 4, 0)),
    (9, (0, 3, 1), (0, 3, 1)),
    (6, (0, 2, 2), (0, 2, 2)),
    (9, (0, 1, 3), (0, 1, 3)),
    (36, (0, 0, 4), (0, 0, 4)),
]

QUARTIC_R_ENTRIES = {
    (0, 0): [
        (-96, (0, 0, 4), (0, 0, 4)),
        (-24, (0, 1, 3), (0, 1, 3)),
        (-16, (0, 2, 2), (0, 2, 2)),
        (-24, (0, 3, 1), (0, 3, 1)),
        (-96, (0, 4, 0), (0, 4, 0)),
        (-6, (1, 0, 3), (1, 0, 3)),
        (-2, (1, 1, 2), (1, 1, 2)),
        (-2, (1, 2, 1), (1, 2, 1)),
        (-6, (1, 3, 0), (1, 3, 0)),
        (8, (2, 0, 2), (2, 0, 2)),
        (4, (2, 1, 1), (2, 1, 1)),
        (8, (2, 2, 0), (2, 2, 0)),
        (30, (3, 0, 1), (3, 0, 1)),
        (30, (3, 1, 0), (3, 1, 0)),
        (192, (4, 0, 0), (4, 0, 0)),
    ],
    (0, 1): [
        (72, (3, 1, 0), (4, 0, 0)),
        (36, (2, 2, 0), (3, 1, 0)),
        (18, (2, 1, 1), (3, 0, 1)),
        (36, (1, 3, 0), (2, 2, 0)),
        (12, (1, 2, 1), (2, 1, 1)),
        (12, (1, 1, 2), (2, 0, 2)),
        (72, (0, 4, 0), (1, 3, 0)),
        (18, (0, 3, 1), (1, 2, 1)),
        (12, (0, 2, 2), (1, 1, 2)),
        (18, (0, 1, 3), (1, 0, 3)),
    ],
    (0, 2): [
        (72, (3, 0, 1), (4, 0, 0)),
        (18, (2, 1, 1), (3, 1, 0)),
        (36, (2, 0, 2), (3, 0, 1)),
        (12, (1, 2, 1), (2, 2, 0)),
        (12, (1, 1, 2), (2, 1, 1)),
        (36, (1, 0, 3), (2, 0, 2)),
        (18, (0, 3, 1), (1, 3, 0)),
        (12, (0, 2, 2), (1, 2, 1)),
        (18, (0, 1, 3), (1, 1, 2)),
        (72, (0, 0, 4), (1, 0, 3)),
    ],
    (1, 1): [
        (-96, (4, 0, 0), (4, 0, 0)),
        (-6, (3, 1, 0), (3, 1, 0)),
        (-24, (3, 0, 1), (3, 0, 1)),
        (8, (2, 2, 0), (2, 2, 0)),
        (-2, (2, 1, 1), (2, 1, 1)),
        (-16, (2, 0, 2), (2, 0, 2)),
        (30, (1, 3, 0), (1, 3, 0)),
        (4, (1, 2, 1), (1, 2, 1)),
        (-2, (1, 1, 2), (1, 1, 2)),
        (-24, (1, 0, 3), (1, 0, 3)),
        (192, (0, 4, 0), (0, 4, 0)),
        (30, (0, 3, 1), (0, 3, 1)),
        (8, (0, 2, 2), (0, 2, 2)),
        (-6, (0, 1, 3), (0, 1, 3)),
        (-96, (0, 0, 4), (0, 0, 4)),
    ],
    (1, 2): [
        (18, (3, 0, 1), (3, 1, 0)),
        (12, (2, 1, 1), (2, 2, 0)),
        (12, (2, 0, 2), (2, 1, 1)),
        (18, (1, 2, 1), (1, 3, 0)),
        (12, (1, 1, 2), (1, 2, 1)),
        (18, (1, 0, 3), (1, 1, 2)),
        (72, (0, 3, 1), (0, 4, 0)),
        (36, (0, 2, 2), (0, 3, 1)),
        (36, (0, 1, 3), (0, 2, 2)),
        (72, (0, 0, 4), (0, 1, 3)),
    ],
    (2, 2): [
        (-96, (4, 0, 0), (4, 0, 0)),
        (-24, (3, 1, 0), (3, 1, 0)),
        (-6, (3, 0, 1), (3, 0, 1)),
        (-16, (2, 2, 0), (2, 2, 0)),
        (-2, (2, 1, 1), (2, 1, 1)),
        (8, (2, 0, 2), (2, 0, 2)),
        (-24, (1, 3, 0), (1, 3, 0)),
        (-2, (1, 2, 1), (1, 2, 1)),
        (4, (1, 1, 2), (1, 1, 2)),
        (30, (1, 0, 3), (1, 0, 3)),
        (-96, (0, 4, 0), (0, 4, 0)),
        (-6, (0, 3, 1), (0, 3, 1)),
        (8, (0, 2, 2), (0, 2, 2)),
        (30, (0, 1, 3), (0, 1, 3)),
        (192, (0, 0, 4), (0, 0, 4)),
    ],
}
