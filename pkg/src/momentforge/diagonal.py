"""Families whose moment matrix is identically diagonal.

A critical point of the square length necessarily has a diagonal moment
matrix, so families failing this filter can be dropped before any solving.
"Diagonal" here means diagonal as polynomials in the parameters: each
off-diagonal entry of the moment matrix has a numerator that is a quadratic
form in the parameters, and that form must vanish identically.

For families that fail, a rational witness with all parameters nonzero is
recorded (an assignment making some off-diagonal entry nonzero).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count

from .moment import _as_parametric, _gram
from .orbits import ParamFamily, build_family, orbit_classes, uses_all_variables
from .parallel import parallel_map
from .polyring import ParamPoly, scalar_is_zero


@dataclass(frozen=True)
class DiagonalVerdict:
    family: ParamFamily
    is_diagonal: bool
    # ((i, j), numerator) for each off-diagonal entry that is not identically 0
    offending_entries: tuple[tuple[tuple[int, int], ParamPoly], ...]
    # parameter assignment (all nonzero) exhibiting a nonzero off-diagonal entry
    witness: tuple[Fraction, ...] | None


def _nonzero_witness(numerators: list[ParamPoly], nparams: int) -> tuple[Fraction, ...] | None:
    # a nonzero polynomial cannot vanish on all of these small all-nonzero grids
    candidates = [
        tuple(Fraction(1) for _ in range(nparams)),
        tuple(Fraction(k + 2) for k in range(nparams)),
        tuple(Fraction(1, k + 2) for k in range(nparams)),
        tuple(Fraction((-1) ** k * (k + 1)) for k in range(nparams)),
    ]
    for base in count(2):
        if len(candidates) > 40:
            break
        candidates.append(tuple(Fraction(base**k) for k in range(1, nparams + 1)))
    for point in candidates:
        for numer in numerators:
            if numer.subs(point) != 0:
                return point
    return None


def is_identically_diagonal(family: ParamFamily) -> DiagonalVerdict:
    """Decide diagonality exactly over the parameter ring.

    Off-diagonal entries of the moment matrix share the generically nonzero
    denominator ``d |f|^2``, so only the numerators ``2 <d_i f, d_j f>`` are
    tested for identical vanishing.
    """
    lifted = _as_parametric(family.poly, family.nparams)
    gram = _gram(lifted)
    n = family.poly.n
    offending = []
    for i in range(n):
        for j in range(i + 1, n):
            entry = gram[i][j]
            if not scalar_is_zero(entry):
                if not isinstance(entry, ParamPoly):
                    entry = ParamPoly.const(family.nparams, entry)
                offending.append(((i, j), entry))
    witness = None
    if offending:
        witness = _nonzero_witness([num for _, num in offending], family.nparams)
    return DiagonalVerdict(family, not offending, tuple(offending), witness)


def diagonal_families(n: int, d: int, m: int) -> list[ParamFamily]:
    """All-variables orbit representatives with ``m`` terms whose moment
    matrix is identically diagonal."""
    if m < 2:
        raise ValueError("parametric families need at least two terms")
    reps = [
        rep for rep in orbit_classes(n, d, m) if uses_all_variables(rep.support)
    ]
    families = [build_family(rep.support) for rep in reps]
    verdicts = parallel_map(is_identically_diagonal, families)
    return [v.family for v in verdicts if v.is_diagonal]
