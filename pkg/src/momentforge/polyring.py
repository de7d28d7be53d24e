"""Exact arithmetic foundation.

Scalars come in three flavours and every operation in the package is generic
over them:

* :class:`fractions.Fraction` -- exact rationals (always lowest terms,
  positive denominator),
* :class:`float` -- used only once irrational values enter (solver output,
  point sampling); mixing a float with an exact scalar promotes to float,
* :class:`ParamPoly` -- an exact multivariate polynomial in parameter
  symbols ``b1..bk`` with rational coefficients.

On top of the scalars sit :class:`SparsePoly` (homogeneous polynomials as a
map from exponent vectors to scalars) and :class:`RationalFunction`
(quotients of two ``ParamPoly``).  All values are immutable after
construction and all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

# Exponent vector: element i is the exponent of variable x_{i+1}.
ExponentVector = tuple[int, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class DegenerateInputError(ValueError):
    """Raised for inputs the theory excludes (zero polynomial, zero vector)."""


def _is_exact(c) -> bool:
    return isinstance(c, (Fraction, int))


def scalar_is_zero(c) -> bool:
    """True for the additive zero of any scalar flavour."""
    if isinstance(c, ParamPoly):
        return c.is_zero()
    return c == 0


def scalar_to_float(c) -> float:
    if isinstance(c, ParamPoly):
        raise TypeError("parametric scalar has no float value; substitute first")
    return float(c)


def format_scalar(c) -> str:
    """Exact scalars as 'p/q', floats at 12 significant digits."""
    if isinstance(c, Fraction):
        return str(c)
    if isinstance(c, ParamPoly):
        return str(c)
    return format(c, ".12g")


# ---------------------------------------------------------------------------
# parameter polynomials


class ParamPoly:
    """Polynomial in parameter symbols ``b1..bk`` over the rationals.

    Stored as a map from parameter-exponent tuples to nonzero Fractions.
    Arithmetic never leaves the exact world: mixing with a float raises.
    """

    __slots__ = ("nsyms", "terms")

    def __init__(self, nsyms: int, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        self.nsyms = nsyms
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                if len(exp) != nsyms:
                    raise ValueError(f"exponent tuple {exp} has wrong length, expected {nsyms}")
                coeff = Fraction(coeff)
                if coeff != 0:
                    clean[tuple(exp)] = coeff
        self.terms = clean

    # -- constructors

    @classmethod
    def const(cls, nsyms: int, value) -> "ParamPoly":
        value = Fraction(value)
        if value == 0:
            return cls(nsyms)
        return cls(nsyms, {(0,) * nsyms: value})

    @classmethod
    def symbol(cls, nsyms: int, i: int) -> "ParamPoly":
        """The symbol ``b{i+1}`` (0-based index)."""
        if not 0 <= i < nsyms:
            raise ValueError(f"symbol index {i} out of range for {nsyms} symbols")
        exp = [0] * nsyms
        exp[i] = 1
        return cls(nsyms, {tuple(exp): ONE})

    # -- predicates

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(exp) == 0 for exp in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return ZERO
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        return max((sum(exp) for exp in self.terms), default=0)

    def degree_in(self, i: int) -> int:
        return max((exp[i] for exp in self.terms), default=0)

    # -- ring operations

    def _coerce(self, other):
        if isinstance(other, ParamPoly):
            if other.nsyms != self.nsyms:
                raise ValueError("parameter rings differ")
            return other
        if _is_exact(other):
            return ParamPoly.const(self.nsyms, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            s = out.get(exp, ZERO) + coeff
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        return ParamPoly(self.nsyms, out)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly(self.nsyms, {exp: -c for exp, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if _is_exact(other):
            c = Fraction(other)
            if c == 0:
                return ParamPoly(self.nsyms)
            return ParamPoly(self.nsyms, {exp: v * c for exp, v in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(exp, ZERO) + ca * cb
                if s == 0:
                    out.pop(exp, None)
                else:
                    out[exp] = s
        return ParamPoly(self.nsyms, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = ParamPoly.const(self.nsyms, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if _is_exact(other):
            other = ParamPoly.const(self.nsyms, other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self.nsyms == other.nsyms and self.terms == other.terms

    def __hash__(self):
        return hash((self.nsyms, self.key()))

    def key(self) -> tuple:
        """Canonical hashable form (sorted term list)."""
        return tuple(sorted(self.terms.items()))

    # -- calculus and evaluation

    def diff(self, i: int) -> "ParamPoly":
        """Formal partial derivative with respect to symbol index ``i``."""
        out: dict[tuple[int, ...], Fraction] = {}
        for exp, coeff in self.terms.items():
            if exp[i] == 0:
                continue
            new = list(exp)
            new[i] -= 1
            out[tuple(new)] = coeff * exp[i]
        return ParamPoly(self.nsyms, out)

    def subs(self, values: Sequence):
        """Evaluate at a point; exact iff every value is exact."""
        if len(values) != self.nsyms:
            raise ValueError("wrong number of parameter values")
        exact = all(_is_exact(v) for v in values)
        total = ZERO if exact else 0.0
        for exp, coeff in self.terms.items():
            term = coeff if exact else float(coeff)
            for e, v in zip(exp, values):
                if e:
                    term *= v**e
            total += term
        return total

    def compile(self) -> Callable[..., float]:
        """Compiled float evaluator (used by the numeric solver)."""
        if not self.terms:
            return lambda *args: 0.0
        pieces = []
        for exp, coeff in sorted(self.terms.items()):
            factors = [repr(float(coeff))]
            for i, e in enumerate(exp):
                if e == 1:
                    factors.append(f"b{i}")
                elif e > 1:
                    factors.append(f"b{i}**{e}")
            pieces.append("*".join(factors))
        args = ",".join(f"b{i}" for i in range(self.nsyms))
        return eval(f"lambda {args}: " + "+".join(pieces))  # noqa: S307 - generated from exact terms

    # -- normal forms

    def content(self) -> Fraction:
        """Positive gcd of all coefficients (0 for the zero polynomial)."""
        if not self.terms:
            return ZERO
        from math import gcd

        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "ParamPoly":
        """Divide out the content; sign fixed so the leading term is positive."""
        if not self.terms:
            return self
        c = self.content()
        lead = max(self.terms)
        if self.terms[lead] < 0:
            c = -c
        return self * (1 / c)

    def monomial_gcd(self) -> tuple[int, ...]:
        if not self.terms:
            return (0,) * self.nsyms
        mins = [min(exp[i] for exp in self.terms) for i in range(self.nsyms)]
        return tuple(mins)

    def shift_down(self, shift: Sequence[int]) -> "ParamPoly":
        """Divide by the monomial b^shift (must divide every term)."""
        out = {}
        for exp, coeff in self.terms.items():
            new = tuple(e - s for e, s in zip(exp, shift))
            if any(e < 0 for e in new):
                raise ValueError("monomial does not divide polynomial")
            out[new] = coeff
        return ParamPoly(self.nsyms, out)

    def univariate(self) -> list[Fraction]:
        """Dense coefficient list when at most one symbol occurs."""
        active = [i for i in range(self.nsyms) if self.degree_in(i) > 0]
        if len(active) > 1:
            raise ValueError("polynomial is not univariate")
        i = active[0] if active else 0
        coeffs = [ZERO] * (self.degree_in(i) + 1)
        for exp, c in self.terms.items():
            coeffs[exp[i]] = c
        return coeffs

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in sorted(self.terms.items(), reverse=True):
            syms = "*".join(
                f"b{i + 1}" if e == 1 else f"b{i + 1}^{e}" for i, e in enumerate(exp) if e
            )
            if not syms:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(syms)
            elif coeff == -1:
                parts.append(f"-{syms}")
            else:
                parts.append(f"{coeff}*{syms}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


Scalar = Union[Fraction, float, ParamPoly]


def multiply_scalars(a: Scalar, b: Scalar) -> Scalar:
    """Product with the promotion rules of the scalar tower."""
    if isinstance(a, ParamPoly) or isinstance(b, ParamPoly):
        if isinstance(a, float) or isinstance(b, float):
            raise TypeError("cannot mix parametric and float scalars")
        return a * b
    if isinstance(a, float) or isinstance(b, float):
        return float(a) * float(b)
    return a * b


# ---------------------------------------------------------------------------
# rational functions of the parameters


@dataclass(frozen=True)
class RationalFunction:
    """Quotient of two parameter polynomials, content-reduced.

    Normal form: common parameter-monomial factors are cancelled and the
    denominator is integer-primitive with positive leading coefficient.
    """

    numer: ParamPoly
    denom: ParamPoly

    @staticmethod
    def make(numer: ParamPoly, denom: ParamPoly) -> "RationalFunction":
        if denom.is_zero():
            raise ZeroDivisionError("denominator is identically zero")
        if numer.is_zero():
            return RationalFunction(numer, ParamPoly.const(denom.nsyms, 1))
        shift = tuple(
            min(a, b) for a, b in zip(numer.monomial_gcd(), denom.monomial_gcd())
        )
        numer = numer.shift_down(shift)
        denom = denom.shift_down(shift)
        scale = denom.content()
        lead = max(denom.terms)
        if denom.terms[lead] < 0:
            scale = -scale
        return RationalFunction(numer * (1 / scale), denom * (1 / scale))

    def evaluate(self, values: Sequence):
        den = self.denom.subs(values)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at the given point")
        return self.numer.subs(values) / den

    def __eq__(self, other):
        if isinstance(other, (Fraction, int)):
            other = RationalFunction.make(
                ParamPoly.const(self.numer.nsyms, other),
                ParamPoly.const(self.numer.nsyms, 1),
            )
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numer * other.denom == other.numer * self.denom

    def __str__(self):
        if self.denom.is_constant() and self.denom.constant_value() == 1:
            return str(self.numer)
        return f"({self.numer}) / ({self.denom})"


# ---------------------------------------------------------------------------
# sparse homogeneous polynomials


def degree(alpha: ExponentVector) -> int:
    return sum(alpha)


@dataclass(frozen=True, eq=False)
class SparsePoly:
    """Homogeneous polynomial of degree ``d`` in ``n`` variables.

    ``terms`` maps exponent vectors (all of degree exactly ``d``) to nonzero
    scalars.  The zero polynomial is the empty map with (n, d) retained.
    """

    n: int
    d: int
    terms: dict[ExponentVector, Scalar]

    @staticmethod
    def make(n: int, d: int, terms: Mapping[ExponentVector, Scalar]) -> "SparsePoly":
        clean: dict[ExponentVector, Scalar] = {}
        for exp, coeff in terms.items():
            exp = tuple(exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for n={n}")
            if degree(exp) != d:
                raise ValueError(f"term {exp} breaks homogeneity of degree {d}")
            if not scalar_is_zero(coeff):
                clean[exp] = coeff if isinstance(coeff, (float, ParamPoly)) else Fraction(coeff)
        return SparsePoly(n, d, clean)

    @staticmethod
    def zero(n: int, d: int) -> "SparsePoly":
        return SparsePoly(n, d, {})

    @staticmethod
    def monomial(n: int, exp: ExponentVector, coeff: Scalar = ONE) -> "SparsePoly":
        return SparsePoly.make(n, degree(tuple(exp)), {tuple(exp): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def is_parametric(self) -> bool:
        return any(isinstance(c, ParamPoly) for c in self.terms.values())

    def is_exact(self) -> bool:
        return all(_is_exact(c) for c in self.terms.values())

    def support(self) -> frozenset[ExponentVector]:
        return frozenset(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return (self.n, self.d) == (other.n, other.d) and self.terms == other.terms

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        return poly_add(self, other)

    def __str__(self):
        return format_poly(self)

    __repr__ = __str__


def variable_names(n: int) -> list[str]:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


def format_monomial(n: int, exp: ExponentVector) -> str:
    names = variable_names(n)
    parts = [
        name if e == 1 else f"{name}^{e}" for name, e in zip(names, exp) if e
    ]
    return "*".join(parts) if parts else "1"


def format_poly(f: SparsePoly) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for exp in sorted(f.terms, key=lambda a: canonical_key(a)):
        c = f.terms[exp]
        mono = format_monomial(f.n, exp)
        if isinstance(c, ParamPoly) and len(c.terms) > 1:
            parts.append(f"({c})*{mono}")
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{format_scalar(c)}*{mono}")
    return " + ".join(parts)


def canonical_key(alpha: ExponentVector) -> tuple[int, ...]:
    """Sort key of the canonical monomial order.

    Exponent vectors are compared by ``(a_n, a_{n-1}, ..., a_2)`` ascending,
    which for (n, d) = (3, 3) lists the basis as
    x^3, x^2*y, x*y^2, y^3, x^2*z, x*y*z, y^2*z, x*z^2, y*z^2, z^3.
    """
    return tuple(reversed(alpha[1:]))


def display_key(alpha: ExponentVector) -> tuple[int, ...]:
    """Sort key of the display order (descending canonical)."""
    return tuple(-e for e in canonical_key(alpha))


# ---------------------------------------------------------------------------
# operations


def poly_add(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    """Termwise sum; zero coefficients are pruned."""
    if (f.n, f.d) != (g.n, g.d):
        raise ValueError(f"cannot add polynomials of shape {(f.n, f.d)} and {(g.n, g.d)}")
    out = dict(f.terms)
    for exp, coeff in g.terms.items():
        if exp in out:
            s = out[exp] + coeff
            if scalar_is_zero(s):
                del out[exp]
            else:
                out[exp] = s
        else:
            out[exp] = coeff
    return SparsePoly(f.n, f.d, out)


def poly_scale(f: SparsePoly, scalar: Scalar) -> SparsePoly:
    """Multiply every coefficient by ``scalar``; scaling by 0 gives the zero polynomial."""
    if scalar_is_zero(scalar):
        return SparsePoly.zero(f.n, f.d)
    out = {}
    for exp, coeff in f.terms.items():
        c = multiply_scalars(coeff, scalar)
        if not scalar_is_zero(c):
            out[exp] = c
    return SparsePoly(f.n, f.d, out)


def partial_derivative(f: SparsePoly, i: int) -> SparsePoly:
    """Formal partial derivative with respect to variable ``x_i`` (1-based)."""
    if not 1 <= i <= f.n:
        raise ValueError(f"variable index {i} out of range 1..{f.n}")
    k = i - 1
    out: dict[ExponentVector, Scalar] = {}
    for exp, coeff in f.terms.items():
        if exp[k] == 0:
            continue
        new = list(exp)
        new[k] -= 1
        out[tuple(new)] = multiply_scalars(coeff, Fraction(exp[k]))
    return SparsePoly(f.n, max(f.d - 1, 0), out)


def poly_times_variable(f: SparsePoly, i: int) -> SparsePoly:
    """Multiply by ``x_i`` (1-based); raises the degree by one."""
    if not 1 <= i <= f.n:
        raise ValueError(f"variable index {i} out of range 1..{f.n}")
    k = i - 1
    out = {}
    for exp, coeff in f.terms.items():
        new = list(exp)
        new[k] += 1
        out[tuple(new)] = coeff
    return SparsePoly(f.n, f.d + 1, out)


def parameter_symbols(f: SparsePoly) -> int:
    """Number of parameter symbols occurring in ``f`` (0 when numeric)."""
    for c in f.terms.values():
        if isinstance(c, ParamPoly):
            return c.nsyms
    return 0


def substitute_params(f: SparsePoly, assignment: Mapping[str, Scalar] | Sequence) -> SparsePoly:
    """Replace parameter symbols by values.

    ``assignment`` is either a positional sequence or a mapping with keys
    ``"b1"``, ``"b2"``, ...; it must cover every symbol occurring in ``f``.
    Evaluation is exact when all values are rational.
    """
    nsyms = parameter_symbols(f)
    if nsyms == 0:
        return f
    if isinstance(assignment, Mapping):
        values = []
        for i in range(nsyms):
            name = f"b{i + 1}"
            if name not in assignment:
                raise ValueError(f"assignment misses parameter symbol {name}")
            values.append(assignment[name])
    else:
        values = list(assignment)
        if len(values) != nsyms:
            raise ValueError(f"expected {nsyms} parameter values, got {len(values)}")
    values = [v if isinstance(v, float) else Fraction(v) for v in values]
    out: dict[ExponentVector, Scalar] = {}
    for exp, coeff in f.terms.items():
        c = coeff.subs(values) if isinstance(coeff, ParamPoly) else coeff
        if not scalar_is_zero(c):
            out[exp] = c
    return SparsePoly(f.n, f.d, out)


def evaluate_poly(f: SparsePoly, point: Sequence[float]) -> float:
    """Numeric value of ``f`` at a real point."""
    if len(point) != f.n:
        raise ValueError("point dimension mismatch")
    total = 0.0
    for exp, coeff in f.terms.items():
        term = scalar_to_float(coeff)
        for e, v in zip(exp, point):
            if e:
                term *= v**e
        total += term
    return total


# ---------------------------------------------------------------------------
# JSON wire format
#
# {"n": int, "d": int, "terms": [{"exp": [..], "coeff": "p/q" | float |
#  {"params": [{"exp": [..], "coeff": "p/q"}, ...], "nsyms": k}}]}


def _coeff_to_json(c: Scalar):
    if isinstance(c, Fraction):
        return str(c)
    if isinstance(c, float):
        return c
    return {
        "nsyms": c.nsyms,
        "params": [
            {"exp": list(exp), "coeff": str(v)} for exp, v in sorted(c.terms.items())
        ],
    }


def _coeff_from_json(obj) -> Scalar:
    if isinstance(obj, str):
        return Fraction(obj)
    if isinstance(obj, (int, float)):
        return Fraction(obj) if isinstance(obj, int) else float(obj)
    if isinstance(obj, dict) and "params" in obj:
        nsyms = int(obj["nsyms"])
        terms = {
            tuple(t["exp"]): Fraction(t["coeff"]) for t in obj["params"]
        }
        return ParamPoly(nsyms, terms)
    raise ValueError(f"unrecognized coefficient encoding: {obj!r}")


def poly_to_json(f: SparsePoly) -> dict:
    terms = [
        {"exp": list(exp), "coeff": _coeff_to_json(f.terms[exp])}
        for exp in sorted(f.terms, key=canonical_key)
    ]
    return {"n": f.n, "d": f.d, "terms": terms}


def poly_from_json(obj: Mapping) -> SparsePoly:
    n = int(obj["n"])
    d = int(obj["d"])
    terms = {tuple(t["exp"]): _coeff_from_json(t["coeff"]) for t in obj["terms"]}
    return SparsePoly.make(n, d, terms)
