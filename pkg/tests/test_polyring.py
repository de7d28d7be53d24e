import json
import random
from fractions import Fraction

import pytest

from conftest import random_rational_poly
from momentforge.fixtures import mono
from momentforge.polyring import (
    ParamPoly,
    RationalFunction,
    SparsePoly,
    canonical_key,
    partial_derivative,
    poly_add,
    poly_from_json,
    poly_scale,
    poly_times_variable,
    poly_to_json,
    substitute_params,
)


def P(**kw):
    """Cubic polynomial from compact monomial names, e.g. P(x3=1, x2y=-2)."""
    terms = {mono(name): Fraction(c) for name, c in kw.items()}
    d = sum(next(iter(terms)))
    return SparsePoly.make(3, d, terms)


class TestPolyAdd:
    def test_disjoint_supports(self):
        assert poly_add(P(x3=1), P(y3=1)) == P(x3=1, y3=1)

    def test_cancellation_gives_zero(self):
        out = poly_add(P(x3=1), P(x3=-1))
        assert out.is_zero()
        assert (out.n, out.d) == (3, 3)

    def test_like_terms(self):
        assert poly_add(P(x2y=2), P(x2y=3)) == P(x2y=5)

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            poly_add(P(x3=1), SparsePoly.monomial(3, (4, 0, 0)))
        with pytest.raises(ValueError):
            poly_add(P(x3=1), SparsePoly.monomial(2, (3, 0)))


class TestPolyScale:
    def test_scale(self):
        assert poly_scale(P(x3=1, y3=1), Fraction(3)) == P(x3=3, y3=3)

    def test_scale_by_zero(self):
        assert poly_scale(P(x3=1), Fraction(0)).is_zero()

    def test_fractional(self):
        assert poly_scale(P(xyz=2), Fraction(1, 2)) == P(xyz=1)


class TestPartialDerivative:
    def test_single_power(self):
        out = partial_derivative(P(x3=1), 1)
        assert out == SparsePoly.make(3, 2, {(2, 0, 0): Fraction(3)})

    def test_vanishing(self):
        assert partial_derivative(P(x3=1, y3=1), 3).is_zero()

    def test_mixed(self):
        out = partial_derivative(P(x2y=1, xyz=1), 2)
        assert out == SparsePoly.make(3, 2, {(2, 0, 0): Fraction(1), (1, 0, 1): Fraction(1)})

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            partial_derivative(P(x3=1), 4)
        with pytest.raises(ValueError):
            partial_derivative(P(x3=1), 0)

    def test_degree_drops_by_one_on_every_term(self):
        rng = random.Random(7)
        for _ in range(25):
            f = random_rational_poly(rng, 3, 4)
            for i in (1, 2, 3):
                g = partial_derivative(f, i)
                assert all(sum(a) == 3 for a in g.terms)


def test_euler_identity():
    # sum_i x_i df/dx_i = d f, exactly, for random homogeneous polynomials
    rng = random.Random(11)
    for d in (3, 4):
        for _ in range(20):
            f = random_rational_poly(rng, 3, d)
            total = SparsePoly.zero(3, d)
            for i in (1, 2, 3):
                total = poly_add(total, poly_times_variable(partial_derivative(f, i), i))
            assert total == poly_scale(f, Fraction(d))


class TestParamPoly:
    def test_ring_laws_randomized(self):
        rng = random.Random(3)

        def rand_param(k=2):
            terms = {}
            for _ in range(rng.randint(0, 4)):
                exp = tuple(rng.randint(0, 2) for _ in range(k))
                terms[exp] = terms.get(exp, Fraction(0)) + Fraction(rng.randint(-4, 4))
            return ParamPoly(k, {e: c for e, c in terms.items() if c})

        for _ in range(60):
            a, b, c = rand_param(), rand_param(), rand_param()
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a

    def test_no_stored_zero_coefficients(self):
        p = ParamPoly(2, {(1, 0): Fraction(1)}) + ParamPoly(2, {(1, 0): Fraction(-1)})
        assert p.terms == {}

    def test_diff_and_subs(self):
        b1 = ParamPoly.symbol(2, 0)
        b2 = ParamPoly.symbol(2, 1)
        p = b1 * b1 * 3 + b1 * b2 - 7
        assert p.diff(0) == b1 * 6 + b2
        assert p.subs([Fraction(2), Fraction(5)]) == 12 + 10 - 7

    def test_compile_matches_subs(self):
        rng = random.Random(5)
        b1 = ParamPoly.symbol(2, 0)
        b2 = ParamPoly.symbol(2, 1)
        p = b1**3 * 2 - b2 * b1 * 5 + 9
        fn = p.compile()
        for _ in range(10):
            x = rng.uniform(-2, 2)
            y = rng.uniform(-2, 2)
            assert fn(x, y) == pytest.approx(float(p.subs([x, y])), rel=1e-12)

    def test_float_mixing_rejected(self):
        with pytest.raises(TypeError):
            ParamPoly.symbol(1, 0) * 0.5


class TestSubstituteParams:
    def test_basic(self):
        b1 = ParamPoly.symbol(1, 0)
        fam = SparsePoly.make(
            3, 3, {mono("x2z"): b1, mono("xy2"): ParamPoly.const(1, 1)}
        )
        assert substitute_params(fam, {"b1": Fraction(1)}) == P(x2z=1, xy2=1)

    def test_two_symbols(self):
        b1, b2 = ParamPoly.symbol(2, 0), ParamPoly.symbol(2, 1)
        fam = SparsePoly.make(
            3,
            3,
            {mono("z3"): b1, mono("y3"): b2, mono("x3"): ParamPoly.const(2, 1)},
        )
        out = substitute_params(fam, {"b1": Fraction(0), "b2": Fraction(1)})
        assert out == P(y3=1, x3=1)

    def test_float_mode(self):
        import math

        b1, b2 = ParamPoly.symbol(2, 0), ParamPoly.symbol(2, 1)
        fam = SparsePoly.make(
            3,
            3,
            {mono("xz2"): b1, mono("y3"): b2, mono("x3"): ParamPoly.const(2, 1)},
        )
        out = substitute_params(fam, {"b1": Fraction(3), "b2": math.sqrt(2)})
        assert out.terms[mono("xz2")] == 3
        assert out.terms[mono("y3")] == pytest.approx(math.sqrt(2))

    def test_missing_symbol(self):
        b1 = ParamPoly.symbol(2, 0)
        fam = SparsePoly.make(3, 3, {mono("x3"): b1})
        with pytest.raises(ValueError):
            substitute_params(fam, {"b1": Fraction(1)})


class TestRationalFunction:
    def test_monomial_and_content_reduction(self):
        b = ParamPoly.symbol(1, 0)
        rf = RationalFunction.make(b**4 * 216, b**4 * 9)
        assert rf.numer == ParamPoly.const(1, 24)
        assert rf.denom == ParamPoly.const(1, 1)

    def test_cross_multiplied_equality(self):
        b = ParamPoly.symbol(1, 0)
        assert RationalFunction.make(b * 2, b**2 * 4) == RationalFunction.make(
            ParamPoly.const(1, 1), b * 2
        )

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RationalFunction.make(ParamPoly.const(1, 1), ParamPoly(1))


class TestJsonFormat:
    def test_round_trip_exact(self):
        rng = random.Random(13)
        for _ in range(20):
            f = random_rational_poly(rng, 3, 3, density=0.6)
            assert poly_from_json(json.loads(json.dumps(poly_to_json(f)))) == f

    def test_round_trip_parametric(self):
        b1 = ParamPoly.symbol(1, 0)
        fam = SparsePoly.make(
            3, 3, {mono("x2z"): b1 * Fraction(2, 3), mono("xy2"): ParamPoly.const(1, 1)}
        )
        again = poly_from_json(json.loads(json.dumps(poly_to_json(fam))))
        assert again == fam

    def test_rational_coefficients_as_strings(self):
        payload = poly_to_json(P(x3=1))
        assert payload["terms"][0]["coeff"] == "1"

    def test_canonical_term_order(self):
        payload = poly_to_json(P(z3=1, x3=1, xyz=1))
        exps = [tuple(t["exp"]) for t in payload["terms"]]
        assert exps == sorted(exps, key=canonical_key)
