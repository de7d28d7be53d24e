import random
from fractions import Fraction

import pytest

from conftest import random_rational_poly
from momentforge.fixtures import mono
from momentforge.moment import (
    complex_gradient_imag_parts,
    flow_derivative,
    gradient,
    gradient_symbolic,
    hermitian_matrix,
    moment_matrix,
    square_length,
    square_length_symbolic,
    symbolic_moment_matrix,
)
from momentforge.polyring import (
    DegenerateInputError,
    ParamPoly,
    SparsePoly,
    poly_scale,
    substitute_params,
)
from momentforge.symd import enumerate_monomials


def P(**kw):
    terms = {mono(name): Fraction(c) for name, c in kw.items()}
    d = sum(next(iter(terms)))
    return SparsePoly.make(3, d, terms)


X3Y3 = P(x3=1, y3=1)


class TestHermitianMatrix:
    def test_x3(self):
        assert hermitian_matrix(P(x3=1)).diagonal() == (3, 0, 0)

    def test_fermat_cubic(self):
        h = hermitian_matrix(P(x3=1, y3=1, z3=1))
        assert h.is_diagonal() and h.diagonal() == (1, 1, 1)

    def test_x4(self):
        assert hermitian_matrix(SparsePoly.monomial(3, (4, 0, 0))).diagonal() == (4, 0, 0)

    def test_zero_rejected(self):
        with pytest.raises(DegenerateInputError):
            hermitian_matrix(SparsePoly.zero(3, 3))

    def test_real_symmetry(self):
        rng = random.Random(41)
        for _ in range(20):
            h = hermitian_matrix(random_rational_poly(rng, 3, 3, density=0.6))
            assert all(
                h.entries[i][j] == h.entries[j][i] for i in range(3) for j in range(3)
            )


class TestMomentMatrix:
    def test_published_example(self):
        m = moment_matrix(X3Y3)
        assert m.is_diagonal()
        assert m.diagonal() == (1, 1, -2)

    def test_xyz_is_minimal(self):
        m = moment_matrix(SparsePoly.monomial(3, (1, 1, 1)))
        assert all(v == 0 for row in m.entries for v in row)

    def test_x3(self):
        assert moment_matrix(P(x3=1)).diagonal() == (4, -2, -2)

    def test_trace_zero_exactly(self):
        rng = random.Random(43)
        for d in (3, 4):
            for _ in range(50):
                m = moment_matrix(random_rational_poly(rng, 3, d, density=0.5))
                assert m.trace() == 0

    def test_scale_invariance(self):
        rng = random.Random(47)
        for _ in range(50):
            f = random_rational_poly(rng, 3, 3, density=0.5)
            lam = Fraction(rng.randint(1, 12), rng.randint(1, 12)) * rng.choice((1, -1))
            assert moment_matrix(poly_scale(f, lam)).entries == moment_matrix(f).entries
            assert square_length(poly_scale(f, lam)) == square_length(f)


class TestSquareLength:
    def test_examples(self):
        assert square_length(X3Y3) == 6
        assert square_length(P(x3=1, y3=1, z3=1)) == 0
        assert square_length(P(x3=1)) == 24

    def test_nonnegative(self):
        rng = random.Random(53)
        for _ in range(40):
            assert square_length(random_rational_poly(rng, 3, 3, density=0.4)) >= 0


class TestSquareLengthSymbolic:
    def test_single_parameter_scale_family_is_constant(self):
        fam = SparsePoly.make(3, 3, {mono("x3"): ParamPoly.symbol(1, 0)})
        rf = square_length_symbolic(fam)
        assert rf.numer == ParamPoly.const(1, 24)
        assert rf.denom == ParamPoly.const(1, 1)

    def test_substitution_consistency(self):
        b1 = ParamPoly.symbol(1, 0)
        fam = SparsePoly.make(
            3, 3, {mono("x2z"): b1, mono("xy2"): ParamPoly.const(1, 1)}
        )
        rf = square_length_symbolic(fam)
        numeric = substitute_params(fam, [Fraction(1)])
        assert rf.evaluate([Fraction(1)]) == square_length(numeric)

    def test_general_quartic_agrees_with_numeric(self):
        basis = enumerate_monomials(3, 4)
        size = len(basis)
        general = SparsePoly.make(
            3, 4, {a: ParamPoly.symbol(size, k) for k, a in enumerate(basis.order)}
        )
        rf = square_length_symbolic(general)
        rng = random.Random(59)
        for _ in range(3):
            point = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(size)]
            while all(v == 0 for v in point):
                point = [Fraction(rng.randint(-4, 4)) for _ in range(size)]
            numeric = SparsePoly.make(
                3, 4, {a: c for a, c in zip(basis.order, point) if c}
            )
            assert rf.evaluate(point) == square_length(numeric)


class TestSymbolicMomentMatrix:
    def test_quartic_spot_coefficients(self):
        basis = enumerate_monomials(3, 4)
        size = len(basis)
        general = SparsePoly.make(
            3, 4, {a: ParamPoly.symbol(size, k) for k, a in enumerate(basis.order)}
        )
        sym = symbolic_moment_matrix(general)

        def coeff(poly, sub_a, sub_b):
            exp = [0] * size
            exp[basis.index(sub_a)] += 1
            exp[basis.index(sub_b)] += 1
            return poly.terms.get(tuple(exp), Fraction(0))

        assert coeff(sym.denominator, (4, 0, 0), (4, 0, 0)) == 36
        assert coeff(sym.numerators[0][0], (4, 0, 0), (4, 0, 0)) == 192
        assert coeff(sym.numerators[1][1], (4, 0, 0), (4, 0, 0)) == -96
        assert coeff(sym.numerators[0][1], (3, 1, 0), (4, 0, 0)) == 72


class TestGradient:
    def test_zero_at_fermat_cubic(self):
        grad = gradient(P(x3=1, y3=1, z3=1))
        assert len(grad) == 10
        assert all(g == 0 for g in grad)

    def test_zero_at_monomial(self):
        assert all(g == 0 for g in gradient(P(x3=1)))

    def test_matches_finite_differences(self):
        # independent oracle: central differences of the square length
        rng = random.Random(61)
        basis = enumerate_monomials(3, 3)
        h = 1e-5
        for _ in range(25):
            f = random_rational_poly(rng, 3, 3)
            grad = [float(g) for g in gradient(f)]
            coeffs = [float(f.terms.get(a, 0)) for a in basis.order]
            for k, alpha in enumerate(basis.order):
                up = dict(zip(basis.order, coeffs))
                dn = dict(zip(basis.order, coeffs))
                up[alpha] += h
                dn[alpha] -= h
                fd = (
                    square_length(SparsePoly(3, 3, {a: c for a, c in up.items() if c}))
                    - square_length(SparsePoly(3, 3, {a: c for a, c in dn.items() if c}))
                ) / (2 * h)
                assert abs(grad[k] - fd) < 1e-7

    def test_euler_relation(self):
        # degree-0 homogeneity: sum_a c_a dL/dc_a = 0 exactly
        rng = random.Random(67)
        basis = enumerate_monomials(3, 3)
        for _ in range(30):
            f = random_rational_poly(rng, 3, 3, density=0.6)
            grad = gradient(f)
            total = sum(
                (f.terms.get(a, Fraction(0)) * g for a, g in zip(basis.order, grad)),
                Fraction(0),
            )
            assert total == 0

    def test_zero_polynomial_rejected(self):
        with pytest.raises(DegenerateInputError):
            gradient(SparsePoly.zero(3, 3))


class TestGradientSymbolic:
    def test_matches_pointwise_gradient(self):
        b1 = ParamPoly.symbol(1, 0)
        fam = SparsePoly.make(
            3, 3, {mono("x2z"): b1, mono("xy2"): ParamPoly.const(1, 1)}
        )
        numerators, denom = gradient_symbolic(fam)
        assert len(numerators) == 10
        for value in (Fraction(1), Fraction(-2), Fraction(3, 7)):
            numeric = substitute_params(fam, [value])
            dvalue = denom.subs([value])
            point = gradient(numeric)
            for num, g in zip(numerators, point):
                assert num.subs([value]) == g * dvalue


class TestFlowDerivative:
    def test_diagonal_direction(self):
        assert flow_derivative(P(x3=1), 1, 1) == 6

    def test_vanishing_mixed_direction(self):
        assert flow_derivative(P(x2y=1), 1, 2) == 0

    def test_mixed_direction(self):
        assert flow_derivative(P(x2y=1, x3=1), 1, 2) == Fraction(3, 2)

    def test_equals_twice_hermitian_entry(self):
        rng = random.Random(71)
        for d in (3, 4):
            for _ in range(25):
                f = random_rational_poly(rng, 3, d, density=0.5)
                h = hermitian_matrix(f)
                for i in range(1, 4):
                    for j in range(1, 4):
                        assert flow_derivative(f, i, j) == 2 * h.entries[i - 1][j - 1]

    def test_bad_indices(self):
        with pytest.raises(ValueError):
            flow_derivative(P(x3=1), 0, 1)
        with pytest.raises(DegenerateInputError):
            flow_derivative(SparsePoly.zero(3, 3), 1, 1)


class TestComplexGradientImagParts:
    def test_cubic_examples(self):
        for f in (P(x3=1, xyz=2), X3Y3):
            parts = complex_gradient_imag_parts(f)
            assert len(parts) == 10
            assert all(p == 0 for p in parts)

    def test_random_quartic_exact_zero(self):
        rng = random.Random(73)
        for _ in range(10):
            f = random_rational_poly(rng, 3, 4, density=0.5)
            parts = complex_gradient_imag_parts(f)
            assert len(parts) == 15
            assert all(p == 0 for p in parts)
