"""Integer Laurent polynomials, exact division, and the u-coefficient ring."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from valq.laurent import (
    ArityMismatch,
    InexactDivision,
    LaurentPoly,
    QCoeff,
    ZeroPolynomial,
    exact_div,
    qdiv,
    tropical_evaluate,
)


def poly(nvars, terms):
    return LaurentPoly(nvars, terms)


# Strategy: small 2-variable Laurent polynomials with exponents in
# [-3, 3] and coefficients in [-4, 4].
exponents = st.tuples(
    st.integers(min_value=-3, max_value=3),
    st.integers(min_value=-3, max_value=3),
)
small_polys = st.dictionaries(
    exponents, st.integers(min_value=-4, max_value=4), max_size=5
).map(lambda t: LaurentPoly(2, t))
nonzero_polys = small_polys.filter(lambda p: not p.is_zero())


class TestConstruction:
    def test_zero_coefficients_dropped(self):
        p = poly(2, {(1, 0): 0, (0, 1): 3})
        assert p.terms == {(0, 1): 3}

    def test_zero_one_variable(self):
        assert LaurentPoly.zero(3).is_zero()
        assert LaurentPoly.one(3).is_one()
        x1 = LaurentPoly.variable(3, 0)
        assert x1.terms == {(1, 0, 0): 1}
        assert x1.is_monomial()

    def test_monomial(self):
        m = LaurentPoly.monomial((2, -1), 5)
        assert m.terms == {(2, -1): 5}

    def test_equality_and_hash(self):
        a = poly(2, {(1, 0): 1, (0, 0): 1})
        b = poly(2, {(0, 0): 1, (1, 0): 1})
        assert a == b
        assert hash(a) == hash(b)
        assert a != poly(2, {(1, 0): 1})

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatch):
            LaurentPoly.one(2) + LaurentPoly.one(3)


class TestArithmetic:
    def test_add_cancellation(self):
        a = poly(1, {(1,): 1})
        b = poly(1, {(1,): -1, (0,): 2})
        assert (a + b).terms == {(0,): 2}

    def test_negative_power_of_monomial(self):
        x = LaurentPoly.variable(2, 0)
        assert (x ** -2).terms == {(-2, 0): 1}

    def test_negative_power_of_sum_rejected(self):
        p = LaurentPoly.one(1) + LaurentPoly.variable(1, 0)
        with pytest.raises(InexactDivision):
            p ** -1

    def test_binomial_power(self):
        p = LaurentPoly.one(1) + LaurentPoly.variable(1, 0)
        cube = p ** 3
        assert cube.terms == {(0,): 1, (1,): 3, (2,): 3, (3,): 1}

    def test_int_scaling(self):
        p = poly(1, {(1,): 2})
        assert (3 * p).terms == {(1,): 6}
        assert (p * 0).is_zero()

    @settings(max_examples=60, deadline=None)
    @given(small_polys, small_polys, small_polys)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + LaurentPoly.zero(2) == a
        assert a * LaurentPoly.one(2) == a
        assert a - a == LaurentPoly.zero(2)


class TestExactDiv:
    def test_known_quotient(self):
        x = LaurentPoly.variable(1, 0)
        num = x ** 2 - LaurentPoly.one(1)
        den = x + LaurentPoly.one(1)
        assert exact_div(num, den) == x - LaurentPoly.one(1)

    def test_laurent_quotient(self):
        # (x + x^-1) / x^-1 = x^2 + 1.
        x = LaurentPoly.variable(1, 0)
        num = x + x ** -1
        assert exact_div(num, x ** -1) == x ** 2 + LaurentPoly.one(1)

    def test_inexact_raises(self):
        x = LaurentPoly.variable(1, 0)
        with pytest.raises(InexactDivision):
            exact_div(x + LaurentPoly.one(1), x - LaurentPoly.one(1))

    def test_coefficient_inexact_raises(self):
        two = LaurentPoly.one(1) * 2
        three = LaurentPoly.one(1) * 3
        with pytest.raises(InexactDivision):
            exact_div(three, two)

    def test_zero_divisor_raises(self):
        with pytest.raises(ZeroPolynomial):
            exact_div(LaurentPoly.one(1), LaurentPoly.zero(1))

    def test_zero_numerator(self):
        assert exact_div(LaurentPoly.zero(1), LaurentPoly.one(1)).is_zero()

    @settings(max_examples=60, deadline=None)
    @given(small_polys, nonzero_polys)
    def test_round_trip(self, a, b):
        assert exact_div(a * b, b) == a


class TestExponentGeometry:
    def test_min_max_and_denominator(self):
        p = poly(2, {(-1, 2): 1, (0, -3): 4})
        assert p.min_exponents() == (-1, -3)
        assert p.max_exponents() == (0, 2)
        assert p.denominator_vector() == (1, 3)
        assert p.denominator_vector(upto=1) == (1,)

    def test_zero_has_no_range(self):
        with pytest.raises(ZeroPolynomial):
            LaurentPoly.zero(2).min_exponents()

    def test_shift(self):
        p = poly(2, {(0, 0): 1, (1, 0): 1})
        assert p.shift((0, -1)).terms == {(0, -1): 1, (1, -1): 1}


class TestSubstitution:
    def test_specialize_ones_merges_terms(self):
        p = poly(2, {(1, 1): 1, (1, 0): 1})
        assert p.specialize_ones([1]).terms == {(1, 0): 2}

    def test_drop_vars(self):
        p = poly(3, {(1, 0, 2): 5})
        q = p.drop_vars([0, 2])
        assert q.nvars == 2 and q.terms == {(1, 2): 5}

    def test_drop_vars_guards_support(self):
        p = poly(3, {(1, 1, 0): 1})
        with pytest.raises(ArityMismatch):
            p.drop_vars([0, 2])

    def test_substitute_monomials(self):
        # x1 -> z1*z2, x2 -> z2^-1 applied to x1*x2 + 1.
        p = poly(2, {(1, 1): 1, (0, 0): 1})
        q = p.substitute_monomials(2, [(1, 1), (0, -1)])
        assert q.terms == {(1, 0): 1, (0, 0): 1}

    def test_substitute_general(self):
        # x -> y + 1 applied to x^2 gives y^2 + 2y + 1.
        p = poly(1, {(2,): 1})
        y = LaurentPoly.variable(1, 0)
        q = p.substitute([y + LaurentPoly.one(1)])
        assert q.terms == {(2,): 1, (1,): 2, (0,): 1}


class TestRender:
    def test_descending_terms_and_signs(self):
        p = poly(2, {(1, 0): 1, (-1, 2): -3, (0, 0): 1})
        assert p.render() == "x1 + 1 - 3*x1^-1*x2^2"

    def test_custom_names(self):
        p = poly(2, {(1, 1): 1, (1, 0): 1})
        assert p.render(["y1", "y2"]) == "y1*y2 + y1"

    def test_zero(self):
        assert LaurentPoly.zero(2).render() == "0"


class TestTropical:
    def test_min_plus_of_terms(self):
        # Terms x1 and x2^2 under x1 -> (1, 0), x2 -> (0, -1).
        p = poly(2, {(1, 0): 1, (0, 2): 1})
        val = tropical_evaluate(p, [(1, 0), (0, -1)])
        assert val == (0, -2)

    def test_negative_coefficient_rejected(self):
        p = poly(1, {(1,): -1})
        with pytest.raises(ValueError):
            tropical_evaluate(p, [(1, 0)])

    def test_monomial_is_linear(self):
        p = poly(2, {(2, -1): 3})
        assert tropical_evaluate(p, [(1, 1), (0, 1)]) == (2, 1)


class TestQCoeff:
    def test_u_power_and_integer(self):
        assert QCoeff.u_power(2).terms == {2: 1}
        assert QCoeff.integer(-3).terms == {0: -3}
        assert QCoeff.integer(0).is_zero()

    def test_arithmetic(self):
        a = QCoeff.u_power(1) + QCoeff.u_power(-1)
        b = QCoeff.u_power(1)
        assert (a * b).terms == {2: 1, 0: 1}
        assert (a - a).is_zero()

    def test_bar_negates_exponents(self):
        a = QCoeff.u_power(2) + QCoeff.integer(3)
        assert a.bar().terms == {-2: 1, 0: 3}
        assert not a.is_bar_invariant()
        sym = QCoeff.u_power(1) + QCoeff.u_power(-1)
        assert sym.is_bar_invariant()

    def test_specialize(self):
        a = QCoeff.u_power(2) + QCoeff.integer(3)
        assert a.at_q_one() == 4
        assert a.specialize_u(2) == 7

    def test_qdiv_round_trip(self):
        a = QCoeff.u_power(3) + QCoeff.integer(2)
        b = QCoeff.u_power(-1) + QCoeff.u_power(1)
        assert qdiv(a * b, b) == a

    def test_qdiv_inexact(self):
        with pytest.raises(ArithmeticError):
            qdiv(QCoeff.u_power(1) + QCoeff.integer(1), QCoeff.integer(2))

    def test_render(self):
        a = QCoeff.u_power(1) + QCoeff.u_power(-1)
        assert a.render() == "u + u^-1"
