"""Quantum torus elements and quantum seed mutation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from valq.exchange import builtin_exchange_data
from valq.laurent import QCoeff
from valq.qtorus import LambdaMismatch, QTorusElem, QuantumSeed, enumerate_quantum_seeds

B2 = builtin_exchange_data("B2")
A2 = builtin_exchange_data("A2")

vec4 = st.tuples(*([st.integers(min_value=-2, max_value=2)] * 4))


def X(exp, coeff=None):
    return QTorusElem.basis_elem(B2.lam, exp, coeff)


class TestTorusArithmetic:
    def test_product_twists_by_lambda(self):
        a, b = (1, 0, 0, 0), (0, 0, 1, 0)
        assert X(a) * X(b) == X((1, 0, 1, 0), QCoeff.u_power(B2.lam_pairing(a, b)))
        assert B2.lam_pairing(a, b) == -2

    @settings(max_examples=50, deadline=None)
    @given(vec4, vec4)
    def test_commutation_rule(self, a, b):
        lhs = X(a) * X(b)
        assert lhs == (X(b) * X(a)).shift_u(2 * B2.lam_pairing(a, b))
        assert lhs == X(tuple(x + y for x, y in zip(a, b)), QCoeff.u_power(B2.lam_pairing(a, b)))

    def test_scale_and_shift(self):
        x = X((1, 0, 0, 0))
        assert x.scale(QCoeff.integer(3)) == x + x + x
        assert x.shift_u(2) == x.scale(QCoeff.u_power(2))

    def test_power_of_monomial(self):
        x = X((1, 0, -1, 0))
        sq = x ** 2
        ((exp, coeff),) = sq.terms.items()
        assert exp == (2, 0, -2, 0)
        # Normalized monomials stay normalized under powers.
        assert sq.is_bar_invariant()

    def test_bar_is_an_antiautomorphism(self):
        x = X((1, 0, 0, 0)) + X((0, 1, 0, 0), QCoeff.u_power(1))
        y = X((0, 0, 1, 0)) - X((0, 0, 0, 1))
        assert x.bar().bar() == x
        assert (x * y).bar() == y.bar() * x.bar()

    def test_normalized_monomials_are_bar_invariant(self):
        assert X((1, 2, -1, 0)).is_bar_invariant()
        assert not X((1, 0, 0, 0), QCoeff.u_power(1)).is_bar_invariant()

    def test_mismatched_forms_rejected(self):
        other = QTorusElem.basis_elem(A2.lam, (1, 0, 0, 0))
        with pytest.raises(LambdaMismatch):
            X((1, 0, 0, 0)) + other

    def test_specialize_q1_forgets_the_twist(self):
        x = X((1, 0, 0, 0), QCoeff.u_power(3)) + X((0, 1, 0, 0), QCoeff.integer(2))
        p = x.specialize_q1()
        assert p.terms == {(1, 0, 0, 0): 1, (0, 1, 0, 0): 2}


class TestDivRight:
    def test_round_trip(self):
        num = X((1, 0, 0, 0)) + X((0, 1, 1, 0), QCoeff.u_power(-1))
        den = X((0, 0, 1, 1))
        assert (num * den).div_right(den) == num

    @settings(max_examples=40, deadline=None)
    @given(vec4, vec4, vec4)
    def test_round_trip_random(self, a, b, d):
        num = X(a) + X(b, QCoeff.u_power(1))
        den = X(d)
        assert (num * den).div_right(den) == num

    def test_exactness_enforced(self):
        num = X((1, 0, 0, 0)) + X((0, 1, 0, 0))
        with pytest.raises(ArithmeticError):
            num.div_right(X((0, 0, 1, 0)) + X((0, 0, 0, 1)))


class TestSeedMutation:
    def test_first_mutation_of_b2(self):
        s = QuantumSeed.initial_seed(B2)
        m = s.mutate(0)
        assert m.variables[0] == X((-1, 2, 0, 0)) + X((-1, 0, 1, 0))
        # The other variables are untouched.
        assert m.variables[1] == s.variables[1]
        assert m.variables[2] == s.variables[2]

    def test_mutation_is_an_involution(self):
        s = QuantumSeed.initial_seed(B2)
        for k in range(2):
            back = s.mutate(k).mutate(k)
            assert back.variables == s.variables
            assert back.current.btilde == s.current.btilde
            assert back.current.lam == s.current.lam

    def test_variables_stay_bar_invariant(self):
        s = QuantumSeed.initial_seed(B2).mutate_sequence([0, 1, 0])
        for v in s.variables:
            assert v.is_bar_invariant()

    def test_depth_and_history(self):
        s = QuantumSeed.initial_seed(B2).mutate_sequence([0, 1])
        assert s.depth == 2 and s.history == (0, 1)

    def test_frame_monomial_at_initial_seed_is_normalized(self):
        s = QuantumSeed.initial_seed(B2)
        for c in [(1, 0, -1, 0), (0, 1, 0, 1), (2, 1, 0, -1)]:
            assert s.frame_monomial(c) == X(c)
            assert s.frame_monomial(c).is_bar_invariant()

    def test_frame_monomial_after_mutation(self):
        s = QuantumSeed.initial_seed(B2).mutate(1)
        f = s.frame_monomial((1, 1, 0, -1))
        assert f.is_bar_invariant()
        assert f.specialize_q1() == (
            s.variables[0] * s.variables[1] * s.variables[3] ** -1
        ).specialize_q1()

    def test_frame_monomial_length_guard(self):
        s = QuantumSeed.initial_seed(B2)
        with pytest.raises(LambdaMismatch):
            s.frame_monomial((1, 0))


class TestCanonicalKey:
    def test_double_mutation_returns_to_start(self):
        s = QuantumSeed.initial_seed(A2)
        assert s.mutate(0).mutate(0).canonical_key() == s.canonical_key()

    def test_pentagon_periodicity(self):
        s = QuantumSeed.initial_seed(A2)
        assert s.mutate_sequence([0, 1, 0, 1, 0]).canonical_key() == s.canonical_key()
        assert s.mutate_sequence([0, 1, 0, 1]).canonical_key() != s.canonical_key()


class TestGraph:
    def test_a2_graph(self):
        g = enumerate_quantum_seeds(A2)
        assert g.count == 5 and not g.truncated
        assert len(g.edges) == 5

    def test_truncation_flag(self):
        g = enumerate_quantum_seeds(A2, max_seeds=2)
        assert g.truncated and g.count == 2
        g2 = enumerate_quantum_seeds(A2, max_depth=1)
        assert g2.truncated and g2.count == 3
