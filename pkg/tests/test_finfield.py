"""Finite fields, towers of embeddings, and subspace enumeration."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from valq.finfield import (
    CapExceeded,
    FiniteField,
    NotPrime,
    build_tower,
    enumerate_subspaces,
    enumerate_subspaces_containing,
    f_in_span,
    f_inverse,
    f_kernel_basis,
    f_matmul,
    f_matvec,
    f_rank,
    f_rref,
    gaussian_binomial,
    is_prime,
    prime_factors,
)

SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]


def field(p, d):
    return FiniteField(p, d)


class TestPrimes:
    def test_is_prime(self):
        primes = [n for n in range(2, 60) if is_prime(n)]
        assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        assert not is_prime(1) and not is_prime(0) and not is_prime(-7)

    def test_prime_factors(self):
        assert prime_factors(360) == [2, 3, 5]
        assert prime_factors(97) == [97]


class TestFieldArithmetic:
    def test_prime_field_is_mod_p(self):
        F7 = field(7, 1)
        for a in F7.elements():
            for b in F7.elements():
                assert F7.add(a, b) == (a + b) % 7
                assert F7.mul(a, b) == (a * b) % 7

    def test_f4_multiplication_table(self):
        # Codes 0, 1, t, t+1 with t^2 = t + 1.
        F4 = field(2, 2)
        assert F4.modulus == (1, 1, 1)
        assert F4.mul(2, 2) == 3
        assert F4.mul(2, 3) == 1
        assert F4.inv(2) == 3
        assert F4.add(2, 3) == 1

    @pytest.mark.parametrize("p,d", SMALL_FIELDS)
    def test_field_axioms_exhaustive(self, p, d):
        F = field(p, d)
        els = list(F.elements())
        for a in els:
            assert F.add(a, 0) == a and F.mul(a, 1) == a
            assert F.add(a, F.neg(a)) == 0
            if a:
                assert F.mul(a, F.inv(a)) == 1
                assert F.pow(a, F.q - 1) == 1
        for a in els:
            for b in els:
                assert F.add(a, b) == F.add(b, a)
                assert F.mul(a, b) == F.mul(b, a)
                for c in els[:3]:
                    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
                    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))

    def test_digits_round_trip(self):
        F9 = field(3, 2)
        for a in F9.elements():
            assert F9.from_digits(F9.digits(a)) == a

    def test_frobenius_is_additive_field_automorphism(self):
        F9 = field(3, 2)
        for a in F9.elements():
            for b in F9.elements():
                assert F9.frobenius(F9.add(a, b)) == F9.add(
                    F9.frobenius(a), F9.frobenius(b)
                )
        # Fixed field is the prime field.
        fixed = [a for a in F9.elements() if F9.frobenius(a) == a]
        assert fixed == [0, 1, 2]

    def test_roots(self):
        # X^2 + 1 has no root mod 3 and two roots in the degree-2 extension.
        assert field(3, 1).roots((1, 0, 1)) == []
        assert len(field(3, 2).roots((1, 0, 1))) == 2

    def test_guards(self):
        with pytest.raises(NotPrime):
            FiniteField(4, 1)
        with pytest.raises(ValueError):
            FiniteField(2, 0)
        with pytest.raises(CapExceeded):
            FiniteField(2, 20, cap=1024)
        with pytest.raises(ZeroDivisionError):
            field(5, 1).inv(0)


class TestLinearAlgebra:
    def brute_span_size(self, F, rows):
        span = {tuple([0] * len(rows[0]))}
        from itertools import product

        for coeffs in product(F.elements(), repeat=len(rows)):
            v = [0] * len(rows[0])
            for c, row in zip(coeffs, rows):
                for j, x in enumerate(row):
                    v[j] = F.add(v[j], F.mul(c, x))
            span.add(tuple(v))
        return len(span)

    @pytest.mark.parametrize("p,d", [(2, 1), (3, 1), (2, 2)])
    def test_rank_matches_span_size(self, p, d):
        import random

        F = field(p, d)
        rng = random.Random(7)
        for _ in range(20):
            rows = [
                [rng.randrange(F.q) for _ in range(3)]
                for _ in range(rng.randrange(1, 4))
            ]
            r = f_rank(F, rows)
            assert self.brute_span_size(F, rows) == F.q**r

    def test_rref_is_idempotent_and_pivots_are_unit_columns(self):
        F4 = field(2, 2)
        rows = ((1, 2, 3), (2, 3, 1), (3, 1, 2))
        red, pivots = f_rref(F4, rows)
        red2, pivots2 = f_rref(F4, red)
        assert red2 == red and pivots2 == pivots
        for r, pc in enumerate(pivots):
            col = [red[i][pc] for i in range(len(red))]
            assert col[r] == 1 and all(x == 0 for i, x in enumerate(col) if i != r)

    def test_kernel_is_killed_and_has_right_dimension(self):
        F9 = field(3, 2)
        rows = ((1, 2, 3), (2, 4, 6))
        basis = f_kernel_basis(F9, rows)
        assert len(basis) == 3 - f_rank(F9, rows)
        for v in basis:
            assert f_matvec(F9, rows, v) == [0, 0]

    def test_inverse_round_trip(self):
        F5 = field(5, 1)
        m = ((1, 2), (3, 4))
        inv = f_inverse(F5, m)
        assert f_matmul(F5, m, inv) == [[1, 0], [0, 1]]
        assert f_matmul(F5, inv, m) == [[1, 0], [0, 1]]

    def test_singular_matrix_has_no_inverse(self):
        F5 = field(5, 1)
        with pytest.raises(ZeroDivisionError):
            f_inverse(F5, ((1, 2), (2, 4)))

    def test_in_span(self):
        F2 = field(2, 1)
        rows = ((1, 1, 0), (0, 1, 1))
        assert f_in_span(F2, rows, (1, 0, 1))
        assert not f_in_span(F2, rows, (1, 0, 0))


class TestGrassmannian:
    def test_gaussian_binomial_values(self):
        assert gaussian_binomial(2, 4, 2) == 35
        assert gaussian_binomial(3, 2, 1) == 4
        assert gaussian_binomial(4, 2, 1) == 5
        assert gaussian_binomial(2, 3, 3) == 1
        assert gaussian_binomial(2, 3, 4) == 0

    @settings(max_examples=40, deadline=None)
    @given(
        st.sampled_from([2, 3, 4, 5]),
        st.integers(min_value=1, max_value=5),
        st.integers(min_value=1, max_value=5),
    )
    def test_pascal_recurrence(self, q, n, k):
        assert gaussian_binomial(q, n, k) == gaussian_binomial(
            q, n - 1, k - 1
        ) + q**k * gaussian_binomial(q, n - 1, k)
        assert gaussian_binomial(q, n, k) == gaussian_binomial(q, n, n - k)

    @pytest.mark.parametrize("p,d", SMALL_FIELDS)
    def test_subspace_counts_match_gaussian_binomials(self, p, d):
        F = field(p, d)
        for n in range(1, 4):
            for k in range(0, n + 1):
                count = sum(1 for _ in enumerate_subspaces(F, n, k))
                assert count == gaussian_binomial(F.q, n, k)

    def test_subspaces_are_distinct_rrefs(self):
        F4 = field(2, 2)
        seen = set()
        for rows in enumerate_subspaces(F4, 3, 2):
            red, _ = f_rref(F4, rows)
            assert [list(r) for r in red] == rows
            seen.add(tuple(tuple(r) for r in rows))
        assert len(seen) == gaussian_binomial(4, 3, 2)

    def test_cap_enforced(self):
        with pytest.raises(CapExceeded):
            list(enumerate_subspaces(field(3, 2), 3, 2, cap=10))

    def test_subspaces_containing_count(self):
        # Subspaces of dimension k through a fixed dimension-j subspace
        # biject with (k-j)-subspaces of the quotient.
        F4 = field(2, 2)
        fixed = ((0, 0, 1),)
        count = sum(1 for _ in enumerate_subspaces_containing(F4, 3, 2, fixed))
        assert count == gaussian_binomial(4, 2, 1)

    def test_subspaces_containing_really_contain(self):
        F3 = field(3, 1)
        fixed = ((1, 2, 0),)
        for rows in enumerate_subspaces_containing(F3, 3, 2, fixed):
            assert f_in_span(F3, rows, (1, 2, 0))


class TestTowers:
    def test_closure_includes_divisor_grid(self):
        t = build_tower(2, (2, 4))
        assert sorted(t.fields) == [1, 2, 4]

    def test_embeddings_are_ring_homomorphisms(self):
        t = build_tower(2, (2, 4))
        F4 = t.field(2)
        for x in F4.elements():
            for y in F4.elements():
                ex, ey = t.embed(2, 4, x), t.embed(2, 4, y)
                assert t.embed(2, 4, F4.add(x, y)) == t.field(4).add(ex, ey)
                assert t.embed(2, 4, F4.mul(x, y)) == t.field(4).mul(ex, ey)
        assert t.embed(2, 4, 1) == 1
        # Injectivity.
        images = {t.embed(2, 4, x) for x in F4.elements()}
        assert len(images) == 4

    def test_embedding_composition_law(self):
        t = build_tower(2, (2, 4))
        for x in t.field(1).elements():
            assert t.embed(1, 4, x) == t.embed(2, 4, t.embed(1, 2, x))
        t3 = build_tower(3, (2, 4))
        for x in t3.field(1).elements():
            assert t3.embed(1, 4, x) == t3.embed(2, 4, t3.embed(1, 2, x))

    def test_embed_inverse_round_trip(self):
        t = build_tower(3, (2,))
        for x in t.field(1).elements():
            assert t.embed_inverse(2, 1, t.embed(1, 2, x)) == x

    def test_relative_trace_is_surjective_subfield_linear(self):
        t = build_tower(3, (2,))
        F9, F3 = t.field(2), t.field(1)
        traces = {t.relative_trace(2, 1, x) for x in F9.elements()}
        assert traces == set(F3.elements())
        for x in F9.elements():
            for y in F9.elements():
                assert t.relative_trace(2, 1, F9.add(x, y)) == F3.add(
                    t.relative_trace(2, 1, x), t.relative_trace(2, 1, y)
                )
        # On embedded subfield elements the trace multiplies by the
        # extension degree.
        for y in F3.elements():
            assert t.relative_trace(2, 1, t.embed(1, 2, y)) == F3.mul(2 % 3, y)

    def test_trace_dual_basis_gram_identity(self):
        t = build_tower(3, (2,))
        F9 = t.field(2)
        dual = t.trace_dual_basis(2, 1)
        power = [1, F9.from_digits((0, 1))]
        for i, bi in enumerate(power):
            for j, gj in enumerate(dual):
                tr = t.relative_trace(2, 1, F9.mul(bi, gj))
                assert tr == (1 if i == j else 0)

    def test_subfield_coords_round_trip(self):
        t = build_tower(2, (2, 4))
        F16 = t.field(4)
        for y in F16.elements():
            coords = t.subfield_coords(4, 2, y)
            assert len(coords) == 2
            assert t.from_subfield_coords(4, 2, coords) == y
