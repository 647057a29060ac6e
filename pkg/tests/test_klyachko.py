"""Klyachko algebra: squarefree reduction, the integral, and a_w."""

import random
from fractions import Fraction
from math import factorial

import pytest

from permclass.klyachko import (
    KElement,
    aw_klyachko,
    integral,
    multiply_by_generator,
    reduce_power_product,
    reduce_word_monomial,
)
from permclass.mixed_eulerian import compositions, mixed_eulerian
from permclass.perm import parse_perm


class TestGeneratorProducts:
    def test_u1_times_one(self):
        e = multiply_by_generator(KElement.one(4), 1)
        assert e.coefficient({1}) == 1
        assert len(e.coeffs) == 1

    def test_u1_squared(self):
        e = multiply_by_generator(multiply_by_generator(KElement.one(4), 1), 1)
        assert e.coefficient({1, 2}) == Fraction(1, 2)
        assert len(e.coeffs) == 1

    def test_u1_squared_u2_top_coefficient(self):
        e = reduce_word_monomial((2, 1, 0), 4)
        assert e.coefficient({1, 2, 3}) == Fraction(
            mixed_eulerian((2, 1, 0, 0)), factorial(3)
        )


class TestReduceWordMonomial:
    def test_squarefree_passthrough(self):
        e = reduce_word_monomial((1, 0, 1, 0), 5)
        assert e.coefficient({1, 3}) == 1
        assert len(e.coeffs) == 1

    def test_paper_top_coefficients(self):
        assert integral(reduce_word_monomial((2, 1, 1, 0), 5)) == Fraction(6, 24)
        assert integral(reduce_word_monomial((1, 2, 1, 0), 5)) == Fraction(12, 24)

    def test_integral_of_basis_elements(self):
        top = KElement(4, {0b111: Fraction(1)})
        assert integral(top) == 1
        assert integral(KElement.one(4)) == 0
        assert integral(reduce_word_monomial((1, 1, 1, 0), 4)) == 1

    def test_master_identity_with_mixed_eulerian(self):
        for n in range(2, 7):
            for c in compositions(n - 1, n - 1):
                lhs = integral(reduce_word_monomial(c, n))
                rhs = Fraction(mixed_eulerian(c + (0,)), factorial(n - 1))
                assert lhs == rhs, (n, c)


class TestConfluence:
    def test_random_rewriting_orders_agree(self):
        rng = random.Random(2024)
        for n in range(3, 6):
            for c in compositions(n - 1, n - 1):
                base = reduce_word_monomial(c, n)

                def chooser(m):
                    return rng.choice([i for i, e in enumerate(m) if e >= 2])

                for _ in range(3):
                    assert reduce_power_product(n, c, site_chooser=chooser) == base


class TestAw:
    def test_paper_examples(self):
        assert aw_klyachko(parse_perm("32415")) == 1
        assert aw_klyachko(parse_perm("21")) == 1
        # Table 1 value (the prose near this example misprints 4)
        assert aw_klyachko(parse_perm("31524")) == 5

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            aw_klyachko(parse_perm("1234"), 4)
        with pytest.raises(ValueError):
            aw_klyachko(parse_perm("4321"), 4)
