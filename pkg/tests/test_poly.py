"""Polynomial layer: divided differences, Schubert polynomials, divided
symmetrization, principal specializations."""

import random
from fractions import Fraction

import pytest

from permclass.perm import (
    Permutation,
    all_perms,
    identity,
    longest_element,
    parse_perm,
    reduced_words,
    sprime,
)
from permclass.poly import (
    SparsePoly,
    divided_difference,
    divided_symmetrization,
    ds_monomial,
    ds_scalar,
    exact_divide,
    macdonald_shifted,
    nu_shifted,
    principal_specialization,
    schubert,
    staircase_monomial,
)


def x(n, i):
    return SparsePoly.variable(n, i)


def random_poly(rng, nvars=4, terms=5, max_exp=3):
    data = {}
    for _ in range(terms):
        expo = tuple(rng.randrange(max_exp + 1) for _ in range(nvars))
        data[expo] = Fraction(rng.randrange(-6, 7), rng.randrange(1, 4))
    return SparsePoly(nvars, data)


class TestArithmetic:
    def test_mul_and_pow(self):
        n = 3
        f = (x(n, 1) + x(n, 2)) ** 2
        expect = (
            SparsePoly.monomial((2, 0, 0))
            + 2 * SparsePoly.monomial((1, 1, 0))
            + SparsePoly.monomial((0, 2, 0))
        )
        assert f == expect

    def test_apply_perm(self):
        n = 3
        f = x(n, 1) ** 2 * x(n, 2)
        g = f.apply_perm(parse_perm("231"))  # x_i -> x_{w(i)}
        assert g == x(n, 2) ** 2 * x(n, 3)

    def test_str_and_json_roundtrip(self):
        f = x(3, 1) ** 2 * x(3, 2) + x(3, 1) ** 2 * x(3, 3)
        assert str(f) == "x1^2*x2 + x1^2*x3"
        assert SparsePoly.from_json(3, f.to_json()) == f

    def test_exact_divide(self):
        n = 3
        f = (x(n, 1) - x(n, 2)) * (x(n, 1) + 2 * x(n, 3))
        assert exact_divide(f, x(n, 1) - x(n, 2)) == x(n, 1) + 2 * x(n, 3)
        with pytest.raises(ArithmeticError):
            exact_divide(x(n, 1) ** 2 + x(n, 2), x(n, 1) - x(n, 2))


class TestDividedDifference:
    def test_basic_examples(self):
        n = 3
        assert divided_difference(1, x(n, 1)) == SparsePoly.constant(n, 1)
        assert divided_difference(1, x(n, 1) ** 2 * x(n, 2)) == x(n, 1) * x(n, 2)

    def test_kills_symmetric(self):
        n = 3
        f = (x(n, 1) + x(n, 2)) ** 3 * x(n, 3)
        assert not divided_difference(1, f)

    def test_matches_definition_by_division(self):
        rng = random.Random(5)
        for _ in range(20):
            f = random_poly(rng)
            i = rng.randrange(1, 4)
            swap = list(range(1, 5))
            swap[i - 1], swap[i] = swap[i], swap[i - 1]
            si_f = f.apply_perm(Permutation(swap))
            numerator = f - si_f
            if numerator:
                direct = exact_divide(numerator, x(4, i) - x(4, i + 1))
            else:
                direct = SparsePoly.zero(4)
            assert divided_difference(i, f) == direct

    def test_nilpotent_braid_commute(self):
        rng = random.Random(7)
        for _ in range(15):
            f = random_poly(rng, nvars=5)
            for i in range(1, 5):
                assert not divided_difference(i, divided_difference(i, f))
            for i in range(1, 4):
                lhs = divided_difference(
                    i, divided_difference(i + 1, divided_difference(i, f))
                )
                rhs = divided_difference(
                    i + 1, divided_difference(i, divided_difference(i + 1, f))
                )
                assert lhs == rhs
            assert divided_difference(1, divided_difference(3, f)) == divided_difference(
                3, divided_difference(1, f)
            )


def bjs_schubert(w, n):
    """Independent oracle: the reduced-word/compatible-sequence expansion."""
    total = SparsePoly.zero(n)
    for word in reduced_words(w):
        ell = len(word)

        def extend(j, prev, expo):
            nonlocal total
            if j == ell:
                total = total + SparsePoly.monomial(tuple(expo))
                return
            low = prev + 1 if j > 0 and word[j - 1] < word[j] else max(prev, 1)
            for b in range(low, word[j] + 1):
                expo[b - 1] += 1
                extend(j + 1, b, expo)
                expo[b - 1] -= 1

        extend(0, 0, [0] * n)
    return total


class TestSchubert:
    def test_staircase(self):
        assert schubert(longest_element(3), 3) == SparsePoly.monomial((2, 1, 0))
        assert schubert(longest_element(3), 3) == staircase_monomial(3)

    def test_identity(self):
        assert schubert(identity(), 3) == SparsePoly.constant(3, 1)

    def test_3142(self):
        n = 4
        assert schubert(parse_perm("3142"), n) == x(n, 1) ** 2 * x(n, 2) + x(
            n, 1
        ) ** 2 * x(n, 3)

    def test_homogeneous_of_length_degree(self):
        for w in all_perms(4):
            f = schubert(w, 4)
            assert f.is_homogeneous()
            assert f.degree() == (w.length() if w.word else 0)

    def test_matches_bjs_expansion(self):
        for n in range(1, 5):
            for w in all_perms(n):
                assert schubert(w, n) == bjs_schubert(w, n), w


class TestDividedSymmetrization:
    def test_two_variable_scalars(self):
        assert divided_symmetrization(x(2, 1), 2) == SparsePoly.constant(2, 1)
        assert divided_symmetrization(x(2, 2), 2) == SparsePoly.constant(2, -1)

    def test_symmetric_factor_gives_zero(self):
        n = 4
        e1 = x(n, 1) + x(n, 2) + x(n, 3) + x(n, 4)
        for expo in [(2, 0, 0, 0), (1, 1, 0, 0), (0, 1, 1, 0)]:
            f = e1 * SparsePoly.monomial(expo)
            assert not divided_symmetrization(f, n)

    def test_ds_monomial_examples(self):
        assert ds_monomial((0, 2, 0), 3) == -2
        for n in range(2, 6):
            c = (0,) * (n - 1) + (n - 1,)
            assert ds_monomial(c, n) == (-1) ** (n - 1)

    def test_lukasiewicz_monomials_give_one(self):
        from permclass.perm import lukasiewicz_compositions

        for n in range(2, 6):
            for c in lukasiewicz_compositions(n):
                assert ds_monomial(c, n) == 1

    def test_ds_monomial_rejects_bad_degree(self):
        with pytest.raises(ValueError):
            ds_monomial((1, 0, 0), 3)

    def test_ds_monomial_matches_generic(self):
        from permclass.mixed_eulerian import compositions

        for n in range(2, 6):
            for c in compositions(n - 1, n):
                generic = divided_symmetrization(SparsePoly.monomial(c), n)
                assert generic == SparsePoly.constant(n, ds_monomial(c, n)), c

    def test_ds_scalar_matches_generic_on_schuberts(self):
        for n in range(2, 5):
            for w in sprime(n):
                f = schubert(w, n)
                generic = divided_symmetrization(f, n)
                assert generic == SparsePoly.constant(n, ds_scalar(f, n))


class TestPrincipalSpecialization:
    def test_values(self):
        assert principal_specialization(identity()) == 1
        assert principal_specialization(parse_perm("4321")) == 1
        assert principal_specialization(parse_perm("1432")) == 5

    def test_equals_schubert_at_ones(self):
        for n in range(1, 6):
            for w in all_perms(n):
                assert (
                    schubert(w, n).evaluate_ones()
                    == principal_specialization(w)
                )

    def test_nu_shifted_agreement(self):
        for text in ["4321", "321", "346215", "24153"]:
            u = parse_perm(text)
            for m in range(5):
                assert nu_shifted(u, m) == macdonald_shifted(u, m)

    def test_nu_shifted_generating_function(self):
        # sum nu_u(j) t^j = (1 + 7t + 7t^2 + t^3)/(1-t)^7 for u = 4321
        from math import comb

        u = parse_perm("4321")
        numer = [1, 7, 7, 1]
        for j in range(6):
            expected = sum(
                numer[m] * comb(j - m + 6, 6) for m in range(4) if j - m >= 0
            )
            assert nu_shifted(u, j) == expected
