"""Exact sparse multivariate polynomials, divided differences, Schubert
polynomials and divided symmetrization.

Coefficients are ``fractions.Fraction`` throughout; exponent vectors are
dense tuples of a fixed ambient length.  Printing iterates terms in graded
lexicographic order so output is reproducible.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _itertools_permutations
from typing import Iterable, Mapping, Sequence

from .perm import Permutation, beta, longest_element, reduced_words, shift


class SparsePoly:
    """Polynomial in ``nvars`` variables as a map exponent-tuple -> Fraction."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Fraction | int] | None = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], Fraction] = {}
        for expo, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                if len(expo) != nvars:
                    raise ValueError(f"exponent {expo} has length != {nvars}")
                clean[tuple(expo)] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "SparsePoly":
        return SparsePoly(nvars)

    @staticmethod
    def constant(nvars: int, value: Fraction | int) -> "SparsePoly":
        return SparsePoly(nvars, {(0,) * nvars: Fraction(value)})

    @staticmethod
    def variable(nvars: int, i: int) -> "SparsePoly":
        """The variable x_i (1-indexed)."""
        expo = [0] * nvars
        expo[i - 1] = 1
        return SparsePoly(nvars, {tuple(expo): Fraction(1)})

    @staticmethod
    def monomial(expo: Sequence[int], coeff: Fraction | int = 1) -> "SparsePoly":
        return SparsePoly(len(expo), {tuple(expo): Fraction(coeff)})

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "SparsePoly"):
        if self.nvars != other.nvars:
            raise ValueError("ambient variable counts differ")

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._check(other)
        terms = dict(self.terms)
        for expo, coeff in other.terms.items():
            terms[expo] = terms.get(expo, Fraction(0)) + coeff
        return SparsePoly(self.nvars, terms)

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (other * Fraction(-1))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SparsePoly(
                self.nvars, {e: c * other for e, c in self.terms.items()}
            )
        self._check(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                terms[expo] = terms.get(expo, Fraction(0)) + c1 * c2
        return SparsePoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePoly":
        result = SparsePoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparsePoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries -----------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def evaluate_ones(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    def apply_perm(self, w: Permutation) -> "SparsePoly":
        """The action (w . f)(x_1, ..., x_n) = f(x_w(1), ..., x_w(n))."""
        terms: dict[tuple[int, ...], Fraction] = {}
        for expo, coeff in self.terms.items():
            new = [0] * self.nvars
            for i in range(self.nvars):
                new[w(i + 1) - 1] = expo[i]
            key = tuple(new)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return SparsePoly(self.nvars, terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Graded lexicographic order, highest degree first."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for expo, coeff in self.sorted_terms():
            factors = [
                f"x{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(expo)
                if e > 0
            ]
            body = "*".join(factors)
            if not factors:
                chunks.append(str(coeff))
            elif coeff == 1:
                chunks.append(body)
            elif coeff == -1:
                chunks.append(f"-{body}")
            else:
                chunks.append(f"{coeff}*{body}")
        text = " + ".join(chunks)
        return text.replace("+ -", "- ")

    __repr__ = __str__

    def to_json(self) -> list[dict]:
        return [
            {
                "exponents": list(expo),
                "numerator": coeff.numerator,
                "denominator": coeff.denominator,
            }
            for expo, coeff in self.sorted_terms()
        ]

    @staticmethod
    def from_json(nvars: int, data: Iterable[dict]) -> "SparsePoly":
        terms = {
            tuple(item["exponents"]): Fraction(item["numerator"], item["denominator"])
            for item in data
        }
        return SparsePoly(nvars, terms)


def divided_difference(i: int, f: SparsePoly) -> SparsePoly:
    """(f - s_i.f) / (x_i - x_{i+1}), expanded term by term.

    For a single monomial with exponents p = e_i, q = e_{i+1} the quotient is
    the geometric sum sign * sum_t x_i^a x_{i+1}^b over a + b = p + q - 1 with
    a, b >= min(p, q); exact by construction.
    """
    if not 1 <= i < f.nvars:
        raise ValueError(f"divided difference index {i} outside [1, {f.nvars - 1}]")
    terms: dict[tuple[int, ...], Fraction] = {}
    for expo, coeff in f.terms.items():
        p, q = expo[i - 1], expo[i]
        if p == q:
            continue
        sign = 1 if p > q else -1
        lo, hi = min(p, q), max(p, q)
        for a in range(lo, hi):
            new = list(expo)
            new[i - 1], new[i] = a, p + q - 1 - a
            key = tuple(new)
            value = terms.get(key, Fraction(0)) + sign * coeff
            if value:
                terms[key] = value
            else:
                terms.pop(key, None)
    return SparsePoly(f.nvars, terms)


def staircase_monomial(n: int) -> SparsePoly:
    """x_1^{n-1} x_2^{n-2} ... x_{n-1}, the Schubert polynomial of w_o."""
    return SparsePoly.monomial(tuple(range(n - 1, -1, -1)))


@lru_cache(maxsize=None)
def schubert(w: Permutation, n: int) -> SparsePoly:
    """Schubert polynomial of w in n variables, by divided differences
    descending from the staircase monomial of w_o."""
    if w.size > n:
        raise ValueError(f"{w} does not lie in S_{n}")
    if w == longest_element(n):
        return staircase_monomial(n)
    word = w.one_line(n)
    ascent = next(i for i in range(1, n) if word[i - 1] < word[i])
    return divided_difference(ascent, schubert(w.right_mul_s(ascent), n))


def vandermonde(n: int) -> SparsePoly:
    result = SparsePoly.constant(n, 1)
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            result = result * (SparsePoly.variable(n, i) - SparsePoly.variable(n, j))
    return result


def exact_divide(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    """Exact polynomial division f / g; raises if the division leaves a remainder.

    A nonzero remainder in any internal use signals a bug, since every
    division performed here is exact by construction.
    """
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    f._check(g)

    def grlex_key(expo):
        return (sum(expo), expo)

    g_lead = max(g.terms, key=grlex_key)
    g_lead_coeff = g.terms[g_lead]
    quotient: dict[tuple[int, ...], Fraction] = {}
    remainder = dict(f.terms)
    while remainder:
        lead = max(remainder, key=grlex_key)
        diff = tuple(a - b for a, b in zip(lead, g_lead))
        if any(d < 0 for d in diff):
            raise ArithmeticError("inexact polynomial division")
        factor = remainder[lead] / g_lead_coeff
        quotient[diff] = quotient.get(diff, Fraction(0)) + factor
        for expo, coeff in g.terms.items():
            key = tuple(a + b for a, b in zip(diff, expo))
            value = remainder.get(key, Fraction(0)) - factor * coeff
            if value:
                remainder[key] = value
            else:
                remainder.pop(key, None)
    return SparsePoly(f.nvars, quotient)


def divided_symmetrization(f: SparsePoly, n: int) -> SparsePoly:
    """sum_{w in S_n} w . (f / prod_i (x_i - x_{i+1})), as a polynomial.

    Computed exactly over the common denominator prod_{i<j} (x_i - x_j):
    each summand contributes (w.f) times the complementary product of the
    Vandermonde factors not consumed by w's consecutive pairs, and the final
    division by the Vandermonde determinant is exact.
    """
    if f.nvars > n:
        raise ValueError("polynomial uses more variables than the symmetrization rank")
    if f.nvars < n:
        lifted = {e + (0,) * (n - f.nvars): c for e, c in f.terms.items()}
        f = SparsePoly(n, lifted)
    all_pairs = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    total = SparsePoly.zero(n)
    for word in _itertools_permutations(range(1, n + 1)):
        w = Permutation(word)
        used = set()
        sign = 1
        for k in range(n - 1):
            a, b = word[k], word[k + 1]
            if a > b:
                sign = -sign
                a, b = b, a
            used.add((a, b))
        cofactor = SparsePoly.constant(n, sign)
        for i, j in all_pairs:
            if (i, j) not in used:
                cofactor = cofactor * (
                    SparsePoly.variable(n, i) - SparsePoly.variable(n, j)
                )
        total = total + f.apply_perm(w) * cofactor
    if not total:
        return SparsePoly.zero(n)
    return exact_divide(total, vandermonde(n))


def ds_monomial(c: Sequence[int], n: int) -> int:
    """Divided symmetrization of the monomial x^c of degree n - 1.

    Equals (-1)^{|S_c|} beta_n(S_c) where S_c collects the positions k whose
    partial sum c_1 + ... + c_k falls below k.
    """
    c = tuple(c)
    if len(c) < n:
        c = c + (0,) * (n - len(c))
    if len(c) != n:
        raise ValueError(f"monomial exponents {c} use more than {n} variables")
    if sum(c) != n - 1:
        raise ValueError(f"degree {sum(c)} != n - 1 = {n - 1}")
    partial = 0
    S = []
    for k in range(1, n):
        partial += c[k - 1]
        if partial < k:
            S.append(k)
    return (-1) ** len(S) * beta(n, frozenset(S))


def ds_scalar(f: SparsePoly, n: int) -> Fraction:
    """Divided symmetrization of a homogeneous degree-(n-1) polynomial,
    evaluated monomial by monomial."""
    total = Fraction(0)
    for expo, coeff in f.terms.items():
        total += coeff * ds_monomial(expo, n)
    return total


def principal_specialization(w: Permutation) -> int:
    """nu_w = Schubert polynomial of w evaluated at all ones.

    Computed via the reduced-word identity nu_w = (sum over reduced words of
    the product of the letters) / length!, which stays cheap for the large
    shifted permutations where the polynomial itself is out of reach.
    """
    ell = w.length()
    total = 0
    for word in reduced_words(w):
        product = 1
        for letter in word:
            product *= letter
        total += product
    value = Fraction(total, math.factorial(ell))
    if value.denominator != 1:
        raise ArithmeticError(f"reduced-word sum for {w} not divisible by {ell}!")
    return int(value)


def macdonald_shifted(u: Permutation, m: int) -> int:
    """nu of 1^m x u via the shifted product over reduced words of u itself."""
    ell = u.length()
    total = 0
    for word in reduced_words(u):
        product = 1
        for letter in word:
            product *= letter + m
        total += product
    value = Fraction(total, math.factorial(ell))
    if value.denominator != 1:
        raise ArithmeticError(f"shifted reduced-word sum for {u} not integral")
    return int(value)


def nu_shifted(u: Permutation, m: int) -> int:
    """nu_u(m) = nu of the permutation 1^m x u."""
    return principal_specialization(shift(u, m))
