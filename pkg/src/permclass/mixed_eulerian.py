"""Mixed Eulerian numbers A_c, exactly, by two independent routes.

The primary route expands y^c (with y_i = x_1 + ... + x_i) into monomials and
divides-symmetrizes each one.  The verification route solves the coin-moving
relation system 2 A_c = A_{left} + A_{right} over the cyclic orbit of c,
anchored by A_{(1,...,1,0)} = (n-1)! and A_c = 0 whenever the last part is
positive.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from ._linalg import solve_sparse_system
from .perm import all_perms
from .poly import ds_monomial

Composition = tuple[int, ...]


def compositions(total: int, parts: int) -> Iterator[Composition]:
    """All weak compositions of ``total`` into ``parts`` nonnegative parts."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _validate(c: Sequence[int]) -> Composition:
    c = tuple(c)
    n = len(c)
    if any(x < 0 for x in c):
        raise ValueError(f"composition has negative parts: {c}")
    if sum(c) != n - 1:
        raise ValueError(f"composition {c} must have {n} parts summing to {n - 1}")
    return c


def _expand_y_power(c: Composition) -> dict[Composition, int]:
    """Monomial expansion of prod_i (x_1 + ... + x_i)^{c_i}, coefficients in Z."""
    n = len(c)
    terms: dict[Composition, int] = {(0,) * n: 1}
    for i, ci in enumerate(c, start=1):
        for _ in range(ci):
            new: dict[Composition, int] = {}
            for expo, coeff in terms.items():
                for var in range(i):
                    key = expo[:var] + (expo[var] + 1,) + expo[var + 1 :]
                    new[key] = new.get(key, 0) + coeff
            terms = new
    return terms


@lru_cache(maxsize=None)
def mixed_eulerian(c: Composition) -> int:
    """A_c = divided symmetrization of y^c; zero when the last part is positive.

    >>> mixed_eulerian((2, 1, 0, 0))
    2
    >>> mixed_eulerian((0, 3, 0, 0))
    4
    """
    c = _validate(c)
    n = len(c)
    if c[-1] > 0:
        return 0
    total = 0
    for expo, coeff in _expand_y_power(c).items():
        total += coeff * ds_monomial(expo, n)
    return total


def _coin_moves(c: Composition) -> list[tuple[Composition, Composition]]:
    """For each site i <= n-1 holding >= 2 coins, the pair of configurations
    after moving one coin to the cyclic left / right neighbour."""
    n = len(c)
    moves = []
    for i in range(n - 1):
        if c[i] >= 2:
            left = list(c)
            left[i] -= 1
            left[(i - 1) % n] += 1
            right = list(c)
            right[i] -= 1
            right[(i + 1) % n] += 1
            moves.append((tuple(left), tuple(right)))
    return moves


def _is_terminal(c: Composition) -> bool:
    return all(x <= 1 for x in c[:-1])


def _solve_petrov(n: int, start: Composition) -> dict[Composition, Fraction]:
    """Solve the relation system on the orbit of ``start`` by sparse
    Gaussian elimination over the rationals."""
    known: dict[Composition, Fraction] = {}
    unknown: list[Composition] = []
    stack = [start]
    seen = {start}
    equations: dict[Composition, tuple[Composition, Composition]] = {}
    while stack:
        c = stack.pop()
        if c[-1] > 0:
            known[c] = Fraction(0)
            continue
        if _is_terminal(c):
            known[c] = Fraction(factorial(n - 1))
            continue
        unknown.append(c)
        left, right = _coin_moves(c)[0]
        equations[c] = (left, right)
        for succ in (left, right):
            if succ not in seen:
                seen.add(succ)
                stack.append(succ)

    index = {c: k for k, c in enumerate(unknown)}
    # row k: 2 x_k - sum coeff x_j = rhs
    rows: list[dict[int, Fraction]] = []
    rhs: list[dict] = []
    for c in unknown:
        row = {index[c]: Fraction(2)}
        constant = Fraction(0)
        for succ in equations[c]:
            if succ in index:
                j = index[succ]
                row[j] = row.get(j, Fraction(0)) - 1
                if not row[j]:
                    del row[j]
            else:
                constant += known[succ]
        rows.append(row)
        rhs.append({0: constant} if constant else {})

    solution = solve_sparse_system(rows, rhs, len(unknown))
    values = dict(known)
    for c, k in index.items():
        values[c] = solution[k].get(0, Fraction(0))
    return values


_petrov_cache: dict[Composition, Fraction] = {}


def mixed_eulerian_petrov(c: Sequence[int]) -> int:
    """A_c via the coin-moving relations, solved exactly over the orbit of c.

    Independent of :func:`mixed_eulerian`; the two must agree everywhere.
    """
    c = _validate(c)
    if c not in _petrov_cache:
        _petrov_cache.update(_solve_petrov(len(c), c))
    value = _petrov_cache[c]
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral mixed Eulerian number at {c}")
    return int(value)


def cyclic_class_sum(c: Sequence[int]) -> Fraction:
    """sum of A_{c'}/(n-1)! over the cyclic class of c; always equals 1."""
    c = _validate(c)
    n = len(c)
    rotations = {c[k:] + c[:k] for k in range(n)}
    return sum(
        (Fraction(mixed_eulerian(r), factorial(n - 1)) for r in rotations),
        Fraction(0),
    )


def connected_gf(a: Sequence[int]) -> list[int]:
    """Coefficients of the polynomial sum_m A_{0^m a 0^{n-p-m}} t^m for a
    strong composition a of n - 1 (so n = sum(a) + 1, p = len(a))."""
    a = tuple(a)
    if not a or any(x <= 0 for x in a):
        raise ValueError(f"not a strong composition: {a}")
    n = sum(a) + 1
    p = len(a)
    return [
        mixed_eulerian((0,) * m + a + (0,) * (n - p - m))
        for m in range(n - p)
    ]


def connected_gf_series(a: Sequence[int]) -> list[int]:
    """The same coefficients read off the closed form: multiply the series
    sum_j (1+j)^{a_1} ... (p+j)^{a_p} t^j by (1-t)^n and keep what survives.

    Verification companion to :func:`connected_gf`.
    """
    a = tuple(a)
    if not a or any(x <= 0 for x in a):
        raise ValueError(f"not a strong composition: {a}")
    n = sum(a) + 1
    p = len(a)
    series = []
    for j in range(n + 1):
        value = 1
        for i, ai in enumerate(a, start=1):
            value *= (i + j) ** ai
        series.append(value)
    from math import comb

    numerator = [
        sum((-1) ** k * comb(n, k) * series[m - k] for k in range(m + 1))
        for m in range(n + 1)
    ]
    if any(numerator[m] for m in range(n - p, n + 1)):
        raise ArithmeticError(f"series numerator for {a} does not terminate")
    return numerator[: n - p]


def eulerian_number(n: int, k: int) -> int:
    """Number of permutations in S_n with exactly k descents, by direct tally."""
    return sum(1 for w in all_perms(n) if len(w.descents()) == k)


def table_rows(n: int) -> Iterator[tuple[Composition, int]]:
    """All (c, A_c) with c_n = 0, ordered lexicographically; CLI table dump."""
    for c in sorted(compositions(n - 1, n - 1)):
        yield c + (0,), mixed_eulerian(c + (0,))
