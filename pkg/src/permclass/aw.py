"""The coefficients a_w of the permutahedral class in the Schubert basis.

For w of length n - 1 in S_n, a_w is computed by any of several exact
routes that must all agree:

- ``ds``: divided symmetrization of the Schubert polynomial of w,
- ``mixed``: sum of normalized mixed Eulerian numbers over reduced words,
- ``klyachko``: top coefficient in the squarefree algebra,
- ``special``: pipe-dream count for Lukasiewicz w (or its conjugate by the
  longest word), descent-class count for Coxeter elements, and the tableau
  descent count for vexillary w.

``auto`` tries the special cases cheapest-first and falls back to ``mixed``
then ``ds``.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from . import klyachko, mixed_eulerian, pipedreams, tableaux
from .perm import (
    Permutation,
    beta,
    conjugate_by_longest,
    cyclic_shifts,
    is_213_avoiding,
    is_dominant,
    is_indecomposable,
    is_lukasiewicz,
    is_vexillary,
    letter_content,
    perm_from_word,
    reduced_word_count,
    reduced_words,
    sprime,
)
from .poly import ds_scalar, nu_shifted, schubert

METHODS = ("ds", "mixed", "klyachko", "special", "auto")


class NotApplicableError(ValueError):
    """Raised when method='special' finds no special-case interpretation."""


@dataclass(frozen=True)
class AwResult:
    value: int
    method: str
    seconds: float


def _resolve_n(w: Permutation, n: int | None) -> int:
    if n is None:
        n = w.length() + 1
    if w.size > n or w.length() != n - 1:
        raise ValueError(f"{w} must have length {n - 1} in S_{n}")
    return n


# -- special classes ----------------------------------------------------------


def is_coxeter(w: Permutation, n: int) -> bool:
    """Product of all of s_1, ..., s_{n-1} exactly once: full support at length n-1."""
    return w.length() == n - 1 and w.support() == frozenset(range(1, n))


def coxeter_descent_set(w: Permutation, n: int) -> frozenset[int]:
    """I_w: the letters i that precede i+1 in every (hence any) reduced word."""
    if not is_coxeter(w, n):
        raise ValueError(f"{w} is not a Coxeter element of S_{n}")
    word = reduced_words(w)[0]
    position = {letter: k for k, letter in enumerate(word)}
    return frozenset(i for i in range(1, n - 1) if position[i] < position[i + 1])


def coxeter_element(subset: frozenset[int] | set[int], n: int) -> Permutation:
    """The unique Coxeter element of S_n with I_w equal to the given subset of [n-2]."""
    word: list[int] = [1] if n >= 2 else []
    for i in range(2, n):
        if (i - 1) in subset:
            word.append(i)
        else:
            word.insert(0, i)
    return perm_from_word(word)


def coxeter_aw(w: Permutation, n: int | None = None) -> int:
    """a_w = beta_{n-1}(I_w) for a Coxeter element."""
    n = _resolve_n(w, n)
    return beta(n - 1, coxeter_descent_set(w, n))


def is_grassmannian(w: Permutation) -> bool:
    return len(w.descents()) == 1


def grassmannian_aw(w: Permutation, n: int | None = None) -> int:
    """a_w for a Grassmannian permutation with descent m and shape lambda: the
    number of standard tableaux of that shape with m - 1 descents."""
    n = _resolve_n(w, n)
    if not is_grassmannian(w):
        raise ValueError(f"{w} is not Grassmannian")
    (m,) = w.descents()
    shape = w.shape()
    return tableaux.syt_count_by_descents(shape, m - 1)


def alternating_count(k: int) -> int:
    """Euler number E_k: up-down permutations w(1) < w(2) > w(3) < ... in S_k."""
    from .perm import all_perms

    if k == 0:
        return 1
    count = 0
    for w in all_perms(k):
        word = w.one_line(k)
        if all(
            (word[i - 1] < word[i]) == (i % 2 == 1) for i in range(1, k)
        ):
            count += 1
    return count


# -- the main evaluation -------------------------------------------------------


def _aw_special(w: Permutation, n: int) -> tuple[int, str]:
    if is_coxeter(w, n):
        return beta(n - 1, coxeter_descent_set(w, n)), "special:coxeter"
    if is_dominant(w) or is_213_avoiding(w, n):
        return 1, "special:dominant"
    if is_lukasiewicz(w, n):
        return len(pipedreams.enumerate_pipe_dreams(w, n)), "special:lukasiewicz"
    conj = conjugate_by_longest(w, n)
    if is_lukasiewicz(conj, n):
        return len(pipedreams.enumerate_pipe_dreams(conj, n)), "special:lukasiewicz-conjugate"
    if is_vexillary(w):
        return tableaux.aw_vexillary(w, n), "special:vexillary"
    raise NotApplicableError(f"no special-case interpretation applies to {w}")


def _aw_mixed(w: Permutation, n: int) -> int:
    total = Fraction(0)
    for word in reduced_words(w):
        total += Fraction(
            mixed_eulerian.mixed_eulerian(letter_content(word, n)), factorial(n - 1)
        )
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral a_w for {w}")
    return int(total)


def _aw_ds(w: Permutation, n: int) -> int:
    value = ds_scalar(schubert(w, n), n)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral a_w for {w}")
    return int(value)


@lru_cache(maxsize=None)
def _aw_cached(w: Permutation, n: int, method: str) -> tuple[int, str]:
    if method == "ds":
        return _aw_ds(w, n), "ds"
    if method == "mixed":
        return _aw_mixed(w, n), "mixed"
    if method == "klyachko":
        return klyachko.aw_klyachko(w, n), "klyachko"
    if method == "special":
        return _aw_special(w, n)
    if method == "auto":
        try:
            return _aw_special(w, n)
        except NotApplicableError:
            return _aw_mixed(w, n), "mixed"
    raise ValueError(f"unknown method {method!r}, expected one of {METHODS}")


def aw(w: Permutation, n: int | None = None, method: str = "auto") -> int:
    """The coefficient of the Schubert class indexed by w_o w in the
    permutahedral class, for w of length n - 1."""
    n = _resolve_n(w, n)
    return _aw_cached(w, n, method)[0]


def aw_detailed(w: Permutation, n: int | None = None, method: str = "auto") -> AwResult:
    n = _resolve_n(w, n)
    start = time.perf_counter()
    value, used = _aw_cached(w, n, method)
    return AwResult(value, used, time.perf_counter() - start)


def aw_all_methods(w: Permutation, n: int | None = None) -> dict[str, AwResult]:
    """Every method's value (special omitted where not applicable)."""
    n = _resolve_n(w, n)
    results = {}
    for method in ("ds", "mixed", "klyachko", "special"):
        try:
            results[method] = aw_detailed(w, n, method)
        except NotApplicableError:
            pass
    return results


# -- aggregate computations ------------------------------------------------------


def tau_expansion(n: int, threads: int = 1) -> dict[Permutation, int]:
    """All coefficients {w: a_w} for w in S'_n; the class is the sum of
    a_w times the Schubert class of w_o w."""
    if n < 2:
        raise ValueError("the expansion starts at n = 2")
    perms = sprime(n)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(lambda w: aw(w, n), perms))
    else:
        values = [aw(w, n) for w in perms]
    return dict(zip(perms, values))


def check_symmetries(w: Permutation, n: int | None = None) -> bool:
    """a_w = a_{w^{-1}} = a_{w_o w w_o}."""
    n = _resolve_n(w, n)
    value = aw(w, n)
    return value == aw(w.inverse(), n) == aw(conjugate_by_longest(w, n), n)


def cyclic_sum(w: Permutation, n: int | None = None) -> int:
    """Sum of a over the cyclic shifts of w; equals the number of reduced words."""
    n = _resolve_n(w, n)
    return sum(aw(v, n) for v in cyclic_shifts(w, n))


def h_vector(u: Permutation) -> list[int]:
    """Coefficients (ascending) of the numerator of sum_j nu_u(j) t^j over
    (1-t)^n, for indecomposable u of length n - 1; equals the list of
    a_{1^m x u x 1^(n-p-1-m)} for m = 0 .. n-p-1.

    Computed by the inverse binomial transform of the principal
    specializations nu_u(j), which stays exact and cheap even at length 10.
    """
    p_plus_1 = max(u.size, 1)
    if not is_indecomposable(u, p_plus_1):
        raise ValueError(f"{u} is not indecomposable")
    n = u.length() + 1
    p = p_plus_1 - 1
    nus = [nu_shifted(u, j) for j in range(n + 1)]
    coeffs = [
        sum((-1) ** k * comb(n, k) * nus[m - k] for k in range(m + 1))
        for m in range(n + 1)
    ]
    expected = n - p
    if any(coeffs[m] for m in range(expected, n + 1)):
        raise ArithmeticError(f"h-vector of {u} does not terminate at degree {expected - 1}")
    return coeffs[:expected]


def max_report(n: int) -> tuple[int, list[Permutation], bool]:
    """Largest a_w over S'_n, its maximizers, and whether these are exactly
    the two alternating Coxeter elements (an empirical observation, reported
    but never asserted)."""
    expansion = tau_expansion(n)
    best = max(expansion.values())
    argmax = sorted(w for w, value in expansion.items() if value == best)
    odd = coxeter_element({i for i in range(1, n - 1) if i % 2 == 1}, n)
    even = coxeter_element({i for i in range(1, n - 1) if i % 2 == 0}, n)
    alternating = sorted(set([odd, even]))
    return best, argmax, argmax == alternating
