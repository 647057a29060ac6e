"""Klyachko's squarefree algebra on generators u_1, ..., u_{n-1}.

The defining relations 2 u_i^2 = u_i u_{i-1} + u_i u_{i+1} (with the boundary
terms dropped at i = 1 and i = n-1) make the squarefree monomials u_I,
I subset of [n-1], a basis.  Rewriting a power product by the relations does
not terminate on its own: moving the repeated factor back and forth revisits
monomials with shrinking coefficients (e.g. u_1^2 u_2 -> u_1 u_2^2 / 2 ->
u_1^2 u_2 / 4 in rank 4).  The reduction is therefore computed as the exact
solution of the finite linear system the relations impose on the reachable
power products, which is the honest fixed point of any rewriting order.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Sequence

from ._linalg import solve_sparse_system
from .perm import Permutation, letter_content, reduced_words

Monomial = tuple[int, ...]  # exponents of u_1 .. u_{n-1}


class KElement:
    """Element of the rank-n algebra in the squarefree basis.

    Coefficients are kept as a map from subsets of [n-1] (encoded as bit
    masks, bit i-1 for generator i) to rationals; zero coefficients are
    never stored.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: dict[int, Fraction] | None = None):
        self.n = n
        self.coeffs = {mask: c for mask, c in (coeffs or {}).items() if c}

    @staticmethod
    def one(n: int) -> "KElement":
        return KElement(n, {0: Fraction(1)})

    def __add__(self, other: "KElement") -> "KElement":
        if self.n != other.n:
            raise ValueError("mixing algebras of different rank")
        coeffs = dict(self.coeffs)
        for mask, c in other.coeffs.items():
            coeffs[mask] = coeffs.get(mask, Fraction(0)) + c
        return KElement(self.n, coeffs)

    def __mul__(self, scalar) -> "KElement":
        scalar = Fraction(scalar)
        return KElement(self.n, {m: c * scalar for m, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, KElement)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for mask in sorted(self.coeffs):
            gens = "".join(f"u{i + 1}" for i in range(self.n - 1) if mask >> i & 1)
            parts.append(f"{self.coeffs[mask]}*{gens or '1'}")
        return " + ".join(parts)

    def coefficient(self, subset: Iterable[int]) -> Fraction:
        mask = 0
        for i in subset:
            mask |= 1 << (i - 1)
        return self.coeffs.get(mask, Fraction(0))


def _monomial_is_squarefree(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def _mask_of(m: Monomial) -> int:
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask


def _successors(m: Monomial, i: int) -> list[Monomial]:
    """Monomials on the right side of the relation fired at site i (0-based);
    the boundary drops the out-of-range term."""
    result = []
    if i - 1 >= 0:
        left = list(m)
        left[i] -= 1
        left[i - 1] += 1
        result.append(tuple(left))
    if i + 1 < len(m):
        right = list(m)
        right[i] -= 1
        right[i + 1] += 1
        result.append(tuple(right))
    return result


def _default_site(m: Monomial) -> int:
    return next(i for i, e in enumerate(m) if e >= 2)


def reduce_power_product(
    n: int,
    m: Sequence[int],
    site_chooser: Callable[[Monomial], int] | None = None,
    _cache: dict = {},
) -> KElement:
    """Expansion of u_1^{m_1} ... u_{n-1}^{m_{n-1}} in the squarefree basis.

    Builds the reachable set of power products under the relations and solves
    the resulting linear system exactly.  A custom ``site_chooser`` (which
    repeated generator to rewrite at each monomial) changes the equations but
    must not change the result; the default picks the smallest repeated index
    and is cached.
    """
    m = tuple(m)
    if len(m) != n - 1:
        raise ValueError(f"expected {n - 1} exponents, got {m}")
    caching = site_chooser is None
    if caching and (n, m) in _cache:
        return _cache[(n, m)]
    chooser = site_chooser or _default_site

    if _monomial_is_squarefree(m):
        return KElement(n, {_mask_of(m): Fraction(1)})

    reachable: list[Monomial] = []
    seen = {m}
    stack = [m]
    fired: dict[Monomial, list[Monomial]] = {}
    while stack:
        state = stack.pop()
        if _monomial_is_squarefree(state):
            continue
        reachable.append(state)
        succ = _successors(state, chooser(state))
        fired[state] = succ
        for nxt in succ:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)

    index = {state: k for k, state in enumerate(reachable)}
    rows: list[dict[int, Fraction]] = []
    rhs: list[dict[int, Fraction]] = []
    half = Fraction(1, 2)
    for state in reachable:
        row = {index[state]: Fraction(1)}
        vec: dict[int, Fraction] = {}
        for nxt in fired[state]:
            if _monomial_is_squarefree(nxt):
                mask = _mask_of(nxt)
                vec[mask] = vec.get(mask, Fraction(0)) + half
            else:
                j = index[nxt]
                row[j] = row.get(j, Fraction(0)) - half
                if not row[j]:
                    del row[j]
        rows.append(row)
        rhs.append(vec)

    solution = solve_sparse_system(rows, rhs, len(reachable))
    if caching:
        for state, k in index.items():
            _cache[(n, state)] = KElement(n, solution[k])
        return _cache[(n, m)]
    return KElement(n, solution[index[m]])


def multiply_by_generator(e: KElement, i: int) -> KElement:
    """The product u_i * e, rewritten back into the squarefree basis."""
    n = e.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} outside [1, {n - 1}]")
    bit = 1 << (i - 1)
    result = KElement(n)
    for mask, coeff in e.coeffs.items():
        if not mask & bit:
            result = result + KElement(n, {mask | bit: coeff})
        else:
            m = tuple(
                (1 if mask >> k & 1 else 0) + (1 if k == i - 1 else 0)
                for k in range(n - 1)
            )
            result = result + coeff * reduce_power_product(n, m)
    return result


def reduce_word_monomial(
    c: Sequence[int], n: int, _cache: dict = {}
) -> KElement:
    """u_1^{c_1} ... u_{n-1}^{c_{n-1}} in the squarefree basis, by iterated
    multiplication by generators."""
    c = tuple(c)
    if len(c) > n:
        raise ValueError(f"{c} has more than {n} parts")
    if len(c) == n and c[-1] != 0:
        raise ValueError(f"no generator u_{n} in rank {n}")
    key = (n, c)
    if key not in _cache:
        element = KElement.one(n)
        for i, ci in enumerate(c[: n - 1], start=1):
            for _ in range(ci):
                element = multiply_by_generator(element, i)
        _cache[key] = element
    return _cache[key]


def integral(e: KElement) -> Fraction:
    """Coefficient of the top squarefree monomial u_1 u_2 ... u_{n-1}."""
    return e.coeffs.get((1 << (e.n - 1)) - 1, Fraction(0))


def aw_klyachko(w: Permutation, n: int | None = None) -> int:
    """a_w as the integral of sum over reduced words of u_{i_1} ... u_{i_{n-1}}.

    The ambient size defaults to length(w) + 1, the unique n with w in S'_n.
    """
    if n is None:
        n = w.length() + 1
    if w.size > n or w.length() != n - 1:
        raise ValueError(f"{w} must have length {n - 1} in S_{n}")
    total = Fraction(0)
    counts: dict[tuple[int, ...], int] = {}
    for word in reduced_words(w):
        content = letter_content(word, n)
        counts[content] = counts.get(content, 0) + 1
    for content, multiplicity in counts.items():
        total += multiplicity * integral(reduce_word_monomial(content, n))
    if total.denominator != 1 or total <= 0:
        raise ArithmeticError(f"a_w for {w} came out as {total}")
    return int(total)
