"""Permutation combinatorics: codes, reduced words, patterns, block structure.

Permutations are written in one-line notation.  Two words that differ only
in trailing fixed points denote the same permutation (``Permutation((2, 1, 3))
== Permutation((2, 1))``), so a ``Permutation`` really lives in the union of
all finite symmetric groups.  Operations that depend on the ambient size
(pattern containment, Lukasiewicz tests, ``abar``) take an explicit ``n``.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Sequence


class Permutation:
    """A permutation of {1, ..., n}, normalized by stripping trailing fixed points.

    >>> Permutation((2, 1, 3)) == Permutation((2, 1))
    True
    >>> Permutation((3, 1, 4, 2)).code()
    (2, 0, 1, 0)
    """

    __slots__ = ("word",)

    def __init__(self, word: Iterable[int]):
        w = tuple(word)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
        while w and w[-1] == len(w):
            w = w[:-1]
        object.__setattr__(self, "word", w)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def size(self) -> int:
        """Smallest n such that this permutation lies in S_n."""
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1] if i <= len(self.word) else i

    def one_line(self, n: int | None = None) -> tuple[int, ...]:
        """One-line word padded with fixed points up to length n."""
        n = max(n or 0, self.size)
        return self.word + tuple(range(self.size + 1, n + 1))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __lt__(self, other: "Permutation") -> bool:
        n = max(self.size, other.size)
        return self.one_line(n) < other.one_line(n)

    def __repr__(self) -> str:
        return f"Permutation({self.word or (1,)})"

    def __str__(self) -> str:
        return format_perm(self)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (u * v)(i) = u(v(i)), so u * v means "apply v first"."""
        n = max(self.size, other.size)
        return Permutation(tuple(self(other(i)) for i in range(1, n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, v in enumerate(self.word, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def right_mul_s(self, i: int) -> "Permutation":
        """Multiply by the adjacent transposition s_i on the right (swap positions i, i+1)."""
        w = list(self.one_line(i + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(w)

    def code(self, n: int | None = None) -> tuple[int, ...]:
        """Lehmer code: c_i = #{j > i : w(j) < w(i)}, padded with zeros to length n."""
        w = self.one_line(n)
        return tuple(
            sum(1 for j in range(i + 1, len(w)) if w[j] < w[i]) for i in range(len(w))
        )

    def length(self) -> int:
        """Number of inversions."""
        return sum(self.code())

    def descents(self) -> frozenset[int]:
        """Positions i with w(i) > w(i+1)."""
        w = self.word
        return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])

    def shape(self) -> tuple[int, ...]:
        """Partition: the nonzero code entries sorted decreasingly."""
        return tuple(sorted((c for c in self.code() if c > 0), reverse=True))

    def support(self) -> frozenset[int]:
        """Letters occurring in any reduced word: {i : some j <= i has w(j) > i}."""
        w = self.word
        seen_max = 0
        supp = []
        for i in range(1, len(w)):
            seen_max = max(seen_max, w[i - 1])
            if seen_max > i:
                supp.append(i)
        return frozenset(supp)


def identity() -> Permutation:
    return Permutation(())


def longest_element(n: int) -> Permutation:
    """w_o in S_n: n, n-1, ..., 1."""
    return Permutation(range(n, 0, -1))


def conjugate_by_longest(w: Permutation, n: int) -> Permutation:
    """w_o w w_o inside S_n."""
    wo = longest_element(n)
    return wo * w * wo


def parse_perm(text: str) -> Permutation:
    """Parse one-line notation: comma-free digits up to S_9, comma-separated beyond.

    >>> parse_perm("3142").word
    (3, 1, 4, 2)
    >>> parse_perm("10,3,1,2,4,5,6,7,8,9").size
    10
    """
    text = text.strip()
    if "," in text:
        values = [int(part) for part in text.split(",")]
    else:
        if not text.isdigit():
            raise ValueError(f"cannot parse permutation: {text!r}")
        values = [int(ch) for ch in text]
    return Permutation(values)


def format_perm(w: Permutation, n: int | None = None) -> str:
    """One-line string; comma-free for n <= 9, comma-separated otherwise."""
    word = w.one_line(n) or (1,)
    if len(word) <= 9:
        return "".join(str(v) for v in word)
    return ",".join(str(v) for v in word)


def from_code(c: Sequence[int]) -> Permutation:
    """Inverse of the code bijection.

    Requires c_i <= n - i; builds the word by picking the (c_i+1)-th smallest
    unused value at each position.
    """
    n = len(c)
    for i, ci in enumerate(c):
        if ci < 0 or ci > n - i - 1:
            raise ValueError(f"invalid code {tuple(c)}: entry {ci} at position {i + 1}")
    available = list(range(1, n + 1))
    return Permutation(available.pop(ci) for ci in c)


def avoids(w: Permutation, pattern: Sequence[int], n: int | None = None) -> bool:
    """True iff no subsequence of w (as an element of S_n) is order-isomorphic
    to the pattern.

    The pattern is a raw one-line word and keeps its length as given: the
    patterns 213 and 21 are different, and the ambient size of w matters
    whenever the pattern fixes its last point (4321 avoids 213 in S_4 but
    not in S_5).
    """
    pattern = tuple(pattern)
    if sorted(pattern) != list(range(1, len(pattern) + 1)):
        raise ValueError(f"pattern is not a permutation word: {pattern}")
    word = w.one_line(n)
    k = len(pattern)
    if k > len(word):
        return True

    def extend(chosen: list[int], start: int) -> bool:
        if len(chosen) == k:
            return True
        r = len(chosen)
        for i in range(start, len(word) - (k - r) + 1):
            v = word[i]
            ok = all(
                (pattern[s] < pattern[r]) == (chosen[s] < v) for s in range(r)
            )
            if ok and extend(chosen + [v], i + 1):
                return True
        return False

    return not extend([], 0)


def is_vexillary(w: Permutation) -> bool:
    """2143-avoiding (ambient size irrelevant: the pattern moves its last point)."""
    return avoids(w, (2, 1, 4, 3))


def is_dominant(w: Permutation) -> bool:
    """132-avoiding, equivalently the code is a partition."""
    return avoids(w, (1, 3, 2))


def is_213_avoiding(w: Permutation, n: int) -> bool:
    """213-avoidance depends on the ambient size since the pattern fixes 3."""
    return avoids(w, (2, 1, 3), n)


@lru_cache(maxsize=None)
def reduced_words(w: Permutation) -> tuple[tuple[int, ...], ...]:
    """All reduced words of w, sorted lexicographically.

    Recursion on right descents: every reduced word of w is a reduced word
    of w s_i followed by the letter i, for some descent i.

    >>> reduced_words(Permutation((3, 2, 4, 1)))
    ((1, 2, 1, 3), (1, 2, 3, 1), (2, 1, 2, 3))
    """
    if not w.word:
        return ((),)
    words = []
    for i in sorted(w.descents()):
        for prefix in reduced_words(w.right_mul_s(i)):
            words.append(prefix + (i,))
    return tuple(sorted(words))


@lru_cache(maxsize=None)
def reduced_word_count(w: Permutation) -> int:
    """|Red(w)| by descent recursion, without materializing the words."""
    if not w.word:
        return 1
    return sum(reduced_word_count(w.right_mul_s(i)) for i in w.descents())


def perm_from_word(letters: Sequence[int]) -> Permutation:
    """The product s_{i_1} s_{i_2} ... s_{i_l}."""
    w = identity()
    for i in letters:
        w = w.right_mul_s(i)
    return w


def is_reduced_word(letters: Sequence[int]) -> bool:
    return perm_from_word(letters).length() == len(letters)


def letter_content(letters: Sequence[int], n: int) -> tuple[int, ...]:
    """Multiplicity vector of the letters, as a length-n weak composition."""
    counts = [0] * n
    for i in letters:
        if not 1 <= i <= n - 1:
            raise ValueError(f"letter {i} outside [1, {n - 1}]")
        counts[i - 1] += 1
    return tuple(counts)


def block_factorization(w: Permutation, n: int | None = None) -> list[Permutation]:
    """Unique factorization into indecomposable blocks w_1 x w_2 x ... x w_k.

    The ambient size matters: 53124768 in S_8 has a trailing fixed-point
    block that disappears when the permutation is viewed in S_7.

    >>> [b.one_line(max(b.size, 1)) for b in block_factorization(parse_perm("53124768"), 8)]
    [(5, 3, 1, 2, 4), (2, 1), (1,)]
    """
    word = w.one_line(n)
    blocks = []
    start = 0
    seen_max = 0
    for i, v in enumerate(word, start=1):
        seen_max = max(seen_max, v)
        if seen_max == i:
            blocks.append(Permutation(x - start for x in word[start:i]))
            start = i
            # Permutation() strips the block back to (), keep explicit size 1
    return blocks


def is_indecomposable(w: Permutation, n: int | None = None) -> bool:
    """No proper prefix of the one-line word maps onto an initial interval."""
    n = max(n or 1, w.size, 1)
    return len(block_factorization(w, n)) == 1


def concat(blocks: Sequence[Permutation], sizes: Sequence[int]) -> Permutation:
    """Connected sum of blocks, where block j acts on an interval of length sizes[j]."""
    word: list[int] = []
    offset = 0
    for block, size in zip(blocks, sizes):
        word.extend(v + offset for v in block.one_line(size))
        offset += size
    return Permutation(word)


def shift(w: Permutation, m: int) -> Permutation:
    """The permutation 1^m x w; trailing fixed points are inert so 1^m x w x 1^j
    is the same permutation."""
    return Permutation(
        tuple(range(1, m + 1)) + tuple(v + m for v in w.one_line())
    )


def leading_fixed_points(w: Permutation) -> int:
    count = 0
    for i, v in enumerate(w.word, start=1):
        if v != i:
            break
        count += 1
    return count


def cyclic_shifts(w: Permutation, n: int | None = None) -> list[Permutation]:
    """Rotations of the block factorization, starting with w itself.

    >>> [format_perm(v, 8) for v in cyclic_shifts(parse_perm("53124768"), 8)]
    ['53124768', '21386457', '16423587']
    """
    n = max(n or 1, w.size, 1)
    blocks = block_factorization(w, n)
    sizes = [max(b.size, 1) for b in blocks]
    k = len(blocks)
    return [
        concat(blocks[i:] + blocks[:i], sizes[i:] + sizes[:i]) for i in range(k)
    ]


def is_lukasiewicz_composition(c: Sequence[int]) -> bool:
    """Partial sums c_1 + ... + c_k >= k for k = 1..len(c)-1."""
    total = 0
    for k, ck in enumerate(c[:-1], start=1):
        total += ck
        if total < k:
            return False
    return True


def is_lukasiewicz(w: Permutation, n: int | None = None) -> bool:
    """w in S'_n with Lukasiewicz code (partial sums of the code dominate k)."""
    n = max(n or 1, w.size)
    if w.length() != n - 1:
        raise ValueError(f"{w} does not have length {n - 1} in S_{n}")
    return is_lukasiewicz_composition(w.code(n))


def abar(w: Permutation, n: int | None = None) -> tuple[int, ...]:
    """The statistic a_i = #{j <= i : c_j > i - j}; antidiagonal weights of the
    bottom pipe dream."""
    c = w.code(n)
    return tuple(
        sum(1 for j in range(1, i + 1) if c[j - 1] > i - j) for i in range(1, len(c) + 1)
    )


def _multinomial(n: int, cuts: Sequence[int]) -> int:
    """Number of words with descent set contained in cuts = {t_1 < ... < t_k}."""
    result = math.factorial(n)
    prev = 0
    for t in list(cuts) + [n]:
        result //= math.factorial(t - prev)
        prev = t
    return result


@lru_cache(maxsize=None)
def beta(n: int, S: frozenset[int]) -> int:
    """Number of permutations in S_n with descent set exactly S.

    Inclusion-exclusion over subsets of S with multinomial counts, so it
    stays exact and fast well beyond brute-force range.

    >>> beta(4, frozenset({1, 3}))
    5
    """
    S = frozenset(S)
    if not S <= set(range(1, n)):
        raise ValueError(f"descent set {set(S)} not inside [1, {n - 1}]")
    elements = sorted(S)
    total = 0
    for mask in range(1 << len(elements)):
        subset = [elements[i] for i in range(len(elements)) if mask >> i & 1]
        total += (-1) ** (len(elements) - len(subset)) * _multinomial(n, subset)
    return total


def all_perms(n: int) -> Iterator[Permutation]:
    for word in _itertools_permutations(range(1, n + 1)):
        yield Permutation(word)


def sprime(n: int) -> list[Permutation]:
    """All w in S_n of length n - 1, via codes summing to n - 1."""
    result = []

    def fill(position: int, remaining: int, prefix: list[int]):
        if position == n:
            if remaining == 0:
                result.append(from_code(prefix))
            return
        # bound c_i <= n - i with i = position + 1
        for ci in range(min(remaining, n - position - 1), -1, -1):
            fill(position + 1, remaining - ci, prefix + [ci])

    fill(0, n - 1, [])
    return sorted(result)


def lukasiewicz_compositions(n: int) -> list[tuple[int, ...]]:
    """Weak compositions of n - 1 into n parts with partial sums >= k."""
    result = []

    def fill(position: int, remaining: int, prefix: list[int]):
        if position == n:
            if remaining == 0:
                result.append(tuple(prefix))
            return
        low = 0
        if position < n - 1:
            low = max(0, (position + 1) - sum(prefix))
        for ci in range(low, remaining + 1):
            fill(position + 1, remaining - ci, prefix + [ci])

    fill(0, n - 1, [])
    return result
