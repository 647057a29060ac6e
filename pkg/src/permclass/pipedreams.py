"""Reduced pipe dreams: bottom dream, strand tracing, ladder-move enumeration.

A pipe dream is a finite set of crossing positions (row, col), 1-indexed from
the northwest corner.  For w in S_n all crossings fit inside the staircase
row + col <= n.  Strands enter from the left edge of the rows travelling
east, cross at every '+', turn at every elbow, and exit through the top edge;
row i exits at column w(i).
"""

from __future__ import annotations

from collections import deque
from typing import FrozenSet, Iterator

from .perm import Permutation

PipeDream = FrozenSet[tuple[int, int]]


def bottom_pipe_dream(w: Permutation, n: int | None = None) -> PipeDream:
    """Crosses in row i at columns 1..c_i where c is the code of w."""
    return frozenset(
        (i, j)
        for i, ci in enumerate(w.code(n), start=1)
        for j in range(1, ci + 1)
    )


def trace_permutation(crosses: PipeDream) -> Permutation:
    """Follow the strands of the pipe dream and read off the permutation."""
    extent = max((r + c for r, c in crosses), default=1)
    word = []
    for row in range(1, extent + 1):
        r, c, heading = row, 1, "east"
        while r >= 1:
            if (r, c) in crosses:
                if heading == "east":
                    c += 1
                else:
                    r -= 1
            elif heading == "east":
                heading, r = "north", r - 1
            else:
                heading, c = "east", c + 1
        word.append(c)
    if sorted(word) != list(range(1, extent + 1)):
        raise ValueError(f"strands do not trace a permutation: {crosses}")
    return Permutation(word)


def is_reduced(crosses: PipeDream) -> bool:
    """Reduced: the number of crossings equals the length of the traced
    permutation (no two strands cross twice)."""
    return len(crosses) == trace_permutation(crosses).length()


def ladder_moves(crosses: PipeDream) -> Iterator[PipeDream]:
    """All pipe dreams reachable by a single ladder move.

    A ladder move acts on columns j, j+1: it needs a cross at (i, j) with
    (i, j+1) empty, some k >= 0 fully crossed rows above it (both columns
    crossed), and both cells empty in the row above those; the cross at
    (i, j) then jumps to (i-k-1, j+1).
    """
    for (i, j) in crosses:
        if (i, j + 1) in crosses:
            continue
        r = i - 1
        while r >= 1:
            left, right = (r, j) in crosses, (r, j + 1) in crosses
            if not left and not right:
                yield crosses - {(i, j)} | {(r, j + 1)}
                break
            if not (left and right):
                break
            r -= 1


def enumerate_pipe_dreams(w: Permutation, n: int | None = None) -> set[PipeDream]:
    """All reduced pipe dreams of w: the ladder-move closure of the bottom one."""
    bottom = bottom_pipe_dream(w, n)
    seen = {bottom}
    queue = deque([bottom])
    while queue:
        current = queue.popleft()
        for nxt in ladder_moves(current):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def row_weight(crosses: PipeDream, n: int) -> tuple[int, ...]:
    """c(gamma): number of crossings in each of the first n rows."""
    counts = [0] * n
    for r, _ in crosses:
        counts[r - 1] += 1
    return tuple(counts)


def antidiagonal_weight(crosses: PipeDream, n: int) -> tuple[int, ...]:
    """a(gamma): a_k counts the crossings on the antidiagonal row + col = k + 1."""
    counts = [0] * n
    for r, c in crosses:
        counts[r + c - 2] += 1
    return tuple(counts)


def render_ascii(crosses: PipeDream, n: int) -> str:
    """Staircase picture with '+' for crossings and '.' for elbows."""
    lines = []
    for r in range(1, n + 1):
        cells = ["+" if (r, c) in crosses else "." for c in range(1, n - r + 2)]
        lines.append(" ".join(cells))
    return "\n".join(lines)
