"""Sparse exact linear algebra over the rationals.

The relation systems in this package (coin-moving recurrences, squarefree
reduction in Klyachko's algebra) are sparse square systems whose right-hand
sides are vectors over some key space, so the solver works with dict-valued
right-hand sides throughout.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, TypeVar

K = TypeVar("K", bound=Hashable)

RowVec = dict[int, Fraction]
RhsVec = dict


def solve_sparse_system(
    rows: list[RowVec], rhs: list[RhsVec], nvars: int
) -> list[RhsVec]:
    """Solve a square sparse system by Gauss-Jordan elimination.

    ``rows[k]`` maps column index -> coefficient; ``rhs[k]`` is a sparse
    vector (any hashable keys).  Picks the sparsest available pivot row per
    column to limit fill-in.  Raises if the system is singular.
    """
    rows = [dict(r) for r in rows]
    rhs = [dict(r) for r in rhs]
    pivot_of_col: dict[int, int] = {}
    used: set[int] = set()
    for col in range(nvars):
        pivot = min(
            (k for k in range(len(rows)) if k not in used and rows[k].get(col)),
            key=lambda k: len(rows[k]),
            default=None,
        )
        if pivot is None:
            raise ArithmeticError("singular sparse system")
        used.add(pivot)
        pivot_of_col[col] = pivot
        inv = 1 / rows[pivot][col]
        if inv != 1:
            rows[pivot] = {c: v * inv for c, v in rows[pivot].items()}
            rhs[pivot] = {key: v * inv for key, v in rhs[pivot].items()}
        for k in range(len(rows)):
            if k != pivot and col in rows[k]:
                factor = rows[k].pop(col)
                for c, v in rows[pivot].items():
                    if c == col:
                        continue
                    value = rows[k].get(c, Fraction(0)) - factor * v
                    if value:
                        rows[k][c] = value
                    else:
                        rows[k].pop(c, None)
                target = rhs[k]
                for key, v in rhs[pivot].items():
                    value = target.get(key, Fraction(0)) - factor * v
                    if value:
                        target[key] = value
                    else:
                        target.pop(key, None)
    return [rhs[pivot_of_col[col]] for col in range(nvars)]
