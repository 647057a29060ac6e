"""Exact computation of the Schubert expansion of the permutahedral variety class.

The central quantity is the coefficient a_w of the Schubert class indexed by
w_o w in the degree-(n-1)(n-2) class of the permutahedral (equivalently,
Peterson) variety inside the flag variety.  The library computes a_w by
several independent exact algorithms and cross-verifies them:

- divided symmetrization of the Schubert polynomial of w,
- mixed Eulerian numbers summed over reduced words of w,
- the top coefficient in Klyachko's squarefree algebra,
- combinatorial shortcuts for Lukasiewicz, Coxeter, Grassmannian and
  vexillary permutations.

Everything is integer/rational arithmetic; no floating point is used.
"""

from .perm import Permutation, parse_perm, format_perm

__all__ = [
    "Permutation",
    "parse_perm",
    "format_perm",
]
