"""Partitions, standard/flagged tableaux, signatures and the vexillary pipeline.

Vexillary permutations have Schubert polynomials equal to flagged Schur
functions, determined by a shape and a flag read off the code.  The flag can
be re-encoded as a 0/1 signature (which row/column steps are strict) plus a
height N; tableaux with those strictness constraints biject with the flagged
semistandard tableaux via a cellwise shift, and counting standard tableaux by
a descent statistic of a compatible labeling then yields a_w.

Cells are 1-based pairs (i, j); tableaux and labelings are tuples of row
tuples, so ``T[i-1][j-1]`` is the entry in cell (i, j).
"""

from __future__ import annotations

import heapq
from math import factorial
from typing import Iterator, NamedTuple, Sequence

from .perm import Permutation, is_indecomposable, is_vexillary, leading_fixed_points

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]
Labeling = tuple[tuple[int, ...], ...]


class Signature(NamedTuple):
    """Strictness pattern: e_i = 1 forces a strict step between rows i, i+1;
    f_j = 1 between columns j, j+1."""

    e: tuple[int, ...]
    f: tuple[int, ...]


# -- partitions --------------------------------------------------------------


def check_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(parts)
    if any(p <= 0 for p in parts) or any(
        parts[i] < parts[i + 1] for i in range(len(parts) - 1)
    ):
        raise ValueError(f"not a partition: {parts}")
    return parts


def conjugate(shape: Partition) -> Partition:
    if not shape:
        return ()
    return tuple(
        sum(1 for p in shape if p >= j) for j in range(1, shape[0] + 1)
    )


def hook_lengths(shape: Partition) -> dict[tuple[int, int], int]:
    conj = conjugate(shape)
    return {
        (i, j): shape[i - 1] + conj[j - 1] - i - j + 1
        for i in range(1, len(shape) + 1)
        for j in range(1, shape[i - 1] + 1)
    }


def hook_length_count(shape: Partition) -> int:
    """Number of standard Young tableaux of the shape, by the hook formula."""
    product = 1
    for h in hook_lengths(shape).values():
        product *= h
    return factorial(sum(shape)) // product


def cells(shape: Partition) -> list[tuple[int, int]]:
    return [
        (i, j) for i in range(1, len(shape) + 1) for j in range(1, shape[i - 1] + 1)
    ]


def content_counts(shape: Partition, m: int, n: int) -> tuple[int, ...]:
    """c_i = number of cells with content j - i equal to i - m, for i = 1..n."""
    counts = [0] * n
    for (i, j) in cells(shape):
        k = (j - i) + m
        if not 1 <= k <= n:
            raise ValueError(f"content {j - i} out of range for descent {m}")
        counts[k - 1] += 1
    return tuple(counts)


def block_form(shape: Partition) -> list[tuple[int, int]]:
    """Distinct part sizes with multiplicities: [(p_1, m_1), ...], p_1 > p_2 > ..."""
    blocks: list[tuple[int, int]] = []
    for p in shape:
        if blocks and blocks[-1][0] == p:
            blocks[-1] = (p, blocks[-1][1] + 1)
        else:
            blocks.append((p, 1))
    return blocks


# -- standard tableaux -------------------------------------------------------


def syt_enumerate(shape: Partition) -> Iterator[Tableau]:
    """All standard Young tableaux, grown by adding 1, 2, ... at addable corners."""
    size = sum(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def grow(value: int) -> Iterator[Tableau]:
        if value > size:
            yield tuple(tuple(row) for row in rows)
            return
        for r in range(len(shape)):
            if len(rows[r]) < shape[r] and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(value)
                yield from grow(value + 1)
                rows[r].pop()

    yield from grow(1)


def syt_descents(T: Tableau) -> int:
    """Traditional descents: k such that k + 1 lies in a strictly lower row."""
    size = sum(len(row) for row in T)
    row_of = {}
    for i, row in enumerate(T, start=1):
        for value in row:
            row_of[value] = i
    return sum(1 for k in range(1, size) if row_of[k + 1] > row_of[k])


def syt_count_by_descents(shape: Partition, d: int) -> int:
    return sum(1 for T in syt_enumerate(shape) if syt_descents(T) == d)


# -- flagged semistandard tableaux -------------------------------------------


def flagged_ssyt_enumerate(shape: Partition, flag: Sequence[int]) -> Iterator[Tableau]:
    """Semistandard tableaux of the shape with row-i entries at most flag[i-1]."""
    flag = tuple(flag)
    if len(flag) != len(shape):
        raise ValueError("flag must have one bound per row")
    if any(flag[i] > flag[i + 1] for i in range(len(flag) - 1)):
        raise ValueError(f"flag must be weakly increasing: {flag}")
    rows: list[list[int]] = [[] for _ in shape]

    def fill(i: int, j: int) -> Iterator[Tableau]:
        if i > len(shape):
            yield tuple(tuple(row) for row in rows)
            return
        if j > shape[i - 1]:
            yield from fill(i + 1, 1)
            return
        low = 1
        if j > 1:
            low = max(low, rows[i - 1][j - 2])
        if i > 1 and shape[i - 2] >= j:
            low = max(low, rows[i - 2][j - 1] + 1)
        for value in range(low, flag[i - 1] + 1):
            rows[i - 1].append(value)
            yield from fill(i, j + 1)
            rows[i - 1].pop()

    yield from fill(1, 1)


def flagged_ssyt_count(shape: Partition, flag: Sequence[int]) -> int:
    return sum(1 for _ in flagged_ssyt_enumerate(shape, flag))


# -- shape and flag of a permutation -----------------------------------------


def shape_and_flag(w: Permutation) -> tuple[Partition, tuple[int, ...]]:
    """(lambda(w), phi(w)): the shape and, for each nonzero code entry c_i,
    the largest j with c_j >= c_i, sorted increasingly."""
    c = w.code()
    shape = tuple(sorted((x for x in c if x > 0), reverse=True))
    flag = sorted(
        max(j for j in range(1, len(c) + 1) if c[j - 1] >= ci)
        for ci in c
        if ci > 0
    )
    return shape, tuple(flag)


def flag_inequalities_hold(shape: Partition, flag: Sequence[int]) -> bool:
    """The characterization of (shape, flag) pairs coming from vexillary
    permutations: phi_q >= M_q and 0 <= phi_{q+1} - phi_q <= m_{q+1} + p_q - p_{q+1}."""
    blocks = block_form(shape)
    flag = tuple(flag)
    if len(flag) != len(shape):
        raise ValueError("flag must have one entry per row")
    phi = []
    pos = 0
    for p, m in blocks:
        if len(set(flag[pos : pos + m])) > 1:
            return False
        phi.append(flag[pos])
        pos += m
    M = 0
    for q, (p, m) in enumerate(blocks):
        M += m
        if phi[q] < M:
            return False
    for q in range(len(blocks) - 1):
        delta = phi[q + 1] - phi[q]
        bound = blocks[q + 1][1] + blocks[q][0] - blocks[q + 1][0]
        if not 0 <= delta <= bound:
            return False
    return True


# -- signatures ---------------------------------------------------------------


def check_signature(shape: Partition, epsilon: Signature) -> Signature:
    l = len(shape)
    if len(epsilon.e) != l - 1 or len(epsilon.f) != shape[0] - 1:
        raise ValueError(
            f"signature sizes {len(epsilon.e)}, {len(epsilon.f)} do not fit shape {shape}"
        )
    if not all(x in (0, 1) for x in epsilon.e + epsilon.f):
        raise ValueError("signature entries must be 0 or 1")
    return epsilon


def partial_sums(shape: Partition, epsilon: Signature) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(E, F) with E_i = e_1 + ... + e_{i-1} and F_j = f_1 + ... + f_{j-1}."""
    E = [0]
    for x in epsilon.e:
        E.append(E[-1] + x)
    F = [0]
    for x in epsilon.f:
        F.append(F[-1] + x)
    return tuple(E), tuple(F)


def min_height(shape: Partition, epsilon: Signature) -> int:
    """Smallest N with any valid filling: max_q of F_{p_q} + E_{M_q}."""
    E, F = partial_sums(shape, epsilon)
    best = 0
    M = 0
    for p, m in block_form(shape):
        M += m
        best = max(best, F[p - 1] + E[M - 1])
    return best


def flag_from_signature(shape: Partition, epsilon: Signature, N: int) -> tuple[int, ...]:
    """The flag phi_q = N + 1 - F_{p_q} + (M_q - 1 - E_{M_q}), expanded per row."""
    E, F = partial_sums(shape, epsilon)
    flag: list[int] = []
    M = 0
    for p, m in block_form(shape):
        M += m
        ebar = M - 1 - E[M - 1]
        flag.extend([N + 1 - F[p - 1] + ebar] * m)
    return tuple(flag)


def vexillary_signature(u: Permutation) -> tuple[Signature, int]:
    """Deterministic signature and height for an indecomposable vexillary u.

    Block q of the shape imposes (number of weak e-steps) + (number of strict
    f-steps) = phi_{q+1} - phi_q on a window of entries; the deficit is paid
    first by setting f = 1 on the lowest admissible columns, then e = 0 on the
    lowest admissible rows.  Unconstrained entries default to e = 1, f = 0,
    which reproduces the all-strict-columns convention on Grassmannian input.
    """
    if not is_vexillary(u):
        raise ValueError(f"{u} is not vexillary")
    if not is_indecomposable(u):
        raise ValueError(f"{u} is not indecomposable")
    shape, flag = shape_and_flag(u)
    blocks = block_form(shape)
    l = len(shape)
    e = [1] * (l - 1)
    f = [0] * (shape[0] - 1)
    phi = []
    pos = 0
    for p, m in blocks:
        phi.append(flag[pos])
        pos += m
    M_values = []
    M = 0
    for p, m in blocks:
        M += m
        M_values.append(M)
    for q in range(len(blocks) - 1):
        delta = phi[q + 1] - phi[q]
        f_window = list(range(blocks[q + 1][0], blocks[q][0]))  # p_{q+1} .. p_q - 1
        e_window = list(range(M_values[q], M_values[q + 1]))  # M_q .. M_{q+1} - 1
        strict_cols = min(delta, len(f_window))
        for j in f_window[:strict_cols]:
            f[j - 1] = 1
        for i in e_window[: delta - strict_cols]:
            e[i - 1] = 0
    epsilon = Signature(tuple(e), tuple(f))
    N = min_height(shape, epsilon)
    rebuilt = flag_from_signature(shape, epsilon, N)
    if rebuilt != flag:
        raise AssertionError(
            f"signature reconstruction failed for {u}: {rebuilt} != {flag}"
        )
    return epsilon, N


# -- compatible labelings ------------------------------------------------------


def compatible_labeling(shape: Partition, epsilon: Signature) -> Labeling:
    """A labeling with omega(i,j) > omega(i+1,j) iff e_i = 1 and
    omega(i,j) > omega(i,j+1) iff f_j = 1: a topological order of the oriented
    Hasse graph, breaking ties by lexicographic (row, column)."""
    check_signature(shape, epsilon)
    shape_cells = cells(shape)
    succ: dict[tuple[int, int], list[tuple[int, int]]] = {c: [] for c in shape_cells}
    indegree = {c: 0 for c in shape_cells}

    def add_edge(src, dst):
        succ[src].append(dst)
        indegree[dst] += 1

    for (i, j) in shape_cells:
        if (i + 1, j) in indegree:
            if epsilon.e[i - 1]:
                add_edge((i + 1, j), (i, j))
            else:
                add_edge((i, j), (i + 1, j))
        if (i, j + 1) in indegree:
            if epsilon.f[j - 1]:
                add_edge((i, j + 1), (i, j))
            else:
                add_edge((i, j), (i, j + 1))

    heap = [c for c in shape_cells if indegree[c] == 0]
    heapq.heapify(heap)
    label = {}
    counter = 0
    while heap:
        cell = heapq.heappop(heap)
        counter += 1
        label[cell] = counter
        for nxt in succ[cell]:
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                heapq.heappush(heap, nxt)
    if counter != len(shape_cells):
        raise AssertionError("orientation of the labeling graph is cyclic")
    return tuple(
        tuple(label[(i, j)] for j in range(1, shape[i - 1] + 1))
        for i in range(1, len(shape) + 1)
    )


def is_compatible_labeling(shape: Partition, epsilon: Signature, omega: Labeling) -> bool:
    for i in range(1, len(shape) + 1):
        for j in range(1, shape[i - 1] + 1):
            if i < len(shape) and shape[i] >= j:
                if (omega[i - 1][j - 1] > omega[i][j - 1]) != bool(epsilon.e[i - 1]):
                    return False
            if j < shape[i - 1]:
                if (omega[i - 1][j - 1] > omega[i - 1][j]) != bool(epsilon.f[j - 1]):
                    return False
    return True


def bottom_to_top_labeling(shape: Partition) -> Labeling:
    """Labels 1..|shape| placed bottom row to top row, left to right: the
    classical choice for Grassmannian signatures."""
    label = {}
    counter = 0
    for i in range(len(shape), 0, -1):
        for j in range(1, shape[i - 1] + 1):
            counter += 1
            label[(i, j)] = counter
    return tuple(
        tuple(label[(i, j)] for j in range(1, shape[i - 1] + 1))
        for i in range(1, len(shape) + 1)
    )


def omega_descents(T: Tableau, omega: Labeling) -> int:
    """dsc(T; omega): entries k whose successor k+1 sits in a cell with a
    smaller label."""
    position = {}
    for i, row in enumerate(T):
        for j, value in enumerate(row):
            position[value] = (i, j)
    size = len(position)
    count = 0
    for k in range(1, size):
        i1, j1 = position[k]
        i2, j2 = position[k + 1]
        if omega[i1][j1] > omega[i2][j2]:
            count += 1
    return count


def syt_with_descent_count(shape: Partition, omega: Labeling, d: int) -> int:
    """Number of standard tableaux with exactly d omega-descents."""
    return sum(1 for T in syt_enumerate(shape) if omega_descents(T, omega) == d)


def syt_descent_distribution(shape: Partition, omega: Labeling) -> dict[int, int]:
    dist: dict[int, int] = {}
    for T in syt_enumerate(shape):
        d = omega_descents(T, omega)
        dist[d] = dist.get(d, 0) + 1
    return dist


# -- epsilon-tableaux and the Str bijection ------------------------------------


def epsilon_tableaux(shape: Partition, epsilon: Signature, N: int) -> Iterator[Tableau]:
    """Fillings by 1..N+1, weakly increasing along rows and columns, with the
    strict steps forced by the signature."""
    check_signature(shape, epsilon)
    rows: list[list[int]] = [[] for _ in shape]

    def fill(i: int, j: int) -> Iterator[Tableau]:
        if i > len(shape):
            yield tuple(tuple(row) for row in rows)
            return
        if j > shape[i - 1]:
            yield from fill(i + 1, 1)
            return
        low = 1
        if j > 1:
            low = max(low, rows[i - 1][j - 2] + epsilon.f[j - 2])
        if i > 1 and shape[i - 2] >= j:
            low = max(low, rows[i - 2][j - 1] + epsilon.e[i - 2])
        for value in range(low, N + 2):
            rows[i - 1].append(value)
            yield from fill(i, j + 1)
            rows[i - 1].pop()

    yield from fill(1, 1)


def count_epsilon_tableaux(shape: Partition, epsilon: Signature, N: int) -> int:
    return sum(1 for _ in epsilon_tableaux(shape, epsilon, N))


def _shift_table(shape: Partition, epsilon: Signature) -> list[list[int]]:
    """Cellwise shift -F_j + (i - 1 - E_i) applied by the Str map."""
    E, F = partial_sums(shape, epsilon)
    return [
        [(i - 1 - E[i - 1]) - F[j - 1] for j in range(1, shape[i - 1] + 1)]
        for i in range(1, len(shape) + 1)
    ]


def str_map(T: Tableau, shape: Partition, epsilon: Signature) -> Tableau:
    """The bijection onto flagged semistandard tableaux: subtract the column
    strictness already consumed, add back the missing row strictness."""
    _validate_epsilon_tableau(T, shape, epsilon)
    shift = _shift_table(shape, epsilon)
    return tuple(
        tuple(value + shift[i][j] for j, value in enumerate(row))
        for i, row in enumerate(T)
    )


def str_inverse(U: Tableau, shape: Partition, epsilon: Signature) -> Tableau:
    shift = _shift_table(shape, epsilon)
    return tuple(
        tuple(value - shift[i][j] for j, value in enumerate(row))
        for i, row in enumerate(U)
    )


def _validate_epsilon_tableau(T: Tableau, shape: Partition, epsilon: Signature):
    check_signature(shape, epsilon)
    if tuple(len(row) for row in T) != shape:
        raise ValueError(f"tableau does not have shape {shape}")
    for i in range(1, len(shape) + 1):
        for j in range(1, shape[i - 1] + 1):
            if j < shape[i - 1]:
                if T[i - 1][j] - T[i - 1][j - 1] < epsilon.f[j - 1]:
                    raise ValueError(f"row condition violated at {(i, j)}")
            if i < len(shape) and shape[i] >= j:
                if T[i][j - 1] - T[i - 1][j - 1] < epsilon.e[i - 1]:
                    raise ValueError(f"column condition violated at {(i, j)}")


# -- the vexillary evaluation ---------------------------------------------------


def aw_vexillary(w: Permutation, n: int | None = None) -> int:
    """a_w for vexillary w of length n - 1: the number of standard tableaux of
    the core's shape with exactly m + N descents of the chosen labeling, where
    m counts the leading fixed points."""
    if n is None:
        n = w.length() + 1
    if w.size > n or w.length() != n - 1:
        raise ValueError(f"{w} must have length {n - 1} in S_{n}")
    if not is_vexillary(w):
        raise ValueError(f"{w} is not vexillary")
    m = leading_fixed_points(w)
    core = Permutation(tuple(v - m for v in w.word[m:]))
    epsilon, N = vexillary_signature(core)
    shape, _ = shape_and_flag(core)
    omega = compatible_labeling(shape, epsilon)
    return syt_with_descent_count(shape, omega, m + N)
