"""Braid group actions on matrices and tuples of group elements.

The braid group on n strands acts from the left.  On a tuple of group
elements the generator sigma_i maps (g_i, g_{i+1}) to
(g_i g_{i+1} g_i^{-1}, g_i) and fixes the rest (Hurwitz action); the
ordered product g_1 ... g_n is invariant.  On arrangement matrices the
induced action is

    sigma_i(B)_{ij}    = B_{i+1,j} - B_{i,i+1} B_{ij},   j != i, i+1
    sigma_i(B)_{i+1,j} = B_{ij}
    sigma_i(B)_{i,i+1} = -B_{i,i+1}

with the remaining entries unchanged; it can be packaged as
sigma(B) = K B K for an explicit symmetric K depending on B_{i,i+1}.
The same row/column moves act on upper-unitriangular (Stokes) matrices
and commute with (anti)symmetrization.
"""

import re
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .arrangement import ArrangementMatrix, sign_canonical
from .exactnum import ExactNumber
from .linalg import mat_eq, mat_mul


@dataclass(frozen=True)
class BraidWord:
    """Product of generators; letters[0] is the leftmost factor.

    Acting on x computes letters applied right-to-left, so the word
    "s1 s2" sends x to sigma_1(sigma_2(x)).
    """

    n: int  # strand count
    letters: tuple  # of (index in 1..n-1, exponent +-1)

    def __post_init__(self):
        for i, e in self.letters:
            if not 1 <= i <= self.n - 1:
                raise ValueError(f"generator index {i} out of range for n={self.n}")
            if e not in (1, -1):
                raise ValueError("exponents must be +-1")

    @staticmethod
    def parse(text: str, n: int) -> "BraidWord":
        letters = []
        for tok in text.split():
            m = re.fullmatch(r"s(\d+)(\^-1)?", tok)
            if not m:
                raise ValueError(f"bad braid letter {tok!r}")
            letters.append((int(m.group(1)), -1 if m.group(2) else 1))
        return BraidWord(n, tuple(letters))

    def __str__(self) -> str:
        return " ".join(f"s{i}" + ("^-1" if e < 0 else "") for i, e in self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise ValueError("strand counts differ")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(
            self.n, tuple((i, -e) for i, e in reversed(self.letters))
        )


def _act_rows(rows: list[list], i: int, e: int) -> None:
    """Apply the generator move to a square matrix in place (0-based i, i+1)."""
    n = len(rows)
    a = rows[i][i + 1]
    if e == 1:
        for j in range(n):
            if j == i or j == i + 1:
                continue
            rows[i][j], rows[i + 1][j] = rows[i + 1][j] - a * rows[i][j], rows[i][j]
            rows[j][i], rows[j][i + 1] = rows[j][i + 1] - a * rows[j][i], rows[j][i]
    else:
        for j in range(n):
            if j == i or j == i + 1:
                continue
            rows[i][j], rows[i + 1][j] = rows[i + 1][j], rows[i][j] - a * rows[i + 1][j]
            rows[j][i], rows[j][i + 1] = rows[j][i + 1], rows[j][i] - a * rows[j][i + 1]
    rows[i][i + 1] = -a
    rows[i + 1][i] = -rows[i + 1][i]


def act_sigma(B: ArrangementMatrix, i: int, e: int = 1) -> ArrangementMatrix:
    """Action of sigma_i^e on an arrangement matrix, 1 <= i <= n-1."""
    if not 1 <= i <= B.n - 1:
        raise IndexError(f"generator index {i} out of range for n={B.n}")
    rows = B.rows()
    _act_rows(rows, i - 1, e)
    return ArrangementMatrix(rows)


def k_matrix(B: ArrangementMatrix, i: int) -> list[list]:
    """Symmetric K with K B K = sigma_i(B)."""
    if not 1 <= i <= B.n - 1:
        raise IndexError(f"generator index {i} out of range for n={B.n}")
    n = B.n
    one, zero = ExactNumber.one(), ExactNumber.zero()
    k = [[one if r == c else zero for c in range(n)] for r in range(n)]
    r = i - 1
    k[r][r] = -B.entries[r][r + 1]
    k[r + 1][r + 1] = zero
    k[r][r + 1] = k[r + 1][r] = one
    return k


def act_word(B: ArrangementMatrix, w: BraidWord) -> ArrangementMatrix:
    if w.n != B.n:
        raise ValueError("strand counts differ")
    rows = B.rows()
    for i, e in reversed(w.letters):
        _act_rows(rows, i - 1, e)
    return ArrangementMatrix(rows)


def hurwitz(t: tuple, i: int, e: int = 1) -> tuple:
    """Hurwitz move on a tuple of group elements (1-based i).

    Elements must support * and .inverse().  The ordered product of the
    tuple is preserved.
    """
    if not 1 <= i <= len(t) - 1:
        raise IndexError(f"position {i} out of range for tuple of {len(t)}")
    g, h = t[i - 1], t[i]
    if e == 1:
        pair = (g * h * g.inverse(), g)
    else:
        pair = (h, h.inverse() * g * h)
    return t[: i - 1] + pair + t[i + 1:]


def hurwitz_word(t: tuple, w: BraidWord) -> tuple:
    if w.n != len(t):
        raise ValueError("strand counts differ")
    for i, e in reversed(w.letters):
        t = hurwitz(t, i, e)
    return t


def stokes_act(S: list[list], i: int, e: int = 1) -> list[list]:
    """Braid action on an upper-unitriangular (Stokes) matrix."""
    n = len(S)
    if not 1 <= i <= n - 1:
        raise IndexError(f"generator index {i} out of range for n={n}")
    for r in range(n):
        for c in range(r):
            if not _zeroish(S[r][c]):
                raise ValueError("matrix is not upper triangular")
        if S[r][r] != _one_like(S[r][r]):
            raise ValueError("diagonal must be 1")
    rows = [list(row) for row in S]
    _act_rows(rows, i - 1, e)
    return rows


def _zeroish(x) -> bool:
    try:
        return x.is_zero()
    except AttributeError:
        return x == 0


def _one_like(x):
    return x * 0 + 1


# -- graph-preserving reorderings -------------------------------------------


def _trans2_word(n: int, e: int) -> list:
    # sigma_{n-1} ... sigma_1 shifts the vertex ordering cyclically
    if e == 1:
        return [(i, 1) for i in range(n - 1, 0, -1)]
    return [(i, -1) for i in range(1, n)]


def reorder_tree(B: ArrangementMatrix, target: Sequence[int]) -> BraidWord:
    """Braid word realizing a vertex reordering of a tree arrangement.

    target[k] is the original vertex to appear at position k.  Only two
    kinds of graph-preserving moves are used: swapping neighbouring
    commuting reflections, and the global cyclic conjugation
    sigma_{n-1} ... sigma_1 (in either direction).  The resulting word w
    satisfies sign_canonical(act_word(B, w)) =
    sign_canonical(B reindexed by target); every reordering of a tree is
    reachable.
    """
    n = B.n
    if sorted(target) != list(range(n)):
        raise ValueError("target must be a permutation of 0..n-1")
    edges = [
        [i != j and not B.entries[i][j].is_zero() for j in range(n)]
        for i in range(n)
    ]
    if sum(sum(row) for row in edges) != 2 * (n - 1) or is_cyclic(edges):
        raise ValueError("arrangement graph is not a tree")
    start = tuple(range(n))
    goal = tuple(target)
    if start == goal:
        return BraidWord(n, ())
    # BFS over vertex orderings; moves append braid letters on the left.
    parents = {start: None}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        moves = []
        for i in range(n - 1):
            if not edges[p[i]][p[i + 1]]:
                q = p[:i] + (p[i + 1], p[i]) + p[i + 2:]
                moves.append((q, [(i + 1, 1)]))
        moves.append((p[1:] + p[:1], _trans2_word(n, 1)))
        moves.append((p[-1:] + p[:-1], _trans2_word(n, -1)))
        for q, letters in moves:
            if q in parents:
                continue
            parents[q] = (p, letters)
            if q == goal:
                word: list = []
                node = q
                while parents[node] is not None:
                    prev, letts = parents[node]
                    # later moves act on the left of earlier ones
                    word = word + letts
                    node = prev
                return BraidWord(n, tuple(word))
            queue.append(q)
    raise ValueError("target ordering not reachable")


def is_cyclic(adj: list[list[bool]]) -> bool:
    n = len(adj)
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        stack = [(start, -1)]
        seen[start] = True
        while stack:
            v, parent = stack.pop()
            for w in range(n):
                if w == v or not adj[v][w]:
                    continue
                if w == parent:
                    continue
                if seen[w]:
                    return True
                seen[w] = True
                stack.append((w, v))
    return False


def permute_matrix(B: ArrangementMatrix, perm: Sequence[int]) -> ArrangementMatrix:
    """Reindexed matrix with position k carrying original vertex perm[k]."""
    return ArrangementMatrix(
        [[B.entries[perm[i]][perm[j]] for j in range(B.n)] for i in range(B.n)]
    )


# -- cycle invariants --------------------------------------------------------


def cycle_invariants(indexing: Sequence[int], cycle: Sequence[int]) -> tuple[int, int]:
    """Ascent/descent counts (q_<, q_>) of an index function on a cycle.

    cycle lists vertices of a closed walk in order; indexing[v] is the
    position of vertex v.  q_< + q_> equals the cycle length; both are
    preserved by the graph-preserving braid moves.
    """
    L = len(cycle)
    q_lt = sum(
        1 for k in range(L) if indexing[cycle[k]] < indexing[cycle[(k + 1) % L]]
    )
    return q_lt, L - q_lt


def compose_cycle_invariants(
    q1: tuple[int, int], q2: tuple[int, int], shared_edges: int
) -> tuple[int, int]:
    """Invariants of a homology sum of two cycles sharing k edges."""
    return (q1[0] + q2[0] - shared_edges, q1[1] + q2[1] - shared_edges)


def verify_k_identity(B: ArrangementMatrix, i: int) -> bool:
    k = k_matrix(B, i)
    return mat_eq(mat_mul(mat_mul(k, B.rows()), k), act_sigma(B, i, 1).rows())
