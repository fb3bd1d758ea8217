"""Symmetric arrangement matrices for tuples of reflections.

A tuple of reflections (r_1, ..., r_n) with roots v_i and coroots v_i^
acting by r_i(x) = x - v_i^(x) v_i is characterized, up to change of
basis, by the matrix B_{ij} = v_i^(v_j).  Here we keep only the
symmetric case B_{ij} = B_{ji}, B_{ii} = 2, which covers arrangements
of reflections in a space with an invariant symmetric form.

The residual freedom B -> D B D with D = diag(lambda), lambda_i = +-1,
lambda_1 = 1 (sign equivalence) is handled by an exhaustive canonical
form.  Matrices are also rendered as labeled graphs: an edge between i
and j when B_{ij} != 0, labeled q/p when B_{ij} = +-2cos(pi p/q), with
the conventions that the label 3 is omitted and 5/2 prints as 5'.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .exactnum import ExactNumber, euler_phi, format_expr, parse_expr, two_cos
from .linalg import det, principal_minor, rank


class ArrangementMatrix:
    """Immutable symmetric n x n matrix with diagonal 2, hashable."""

    __slots__ = ("n", "entries", "_hash")

    def __init__(self, entries: Sequence[Sequence]):
        n = len(entries)
        two = ExactNumber.from_rational(2)
        rows = []
        for i in range(n):
            if len(entries[i]) != n:
                raise ValueError("matrix must be square")
            rows.append(tuple(_coerce_entry(x) for x in entries[i]))
        for i in range(n):
            if rows[i][i] != two:
                raise ValueError(f"diagonal entry ({i},{i}) must be 2")
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) differ")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", tuple(rows))
        object.__setattr__(self, "_hash", hash(self.entries))

    def __setattr__(self, name, value):
        raise AttributeError("ArrangementMatrix is immutable")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, ArrangementMatrix) and self.entries == other.entries
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        rows = "; ".join(
            " ".join(format_expr(x) for x in row) for row in self.entries
        )
        return f"ArrangementMatrix({self.n}, [{rows}])"

    def rows(self) -> list[list]:
        return [list(row) for row in self.entries]

    def sort_key(self):
        return tuple(x.sort_key() for row in self.entries for x in row)

    def to_json(self) -> str:
        doc = {
            "n": self.n,
            "entries": [[format_expr(x) for x in row] for row in self.entries],
        }
        return json.dumps(doc)

    @staticmethod
    def from_json(text: str) -> "ArrangementMatrix":
        doc = json.loads(text)
        n = doc["n"]
        entries = [[parse_expr(s) for s in row] for row in doc["entries"]]
        if len(entries) != n:
            raise ValueError("entry grid does not match declared size")
        return ArrangementMatrix(entries)


def _coerce_entry(x) -> ExactNumber:
    if isinstance(x, ExactNumber):
        return x
    return ExactNumber.from_rational(x)


def sign_conjugate(B: ArrangementMatrix, signs: Sequence[int]) -> ArrangementMatrix:
    """B -> diag(signs) B diag(signs) with signs in {+1, -1}."""
    ent = [
        [
            B.entries[i][j] if signs[i] * signs[j] > 0 else -B.entries[i][j]
            for j in range(B.n)
        ]
        for i in range(B.n)
    ]
    return ArrangementMatrix(ent)


def sign_canonical(B: ArrangementMatrix) -> ArrangementMatrix:
    """Lexicographically minimal representative of the sign class.

    All 2^{n-1} conjugations diag(lambda) B diag(lambda) with
    lambda_1 = 1 are enumerated; entries compare by their canonical
    encodings, under which a nonnegative rational precedes its negation.
    """
    n = B.n
    best = B
    best_key = B.sort_key()
    for mask in range(1, 1 << (n - 1)):
        signs = [1] + [(-1 if mask >> k & 1 else 1) for k in range(n - 1)]
        cand = sign_conjugate(B, signs)
        key = cand.sort_key()
        if key < best_key:
            best, best_key = cand, key
    return best


@dataclass(frozen=True)
class LabeledGraph:
    """Edge-labeled graph rendering of an arrangement matrix."""

    n: int
    # edges: (i, j, sign, label) with i < j; label is a Fraction q/p
    # meaning |entry| = 2cos(pi p/q), or a raw expression string.
    edges: tuple

    def dot(self) -> str:
        lines = ["graph arrangement {"]
        for v in range(self.n):
            lines.append(f"  v{v};")
        for i, j, sign, label in self.edges:
            text = _label_text(label)
            if sign < 0:
                text = f"-{text}" if text else "-"
            attr = f' [label="{text}"]' if text else ""
            lines.append(f"  v{i} -- v{j}{attr};")
        lines.append("}")
        return "\n".join(lines)


def _label_text(label) -> str:
    if isinstance(label, str):
        return label
    if label == Fraction(3):
        return ""
    if label == Fraction(5, 2):
        return "5'"
    if label.denominator == 1:
        return str(label.numerator)
    return f"{label.numerator}/{label.denominator}"


def cos_label(x: ExactNumber) -> tuple[int, Fraction] | None:
    """Write x as sign * 2cos(pi p/q) with 0 < p/q < 1/2; label is q/p.

    Returns (sign, Fraction(q, p)) or None when x has no such form.
    """
    if x.is_zero():
        return None
    for q in _cos_denominators(x.conductor):
        for p in range(1, (q + 1) // 2):
            if gcd(p, q) != 1:
                continue
            c = two_cos(p, q)
            if x == c:
                return (1, Fraction(q, p))
            if x == -c:
                return (-1, Fraction(q, p))
    return None


def _cos_denominators(conductor: int) -> list[int]:
    # 2cos(pi p/q) has conductor dividing 2q and degree phi(2q)/2 over Q,
    # so phi(2q) <= 2 phi(conductor) bounds the search.
    d = euler_phi(conductor)
    return [q for q in range(3, 6 * d + 7) if euler_phi(2 * q) <= 2 * d]


def to_graph(B: ArrangementMatrix) -> LabeledGraph:
    edges = []
    for i in range(B.n):
        for j in range(i + 1, B.n):
            x = B.entries[i][j]
            if x.is_zero():
                continue
            lab = cos_label(x)
            if lab is None:
                edges.append((i, j, 1, format_expr(x)))
            else:
                edges.append((i, j, lab[0], lab[1]))
    return LabeledGraph(B.n, tuple(edges))


def from_graph(G: LabeledGraph) -> ArrangementMatrix:
    zero = ExactNumber.zero()
    ent = [[zero] * G.n for _ in range(G.n)]
    for i in range(G.n):
        ent[i][i] = ExactNumber.from_rational(2)
    for i, j, sign, label in G.edges:
        if isinstance(label, str):
            x = parse_expr(label)
        else:
            q, p = label.numerator, label.denominator
            if Fraction(p, q) >= Fraction(1, 2):
                raise ValueError(f"label {label} has p/q >= 1/2")
            x = two_cos(p, q)
        if sign < 0:
            x = -x
        ent[i][j] = ent[j][i] = x
    return ArrangementMatrix(ent)


def adjacency_components(B: ArrangementMatrix) -> list[list[int]]:
    seen = [False] * B.n
    comps = []
    for start in range(B.n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(B.n):
                if not seen[w] and not B.entries[v][w].is_zero():
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_decomposable(B: ArrangementMatrix) -> tuple[bool, list[list[int]] | None]:
    comps = adjacency_components(B)
    if len(comps) > 1:
        return True, comps
    return False, None


def det_rank(B: ArrangementMatrix) -> tuple[ExactNumber, int]:
    rows = B.rows()
    return det(rows), rank(rows)


def _max_nondegenerate_size(rows: list[list]) -> int:
    n = len(rows)
    for size in range(n, 0, -1):
        for idx in combinations(range(n), size):
            if not det(principal_minor(rows, idx)).is_zero():
                return size
    return 0


def minor_chain(B: ArrangementMatrix) -> tuple[list[ArrangementMatrix], list[int]]:
    """Chain B = B_n > B_{n-1} > ... > B_1 of principal minors.

    Each step deletes one index, keeping a minor of maximal rank and
    breaking ties by the smallest deleted index.  Returns the chain
    (largest first) and s = (s_1, ..., s_n) where s_i is the size of the
    biggest non-degenerate principal minor inside B_i, counting B_i.
    """
    chain = [B]
    current = B
    while current.n > 1:
        rows = current.rows()
        best = None
        for drop in range(current.n):
            idx = [i for i in range(current.n) if i != drop]
            r = rank(principal_minor(rows, idx))
            if best is None or r > best[0]:
                best = (r, drop, idx)
        idx = best[2]
        current = ArrangementMatrix(principal_minor(rows, idx))
        chain.append(current)
    s = [_max_nondegenerate_size(m.rows()) for m in reversed(chain)]
    return chain, s


def gamma0_path(labels: Iterable) -> ArrangementMatrix:
    """Path-graph matrix with the given consecutive entries.

    labels are ExactNumbers (or rationals) placed at (i, i+1).
    """
    labs = [_coerce_entry(x) for x in labels]
    n = len(labs) + 1
    zero = ExactNumber.zero()
    ent = [[zero] * n for _ in range(n)]
    for i in range(n):
        ent[i][i] = ExactNumber.from_rational(2)
    for i, x in enumerate(labs):
        ent[i][i + 1] = ent[i + 1][i] = x
    return ArrangementMatrix(ent)
