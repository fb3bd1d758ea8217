"""Tests for arrangement matrices, sign canonicalization, and graphs."""

import random
from fractions import Fraction

import pytest

from braidrefl.arrangement import (
    ArrangementMatrix,
    cos_label,
    det_rank,
    from_graph,
    gamma0_path,
    is_decomposable,
    minor_chain,
    sign_canonical,
    sign_conjugate,
    to_graph,
)
from braidrefl.exactnum import ExactNumber, two_cos
from braidrefl.linalg import det, principal_minor


def test_constructor_validation():
    with pytest.raises(ValueError):
        ArrangementMatrix([[2, 1], [1, 3]])  # bad diagonal
    with pytest.raises(ValueError):
        ArrangementMatrix([[2, 1], [0, 2]])  # not symmetric
    with pytest.raises(ValueError):
        ArrangementMatrix([[2, 1, 0], [1, 2, 1]])  # not square


def test_sign_canonical_examples():
    A3 = gamma0_path([1, 1])
    assert sign_canonical(A3) == A3
    # a tree with one negative pair conjugates to the all-positive matrix
    assert sign_canonical(gamma0_path([-1, 1])) == A3
    assert sign_canonical(gamma0_path([1, -1])) == A3
    # a 3-cycle with all entries -1: one negative edge survives (parity)
    cyc = ArrangementMatrix([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
    can = sign_canonical(cyc)
    negatives = sum(
        1
        for i in range(3)
        for j in range(i + 1, 3)
        if can.entries[i][j] == -1
    )
    assert negatives == 1


def test_sign_canonical_idempotent_and_class_constant():
    rng = random.Random(3)
    vals = [0, 1, -1, 2, -2]
    for _ in range(20):
        n = rng.randint(2, 5)
        ent = [[Fraction(2) if i == j else None for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                ent[i][j] = ent[j][i] = Fraction(rng.choice(vals))
        B = ArrangementMatrix(ent)
        can = sign_canonical(B)
        assert sign_canonical(can) == can
        for mask in range(1 << (n - 1)):
            signs = [1] + [(-1 if mask >> k & 1 else 1) for k in range(n - 1)]
            assert sign_canonical(sign_conjugate(B, signs)) == can


def test_cycle_negative_parity_invariant():
    rng = random.Random(9)
    base = ArrangementMatrix([[2, 1, -1], [1, 2, 1], [-1, 1, 2]])
    def parity(B):
        return sum(
            1 for i in range(3) for j in range(i + 1, 3)
            if B.entries[i][j] == -1
        ) % 2
    for mask in range(4):
        signs = [1] + [(-1 if mask >> k & 1 else 1) for k in range(2)]
        assert parity(sign_conjugate(base, signs)) == parity(base)


def test_graph_round_trip():
    g = two_cos(2, 5)
    B = ArrangementMatrix([[2, g, 0], [g, 2, -1], [0, -1, 2]])
    G = to_graph(B)
    assert from_graph(G) == B
    # single bond of strength 1 carries the omitted "3" label
    A2 = gamma0_path([1])
    (edge,) = to_graph(A2).edges
    assert edge[2] == 1 and edge[3] == Fraction(3)
    # 2cos(2pi/5) renders as 5'
    assert "5'" in to_graph(B).dot()
    # zero entries produce no edge
    assert len(to_graph(B).edges) == 2


def test_cos_label():
    assert cos_label(two_cos(1, 4)) == (1, Fraction(4, 1))
    assert cos_label(-two_cos(1, 4)) == (-1, Fraction(4, 1))
    assert cos_label(two_cos(2, 5)) == (1, Fraction(5, 2))
    assert cos_label(ExactNumber.one()) == (1, Fraction(3, 1))
    assert cos_label(ExactNumber.zero()) is None
    assert cos_label(ExactNumber.from_rational(Fraction(1, 3))) is None


def test_from_graph_rejects_bad_label():
    from braidrefl.arrangement import LabeledGraph

    G = LabeledGraph(2, ((0, 1, 1, Fraction(3, 2)),))
    with pytest.raises(ValueError):
        from_graph(G)


def test_is_decomposable():
    blk = ArrangementMatrix([[2, 1, 0, 0], [1, 2, 0, 0], [0, 0, 2, 1], [0, 0, 1, 2]])
    flag, parts = is_decomposable(blk)
    assert flag and parts == [[0, 1], [2, 3]]
    assert is_decomposable(gamma0_path([1, 1])) == (False, None)
    diag = ArrangementMatrix([[2, 0], [0, 2]])
    assert is_decomposable(diag)[0]


def test_det_rank_examples():
    d, r = det_rank(gamma0_path([1, 1]))
    assert d == 4 and r == 3
    d, r = det_rank(ArrangementMatrix([[2, 2, 2], [2, 2, 2], [2, 2, 2]]))
    assert d.is_zero() and r == 1
    # path matrices of bond strength 1: det is n+1
    for n in range(1, 7):
        d, r = det_rank(gamma0_path([1] * (n - 1)))
        assert d == n + 1 and r == n


def test_det_vs_cofactor_oracle():
    def cofactor_det(rows):
        n = len(rows)
        if n == 1:
            return rows[0][0]
        acc = None
        for j in range(n):
            minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
            term = rows[0][j] * cofactor_det(minor)
            if j % 2:
                term = -term
            acc = term if acc is None else acc + term
        return acc

    rng = random.Random(11)
    for _ in range(10):
        n = rng.randint(2, 5)
        ent = [[Fraction(2)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                ent[i][j] = ent[j][i] = Fraction(rng.randint(-3, 3))
        B = ArrangementMatrix(ent)
        assert det_rank(B)[0] == cofactor_det(B.rows())


def test_minor_chain():
    assert minor_chain(gamma0_path([1, 1, 1]))[1] == [1, 2, 3, 4]
    all2 = ArrangementMatrix([[2, 2, 2], [2, 2, 2], [2, 2, 2]])
    assert minor_chain(all2)[1] == [1, 1, 1]
    m = ArrangementMatrix([[2, -2, -2], [-2, 2, -2], [-2, -2, 2]])
    chain, s = minor_chain(m)
    assert s == [1, 1, 3]
    assert [b.n for b in chain] == [3, 2, 1]


def test_json_round_trip():
    g = two_cos(2, 5)
    B = ArrangementMatrix([[2, g, 0], [g, 2, -1], [0, -1, 2]])
    assert ArrangementMatrix.from_json(B.to_json()) == B
