"""Tests for the orbit engines and the 3x3 finiteness decision."""

import random
from collections import deque
from fractions import Fraction

import pytest

from braidrefl.arrangement import ArrangementMatrix, gamma0_path, sign_canonical
from braidrefl.braid import BraidWord, act_sigma, act_word
from braidrefl.catalog import arrangement_of_reflections, root_system
from braidrefl.exactnum import ExactNumber, sqrt_rational, two_cos
from braidrefl.orbits import (
    PermElement,
    classify_3x3,
    count_generating_orbits,
    entry_angle,
    hurwitz_orbit,
    is_generating,
    matrix_orbit,
    reflection_element,
)


def _labels_matrix(labels):
    """3x3 matrix with off-diagonals (B12, B13, B23) = labels."""
    two = ExactNumber.from_rational(2)
    a, b, c = (
        x if isinstance(x, ExactNumber) else ExactNumber.from_rational(x)
        for x in labels
    )
    return ArrangementMatrix([[two, a, b], [a, two, c], [b, c, two]])


# -- matrix orbits -----------------------------------------------------------


def test_matrix_orbit_2x2_trivial():
    for bond in (1, -1, 5, Fraction(7, 3)):
        B = ArrangementMatrix(
            [
                [ExactNumber.from_rational(2), ExactNumber.from_rational(bond)],
                [ExactNumber.from_rational(bond), ExactNumber.from_rational(2)],
            ]
        )
        rep = matrix_orbit(B)
        assert rep.verdict == "Finite"
        assert rep.size == 1


def test_matrix_orbit_indefinite_exceeds_cap():
    rep = matrix_orbit(_labels_matrix([-2, -2, -2]), cap=300)
    assert rep.verdict == "ExceededCap"
    assert rep.size >= 300


def test_matrix_orbit_matches_naive_bfs():
    # oracle: BFS deduplicating on exact matrix equality (no sign-class
    # shortcut), then count the distinct sign classes afterwards
    B = gamma0_path([1, 1])
    seen = {B}
    queue = deque([B])
    while queue:
        cur = queue.popleft()
        for i in (1, 2):
            for e in (1, -1):
                nxt = act_sigma(cur, i, e)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        assert len(seen) < 10**4
    oracle = len({sign_canonical(m) for m in seen})
    rep = matrix_orbit(B)
    assert rep.verdict == "Finite"
    assert rep.size == oracle


def test_matrix_orbit_invariants_constant():
    B = gamma0_path([1, 1])
    rep = matrix_orbit(B, max_reps=10**6)
    assert len(rep.representatives) == rep.size
    rng = random.Random(1)
    cur = B
    for _ in range(30):
        word = " ".join(
            f"s{rng.randrange(1, 3)}{rng.choice(['', '^-1'])}" for _ in range(4)
        )
        cur = act_word(cur, BraidWord.parse(word, 3))
        from braidrefl.orbits import _matrix_invariants

        inv = _matrix_invariants(cur)
        assert inv["det"] == rep.invariants["det"]
        assert inv["charpoly"] == rep.invariants["charpoly"]


def test_matrix_orbit_rejects_bad_cap():
    with pytest.raises(ValueError):
        matrix_orbit(gamma0_path([1]), cap=0)


# -- Hurwitz orbits ----------------------------------------------------------


def test_hurwitz_equal_pair_is_fixed():
    r = PermElement((1, 0, 2))
    rep = hurwitz_orbit((r, r))
    assert rep.verdict == "Finite"
    assert rep.size == 1


def test_hurwitz_transpositions():
    s12 = PermElement((1, 0, 2))
    s23 = PermElement((0, 2, 1))
    rep = hurwitz_orbit((s12, s23))
    assert rep.verdict == "Finite"
    assert rep.size == 3


def _index_tuple_orbit(R, start):
    """Oracle: BFS on reflection-index tuples using the conjugation table."""
    conj = R.conj_table()
    seen = {tuple(start)}
    queue = deque(seen)
    while queue:
        cur = queue.popleft()
        for i in range(len(cur) - 1):
            a, b = cur[i], cur[i + 1]
            for nxt in (
                cur[:i] + (conj[a][b], a) + cur[i + 2 :],
                cur[:i] + (b, conj[b][a]) + cur[i + 2 :],
            ):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return seen


def test_hurwitz_h3_triple_matches_oracle():
    R = root_system("H3")
    start = None
    for t in ((0, 1, 2), (0, 1, 3), (0, 2, 5)):
        if is_generating(R, t):
            start = t
            break
    assert start is not None
    oracle = _index_tuple_orbit(R, start)
    elems = tuple(reflection_element(R, a) for a in start)
    rep = hurwitz_orbit(elems)
    assert rep.verdict == "Finite"
    assert rep.size == len(oracle)


def test_tuple_orbit_maps_into_matrix_orbit():
    # the arrangement matrix of every tuple in the Hurwitz orbit lands,
    # up to sign class, inside the matrix orbit of the starting matrix
    R = root_system("A3")
    start = next(
        t
        for t in (
            (a, b, c)
            for a in range(R.nreflections)
            for b in range(R.nreflections)
            for c in range(R.nreflections)
        )
        if is_generating(R, t)
    )
    import json as _json

    B = arrangement_of_reflections(R, start)
    mat_rep = matrix_orbit(B, max_reps=10**6)
    mat_classes = {
        ArrangementMatrix.from_json(_json.dumps(m))
        for m in mat_rep.representatives
    }
    for t in _index_tuple_orbit(R, start):
        Bt = sign_canonical(arrangement_of_reflections(R, t))
        assert Bt in mat_classes


def test_hurwitz_rejects_bad_cap():
    r = PermElement((1, 0))
    with pytest.raises(ValueError):
        hurwitz_orbit((r, r), cap=-1)


# -- entry angles and 3x3 classification -------------------------------------


def test_entry_angle_rational_cases():
    assert entry_angle(ExactNumber.from_rational(1)) == Fraction(1, 3)
    assert entry_angle(ExactNumber.from_rational(0)) == Fraction(1, 2)
    assert entry_angle(ExactNumber.from_rational(-2)) == Fraction(1)
    assert entry_angle(ExactNumber.from_rational(3)) is None
    assert entry_angle(ExactNumber.from_rational(Fraction(1, 2))) is None


def test_entry_angle_irrational_cases():
    assert entry_angle(two_cos(1, 5)) == Fraction(1, 5)
    assert entry_angle(two_cos(2, 7)) == Fraction(2, 7)
    assert entry_angle(sqrt_rational(2)) == Fraction(1, 4)
    assert entry_angle(-two_cos(1, 5)) == Fraction(4, 5)
    assert entry_angle(sqrt_rational(5)) is None


def test_classify_finite_coxeter():
    res = classify_3x3(_labels_matrix([1, 1, 1]))
    assert res.kind == "Finite"
    res = classify_3x3(gamma0_path([1, 1]))
    assert res.kind == "Finite"


def test_classify_degenerate_all_twos():
    res = classify_3x3(_labels_matrix([2, 2, 2]))
    assert res.kind == "Finite"
    assert "degenerate" in res.reason


def test_classify_degenerate_angle_family():
    # entries (2cos a, 2cos b, 2cos(a-b)) with a = pi/3, b = pi/5
    B = _labels_matrix([two_cos(1, 3), two_cos(1, 5), two_cos(2, 15)])
    res = classify_3x3(B)
    assert res.kind == "Finite"
    assert "degenerate" in res.reason
    assert "1/3" in res.reason and "1/5" in res.reason


def test_classify_infinite_entrywise():
    res = classify_3x3(_labels_matrix([-2, -2, -2]))
    assert res.kind == "Infinite"
    res = classify_3x3(_labels_matrix([3, 1, 1]))
    assert res.kind == "Infinite"


def test_classify_infinite_reachable():
    # every starting entry is a cosine but the moves mix sqrt 2 with
    # sqrt 5, producing entries outside the cosine table
    B = _labels_matrix([two_cos(1, 5), two_cos(1, 4), 0])
    res = classify_3x3(B)
    assert res.kind == "Infinite"


def test_classify_unknown_on_tiny_cap():
    res = classify_3x3(_labels_matrix([1, 1, 1]), cap=2)
    assert res.kind == "Unknown"


def test_classify_requires_3x3():
    with pytest.raises(ValueError):
        classify_3x3(gamma0_path([1]))


# -- orbit counting ----------------------------------------------------------


def test_count_type_a_and_b_single_orbit():
    for group in ("A2", "A3", "B3"):
        rep = count_generating_orbits(group)
        assert rep.count == 1


def test_count_exhaustive_totals_match_direct_filtration():
    R = root_system("A3")
    rep = count_generating_orbits("A3")
    N = R.nreflections
    direct = sum(
        1
        for a in range(N)
        for b in range(N)
        for c in range(N)
        if is_generating(R, (a, b, c))
    )
    assert rep.total_generating == direct
    assert sum(o["size"] for o in rep.orbits) == direct


def test_count_d4_two_orbits_with_cycle_types():
    rep = count_generating_orbits("D4")
    assert rep.count == 2
    assert sorted(tuple(o["cycle_type"]) for o in rep.orbits) == [(1, 3), (2, 2)]


def test_seeded_agrees_with_exhaustive_on_d4():
    ex = count_generating_orbits("D4")
    se = count_generating_orbits("D4", mode="seeded", budget=400, seed=7)
    assert se.count == ex.count
    ex_keys = {str(o["charpoly"]) for o in ex.orbits}
    se_keys = {str(o["charpoly"]) for o in se.orbits}
    assert ex_keys == se_keys


def test_exhaustive_refused_above_limit():
    with pytest.raises(ValueError):
        count_generating_orbits("E6")


def test_bad_mode_rejected():
    with pytest.raises(ValueError):
        count_generating_orbits("A2", mode="montecarlo")


def test_threads_flag_does_not_change_output():
    a = count_generating_orbits("A3", threads=1)
    b = count_generating_orbits("A3", threads=8)
    assert a.to_json() == b.to_json()
