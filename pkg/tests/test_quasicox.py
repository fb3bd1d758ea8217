"""Tests for quasicoxeter elements and char-poly fingerprints."""

import random
from fractions import Fraction

import pytest

from braidrefl.arrangement import ArrangementMatrix, gamma0_path, sign_conjugate
from braidrefl.braid import BraidWord, act_word
from braidrefl.exactnum import ExactNumber, two_cos
from braidrefl.linalg import charpoly as lin_charpoly
from braidrefl.linalg import identity, mat_eq, mat_mul, mat_sub
from braidrefl.quasicox import (
    CharPolyFingerprint,
    cox_matrix,
    cyclo_fingerprint,
    element_order,
    quasicox_of_tuple,
    split_UV,
)


def test_split_UV():
    B = gamma0_path([1])
    U, V = split_UV(B)
    assert [[int(x.as_rational()) for x in r] for r in U] == [[0, 1], [0, 0]]
    assert [[int(x.as_rational()) for x in r] for r in V] == [[2, 0], [1, 2]]


def test_cox_matrix_A2():
    C = cox_matrix(gamma0_path([1]))
    assert [[int(x.as_rational()) for x in r] for r in C] == [[0, 1], [-1, -1]]
    assert element_order(C) == 3


def test_cox_matrix_An_charpoly():
    # Coxeter element of the linear chain: char poly 1 + x + ... + x^n
    for n in range(2, 7):
        C = cox_matrix(gamma0_path([1] * (n - 1)))
        p = lin_charpoly(C)
        assert all(c == 1 for c in p)
        assert element_order(C) == n + 1


def test_element_order():
    C = cox_matrix(ArrangementMatrix([[2]]))
    assert element_order(C) == 2
    shear = [[Fraction(1), Fraction(1)], [Fraction(0), Fraction(1)]]
    assert element_order(shear, cap=50) is None


def test_fingerprint_cyclotomic():
    fp = cyclo_fingerprint(lin_charpoly(cox_matrix(gamma0_path([1, 1]))))
    assert fp.cyclotomic == ((2, 1), (4, 1))
    assert fp.quadratic == () and fp.residual is None
    assert fp.implied_order() == 4
    # product of distinct cyclotomics, ascending order
    from braidrefl.exactnum import cyclotomic_polynomial
    from braidrefl.quasicox import _as_exact, _poly_mul

    p2 = [_as_exact(c) for c in cyclotomic_polynomial(2)]
    p14 = [_as_exact(c) for c in cyclotomic_polynomial(14)]
    fp = cyclo_fingerprint(_poly_mul(p2, p14))
    assert fp.cyclotomic == ((2, 1), (14, 1)) and fp.implied_order() == 14


def test_fingerprint_quadratics():
    one = two_cos(0, 1) * 0 + 1
    quad = lambda p, q: [one, -two_cos(p, q), one]
    from braidrefl.quasicox import _poly_mul

    poly = _poly_mul(quad(1, 15), quad(11, 15))
    fp = cyclo_fingerprint(poly)
    assert fp.cyclotomic == () and fp.quadratic == ((1, 15), (11, 15))
    assert fp.residual is None and fp.implied_order() == 30
    # squared quadratic factor
    fp = cyclo_fingerprint(_poly_mul(quad(1, 5), quad(1, 5)))
    assert fp.quadratic == ((1, 5), (1, 5)) and fp.implied_order() == 10


def test_fingerprint_reassemble_round_trip():
    from braidrefl.quasicox import _poly_mul

    one = two_cos(0, 1) * 0 + 1
    cases = [
        lin_charpoly(cox_matrix(gamma0_path([1, 1, 1]))),
        _poly_mul([one, -two_cos(3, 10), one], [one, -two_cos(7, 10), one]),
    ]
    for poly in cases:
        fp = cyclo_fingerprint(poly)
        assert fp.reassemble() == [c * 1 for c in poly]


def test_fingerprint_residual():
    # x^2 - 3x + 1 has roots off the unit circle: kept as residual
    one = two_cos(0, 1) * 0 + 1
    fp = cyclo_fingerprint([one, one * -3, one])
    assert fp.residual is not None and fp.implied_order() is None
    assert fp.cyclotomic == () and fp.quadratic == ()


def test_fingerprint_monic_rejected():
    one = two_cos(0, 1) * 0 + 1
    with pytest.raises(ValueError):
        cyclo_fingerprint([one, one + one])


def test_fingerprint_json_and_key():
    fp = cyclo_fingerprint(lin_charpoly(cox_matrix(gamma0_path([1]))))
    assert '"cyclotomic": [[3, 1]]' in fp.to_json()
    fp2 = CharPolyFingerprint(((3, 1),), (), None)
    assert fp.key() == fp2.key()


def test_charpoly_braid_invariance():
    rng = random.Random(13)
    for _ in range(10):
        n = rng.randint(2, 4)
        ent = [[Fraction(2)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                ent[i][j] = ent[j][i] = Fraction(rng.randint(-2, 2))
        B = ArrangementMatrix(ent)
        if cox_matrix(B) is None:
            continue
        p = lin_charpoly(cox_matrix(B))
        word = BraidWord(
            n,
            tuple(
                (rng.randint(1, n - 1), rng.choice([1, -1])) for _ in range(6)
            ),
        )
        assert lin_charpoly(cox_matrix(act_word(B, word))) == p
        signs = [1] + [rng.choice([1, -1]) for _ in range(n - 1)]
        assert lin_charpoly(cox_matrix(sign_conjugate(B, signs))) == p


def test_quasicox_of_tuple_matches_cox_matrix():
    # reflections of the unique realization: r_j = I - e_j (row j of B)
    for labels in ([1], [1, 1], [1, -1, 1]):
        B = gamma0_path(labels)
        n = B.n
        eye = identity(n, B.entries[0][0] * 0 + 1)
        mats = []
        for j in range(n):
            m = [list(r) for r in eye]
            for c in range(n):
                m[j][c] = m[j][c] - B.entries[j][c]
            mats.append(m)
        C = quasicox_of_tuple(mats)
        # product acts on row vectors of coordinates; same char poly
        assert lin_charpoly(C) == lin_charpoly(cox_matrix(B))
        assert mat_eq(mat_mul(mats[0], mats[0]), eye)


def test_degenerate_operator_all_twos_minimal():
    from braidrefl.realization import minimal_realization
    from braidrefl.quasicox import quasicox_degenerate

    two = ExactNumber.from_rational(2)
    B = ArrangementMatrix([[two] * 3 for _ in range(3)])
    real = minimal_realization(B)
    op = quasicox_degenerate(B, real)
    assert op == [[ExactNumber.from_rational(-1)]]
    prod = real.reflection(0)
    for i in (1, 2):
        prod = mat_mul(prod, real.reflection(i))
    assert op == prod


def test_degenerate_operator_matches_reflection_product():
    from braidrefl.catalog import b_a_extension
    from braidrefl.realization import minimal_realization
    from braidrefl.quasicox import quasicox_degenerate

    B = b_a_extension(8, 3)
    real = minimal_realization(B)
    op = quasicox_degenerate(B, real)
    prod = real.reflection(0)
    for i in range(1, 9):
        prod = mat_mul(prod, real.reflection(i))
    assert mat_eq(op, prod)
    assert lin_charpoly(op) == lin_charpoly(prod)


def test_degenerate_operator_square_identity_iff_equal_constants():
    from braidrefl.realization import general_realization
    from braidrefl.quasicox import quasicox_degenerate

    two = ExactNumber.from_rational(2)
    B = ArrangementMatrix([[two] * 3 for _ in range(3)])

    def op(a, b):
        real = general_realization(
            B, I2=(0, 1), J2=(0, 1), a_free=[[a]], b_free=[[b]]
        )
        return quasicox_degenerate(B, real)

    eye = identity(3, ExactNumber.one())
    m = op(Fraction(2, 5), Fraction(2, 5))
    assert mat_eq(mat_mul(m, m), eye)
    m = op(Fraction(1, 2), Fraction(1, 4))
    assert not mat_eq(mat_mul(m, m), eye)


def test_degenerate_operator_block_structure():
    # in the basis where the independent covectors are coordinate
    # functionals, the operator has the block form
    # [[I - B b'(I+U)^{-1}a', 0], [-b'(I+U)^{-1}a', I]]
    from braidrefl.linalg import inverse, mat_add
    from braidrefl.realization import general_realization
    from braidrefl.quasicox import quasicox_degenerate, split_UV

    two = ExactNumber.from_rational(2)
    B = ArrangementMatrix([[two] * 3 for _ in range(3)])
    a, b = Fraction(2, 7), Fraction(3, 5)
    real = general_realization(
        B, I2=(0, 1), J2=(0, 1), a_free=[[a]], b_free=[[b]]
    )
    op = quasicox_degenerate(B, real)

    one, zero = ExactNumber.one(), ExactNumber.zero()
    ea, eb = ExactNumber.from_rational(a), ExactNumber.from_rational(b)
    a_ext = [
        [one, zero, zero],
        [zero, one, zero],
        [one - ea, ea, zero],
    ]
    b_ext = [
        [one, zero, one - eb],
        [zero, one, eb],
        [zero, zero, zero],
    ]
    U, _ = split_UV(B)
    eye = identity(3, one)
    K = inverse(mat_add(eye, U))
    core = mat_mul(b_ext, mat_mul(K, a_ext))
    top = mat_sub(eye, mat_mul(B.rows(), core))
    # basis order: u_0, u_1, w_1
    for r in range(2):
        for c in range(2):
            assert op[r][c] == top[r][c]
        assert op[r][2].is_zero()
    assert op[2][2] == one
    for c in range(2):
        assert op[2][c] == -core[1][c]
