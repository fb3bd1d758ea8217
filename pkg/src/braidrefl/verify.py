"""Named verification suites over the library's published tables.

Each suite re-derives a published result (orbit counts, polynomial
tables, determinant formulas, redundancy identities) and returns one
row per checked fact: ``{"name", "ok", "detail"}``.  The CLI renders
these as pass/fail lines; the acceptance tests consume them directly.
Known discrepancies between a stated closed form and the computed value
are reported in the row detail rather than silently patched.
"""

import json
import random
from fractions import Fraction
from functools import lru_cache

from .arrangement import ArrangementMatrix, det_rank, sign_canonical
from .braid import BraidWord, act_sigma, act_word, stokes_act, verify_k_identity
from .braid import _act_rows
from .catalog import (
    arrangement_of_reflections,
    b_a_extension,
    d_matrix,
    extension_det_formula,
    extension_matrix,
    orbit_representatives,
    root_system,
    universal_matrix,
)
from .exactnum import ExactNumber, parse_expr, two_cos
from .linalg import (
    charpoly,
    det,
    identity,
    inverse,
    mat_eq,
    mat_mul,
    principal_minor,
    rank,
)
from .orbits import classify_3x3, count_generating_orbits
from .quasicox import cox_matrix, cyclo_fingerprint
from .realization import evaluate_word, is_redundant, minimal_realization

SEEDED_BUDGETS = {"E6": 3000, "E7": 3000, "E8": 10000, "D6": 3000}
RNG_SEED = 0


def _row(name, ok, detail=""):
    return {"name": name, "ok": bool(ok), "detail": detail}


@lru_cache(maxsize=None)
def _discover(group):
    """Orbit discovery with the pinned mode/budget per group, cached."""
    if group in SEEDED_BUDGETS:
        return count_generating_orbits(
            group, mode="seeded", budget=SEEDED_BUDGETS[group], seed=RNG_SEED
        )
    return count_generating_orbits(group, mode="exhaustive")


def _rand_matrix(rng, n):
    ent = [[Fraction(2)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            ent[i][j] = ent[j][i] = Fraction(rng.randint(-3, 3))
    return ArrangementMatrix(ent)


# -- suite 1: braid relations ------------------------------------------------


def braid_relations(cases=200):
    rng = random.Random(100)
    rel_ok = k_ok = stokes_ok = True
    for _ in range(cases):
        n = rng.randint(3, 6)
        B = _rand_matrix(rng, n)
        i = rng.randint(1, n - 2)
        lhs = act_word(B, BraidWord.parse(f"s{i} s{i + 1} s{i}", n))
        rhs = act_word(B, BraidWord.parse(f"s{i + 1} s{i} s{i + 1}", n))
        rel_ok &= lhs == rhs
        rel_ok &= act_sigma(act_sigma(B, i), i, -1) == B
        if n >= 4:
            rel_ok &= act_sigma(act_sigma(B, 1), 3) == act_sigma(
                act_sigma(B, 3), 1
            )
        k_ok &= verify_k_identity(B, i)
        # Stokes action commutes with (anti)symmetrization
        S = [
            [
                Fraction(1)
                if r == c
                else (Fraction(rng.randint(-3, 3)) if c > r else Fraction(0))
                for c in range(n)
            ]
            for r in range(n)
        ]
        S2 = stokes_act(S, i)
        for sgn in (1, -1):
            sym = [[S[r][c] + sgn * S[c][r] for c in range(n)] for r in range(n)]
            _act_rows(sym, i - 1, 1)
            sym2 = [[S2[r][c] + sgn * S2[c][r] for c in range(n)] for r in range(n)]
            stokes_ok &= sym == sym2
    return [
        _row("braid relations on matrices", rel_ok, f"{cases} random cases"),
        _row("K-matrix identity sigma(B) = K B K", k_ok),
        _row("Stokes (anti)symmetrization commutes", stokes_ok),
    ]


# -- suite 2: 3x3 classification ---------------------------------------------


def classify_suite():
    one = ExactNumber.one()
    two = one + one

    def mk(a, b, c):
        return ArrangementMatrix([[two, a, b], [a, two, c], [b, c, two]])

    rows = []
    r = classify_3x3(mk(one, one, one))
    rows.append(_row("unit off-diagonals -> Finite", r.kind == "Finite", r.reason))
    r = classify_3x3(mk(-two, -two, -two))
    rows.append(_row("all -2 entries -> Infinite", r.kind == "Infinite", r.reason))
    from .realization import degenerate_3x3

    r = classify_3x3(degenerate_3x3(Fraction(1, 3), Fraction(1, 5)))
    rows.append(
        _row("degenerate (pi/3, pi/5) family -> Finite", r.kind == "Finite", r.reason)
    )
    half = ExactNumber.from_rational(Fraction(5, 2))
    r = classify_3x3(mk(half, one, one))
    rows.append(
        _row("aperiodic entry -> Infinite", r.kind == "Infinite", r.reason)
    )
    return rows


# -- suite 3: orbit counts ---------------------------------------------------

ORBIT_COUNT_CASES = [
    ("A2", 1), ("A3", 1), ("A4", 1), ("A5", 1),
    ("B2", 1), ("B3", 1), ("B4", 1),
    ("D4", 2), ("D5", 2), ("D6", 3),
    ("H3", 3), ("F4", 2), ("E6", 3), ("H4", 11),
]


def orbit_counts():
    rows = []
    for group, expect in ORBIT_COUNT_CASES:
        report = _discover(group)
        rows.append(
            _row(
                f"{group}: {expect} orbit(s)",
                report.count == expect,
                f"mode={report.mode} found={report.count}",
            )
        )
    return rows


def dn_orbits(n=4):
    expect = n // 2
    report = _discover(f"D{n}")
    return [
        _row(
            f"D{n}: {expect} orbits",
            report.count == expect,
            f"mode={report.mode} found={report.count}",
        )
    ]


# -- suite 4: characteristic polynomial tables -------------------------------

E_TABLES = {
    "E6": {
        ((3, 1), (12, 1)),
        ((9, 1),),
        ((3, 1), (6, 2)),
    },
    "E7": {
        ((2, 1), (14, 1)),
        ((2, 1), (6, 1), (12, 1)),
        ((2, 1), (18, 1)),
        ((2, 1), (6, 1), (10, 1)),
        ((2, 1), (6, 3)),
    },
    "E8": {
        ((30, 1),),
        ((24, 1),),
        ((20, 1),),
        ((6, 1), (18, 1)),
        ((15, 1),),
        ((12, 2),),
        ((10, 2),),
        ((6, 2), (12, 1)),
        ((6, 4),),
    },
}

H4_TABLE = {
    ((), ((1, 15), (11, 15))),
    ((), ((1, 5), (1, 5))),
    ((), ((7, 15), (13, 15))),
    ((), ((3, 5), (3, 5))),
    ((), ((3, 10), (7, 10))),
    ((), ((4, 15), (14, 15))),
    ((), ((1, 10), (9, 10))),
    ((), ((2, 15), (8, 15))),
    (((12, 1),), ()),
    (((10, 1),), ()),
    (((6, 2),), ()),
}


def _fingerprint_key(fp: dict):
    return (
        tuple(tuple(x) for x in fp["cyclotomic"]),
        tuple(tuple(x) for x in fp["quadratic"]),
    )


def h4_table():
    report = _discover("H4")
    found = {_fingerprint_key(o["charpoly"]) for o in report.orbits}
    rows = [
        _row(
            "H4: 11 orbit buckets discovered",
            report.count == 11,
            f"found {report.count}",
        )
    ]
    for key in sorted(H4_TABLE):
        rows.append(_row(f"H4 row {key}", key in found))
    rows.append(_row("H4: no extra rows", found <= H4_TABLE, str(found - H4_TABLE)))
    return rows


def e_table(long=False):
    rows = []
    groups = ["E6", "E7"] + (["E8"] if long else [])
    for group in groups:
        expect = set(E_TABLES[group])
        report = _discover(group)
        found = {_fingerprint_key(o["charpoly"])[0] for o in report.orbits}
        for key in sorted(expect):
            rows.append(_row(f"{group} row {key}", key in found))
        rows.append(
            _row(
                f"{group}: no extra rows",
                found <= expect,
                f"samples={report.samples}",
            )
        )
        if group == "E8":
            rows.append(
                _row(
                    "E8: >= 10^4 generating samples",
                    (report.samples or 0) >= 10**4,
                    f"samples={report.samples}",
                )
            )
    if not long:
        rows.append(_row("E8 table skipped (needs --long)", True))
    return rows


# -- suite 5: H4 determinants ------------------------------------------------


def h4_dets():
    report = _discover("H4")
    c = two_cos(2, 5)  # (sqrt 5 - 1)/2
    one = ExactNumber.one()
    two, three = one + one, one + one + one
    five = ExactNumber.from_rational(5)
    # the five family values: (7-3sqrt5)/2, (7+3sqrt5)/2, (3+sqrt5)/2,
    # (3-sqrt5)/2, 1 rewritten over the 2cos(2pi/5) basis
    expect = {one - c, two - three * c, two + c, five + three * c, one}
    got = {parse_expr(o["det"]) for o in report.orbits}
    return [
        _row(
            "H4 family determinants",
            got == expect,
            f"{len(got)} distinct values",
        )
    ]


# -- suite 6: determinant formulas -------------------------------------------


def _gamma0_dn_ext_rows(n, k, va_bond):
    """Gamma_0(D_n) bordered by a vertex bonded to k interior vertices."""
    B = [
        [Fraction(2) if i == j else Fraction(1) for j in range(n)]
        for i in range(n)
    ]
    B[0][n - 1] = B[n - 1][0] = Fraction(0)
    ext = [Fraction(0)] * n
    for j in range(1, 1 + k):
        ext[j] = Fraction(1)
    ext[0] = Fraction(va_bond)
    return [B[i] + [ext[i]] for i in range(n)] + [ext + [Fraction(2)]]


def det_sweep():
    rows = []
    ok = all(
        det_rank(universal_matrix(f"A{n}"))[0] == n + 1 for n in range(2, 13)
    )
    rows.append(_row("det B(A_n) = n + 1 for n <= 12", ok))
    ok = all(det_rank(b_a_extension(n, k))[0] == 2 * (n + 1) - k * (n - k + 1)
             for n in range(2, 10) for k in range(1, n + 1))
    rows.append(_row("det B(A_n, k) = 2(n+1) - k(n-k+1)", ok))
    ok = all(
        det(_gamma0_dn_ext_rows(n, k, 0)) == 8 - 4 * k
        for n in range(4, 9)
        for k in range(1, n - 1)
    )
    rows.append(_row("interior extension of D_n: det = 8 - 4k", ok))
    ok = all(
        det(_gamma0_dn_ext_rows(n, k, 1)) == 8 - n
        for n in range(4, 9)
        for k in range(1, n - 1)
    )
    rows.append(_row("one-end extension of D_n: det = 8 - n", ok))
    ok = all(
        det_rank(extension_matrix("A", n, p, q))[0]
        == extension_det_formula("A", n, p, q)
        for n in range(2, 8)
        for p in range(0, n + 1)
        for q in range(0, n + 1 - p)
    )
    rows.append(_row("A-extension closed form", ok))
    for fam in ("D1", "D2", "D4", "D5", "D6"):
        ok = all(
            det_rank(extension_matrix(fam, n, p, q))[0]
            == extension_det_formula(fam, n, p, q)
            for n in range(4, 7)
            for p in range(0, n - 1)
            for q in range(0, n - 1 - p)
        )
        rows.append(_row(f"{fam}-extension closed form", ok))
    # the stated D3 closed form 8 - n - 8p describes the reversed vertex
    # order; the literal matrix computes 8 - n - 8q (the D2 value)
    mismatch = all(
        det_rank(extension_matrix("D3", n, p, q))[0]
        == extension_det_formula("D2", n, p, q)
        for n in range(4, 7)
        for p in range(0, n - 1)
        for q in range(0, n - 1 - p)
    )
    literal = all(
        det_rank(extension_matrix("D3", n, p, q))[0]
        == extension_det_formula("D3", n, p, q)
        for n in range(4, 7)
        for p in range(0, n - 1)
        for q in range(0, n - 1 - p)
    )
    rows.append(
        _row(
            "D3-extension discrepancy reported",
            mismatch and not literal,
            "literal matrix computes 8-n-8q, not the stated 8-n-8p; "
            "the two agree under the (1 n) vertex swap",
        )
    )
    ok = all(
        det_rank(extension_matrix("B1", n, p, q))[0]
        == extension_det_formula("B1", n, p, q)
        for n in range(3, 7)
        for p in range(0, n)
        for q in range(0, n - p)
    )
    rows.append(_row("B-extension (first case) closed form", ok))
    ok = all(
        det_rank(extension_matrix("B2", n, p))[0] == 4 - n
        for n in range(3, 7)
        for p in range(0, n)
    )
    rows.append(_row("B-extension (second case): det = 4 - n", ok))
    ok = all(det_rank(extension_matrix("B3", n))[0] == 2 for n in range(3, 7))
    rows.append(_row("B-extension (third case): det = 2", ok))
    return rows


# -- suite 7: realizations ---------------------------------------------------


def _eval(real, word_1based):
    return evaluate_word(real, word_1based)


def _word_or_membership(rows, name, B, word_1based, target_index):
    """Check a stated redundancy word exactly, else fall back to the
    root-closure membership test."""
    real = minimal_realization(B)
    try:
        exact = mat_eq(_eval(real, word_1based), real.reflection(target_index))
    except Exception:
        exact = False
    if exact:
        rows.append(_row(name, True, "word verified exactly"))
        return
    member = is_redundant(B, target_index, budget=400)
    rows.append(
        _row(name, member, "membership fallback" if member else "not redundant")
    )


def realization_suite():
    from .realization import generated_group, root_closure_vectors, unique_realization

    rows = []
    # Gram recovery across the catalog
    labels = (
        [f"A{n}" for n in range(2, 6)]
        + [f"B{n}" for n in range(2, 5)]
        + ["D4", "D5", "D6"]
    )
    fixture_labels = [
        f"{g}:{k + 1}"
        for g in ("F4", "H3", "H4", "E6", "E7", "E8")
        for k in range(len(orbit_representatives(g)))
    ]
    ok = True
    for label in labels + fixture_labels:
        B = universal_matrix(label)
        real = minimal_realization(B)
        ok &= real.gram() == B
    rows.append(
        _row(
            "Gram recovery on catalog matrices",
            ok,
            f"{len(labels) + len(fixture_labels)} matrices",
        )
    )
    # the rank-1 3x3 family: (r1 r2 r3)^2 = 1 iff the two constants agree
    from .realization import general_realization

    def prod_sq(a, b):
        real = general_realization(
            _all_twos(3), I2=(0, 1), J2=(0, 1), a_free=[[a]], b_free=[[b]]
        )
        r1, r2, r3 = real.reflections()
        p = mat_mul(mat_mul(r1, r2), r3)
        return mat_eq(mat_mul(p, p), identity(3, ExactNumber.one()))

    rows.append(
        _row(
            "rank-1 3x3 family: (r1r2r3)^2 = 1 iff a = b",
            prod_sq(Fraction(2, 7), Fraction(2, 7))
            and not prod_sq(Fraction(1, 2), Fraction(1, 3)),
        )
    )
    # B(A_8, 3) closes onto the 240-root system
    real = minimal_realization(b_a_extension(8, 3))
    rays = root_closure_vectors(real, range(9), budget=300)
    rows.append(
        _row("B(A_8,3) closure has 240 roots", len(rays) == 120, f"{len(rays)} rays")
    )
    # stated redundancy words (1-based reflection indices; inverses of
    # involutions are read as the reversed word)
    n = 5
    _word_or_membership(
        rows,
        "A-extension p=q=1: r_{n+1} = r_n r_{n-1} r_n",
        extension_matrix("A", n, 1, 1),
        [n, n - 1, n],
        n,
    )
    g = [6, 9, 6, 7, 6, 8, 4, 6, 9, 6, 3, 7, 2, 8, 1, 6]
    _word_or_membership(
        rows,
        "B(A_8,3): r_5 = g r_9 g^-1",
        b_a_extension(8, 3),
        g + [9] + g[::-1],
        4,
    )
    _word_or_membership(
        rows,
        "D-extension p=q=1: r_{n+1} = r_{n-1} r_{n-2} r_{n-1}",
        extension_matrix("D1", n, 1, 1),
        [n - 1, n - 2, n - 1],
        n,
    )
    _word_or_membership(
        rows,
        "D-extension p=2: r_{n+1} = r_{n-1} r_1 r_{n-2} r_n r_{n-2} r_1 r_{n-1}",
        extension_matrix("D1", n, 2, 0),
        [n - 1, 1, n - 2, n, n - 2, 1, n - 1],
        n,
    )
    _word_or_membership(
        rows,
        "B-extension p=q=1: r_{n+1} = r_{n-2} r_{n-1} r_{n-2}",
        extension_matrix("B1", n, 1, 1),
        [n - 2, n - 1, n - 2],
        n,
    )
    _word_or_membership(
        rows,
        "B-extension p=2: r_{n+1} = r_{n-1} r_n r_{n-2} r_n r_{n-1}",
        extension_matrix("B1", n, 2, 0),
        [n - 1, n, n - 2, n, n - 1],
        n,
    )
    # B-extension second case at n=4 is redundant inside F4
    g1, g2 = [4, 1, 3, 1], [1, 4]
    r_by_p = {
        0: [5],
        1: [4, 1, 5, 1, 4],
        2: [4, 1, 4, 5, 4, 1, 4],
        3: [4, 5, 4],
    }
    for p, r in r_by_p.items():
        word = g1 + r + g2 + [1] + g2[::-1] + r + g1[::-1]
        _word_or_membership(
            rows,
            f"B-extension n=4 p={p}: r_2 = g1 r g2 r_1 g2^-1 r g1^-1",
            extension_matrix("B2", 4, p),
            word,
            1,
        )
    # the two degenerate extensions of the F4 arrangement: the stated word
    # must evaluate to a reflection whose bordered matrix is singular and
    # redundant at the new vertex
    for name, word in (
        ("F4 extension 1: r_5 = r_3 r_4 r_1 r_2 r_1 r_4 r_3", [3, 4, 1, 2, 1, 4, 3]),
        ("F4 extension 2: r_5 = r_4 r_1 r_2 r_1 r_4", [4, 1, 2, 1, 4]),
    ):
        found = False
        for k in (1, 2):
            B = universal_matrix(f"F4:{k}")
            real = unique_realization(B)
            w = _eval(real, word)
            eye = identity(4, ExactNumber.one())
            if not mat_eq(mat_mul(w, w), eye):
                continue
            diff = [[w[i][j] - eye[i][j] for j in range(4)] for i in range(4)]
            if rank(diff) != 1:
                continue
            ext = _border_with_reflection(B, real, w)
            if det(ext.rows()).is_zero() and is_redundant(ext, 4, budget=300):
                found = True
                break
        rows.append(_row(name, found, f"base orbit {k}" if found else ""))
    return rows


def _all_twos(n):
    two = ExactNumber.from_rational(2)
    return ArrangementMatrix([[two] * n for _ in range(n)])


def _border_with_reflection(B, real, w):
    """Extend B by the reflection w = 1 - u (x) u^v acting in real's space.

    The border entries are the symmetric pairings against a root u
    renormalized to the common length; the length ratio must be a
    rational with a representable square root (true for the crystal
    cases this suite uses).
    """
    from .exactnum import sqrt_rational

    dim = real.dim
    eye = identity(dim, ExactNumber.one())
    diff = [[eye[i][j] - w[i][j] for j in range(dim)] for i in range(dim)]
    # diff = u (x) u^v with u^v(u) = 2 forced by w^2 = 1
    col = next(
        j for j in range(dim) if any(not diff[i][j].is_zero() for i in range(dim))
    )
    u = [diff[i][col] for i in range(dim)]
    i0 = next(i for i in range(dim) if not u[i].is_zero())
    uv = [diff[i0][j] * u[i0].inverse() for j in range(dim)]
    a = []  # u^v(v_j)
    b = []  # v_j^v(u)
    for j in range(B.n):
        vj = real.vectors[j]
        fj = real.covectors[j]
        a.append(sum((uv[i] * vj[i] for i in range(dim)), ExactNumber.zero()))
        b.append(sum((fj[i] * u[i] for i in range(dim)), ExactNumber.zero()))
    j0 = next(j for j in range(B.n) if not b[j].is_zero())
    ratio = a[j0] * b[j0].inverse()  # = 2 / (length of u)^2
    if not ratio.is_rational():
        raise ValueError("irrational length ratio")
    t = sqrt_rational(ratio.as_rational())
    if t is None:
        raise ValueError("length ratio without representable square root")
    new_col = [x * t.inverse() for x in a]
    two = ExactNumber.from_rational(2)
    ent = [list(row) + [new_col[i]] for i, row in enumerate(B.entries)]
    ent.append(new_col + [two])
    return ArrangementMatrix(ent)


# -- suite 8: quasicoxeter consistency ---------------------------------------


def quasicox_suite(words_per_case=100):
    from .realization import unique_realization

    rng = random.Random(8)
    rows = []
    labels = [f"A{n}" for n in range(2, 5)] + ["B2", "B3", "D4"] + [
        f"{g}:{k + 1}"
        for g in ("F4", "H3", "H4", "E6", "E7", "E8")
        for k in range(len(orbit_representatives(g)))
    ]
    prod_ok = inv_ok = True
    for label in labels:
        B = universal_matrix(label)
        if det(B.rows()).is_zero():
            continue
        real = unique_realization(B)
        prod = real.reflections()[0]
        for r in real.reflections()[1:]:
            prod = mat_mul(prod, r)
        prod_ok &= charpoly(cox_matrix(B)) == charpoly(prod)
        base = cyclo_fingerprint(charpoly(cox_matrix(B))).to_json()
        for _ in range(words_per_case):
            w = BraidWord(
                B.n,
                tuple(
                    (rng.randint(1, B.n - 1), rng.choice((1, -1)))
                    for _ in range(rng.randint(1, 8))
                ),
            )
            C = act_word(B, w)
            inv_ok &= cyclo_fingerprint(charpoly(cox_matrix(C))).to_json() == base
    rows.append(
        _row(
            "charpoly(cox matrix) = charpoly(r_1...r_n)",
            prod_ok,
            f"{len(labels)} catalog matrices",
        )
    )
    rows.append(
        _row(
            "fingerprint invariant under random braid words",
            inv_ok,
            f"{words_per_case} words per case",
        )
    )
    return rows


# -- suite 9: all-minors-degenerate lemma ------------------------------------


def minors_suite():
    two = ExactNumber.from_rational(2)
    m1 = ArrangementMatrix(
        [[2, -2, -2], [-2, 2, -2], [-2, -2, 2]]
    )
    a, b = two_cos(1, 5), two_cos(2, 5)
    c = two_cos(1, 5)  # 2cos((p-q)pi/d) with p=1, q=2, d=5: cos(-pi/5)
    m2 = ArrangementMatrix(
        [[two, a, b, c], [a, two, c, b], [b, c, two, a], [c, b, a, two]]
    )
    rows = []
    for name, B in (("3x3 all -2", m1), ("4x4 fifth-root pattern", m2)):
        n = B.n
        ent = B.rows()
        invertible = not det(ent).is_zero()
        minors_deg = all(
            det(principal_minor(ent, [x for x in range(n) if x != i])).is_zero()
            for i in range(n)
        )
        inv = inverse(ent)
        diag_zero = inv is not None and all(inv[i][i].is_zero() for i in range(n))
        rows.append(
            _row(
                f"{name}: invertible, all size-{n - 1} minors singular",
                invertible and minors_deg,
            )
        )
        rows.append(_row(f"{name}: inverse has zero diagonal", diag_zero))
        # some braid image regains a non-degenerate big minor
        seen = {sign_canonical(B)}
        frontier = [B]
        escaped = False
        for _ in range(6):
            if escaped:
                break
            nxt = []
            for X in frontier:
                for i in range(1, n):
                    for e in (1, -1):
                        Y = act_sigma(X, i, e)
                        key = sign_canonical(Y)
                        if key in seen:
                            continue
                        seen.add(key)
                        nxt.append(Y)
                        yent = Y.rows()
                        if any(
                            not det(
                                principal_minor(
                                    yent, [x for x in range(n) if x != j]
                                )
                            ).is_zero()
                            for j in range(n)
                        ):
                            escaped = True
            frontier = nxt
        rows.append(
            _row(
                f"{name}: braid image with non-degenerate minor (depth <= 6)",
                escaped,
            )
        )
    return rows


# -- suite 10: determinism ---------------------------------------------------


def determinism(threads=(1, 8)):
    outputs = []
    for t in threads:
        chunks = []
        for group in ("A3", "B3", "D4", "H3", "F4"):
            report = count_generating_orbits(group, mode="exhaustive", threads=t)
            chunks.append(report.to_json())
        outputs.append("\n".join(chunks))
    ok = all(o == outputs[0] for o in outputs)
    return [
        _row(
            f"orbit reports identical across threads {list(threads)}",
            ok,
            f"{len(outputs[0])} bytes each",
        )
    ]


SUITES = {
    "braid-relations": braid_relations,
    "classify": classify_suite,
    "orbit-counts": orbit_counts,
    "dn-orbits": dn_orbits,
    "h4-table": h4_table,
    "e-table": e_table,
    "h4-dets": h4_dets,
    "det-sweep": det_sweep,
    "realization": realization_suite,
    "quasicox": quasicox_suite,
    "minors": minors_suite,
    "determinism": determinism,
}
