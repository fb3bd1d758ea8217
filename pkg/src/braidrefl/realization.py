"""Reconstructing reflections from an arrangement matrix.

An arrangement of reflections is a family of vector/covector pairs
(v_i, v_i^) with v_i^(v_i) = 2; the reflection r_i maps x to
x - v_i^(x) v_i and the matrix of pairings v_i^(v_j) is the
arrangement matrix B.  This module rebuilds such families from B:

* unique_realization - the single n-dimensional arrangement of an
  invertible B (reflections differ from the identity in one row).
* minimal_realization - the rank(B)-dimensional arrangement over a
  maximal non-degenerate principal minor.
* general_realization - the full family for degenerate B, parameterized
  by the choice of independent vectors/covectors and free constants.
* degenerate_3x3 - the two-angle family of singular 3x3 matrices and
  the induced braid action on the angle parameters.
* is_redundant - whether one reflection lies in the group generated by
  the others in the minimal realization.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .arrangement import ArrangementMatrix
from .exactnum import ExactNumber, format_expr, two_cos
from .linalg import (
    det,
    identity,
    inverse,
    mat_mul,
    nullspace,
    principal_minor,
    rank,
    submatrix,
)

import json


def _exact(x) -> ExactNumber:
    return x if isinstance(x, ExactNumber) else ExactNumber.from_rational(x)


@dataclass(frozen=True)
class Realization:
    """Vectors and covectors realizing an arrangement matrix.

    Coordinates live in a space of dimension `dim`; `vectors[j]` holds
    the coordinates of v_j and `covectors[i]` the coordinates of the
    functional v_i^ in the dual basis.  The index bookkeeping records
    which rows/columns were taken as independent (`I`, `J`) and which
    extra indices were declared independent (`I_extra`, `J_extra`).
    """

    dim: int
    vectors: tuple
    covectors: tuple
    I: tuple = ()
    J: tuple = ()
    I_extra: tuple = ()
    J_extra: tuple = ()

    @property
    def n(self) -> int:
        return len(self.vectors)

    def pairing(self, i: int, j: int) -> ExactNumber:
        acc = ExactNumber.zero()
        for a, b in zip(self.covectors[i], self.vectors[j]):
            acc = acc + a * b
        return acc

    def reflection(self, i: int) -> list:
        """Matrix of r_i : x -> x - v_i^(x) v_i in the coordinates."""
        v, f = self.vectors[i], self.covectors[i]
        eye = identity(self.dim, ExactNumber.one())
        return [
            [eye[r][c] - v[r] * f[c] for c in range(self.dim)]
            for r in range(self.dim)
        ]

    def reflections(self) -> list:
        return [self.reflection(i) for i in range(self.n)]

    def gram(self) -> ArrangementMatrix:
        return ArrangementMatrix(
            [[self.pairing(i, j) for j in range(self.n)] for i in range(self.n)]
        )

    def is_minimal(self) -> bool:
        """Every vector annihilated by all covectors lies in span(v_j)."""
        kernel = nullspace([list(f) for f in self.covectors])
        span = [list(v) for v in self.vectors]
        base_rank = rank(span)
        return rank(span + kernel) == base_rank

    def to_json(self) -> str:
        return json.dumps(
            {
                "dim": self.dim,
                "vectors": [[format_expr(x) for x in v] for v in self.vectors],
                "covectors": [
                    [format_expr(x) for x in f] for f in self.covectors
                ],
                "reflections": [
                    [[format_expr(x) for x in row] for row in self.reflection(i)]
                    for i in range(self.n)
                ],
            }
        )


def _check_gram(real: Realization, B: ArrangementMatrix) -> Realization:
    for i in range(B.n):
        for j in range(B.n):
            if real.pairing(i, j) != B.entries[i][j]:
                raise ValueError(
                    f"construction failed to recover entry ({i + 1},{j + 1})"
                )
    return real


def unique_realization(B: ArrangementMatrix) -> Realization:
    """The one n-dimensional arrangement of an invertible matrix.

    In the basis of the vectors v_j each reflection r_j differs from the
    identity only in row j, which is (standard row j) - (row j of B).
    """
    rows = B.rows()
    if det(rows).is_zero():
        raise ValueError("unique realization requires an invertible matrix")
    n = B.n
    one, zero = ExactNumber.one(), ExactNumber.zero()
    vectors = tuple(
        tuple(one if r == j else zero for r in range(n)) for j in range(n)
    )
    covectors = tuple(tuple(rows[i]) for i in range(n))
    return _check_gram(
        Realization(n, vectors, covectors, I=tuple(range(n)), J=tuple(range(n))),
        B,
    )


def _first_nondegenerate_minor(rows, r):
    for idx in combinations(range(len(rows)), r):
        if not det(principal_minor(rows, idx)).is_zero():
            return idx
    raise ValueError("no non-degenerate principal minor of full rank")


def minimal_realization(B: ArrangementMatrix) -> Realization:
    """Arrangement in dimension rank(B) over a principal-minor basis.

    The basis vectors are {v_i} for i in the lexicographically first
    index set carrying a non-degenerate principal minor of size rank(B);
    the other vectors get coordinates B_I^{-1} B_{I,j}.
    """
    rows = B.rows()
    n = B.n
    r = rank(rows)
    idx = _first_nondegenerate_minor(rows, r)
    inv = inverse(principal_minor(rows, idx))
    one, zero = ExactNumber.one(), ExactNumber.zero()
    vectors = []
    for j in range(n):
        if j in idx:
            vectors.append(
                tuple(one if idx[p] == j else zero for p in range(r))
            )
        else:
            col = [rows[i][j] for i in idx]
            vectors.append(
                tuple(
                    sum((inv[p][q] * col[q] for q in range(r)),
                        ExactNumber.zero())
                    for p in range(r)
                )
            )
    covectors = tuple(tuple(rows[i][k] for k in idx) for i in range(n))
    return _check_gram(
        Realization(r, tuple(vectors), covectors, I=idx, J=idx), B
    )


def general_realization(
    B: ArrangementMatrix,
    I2=None,
    J2=None,
    a_free=None,
    b_free=None,
) -> Realization:
    """Arrangement with declared independent covectors (I2) and vectors (J2).

    I2 must contain a row basis of B and J2 a column basis; beyond those
    the covectors indexed by I2 and the vectors indexed by J2 are
    declared linearly independent.  The remaining ones are linear
    combinations; their coefficients on the extra independent indices
    are the free constants a_free (shape (n-|I2|) x (|I2|-rank)) and
    b_free (shape (|J2|-rank) x (n-|J2|)), rows/columns ordered by
    ascending index.  Defaults: all indices independent, all constants
    zero.
    """
    rows = B.rows()
    n = B.n
    r = rank(rows)
    I2 = tuple(sorted(range(n) if I2 is None else I2))
    J2 = tuple(sorted(range(n) if J2 is None else J2))
    if any(i < 0 or i >= n for i in I2 + J2):
        raise ValueError("index sets out of range")
    if len(I2) == len(J2) == n and r == n:
        return unique_realization(B)

    # row basis inside I2, column basis inside J2 with invertible block
    I = next(
        (
            c
            for c in combinations(I2, r)
            if rank([rows[i] for i in c]) == r
        ),
        None,
    )
    if I is None:
        raise ValueError("I2 does not contain a row basis")
    J = next(
        (
            c
            for c in combinations(J2, r)
            if not det(submatrix(rows, I, c)).is_zero()
        ),
        None,
    )
    if J is None:
        raise ValueError("J2 does not contain a compatible column basis")
    Ix = tuple(i for i in I2 if i not in I)  # extra independent covectors
    Jx = tuple(j for j in J2 if j not in J)  # extra independent vectors
    out_I = [i for i in range(n) if i not in I2]
    out_J = [j for j in range(n) if j not in J2]
    block_inv = inverse(submatrix(rows, I, J))

    def row_coeffs(i):
        # B_{i,.} = sum over I of a[i1] B_{i1,.}
        vec = [rows[i][j] for j in J]
        return [
            sum((vec[q] * block_inv[q][p] for q in range(r)),
                ExactNumber.zero())
            for p in range(r)
        ]

    def col_coeffs(j):
        vec = [rows[i][j] for i in I]
        return [
            sum((block_inv[p][q] * vec[q] for q in range(r)),
                ExactNumber.zero())
            for p in range(r)
        ]

    if a_free is None:
        a_free = [[0] * len(Ix) for _ in out_I]
    if b_free is None:
        b_free = [[0] * len(out_J) for _ in Jx]
    if len(a_free) != len(out_I) or any(len(row) != len(Ix) for row in a_free):
        raise ValueError("a_free must have shape (n-|I2|) x (|I2|-rank)")
    if len(b_free) != len(Jx) or any(
        len(row) != len(out_J) for row in b_free
    ):
        raise ValueError("b_free must have shape (|J2|-rank) x (n-|J2|)")

    dim = len(I2) + len(Jx)
    one, zero = ExactNumber.one(), ExactNumber.zero()
    upos = {i: p for p, i in enumerate(I2)}
    wpos = {k: len(I2) + p for p, k in enumerate(Jx)}

    # covectors: basis functionals on I2; dependent ones combine them
    covectors = [None] * n
    for i in I2:
        covectors[i] = tuple(
            one if c == upos[i] else zero for c in range(dim)
        )
    for row_no, i in enumerate(out_I):
        a_row = row_coeffs(i)  # coefficients on I
        free = [_exact(x) for x in a_free[row_no]]  # coefficients on Ix
        dep = list(a_row)
        for t, i1 in enumerate(Ix):
            a1 = row_coeffs(i1)
            for p in range(r):
                dep[p] = dep[p] - free[t] * a1[p]
        coeff = {i1: dep[p] for p, i1 in enumerate(I)}
        coeff.update({i1: free[t] for t, i1 in enumerate(Ix)})
        covectors[i] = tuple(
            sum(
                (coeff[i1] * covectors[i1][c] for i1 in I2),
                ExactNumber.zero(),
            )
            for c in range(dim)
        )

    # vectors: v_j for j in J carry the full column of B on the u-part
    vectors = [None] * n
    for j in J:
        vec = [zero] * dim
        for i in I2:
            vec[upos[i]] = rows[i][j]
        vectors[j] = tuple(vec)
    for j in Jx:
        b_col = col_coeffs(j)
        vec = [zero] * dim
        for p, j1 in enumerate(J):
            for c in range(dim):
                vec[c] = vec[c] + b_col[p] * vectors[j1][c]
        vec[wpos[j]] = vec[wpos[j]] + one
        vectors[j] = tuple(vec)
    for col_no, j in enumerate(out_J):
        b_col = col_coeffs(j)  # coefficients on J
        free = [_exact(b_free[t][col_no]) for t in range(len(Jx))]
        dep = list(b_col)
        for t, j2 in enumerate(Jx):
            b2 = col_coeffs(j2)
            for p in range(r):
                dep[p] = dep[p] - b2[p] * free[t]
        coeff = {j1: dep[p] for p, j1 in enumerate(J)}
        coeff.update({j2: free[t] for t, j2 in enumerate(Jx)})
        vec = [zero] * dim
        for j1 in J2:
            for c in range(dim):
                vec[c] = vec[c] + coeff[j1] * vectors[j1][c]
        vectors[j] = tuple(vec)

    return _check_gram(
        Realization(
            dim,
            tuple(vectors),
            tuple(covectors),
            I=I,
            J=J,
            I_extra=Ix,
            J_extra=Jx,
        ),
        B,
    )


# -- the two-angle family of singular 3x3 matrices ---------------------------


def _angle_cos(a: Fraction) -> ExactNumber:
    a = a % 2
    return two_cos(a.numerator, a.denominator)


def degenerate_3x3(alpha: Fraction, beta: Fraction) -> ArrangementMatrix:
    """Singular 3x3 matrix with off-diagonals 2cos(a), 2cos(b), 2cos(a-b).

    Angles are rational multiples of pi given as plain fractions (the
    multiplier), taken modulo 2.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    two = ExactNumber.from_rational(2)
    a = _angle_cos(alpha)
    b = _angle_cos(beta)
    c = _angle_cos(alpha - beta)
    return ArrangementMatrix([[two, a, b], [a, two, c], [b, c, two]])


def params_of_degenerate(B: ArrangementMatrix):
    """Recover (alpha, beta) from a matrix of the two-angle family.

    Returns a pair of fractions (multiples of pi, modulo 2), or None if
    the matrix is not of that form.
    """
    from .orbits import entry_angle

    if B.n != 3:
        raise ValueError("the family is 3x3")
    a0 = entry_angle(B.entries[0][1])
    b0 = entry_angle(B.entries[0][2])
    if a0 is None or b0 is None:
        return None
    for alpha in {a0, (2 - a0) % 2}:
        for beta in {b0, (2 - b0) % 2}:
            if _angle_cos(alpha - beta) == B.entries[1][2]:
                return (alpha % 2, beta % 2)
    return None


def braid_on_params(params, i: int, exp: int = 1):
    """The braid moves on the family's angle pair, modulo 2 (units of pi).

    sigma_1: (a, b) -> (a, a+b); sigma_2: (a, b) -> (2a-b, a).  These
    are the maps the matrix-level moves induce after sign
    normalization; they satisfy the braid relation as linear maps.
    """
    a, b = Fraction(params[0]), Fraction(params[1])
    if i == 1:
        a, b = (a, (a + b) % 2) if exp >= 0 else (a, (b - a) % 2)
    elif i == 2:
        a, b = ((2 * a - b) % 2, a) if exp >= 0 else (b, (2 * b - a) % 2)
    else:
        raise ValueError("generator index must be 1 or 2")
    return (a, b)


# -- redundancy --------------------------------------------------------------


def _ray(vec):
    """Projective normalization: scale so the first nonzero entry is 1."""
    lead = next((x for x in vec if not x.is_zero()), None)
    if lead is None:
        raise ValueError("zero vector has no ray")
    inv = lead.inverse()
    return tuple(inv * x for x in vec)


def root_closure_vectors(real: Realization, indices, budget: int = 10**4):
    """Rays of the root closure of the chosen reflections' vectors.

    Repeatedly applies the chosen reflections to the accumulated root
    rays until closed; raises if more than `budget` rays appear.
    """
    mats = [real.reflection(i) for i in indices]
    rays = {_ray(real.vectors[i]) for i in indices}
    frontier = list(rays)
    while frontier:
        nxt = []
        for v in frontier:
            for m in mats:
                img = _ray(
                    tuple(
                        sum(
                            (m[r][c] * v[c] for c in range(real.dim)),
                            ExactNumber.zero(),
                        )
                        for r in range(real.dim)
                    )
                )
                if img not in rays:
                    if len(rays) >= budget:
                        raise ValueError(
                            f"root closure exceeded budget {budget}"
                        )
                    rays.add(img)
                    nxt.append(img)
        frontier = nxt
    return rays


def is_redundant(B: ArrangementMatrix, i: int, budget: int = 10**4) -> bool:
    """Whether reflection i lies in the group the others generate.

    Works in the minimal realization: a reflection belongs to the
    subgroup generated by the other reflections exactly when its root
    ray lies in the closure of their roots under that subgroup.
    """
    if not 0 <= i < B.n:
        raise ValueError("index out of range")
    real = minimal_realization(B)
    others = [j for j in range(B.n) if j != i]
    rays = root_closure_vectors(real, others, budget)
    return _ray(real.vectors[i]) in rays


def evaluate_word(real: Realization, indices) -> list:
    """Product of the realization's reflections, leftmost factor first.

    Indices are 1-based, matching the labels r_1, ..., r_n.
    """
    acc = identity(real.dim, ExactNumber.one())
    for i in indices:
        acc = mat_mul(acc, real.reflection(i - 1))
    return acc


def generated_group(mats, cap: int = 10**6):
    """All products of the given exact matrices; raises beyond cap."""
    def key(m):
        return tuple(tuple(row) for row in m)

    n = len(mats[0])
    eye = identity(n, ExactNumber.one())
    seen = {key(eye): eye}
    frontier = [eye]
    while frontier:
        nxt = []
        for g in frontier:
            for m in mats:
                h = mat_mul(g, m)
                k = key(h)
                if k not in seen:
                    if len(seen) >= cap:
                        raise ValueError(f"group order exceeds cap {cap}")
                    seen[k] = h
                    nxt.append(h)
        frontier = nxt
    return list(seen.values())
