"""Exact linear algebra over duck-typed scalars.

Matrices are lists of lists whose entries support +, -, *, and either
/ or .inverse(); Fraction, int, and ExactNumber all work.  Everything
here is written for small dense matrices (rank <= 10 or so), where
exact Gaussian elimination and the division-free Berkowitz charpoly
are entirely adequate.
"""

from fractions import Fraction
from typing import Sequence

Matrix = list[list]


def _zero_like(x):
    return x * 0


def _is_zero(x) -> bool:
    try:
        return x.is_zero()
    except AttributeError:
        return x == 0


def _inv(x):
    try:
        return x.inverse()
    except AttributeError:
        return Fraction(1) / x


def identity(n: int, one=Fraction(1)) -> Matrix:
    zero = _zero_like(one)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_copy(a: Matrix) -> Matrix:
    return [list(row) for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c) -> Matrix:
    return [[c * x for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    bt = transpose(b)
    return [[_dot(row, col) for col in bt] for row in a]


def _dot(u: Sequence, v: Sequence):
    acc = u[0] * v[0]
    for x, y in zip(u[1:], v[1:]):
        acc = acc + x * y
    return acc


def mat_vec(a: Matrix, v: Sequence) -> list:
    return [_dot(row, v) for row in a]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
        for ra, rb in zip(a, b)
    )


def _elim(a: Matrix):
    """Row-reduce a copy; return (echelon rows, pivot cols, det, swaps).

    det is the product of pivots with sign, valid only when the matrix is
    square; for rectangular input only rank data is meaningful.
    """
    m = mat_copy(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    sign = 1
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not _is_zero(m[i][c])), None)
        if pivot is None:
            continue
        if pivot != r:
            m[r], m[pivot] = m[pivot], m[r]
            sign = -sign
        inv = _inv(m[r][c])
        for i in range(r + 1, rows):
            if _is_zero(m[i][c]):
                continue
            factor = m[i][c] * inv
            m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots, sign


def rank(a: Matrix) -> int:
    if not a:
        return 0
    _, pivots, _ = _elim(a)
    return len(pivots)


def det(a: Matrix):
    n = len(a)
    if n == 0:
        return Fraction(1)
    m, pivots, sign = _elim(a)
    zero = _zero_like(a[0][0])
    if len(pivots) < n:
        return zero
    acc = m[0][pivots[0]]
    for r in range(1, n):
        acc = acc * m[r][pivots[r]]
    return acc if sign == 1 else -acc


def solve(a: Matrix, b: Sequence) -> list | None:
    """Solve the square system a x = b exactly; None if singular."""
    n = len(a)
    m = [list(row) + [b[i]] for i, row in enumerate(a)]
    red, pivots, _ = _elim(m)
    if len(pivots) < n or pivots[:n] != list(range(n)):
        return None
    x = [None] * n
    for i in range(n - 1, -1, -1):
        acc = red[i][n]
        for j in range(i + 1, n):
            acc = acc - red[i][j] * x[j]
        x[i] = acc * _inv(red[i][i])
    return x


def inverse(a: Matrix) -> Matrix | None:
    """Exact inverse of a square matrix; None if singular."""
    n = len(a)
    one = a[0][0] * 0 + 1 if n else Fraction(1)
    aug = [list(row) + identity(n, one)[i] for i, row in enumerate(a)]
    red, pivots, _ = _elim(aug)
    if len(pivots) < n or pivots[:n] != list(range(n)):
        return None
    inv = [[None] * n for _ in range(n)]
    for col in range(n):
        for i in range(n - 1, -1, -1):
            acc = red[i][n + col]
            for j in range(i + 1, n):
                acc = acc - red[i][j] * inv[j][col]
            inv[i][col] = acc * _inv(red[i][i])
    return inv


def nullspace(a: Matrix) -> list:
    """Basis of the right kernel {x : a x = 0}, one list per basis vector."""
    if not a:
        return []
    rows, cols = len(a), len(a[0])
    red, pivots, _ = _elim(a)
    one = a[0][0] * 0 + 1
    zero = one * 0
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        x = [zero] * cols
        x[f] = one
        # back-substitute through the echelon rows
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            acc = zero
            for j in range(c + 1, cols):
                acc = acc + red[r][j] * x[j]
            x[c] = -acc * _inv(red[r][c])
        basis.append(x)
    return basis


def charpoly(a: Matrix) -> list:
    """Characteristic polynomial det(xI - a), coefficients ascending in x.

    Uses the Berkowitz algorithm: division-free, so it is valid over any
    commutative ring the entries live in.  The leading coefficient is 1.
    """
    n = len(a)
    one = a[0][0] * 0 + 1 if n else Fraction(1)
    zero = one * 0
    if n == 0:
        return [one]
    # p holds det(xI - A_r) for the leading r x r block, descending degree
    p = [one, a[0][0] * -1]
    for r in range(1, n):
        row = a[r][:r]
        col = [a[i][r] for i in range(r)]
        block = [a[i][:r] for i in range(r)]
        # Samuelson step as a truncated convolution with
        # q = [1, -a_rr, -(R C), -(R A C), ..., -(R A^{r-1} C)]
        q = [one, a[r][r] * -1]
        vec = col
        for _ in range(r):
            q.append(_dot(row, vec) * -1)
            vec = mat_vec(block, vec)
        new = [zero] * (r + 2)
        for i in range(r + 2):
            acc = zero
            for j in range(max(0, i - r - 1), min(i, r) + 1):
                acc = acc + q[i - j] * p[j]
            new[i] = acc
        p = new
    p.reverse()
    return p


def poly_eval(coeffs: Sequence, x):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def principal_minor(a: Matrix, idx: Sequence[int]) -> Matrix:
    return [[a[i][j] for j in idx] for i in idx]


def submatrix(a: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return [[a[i][j] for j in cols] for i in rows]
