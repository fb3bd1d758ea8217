"""Quasicoxeter elements and characteristic polynomial fingerprints.

The ordered product C = r_1 r_2 ... r_n of a tuple of reflections is
unchanged by the braid moves, so its conjugacy class separates orbits.
Writing B = U + V with U the strict upper triangle, the matrix of C in
the basis of the roots v_j is (I + U)^{-1}(I - V), defined for any B.

Characteristic polynomials of quasicoxeter elements in finite groups
factor into cyclotomic polynomials Phi_d (simply-laced crystallographic
cases) or additionally into real quadratics x^2 - 2cos(pi p/q) x + 1;
the fingerprint type records this factorization exactly.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arrangement import ArrangementMatrix
from .exactnum import ExactNumber, euler_phi, format_expr, two_cos
from .exactnum import cyclotomic_polynomial as cyclo_int
from .linalg import charpoly as _charpoly
from .linalg import identity, inverse, mat_eq, mat_mul, mat_sub

Matrix = list[list]


def split_UV(B: ArrangementMatrix) -> tuple[Matrix, Matrix]:
    """B = U + V with U strictly upper triangular, V the rest."""
    n = B.n
    zero = ExactNumber.zero()
    U = [[B.entries[i][j] if j > i else zero for j in range(n)] for i in range(n)]
    V = [[B.entries[i][j] if j <= i else zero for j in range(n)] for i in range(n)]
    return U, V


def cox_matrix(B: ArrangementMatrix) -> Matrix:
    """Matrix of r_1 r_2 ... r_n in the root basis: (I+U)^{-1}(I-V)."""
    U, V = split_UV(B)
    n = B.n
    eye = identity(n, ExactNumber.one())
    inv = inverse([[eye[i][j] + U[i][j] for j in range(n)] for i in range(n)])
    return mat_mul(inv, mat_sub(eye, V))


def charpoly(M: Matrix) -> list:
    """Monic characteristic polynomial det(xI - M), ascending coefficients."""
    return _charpoly(M)


def element_order(M: Matrix, cap: int = 1000) -> int | None:
    """Smallest N <= cap with M^N = I, or None when not periodic."""
    n = len(M)
    one = M[0][0] * 0 + 1
    eye = identity(n, one)
    power = [list(row) for row in M]
    for k in range(1, cap + 1):
        if mat_eq(power, eye):
            return k
        power = mat_mul(power, M)
    return None


@dataclass(frozen=True)
class CharPolyFingerprint:
    """Exact factorization data of a characteristic polynomial."""

    cyclotomic: tuple  # of (d, multiplicity), d ascending
    quadratic: tuple  # of (p, q): factor x^2 - 2cos(pi p/q) x + 1, p/q ascending
    residual: tuple | None  # leftover polynomial coefficients, or None

    def to_json(self) -> str:
        res = None
        if self.residual is not None:
            res = [format_expr(c) for c in self.residual]
        return json.dumps(
            {
                "cyclotomic": [list(x) for x in self.cyclotomic],
                "quadratic": [list(x) for x in self.quadratic],
                "residual": res,
            }
        )

    def key(self) -> tuple:
        res = None
        if self.residual is not None:
            res = tuple(c.encoding() for c in self.residual)
        return (self.cyclotomic, self.quadratic, res)

    def reassemble(self) -> list:
        """Multiply the factors back out (ascending coefficients)."""
        poly = [ExactNumber.one()]
        for d, mult in self.cyclotomic:
            factor = [ExactNumber.from_rational(c) for c in cyclo_int(d)]
            for _ in range(mult):
                poly = _poly_mul(poly, factor)
        for p, q in self.quadratic:
            factor = [ExactNumber.one(), -two_cos(p, q), ExactNumber.one()]
            poly = _poly_mul(poly, factor)
        if self.residual is not None:
            poly = _poly_mul(poly, list(self.residual))
        return poly

    def implied_order(self) -> int | None:
        """lcm of root orders when there is no residual part."""
        if self.residual is not None:
            return None
        acc = 1
        for d, _ in self.cyclotomic:
            acc = acc * d // gcd(acc, d)
        for p, q in self.quadratic:
            # roots exp(+-i pi p/q) have order 2q/gcd(p, 2q)
            d = 2 * q // gcd(p, 2 * q)
            acc = acc * d // gcd(acc, d)
        return acc


def _as_exact(c) -> ExactNumber:
    if isinstance(c, ExactNumber):
        return c
    return ExactNumber.from_rational(c)


def _poly_mul(a: list, b: list) -> list:
    zero = ExactNumber.zero()
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _poly_divide(num: list, den: list) -> list | None:
    """Exact division of polynomials (ascending coeffs); None if remainder."""
    num = list(num)
    dn = len(den) - 1
    if len(num) - 1 < dn:
        return None
    lead_inv = den[-1].inverse()
    quot = [ExactNumber.zero()] * (len(num) - dn)
    for k in range(len(num) - 1 - dn, -1, -1):
        c = num[k + dn] * lead_inv
        quot[k] = c
        if not c.is_zero():
            for j in range(dn + 1):
                num[k + j] = num[k + j] - c * den[j]
    if any(not x.is_zero() for x in num[:dn]):
        return None
    return quot


def cyclo_fingerprint(
    p: list, max_d: int = 1000, max_q: int = 120
) -> CharPolyFingerprint:
    """Factor a monic polynomial into cyclotomic and 2cos-quadratic parts.

    Divides out Phi_d greedily for d ascending with phi(d) <= deg, then
    quadratics x^2 - 2cos(pi p/q) x + 1 in increasing p/q; whatever
    remains is reported verbatim.
    """
    poly = [_as_exact(c) for c in p]
    if poly[-1] != 1:
        raise ValueError("polynomial must be monic")
    deg = len(poly) - 1
    cyc = []
    for d in range(1, max_d + 1):
        if euler_phi(d) > len(poly) - 1:
            continue
        factor = [ExactNumber.from_rational(c) for c in cyclo_int(d)]
        mult = 0
        while len(poly) > 1:
            quot = _poly_divide(poly, factor)
            if quot is None:
                break
            poly = quot
            mult += 1
        if mult:
            cyc.append((d, mult))
        if len(poly) == 1:
            break
    quad = []
    if len(poly) > 2:
        # numerically locate unit-circle root pairs e^{+-i pi p/q}, guess
        # p/q with bounded denominator, then verify the division exactly
        for f in sorted(set(_quad_candidates(poly, max_q))):
            factor = [
                ExactNumber.one(),
                -two_cos(f.numerator, f.denominator),
                ExactNumber.one(),
            ]
            while len(poly) > 2:
                quot = _poly_divide(poly, factor)
                if quot is None:
                    break
                poly = quot
                quad.append((f.numerator, f.denominator))
            if len(poly) == 1:
                break
    residual = None if len(poly) == 1 else tuple(poly)
    return CharPolyFingerprint(tuple(cyc), tuple(sorted(
        quad, key=lambda pq: Fraction(pq[0], pq[1]))), residual)


def _quad_candidates(poly: list, max_q: int) -> list[Fraction]:
    import math

    import numpy as np

    coeffs = [complex(c.complex_value(60)) for c in reversed(poly)]
    out = []
    for z in np.roots(coeffs):
        if abs(abs(z) - 1) > 1e-6:
            continue
        theta = math.atan2(z.imag, z.real)
        f = Fraction(abs(theta) / math.pi).limit_denominator(max_q)
        if 0 < f < 1:
            out.append(f)
    return out


def quasicox_of_tuple(matrices: list[Matrix]) -> Matrix:
    """Ordered product r_1 r_2 ... r_n of reflection matrices."""
    acc = matrices[0]
    for m in matrices[1:]:
        acc = mat_mul(acc, m)
    return acc


def quasicox_degenerate(B: ArrangementMatrix, realization) -> Matrix:
    """Quasicoxeter operator in a realization's coordinates.

    Evaluates C = 1 - sum_{i,j} (I+U)^{-1}_{ji} v_j (x) v_i^ directly
    from the realization's vectors and covectors, which is valid in any
    basis and for any rank.  In the basis where the independent
    covectors are coordinate functionals this reduces to the block form:
    I - B b'(I+U)^{-1}a' on the vector part, identity on the
    complementary part, with coupling -b'(I+U)^{-1}a'.
    """
    U, _ = split_UV(B)
    n = B.n
    one = ExactNumber.one()
    eye = identity(n, one)
    K = inverse([[eye[i][j] + U[i][j] for j in range(n)] for i in range(n)])
    dim = realization.dim
    out = identity(dim, one)
    for i in range(n):
        for j in range(n):
            c = K[j][i]
            if c.is_zero():
                continue
            v = realization.vectors[j]
            f = realization.covectors[i]
            for r in range(dim):
                vr = v[r]
                if vr.is_zero():
                    continue
                for s in range(dim):
                    out[r][s] = out[r][s] - c * vr * f[s]
    return out
