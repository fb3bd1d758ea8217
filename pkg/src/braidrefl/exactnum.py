"""Exact arithmetic in cyclotomic number fields.

Every scalar that appears in an arrangement matrix of a reflection tuple in a
finite Coxeter group is of the form ``2*cos(pi*p/q)`` or a rational combination
of such values.  All of these live in cyclotomic fields, so we represent exact
numbers as elements of Q(zeta_m): a conductor ``m`` together with a vector of
``phi(m)`` rational coordinates in the power basis ``1, zeta, ..., zeta^(phi(m)-1)``
reduced modulo the m-th cyclotomic polynomial.

Elements are reduced to their minimal conductor on construction, which makes
equality, hashing and canonical encodings stable: two equal values always have
identical internal data.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath


def euler_phi(m: int) -> int:
    result = m
    p = 2
    n = m
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def divisors(m: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def _poly_divmod_int(num: list[int], den: list[int]) -> list[int]:
    """Quotient of exact integer polynomial division (ascending coeffs)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c:
            assert c % den[-1] == 0
            q[i] = c // den[-1]
            for j, dj in enumerate(den):
                num[i + j] -= q[i] * dj
    assert not any(num)
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of the m-th cyclotomic polynomial, ascending."""
    if m == 1:
        return (-1, 1)
    poly = [0] * m + [1]
    poly[0] = -1  # x^m - 1
    for d in divisors(m):
        if d < m:
            poly = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """x^k mod Phi_m for k = 0 .. max(m-1, 2*phi(m)-2), as integer rows."""
    d = euler_phi(m)
    phi = cyclotomic_polynomial(m)
    top = max(m - 1, 2 * d - 2)
    rows: list[tuple[int, ...]] = []
    cur = [0] * d
    cur[0] = 1
    rows.append(tuple(cur))
    for _ in range(top):
        nxt = [0] + cur[:-1]
        lead = cur[-1]
        if lead:
            for j in range(d):
                nxt[j] -= lead * phi[j]
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


def _reduce_exponent_vector(m: int, vec) -> list[Fraction]:
    """Reduce coordinates given on powers 0..len(vec)-1 into the power basis."""
    d = euler_phi(m)
    table = _power_table(m)
    out = [Fraction(0)] * d
    for k, c in enumerate(vec):
        if c:
            row = table[k]
            for j in range(d):
                if row[j]:
                    out[j] += c * row[j]
    return out


@lru_cache(maxsize=None)
def _promotion_matrix(d: int, m: int) -> tuple[tuple[int, ...], ...]:
    """Columns: coordinates of zeta_d^i in Q(zeta_m), for i < phi(d)."""
    assert m % d == 0
    step = m // d
    cols = []
    for i in range(euler_phi(d)):
        vec = [0] * m
        vec[(i * step) % m] = 1
        cols.append(tuple(int(c) for c in _reduce_exponent_vector(m, vec)))
    return tuple(cols)


@lru_cache(maxsize=None)
def _subfield_solver(d: int, m: int):
    """Row echelon data for solving P x = v with P the promotion matrix d -> m.

    Returns (rows, pivots) where rows are the echelonized rows of the augmented
    system's coefficient part and pivots the pivot column per row, for reuse on
    many right-hand sides.
    """
    cols = _promotion_matrix(d, m)
    nr, nc = euler_phi(m), euler_phi(d)
    # Build the matrix by rows, track the elimination as a sequence of
    # operations applied to an identity so we can replay on any rhs.
    a = [[Fraction(cols[j][i]) for j in range(nc)] for i in range(nr)]
    ops: list[tuple] = []
    pivots: list[tuple[int, int]] = []  # (row, col)
    row = 0
    for col in range(nc):
        sel = None
        for r in range(row, nr):
            if a[r][col]:
                sel = r
                break
        if sel is None:
            continue
        if sel != row:
            a[row], a[sel] = a[sel], a[row]
            ops.append(("swap", row, sel))
        inv = 1 / a[row][col]
        if inv != 1:
            a[row] = [x * inv for x in a[row]]
            ops.append(("scale", row, inv))
        for r in range(nr):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
                ops.append(("axpy", r, row, f))
        pivots.append((row, col))
        row += 1
    return ops, pivots, nr, nc


def _solve_subfield(d: int, m: int, rhs: list[Fraction]):
    """Solve for coordinates of an element of Q(zeta_m) in Q(zeta_d), or None."""
    ops, pivots, nr, nc = _subfield_solver(d, m)
    b = list(rhs)
    for op in ops:
        if op[0] == "swap":
            _, i, j = op
            b[i], b[j] = b[j], b[i]
        elif op[0] == "scale":
            _, i, f = op
            b[i] *= f
        else:
            _, i, j, f = op
            b[i] -= f * b[j]
    x = [Fraction(0)] * nc
    for row, col in pivots:
        x[col] = b[row]
    used = {row for row, _ in pivots}
    for r in range(nr):
        if r not in used and b[r]:
            return None
    return x


class ExactNumber:
    """An element of a cyclotomic field, stored at its minimal conductor.

    Immutable and hashable; all arithmetic returns new instances.
    """

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs, _reduced: bool = False):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if not _reduced:
            conductor, coeffs = _canonicalize(conductor, coeffs)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", hash((conductor, coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("ExactNumber is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_rational(r) -> "ExactNumber":
        return ExactNumber(1, (Fraction(r),), _reduced=True)

    @staticmethod
    def zero() -> "ExactNumber":
        return _ZERO

    @staticmethod
    def one() -> "ExactNumber":
        return _ONE

    @staticmethod
    def root_of_unity(m: int, k: int = 1) -> "ExactNumber":
        """zeta_m^k for zeta_m a primitive m-th root of unity."""
        vec = [0] * m
        vec[k % m] = 1
        return ExactNumber(m, _reduce_exponent_vector(m, vec))

    # -- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return self.conductor == 1 and self.coeffs[0] == 0

    def is_rational(self) -> bool:
        return self.conductor == 1

    def as_rational(self) -> Fraction:
        if self.conductor != 1:
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def galois(self, k: int) -> "ExactNumber":
        """Image under the automorphism zeta -> zeta^k, gcd(k, conductor) = 1."""
        m = self.conductor
        if m == 1:
            return self
        if gcd(k, m) != 1:
            raise ValueError(f"{k} not coprime to conductor {m}")
        vec = [Fraction(0)] * m
        for i, c in enumerate(self.coeffs):
            vec[(i * k) % m] += c
        return ExactNumber(m, _reduce_exponent_vector(m, vec))

    def conjugate(self) -> "ExactNumber":
        """Complex conjugate (zeta -> zeta^{-1})."""
        return self.galois(self.conductor - 1) if self.conductor > 1 else self

    def is_real(self) -> bool:
        return self.conjugate() == self

    # -- arithmetic -----------------------------------------------------

    def _promote_coeffs(self, m: int) -> list[Fraction]:
        if m == self.conductor:
            return list(self.coeffs)
        cols = _promotion_matrix(self.conductor, m)
        d = euler_phi(m)
        out = [Fraction(0)] * d
        for i, c in enumerate(self.coeffs):
            if c:
                col = cols[i]
                for j in range(d):
                    if col[j]:
                        out[j] += c * col[j]
        return out

    def promote(self, m: int) -> "ExactNumber":
        """Reinterpret at conductor m (self.conductor must divide m).

        The result reduces back to the same minimal form; exposed mostly for
        testing the promotion/reduction round trip.
        """
        if m % self.conductor:
            raise ValueError("target conductor must be a multiple")
        return ExactNumber(m, self._promote_coeffs(m))

    def __add__(self, other) -> "ExactNumber":
        other = _coerce(other)
        m = _lcm(self.conductor, other.conductor)
        a = self._promote_coeffs(m)
        b = other._promote_coeffs(m)
        return ExactNumber(m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> "ExactNumber":
        return ExactNumber(self.conductor, tuple(-c for c in self.coeffs),
                           _reduced=True)

    def __sub__(self, other) -> "ExactNumber":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "ExactNumber":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "ExactNumber":
        other = _coerce(other)
        if self.conductor == 1:
            r = self.coeffs[0]
            if r == 0:
                return _ZERO
            return ExactNumber(other.conductor,
                               tuple(r * c for c in other.coeffs),
                               _reduced=True)
        if other.conductor == 1:
            return other * self
        m = _lcm(self.conductor, other.conductor)
        a = self._promote_coeffs(m)
        b = other._promote_coeffs(m)
        d = euler_phi(m)
        conv = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        return ExactNumber(m, _reduce_exponent_vector(m, conv))

    __rmul__ = __mul__

    def inverse(self) -> "ExactNumber":
        """Multiplicative inverse via extended gcd with Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.conductor == 1:
            return ExactNumber.from_rational(1 / self.coeffs[0])
        m = self.conductor
        phi = [Fraction(c) for c in cyclotomic_polynomial(m)]
        a = list(self.coeffs)
        # xgcd(a, phi) = (g, s, _) with s*a = g mod phi, g a nonzero constant.
        r0, r1 = phi, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        t0, t1 = [Fraction(1)], [Fraction(0)]
        while any(r1):
            q, rem = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
            t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
        g = r0
        deg = _poly_deg(g)
        if deg != 0:
            raise ArithmeticError("element not invertible mod Phi_m")
        c = g[0]
        inv = [x / c for x in s0]
        return ExactNumber(m, _reduce_exponent_vector(m, inv))

    def __truediv__(self, other) -> "ExactNumber":
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other) -> "ExactNumber":
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "ExactNumber":
        if n < 0:
            return self.inverse() ** (-n)
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = _coerce(other)
        if not isinstance(other, ExactNumber):
            return NotImplemented
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- canonical encodings --------------------------------------------

    def sort_key(self):
        """Total order key; for rationals, positive values sort below negatives."""
        return (self.conductor,
                tuple((abs(c), 0 if c >= 0 else 1) for c in self.coeffs))

    def encoding(self) -> bytes:
        """Stable byte encoding of the canonical form, for hashing stores."""
        parts = [str(self.conductor)]
        parts.extend(f"{c.numerator}/{c.denominator}" for c in self.coeffs)
        return "|".join(parts).encode()

    def __repr__(self) -> str:
        return f"ExactNumber({self.conductor}, {list(self.coeffs)})"

    def __str__(self) -> str:
        try:
            return format_expr(self)
        except ValueError:
            return repr(self)

    # -- numeric embedding ----------------------------------------------

    def complex_value(self, prec: int = 53) -> complex:
        with mpmath.workprec(prec):
            z = mpmath.exp(2j * mpmath.pi / self.conductor)
            total = mpmath.mpc(0)
            for i, c in enumerate(self.coeffs):
                total += mpmath.mpf(c.numerator) / c.denominator * z ** i
            return complex(total)

    def __float__(self) -> float:
        if not self.is_real():
            raise ValueError("not a real number")
        return self.complex_value().real


def _canonicalize(m: int, coeffs: tuple) -> tuple[int, tuple]:
    d = euler_phi(m)
    assert len(coeffs) == d, (m, coeffs)
    if all(c == 0 for c in coeffs):
        return 1, (Fraction(0),)
    if m == 1:
        return 1, coeffs

    def galois_raw(k: int) -> tuple:
        vec = [Fraction(0)] * m
        for i, c in enumerate(coeffs):
            vec[(i * k) % m] += c
        return tuple(_reduce_exponent_vector(m, vec))

    # Find the minimal subfield conductor by Galois fixedness, then solve for
    # the coordinates once.
    for sub in divisors(m):
        if sub == m:
            break
        fixed = True
        for k in range(1 + sub, m, sub):
            if gcd(k, m) == 1 and galois_raw(k) != coeffs:
                fixed = False
                break
        if fixed:
            sol = _solve_subfield(sub, m, list(coeffs))
            assert sol is not None
            return sub, tuple(sol)
    return m, coeffs


def _coerce(x) -> ExactNumber:
    if isinstance(x, ExactNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return ExactNumber.from_rational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to ExactNumber")


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


# polynomial helpers over Fraction, ascending coefficients

def _poly_deg(p: list[Fraction]) -> int:
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return -1


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    d = _poly_deg(p)
    return p[: d + 1] if d >= 0 else [Fraction(0)]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _poly_trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _poly_trim(out)


def _poly_divmod_frac(a, b):
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    db = _poly_deg(b)
    if db < 0:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(len(a) - db, 1)
    r = list(a)
    while _poly_deg(r) >= db:
        dr = _poly_deg(r)
        f = r[dr] / b[db]
        q[dr - db] = f
        for i in range(db + 1):
            r[dr - db + i] -= f * b[i]
    return _poly_trim(q), _poly_trim(r)


_ZERO = ExactNumber(1, (Fraction(0),), _reduced=True)
_ONE = ExactNumber(1, (Fraction(1),), _reduced=True)


@lru_cache(maxsize=None)
def two_cos(p: int, q: int) -> ExactNumber:
    """The exact value 2*cos(pi*p/q), as zeta^p + zeta^{-p} at conductor 2q."""
    if q < 1:
        raise ValueError("q must be positive")
    m = 2 * q
    p %= m
    vec = [0] * m
    vec[p] += 1
    vec[(m - p) % m] += 1
    return ExactNumber(m, _reduce_exponent_vector(m, vec))


# -- sqrt of rationals via cyclotomic identities ------------------------

_SQRT_PRIMES = {
    2: lambda: two_cos(1, 4),
    3: lambda: two_cos(1, 6),
    5: lambda: two_cos(1, 5) * 2 - 1,
}


def sqrt_rational(r) -> ExactNumber:
    """sqrt(r) for nonnegative rational r whose squarefree part divides 30.

    Other radicands are rejected: the library only needs the square roots that
    occur in arrangement matrices of finite Coxeter groups.
    """
    r = Fraction(r)
    if r < 0:
        raise ValueError("negative radicand")
    if r == 0:
        return _ZERO
    n = r.numerator * r.denominator  # sqrt(r) = sqrt(n)/denominator
    square, free = 1, 1
    p = 2
    m = n
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        square *= p ** (e // 2)
        if e % 2:
            free *= p
        p += 1
    if m > 1:
        free *= m
    result = ExactNumber.from_rational(Fraction(square, r.denominator))
    for prime in (2, 3, 5):
        if free % prime == 0:
            free //= prime
            result = result * _SQRT_PRIMES[prime]()
    if free != 1:
        raise ValueError(
            f"sqrt({r}) is outside the supported cyclotomic values "
            f"(squarefree part {free} unsupported)")
    return result


# -- expression grammar -------------------------------------------------
#
# expr    := term (('+'|'-') term)*
# term    := rational | rational '*' cosatom | cosatom
# cosatom := '2cos(pi*' integer '/' integer ')' | 'sqrt(' rational ')'
# rational:= ['-'] digits ['/' digits]


class ExprError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, literal: str):
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise ExprError(f"expected {literal!r}", self.pos)
        self.pos += len(literal)

    def integer(self, signed: bool = True) -> int:
        self.skip_ws()
        start = self.pos
        if signed and self.peek() == "-":
            self.pos += 1
        if self.pos >= len(self.text) or not self.text[self.pos].isdigit():
            raise ExprError("expected integer", self.pos)
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start:self.pos])

    def rational(self, signed: bool = True) -> Fraction:
        num = self.integer(signed=signed)
        self.skip_ws()
        if self.text.startswith("/", self.pos):
            self.pos += 1
            den = self.integer(signed=False)
            if den == 0:
                raise ExprError("zero denominator", self.pos)
            return Fraction(num, den)
        return Fraction(num)

    def cosatom(self) -> ExactNumber:
        self.skip_ws()
        if self.text.startswith("2cos(pi*", self.pos):
            self.pos += len("2cos(pi*")
            p = self.integer()
            self.expect("/")
            q = self.integer(signed=False)
            if q == 0:
                raise ExprError("zero denominator in cosine", self.pos)
            self.expect(")")
            return two_cos(p, q)
        if self.text.startswith("sqrt(", self.pos):
            self.pos += len("sqrt(")
            r = self.rational(signed=False)
            self.expect(")")
            try:
                return sqrt_rational(r)
            except ValueError as exc:
                raise ExprError(str(exc), self.pos) from exc
        raise ExprError("expected '2cos(pi*...)' or 'sqrt(...)'", self.pos)

    def term(self) -> ExactNumber:
        self.skip_ws()
        c = self.peek()
        if c.isdigit() or c == "-":
            save = self.pos
            # "2cos(" starts with a digit; disambiguate.
            if self.text.startswith("2cos(pi*", self.pos):
                return self.cosatom()
            r = self.rational()
            self.skip_ws()
            if self.text.startswith("*", self.pos):
                self.pos += 1
                return ExactNumber.from_rational(r) * self.cosatom()
            # Guard: "2cos" after a sign, e.g. "-2cos(pi*1/3)".
            if self.text.startswith("cos", self.pos):
                self.pos = save
                raise ExprError("malformed cosine atom", self.pos)
            return ExactNumber.from_rational(r)
        return self.cosatom()

    def expr(self) -> ExactNumber:
        total = self.term()
        while True:
            self.skip_ws()
            if self.pos >= len(self.text):
                return total
            op = self.text[self.pos]
            if op == "+":
                self.pos += 1
                total = total + self.term()
            elif op == "-":
                self.pos += 1
                total = total - self.term()
            else:
                raise ExprError(f"unexpected character {op!r}", self.pos)


def parse_expr(text: str) -> ExactNumber:
    parser = _Parser(text)
    value = parser.expr()
    parser.skip_ws()
    if parser.pos != len(text):
        raise ExprError("trailing input", parser.pos)
    return value


@lru_cache(maxsize=None)
def _real_basis(m: int):
    """Basis of the real subfield of Q(zeta_m): 1 and 2cos(2*pi*j/m)."""
    if m == 1:
        return ((_ONE, "1"),)
    items = [(_ONE, "1")]
    for j in range(1, euler_phi(m) // 2 + 1):
        g = gcd(2 * j, m)
        items.append((two_cos(2 * j, m), f"2cos(pi*{2 * j // g}/{m // g})"))
    return tuple(items)


def format_expr(x: ExactNumber) -> str:
    """Render a real value in the expression grammar.

    Inverse of parse_expr up to canonical form; rejects non-real input.
    """
    if x.is_rational():
        return str(x.as_rational())
    if not x.is_real():
        raise ValueError("only real values have expression renderings")
    m = x.conductor
    basis = _real_basis(m)
    # Solve for rational coordinates in the real-subfield basis.
    columns = [b._promote_coeffs(m) for b, _ in basis]
    d = euler_phi(m)
    aug = [[columns[j][i] for j in range(len(basis))] + [x.coeffs[i]]
           for i in range(d)]
    coords = _solve_dense(aug, len(basis))
    assert coords is not None, "real element must lie in the real subfield"
    parts = []
    for c, (_, name) in zip(coords, basis):
        if c == 0:
            continue
        if name == "1":
            piece = str(c)
        elif c == 1:
            piece = name
        elif c == -1:
            piece = f"-1*{name}"
        else:
            piece = f"{c}*{name}"
        parts.append(piece)
    if not parts:
        return "0"
    out = parts[0]
    for piece in parts[1:]:
        out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return out


def _solve_dense(aug: list[list[Fraction]], ncols: int):
    """Solve the augmented system in place; None if inconsistent."""
    nr = len(aug)
    row = 0
    pivots = []
    for col in range(ncols):
        sel = next((r for r in range(row, nr) if aug[r][col]), None)
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [v * inv for v in aug[row]]
        for r in range(nr):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[row])]
        pivots.append((row, col))
        row += 1
    for r in range(row, nr):
        if aug[r][ncols]:
            return None
    sol = [Fraction(0)] * ncols
    for r, c in pivots:
        sol[c] = aug[r][ncols]
    return sol


def approx(x: ExactNumber, digits: int) -> str:
    """Correctly rounded decimal string with `digits` places after the point."""
    if digits < 1:
        raise ValueError("digits must be positive")
    if not x.is_real():
        raise ValueError("approx requires a real value")
    if x.is_rational():
        return _format_rational_decimal(x.as_rational(), digits)
    scale = 10 ** digits
    prec = 64
    while True:
        with mpmath.workprec(prec):
            z = mpmath.exp(2j * mpmath.pi / x.conductor)
            total = mpmath.mpc(0)
            size = mpmath.mpf(0)
            for i, c in enumerate(x.coeffs):
                total += mpmath.mpf(c.numerator) / c.denominator * z ** i
                size += abs(mpmath.mpf(c.numerator)) / c.denominator
            v = total.real * scale
            err = (size + 1) * scale * mpmath.mpf(2) ** (8 - prec)
            nearest = mpmath.nint(v)
            if abs(v - nearest) + err < mpmath.mpf(1) / 2:
                n = int(nearest)
                break
        prec *= 2
        if prec > 1 << 16:  # irrational values never tie, but stay safe
            raise ArithmeticError("approximation failed to converge")
    return _format_scaled(n, digits)


def _format_rational_decimal(r: Fraction, digits: int) -> str:
    scale = 10 ** digits
    scaled = r * scale
    n = scaled.numerator // scaled.denominator
    rem = scaled - n
    if rem > Fraction(1, 2) or (rem == Fraction(1, 2) and n % 2):
        n += 1  # round half to even
    return _format_scaled(n, digits)


def _format_scaled(n: int, digits: int) -> str:
    sign = "-" if n < 0 else ""
    n = abs(n)
    whole, frac = divmod(n, 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"
