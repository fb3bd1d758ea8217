"""Exact root systems and named arrangement matrices for finite Coxeter types.

Root coordinates are exact: rational vectors for the crystallographic
types A, B, D, E, F; vectors over Q(sqrt 5) for H_3 and H_4; and unit
vectors at angles pi k/m for the dihedral types I_2(m).  Each system
carries the full reflection table (the permutation every reflection
induces on the roots), which drives closure computations, subsystem
identification, and the orbit engines.

The module also builds the complete-graph style matrices Gamma_0(A_n),
Gamma_0(B_n), Gamma_0(D_n), the bordered extension families with their
closed-form determinants, and the same-rank subsystem inclusion table.
"""

import itertools
import json
import re
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .arrangement import ArrangementMatrix
from .exactnum import ExactNumber, sqrt_rational
from .linalg import rank as _rank

_HALF = Fraction(1, 2)
_PHI = (_HALF, _HALF)  # (1 + sqrt5)/2 as a pair (a, b) <-> a + b sqrt5
_PHI_INV = (-_HALF, _HALF)


def _parse_label(label: str) -> tuple[str, int]:
    s = label.replace("_", "").replace(" ", "")
    m = re.fullmatch(r"I2\((\d+)\)", s)
    if m:
        n = int(m.group(1))
        if n < 3:
            raise ValueError(f"I2({n}) not supported")
        return "I", n
    m = re.fullmatch(r"([ABDEFH])(\d+)", s)
    if not m:
        raise ValueError(f"bad type label {label!r}")
    kind, n = m.group(1), int(m.group(2))
    limits = {"A": n >= 1, "B": n >= 2, "D": n >= 3,
              "E": n in (6, 7, 8), "F": n == 4, "H": n in (3, 4)}
    if not limits[kind]:
        raise ValueError(f"bad rank {n} for type {kind}")
    return kind, n


# -- pair arithmetic for a + b sqrt5 -----------------------------------------


def _p_mul(x, y):
    return (x[0] * y[0] + 5 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _p_dot(u, v):
    a = b = Fraction(0)
    for x, y in zip(u, v):
        a += x[0] * y[0] + 5 * x[1] * y[1]
        b += x[0] * y[1] + x[1] * y[0]
    return (a, b)


# -- root coordinate constructions -------------------------------------------


def _signed(vec):
    """All sign choices on the nonzero entries of vec."""
    idx = [i for i, x in enumerate(vec) if x]
    out = []
    for signs in itertools.product((1, -1), repeat=len(idx)):
        w = list(vec)
        for i, s in zip(idx, signs):
            w[i] = s * w[i]
        out.append(tuple(w))
    return out


def _unit(dim, i, val=Fraction(1)):
    v = [Fraction(0)] * dim
    v[i] = val
    return v


def _crys_roots(kind: str, n: int) -> list[tuple]:
    roots = []
    if kind == "A":
        dim = n + 1
        for i in range(dim):
            for j in range(dim):
                if i != j:
                    v = _unit(dim, i)
                    v[j] = Fraction(-1)
                    roots.append(tuple(v))
    elif kind in ("B", "D"):
        for i in range(n):
            for j in range(i + 1, n):
                v = _unit(n, i)
                v[j] = Fraction(1)
                roots.extend(_signed(tuple(v)))
        if kind == "B":
            for i in range(n):
                roots.extend(_signed(tuple(_unit(n, i))))
    elif kind == "F":
        for i in range(4):
            roots.extend(_signed(tuple(_unit(4, i))))
        for i in range(4):
            for j in range(i + 1, 4):
                v = _unit(4, i)
                v[j] = Fraction(1)
                roots.extend(_signed(tuple(v)))
        roots.extend(_signed((_HALF,) * 4))
    elif kind == "E":
        for i in range(8):
            for j in range(i + 1, 8):
                v = _unit(8, i)
                v[j] = Fraction(1)
                roots.extend(_signed(tuple(v)))
        for signs in itertools.product((_HALF, -_HALF), repeat=8):
            if sum(1 for s in signs if s < 0) % 2 == 0:
                roots.append(signs)
    else:  # pragma: no cover
        raise ValueError(kind)
    return roots


def _e8_simple_roots() -> list[tuple]:
    a1 = (_HALF, -_HALF, -_HALF, -_HALF, -_HALF, -_HALF, -_HALF, _HALF)
    a2 = (Fraction(1), Fraction(1)) + (Fraction(0),) * 6
    out = [a1, a2]
    for k in range(6):
        v = _unit(8, k, Fraction(-1))
        v[k + 1] = Fraction(1)
        out.append(tuple(v))
    return out


def _h_roots(n: int) -> list[tuple]:
    zero = (Fraction(0), Fraction(0))

    def p(x):
        return (Fraction(x), Fraction(0))

    roots = []
    if n == 3:
        for i in range(3):
            base = [zero] * 3
            base[i] = p(2)
            roots.extend(_signed_pairs(tuple(base)))
        for cyc in range(3):
            base = [p(1), _PHI, _PHI_INV]
            base = base[-cyc:] + base[:-cyc]
            roots.extend(_signed_pairs(tuple(base)))
    else:
        for i in range(4):
            base = [zero] * 4
            base[i] = p(2)
            roots.extend(_signed_pairs(tuple(base)))
        roots.extend(_signed_pairs((p(1),) * 4))
        pattern = [zero, _PHI_INV, p(1), _PHI]
        for perm in itertools.permutations(range(4)):
            if _perm_parity(perm) == 1:
                continue
            base = tuple(pattern[k] for k in perm)
            roots.extend(_signed_pairs(base))
    return sorted(set(roots))


def _signed_pairs(vec):
    idx = [i for i, x in enumerate(vec) if x != (0, 0)]
    out = []
    for signs in itertools.product((1, -1), repeat=len(idx)):
        w = list(vec)
        for i, s in zip(idx, signs):
            w[i] = (s * w[i][0], s * w[i][1])
        out.append(tuple(w))
    return out


def _perm_parity(perm) -> int:
    inv = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return inv % 2


# -- reflection tables -------------------------------------------------------


def _crys_table(roots: list[tuple]) -> list[list[int]]:
    index = {v: k for k, v in enumerate(roots)}
    norms = [sum(x * x for x in v) for v in roots]
    table = []
    for i, v in enumerate(roots):
        ni = norms[i]
        row = []
        for u in roots:
            c = 2 * sum(a * b for a, b in zip(v, u)) / ni
            row.append(index[tuple(a - c * b for a, b in zip(u, v))])
        table.append(row)
    return table


def _h_table(roots: list[tuple]) -> list[list[int]]:
    index = {v: k for k, v in enumerate(roots)}
    table = []
    for v in roots:
        # all H roots have squared length 4, so the coefficient is dot/2
        row = []
        for u in roots:
            d = _p_dot(v, u)
            c = (d[0] / 2, d[1] / 2)
            w = tuple(
                (a[0] - m[0], a[1] - m[1])
                for a, m in ((u[k], _p_mul(c, v[k])) for k in range(len(v)))
            )
            row.append(index[w])
        table.append(row)
    return table


# -- the RootSystem type -----------------------------------------------------


class RootSystem:
    """A finite root system with exact coordinates and reflection table."""

    def __init__(self, label, roots, table, rank, norms, fast_coords, kind):
        self.label = label
        self.roots = roots  # tuples of ExactNumber, both signs present
        self.table = table
        self.rank = rank
        self.norms = norms  # squared lengths, Fractions
        self.fast_coords = fast_coords
        self.kind = kind
        self.neg = [table[i][i] for i in range(len(roots))]
        self.reflections = [i for i in range(len(roots)) if i < self.neg[i]]
        self.refl_of_root = {}
        for k, i in enumerate(self.reflections):
            self.refl_of_root[i] = k
            self.refl_of_root[self.neg[i]] = k
        self._conj = None

    @property
    def nroots(self) -> int:
        return len(self.roots)

    @property
    def nreflections(self) -> int:
        return len(self.reflections)

    def length_classes(self) -> tuple:
        """Sorted (squared-length ratio to shortest, count) pairs."""
        return _length_classes(self.norms)

    def conj(self, a: int, b: int) -> int:
        """Reflection index of r_a r_b r_a (indices into reflections)."""
        ra, rb = self.reflections[a], self.reflections[b]
        return self.refl_of_root[self.table[ra][rb]]

    def conj_table(self) -> list[list[int]]:
        if self._conj is None:
            m = self.nreflections
            self._conj = [
                [self.conj(a, b) for b in range(m)] for a in range(m)
            ]
        return self._conj

    def reflection_matrix(self, refl: int) -> list[list]:
        """Exact ambient matrix of the reflection, acting on columns."""
        i = self.reflections[refl]
        v = self.roots[i]
        coef = ExactNumber.from_rational(Fraction(2) / self.norms[i])
        dim = len(v)
        one, zero = ExactNumber.one(), ExactNumber.zero()
        return [
            [
                (one if r == c else zero) - coef * v[r] * v[c]
                for c in range(dim)
            ]
            for r in range(dim)
        ]


def _length_classes(norms) -> tuple:
    counts: dict = {}
    for nv in norms:
        counts[nv] = counts.get(nv, 0) + 1
    base = min(counts)
    return tuple(sorted((nv / base, c) for nv, c in counts.items()))


def _to_exact_crys(roots):
    return tuple(
        tuple(ExactNumber.from_rational(x) for x in v) for v in roots
    )


def _to_exact_h(roots):
    s5 = sqrt_rational(Fraction(5))
    return tuple(
        tuple(ExactNumber.from_rational(a) + s5 * b for a, b in v)
        for v in roots
    )


@lru_cache(maxsize=None)
def root_system(label: str) -> RootSystem:
    kind, n = _parse_label(label)
    norm_label = f"I2({n})" if kind == "I" else f"{kind}{n}"
    if kind == "I":
        return _dihedral_system(norm_label, n)
    if kind == "E" and n < 8:
        return _e_subsystem(norm_label, n)
    if kind == "H":
        fast = _h_roots(n)
        table = _h_table(fast)
        roots = _to_exact_h(fast)
        norms = [_p_dot(v, v)[0] for v in fast]
        return RootSystem(norm_label, roots, table, n, norms, fast, "h")
    fast = _crys_roots(kind, n)
    table = _crys_table(fast)
    roots = _to_exact_crys(fast)
    norms = [sum(x * x for x in v) for v in fast]
    return RootSystem(norm_label, roots, table, n, norms, fast, "crys")


def _dihedral_system(label: str, m: int) -> RootSystem:
    # root k sits at angle pi k / m; reflections act by k -> 2i - k
    half = ExactNumber.from_rational(_HALF)

    def cospi(num, den):  # cos(pi num / den)
        z = ExactNumber.root_of_unity(2 * den, num % (2 * den))
        return (z + z.conjugate()) * half

    roots = tuple(
        (cospi(k, m), cospi(m - 2 * k, 2 * m)) for k in range(2 * m)
    )
    # s_{v_i} reflects in the line orthogonal to v_i: angle j -> 2i + m - j
    table = [
        [(2 * i + m - j) % (2 * m) for j in range(2 * m)]
        for i in range(2 * m)
    ]
    norms = [Fraction(1)] * (2 * m)
    fast = list(range(2 * m))
    return RootSystem(label, roots, table, 2, norms, fast, "i2")


def _e_subsystem(label: str, n: int) -> RootSystem:
    """E_6 / E_7 as the closure of leading E_8 simple roots."""
    R8 = root_system("E8")
    index = {v: i for i, v in enumerate(R8.fast_coords)}
    seed = [index[v] for v in _e8_simple_roots()[:n]]
    sub, _ = reflection_closure(R8, seed)
    pos = {a: k for k, a in enumerate(sub)}
    table = [[pos[R8.table[a][b]] for b in sub] for a in sub]
    roots = tuple(R8.roots[a] for a in sub)
    norms = [R8.norms[a] for a in sub]
    fast = [R8.fast_coords[a] for a in sub]
    return RootSystem(label, roots, table, n, norms, fast, "crys")


# -- closures and identification ---------------------------------------------


def reflection_closure(R: RootSystem, seed) -> tuple[tuple, str]:
    """Smallest root subset containing seed, closed under its reflections.

    seed lists root indices.  Returns (sorted root indices, identification
    label such as "A3" or "A1 x D5").
    """
    S = set(seed)
    members = list(S)
    queue = list(S)
    while queue:
        a = queue.pop()
        row = R.table[a]
        for b in list(members):
            for c in (row[b], R.table[b][a]):
                if c not in S:
                    S.add(c)
                    members.append(c)
                    queue.append(c)
    out = tuple(sorted(S))
    return out, identify_subsystem(R, out)


def subsystem_rank(R: RootSystem, indices) -> int:
    rows = [list(R.roots[i]) for i in indices]
    if not rows:
        return 0
    return _rank(rows)


def identify_subsystem(R: RootSystem, indices) -> str:
    """Name the (closed) subsystem spanned by the given root indices."""
    idx = list(indices)
    pos = {a: k for k, a in enumerate(idx)}
    seen = [False] * len(idx)
    names = []
    for start in range(len(idx)):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            k = stack.pop()
            a = idx[k]
            for b in idx:
                j = pos[b]
                if seen[j]:
                    continue
                # reflections commute exactly on orthogonal roots
                if R.table[a][b] != b:
                    seen[j] = True
                    comp.append(j)
                    stack.append(j)
        croots = [idx[k] for k in comp]
        names.append(_component_name(R, croots))
    return " x ".join(sorted(names, key=_label_sort_key))


def _label_sort_key(name: str):
    m = re.fullmatch(r"([A-Z])(\d+)", name)
    if m:
        return (m.group(1), int(m.group(2)), 0)
    m = re.fullmatch(r"I2\((\d+)\)", name)
    if m:
        return ("I", int(m.group(1)), 0)
    return ("Z", 0, name)


def _component_name(R: RootSystem, croots) -> str:
    count = len(croots)
    r = subsystem_rank(R, croots)
    classes = _length_classes([R.norms[i] for i in croots])
    if len(classes) == 1:
        if count == r * (r + 1):
            return f"A{r}"
        if r >= 4 and count == 2 * r * (r - 1):
            return f"D{r}"
        if (r, count) in {(6, 72), (7, 126), (8, 240)}:
            return f"E{r}"
        if (r, count) in {(3, 30), (4, 120)}:
            return f"H{r}"
        if r == 2 and count % 2 == 0:
            return f"I2({count // 2})"
    else:
        if count == 2 * r * r:
            return f"B{r}"
        if (r, count) == (4, 48):
            return "F4"
        if r == 2 and count == 12:
            return "G2"
    return f"unknown(rank {r}, {count} roots)"


def same_rank_inclusions(label: str) -> tuple[str, ...]:
    """Proper same-rank reflection subsystems, per the inclusion tables."""
    kind, n = _parse_label(label)
    out = []
    if kind == "B":
        if n >= 4:
            out.append(f"D{n}")
        if n == 2:
            out.append("A1 x A1")
        if n == 3:
            out.append("A1 x A1 x A1")
        for k in range(1, n):
            left = _b_or_small(k)
            right = _b_or_small(n - k)
            out.append(" x ".join(sorted([left, right], key=_label_sort_key)))
        for k in range(4, n):
            out.append(
                " x ".join(
                    sorted([f"D{k}", _b_or_small(n - k)], key=_label_sort_key)
                )
            )
    elif kind == "D":
        if n == 4:
            out.append("A1 x A1 x A1 x A1")
        for k in range(4, n - 3):
            out.append(
                " x ".join(sorted([f"D{k}", f"D{n - k}"], key=_label_sort_key))
            )
    elif kind == "F":
        out += ["B4", "D4"]
    elif kind == "E" and n == 6:
        out += ["A1 x A5", "A2 x A2 x A2"]
    elif kind == "E" and n == 7:
        out += ["A7", "A1 x A3 x A3", "A2 x A5", "A1 x D5"]
    elif kind == "E" and n == 8:
        out += [
            "D8",
            "A8",
            "A1 x A2 x A5",
            "A1 x A7",
            "A4 x A4",
            "A3 x D5",
            "A1 x E7",
        ]
    elif kind == "H" and n == 3:
        out.append("A1 x A1 x A1")
    elif kind == "H" and n == 4:
        out += ["A1 x H3", "I2(5) x I2(5)", "A2 x A2"]
    return tuple(dict.fromkeys(out))


def _b_or_small(k: int) -> str:
    return "A1" if k == 1 else f"B{k}"


# -- arrangement matrices from roots -----------------------------------------


def arrangement_of_roots(R: RootSystem, root_indices) -> ArrangementMatrix:
    """Gram-style matrix B_ij = 2 (v_i, v_j) / sqrt(|v_i|^2 |v_j|^2)."""
    idx = list(root_indices)
    n = len(idx)
    dots = [[_exact_dot(R.roots[idx[i]], R.roots[idx[j]]) for j in range(n)]
            for i in range(n)]
    ent = []
    for i in range(n):
        row = []
        for j in range(n):
            denom = sqrt_rational(R.norms[idx[i]] * R.norms[idx[j]])
            row.append(dots[i][j] * 2 * denom.inverse())
        ent.append(row)
    return ArrangementMatrix(ent)


def arrangement_of_reflections(R: RootSystem, refl_indices) -> ArrangementMatrix:
    return arrangement_of_roots(
        R, [R.reflections[a] for a in refl_indices]
    )


def _exact_dot(u, v) -> ExactNumber:
    acc = ExactNumber.zero()
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


def is_generating(R: RootSystem, refl_indices) -> bool:
    """Whether the reflections generate the whole group of R."""
    closed, _ = reflection_closure(
        R, [R.reflections[a] for a in refl_indices]
    )
    return len(closed) == R.nroots


# -- universal matrices ------------------------------------------------------


def _ones_matrix(n: int) -> list[list[Fraction]]:
    return [
        [Fraction(2) if i == j else Fraction(1) for j in range(n)]
        for i in range(n)
    ]


def universal_matrix(label: str) -> ArrangementMatrix:
    """Named canonical arrangement matrices.

    A/B/D are built directly; the exceptional and H types use pinned
    representatives (one per orbit, labels like "F4:1", "H4:7"); the bare
    label picks the first.
    """
    if ":" in label or label.replace("_", "") in (
        "F4", "E6", "E7", "E8", "H3", "H4"
    ):
        return _fixture_matrix(label)
    kind, n = _parse_label(label)
    if kind == "A":
        return ArrangementMatrix(_ones_matrix(n))
    if kind == "D":
        return d_matrix(n, n - 1)
    if kind == "B":
        ent = [[ExactNumber.from_rational(x) for x in row]
               for row in _ones_matrix(n)]
        s2 = sqrt_rational(Fraction(2))
        for i in range(n - 1):
            ent[i][n - 1] = ent[n - 1][i] = s2
        return ArrangementMatrix(ent)
    raise ValueError(f"no universal matrix for {label!r}")


def d_matrix(n: int, gap: int) -> ArrangementMatrix:
    """Complete graph on n vertices with the edge {0, gap} deleted."""
    if not 1 <= gap <= n - 1:
        raise ValueError("gap out of range")
    ent = _ones_matrix(n)
    ent[0][gap] = ent[gap][0] = Fraction(0)
    return ArrangementMatrix(ent)


def orbit_representatives(group: str) -> list[dict]:
    """Pinned per-orbit data for the exceptional and H types."""
    data = _fixtures()
    key = group.replace("_", "")
    if key not in data:
        raise KeyError(f"no pinned representatives for {group!r}")
    return data[key]


def _fixture_matrix(label: str) -> ArrangementMatrix:
    key = label.replace("_", "")
    if ":" in key:
        group, _, num = key.partition(":")
        k = int(num) - 1
    else:
        group, k = key, 0
    reps = orbit_representatives(group)
    return ArrangementMatrix.from_json(json.dumps(reps[k]["matrix"]))


@lru_cache(maxsize=1)
def _fixtures() -> dict:
    text = (
        resources.files("braidrefl").joinpath("data/representatives.json")
        .read_text()
    )
    return json.loads(text)


# -- extension families ------------------------------------------------------


def _a1_vector(length: int, p: int, q: int) -> list[Fraction]:
    if p < 0 or q < 0 or p + q > length:
        raise ValueError("need p, q >= 0 and p + q <= block size")
    return (
        [Fraction(0)] * (length - p - q)
        + [Fraction(-1)] * q
        + [Fraction(1)] * p
    )


def extension_matrix(family: str, n: int, p: int = 0, q: int = 0) -> ArrangementMatrix:
    """The bordered block matrices of the extension families.

    family "A": Gamma_0(A_n) plus one vertex attached by q edges of sign
    -1 and p of sign +1 (size n+1).  Families "D1".."D6": Gamma_0(D_n)
    in the order (v_a, middle block, v_b, v') with the six (v_a v'),
    (v_b v') bond patterns (0,0), (0,1), (1,0), (1,1), (-1,1), (-1,-1)
    (size n+1).  Families "B1".."B3": the all-ones n block with its
    sqrt2 column plus one more vertex (size n+2).
    """
    if family == "A":
        a1 = _a1_vector(n, p, q)
        ent = _ones_matrix(n + 1)
        for i in range(n):
            ent[i][n] = ent[n][i] = a1[i]
        return ArrangementMatrix(ent)
    if family in ("D1", "D2", "D3", "D4", "D5", "D6"):
        xa, xb = {
            "D1": (0, 0), "D2": (0, 1), "D3": (1, 0),
            "D4": (1, 1), "D5": (-1, 1), "D6": (-1, -1),
        }[family]
        if n < 4:
            raise ValueError("need n >= 4")
        a1 = _a1_vector(n - 2, p, q)
        ent = _ones_matrix(n + 1)
        va, vb, vp = 0, n - 1, n
        ent[va][vb] = ent[vb][va] = Fraction(0)
        ent[va][vp] = ent[vp][va] = Fraction(xa)
        ent[vb][vp] = ent[vp][vb] = Fraction(xb)
        for i in range(1, n - 1):
            ent[i][vp] = ent[vp][i] = a1[i - 1]
        return ArrangementMatrix(ent)
    if family in ("B1", "B2", "B3"):
        # Gamma_0(B_n) is the all-ones (n-1) block with a sqrt2 border;
        # the extension appends one vertex, giving size n+1
        m = n - 1
        s2 = sqrt_rational(Fraction(2))
        ent = [[ExactNumber.from_rational(x) for x in row]
               for row in _ones_matrix(n + 1)]
        for i in range(m):
            ent[i][m] = ent[m][i] = s2
        zero = ExactNumber.zero()
        if family == "B1":
            col = [ExactNumber.from_rational(x) for x in _a1_vector(m, p, q)]
            corner = zero
        elif family == "B2":
            if not 0 <= p <= m:
                raise ValueError("need 0 <= p <= n - 1")
            col = [s2] * p + [zero] * (m - p)
            corner = ExactNumber.one()
        else:
            col = [ExactNumber.one()] * m
            corner = s2
        for i in range(m):
            ent[i][n] = ent[n][i] = col[i]
        ent[m][n] = ent[n][m] = corner
        return ArrangementMatrix(ent)
    raise ValueError(f"unknown extension family {family!r}")


def extension_det_formula(family: str, n: int, p: int = 0, q: int = 0) -> Fraction:
    """The closed-form determinants stated for the extension families."""
    forms = {
        "A": (p - q) ** 2 - (p + q) * (n + 1) + 2 * (n + 1),
        "D1": 4 * (2 - p - q),
        "D2": 8 - n - 8 * q,
        "D3": 8 - n - 8 * p,
        "D4": 4 * (3 + p - n - 3 * q),
        "D5": 4 * (1 - p - q),
        "D6": 4 * (3 + q - n - 3 * p),
        "B1": 2 * (2 - p - q),
        "B2": 4 - n,
        "B3": 2,
    }
    if family not in forms:
        raise ValueError(f"unknown extension family {family!r}")
    return Fraction(forms[family])


def b_a_extension(n: int, k: int) -> ArrangementMatrix:
    """B(A_n, k): the all-ones matrix bordered by k trailing ones."""
    return extension_matrix("A", n, p=k, q=0)
