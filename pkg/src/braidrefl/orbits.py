"""Orbit enumeration for the braid action and orbit counting per group.

Three engines:

* matrix_orbit - breadth-first search over sign-canonical arrangement
  matrices under the generator moves and their inverses.
* hurwitz_orbit - breadth-first search over tuples of group elements
  (exact tuple equality, no quotient).
* count_generating_orbits - partitions the generating n-tuples of
  reflections of a finite Coxeter group into braid orbits and quotients
  by simultaneous conjugation, either exhaustively (vectorized label
  propagation over all reflection-index tuples) or by seeded sampling
  bucketed on conjugation invariants.

classify_3x3 decides finiteness for 3x3 matrices: every off-diagonal
entry of every reachable matrix must be 2 cos of a rational multiple of
pi (checked exactly through the multiplicative order of the companion
matrix [[a,-1],[1,0]]); degenerate matrices with such entries are always
finite; otherwise the BFS itself closes within the entry-wise bound.
"""

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from .arrangement import ArrangementMatrix, sign_canonical
from .braid import act_sigma
from .catalog import (
    RootSystem,
    arrangement_of_reflections,
    root_system,
)
from .exactnum import ExactNumber, euler_phi, format_expr, two_cos
from .linalg import charpoly as _charpoly
from .linalg import det as _det
from .linalg import identity, mat_eq, mat_mul
from .quasicox import CharPolyFingerprint, cox_matrix, cyclo_fingerprint, element_order

DEFAULT_MATRIX_CAP = 10**6
DEFAULT_TUPLE_CAP = 10**7
DEFAULT_SEED_BUDGET = 10**4
EXHAUSTIVE_STATE_LIMIT = 2 * 10**7


# -- reports -----------------------------------------------------------------


@dataclass
class OrbitReport:
    verdict: str  # "Finite" or "ExceededCap"
    size: int  # orbit size, or states seen when the cap was hit
    invariants: dict
    representatives: list = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(
            {
                "verdict": self.verdict,
                "size": self.size,
                "invariants": self.invariants,
                "representatives": self.representatives,
            }
        )


@dataclass
class ClassifyResult:
    kind: str  # "Finite" | "Infinite" | "Unknown"
    reason: str

    def to_json(self) -> str:
        return json.dumps({"verdict": self.kind, "reason": self.reason})


@dataclass
class OrbitCountReport:
    group: str
    n: int
    mode: str
    count: int
    orbits: list  # one dict per orbit: invariants, size where known
    total_generating: int | None = None  # exhaustive mode
    samples: int | None = None  # seeded mode

    def to_json(self) -> str:
        return json.dumps(
            {
                "group": self.group,
                "n": self.n,
                "mode": self.mode,
                "count": self.count,
                "orbits": self.orbits,
                "total_generating": self.total_generating,
                "samples": self.samples,
            }
        )


# -- matrix orbits -----------------------------------------------------------


def _matrix_invariants(B: ArrangementMatrix) -> dict:
    C = cox_matrix(B)
    fp = cyclo_fingerprint(_charpoly(C))
    order = fp.implied_order()
    if order is None:
        order = element_order(C, cap=200)
    return {
        "det": format_expr(_det(B.rows())),
        "charpoly": json.loads(fp.to_json()),
        "order": order,
    }


def matrix_orbit(
    B: ArrangementMatrix, cap: int = DEFAULT_MATRIX_CAP, max_reps: int = 10
) -> OrbitReport:
    """BFS over sign classes of matrices under all generator moves."""
    if cap <= 0:
        raise ValueError("cap must be positive")
    start = sign_canonical(B)
    seen = {start}
    queue = deque([start])
    exceeded = False
    while queue:
        cur = queue.popleft()
        for i in range(1, B.n):
            for e in (1, -1):
                nxt = sign_canonical(act_sigma(cur, i, e))
                if nxt not in seen:
                    if len(seen) >= cap:
                        exceeded = True
                        queue.clear()
                        break
                    seen.add(nxt)
                    queue.append(nxt)
            if exceeded:
                break
    reps = sorted(seen, key=lambda m: m.sort_key())[:max_reps]
    return OrbitReport(
        "ExceededCap" if exceeded else "Finite",
        len(seen),
        _matrix_invariants(B),
        [json.loads(m.to_json()) for m in reps],
    )


# -- Hurwitz orbits on tuples ------------------------------------------------


class PermElement:
    """Permutation written as an image tuple; composes left-to-right."""

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = tuple(images)

    def __mul__(self, other: "PermElement") -> "PermElement":
        return PermElement(tuple(self.images[i] for i in other.images))

    def inverse(self) -> "PermElement":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return PermElement(inv)

    def __eq__(self, other) -> bool:
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"PermElement{self.images}"


def reflection_element(R: RootSystem, refl: int) -> PermElement:
    """The permutation a reflection induces on the roots of R."""
    return PermElement(R.table[R.reflections[refl]])


def hurwitz_orbit(t: tuple, cap: int = DEFAULT_TUPLE_CAP) -> OrbitReport:
    """BFS on tuples of group elements under the Hurwitz moves."""
    if cap <= 0:
        raise ValueError("cap must be positive")
    from .braid import hurwitz

    start = tuple(t)
    n = len(start)
    prod = start[0]
    for g in start[1:]:
        prod = prod * g
    seen = {start}
    queue = deque([start])
    exceeded = False
    while queue:
        cur = queue.popleft()
        for i in range(1, n):
            for e in (1, -1):
                nxt = hurwitz(cur, i, e)
                if nxt not in seen:
                    if len(seen) >= cap:
                        exceeded = True
                        queue.clear()
                        break
                    seen.add(nxt)
                    queue.append(nxt)
            if exceeded:
                break
    return OrbitReport(
        "ExceededCap" if exceeded else "Finite",
        len(seen),
        {"product": repr(prod)},
        [],
    )


# -- 3x3 classification ------------------------------------------------------


_RATIONAL_COS = {
    Fraction(2): Fraction(0),
    Fraction(1): Fraction(1, 3),
    Fraction(0): Fraction(1, 2),
    Fraction(-1): Fraction(2, 3),
    Fraction(-2): Fraction(1),
}


_ANGLE_CACHE: dict = {}


def entry_angle(a: ExactNumber) -> Fraction | None:
    """alpha/pi in [0, 1] with a = 2 cos(alpha), or None.

    Exact decision: rational entries by Niven's theorem, irrational ones
    by bounding the multiplicative order of the companion matrix
    [[a, -1], [1, 0]] through phi(N) <= 2 [Q(a):Q].
    """
    if a in _ANGLE_CACHE:
        return _ANGLE_CACHE[a]
    out = _entry_angle_uncached(a)
    _ANGLE_CACHE[a] = out
    return out


def _entry_angle_uncached(a: ExactNumber) -> Fraction | None:
    if a.is_rational():
        return _RATIONAL_COS.get(a.as_rational())
    bound = 2 * euler_phi(a.conductor)
    order = None
    for N in range(3, 2 * bound * bound + 7):
        if euler_phi(N) > bound:
            continue
        if _companion_power_is_identity(a, N):
            order = N
            break
    if order is None:
        return None
    for k in range(order + 1):
        if a == two_cos(2 * k, order):
            f = Fraction(2 * k, order)
            return f if f <= 1 else 2 - f
    return None


def _companion_power_is_identity(a: ExactNumber, N: int) -> bool:
    one, zero = ExactNumber.one(), ExactNumber.zero()
    m = [[a, -one], [one, zero]]
    eye = [[one, zero], [zero, one]]
    acc = eye
    base = m
    k = N
    while k:
        if k & 1:
            acc = mat_mul(acc, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return mat_eq(acc, eye)


def classify_3x3(B: ArrangementMatrix, cap: int = 10**5) -> ClassifyResult:
    """Finiteness decision for the braid orbit of a 3x3 matrix."""
    if B.n != 3:
        raise ValueError("classification requires a 3x3 matrix")
    angles = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        ang = entry_angle(B.entries[i][j])
        if ang is None:
            return ClassifyResult(
                "Infinite",
                f"entry ({i + 1},{j + 1}) is not 2cos of a rational "
                "multiple of pi",
            )
        angles.append(ang)
    if _det(B.rows()).is_zero():
        return ClassifyResult(
            "Finite",
            "degenerate matrix with angle parameters "
            f"(alpha, beta) = (pi*{angles[0]}, pi*{angles[1]})",
        )
    # non-degenerate: run the BFS, rejecting any reachable matrix with a
    # non-cosine entry (a necessary condition for finiteness)
    seen = {sign_canonical(B)}
    queue = deque(seen)
    while queue:
        cur = queue.popleft()
        for i in (1, 2):
            for e in (1, -1):
                nxt = sign_canonical(act_sigma(cur, i, e))
                if nxt in seen:
                    continue
                for r, c in ((0, 1), (0, 2), (1, 2)):
                    if entry_angle(nxt.entries[r][c]) is None:
                        return ClassifyResult(
                            "Infinite",
                            "reached a matrix with an entry that is not "
                            "2cos of a rational multiple of pi",
                        )
                if len(seen) >= cap:
                    return ClassifyResult(
                        "Unknown", f"state cap {cap} reached without closure"
                    )
                seen.add(nxt)
                queue.append(nxt)
    return ClassifyResult("Finite", f"orbit closed with {len(seen)} sign classes")


# -- generating-orbit counting -----------------------------------------------


def _closure_mask(table: np.ndarray, seed) -> np.ndarray:
    """Vectorized reflection closure; boolean mask over root indices."""
    mask = np.zeros(len(table), dtype=bool)
    mask[list(seed)] = True
    while True:
        idx = np.nonzero(mask)[0]
        hit = table[np.ix_(idx, idx)].ravel()
        before = mask.sum()
        mask[hit] = True
        if mask.sum() == before:
            return mask


def _is_generating_fast(R: RootSystem, table: np.ndarray, refl_tuple) -> bool:
    seed = [R.reflections[a] for a in refl_tuple]
    return bool(_closure_mask(table, seed).all())


def _tuple_invariants(R: RootSystem, refl_tuple, with_size=None) -> dict:
    B = arrangement_of_reflections(R, refl_tuple)
    C = cox_matrix(B)
    fp = cyclo_fingerprint(_charpoly(C))
    order = fp.implied_order()
    if order is None:
        order = element_order(C, cap=200)
    out = {
        "det": format_expr(_det(B.rows())),
        "charpoly": json.loads(fp.to_json()),
        "order": order,
        "rep_tuple": [int(a) for a in refl_tuple],
    }
    if with_size is not None:
        out["size"] = with_size
    if R.label.startswith("D"):
        out["cycle_type"] = list(_d_cycle_type(R, refl_tuple))
    return out


def _d_cycle_type(R: RootSystem, refl_tuple) -> tuple[int, int]:
    """Cycle lengths {k, n-k} of the product on the coordinate axes."""
    n = R.rank
    prod = identity(n, Fraction(1))
    for a in refl_tuple:
        v = R.fast_coords[R.reflections[a]]
        nv = sum(x * x for x in v)
        refl = [
            [
                (Fraction(1) if r == c else Fraction(0))
                - 2 * v[r] * v[c] / nv
                for c in range(n)
            ]
            for r in range(n)
        ]
        prod = mat_mul(prod, refl)
    # signed permutation matrix: axis i maps to the axis of the nonzero
    # entry in column i
    nxt = [max(range(n), key=lambda r: abs(prod[r][c])) for c in range(n)]
    seen = [False] * n
    cycles = []
    for s in range(n):
        if seen[s]:
            continue
        ln = 0
        c = s
        while not seen[c]:
            seen[c] = True
            c = nxt[c]
            ln += 1
        cycles.append(ln)
    cycles.sort()
    if len(cycles) == 1:
        return (0, cycles[0])
    return (cycles[0], cycles[1])


def count_generating_orbits(
    group: str,
    n: int | None = None,
    mode: str = "exhaustive",
    budget: int = DEFAULT_SEED_BUDGET,
    seed: int = 0,
    threads: int = 1,
) -> OrbitCountReport:
    """Braid orbits of generating reflection n-tuples, up to conjugation.

    mode "exhaustive" enumerates every reflection-index tuple (refused
    above the state limit); mode "seeded" samples random generating
    tuples and buckets them by exact conjugation invariants, stopping
    after `budget` consecutive samples without a fresh bucket.  The
    traversal is sequential regardless of `threads`; the flag is part of
    the stable interface and the output does not depend on it.
    """
    R = root_system(group)
    if n is None:
        n = R.rank
    if mode == "exhaustive":
        return _count_exhaustive(R, n)
    if mode == "seeded":
        return _count_seeded(R, n, budget, seed)
    raise ValueError(f"unknown mode {mode!r}")


def _count_exhaustive(R: RootSystem, n: int) -> OrbitCountReport:
    N = R.nreflections
    S = N**n
    if S > EXHAUSTIVE_STATE_LIMIT:
        raise ValueError(
            f"{N}^{n} = {S} states exceed the exhaustive limit; use seeded mode"
        )
    conj = np.array(R.conj_table(), dtype=np.int32)
    conj_flat = conj.ravel()
    labels = np.arange(S, dtype=np.int32)
    base = np.arange(S, dtype=np.int32)
    powers = [N**k for k in range(n + 1)]
    perms = []
    for k in range(n - 1):
        tk = (base // powers[k]) % N
        tk1 = (base // powers[k + 1]) % N
        c = conj_flat[tk * N + tk1]
        perm = base + (c - tk) * powers[k] + (tk - tk1) * powers[k + 1]
        inv = np.empty_like(perm)
        inv[perm] = base
        perms.append((perm, inv))
        del tk, tk1, c
    while True:
        # labels only decrease, so the sum is a convergence certificate
        before = int(labels.sum())
        for perm, inv in perms:
            np.minimum(labels, labels[perm], out=labels)
            np.minimum(labels, labels[inv], out=labels)
        for _ in range(3):
            labels = labels[labels]
        if int(labels.sum()) == before:
            break
    del perms
    table_np = np.array(R.table, dtype=np.int64)
    sizes = np.bincount(labels, minlength=0)
    reps = np.nonzero(sizes)[0]
    gen_reps = []
    for code in reps:
        t = _decode(int(code), N, n)
        if _is_generating_fast(R, table_np, t):
            gen_reps.append(int(code))
    # quotient by simultaneous conjugation: union components joined by
    # conjugating the representative with each reflection
    parent = {code: code for code in gen_reps}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for code in gen_reps:
        t = _decode(code, N, n)
        for g in range(N):
            conj_t = tuple(int(conj[g, a]) for a in t)
            lab = int(labels[_encode(conj_t, N)])
            ra, rb = find(code), find(lab)
            if ra != rb:
                parent[ra] = rb
    classes: dict[int, list[int]] = {}
    for code in gen_reps:
        classes.setdefault(find(code), []).append(code)
    orbits = []
    total = 0
    for members in classes.values():
        size = int(sum(sizes[m] for m in members))
        total += size
        rep = min(members)
        orbits.append(_tuple_invariants(R, _decode(rep, N, n), with_size=size))
    orbits.sort(key=lambda d: json.dumps(d, sort_keys=True))
    return OrbitCountReport(
        R.label, n, "exhaustive", len(classes), orbits, total_generating=total
    )


def _decode(code: int, N: int, n: int) -> tuple:
    out = []
    for _ in range(n):
        out.append(code % N)
        code //= N
    return tuple(out)


def _encode(t, N: int) -> int:
    acc = 0
    for v in reversed(t):
        acc = acc * N + v
    return acc


def _count_seeded(R: RootSystem, n: int, budget: int, seed: int) -> OrbitCountReport:
    import random

    rng = random.Random(seed)
    N = R.nreflections
    table_np = np.array(R.table, dtype=np.int64)
    buckets: dict = {}
    fresh = 0
    samples = 0
    while fresh < budget:
        t = tuple(rng.randrange(N) for _ in range(n))
        if not _is_generating_fast(R, table_np, t):
            continue
        samples += 1
        key = _conjugation_key(R, t)
        if key not in buckets:
            buckets[key] = t
            fresh = 0
        else:
            fresh += 1
    orbits = [_tuple_invariants(R, t) for t in buckets.values()]
    orbits.sort(key=lambda d: json.dumps(d, sort_keys=True))
    return OrbitCountReport(
        R.label, n, "seeded", len(buckets), orbits, samples=samples
    )


def _conjugation_key(R: RootSystem, refl_tuple) -> tuple:
    """Exact conjugation-invariant bucket key for a reflection tuple."""
    B = arrangement_of_reflections(R, refl_tuple)
    p = _charpoly(cox_matrix(B))
    key = tuple(c.encoding() for c in p)
    if R.label.startswith("D"):
        key = key + (_d_cycle_type(R, refl_tuple),)
    return key


def is_generating(R: RootSystem, refl_tuple) -> bool:
    """Whether the tuple's reflections generate the full group of R."""
    table_np = np.array(R.table, dtype=np.int64)
    return _is_generating_fast(R, table_np, refl_tuple)
