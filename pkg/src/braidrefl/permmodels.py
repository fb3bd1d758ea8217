"""Permutation-graph models for the classical reflection groups.

Reflections of W(A_n) are transpositions of n+1 letters; a tuple of
them is a graph on the letters whose edges are the transpositions.
W(B_n) adds sign changes (a marked vertex), W(D_n) signed
transpositions (a doubled edge closes the unique cycle).  The criteria
here are combinatorial: generation is connectivity, the ordered product
of a generating A_n tuple is a full cycle, and the D_n orbits are
separated by the pair of cycle lengths of the product on the
coordinate axes.
"""

from dataclasses import dataclass

from .braid import BraidWord


class SignedPermutation:
    """Signed permutation of n letters: e_i -> signs[i] * e_{images[i]}.

    Images and signs are indexed 0-based; the factory methods below take
    1-based letters to match cycle notation like (1 2).
    """

    __slots__ = ("images", "signs")

    def __init__(self, images, signs=None):
        self.images = tuple(images)
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images must be a bijection on 0..n-1")
        self.signs = tuple(signs) if signs else (1,) * len(self.images)
        if len(self.signs) != len(self.images) or any(
            s not in (1, -1) for s in self.signs
        ):
            raise ValueError("signs must be +-1, one per letter")

    @property
    def n(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(n: int) -> "SignedPermutation":
        return SignedPermutation(range(n))

    @staticmethod
    def transposition(n: int, i: int, j: int, sign: int = 1) -> "SignedPermutation":
        """Swap letters i and j (1-based); sign -1 for e_i <-> -e_j."""
        if not (1 <= i <= n and 1 <= j <= n and i != j):
            raise ValueError("letters out of range")
        images = list(range(n))
        signs = [1] * n
        images[i - 1], images[j - 1] = j - 1, i - 1
        signs[i - 1] = signs[j - 1] = sign
        return SignedPermutation(images, signs)

    @staticmethod
    def sign_change(n: int, i: int) -> "SignedPermutation":
        """e_i -> -e_i (1-based letter)."""
        signs = [1] * n
        signs[i - 1] = -1
        return SignedPermutation(range(n), signs)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Apply `other` first, then self."""
        images = tuple(self.images[other.images[k]] for k in range(self.n))
        signs = tuple(
            other.signs[k] * self.signs[other.images[k]] for k in range(self.n)
        )
        return SignedPermutation(images, signs)

    def inverse(self) -> "SignedPermutation":
        images = [0] * self.n
        signs = [1] * self.n
        for k, v in enumerate(self.images):
            images[v] = k
            signs[v] = self.signs[k]
        return SignedPermutation(images, signs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SignedPermutation)
            and self.images == other.images
            and self.signs == other.signs
        )

    def __hash__(self) -> int:
        return hash((self.images, self.signs))

    def __repr__(self) -> str:
        return f"SignedPermutation({self.images}, {self.signs})"

    def is_involution(self) -> bool:
        return (self * self) == SignedPermutation.identity(self.n)

    def kind(self) -> str:
        """Reflection shape: transposition (possibly signed), sign change,
        identity, or other."""
        moved = [k for k in range(self.n) if self.images[k] != k]
        flipped = [k for k in range(self.n) if self.signs[k] == -1]
        if not moved:
            if not flipped:
                return "identity"
            if len(flipped) == 1:
                return "sign change"
            return "other"
        if len(moved) == 2 and set(flipped) <= set(moved):
            if not flipped:
                return "transposition"
            if len(flipped) == 2 and self.is_involution():
                return "signed transposition"
        return "other"

    def pair(self) -> tuple[int, int]:
        """The two letters (1-based) a transposition-shaped element swaps."""
        moved = [k for k in range(self.n) if self.images[k] != k]
        if len(moved) != 2:
            raise ValueError("not a transposition")
        return (moved[0] + 1, moved[1] + 1)

    def negated(self) -> bool:
        """Whether a transposition-shaped element changes the sign."""
        return -1 in self.signs

    def cycle_lengths(self) -> tuple:
        """Cycle lengths of the underlying (unsigned) permutation, sorted."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            ln, c = 0, s
            while not seen[c]:
                seen[c] = True
                c = self.images[c]
                ln += 1
            out.append(ln)
        return tuple(sorted(out))


def _edge_of(t) -> tuple[int, int]:
    """Edge (1-based letters) from a pair or a transposition-shaped element."""
    if isinstance(t, SignedPermutation):
        return t.pair()
    a, b = t
    if a == b:
        raise ValueError("an edge needs two distinct letters")
    return (int(a), int(b))


@dataclass(frozen=True)
class PermGraph:
    """Graph on the letters: numbered edges, optional marked vertex."""

    n_vertices: int
    edges: tuple  # of (i, j), 1-based
    marked: int | None = None  # vertex carrying a sign change, if any

    @staticmethod
    def from_tuple(t, n_vertices: int | None = None) -> "PermGraph":
        edges = []
        marked = None
        top = 0
        for g in t:
            if isinstance(g, SignedPermutation) and g.kind() == "sign change":
                v = g.signs.index(-1) + 1
                marked = v
                top = max(top, v)
                continue
            e = _edge_of(g)
            edges.append(e)
            top = max(top, *e)
        if n_vertices is None:
            n_vertices = top
        return PermGraph(n_vertices, tuple(edges), marked)

    def is_connected(self) -> bool:
        if self.n_vertices == 0:
            return True
        parent = list(range(self.n_vertices + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            parent[find(a)] = find(b)
        roots = {find(v) for v in range(1, self.n_vertices + 1)}
        return len(roots) == 1

    def doubled_pairs(self) -> tuple:
        seen = {}
        out = []
        for a, b in self.edges:
            key = frozenset((a, b))
            seen[key] = seen.get(key, 0) + 1
        for key, c in seen.items():
            if c > 1:
                out.append(tuple(sorted(key)))
        return tuple(sorted(out))


def generates_full_symmetric(t, n_letters: int | None = None) -> bool:
    """Whether transpositions generate the symmetric group on the letters.

    Equivalent to connectivity of the permutation graph; letters default
    to 1..max occurring, or 1..n_letters when given.
    """
    graph = PermGraph.from_tuple(t, n_letters)
    if len(graph.edges) + 1 < graph.n_vertices:
        return False
    return graph.is_connected()


def product_cycle_check(t, n_letters: int | None = None) -> bool:
    """The ordered product of a generating tuple is one full cycle."""
    if not generates_full_symmetric(t, n_letters):
        raise ValueError("tuple does not generate the full symmetric group")
    graph = PermGraph.from_tuple(t, n_letters)
    n = graph.n_vertices
    perm = SignedPermutation.identity(n)
    for g in t:
        if not isinstance(g, SignedPermutation):
            a, b = _edge_of(g)
            g = SignedPermutation.transposition(n, a, b)
        perm = perm * g
    return perm.cycle_lengths() == (n,)


def _conj_edge(g: tuple, h: tuple) -> tuple:
    """Conjugate transposition h by transposition g (relabel through g)."""
    a, b = g

    def relabel(x):
        return b if x == a else a if x == b else x

    return tuple(relabel(x) for x in h)


def _is_consecutive_chain(edges) -> bool:
    if len(edges) == 1:
        return True
    verts = _chain_vertices(edges)
    return verts is not None


def _chain_vertices(edges):
    """Vertex sequence when the numbered edges form a consecutive path."""
    first = set(edges[0]) - set(edges[1])
    if len(first) != 1:
        return None
    verts = [first.pop()]
    verts.append((set(edges[0]) - {verts[0]}).pop())
    for e in edges[1:]:
        nxt = set(e) - {verts[-1]}
        if len(nxt) != 1 or (v := nxt.pop()) in verts:
            return None
        verts.append(v)
    return verts


def canonical_reduce_A(t, n_letters: int | None = None) -> BraidWord:
    """Braid word carrying the tuple to a consecutively numbered chain.

    The returned word, applied with the Hurwitz action, turns the tuple
    into one whose permutation graph is a path with edges numbered
    1, 2, ..., n along it (the numbering of the letters themselves is
    immaterial).  Follows the inductive construction: peel a leaf edge
    to the last position, reduce the rest, then attach the leaf with
    s_{k+1}^2 s_{k+2} ... s_n.
    """
    if not generates_full_symmetric(t, n_letters):
        raise ValueError("tuple does not generate the full symmetric group")
    work = [_edge_of(g) for g in t]
    n = len(work)
    applied: list = []  # letters in order of application

    def apply_move(i, e):
        g, h = work[i - 1], work[i]
        if e == 1:
            work[i - 1], work[i] = _conj_edge(g, h), g
        else:
            work[i - 1], work[i] = h, _conj_edge(h, g)
        applied.append((i, e))

    def reduce_range(m):
        if m <= 1:
            return
        # pick the leaf whose edge sits latest among the first m edges, so
        # an already-reduced prefix needs no moves at all
        degree: dict = {}
        for a, b in work[:m]:
            degree[a] = degree.get(a, 0) + 1
            degree[b] = degree.get(b, 0) + 1
        leaves = {v for v, d in degree.items() if d == 1}
        q, leaf = max(
            (p, min(set(work[p]) & leaves))
            for p in range(m)
            if set(work[p]) & leaves
        )
        # slide the leaf edge to position m; conjugation can relabel its
        # other endpoint but never touches the leaf vertex itself
        for j in range(q + 1, m):
            apply_move(j, -1)
        reduce_range(m - 1)
        attach = (set(work[m - 1]) - {leaf}).pop()
        if m == 2:
            verts = [(set(work[0]) - {attach}).pop(), attach]
        else:
            verts = _chain_vertices(work[: m - 1])
        p = verts.index(attach) + 1
        if p < m:
            # the braid s_p^2 s_{p+1} ... s_{m-1}, rightmost acting first
            for j in range(m - 1, p, -1):
                apply_move(j, 1)
            apply_move(p, 1)
            apply_move(p, 1)

    reduce_range(n)
    assert _is_consecutive_chain(work)
    return BraidWord(n, tuple(reversed(applied)))


def dn_invariant(t) -> tuple[int, int]:
    """Unordered cycle-length pair {k, n-k} of the product on the axes.

    The tuple's elements are signed transpositions of the n coordinate
    axes; the product's action on the pairs {e_i, -e_i} splits into two
    cycles (one of them possibly empty) whose lengths are constant on
    braid orbits.
    """
    elems = list(t)
    if not elems:
        raise ValueError("empty tuple")
    n = elems[0].n
    perm = SignedPermutation.identity(n)
    for g in elems:
        if g.kind() not in ("transposition", "signed transposition"):
            raise ValueError("model requires (signed) transpositions")
        perm = perm * g
    cycles = perm.cycle_lengths()
    if len(cycles) == 1:
        return (0, cycles[0])
    if len(cycles) != 2:
        raise ValueError("product does not split into two cycles")
    return (cycles[0], cycles[1])


def generates_w_dn(t) -> bool:
    """Whether n signed transpositions of n axes generate the full W(D_n).

    A connected graph with as many edges as vertices contains exactly
    one cycle.  The tuple generates W(D_n) precisely when the product of
    the edge signs around that cycle is -1; a +1 cycle conjugates to
    plain transpositions and only yields a copy of the symmetric group.
    (A doubled pair is the 2-cycle case: the two parallel edges must
    carry opposite signs.)
    """
    elems = list(t)
    if not elems:
        return False
    n = elems[0].n
    if len(elems) != n:
        return False
    signed_edges = []
    for g in elems:
        if g.kind() not in ("transposition", "signed transposition"):
            return False
        a, b = g.pair()
        signed_edges.append((a, b, -1 if g.negated() else 1))
    graph = PermGraph(n, tuple((a, b) for a, b, _ in signed_edges))
    if not graph.is_connected():
        return False
    # peel leaves until only the unique cycle remains
    alive = list(range(n))
    while True:
        degree = [0] * (n + 1)
        for k in alive:
            a, b, _ = signed_edges[k]
            degree[a] += 1
            degree[b] += 1
        keep = [
            k
            for k in alive
            if degree[signed_edges[k][0]] > 1 and degree[signed_edges[k][1]] > 1
        ]
        if len(keep) == len(alive):
            break
        alive = keep
    sign = 1
    for k in alive:
        sign *= signed_edges[k][2]
    return sign == -1
