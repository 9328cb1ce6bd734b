"""Explicit finite lattices.

Elements are the indices ``0..n-1``.  The order is kept as a boolean
matrix with precomputed join/meet tables, since every closure procedure
in this package hammers on ``∨`` and ``∧``.

Cover arcs are ``(top, bottom)`` pairs, directed from the larger element
to the one it covers.
"""

import json
import re
from collections import deque
from itertools import combinations, product

__all__ = [
    "LatticeError",
    "FiniteLattice",
    "build",
    "covers",
    "height",
    "is_ranked",
    "is_modular",
    "modularity_report",
    "is_distributive",
    "is_sublattice",
    "sublattice_generated",
    "is_cover_preserving",
    "induced_arcs",
    "sublattices",
    "distance",
    "make_standard",
    "lattice_product",
]


class LatticeError(ValueError):
    """Raised when a relation fails the partial-order or lattice axioms.

    ``axiom`` names the violated condition and ``witness`` holds the
    offending elements.
    """

    def __init__(self, axiom, witness, message):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness

    def to_json(self):
        return {"axiom": self.axiom, "witness": list(self.witness), "message": str(self)}


class FiniteLattice:
    """A validated finite lattice.  Build one with :func:`build`."""

    def __init__(self, leq, names=None):
        n = len(leq)
        self.n = n
        self.leq = tuple(tuple(bool(x) for x in row) for row in leq)
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
        if len(self.names) != n:
            raise ValueError("names must match the number of elements")
        self._validate_order()
        self.join_table, self.meet_table = self._bounds_tables()
        self.bottom = next(x for x in range(n) if all(self.leq[x][y] for y in range(n)))
        self.top = next(x for x in range(n) if all(self.leq[y][x] for y in range(n)))
        self._covers = None
        self._height = None
        self._diamonds = None

    def _validate_order(self):
        n, leq = self.n, self.leq
        if n == 0:
            raise LatticeError("nonempty", (), "a lattice needs at least one element")
        for x in range(n):
            if not leq[x][x]:
                raise LatticeError("reflexive", (x,), f"not a partial order: {x} ≰ {x}")
        for x, y in combinations(range(n), 2):
            if leq[x][y] and leq[y][x]:
                raise LatticeError("antisymmetric", (x, y),
                                   f"not a partial order: {x} ≤ {y} ≤ {x} with {x} ≠ {y}")
        for x, y, z in product(range(n), repeat=3):
            if leq[x][y] and leq[y][z] and not leq[x][z]:
                raise LatticeError("transitive", (x, y, z),
                                   f"not a partial order: {x} ≤ {y} ≤ {z} but {x} ≰ {z}")

    def _bounds_tables(self):
        n, leq = self.n, self.leq
        join = [[0] * n for _ in range(n)]
        meet = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(x, n):
                ub = [z for z in range(n) if leq[x][z] and leq[y][z]]
                least = [z for z in ub if all(leq[z][w] for w in ub)]
                if len(least) != 1:
                    raise LatticeError("join", (x, y),
                                       f"not a lattice: {x} and {y} have no unique join")
                lb = [z for z in range(n) if leq[z][x] and leq[z][y]]
                greatest = [z for z in lb if all(leq[w][z] for w in lb)]
                if len(greatest) != 1:
                    raise LatticeError("meet", (x, y),
                                       f"not a lattice: {x} and {y} have no unique meet")
                join[x][y] = join[y][x] = least[0]
                meet[x][y] = meet[y][x] = greatest[0]
        return tuple(map(tuple, join)), tuple(map(tuple, meet))

    def le(self, x, y):
        return self.leq[x][y]

    def lt(self, x, y):
        return x != y and self.leq[x][y]

    def join(self, x, y):
        return self.join_table[x][y]

    def meet(self, x, y):
        return self.meet_table[x][y]

    @property
    def covers(self):
        if self._covers is None:
            self._covers = frozenset(_cover_pairs(self))
        return self._covers

    @property
    def heights(self):
        if self._height is None:
            self._height = _height_map(self)
        return self._height

    @property
    def diamonds(self):
        """All ``(top, left, right, bottom)`` diamonds of the cover graph, left < right."""
        if self._diamonds is None:
            cov = self.covers
            out = []
            for y, z in combinations(range(self.n), 2):
                top, bot = self.join(y, z), self.meet(y, z)
                if ((top, y) in cov and (top, z) in cov
                        and (y, bot) in cov and (z, bot) in cov):
                    out.append((top, y, z, bot))
            self._diamonds = tuple(out)
        return self._diamonds

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no element named {name!r}") from None

    def upper_covers(self, x):
        return [y for (y, b) in self.covers if b == x]

    def lower_covers(self, x):
        return [b for (y, b) in self.covers if y == x]

    def relabel(self, names):
        return FiniteLattice(self.leq, names)

    def to_json(self):
        pairs = [[i, j] for i in range(self.n) for j in range(self.n) if self.leq[i][j]]
        return {"elements": list(self.names), "leq": pairs}

    @classmethod
    def from_json(cls, data):
        return build_from_pairs(data["elements"], data["leq"])

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"FiniteLattice(n={self.n}, covers={len(self.covers)})"


def build(leq, names=None):
    """Validate a boolean order matrix and return a :class:`FiniteLattice`.

    Raises :class:`LatticeError` naming the first violated axiom.
    """
    return FiniteLattice(leq, names)


def build_from_pairs(elements, pairs, close=True):
    """Build from ``x ≤ y`` index pairs; reflexive-transitive closure applied if ``close``."""
    n = len(elements)
    rel = [[i == j for j in range(n)] for i in range(n)]
    for i, j in pairs:
        if isinstance(i, str):
            i = list(elements).index(i)
        if isinstance(j, str):
            j = list(elements).index(j)
        rel[i][j] = True
    if close:
        for k in range(n):
            for i in range(n):
                if rel[i][k]:
                    row_k = rel[k]
                    row_i = rel[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
    return FiniteLattice(rel, elements)


def _cover_pairs(L):
    n, leq = L.n, L.leq
    for x in range(n):
        for y in range(n):
            if x != y and leq[x][y]:
                if not any(z != x and z != y and leq[x][z] and leq[z][y] for z in range(n)):
                    yield (y, x)


def covers(L):
    """The cover arcs ``(y, x)`` with ``y`` covering ``x``."""
    return L.covers


def _height_map(L):
    below = {x: [b for (y, b) in L.covers if y == x] for x in range(L.n)}
    order = sorted(range(L.n), key=lambda x: sum(L.leq[y][x] for y in range(L.n)))
    h = {}
    for x in order:
        h[x] = max((h[b] + 1 for b in below[x]), default=0)
    return h


def height(L):
    """Longest directed cover-path length from each element down to 0̂."""
    return dict(L.heights)


def is_ranked(L):
    h = L.heights
    return all(h[y] == h[x] + 1 for (y, x) in L.covers)


def _modular_by_height(L):
    if not is_ranked(L):
        return False
    h = L.heights
    return all(h[x] + h[y] == h[L.meet(x, y)] + h[L.join(x, y)]
               for x, y in combinations(range(L.n), 2))


def join_neighbors(L):
    """Pairs ``{x, y}`` with ``x ∨ y`` covering both."""
    cov = L.covers
    return {frozenset((x, y)) for x, y in combinations(range(L.n), 2)
            if (L.join(x, y), x) in cov and (L.join(x, y), y) in cov}


def meet_neighbors(L):
    """Pairs ``{x, y}`` that both cover ``x ∧ y``."""
    cov = L.covers
    return {frozenset((x, y)) for x, y in combinations(range(L.n), 2)
            if (x, L.meet(x, y)) in cov and (y, L.meet(x, y)) in cov}


def _modular_by_neighbors(L):
    vee = join_neighbors(L)
    wedge = meet_neighbors(L)
    return vee == wedge  # then both equal their intersection, the diamond relation


def _modular_by_law(L):
    rng = range(L.n)
    for x, y in product(rng, rng):
        if not L.leq[x][y]:
            continue
        for w in rng:
            if L.meet(L.join(x, w), y) != L.join(x, L.meet(w, y)):
                return False
    return True


def modularity_report(L):
    """The three equivalent modularity tests, evaluated independently."""
    return {
        "height": _modular_by_height(L),
        "neighbors": _modular_by_neighbors(L),
        "law": _modular_by_law(L),
    }


def is_modular(L):
    """Ranked and ``h(x)+h(y) = h(x∧y)+h(x∨y)`` for all pairs."""
    return _modular_by_height(L)


def is_distributive(L):
    rng = range(L.n)
    return all(L.meet(x, L.join(y, z)) == L.join(L.meet(x, y), L.meet(x, z))
               for x, y, z in product(rng, rng, rng))


def is_sublattice(L, K):
    K = set(K)
    return all(L.join(x, y) in K and L.meet(x, y) in K for x, y in combinations(K, 2))


def sublattice_generated(L, Y):
    """Least superset of ``Y`` closed under pairwise ``∨`` and ``∧``."""
    K = set(Y)
    frontier = list(K)
    while frontier:
        new = []
        current = list(K)
        for x in frontier:
            for y in current:
                for z in (L.join(x, y), L.meet(x, y)):
                    if z not in K:
                        K.add(z)
                        new.append(z)
        frontier = new
    return frozenset(K)


def induced_arcs(L, K):
    """Cover arcs of ``L`` with both endpoints in ``K``."""
    K = set(K)
    return frozenset(a for a in L.covers if a[0] in K and a[1] in K)


def is_cover_preserving(L, K):
    """Every comparable pair of ``K`` is joined by a directed cover path inside ``K``.

    Raises ValueError when ``K`` is not a sublattice.
    """
    K = frozenset(K)
    if not is_sublattice(L, K):
        raise ValueError("is_cover_preserving needs a sublattice")
    down = {x: [] for x in K}
    for (y, x) in induced_arcs(L, K):
        down[y].append(x)
    for y in K:
        seen = {y}
        stack = [y]
        while stack:
            u = stack.pop()
            for v in down[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        if any(L.leq[x][y] and x not in seen for x in K):
            return False
    return True


def internal_covers(L, K):
    """Cover arcs of ``K`` viewed as a lattice in its own right."""
    K = list(K)
    out = set()
    for x in K:
        for y in K:
            if L.lt(x, y) and not any(L.lt(x, z) and L.lt(z, y) for z in K):
                out.add((y, x))
    return frozenset(out)


def sublattices(L, nontrivial=False):
    """Every nonempty sublattice, by brute force over subsets (small ``L`` only)."""
    if L.n > 16:
        raise ValueError("sublattice enumeration is limited to 16 elements")
    out = []
    for mask in range(1, 1 << L.n):
        K = [x for x in range(L.n) if mask >> x & 1]
        if nontrivial and len(K) < 2:
            continue
        if is_sublattice(L, K):
            out.append(frozenset(K))
    return out


def distance(L, x, y, arcs=None):
    """Undirected BFS distance in the cover graph (or in ``arcs``); None if unreachable."""
    arcs = L.covers if arcs is None else arcs
    nbr = {}
    for a, b in arcs:
        nbr.setdefault(a, []).append(b)
        nbr.setdefault(b, []).append(a)
    if x == y:
        return 0
    dist = {x: 0}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        for v in nbr.get(u, ()):
            if v not in dist:
                dist[v] = dist[u] + 1
                if v == y:
                    return dist[v]
                queue.append(v)
    return None


# --- standard families -------------------------------------------------------

MAX_BOOLEAN = 6
MAX_CHAIN = 64
MAX_DIVISORS = 2000
MAX_PRODUCT = 256


def boolean_lattice(n):
    if not 0 <= n <= MAX_BOOLEAN:
        raise ValueError(f"boolean:n supports 0 <= n <= {MAX_BOOLEAN}")
    size = 1 << n
    leq = [[(x & y) == x for y in range(size)] for x in range(size)]
    names = ["{" + ",".join(str(i + 1) for i in range(n) if x >> i & 1) + "}"
             for x in range(size)]
    return FiniteLattice(leq, names)


def chain(n):
    if not 1 <= n <= MAX_CHAIN:
        raise ValueError(f"chain:n supports 1 <= n <= {MAX_CHAIN}")
    return FiniteLattice([[x <= y for y in range(n)] for x in range(n)], [str(i) for i in range(n)])


def m3():
    names = ["0", "a", "b", "c", "1"]
    pairs = [(0, i) for i in range(5)] + [(i, 4) for i in range(5)]
    return build_from_pairs(names, pairs)


def n5():
    # 0 < a < b < 1 and 0 < c < 1
    names = ["0", "a", "b", "c", "1"]
    pairs = [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]
    return build_from_pairs(names, pairs)


def divisor_lattice(m):
    if not 1 <= m <= MAX_DIVISORS:
        raise ValueError(f"divisors:m supports 1 <= m <= {MAX_DIVISORS}")
    ds = [d for d in range(1, m + 1) if m % d == 0]
    return FiniteLattice([[b % a == 0 for b in ds] for a in ds], [str(d) for d in ds])


def lattice_product(A, B):
    """Componentwise-ordered product; element ``(a, b)`` has index ``a*|B| + b``."""
    if A.n * B.n > MAX_PRODUCT:
        raise ValueError(f"product lattices are limited to {MAX_PRODUCT} elements")
    idx = [(a, b) for a in range(A.n) for b in range(B.n)]
    leq = [[A.leq[a][c] and B.leq[b][d] for (c, d) in idx] for (a, b) in idx]
    names = [f"({A.names[a]},{B.names[b]})" for (a, b) in idx]
    return FiniteLattice(leq, names)


def _split_args(text):
    depth, start, parts = 0, 0, []
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i].strip())
            start = i + 1
    parts.append(text[start:].strip())
    return parts


def make_standard(family, size=None):
    """Named corpus lattices.

    Accepts ``boolean:n``, ``chain:n``, ``m3``, ``n5``, ``divisors:m`` and
    ``product(A,B)`` (nesting allowed), or a family name plus ``size``.
    """
    text = family.strip().lower()
    if size is not None:
        text = f"{text}:{size}"
    m = re.fullmatch(r"product\((.*)\)", text)
    if m:
        parts = _split_args(m.group(1))
        if len(parts) != 2:
            raise ValueError(f"product takes two lattices: {family!r}")
        return lattice_product(make_standard(parts[0]), make_standard(parts[1]))
    name, _, arg = text.partition(":")
    if name in ("m3", "n5"):
        if arg:
            raise ValueError(f"{name} takes no size")
        return m3() if name == "m3" else n5()
    makers = {"boolean": boolean_lattice, "chain": chain, "divisors": divisor_lattice}
    if name not in makers:
        raise ValueError(f"unknown lattice family {family!r}")
    if not arg.isdigit():
        raise ValueError(f"family {name} needs an integer size, e.g. {name}:3")
    return makers[name](int(arg))
