"""Distributive lattices as downset lattices of pointed posets.

A pointed poset carries explicit bottom and top sentinels.  A downset
contains the bottom, omits the top, and is closed downward; the downsets
ordered by inclusion form a distributive lattice.  Sublattices of that
lattice correspond to extensions (pointed quasi-orders containing the
base order), which is what makes the closure procedure here pure
relation algebra.

Relations are stored as frozensets of ``(i, j)`` pairs meaning ``i ≤ j``.
"""

import json
from itertools import combinations

import networkx as nx

from . import lattice as lat
from .diamond import vertex_components

__all__ = [
    "QuasiOrder",
    "PointedPoset",
    "DownsetLattice",
    "downset_lattice",
    "order_from_family",
    "extension_sublattice",
    "is_cover_preserving_extension",
    "downset_covers",
    "compatible",
    "closure_dldc",
    "join_irreducibles",
    "represent",
    "extensions",
    "poset_isomorphism",
]

MAX_DOWNSET_ELEMENTS = 22


def _closure(n, pairs):
    rows = [set() for _ in range(n)]
    for i in range(n):
        rows[i].add(i)
    for i, j in pairs:
        rows[i].add(j)
    for k in range(n):
        for i in range(n):
            if k in rows[i]:
                rows[i] |= rows[k]
    return frozenset((i, j) for i in range(n) for j in rows[i])


class QuasiOrder:
    """A pointed quasi-order on ``range(n)``: reflexive and transitive.

    ``rel`` is taken as given when ``close`` is false; otherwise the
    reflexive-transitive closure is applied.
    """

    def __init__(self, n, rel, bottom, top, names=None, close=True):
        self.n = n
        self.rel = _closure(n, rel) if close else frozenset(rel)
        self.bottom = bottom
        self.top = top
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
        self._classes = None

    def le(self, i, j):
        return (i, j) in self.rel

    def is_transitive(self):
        succ = {i: {j for (a, j) in self.rel if a == i} for i in range(self.n)}
        return all(succ[j] <= succ[i] for (i, j) in self.rel)

    def is_pointed(self):
        return (all(self.le(self.bottom, x) and self.le(x, self.top) for x in range(self.n))
                and not self.le(self.top, self.bottom))

    def extends(self, other):
        return other.rel <= self.rel

    def cls(self, x):
        """The equivalence class of ``x`` (mutually related elements)."""
        return frozenset(y for y in range(self.n) if self.le(x, y) and self.le(y, x))

    @property
    def classes(self):
        if self._classes is None:
            seen, out = set(), []
            for x in range(self.n):
                if x not in seen:
                    c = self.cls(x)
                    seen |= c
                    out.append(c)
            self._classes = tuple(out)
        return self._classes

    def is_downset(self, D):
        D = frozenset(D)
        if self.bottom not in D or self.top in D:
            return False
        return all(i in D for (i, j) in self.rel if j in D)

    def intersect(self, other):
        return QuasiOrder(self.n, self.rel & other.rel, self.bottom, self.top, self.names, close=False)

    def join_closure(self, other):
        """Transitive closure of the union of the two relations."""
        return QuasiOrder(self.n, self.rel | other.rel, self.bottom, self.top, self.names)

    def __eq__(self, other):
        return isinstance(other, QuasiOrder) and (self.n, self.rel, self.bottom, self.top) == (
            other.n, other.rel, other.bottom, other.top)

    def __hash__(self):
        return hash((self.n, self.rel, self.bottom, self.top))

    def to_json(self):
        return {
            "elements": list(self.names),
            "leq": sorted([i, j] for (i, j) in self.rel),
            "bottom": self.bottom,
            "top": self.top,
            "classes": sorted(sorted(c) for c in self.classes),
        }

    def __repr__(self):
        return f"QuasiOrder(n={self.n}, |rel|={len(self.rel)})"


class PointedPoset(QuasiOrder):
    """A pointed partial order (all equivalence classes are singletons)."""

    def __init__(self, n, rel, bottom, top, names=None, close=True):
        super().__init__(n, rel, bottom, top, names, close)
        if bottom == top:
            raise ValueError("a pointed poset needs distinct bottom and top")
        for i, j in self.rel:
            if i != j and (j, i) in self.rel:
                raise ValueError(f"not antisymmetric: {self.names[i]} and {self.names[j]}")
        if not self.is_pointed():
            raise ValueError("bottom/top sentinels must lie below/above every element")

    @classmethod
    def from_middle(cls, m, pairs=(), names=None):
        """Pointed poset on ``m`` middle elements ``0..m-1`` plus sentinels ``m`` (bottom), ``m+1`` (top)."""
        bottom, top = m, m + 1
        rel = set(pairs)
        for x in range(m + 2):
            rel.add((bottom, x))
            rel.add((x, top))
        if names is None:
            names = [str(i) for i in range(m)] + ["bottom", "top"]
        return cls(m + 2, rel, bottom, top, names)

    @property
    def middle(self):
        return [x for x in range(self.n) if x not in (self.bottom, self.top)]

    @classmethod
    def from_json(cls, data):
        names = data["elements"]
        idx = {name: k for k, name in enumerate(names)}

        def res(v):
            return idx[v] if isinstance(v, str) else int(v)

        pairs = [(res(i), res(j)) for i, j in data["leq"]]
        return cls(len(names), pairs, res(data["bottom"]), res(data["top"]), names)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def to_json(self):
        out = super().to_json()
        del out["classes"]
        return out


class DownsetLattice:
    """The lattice of downsets of a pointed poset, with its poset attached.

    ``downsets[k]`` is the frozenset for lattice element ``k``.
    """

    def __init__(self, poset, downsets, lattice):
        self.poset = poset
        self.downsets = downsets
        self.lattice = lattice
        self.index = {D: k for k, D in enumerate(downsets)}

    def __len__(self):
        return len(self.downsets)


def _enumerate_downsets(q):
    # work class-by-class in a linear extension of the class order
    if q.n > MAX_DOWNSET_ELEMENTS:
        raise ValueError(f"downset enumeration is limited to {MAX_DOWNSET_ELEMENTS} elements")
    E0, E1 = q.cls(q.bottom), q.cls(q.top)
    free = [c for c in q.classes if c != E0 and c != E1]
    rep = {c: min(c) for c in free}
    below = {c: [d for d in free if d != c and q.le(rep[d], rep[c])] for c in free}
    free.sort(key=lambda c: len(below[c]))
    out = []

    def rec(k, chosen):
        if k == len(free):
            D = set(E0)
            for c in chosen:
                D |= c
            out.append(frozenset(D))
            return
        c = free[k]
        rec(k + 1, chosen)
        if all(d in chosen for d in below[c]):
            chosen.add(c)
            rec(k + 1, chosen)
            chosen.discard(c)

    rec(0, set())
    return out


def _downset_name(poset, D):
    inner = [poset.names[x] for x in sorted(D) if x != poset.bottom]
    return "{" + ",".join(inner) + "}"


def downset_lattice(poset):
    """Lattice of all downsets of a pointed poset (or quasi-order) under inclusion."""
    downsets = sorted(_enumerate_downsets(poset), key=lambda D: (len(D), sorted(D)))
    leq = [[a <= b for b in downsets] for a in downsets]
    names = [_downset_name(poset, D) for D in downsets]
    return DownsetLattice(poset, downsets, lat.FiniteLattice(leq, names))


def order_from_family(poset, family):
    """``i ≤ j`` iff every member of ``family`` containing ``j`` also contains ``i``."""
    family = [frozenset(Y) for Y in family]
    rel = set()
    for i in range(poset.n):
        for j in range(poset.n):
            if all(i in Y for Y in family if j in Y):
                rel.add((i, j))
    return QuasiOrder(poset.n, rel, poset.bottom, poset.top, poset.names, close=False)


def _require_extension(host, q):
    if not q.extends(host):
        raise ValueError("the quasi-order does not extend the host order")
    if not q.is_pointed():
        raise ValueError("the quasi-order is not pointed")


def extension_sublattice(DL, q):
    """Indices of host downsets that are also downsets of the extension ``q``."""
    _require_extension(DL.poset, q)
    return frozenset(k for k, D in enumerate(DL.downsets) if q.is_downset(D))


def is_cover_preserving_extension(q):
    """Every class other than those of the sentinels is a singleton."""
    E0, E1 = q.cls(q.bottom), q.cls(q.top)
    return all(len(c) == 1 for c in q.classes if c != E0 and c != E1)


def downset_covers(q, D, C):
    """Whether ``D`` covers ``C`` in the downset lattice of ``q``.

    True iff ``D - C`` is one equivalence class that is maximal among
    the classes inside ``D``.
    """
    D, C = frozenset(D), frozenset(C)
    if not C <= D:
        raise ValueError("downset_covers needs C ⊆ D")
    diff = D - C
    if not diff:
        return False
    x = next(iter(diff))
    E = q.cls(x)
    if E != diff:
        return False
    # maximal: nothing in D strictly above E
    return not any(q.le(x, y) and not q.le(y, x) for y in D)


def compatible(q1, q2):
    """True iff bottom and top stay in different classes of the joined relation."""
    return not q1.join_closure(q2).le(q1.top, q1.bottom)


def closure_dldc(DL, A, pick=None):
    """Diamond closure in a downset lattice, computed on quasi-orders.

    Each arc-component contributes the order induced by the downsets it
    touches; compatible orders are merged by intersection until none
    remain.  Returns ``(arcs, orders)`` where ``arcs`` is the union of
    the cover graphs of the resulting sublattices.
    """
    L = DL.lattice
    A = frozenset(A)
    bad = A - L.covers
    if bad:
        raise ValueError(f"arcs not in the cover graph: {sorted(bad)}")
    orders = [order_from_family(DL.poset, [DL.downsets[k] for k in comp])
              for comp in vertex_components(A)]
    while True:
        pairs = [(i, j) for i, j in combinations(range(len(orders)), 2)
                 if compatible(orders[i], orders[j])]
        if not pairs:
            break
        i, j = pairs[0] if pick is None else pick(pairs)
        merged = orders[i].intersect(orders[j])
        orders = [o for k, o in enumerate(orders) if k not in (i, j)] + [merged]
    arcs = set()
    for q in orders:
        arcs |= lat.induced_arcs(L, extension_sublattice(DL, q))
    orders.sort(key=lambda q: sorted(q.rel))
    return frozenset(arcs), orders


def join_irreducibles(L):
    """Pointed poset of join-irreducibles of a distributive lattice.

    Returns ``(poset, elements)`` where ``elements[k]`` is the lattice
    element behind middle element ``k``; the sentinels are fresh.
    """
    if not lat.is_distributive(L):
        raise ValueError("join_irreducibles needs a distributive lattice")
    J = [x for x in range(L.n) if len(L.lower_covers(x)) == 1]
    pairs = [(a, b) for a in range(len(J)) for b in range(len(J)) if L.leq[J[a]][J[b]]]
    names = [L.names[x] for x in J] + ["bottom", "top"]
    return PointedPoset.from_middle(len(J), pairs, names), J


def represent(L):
    """Birkhoff representation of a distributive lattice.

    Returns ``(DL, iso)`` with ``iso[x]`` the index in ``DL`` of the
    downset of join-irreducibles below ``x``.
    """
    P, J = join_irreducibles(L)
    DL = downset_lattice(P)
    iso = []
    for x in range(L.n):
        D = frozenset([P.bottom] + [k for k, j in enumerate(J) if L.leq[j][x]])
        iso.append(DL.index[D])
    if sorted(iso) != list(range(len(DL))):
        raise AssertionError("join-irreducible map is not a bijection")
    return DL, iso


def extensions(poset):
    """Every pointed extension of ``poset``, by brute force over optional pairs."""
    n = poset.n
    optional = [(i, j) for i in range(n) for j in range(n)
                if i != j and (i, j) not in poset.rel and (i, j) != (poset.top, poset.bottom)]
    if len(optional) > 16:
        raise ValueError("extension enumeration is limited to small posets")
    out = []
    for mask in range(1 << len(optional)):
        rel = set(poset.rel)
        rel.update(p for k, p in enumerate(optional) if mask >> k & 1)
        q = QuasiOrder(n, rel, poset.bottom, poset.top, poset.names, close=False)
        if q.is_transitive() and q.is_pointed():
            out.append(q)
    return out


def _strict_digraph(q):
    g = nx.DiGraph()
    g.add_nodes_from(range(q.n))
    g.add_edges_from((i, j) for (i, j) in q.rel if i != j)
    return g


def poset_isomorphism(p1, p2):
    """An order isomorphism ``p1 -> p2`` fixing the sentinels, or None."""
    if p1.n != p2.n:
        return None
    g1, g2 = _strict_digraph(p1), _strict_digraph(p2)
    for g, p in ((g1, p1), (g2, p2)):
        for x in range(p.n):
            g.nodes[x]["role"] = "bottom" if x == p.bottom else "top" if x == p.top else ""
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(
        g1, g2, node_match=lambda a, b: a["role"] == b["role"])
    return next(matcher.isomorphisms_iter(), None)
