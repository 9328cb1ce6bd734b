"""Diamond closure on the cover graph of a finite lattice.

Arc sets are frozensets of ``(top, bottom)`` cover arcs of a host
:class:`~diamondlat.lattice.FiniteLattice`.  A CS-packing is a tuple of
pairwise-disjoint frozensets of elements, each a cover-preserving
sublattice with at least two elements, kept sorted by smallest element.
"""

from collections import namedtuple
from itertools import combinations

from . import lattice as lat

__all__ = [
    "Diamond",
    "NotModularError",
    "arc_components",
    "vertex_components",
    "diamonds",
    "is_diamond_closed",
    "closure_naive",
    "closure_mldc",
    "packing_arcs",
    "packing_of_closed",
    "generates_all",
    "updown_normalize",
    "cover_preserving_sublattices",
    "cs_packings",
    "canonical_arcs",
]


class Diamond(namedtuple("Diamond", "top left right bottom")):
    __slots__ = ()

    @property
    def out_v(self):
        return frozenset(((self.top, self.left), (self.top, self.right)))

    @property
    def in_v(self):
        return frozenset(((self.left, self.bottom), (self.right, self.bottom)))

    @property
    def arcs(self):
        return self.out_v | self.in_v


class NotModularError(ValueError):
    pass


def canonical_arcs(arcs):
    """Arcs as a sorted list of ``[top, bottom]`` lists."""
    return [list(a) for a in sorted(arcs)]


def _check_arcs(L, arcs, within=None):
    arcs = frozenset(arcs)
    universe = L.covers if within is None else within
    bad = arcs - universe
    if bad:
        raise ValueError(f"arcs not in the ambient arc set: {sorted(bad)}")
    return arcs


def _components(arcs):
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in arcs:
        parent.setdefault(a, a)
        parent.setdefault(b, b)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups = {}
    for a, b in arcs:
        groups.setdefault(find(a), set()).add((a, b))
    return [frozenset(g) for g in groups.values()]


def arc_components(arcs):
    """Partition ``arcs`` into maximal connected (undirected) pieces, in canonical order."""
    return sorted(_components(frozenset(arcs)), key=lambda c: min(c))


def vertex_components(arcs):
    """Vertex sets of the arc-components, in the same order."""
    return [frozenset(v for arc in comp for v in arc) for comp in arc_components(arcs)]


def diamonds(L, arcs=None):
    """Diamonds of ``L`` whose four arcs all lie in ``arcs`` (default: the whole cover graph)."""
    ds = [Diamond(*d) for d in L.diamonds]
    if arcs is None:
        return ds
    arcs = frozenset(arcs)
    return [d for d in ds if d.arcs <= arcs]


def _spans(S, d):
    return d.out_v <= S or d.in_v <= S


def is_diamond_closed(L, S, within=None):
    within = L.covers if within is None else frozenset(within)
    S = _check_arcs(L, S, within)
    return all(d.arcs <= S for d in diamonds(L, within) if _spans(S, d))


def closure_naive(L, B, within=None, rng=None):
    """Least diamond-closed superset of ``B`` inside ``within``.

    Adds whole diamonds spanned by the current set until none is left;
    ``rng`` (a ``random.Random``) shuffles the processing order.
    """
    within = L.covers if within is None else frozenset(within)
    S = set(_check_arcs(L, B, within))
    ds = diamonds(L, within)
    by_arc = {}
    for d in ds:
        for a in d.arcs:
            by_arc.setdefault(a, []).append(d)
    work = list(S)
    if rng is not None:
        rng.shuffle(work)
    while work:
        arc = work.pop()
        touching = by_arc.get(arc, ())
        if rng is not None:
            touching = list(touching)
            rng.shuffle(touching)
        for d in touching:
            if _spans(S, d):
                for a in d.arcs:
                    if a not in S:
                        S.add(a)
                        work.append(a)
    return frozenset(S)


def packing_arcs(L, packing):
    """``C_L[K_1] ∪ ... ∪ C_L[K_s]``."""
    out = set()
    for K in packing:
        out |= lat.induced_arcs(L, K)
    return frozenset(out)


def _canonical_packing(blocks):
    return tuple(sorted((frozenset(b) for b in blocks), key=lambda b: min(b)))


def _require_modular(L):
    if not lat.is_modular(L):
        raise NotModularError("this procedure needs a modular host lattice")


def closure_mldc(L, B, pick=None):
    """Diamond closure via merging generated sublattices (modular hosts only).

    Blocks start as the sublattices generated by the vertex-components of
    ``B``; any two intersecting blocks are replaced by the sublattice
    generated by their union until the blocks are disjoint.  ``pick``
    chooses among intersecting pairs (default: the lexicographically
    first).  Returns ``(arcs, packing)``.
    """
    _require_modular(L)
    B = _check_arcs(L, B)
    blocks = [lat.sublattice_generated(L, Y) for Y in vertex_components(B)]
    while True:
        pairs = [(i, j) for i, j in combinations(range(len(blocks)), 2)
                 if blocks[i] & blocks[j]]
        if not pairs:
            break
        i, j = pairs[0] if pick is None else pick(pairs)
        merged = lat.sublattice_generated(L, blocks[i] | blocks[j])
        blocks = [b for k, b in enumerate(blocks) if k not in (i, j)] + [merged]
    packing = _canonical_packing(blocks)
    return packing_arcs(L, packing), packing


def packing_of_closed(L, S):
    """The CS-packing whose induced arcs are exactly the diamond-closed set ``S``."""
    _require_modular(L)
    S = _check_arcs(L, S)
    if not is_diamond_closed(L, S):
        raise ValueError("packing_of_closed needs a diamond-closed arc set")
    blocks = []
    for comp, verts in zip(arc_components(S), vertex_components(S)):
        if not lat.is_sublattice(L, verts):
            raise AssertionError(f"component on {sorted(verts)} is not a sublattice")
        if not lat.is_cover_preserving(L, verts):
            raise AssertionError(f"component on {sorted(verts)} is not cover-preserving")
        if lat.induced_arcs(L, verts) != comp:
            raise AssertionError(f"component on {sorted(verts)} is not induced")
        blocks.append(verts)
    return _canonical_packing(blocks)


def generates_all(L, B):
    """True iff the diamond closure of ``B`` is the whole cover graph."""
    _require_modular(L)
    return closure_mldc(L, B)[0] == L.covers


def _shortest_path(arcs, x, y):
    nbr = {}
    for a, b in arcs:
        nbr.setdefault(a, []).append(b)
        nbr.setdefault(b, []).append(a)
    prev = {x: None}
    frontier = [x]
    while frontier and y not in prev:
        nxt = []
        for u in frontier:
            for v in sorted(nbr.get(u, ())):
                if v not in prev:
                    prev[v] = u
                    nxt.append(v)
        frontier = nxt
    if y not in prev:
        return None
    path = [y]
    while path[-1] != x:
        path.append(prev[path[-1]])
    return path[::-1]


def updown_normalize(L, S, x, y):
    """An up-down path of length ``d(x, y)`` from ``x`` to ``y`` inside ``S``.

    Starts from a shortest path in ``S`` and removes each down-then-up
    inversion ``a > b < c`` by routing through ``a ∨ c`` instead, which
    stays in ``S`` because ``S`` is diamond-closed.
    """
    S = _check_arcs(L, S)
    if not is_diamond_closed(L, S):
        raise ValueError("updown_normalize needs a diamond-closed arc set")
    path = [x] if x == y else _shortest_path(S, x, y)
    if path is None:
        raise ValueError(f"{x} and {y} are not connected in S")
    if len(path) - 1 != lat.distance(L, x, y):
        raise ValueError("S has no path of length d(x, y) between the given elements")

    def is_up(i):  # step i goes path[i-1] -> path[i]
        return (path[i], path[i - 1]) in L.covers

    while True:
        inv = next((i for i in range(1, len(path) - 1) if not is_up(i) and is_up(i + 1)), None)
        if inv is None:
            break
        a, c = path[inv - 1], path[inv + 1]
        top = L.join(a, c)
        if (top, a) not in S or (top, c) not in S:
            raise AssertionError("inversion elimination left S; S was not diamond-closed")
        path[inv] = top
    return path


def cover_preserving_sublattices(L):
    """All cover-preserving sublattices with at least two elements (brute force)."""
    return [K for K in lat.sublattices(L, nontrivial=True) if lat.is_cover_preserving(L, K)]


def cs_packings(L):
    """Every CS-packing of ``L`` (families of disjoint nontrivial cover-preserving sublattices)."""
    blocks = sorted(cover_preserving_sublattices(L), key=lambda K: (min(K), sorted(K)))
    out = []

    def extend(start, used, chosen):
        out.append(tuple(chosen))
        for k in range(start, len(blocks)):
            if not (blocks[k] & used):
                chosen.append(blocks[k])
                extend(k + 1, used | blocks[k], chosen)
                chosen.pop()

    extend(0, frozenset(), [])
    return [_canonical_packing(p) for p in out]
