"""Lattices of Wedderburn polynomials over the rational quaternions.

For a finite list ``S`` of quaternions, the polynomials ``f_T`` for all
``T ⊆ S`` ordered by right divisibility form a modular lattice.  Each
cover arc ``r -> q`` carries the pseudo-root ``ξ`` with ``r = (t - ξ) q``.
Around a diamond the four pseudo-roots are tied by
``(t - u1)(t - v1) = (t - u2)(t - v2)``, which lets two of them be
recovered from the other two by conjugation.
"""

import json
from dataclasses import dataclass, field
from itertools import combinations

from . import diamond as dia
from . import lattice as lat
from .exactnum import Quaternion, quat_inv
from .ncpoly import (NCPoly, divides_right, gcrd, lclm, linear, poly_mul,
                     right_divide, subset_wedderburn, eval_right)

__all__ = [
    "DegenerateDiamond",
    "PseudoRootLattice",
    "build",
    "diamond_up",
    "diamond_down",
    "rational_generation_check",
    "generic_check",
    "chain_factorization",
    "maximal_chains",
    "load_elements",
]

MAX_ELEMENTS = 5


class DegenerateDiamond(ArithmeticError):
    """Two pseudo-roots on the same side of a diamond coincide."""


@dataclass(frozen=True)
class PseudoRootLattice:
    S: tuple
    polys: tuple
    lattice: lat.FiniteLattice
    psi: dict
    subset_index: dict = field(repr=False)

    @property
    def top(self):
        return self.lattice.top

    @property
    def bottom(self):
        return self.lattice.bottom

    def element(self, T):
        """Lattice index of ``f_T`` for an index subset ``T`` of ``S``."""
        return self.subset_index[frozenset(T)]

    def zero_arcs(self):
        """Arcs ``f_{s} -> 1``, one per distinct nonconstant singleton polynomial."""
        out = set()
        for k in range(len(self.S)):
            v = self.element({k})
            if v != self.bottom:
                out.add((v, self.bottom))
        return frozenset(out)

    def psi_table(self):
        return [
            {"top": r, "bottom": q, "top_poly": self.polys[r].to_json(),
             "bottom_poly": self.polys[q].to_json(), "psi": self.psi[(r, q)].to_json()}
            for (r, q) in sorted(self.psi)
        ]


def _poly_name(p):
    return str(p)


def build(S, check=True):
    """Build the Wedderburn lattice of ``S`` with its pseudo-root labels.

    With ``check`` the defining invariants are asserted: closure of the
    polynomial set under gcrd/lclm (agreeing with the lattice meet/join),
    modularity, and ``r = (t - ψ) q`` on every arc.
    """
    S = tuple(S)
    if len(S) > MAX_ELEMENTS:
        raise ValueError(f"at most {MAX_ELEMENTS} elements are supported")
    fT = subset_wedderburn(S)
    polys, index = [], {}
    subset_index = {}
    for T in sorted(fT, key=lambda T: (len(T), sorted(T))):
        p = fT[T]
        if p not in index:
            index[p] = len(polys)
            polys.append(p)
        subset_index[T] = index[p]
    # order polys by degree so the bottom (1) gets index 0
    order = sorted(range(len(polys)), key=lambda k: (polys[k].degree, k))
    remap = {old: new for new, old in enumerate(order)}
    polys = [polys[k] for k in order]
    subset_index = {T: remap[k] for T, k in subset_index.items()}

    n = len(polys)
    leq = [[a == b or (a.degree < b.degree and divides_right(a, b)) for b in polys]
           for a in polys]
    L = lat.FiniteLattice(leq, [_poly_name(p) for p in polys])

    psi = {}
    for (r, q) in L.covers:
        quot, rem = right_divide(polys[r], polys[q])
        if not rem.is_zero() or quot.degree != 1 or not quot.is_monic():
            raise AssertionError(f"arc {polys[r]} -> {polys[q]} is not a linear step")
        psi[(r, q)] = -quot.coeffs[0]

    PL = PseudoRootLattice(S, tuple(polys), L, psi, subset_index)
    if check:
        _check_invariants(PL)
    return PL


def _check_invariants(PL):
    L, polys = PL.lattice, PL.polys
    where = {p: k for k, p in enumerate(polys)}
    if len(polys) > 2 ** len(PL.S):
        raise AssertionError("more than 2^|S| Wedderburn polynomials")
    for a, b in combinations(range(len(polys)), 2):
        g = gcrd(polys[a], polys[b])
        m = lclm(polys[a], polys[b])
        if where.get(g) != L.meet(a, b):
            raise AssertionError(f"gcrd({polys[a]}, {polys[b]}) = {g} is not the lattice meet")
        if where.get(m) != L.join(a, b):
            raise AssertionError(f"lclm({polys[a]}, {polys[b]}) = {m} is not the lattice join")
    if not lat.is_modular(L):
        raise AssertionError("Wedderburn lattice is not modular")
    for (r, q), xi in PL.psi.items():
        if poly_mul(linear(xi), polys[q]) != polys[r]:
            raise AssertionError(f"r != (t - psi) q on arc {r} -> {q}")
    f_S = polys[L.top]
    for s in PL.S:
        if not eval_right(f_S, s).is_zero():
            raise AssertionError(f"f_S does not vanish at {s}")


def diamond_up(v1, v2):
    """Upper pseudo-roots of a diamond from the two lower ones.

    ``u1 = (v1-v2) v2 (v1-v2)^-1`` and ``u2 = (v2-v1) v1 (v2-v1)^-1``, so
    that ``(t-u1)(t-v1) = (t-u2)(t-v2)``.
    """
    if v1 == v2:
        raise DegenerateDiamond("degenerate diamond: lower pseudo-roots coincide")
    d = v1 - v2
    d_inv = quat_inv(d)
    u1 = d * v2 * d_inv
    u2 = d * v1 * d_inv  # (v2-v1) v1 (v2-v1)^-1; the signs cancel
    if __debug__:
        _assert_relation(u1, v1, u2, v2)
    return u1, u2


def diamond_down(u1, u2):
    """Lower pseudo-roots of a diamond from the two upper ones.

    ``v1 = (u1-u2)^-1 u2 (u1-u2)`` and ``v2 = (u2-u1)^-1 u1 (u2-u1)``.
    """
    if u1 == u2:
        raise DegenerateDiamond("degenerate diamond: upper pseudo-roots coincide")
    e = u1 - u2
    e_inv = quat_inv(e)
    v1 = e_inv * u2 * e
    v2 = e_inv * u1 * e
    if __debug__:
        _assert_relation(u1, v1, u2, v2)
    return v1, v2


def _assert_relation(u1, v1, u2, v2):
    lhs = poly_mul(linear(u1), linear(v1))
    rhs = poly_mul(linear(u2), linear(v2))
    if lhs != rhs:
        raise AssertionError(f"(t-{u1})(t-{v1}) != (t-{u2})(t-{v2})")


@dataclass
class DerivationStep:
    arc: tuple
    op: str
    operands: tuple
    value: Quaternion

    def to_json(self):
        return {"arc": list(self.arc), "op": self.op,
                "operands": [list(a) for a in self.operands], "value": self.value.to_json()}


@dataclass
class GenerationReport:
    given: frozenset
    closure: frozenset
    derived: dict
    steps: list
    mismatches: list
    degenerate: list

    @property
    def ok(self):
        return not self.mismatches and set(self.derived) == set(self.closure)

    def to_json(self):
        return {
            "ok": self.ok,
            "given": dia.canonical_arcs(self.given),
            "closure": dia.canonical_arcs(self.closure),
            "derived_count": len(self.derived),
            "steps": [s.to_json() for s in self.steps],
            "mismatches": self.mismatches,
            "degenerate": self.degenerate,
        }

    def text(self, PL=None):
        lines = [f"given arcs: {len(self.given)}; closure: {len(self.closure)} arcs; "
                 f"derived: {len(self.derived) - len(self.given)} new"]
        for s in self.steps:
            a, b = s.operands
            lines.append(f"  {s.arc[0]}->{s.arc[1]} := {s.op}({a[0]}->{a[1]}, {b[0]}->{b[1]}) = {s.value}")
        for m in self.mismatches:
            lines.append(f"  MISMATCH {m}")
        for d in self.degenerate:
            lines.append(f"  degenerate diamond skipped: {d}")
        lines.append("exact match: " + ("yes" if self.ok else "NO"))
        return "\n".join(lines)


def rational_generation_check(PL, B):
    """Replay the diamond closure of ``B`` computing pseudo-roots by conjugation.

    Values start as the stored ψ on ``B``; every newly reached arc gets
    its value from :func:`diamond_up` or :func:`diamond_down` applied to
    already-derived values, and is compared to the stored ψ exactly.
    """
    L = PL.lattice
    B = frozenset(B)
    closure = dia.closure_naive(L, B)
    known = {a: PL.psi[a] for a in B}
    steps, mismatches, degenerate = [], [], []
    ds = dia.diamonds(L)
    changed = True
    while changed:
        changed = False
        for d in ds:
            left_up, right_up = (d.top, d.left), (d.top, d.right)
            left_dn, right_dn = (d.left, d.bottom), (d.right, d.bottom)
            if left_dn in known and right_dn in known and not (left_up in known and right_up in known):
                op, srcs, dsts = "diamond_up", (left_dn, right_dn), (left_up, right_up)
            elif left_up in known and right_up in known and not (left_dn in known and right_dn in known):
                op, srcs, dsts = "diamond_down", (left_up, right_up), (left_dn, right_dn)
            else:
                continue
            fn = diamond_up if op == "diamond_up" else diamond_down
            try:
                values = fn(known[srcs[0]], known[srcs[1]])
            except DegenerateDiamond as exc:
                entry = f"{op} at diamond {tuple(d)}: {exc}"
                if entry not in degenerate:
                    degenerate.append(entry)
                continue
            for arc, value in zip(dsts, values):
                if arc in known:
                    continue
                if value != PL.psi[arc]:
                    mismatches.append({"arc": list(arc), "derived": value.to_json(),
                                       "expected": PL.psi[arc].to_json()})
                known[arc] = value
                steps.append(DerivationStep(arc, op, srcs, value))
                changed = True
    return GenerationReport(B, closure, known, steps, mismatches, degenerate)


def generic_check(PL):
    """All ``2^|S|`` polynomials distinct with ``deg f_T = |T|``."""
    if len(PL.polys) != 2 ** len(PL.S):
        return False
    return all(PL.polys[k].degree == len(T) for T, k in PL.subset_index.items())


def maximal_chains(PL):
    """Every directed cover path from ``f_S`` down to ``1``."""
    L = PL.lattice
    down = {x: sorted(b for (y, b) in L.covers if y == x) for x in range(L.n)}
    out = []

    def walk(path):
        if path[-1] == L.bottom:
            out.append(list(path))
            return
        for b in down[path[-1]]:
            path.append(b)
            walk(path)
            path.pop()

    walk([L.top])
    return out


def chain_factorization(PL, path):
    """Pseudo-roots ``[a_k, ..., a_1]`` along a maximal path from ``f_S`` to ``1``.

    The product ``(t - a_k) ... (t - a_1)`` is checked to equal ``f_S``.
    """
    L = PL.lattice
    if not path or path[0] != L.top or path[-1] != L.bottom:
        raise ValueError("path must run from f_S down to 1")
    roots = []
    for r, q in zip(path, path[1:]):
        if (r, q) not in L.covers:
            raise ValueError(f"{r} -> {q} is not a cover arc")
        roots.append(PL.psi[(r, q)])
    prod = NCPoly.constant(1)
    for a in roots:
        prod = poly_mul(prod, linear(a))
    if prod != PL.polys[L.top]:
        raise AssertionError("chain factorization does not multiply back to f_S")
    return roots


def load_elements(path):
    """Read a quaternion-set JSON file ``{"elements": [[a,b,c,d], ...]}``."""
    with open(path) as fh:
        data = json.load(fh)
    return [Quaternion.from_json(e) for e in data["elements"]]
