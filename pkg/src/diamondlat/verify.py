"""Reproducible verification suites.

Each suite takes ``seed`` and an optional ``trials`` override and returns
a :class:`SuiteResult`.  The CLI's ``verify`` subcommand and the
acceptance tests both run these.
"""

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import birkhoff as bk
from . import diamond as dia
from . import lattice as lat
from . import pseudoroots as pr
from .exactnum import I, J, Quaternion
from .ncpoly import NCPoly, eval_right, gcrd, lclm, linear, poly_mul

CORPUS = (
    "boolean:2",
    "boolean:3",
    "boolean:4",
    "chain:4",
    "m3",
    "n5",
    "product(m3,chain:2)",
    "product(chain:2,chain:3)",
    "product(chain:3,chain:3)",
    "divisors:360",
)

RANDOM_EQUIVALENCE_LATTICES = (
    "boolean:4",
    "m3",
    "product(m3,chain:2)",
    "product(chain:3,chain:3)",
    "divisors:360",
)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str
    stats: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self):
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail} ({self.seconds:.1f}s)"

    def to_json(self):
        return {"suite": self.name, "passed": self.passed, "detail": self.detail,
                "stats": self.stats, "seconds": round(self.seconds, 3)}


# --- random generators --------------------------------------------------------

def random_rational(rng, max_num=3, max_den=2):
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def random_quaternion(rng):
    return Quaternion(*(random_rational(rng) for _ in range(4)))


def random_arcs(rng, L):
    arcs = sorted(L.covers)
    p = rng.random()
    return frozenset(a for a in arcs if rng.random() < p)


def random_pointed_poset(rng, max_middle=4):
    m = rng.randint(0, max_middle)
    perm = list(range(m))
    rng.shuffle(perm)
    p = rng.random()
    pairs = [(perm[a], perm[b]) for a, b in combinations(range(m), 2) if rng.random() < p]
    return bk.PointedPoset.from_middle(m, pairs)


def random_sets(seed, count):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        size = rng.choice((2, 3, 4))
        out.append([random_quaternion(rng) for _ in range(size)])
    return out


def all_pointed_posets(max_middle):
    """Every labelled pointed poset with at most ``max_middle`` middle elements."""
    out = []
    for m in range(max_middle + 1):
        pairs = [(a, b) for a in range(m) for b in range(m) if a != b]
        for mask in range(1 << len(pairs)):
            rel = {pairs[k] for k in range(len(pairs)) if mask >> k & 1}
            if any((b, a) in rel for (a, b) in rel):
                continue
            if any((a, c) not in rel for (a, b) in rel for (b2, c) in rel if b == b2 and a != c):
                continue
            out.append(bk.PointedPoset.from_middle(m, rel))
    return out


# --- suites ----------------------------------------------------------------------

def _timed(fn):
    def wrapper(seed=0, trials=None):
        t0 = time.perf_counter()
        res = fn(seed=seed, trials=trials)
        res.seconds = time.perf_counter() - t0
        return res
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _dldc_on_host(L, DL, iso, B):
    inv = {v: k for k, v in enumerate(iso)}
    arcs, orders = bk.closure_dldc(DL, {(iso[a], iso[b]) for a, b in B})
    return frozenset((inv[a], inv[b]) for a, b in arcs), orders


@_timed
def closure_exhaustive(seed=0, trials=None):
    """Naive, MLDC and DLDC closures agree on every arc subset of 2^[3]."""
    L = lat.make_standard("boolean:3")
    DL, iso = bk.represent(L)
    arcs = sorted(L.covers)
    bad = []
    for mask in range(1 << len(arcs)):
        B = frozenset(a for k, a in enumerate(arcs) if mask >> k & 1)
        naive = dia.closure_naive(L, B)
        mldc, _ = dia.closure_mldc(L, B)
        dldc, _ = _dldc_on_host(L, DL, iso, B)
        if not naive == mldc == dldc:
            bad.append(mask)
    n = 1 << len(arcs)
    return SuiteResult("closure-exhaustive", not bad,
                       f"{n - len(bad)}/{n} subsets agree (naive = mldc = dldc)",
                       {"subsets": n, "disagreements": len(bad)})


@_timed
def closure_random(seed=0, trials=None):
    """Naive vs MLDC (and DLDC on distributive hosts) on random arc subsets."""
    trials = 500 if trials is None else trials
    rng = random.Random(seed)
    stats, bad = {}, []
    for name in RANDOM_EQUIVALENCE_LATTICES:
        L = lat.make_standard(name)
        dist = lat.is_distributive(L)
        rep = bk.represent(L) if dist else None
        agree = 0
        for _ in range(trials):
            B = random_arcs(rng, L)
            naive = dia.closure_naive(L, B)
            mldc, _ = dia.closure_mldc(L, B)
            ok = naive == mldc
            if dist:
                ok = ok and _dldc_on_host(L, rep[0], rep[1], B)[0] == naive
            if ok:
                agree += 1
            else:
                bad.append((name, sorted(B)))
        stats[name] = {"trials": trials, "agree": agree, "dldc": dist}
    detail = ", ".join(f"{k} {v['agree']}/{v['trials']}" for k, v in stats.items())
    return SuiteResult("closure-random", not bad, detail, stats)


def _bijection_on(L):
    arcs = sorted(L.covers)
    closed = set()
    for mask in range(1 << len(arcs)):
        S = frozenset(a for k, a in enumerate(arcs) if mask >> k & 1)
        if dia.is_diamond_closed(L, S):
            closed.add(S)
    packings = dia.cs_packings(L)
    images = [dia.packing_arcs(L, p) for p in packings]
    injective = len(set(images)) == len(images)
    onto = set(images) == closed
    # connected nonempty closed sets <-> nontrivial cover-preserving sublattices
    cps = dia.cover_preserving_sublattices(L)
    cp_images = [lat.induced_arcs(L, K) for K in cps]
    connected = {S for S in closed if S and len(dia.arc_components(S)) == 1}
    single_ok = len(set(cp_images)) == len(cp_images) and set(cp_images) == connected
    return injective and onto and single_ok, {
        "closed_sets": len(closed), "cs_packings": len(packings),
        "injective": injective, "onto": onto,
        "cp_sublattices": len(cps), "connected_closed": len(connected),
    }


@_timed
def bijection(seed=0, trials=None):
    """CS-packings map bijectively onto diamond-closed sets (2^[2], 2^[3], M3)."""
    stats, ok = {}, True
    for name in ("boolean:2", "boolean:3", "m3"):
        good, st = _bijection_on(lat.make_standard(name))
        stats[name] = st
        ok = ok and good
    detail = ", ".join(f"{k}: {v['cs_packings']} packings <-> {v['closed_sets']} closed sets"
                       for k, v in stats.items())
    return SuiteResult("bijection", ok, detail, stats)


def nonmodular_witnesses(L):
    arcs = sorted(L.covers)
    images = {dia.packing_arcs(L, p) for p in dia.cs_packings(L)}
    out = []
    for mask in range(1 << len(arcs)):
        S = frozenset(a for k, a in enumerate(arcs) if mask >> k & 1)
        if dia.is_diamond_closed(L, S) and S not in images:
            out.append(S)
    return out


@_timed
def nonmodular(seed=0, trials=None):
    """On N5 some diamond-closed set is not induced by any CS-packing."""
    L = lat.make_standard("n5")
    wit = nonmodular_witnesses(L)
    detail = f"{len(wit)} diamond-closed sets of N5 are not C_K for a CS-packing"
    if wit:
        detail += f"; e.g. {sorted(wit[0])}"
    return SuiteResult("nonmodular", bool(wit), detail, {"witnesses": len(wit)})


def atom_arcs(L, n):
    return frozenset((1 << i, 0) for i in range(n))


def two_chain_arcs(L, n):
    """Prefix chain {1..i+1}->{1..i} plus suffix chain {n-i-1..n}->{n-i..n}."""

    def mask(elems):
        return sum(1 << (e - 1) for e in elems)

    arcs = {(mask(range(1, i + 2)), mask(range(1, i + 1))) for i in range(1, n)}
    arcs |= {(mask(range(n - i - 1, n + 1)), mask(range(n - i, n + 1))) for i in range(0, n - 1)}
    return frozenset(arcs)


@_timed
def boolean_examples(seed=0, trials=None):
    """Atom arcs and the two-chain family generate 2^[n]; a weakened family does not."""
    stats, ok = {}, True
    for n in (3, 4, 5):
        L = lat.make_standard(f"boolean:{n}")
        a = dia.closure_naive(L, atom_arcs(L, n)) == L.covers and dia.generates_all(L, atom_arcs(L, n))
        c = (dia.closure_naive(L, two_chain_arcs(L, n)) == L.covers
             and dia.generates_all(L, two_chain_arcs(L, n)))
        stats[f"boolean:{n}"] = {"atoms": a, "two_chain": c}
        ok = ok and a and c
    L = lat.make_standard("boolean:3")
    weak = atom_arcs(L, 3) - {(1 << 2, 0)}
    weak_generates = dia.generates_all(L, weak) or dia.closure_naive(L, weak) == L.covers
    stats["weakened"] = {"generates": weak_generates}
    ok = ok and not weak_generates
    detail = "; ".join(f"{k}: {v}" for k, v in stats.items())
    return SuiteResult("boolean-examples", ok, detail, stats)


@_timed
def birkhoff_suite(seed=0, trials=None):
    """Roundtrip through downsets and join-irreducibles; extension/sublattice bijection."""
    trials = 50 if trials is None else trials
    rng = random.Random(seed)
    roundtrip_ok = 0
    for _ in range(trials):
        P = random_pointed_poset(rng, max_middle=4)
        DL = bk.downset_lattice(P)
        Q, _ = bk.join_irreducibles(DL.lattice)
        if bk.poset_isomorphism(P, Q) is not None:
            roundtrip_ok += 1
    posets = all_pointed_posets(3)
    bij_ok, n_ext = 0, 0
    for P in posets:
        DL = bk.downset_lattice(P)
        exts = bk.extensions(P)
        n_ext += len(exts)
        images = [bk.extension_sublattice(DL, q) for q in exts]
        fwd = all(bk.order_from_family(P, [DL.downsets[k] for k in img]) == q
                  for q, img in zip(exts, images))
        subs = lat.sublattices(DL.lattice)
        back = all(bk.extension_sublattice(DL, bk.order_from_family(P, [DL.downsets[k] for k in M])) == M
                   for M in subs)
        if fwd and back and set(images) == set(subs) and len(set(images)) == len(exts):
            bij_ok += 1
    ok = roundtrip_ok == trials and bij_ok == len(posets)
    detail = (f"roundtrip {roundtrip_ok}/{trials}; extension<->sublattice bijection on "
              f"{bij_ok}/{len(posets)} pointed posets with |P|<=5 ({n_ext} extensions)")
    return SuiteResult("birkhoff", ok, detail,
                       {"roundtrip": roundtrip_ok, "trials": trials,
                        "posets": len(posets), "bijective": bij_ok, "extensions": n_ext})


def _wedderburn_problems(S):
    PL = pr.build(S, check=False)
    L, polys = PL.lattice, PL.polys
    where = {p: k for k, p in enumerate(polys)}
    f_S = polys[L.top]
    problems = []
    if any(not eval_right(f_S, s).is_zero() for s in S):
        problems.append("f_S does not vanish on S")
    for a, b in combinations(range(len(polys)), 2):
        if where.get(gcrd(polys[a], polys[b])) != L.meet(a, b):
            problems.append("gcrd closure")
        if where.get(lclm(polys[a], polys[b])) != L.join(a, b):
            problems.append("lclm closure")
    if not lat.is_modular(L):
        problems.append("not modular")
    for (r, q), xi in PL.psi.items():
        if poly_mul(linear(xi), polys[q]) != polys[r]:
            problems.append("arc identity")
    for path in pr.maximal_chains(PL):
        prod = NCPoly.constant(1)
        for a in (PL.psi[(r, q)] for r, q in zip(path, path[1:])):
            prod = poly_mul(prod, linear(a))
        if prod != f_S:
            problems.append("chain factorization")
    for d in dia.diamonds(L):
        u1, u2 = PL.psi[(d.top, d.left)], PL.psi[(d.top, d.right)]
        v1, v2 = PL.psi[(d.left, d.bottom)], PL.psi[(d.right, d.bottom)]
        if u1 + v1 != u2 + v2 or u1 * v1 != u2 * v2:
            problems.append("diamond identity")
    return PL, problems


@_timed
def wedderburn_suite(seed=0, trials=None):
    """Exact structure of Wedderburn lattices for random quaternion sets."""
    trials = 100 if trials is None else trials
    failed, shapes = [], {}
    for k, S in enumerate(random_sets(seed, trials)):
        PL, problems = _wedderburn_problems(S)
        shapes[len(PL.polys)] = shapes.get(len(PL.polys), 0) + 1
        if problems:
            failed.append((k, sorted(set(problems))))
    detail = f"{trials - len(failed)}/{trials} sets pass all exact checks; lattice sizes {dict(sorted(shapes.items()))}"
    return SuiteResult("wedderburn", not failed, detail,
                       {"trials": trials, "failed": failed[:5], "sizes": shapes})


@_timed
def weakening_suite(seed=0, trials=None):
    """Diamond operations reproduce every pseudo-root reached by the closure of the zero arcs."""
    trials = 100 if trials is None else trials
    failed, generic3, generic3_full, derived_total = [], 0, 0, 0
    for k, S in enumerate(random_sets(seed, trials)):
        PL = pr.build(S, check=False)
        rep = pr.rational_generation_check(PL, PL.zero_arcs())
        derived_total += len(rep.derived) - len(rep.given)
        if not rep.ok:
            failed.append(k)
        if len(S) == 3 and pr.generic_check(PL):
            generic3 += 1
            if len(rep.derived) == 12 and len(PL.psi) == 12:
                generic3_full += 1
    ok = not failed and generic3 > 0 and generic3_full == generic3
    detail = (f"{trials - len(failed)}/{trials} replays exact ({derived_total} values derived); "
              f"generic |S|=3: {generic3_full}/{generic3} cover all 12 arcs")
    return SuiteResult("weakening", ok, detail,
                       {"trials": trials, "failed": failed, "generic3": generic3,
                        "generic3_full": generic3_full})


@_timed
def worked_example(seed=0, trials=None):
    """S = {i, j}: f_S = t^2+1, upper pseudo-roots (-i, -j), and back down."""
    PL = pr.build([I, J])
    f_S = PL.polys[PL.top]
    checks = {
        "f_S = t^2+1": f_S == NCPoly([1, 0, 1]),
        "diamond_up(i,j) = (-i,-j)": pr.diamond_up(I, J) == (-I, -J),
        "diamond_down(-i,-j) = (i,j)": pr.diamond_down(-I, -J) == (I, J),
    }
    ti, tj = PL.element({0}), PL.element({1})
    checks["psi(f_S -> t-i) = -i"] = PL.psi[(PL.top, ti)] == -I
    checks["psi(f_S -> t-j) = -j"] = PL.psi[(PL.top, tj)] == -J
    rep = pr.rational_generation_check(PL, PL.zero_arcs())
    checks["replay derives both top arcs"] = rep.ok and len(rep.derived) == 4
    detail = ", ".join(f"{k}: {'ok' if v else 'FAILED'}" for k, v in checks.items())
    return SuiteResult("worked-example", all(checks.values()), detail, checks)


@_timed
def closure_axioms(seed=0, trials=None):
    """Extensive, monotone and idempotent naive closure on every corpus lattice."""
    trials = 200 if trials is None else trials
    rng = random.Random(seed)
    stats, ok = {}, True
    for name in CORPUS:
        L = lat.make_standard(name)
        arcs = sorted(L.covers)
        good = 0
        for _ in range(trials):
            B = random_arcs(rng, L)
            extra = frozenset(a for a in arcs if rng.random() < 0.3)
            B2 = B | extra
            cB, cB2 = dia.closure_naive(L, B), dia.closure_naive(L, B2)
            if B <= cB and cB <= cB2 and dia.closure_naive(L, cB) == cB:
                good += 1
        stats[name] = good
        ok = ok and good == trials
    detail = f"{sum(stats.values())}/{trials * len(CORPUS)} (B, B') pairs over {len(CORPUS)} lattices"
    return SuiteResult("closure-axioms", ok, detail, stats)


SUITES = {
    "closure-exhaustive": closure_exhaustive,
    "closure-random": closure_random,
    "bijection": bijection,
    "nonmodular": nonmodular,
    "boolean-examples": boolean_examples,
    "birkhoff": birkhoff_suite,
    "wedderburn": wedderburn_suite,
    "weakening": weakening_suite,
    "worked-example": worked_example,
    "closure-axioms": closure_axioms,
}


def run_suite(name, seed=0, trials=None):
    if name == "all":
        return [fn(seed=seed, trials=trials) for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return [SUITES[name](seed=seed, trials=trials)]
