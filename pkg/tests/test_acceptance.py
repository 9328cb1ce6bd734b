"""Acceptance criteria, one test each.

Every test records a one-line verdict; the lines are printed in the
pytest terminal summary (and directly when this file is run as a script).
"""

import pytest

from diamondlat import verify

RESULTS = {}


def record(number, title, result, extra_ok=True, note=""):
    passed = result.passed and extra_ok
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2} {title}: {result.detail}"
    if note:
        line += f"; {note}"
    line += f" ({result.seconds:.1f}s)"
    RESULTS[number] = line
    print(line)
    return passed


def test_c01_closure_equivalence_exhaustive():
    r = verify.closure_exhaustive(seed=0)
    fast = r.seconds < 60
    assert record(1, "closure methods agree on all 4096 arc sets of 2^[3]", r,
                  r.stats["subsets"] == 4096 and fast, "under 60 s" if fast else "SLOWER than 60 s")
    assert r.stats["disagreements"] == 0


def test_c02_closure_equivalence_random():
    r = verify.closure_random(seed=0, trials=500)
    expected = {"boolean:4", "m3", "product(m3,chain:2)", "product(chain:3,chain:3)", "divisors:360"}
    sizes_ok = set(r.stats) == expected and all(v["trials"] == 500 == v["agree"] for v in r.stats.values())
    dldc_on = sorted(k for k, v in r.stats.items() if v["dldc"])
    assert record(2, "naive = mldc (= dldc when distributive), 500 random sets per lattice", r, sizes_ok,
                  f"dldc also compared on {', '.join(dldc_on)}")
    assert r.stats["boolean:4"]["dldc"] and not r.stats["m3"]["dldc"]


def test_c03_packing_bijection():
    r = verify.bijection()
    ok = all(v["injective"] and v["onto"] for v in r.stats.values())
    assert record(3, "CS-packings <-> diamond-closed sets on 2^[2], 2^[3], M3", r, ok)
    assert set(r.stats) == {"boolean:2", "boolean:3", "m3"}


def test_c04_nonmodular_control():
    r = verify.nonmodular()
    assert record(4, "N5 has a diamond-closed set with no CS-packing", r, r.stats["witnesses"] >= 1)


def test_c05_boolean_generating_families():
    r = verify.boolean_examples()
    ok = all(r.stats[f"boolean:{n}"] == {"atoms": True, "two_chain": True} for n in (3, 4, 5))
    ok = ok and r.stats["weakened"] == {"generates": False}
    assert record(5, "atom and two-chain families generate 2^[n], n=3,4,5; weakened family does not", r, ok)


def test_c06_birkhoff():
    r = verify.birkhoff_suite(seed=0, trials=50)
    ok = r.stats["roundtrip"] == 50 and r.stats["bijective"] == r.stats["posets"]
    assert record(6, "downset/join-irreducible roundtrip (50 posets, |P|<=6) and extension bijection", r, ok,
                  f"{r.stats['extensions']} extensions checked")


def test_c07_wedderburn_structure():
    r = verify.wedderburn_suite(seed=0, trials=100)
    fast = r.seconds < 300
    assert record(7, "Wedderburn lattices of 100 random sets are exact and modular", r,
                  fast and not r.stats["failed"], "under 5 min" if fast else "SLOWER than 5 min")


def test_c08_pseudoroot_generation():
    r = verify.weakening_suite(seed=0, trials=100)
    ok = not r.stats["failed"] and r.stats["generic3"] > 0
    assert record(8, "conjugation replay reproduces every pseudo-root from the zero arcs", r, ok)


def test_c09_worked_example():
    r = verify.worked_example()
    assert record(9, "S = {i, j} literal values", r, all(r.stats.values()))


def test_c10_closure_axioms():
    r = verify.closure_axioms(seed=0, trials=200)
    ok = len(r.stats) == len(verify.CORPUS) and all(v == 200 for v in r.stats.values())
    assert record(10, "naive closure is extensive, monotone, idempotent (200 pairs x corpus)", r, ok)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-s"]))
