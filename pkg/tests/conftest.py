import sys
from fractions import Fraction

import pytest
import sympy
from hypothesis import strategies as st

from diamondlat import lattice as lat
from diamondlat.exactnum import Quaternion
from diamondlat.ncpoly import NCPoly, poly_mul

# --- strategies ------------------------------------------------------------------

small_rationals = st.builds(Fraction, st.integers(-3, 3), st.integers(1, 2))
quaternions = st.builds(Quaternion, small_rationals, small_rationals, small_rationals, small_rationals)
nonzero_quaternions = quaternions.filter(lambda q: not q.is_zero())
monic_polys = st.lists(quaternions, min_size=0, max_size=3).map(
    lambda cs: NCPoly(list(cs) + [Quaternion(1)]))
polys = st.lists(quaternions, min_size=0, max_size=4).map(NCPoly)


# --- exact linear-algebra oracles (sympy, independent of ncpoly) -------------------

def right_mult_matrix(q):
    """4x4 rational matrix of x -> x*q acting on coordinate columns (a, b, c, d)."""
    cols = []
    for e in range(4):
        basis = Quaternion(*[1 if k == e else 0 for k in range(4)])
        cols.append([sympy.Rational(x.numerator, x.denominator) for x in (basis * q).components])
    return sympy.Matrix(cols).T


def _quat_from(vec):
    return Quaternion(*[Fraction(int(sympy.fraction(v)[0]), int(sympy.fraction(v)[1])) for v in vec])


def _vec(q):
    return sympy.Matrix([sympy.Rational(x.numerator, x.denominator) for x in q.components])


def lclm_by_linear_system(p, q):
    """Smallest-degree monic u*p = v*q found by solving an exact rational system."""
    dp, dq = p.degree, q.degree
    for m in range(max(dp, dq), dp + dq + 1):
        ku, kv = m - dp, m - dq
        nunk = 4 * (ku + kv)
        rows, rhs = [], []
        for j in range(m + 1):
            block = sympy.zeros(4, nunk)
            const = sympy.zeros(4, 1)
            for i in range(ku + 1):
                if 0 <= j - i <= dp:
                    if i == ku:
                        const += _vec(p[j - i])
                    else:
                        block[:, 4 * i:4 * i + 4] += right_mult_matrix(p[j - i])
            for i in range(kv + 1):
                if 0 <= j - i <= dq:
                    if i == kv:
                        const -= _vec(q[j - i])
                    else:
                        block[:, 4 * (ku + i):4 * (ku + i) + 4] -= right_mult_matrix(q[j - i])
            rows.append(block)
            rhs.append(-const)
        A = sympy.Matrix.vstack(*rows) if nunk else sympy.zeros(4 * (m + 1), 0)
        b = sympy.Matrix.vstack(*rhs)
        if nunk == 0:
            if b.is_zero_matrix:
                return p
            continue
        try:
            sol, params = A.gauss_jordan_solve(b)
        except ValueError:
            continue
        sol = sol.subs({t: 0 for t in params})
        u = [_quat_from(sol[4 * i:4 * i + 4]) for i in range(ku)] + [Quaternion(1)]
        return poly_mul(NCPoly(u), p)
    raise AssertionError("no common left multiple found up to deg p + deg q")


def wedderburn_by_linear_system(S):
    """Lowest-degree monic polynomial vanishing on S, from the vanishing conditions directly."""
    S = list(S)
    for m in range(0, len(S) + 1):
        if not S:
            return NCPoly([1])
        rows, rhs = [], []
        for s in S:
            block = sympy.zeros(4, 4 * m)
            power = Quaternion(1)
            for i in range(m):
                block[:, 4 * i:4 * i + 4] = right_mult_matrix(power)
                power = power * s
            rows.append(block)
            rhs.append(-_vec(power))  # power == s^m
        if m == 0:
            if all(v.is_zero_matrix for v in rhs):
                return NCPoly([1])
            continue
        A, b = sympy.Matrix.vstack(*rows), sympy.Matrix.vstack(*rhs)
        try:
            sol, params = A.gauss_jordan_solve(b)
        except ValueError:
            continue
        if params.shape[0]:
            raise AssertionError("minimal vanishing polynomial should be unique")
        cs = [_quat_from(sol[4 * i:4 * i + 4]) for i in range(m)] + [Quaternion(1)]
        return NCPoly(cs)
    raise AssertionError("unreachable: degree |S| always suffices")


# --- lattice fixtures ------------------------------------------------------------------

@pytest.fixture(scope="session")
def b2():
    return lat.make_standard("boolean:2")


@pytest.fixture(scope="session")
def b3():
    return lat.make_standard("boolean:3")


@pytest.fixture(scope="session")
def m3():
    return lat.make_standard("m3")


@pytest.fixture(scope="session")
def n5():
    return lat.make_standard("n5")


MODULAR_CORPUS = ["boolean:2", "boolean:3", "chain:4", "m3", "product(m3,chain:2)",
                  "product(chain:2,chain:3)", "product(chain:3,chain:3)", "divisors:360"]
SMALL_CORPUS = ["boolean:2", "boolean:3", "chain:3", "m3", "n5", "product(chain:2,chain:3)",
                "divisors:12"]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
