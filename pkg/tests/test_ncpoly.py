from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diamondlat.exactnum import I, J, K, ONE, Quaternion
from diamondlat.ncpoly import (NCPoly, T, UNIT, divides_right, eval_right, exact_quotient,
                               gcrd, lclm, lclm_linear, linear, poly_mul, right_divide,
                               subset_wedderburn, wedderburn)

from conftest import (lclm_by_linear_system, monic_polys, polys, quaternions,
                      wedderburn_by_linear_system)

T2_PLUS_1 = NCPoly([1, 0, 1])


def test_poly_mul_examples():
    assert poly_mul(NCPoly([I, 1]), linear(I)) == T2_PLUS_1
    p = NCPoly([I, J, 2])
    assert poly_mul(p, UNIT) == p
    a, b = poly_mul(linear(I), linear(J)), poly_mul(linear(J), linear(I))
    assert a != b
    assert a.coeffs[1:] == b.coeffs[1:]
    assert a[0] == K and b[0] == -K


def test_eval_right_examples():
    assert eval_right(T2_PLUS_1, I).is_zero()
    assert eval_right(UNIT, I + J) == ONE
    # j is a zero of t - j but not of the product (t - j)(t - i)
    prod = poly_mul(linear(J), linear(I))
    assert prod == NCPoly([J * I, -(J + I), 1])
    assert eval_right(prod, J) == J * J - (J + I) * J + J * I
    assert not eval_right(prod, J).is_zero()
    assert eval_right(prod, I).is_zero()


def test_right_divide_examples():
    q, r = right_divide(T2_PLUS_1, linear(I))
    assert q == NCPoly([I, 1]) and r.is_zero()
    p = NCPoly([J, K, 3])
    assert right_divide(p, UNIT) == (p, NCPoly())


def test_right_divide_rejects_non_monic():
    with pytest.raises(ValueError):
        right_divide(T2_PLUS_1, NCPoly([0, 2]))
    with pytest.raises(ValueError):
        right_divide(T2_PLUS_1, NCPoly())


def test_divides_right_examples():
    assert divides_right(linear(I), T2_PLUS_1)
    assert divides_right(UNIT, NCPoly([I, K]))
    prod = poly_mul(linear(J), linear(I))
    assert not divides_right(linear(J), prod)
    assert right_divide(prod, linear(J))[1] == NCPoly.constant(eval_right(prod, J))
    assert divides_right(linear(I), prod)


def test_exact_quotient():
    assert exact_quotient(T2_PLUS_1, linear(J)) == NCPoly([J, 1])
    with pytest.raises(ValueError):
        exact_quotient(linear(I), linear(J))


def test_gcrd_examples():
    p = NCPoly([I, 0, 2 * J])
    assert gcrd(p, p) == p.monic()
    assert gcrd(linear(I), linear(J)) == UNIT
    assert gcrd(T2_PLUS_1, linear(K)) == linear(K)
    with pytest.raises(ValueError):
        gcrd(NCPoly(), NCPoly())


def test_lclm_examples():
    p = NCPoly([I, J, 1])
    assert lclm(p, UNIT) == p
    assert lclm(p, p) == p
    assert lclm(linear(I), linear(J)) == T2_PLUS_1


def test_lclm_linear_examples():
    assert lclm_linear(UNIT, I + J) == linear(I + J)
    assert lclm_linear(linear(I), I) == linear(I)
    assert lclm_linear(linear(I), J) == T2_PLUS_1 == lclm(linear(I), linear(J))


def test_wedderburn_examples():
    assert wedderburn([]) == UNIT
    assert wedderburn([I, J]) == T2_PLUS_1
    assert wedderburn([Quaternion(1), Quaternion(2)]) == NCPoly([2, -3, 1])
    # repeated elements contribute nothing
    assert wedderburn([I, I, J]) == T2_PLUS_1


def test_text_and_json():
    assert str(T2_PLUS_1) == "t^2+1"
    assert NCPoly.from_json(T2_PLUS_1.to_json()) == T2_PLUS_1
    assert T2_PLUS_1.to_json() == [["1", "0", "0", "0"], ["0"] * 4, ["1", "0", "0", "0"]]
    assert NCPoly().degree == -1 and T.degree == 1


# --- properties --------------------------------------------------------------------------------

@given(polys, quaternions)
def test_remainder_theorem(p, alpha):
    q, r = right_divide(p, linear(alpha))
    assert r.degree <= 0
    assert poly_mul(q, linear(alpha)) + r == p
    assert (r[0] if r.coeffs else Quaternion(0)) == eval_right(p, alpha)


@given(polys, polys)
def test_no_zero_divisors(p, q):
    if p.is_zero() or q.is_zero():
        assert poly_mul(p, q).is_zero()
    else:
        assert poly_mul(p, q).degree == p.degree + q.degree


@given(polys, monic_polys)
def test_division_identity(p, d):
    q, r = right_divide(p, d)
    assert poly_mul(q, d) + r == p and r.degree < d.degree


@settings(max_examples=60, deadline=None)
@given(monic_polys, monic_polys)
def test_gcrd_lclm_symmetry_and_degree_identity(p, q):
    g, m = gcrd(p, q), lclm(p, q)
    assert g == gcrd(q, p)
    assert m == lclm(q, p)
    assert m.degree + g.degree == p.degree + q.degree
    assert divides_right(g, p) and divides_right(g, q)
    assert divides_right(p, m) and divides_right(q, m)


@settings(max_examples=25, deadline=None)
@given(monic_polys, monic_polys)
def test_lclm_matches_linear_system(p, q):
    assert lclm(p, q) == lclm_by_linear_system(p, q)


@settings(max_examples=40, deadline=None)
@given(st.lists(quaternions, min_size=1, max_size=4))
def test_wedderburn_fold_order_independent(S):
    f = wedderburn(S)
    for perm in permutations(S):
        assert wedderburn(perm) == f
    assert all(eval_right(f, s).is_zero() for s in S)
    assert f.degree <= len(S)


@settings(max_examples=25, deadline=None)
@given(st.lists(quaternions, min_size=1, max_size=3))
def test_wedderburn_is_minimal(S):
    assert wedderburn(S) == wedderburn_by_linear_system(S)


@settings(max_examples=30, deadline=None)
@given(st.lists(quaternions, min_size=1, max_size=4))
def test_subset_divisibility(S):
    fT = subset_wedderburn(S)
    assert fT[frozenset(range(len(S)))] == wedderburn(S)
    for T_, f in fT.items():
        assert f == wedderburn([S[k] for k in sorted(T_)])
        for r in range(len(T_)):
            for U in combinations(sorted(T_), r):
                assert divides_right(fT[frozenset(U)], f)
