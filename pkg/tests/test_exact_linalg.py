from itertools import product
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torsionk import (
    CoefficientMap,
    FinAbGroup,
    IntMatrix,
    ZdVector,
    kernel_mod,
    quotient_group,
    smith_normal_form,
    solve_int,
    solve_mod,
    times_m,
    torsion_inclusion,
    torsion_projection,
)

matrices = st.integers(1, 8).flatmap(
    lambda r: st.integers(1, 8).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-20, 20), min_size=c, max_size=c),
            min_size=r, max_size=r).map(IntMatrix.from_rows)))

small_matrices = st.integers(1, 3).flatmap(
    lambda r: st.integers(1, 3).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-6, 6), min_size=c, max_size=c),
            min_size=r, max_size=r).map(IntMatrix.from_rows)))


@settings(max_examples=1000, deadline=None)
@given(matrices)
def test_smith_normal_form_randomized(A):
    dec = smith_normal_form(A)
    assert dec.U @ dec.S @ dec.V == A
    assert abs(dec.U.det_unimodular_sign()) == 1
    assert abs(dec.V.det_unimodular_sign()) == 1
    diag = dec.diagonal()
    for i in range(dec.S.rows):
        for j in range(dec.S.cols):
            if i != j:
                assert dec.S[i, j] == 0
    assert all(s >= 0 for s in diag)
    nonzero = [s for s in diag if s != 0]
    # zeros trail the nonzero part
    assert diag[:len(nonzero)] == nonzero
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0


def test_smith_normal_form_known():
    # invariant factors: gcd of entries = 2, gcd of 2x2 minors = 4, det = 624
    A = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    assert smith_normal_form(A).diagonal() == [2, 2, 156]
    B = IntMatrix.from_rows([[2, 0], [0, 3]])
    assert smith_normal_form(B).diagonal() == [1, 6]


@settings(max_examples=200, deadline=None)
@given(small_matrices, st.data())
def test_solve_mod_matches_enumeration(A, data):
    d = data.draw(st.integers(2, 6))
    b = ZdVector.make(d, data.draw(
        st.lists(st.integers(0, d - 1), min_size=A.rows, max_size=A.rows)))
    x = solve_mod(A, b, d)
    solvable = any(
        all(v % d == w for v, w in zip(A @ list(cand), b.coordinates))
        for cand in product(range(d), repeat=A.cols))
    assert (x is not None) == solvable
    if x is not None:
        assert all(v % d == w for v, w in zip(A @ list(x.coordinates), b.coordinates))


def test_solve_int_exact():
    A = IntMatrix.from_rows([[2, 0], [0, 3]])
    assert solve_int(A, [4, 9]) == [2, 3]
    assert solve_int(A, [1, 0]) is None


def _span_mod(cols, n, d):
    """All Z/d combinations of the given columns (n-vectors)."""
    span = {(0,) * n}
    for col in cols:
        new = set()
        for base in span:
            for t in range(d):
                new.add(tuple((base[i] + t * col[i]) % d for i in range(n)))
        span = new
    return span


@settings(max_examples=150, deadline=None)
@given(small_matrices, st.integers(2, 6))
def test_kernel_mod_matches_enumeration(A, d):
    group = kernel_mod(A, d)
    solutions = {x for x in product(range(d), repeat=A.cols)
                 if all(v % d == 0 for v in A @ list(x))}
    assert group.order == len(solutions)
    G = group.generator_lift
    gens = [tuple(G.col(j)) for j in range(G.cols)] if G is not None else []
    for g, k in zip(gens, group.invariant_factors):
        assert all(v % d == 0 for v in A @ list(g))
        # generator has order exactly k in (Z/d)^c
        assert all(k * v % d == 0 for v in g)
        for q in range(1, k):
            if all(q * v % d == 0 for v in g):
                pytest.fail("generator order smaller than its invariant factor")
    assert _span_mod(gens, A.cols, d) == solutions


@settings(max_examples=150, deadline=None)
@given(small_matrices, st.integers(2, 6))
def test_quotient_group_matches_enumeration(A, d):
    n = A.rows
    group = quotient_group(n, d, A)
    image = _span_mod([A.col(j) for j in range(A.cols)], n, d)
    assert group.order == d ** n // len(image)


def test_fin_ab_group_invariants():
    with pytest.raises(ValueError):
        FinAbGroup((1, 2))
    with pytest.raises(ValueError):
        FinAbGroup((4, 2))
    g = FinAbGroup((2, 4, 8))
    assert g.order == 64
    assert g.describe() == "Z/2 + Z/4 + Z/8"
    assert FinAbGroup.trivial().describe() == "0"


@given(st.integers(2, 30), st.integers(1, 30))
def test_torsion_coefficient_maps(d, m):
    g = gcd(d, m)
    inc = torsion_inclusion(d, m)
    mul = times_m(d, m)
    proj = torsion_projection(d, m)
    assert (inc.src_modulus, inc.dst_modulus) == (g, d)
    assert (proj.src_modulus, proj.dst_modulus) == (d, g)
    # the composite Z/g -> Z/d -> Z/d kills the m-torsion subgroup
    assert mul.compose(inc).is_zero()
    # the composite Z/d -> Z/d -> Z/g kills multiples of m
    assert proj.compose(mul).is_zero()
    for x in range(g):
        v = ZdVector.make(g, [x])
        assert proj.apply(inc.apply(v)).coordinates[0] == (x * (d // g)) % g


def test_coefficient_map_rejects_ill_defined():
    with pytest.raises(ValueError):
        CoefficientMap(4, 8, 1)  # 1*4 is not 0 mod 8
    m = CoefficientMap(4, 8, 2)
    assert m.apply(ZdVector.make(4, [3])).coordinates == (6,)
