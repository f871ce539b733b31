"""End-to-end acceptance suite.

Each test covers one acceptance criterion and reports a single PASS line
on the terminal when it succeeds (a failing criterion shows up as a
failing test).
"""

import random
import time
from fractions import Fraction
from math import gcd

from torsionk import (
    Cdm,
    InvalidSystem,
    IntMatrix,
    KoSym,
    LinearConstraintSystem,
    OperatorSolution,
    PauliElement,
    ZdVector,
    brute_force_cohomology,
    builtin_fixture,
    canonical_realization,
    cdm_group,
    class_of,
    class_of_solution,
    classical_value,
    cohomology,
    det_cochain,
    homotopy_group,
    hypergraph_boundary,
    hypergraph_of,
    scalar_solution,
    scalar_solution_to_operator,
    smith_normal_form,
    stabilize,
    verify_solution,
)

from conftest import (
    klein_bottle,
    projective_plane,
    sphere_minimal,
    torus_minimal,
    wedge_of_circles,
)


def test_criterion_1_square_contextuality(announce):
    start = time.time()
    fx = builtin_fixture("mermin_square")
    assert scalar_solution(fx.system) is None
    value, _ = classical_value(fx.system)
    assert value == Fraction(5, 6)
    elapsed = time.time() - start
    assert elapsed < 1.0
    announce(f"criterion 1 PASS: square has no scalar solution, "
             f"classical value 5/6 ({elapsed:.3f}s)")


def test_criterion_2_operator_verification(announce):
    start = time.time()
    for name, dim in (("mermin_square", 4), ("mermin_star", 8)):
        fx = builtin_fixture(name)
        report = verify_solution(fx.system, fx.solution)
        assert report.ok, name
        dense = fx.solution.to_dense()
        assert dense.dimension == dim
        assert verify_solution(fx.system, dense, tolerance=1e-9).ok, name
    sq = builtin_fixture("mermin_square")
    ident = OperatorSolution.from_paulis(
        2, 2, {v: PauliElement.identity(2, 2) for v in sq.system.variables})
    report = verify_solution(sq.system, ident)
    odd = [con.name for con in sq.system.constraints if con.rhs == 1]
    assert report.failing_constraints() == odd == ["c3"]
    elapsed = time.time() - start
    assert elapsed < 1.0
    announce(f"criterion 2 PASS: shipped solutions verify exactly and densely; "
             f"all-identity fails only on c3 ({elapsed:.3f}s)")


def test_criterion_3_mermin_class(announce):
    fx = builtin_fixture("mermin_square")
    coords = []
    for extra in (0, 1, 2):  # qubit counts n = 2, 3, 4
        T = stabilize(fx.solution, extra)
        cls = class_of_solution(fx.realization, fx.system, T)
        assert cls.describe() == "(0,0;1)"
        coords.append(cls.coordinates())
    assert coords[0] == coords[1] == coords[2]
    announce("criterion 3 PASS: Mermin class (0,0;1) for n = 2, 3, 4, "
             "stable under stabilization")


def test_criterion_4_splitting_and_coprime_vanishing(announce):
    torus = torus_minimal()
    for m in (2, 4, 8, 16, 32):
        result = cdm_group(torus, 2, m)
        assert result.is_exact
        assert result.total.invariant_factors == (2, 2, 2)
        assert result.order == 8
    complexes = [torus, sphere_minimal(), wedge_of_circles(),
                 projective_plane(), klein_bottle(),
                 builtin_fixture("mermin_square").realization,
                 builtin_fixture("mermin_star").realization,
                 builtin_fixture("mermin_refined").realization]
    assert len(complexes) >= 5
    pairs = [(2, 3), (3, 4), (4, 9), (5, 6), (6, 35)]
    for X in complexes:
        for d, m in pairs:
            assert gcd(d, m) == 1
            result = cdm_group(X, d, m)
            assert result.is_exact and result.total.is_trivial()
    announce(f"criterion 4 PASS: torus group (Z/2)^2 + Z/2 of order 8 for d=2, "
             f"m=2^n; coprime (d,m) vanish on {len(complexes)} complexes")


def test_criterion_5_homotopy_tables(announce):
    for d in range(2, 25):
        for m in range(1, 25):
            kernel = sum(1 for x in range(d) if (m * x) % d == 0)
            coker = d // len({(m * x) % d for x in range(d)})
            for r, oracle in ((1, coker), (2, kernel)):
                group = homotopy_group(Cdm(d, m), r).exact
                assert group.order == oracle == gcd(d, m)
                assert group.invariant_factors == ((gcd(d, m),) if gcd(d, m) > 1 else ())
    table = {0: 1, 1: 2, 2: 2, 3: 8, 4: 1, 5: 1, 6: 1, 7: 16,
             8: 1, 9: 2, 10: 2, 11: 128, 12: 1, 13: 1, 14: 1, 15: 256}
    for r, order in table.items():
        assert homotopy_group(KoSym(), r).exact.order == order
    announce("criterion 5 PASS: C(d,m) homotopy matches enumeration for "
             "d,m <= 24; real symmetric K-theory degrees 0-15 match the table")


def test_criterion_6_property_suites(announce):
    start = time.time()
    # (a) randomized Smith-normal-form suite
    rng = random.Random(20260823)
    for _ in range(1000):
        r, c = rng.randint(1, 8), rng.randint(1, 8)
        A = IntMatrix.from_rows(
            [[rng.randint(-20, 20) for _ in range(c)] for _ in range(r)])
        dec = smith_normal_form(A)
        assert dec.U @ dec.S @ dec.V == A
        assert abs(dec.U.det_unimodular_sign()) == 1
        assert abs(dec.V.det_unimodular_sign()) == 1
        diag = [s for s in dec.diagonal() if s != 0]
        assert all(s > 0 for s in diag)
        assert all(b % a == 0 for a, b in zip(diag, diag[1:]))

    # (b) cohomology equals the brute-force oracle on all fixtures in bound
    fixtures = [torus_minimal(), sphere_minimal(), wedge_of_circles(),
                projective_plane(), klein_bottle()]
    fixtures += [builtin_fixture(n).realization
                 for n in ("mermin_square", "mermin_star", "mermin_refined")]
    checked = 0
    for X in fixtures:
        sizes = {1: (len(X.one_cells), len(X.zero_cells)),
                 2: (len(X.two_cells), len(X.one_cells))}
        for k in (2, 3, 4, 6):
            for deg in (1, 2):
                n, nprev = sizes[deg]
                if k ** n > 10 ** 6 or k ** nprev > 10 ** 6:
                    continue
                assert (cohomology(X, k, deg).invariant_factors
                        == brute_force_cohomology(X, k, deg).invariant_factors)
                checked += 1

    # (c) the three published torus structures agree for k in {2, 3, 4, 6}
    tori = [builtin_fixture(n).realization
            for n in ("mermin_square", "mermin_star", "mermin_refined")]
    for k in (2, 3, 4, 6):
        for deg in (1, 2):
            groups = {cohomology(X, k, deg).invariant_factors for X in tori}
            assert len(groups) == 1
            expected = ((k, k),) if deg == 1 else ((k,),)
            assert groups == {expected[0]} or groups == {expected}

    # (d) determinant-cochain identity on every verified fixture solution
    for name in ("mermin_square", "mermin_star", "mermin_refined"):
        fx = builtin_fixture(name)
        for extra in (0, 1):
            T = stabilize(fx.solution, extra)
            c = det_cochain(T, fx.system)  # asserts delta(c) = m*tau mod d
            boundary = hypergraph_boundary(fx.hypergraph, fx.system.d)
            delta_c = [x % 2 for x in boundary.transpose() @ list(c.coordinates)]
            assert delta_c == [(T.dimension * con.rhs) % 2
                               for con in fx.system.constraints]
    # scalar solutions (dimension 1): delta(c) = tau on the nose
    L = LinearConstraintSystem.build(
        4, ["a", "b", "c"], [({"a": 1, "b": 3}, 2), ({"b": 2, "c": 1}, 3)])
    x = scalar_solution(L)
    T = scalar_solution_to_operator(x, L)
    c = det_cochain(T, L)
    assert c == x
    H, tau = hypergraph_of(L)
    delta_c = [v % 4 for v in hypergraph_boundary(H, 4).transpose()
               @ list(c.coordinates)]
    assert delta_c == [t for _, t in tau.values]

    elapsed = time.time() - start
    assert elapsed < 60.0
    announce(f"criterion 6 PASS: 1000-matrix SNF suite, {checked} oracle "
             f"comparisons, torus-structure agreement, determinant-cochain "
             f"identity ({elapsed:.1f}s)")


def test_criterion_7_scalar_classical_class_equivalence(announce):
    rng = random.Random(4409)
    instances = 0
    while instances < 120:
        d = rng.choice([2, 3, 4])
        c = rng.randint(1, 6)
        r = rng.randint(1, 6)
        if d ** c > 10 ** 5:
            continue
        variables = [f"x{i}" for i in range(c)]
        cons = []
        for _ in range(r):
            support = rng.sample(variables, rng.randint(1, c))
            cons.append(({v: rng.randint(1, d - 1) for v in support},
                         rng.randrange(d)))
        try:
            L = LinearConstraintSystem.build(d, variables, cons)
        except InvalidSystem:
            continue
        instances += 1
        has_scalar = scalar_solution(L) is not None
        value, witness = classical_value(L)
        H, tau = hypergraph_of(L)
        X = canonical_realization(H, d)
        tau_zero = class_of(X, d, 2, tau.vector()).is_zero()
        assert has_scalar == (value == 1) == tau_zero
        if has_scalar:
            x = scalar_solution(L)
            assert all(v % d == w for v, w in zip(
                L.matrix() @ list(x.coordinates), L.rhs_vector().coordinates))
    announce(f"criterion 7 PASS: scalar solvability, classical value 1, and "
             f"vanishing right-hand-side class agree on {instances} random systems")
