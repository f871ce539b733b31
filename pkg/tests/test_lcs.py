import random
from fractions import Fraction

import pytest

from torsionk import (
    InvalidSystem,
    LinearConstraintSystem,
    SearchBoundExceeded,
    builtin_fixture,
    canonical_realization,
    class_of,
    classical_value,
    hypergraph_boundary,
    hypergraph_of,
    is_realization,
    scalar_solution,
)


def tiny_system():
    return LinearConstraintSystem.build(
        2, ["x1", "x2"], [({"x1": 1, "x2": 1}, 1)])


def test_hypergraph_of_mermin_square():
    L = builtin_fixture("mermin_square").system
    H, tau = hypergraph_of(L)
    assert len(H.vertices) == 9
    assert len(H.edges) == 6
    assert all(len(weights) == 3 for _, weights in H.edges)
    assert dict(tau.values) == {"r1": 0, "r2": 0, "r3": 0, "c1": 0, "c2": 0, "c3": 1}


def test_hypergraph_of_mermin_star():
    L = builtin_fixture("mermin_star").system
    H, tau = hypergraph_of(L)
    assert len(H.vertices) == 10
    assert len(H.edges) == 5
    assert all(len(weights) == 4 for _, weights in H.edges)
    assert [v for _, v in tau.values].count(1) == 1
    assert tau["inner"] == 1


def test_hypergraph_boundary_is_matrix_transpose():
    L = builtin_fixture("mermin_square").system
    H, _ = hypergraph_of(L)
    assert hypergraph_boundary(H, L.d) == L.matrix().transpose().mod(L.d)


def test_scalar_solution_examples():
    assert scalar_solution(builtin_fixture("mermin_square").system) is None
    assert scalar_solution(builtin_fixture("mermin_star").system) is None
    assert scalar_solution(builtin_fixture("mermin_refined").system) is None
    L = tiny_system()
    x = scalar_solution(L)
    assert x is not None
    assert sum(x.coordinates) % 2 == 1
    zero = LinearConstraintSystem.build(3, ["a", "b"], [({"a": 1, "b": 2}, 0)])
    assert scalar_solution(zero).coordinates == (0, 0)


def test_classical_values():
    assert classical_value(builtin_fixture("mermin_square").system)[0] == Fraction(5, 6)
    assert classical_value(builtin_fixture("mermin_star").system)[0] == Fraction(4, 5)
    value, x = classical_value(tiny_system())
    assert value == 1
    assert x.coordinates == (0, 1)  # lexicographically least maximizer


def test_classical_value_bound():
    L = LinearConstraintSystem.build(
        7, [f"x{i}" for i in range(12)],
        [({f"x{i}": 1 for i in range(12)}, 0)])
    with pytest.raises(SearchBoundExceeded):
        classical_value(L)


def test_canonical_realization_structure():
    L = builtin_fixture("mermin_square").system
    H, _ = hypergraph_of(L)
    X = canonical_realization(H, L.d)
    assert len(X.zero_cells) == 1
    assert X.one_cell_names() == list(L.variables)
    assert X.two_cell_names() == [c.name for c in L.constraints]
    assert is_realization(X, H, L.d)
    # every 1-cell is a loop at the base point
    assert all(e.source == e.target for e in X.one_cells)


def test_canonical_realization_word_order_and_lift():
    L = LinearConstraintSystem.build(
        4, ["b", "a"], [({"a": 3, "b": 2}, 1)])
    H, _ = hypergraph_of(L)
    X = canonical_realization(H, 4)
    # ascending variable order (as listed), weights as exponents
    assert X.two_cells[0].word == (("b", 2), ("a", 3))


def test_realization_witness_for_published_tori():
    for name in ("mermin_square", "mermin_star", "mermin_refined"):
        fx = builtin_fixture(name)
        assert is_realization(fx.realization, fx.hypergraph, fx.system.d)


def test_tau_class_detects_contextuality():
    random.seed(7)
    for _ in range(30):
        d = random.choice([2, 3, 4])
        c = random.randint(1, 4)
        r = random.randint(1, 4)
        variables = [f"x{i}" for i in range(c)]
        cons = []
        for k in range(r):
            support = random.sample(variables, random.randint(1, c))
            cons.append(({v: random.randint(1, d - 1) for v in support},
                         random.randrange(d)))
        try:
            L = LinearConstraintSystem.build(d, variables, cons)
        except InvalidSystem:
            continue  # some variable unused
        H, tau = hypergraph_of(L)
        X = canonical_realization(H, d)
        has_scalar = scalar_solution(L) is not None
        cls = class_of(X, d, 2, tau.vector())
        assert has_scalar == cls.is_zero()


def test_json_round_trip_preserves_system():
    for name in ("mermin_square", "mermin_star", "mermin_refined"):
        L = builtin_fixture(name).system
        assert LinearConstraintSystem.from_json_dict(L.to_json_dict()) == L


def test_parser_rejects_bad_systems():
    with pytest.raises(InvalidSystem):
        LinearConstraintSystem.from_json_dict(
            {"d": 2, "variables": ["a"], "constraints": [{"coeffs": {"a": 2}, "rhs": 0}]})
    with pytest.raises(InvalidSystem):
        LinearConstraintSystem.build(2, ["a", "b"], [({"a": 1}, 0)])  # b unused
    with pytest.raises(InvalidSystem):
        LinearConstraintSystem.build(1, ["a"], [({"a": 1}, 0)])  # modulus too small
    with pytest.raises(InvalidSystem):
        LinearConstraintSystem.build(2, ["a"], [])  # no constraints
