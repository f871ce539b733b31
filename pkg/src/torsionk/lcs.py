"""Linear constraint systems over Z/d.

A system is a matrix equation M*x = b over Z/d. It induces a hypergraph
(variables = vertices, constraints = weighted edges) together with the
right-hand-side assignment on edges, and a canonical one-vertex
2-dimensional realization whose cellular boundary matches the hypergraph
boundary mod d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .complexes import CW2Complex
from .exact_linalg import IntMatrix, ZdVector, solve_mod


class InvalidSystem(ValueError):
    """Raised when LCS data violates its invariants."""


class SearchBoundExceeded(ValueError):
    """Raised when an exhaustive search would exceed its guard."""


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple  # ((variable, coefficient), ...) with coefficient in (0, d)
    rhs: int
    name: str = ""

    def coeff_dict(self):
        return dict(self.coeffs)


@dataclass(frozen=True)
class LinearConstraintSystem:
    d: int
    variables: tuple
    constraints: tuple  # of Constraint

    def __post_init__(self):
        if self.d < 2:
            raise InvalidSystem("modulus must be >= 2")
        if not self.variables or not self.constraints:
            raise InvalidSystem("need at least one variable and one constraint")
        if len(set(self.variables)) != len(self.variables):
            raise InvalidSystem("duplicate variable names")
        used = set()
        vset = set(self.variables)
        for con in self.constraints:
            if not con.coeffs:
                raise InvalidSystem("empty constraint")
            for v, c in con.coeffs:
                if v not in vset:
                    raise InvalidSystem(f"unknown variable {v}")
                if not 0 < c < self.d:
                    raise InvalidSystem(f"coefficient of {v} not in (0, d)")
                used.add(v)
            if len({v for v, _ in con.coeffs}) != len(con.coeffs):
                raise InvalidSystem("repeated variable in a constraint")
            if not 0 <= con.rhs < self.d:
                raise InvalidSystem("rhs not reduced mod d")
        if used != vset:
            raise InvalidSystem("every variable must appear in some constraint")

    @staticmethod
    def build(d, variables, constraints):
        """constraints: iterable of (coeff_dict, rhs) or (coeff_dict, rhs, name)."""
        cons = []
        for i, entry in enumerate(constraints):
            if len(entry) == 3:
                coeffs, rhs, name = entry
            else:
                coeffs, rhs = entry
                name = f"e{i}"
            ordered = tuple((v, int(coeffs[v]) % d) for v in variables if v in coeffs)
            cons.append(Constraint(ordered, int(rhs) % d, name))
        return LinearConstraintSystem(int(d), tuple(variables), tuple(cons))

    @property
    def num_variables(self):
        return len(self.variables)

    @property
    def num_constraints(self):
        return len(self.constraints)

    def matrix(self) -> IntMatrix:
        index = {v: j for j, v in enumerate(self.variables)}
        rows = []
        for con in self.constraints:
            row = [0] * self.num_variables
            for v, c in con.coeffs:
                row[index[v]] = c
            rows.append(row)
        return IntMatrix.from_rows(rows)

    def rhs_vector(self) -> ZdVector:
        return ZdVector.make(self.d, [con.rhs for con in self.constraints])

    def to_json_dict(self):
        return {
            "d": self.d,
            "variables": list(self.variables),
            "constraints": [
                {"name": con.name, "coeffs": {v: c for v, c in con.coeffs},
                 "rhs": con.rhs}
                for con in self.constraints
            ],
        }

    @staticmethod
    def from_json_dict(data):
        d = int(data["d"])
        cons = []
        for i, entry in enumerate(data["constraints"]):
            coeffs = {str(v): int(c) for v, c in entry["coeffs"].items()}
            for v, c in coeffs.items():
                if c % d == 0:
                    raise InvalidSystem(f"coefficient of {v} is 0 mod d")
            cons.append((coeffs, int(entry["rhs"]), entry.get("name", f"e{i}")))
        return LinearConstraintSystem.build(d, [str(v) for v in data["variables"]], cons)


@dataclass(frozen=True)
class Hypergraph:
    vertices: tuple
    edges: tuple  # of (name, ((vertex, weight), ...)) with weights nonzero mod d

    def edge_names(self):
        return [name for name, _ in self.edges]


@dataclass(frozen=True)
class Tau:
    """Right-hand sides as a function on hyperedges."""

    modulus: int
    values: tuple  # ((edge_name, residue), ...)

    def vector(self) -> ZdVector:
        return ZdVector.make(self.modulus, [v for _, v in self.values])

    def __getitem__(self, edge):
        return dict(self.values)[edge]


def hypergraph_of(L: LinearConstraintSystem):
    """The pair (hypergraph, tau) encoding the system."""
    edges = tuple((con.name, con.coeffs) for con in L.constraints)
    tau = Tau(L.d, tuple((con.name, con.rhs) for con in L.constraints))
    return Hypergraph(L.variables, edges), tau


def hypergraph_boundary(H: Hypergraph, d: int) -> IntMatrix:
    """|V| x |E| boundary: column e sends [e] to the weighted sum of its vertices."""
    index = {v: i for i, v in enumerate(H.vertices)}
    cols = []
    for _, weights in H.edges:
        col = [0] * len(H.vertices)
        for v, w in weights:
            col[index[v]] = w % d
        cols.append(col)
    return IntMatrix.from_rows([[c[i] for c in cols] for i in range(len(H.vertices))])


def scalar_solution(L: LinearConstraintSystem) -> ZdVector | None:
    """A solution of M*x = b (mod d) over Z/d, or None if the system is contextual."""
    return solve_mod(L.matrix(), L.rhs_vector(), L.d)


def classical_value(L: LinearConstraintSystem, bound: int = 10 ** 7):
    """Max fraction of satisfiable constraints, with the lexicographically
    least maximizing assignment. Exhaustive over d^c assignments."""
    if L.d ** L.num_variables > bound:
        raise SearchBoundExceeded(
            f"{L.d}^{L.num_variables} assignments exceed the bound {bound}")
    M = L.matrix().to_rows()
    b = [con.rhs for con in L.constraints]
    best, best_x = -1, None
    for x in product(range(L.d), repeat=L.num_variables):
        sat = sum(1 for row, rhs in zip(M, b)
                  if sum(c * xi for c, xi in zip(row, x)) % L.d == rhs)
        if sat > best:
            best, best_x = sat, x
            if best == L.num_constraints:
                break
    return Fraction(best, L.num_constraints), ZdVector.make(L.d, best_x)


def canonical_realization(H: Hypergraph, d: int) -> CW2Complex:
    """One 0-cell, a loop per vertex, and a disk per edge whose attaching word
    multiplies the vertex loops in ascending order with weights as exponents."""
    base = "*"
    one_cells = [(v, base, base) for v in H.vertices]
    two_cells = []
    for name, weights in H.edges:
        wmap = {v: w % d for v, w in weights}
        # exponents lifted to [1, d); vertices in ascending variable order
        word = [(v, wmap[v]) for v in H.vertices if wmap.get(v)]
        two_cells.append((name, word))
    X = CW2Complex.build([base], one_cells, two_cells)
    _assert_realization(X, H, d)
    return X


def is_realization(X: CW2Complex, H: Hypergraph, d: int) -> bool:
    """Cellular boundary of X reduced mod d equals the hypergraph boundary,
    with 1-cells matching vertices and 2-cells matching edges by name."""
    from .complexes import chain_data

    if X.one_cell_names() != list(H.vertices):
        return False
    if X.two_cell_names() != list(H.edge_names()):
        return False
    return chain_data(X).d2.mod(d) == hypergraph_boundary(H, d).mod(d)


def _assert_realization(X, H, d):
    if not is_realization(X, H, d):
        raise AssertionError("realization witness identity failed")
