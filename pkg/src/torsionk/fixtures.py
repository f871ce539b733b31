"""Built-in example systems: the Mermin square, the Mermin star, and the
triangulated (refined) star, each with its torus realization and Pauli
operator solution.

Each fixture bundles a linear constraint system over Z/2, the induced
hypergraph and right-hand-side assignment, a 2-dimensional cell structure
on the torus realizing the hypergraph, and the standard Pauli assignment
that solves the system.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import CW2Complex
from .lcs import Hypergraph, LinearConstraintSystem, Tau, hypergraph_of, is_realization
from .operators import OperatorSolution, PauliElement, PauliTarget


@dataclass(frozen=True)
class Fixture:
    name: str
    system: LinearConstraintSystem
    hypergraph: Hypergraph
    tau: Tau
    realization: CW2Complex
    solution: OperatorSolution


FIXTURE_NAMES = ("mermin_square", "mermin_star", "mermin_refined")


def _pauli_assignment(variables, n):
    return OperatorSolution(
        PauliTarget(2, n),
        tuple((v, PauliElement.from_label(v)) for v in variables))


# --- Mermin square ---------------------------------------------------------
# 3x3 grid of two-qubit observables; rows r1-r3, columns c1-c3; every
# constraint multiplies to +I except column c3 = {XX, ZZ, YY}.

_SQ_VARIABLES = ("XI", "IX", "XX", "IZ", "ZI", "ZZ", "XZ", "ZX", "YY")

_SQ_CONSTRAINTS = (
    ({"XI": 1, "IX": 1, "XX": 1}, 0, "r1"),
    ({"IZ": 1, "ZI": 1, "ZZ": 1}, 0, "r2"),
    ({"XZ": 1, "ZX": 1, "YY": 1}, 0, "r3"),
    ({"XI": 1, "IZ": 1, "XZ": 1}, 0, "c1"),
    ({"IX": 1, "ZI": 1, "ZX": 1}, 0, "c2"),
    ({"XX": 1, "ZZ": 1, "YY": 1}, 1, "c3"),
)

# Torus cell structure: three vertices, nine edges (one per variable, in
# variable order), six triangular faces (one per constraint, in constraint
# order) with coherently oriented attaching words.
_SQ_TORUS = {
    "zero_cells": ["P", "Q", "R"],
    "one_cells": [
        ("XI", "P", "P"),
        ("IX", "P", "Q"),
        ("XX", "P", "Q"),
        ("IZ", "R", "P"),
        ("ZI", "P", "P"),
        ("ZZ", "P", "R"),
        ("XZ", "P", "R"),
        ("ZX", "P", "Q"),
        ("YY", "Q", "R"),
    ],
    "two_cells": [
        ("r1", [("IX", 1), ("XX", -1), ("XI", -1)]),
        ("r2", [("ZZ", 1), ("IZ", 1), ("ZI", 1)]),
        ("r3", [("XZ", 1), ("YY", -1), ("ZX", -1)]),
        ("c1", [("XI", 1), ("IZ", -1), ("XZ", -1)]),
        ("c2", [("ZX", 1), ("IX", -1), ("ZI", -1)]),
        ("c3", [("XX", 1), ("YY", 1), ("ZZ", -1)]),
    ],
}


# --- Mermin star ------------------------------------------------------------
# Five lines of four three-qubit observables each; only the line
# {XXX, YYX, YXY, XYY} multiplies to -I.

_ST_VARIABLES = ("IXI", "IYI", "IIY", "YII", "IIX", "XII",
                 "YXY", "YYX", "XXX", "XYY")

_ST_CONSTRAINTS = (
    ({"XXX": 1, "YYX": 1, "YXY": 1, "XYY": 1}, 1, "inner"),
    ({"IXI": 1, "IIY": 1, "YII": 1, "YXY": 1}, 0, "bottom"),
    ({"IYI": 1, "YII": 1, "IIX": 1, "YYX": 1}, 0, "right"),
    ({"IXI": 1, "IIX": 1, "XII": 1, "XXX": 1}, 0, "top"),
    ({"IYI": 1, "IIY": 1, "XII": 1, "XYY": 1}, 0, "left"),
)

# Torus with five vertices: an inner square A, B, C, D of faces around the
# central 2-cell, glued to the basepoint P by the four outer faces.
_ST_TORUS = {
    "zero_cells": ["P", "A", "B", "C", "D"],
    "one_cells": [
        ("IXI", "P", "P"),
        ("IYI", "P", "P"),
        ("IIY", "P", "A"),
        ("YII", "P", "B"),
        ("IIX", "P", "C"),
        ("XII", "P", "D"),
        ("YXY", "A", "B"),
        ("YYX", "B", "C"),
        ("XXX", "D", "C"),
        ("XYY", "A", "D"),
    ],
    "two_cells": [
        ("inner", [("YXY", 1), ("YYX", 1), ("XXX", -1), ("XYY", -1)]),
        ("bottom", [("IXI", 1), ("YII", 1), ("YXY", -1), ("IIY", -1)]),
        ("right", [("IYI", 1), ("IIX", 1), ("YYX", -1), ("YII", -1)]),
        ("top", [("IXI", -1), ("XII", 1), ("XXX", 1), ("IIX", -1)]),
        ("left", [("IYI", -1), ("IIY", 1), ("XYY", 1), ("XII", -1)]),
    ],
}


# --- Refined star -----------------------------------------------------------
# The star torus with every square face cut into two triangles by the new
# diagonals XYI, YXI, XXI, YYI and ZZI; only the triangle {YYX, XXX, ZZI}
# multiplies to -I.

_RF_VARIABLES = _ST_VARIABLES + ("XYI", "YXI", "XXI", "YYI", "ZZI")

_RF_CONSTRAINTS = (
    ({"IYI": 1, "XII": 1, "XYI": 1}, 0, "Ta"),
    ({"IIY": 1, "XYY": 1, "XYI": 1}, 0, "Tb"),
    ({"IXI": 1, "YII": 1, "YXI": 1}, 0, "Tc"),
    ({"IIY": 1, "YXY": 1, "YXI": 1}, 0, "Td"),
    ({"IXI": 1, "XII": 1, "XXI": 1}, 0, "Te"),
    ({"IIX": 1, "XXX": 1, "XXI": 1}, 0, "Tf"),
    ({"IYI": 1, "YII": 1, "YYI": 1}, 0, "Tg"),
    ({"IIX": 1, "YYX": 1, "YYI": 1}, 0, "Th"),
    ({"YXY": 1, "XYY": 1, "ZZI": 1}, 0, "Ti"),
    ({"YYX": 1, "XXX": 1, "ZZI": 1}, 1, "Tj"),
)

_RF_TORUS = {
    "zero_cells": ["P", "A", "B", "C", "D"],
    "one_cells": _ST_TORUS["one_cells"] + [
        ("XYI", "P", "D"),
        ("YXI", "P", "B"),
        ("XXI", "P", "D"),
        ("YYI", "P", "B"),
        ("ZZI", "D", "B"),
    ],
    "two_cells": [
        ("Ta", [("XYI", 1), ("XII", -1), ("IYI", -1)]),
        ("Tb", [("IIY", 1), ("XYY", 1), ("XYI", -1)]),
        ("Tc", [("IXI", 1), ("YII", 1), ("YXI", -1)]),
        ("Td", [("YXI", 1), ("YXY", -1), ("IIY", -1)]),
        ("Te", [("IXI", -1), ("XII", 1), ("XXI", -1)]),
        ("Tf", [("XXI", 1), ("XXX", 1), ("IIX", -1)]),
        ("Tg", [("IYI", 1), ("YYI", 1), ("YII", -1)]),
        ("Th", [("IIX", 1), ("YYX", -1), ("YYI", -1)]),
        ("Ti", [("YXY", 1), ("ZZI", -1), ("XYY", -1)]),
        ("Tj", [("YYX", 1), ("XXX", -1), ("ZZI", 1)]),
    ],
}


_SPECS = {
    "mermin_square": (_SQ_VARIABLES, _SQ_CONSTRAINTS, _SQ_TORUS, 2),
    "mermin_star": (_ST_VARIABLES, _ST_CONSTRAINTS, _ST_TORUS, 3),
    "mermin_refined": (_RF_VARIABLES, _RF_CONSTRAINTS, _RF_TORUS, 3),
}


def normalize_fixture_name(name: str) -> str:
    return name.strip().lower().replace("-", "_")


def builtin_fixture(name: str) -> Fixture:
    key = normalize_fixture_name(name)
    if key not in _SPECS:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    variables, constraints, torus, n = _SPECS[key]
    L = LinearConstraintSystem.build(2, variables, constraints)
    H, tau = hypergraph_of(L)
    X = CW2Complex.build(torus["zero_cells"], torus["one_cells"], torus["two_cells"])
    if not is_realization(X, H, L.d):
        raise AssertionError(f"fixture {key} realization witness failed")
    T = _pauli_assignment(variables, n)
    return Fixture(key, L, H, tau, X, T)
