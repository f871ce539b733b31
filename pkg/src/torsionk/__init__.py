"""Exact certification of linear constraint systems over Z/d and the
torsion K-theory invariants of their topological realizations."""

from .complexes import (
    CohomologyClass,
    CW2Complex,
    InvalidComplex,
    brute_force_cohomology,
    class_of,
    cohomology,
    pi1_presentation,
    push_class,
)
from .exact_linalg import (
    CoefficientMap,
    FinAbGroup,
    IntMatrix,
    SmithDecomposition,
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
from .fixtures import FIXTURE_NAMES, Fixture, builtin_fixture
from .invariants import (
    Cdm,
    CdmClass,
    CdmGroupResult,
    Certificate,
    CReal,
    HomotopyGroupResult,
    KMuD,
    KoSym,
    UnsupportedDegree,
    UnverifiedSolution,
    cdm_group,
    certificates,
    class_of_solution,
    homotopy_group,
)
from .lcs import (
    Hypergraph,
    InvalidSystem,
    LinearConstraintSystem,
    SearchBoundExceeded,
    Tau,
    canonical_realization,
    classical_value,
    hypergraph_boundary,
    hypergraph_of,
    is_realization,
    scalar_solution,
)
from .operators import (
    DenseUnitary,
    OperatorSolution,
    PauliElement,
    PauliTarget,
    TargetMismatch,
    UnitaryTarget,
    VerificationReport,
    det_cochain,
    pauli_commute,
    pauli_mul,
    pauli_order_divides,
    pauli_pow,
    scalar_solution_to_operator,
    stabilize,
    to_matrix,
    verify_solution,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
