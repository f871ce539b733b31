"""Generalized Pauli group arithmetic and operator-solution verification.

Pauli elements are stored symplectically as (phase, x, z) for
i^phase * X(x) * Z(z) when p = 2 (phase mod 4) and
w^phase * X(x) * Z(z) when p is odd (phase mod p, w = e^{2*pi*i/p}).
Dense unitary targets are checked numerically within a tolerance;
Pauli targets are checked exactly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .exact_linalg import ZdVector
from .lcs import LinearConstraintSystem, hypergraph_boundary, hypergraph_of

UNITARITY_TOL = 1e-9
ROOT_SNAP_TOL = 1e-6

_PAULI_1Q = {
    (0, 0): np.eye(2, dtype=complex),
    (1, 0): np.array([[0, 1], [1, 0]], dtype=complex),          # X
    (0, 1): np.array([[1, 0], [0, -1]], dtype=complex),         # Z
}


class TargetMismatch(ValueError):
    """Raised when operators do not share a common target group."""


@dataclass(frozen=True)
class PauliElement:
    p: int
    n: int
    phase: int
    x: tuple
    z: tuple

    def __post_init__(self):
        if self.p < 2 or any(self.p % q == 0 for q in range(2, self.p)):
            raise ValueError("p must be prime")
        if len(self.x) != self.n or len(self.z) != self.n:
            raise ValueError("x, z must have length n")
        pm = self.phase_modulus
        if not 0 <= self.phase < pm:
            raise ValueError("phase not reduced")
        if any(not 0 <= v < self.p for v in self.x + self.z):
            raise ValueError("x, z not reduced mod p")

    @property
    def phase_modulus(self):
        return 4 if self.p == 2 else self.p

    @staticmethod
    def make(p, n, phase, x, z):
        pm = 4 if p == 2 else p
        return PauliElement(p, n, phase % pm, tuple(v % p for v in x), tuple(v % p for v in z))

    @staticmethod
    def identity(p, n):
        return PauliElement.make(p, n, 0, (0,) * n, (0,) * n)

    @staticmethod
    def from_label(label: str):
        """Qubit tensor word over {I, X, Y, Z}, e.g. 'XZ' for X (x) Z."""
        x, z, phase = [], [], 0
        for ch in label:
            if ch == "I":
                x.append(0); z.append(0)
            elif ch == "X":
                x.append(1); z.append(0)
            elif ch == "Z":
                x.append(0); z.append(1)
            elif ch == "Y":
                x.append(1); z.append(1)
                phase += 1  # Y = i * X * Z
            else:
                raise ValueError(f"unknown Pauli letter {ch!r}")
        return PauliElement.make(2, len(label), phase, x, z)

    def is_identity(self):
        return self.phase == 0 and all(v == 0 for v in self.x + self.z)

    def to_json_dict(self):
        return {"phase": self.phase, "x": list(self.x), "z": list(self.z)}


def pauli_mul(a: PauliElement, b: PauliElement) -> PauliElement:
    """Product in the generalized Pauli group, computed symplectically."""
    if (a.p, a.n) != (b.p, b.n):
        raise TargetMismatch("mismatched Pauli shapes")
    cross = sum(az * bx for az, bx in zip(a.z, b.x))
    if a.p == 2:
        phase = a.phase + b.phase + 2 * cross
    else:
        phase = a.phase + b.phase + cross
    return PauliElement.make(a.p, a.n, phase,
                             [ax + bx for ax, bx in zip(a.x, b.x)],
                             [az + bz for az, bz in zip(a.z, b.z)])


def pauli_pow(a: PauliElement, k: int) -> PauliElement:
    if k < 0:
        raise ValueError("negative powers not needed; lift exponents mod d first")
    out = PauliElement.identity(a.p, a.n)
    for _ in range(k):
        out = pauli_mul(out, a)
    return out


def pauli_commute(a: PauliElement, b: PauliElement) -> bool:
    return pauli_mul(a, b) == pauli_mul(b, a)


def pauli_order_divides(a: PauliElement, d: int) -> bool:
    """Whether a^d is the identity (phase included)."""
    return pauli_pow(a, d).is_identity()


def to_matrix(a: PauliElement, dense_guard: int = 2 ** 10) -> "DenseUnitary":
    """Dense p^n-dimensional matrix of a Pauli element."""
    dim = a.p ** a.n
    if dim > dense_guard:
        raise ValueError(f"dense rendering of dimension {dim} exceeds guard {dense_guard}")
    if a.p == 2:
        factors = [_PAULI_1Q.get((xi, zi)) for xi, zi in zip(a.x, a.z)]
        factors = [f if f is not None else _PAULI_1Q[(1, 0)] @ _PAULI_1Q[(0, 1)]
                   for f in factors]
        mat = reduce(np.kron, factors, np.eye(1, dtype=complex))
        mat = (1j ** a.phase) * mat
    else:
        w = cmath.exp(2j * cmath.pi / a.p)
        X = np.roll(np.eye(a.p, dtype=complex), 1, axis=0)  # X|j> = |j+1>
        Z = np.diag([w ** j for j in range(a.p)])
        factors = [np.linalg.matrix_power(X, xi) @ np.linalg.matrix_power(Z, zi)
                   for xi, zi in zip(a.x, a.z)]
        mat = reduce(np.kron, factors, np.eye(1, dtype=complex))
        mat = (w ** a.phase) * mat
    return DenseUnitary.from_array(mat)


def pauli_det_root(a: PauliElement):
    """det of the dense matrix, exactly, as (s, q) meaning e^{2*pi*i*s/q}."""
    if a.p != 2:
        return (0, 1)  # X, Z, and w*I all have determinant 1 for odd p
    # det(i^a M1 (x) ... (x) Mn) = i^(a*2^n) * prod_j det(Mj)^(2^(n-1))
    e = (a.phase * (2 ** a.n)) % 4
    half = 2 ** (a.n - 1)
    for xi, zi in zip(a.x, a.z):
        # det of X^x Z^z on one qubit is (-1)^(x+z)
        e = (e + 2 * ((xi + zi) % 2) * half) % 4
    if e == 0:
        return (0, 1)
    if e == 2:
        return (1, 2)
    return (e, 4)


@dataclass(frozen=True)
class DenseUnitary:
    m: int
    entries: tuple  # immutable nested tuples of (re, im) pairs
    tolerance: float = UNITARITY_TOL
    _array: np.ndarray = field(default=None, compare=False, repr=False)

    @staticmethod
    def from_array(mat, tolerance: float = UNITARITY_TOL):
        mat = np.asarray(mat, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError("matrix must be square")
        m = mat.shape[0]
        dev = np.max(np.abs(mat.conj().T @ mat - np.eye(m))) if m else 0.0
        if dev > tolerance:
            raise ValueError(f"matrix is not unitary within {tolerance} (deviation {dev:.2e})")
        entries = tuple(tuple((float(v.real), float(v.imag)) for v in row) for row in mat)
        return DenseUnitary(m, entries, tolerance, mat)

    def array(self):
        if self._array is not None:
            return self._array
        return np.array([[complex(re, im) for re, im in row] for row in self.entries])

    def to_json_dict(self):
        return {"matrix": [[[re, im] for re, im in row] for row in self.entries]}


@dataclass(frozen=True)
class PauliTarget:
    p: int
    n: int

    @property
    def dimension(self):
        return self.p ** self.n

    def to_json_dict(self):
        return {"kind": "pauli", "p": self.p, "n": self.n}


@dataclass(frozen=True)
class UnitaryTarget:
    m: int

    @property
    def dimension(self):
        return self.m

    def to_json_dict(self):
        return {"kind": "unitary", "m": self.m}


@dataclass(frozen=True)
class OperatorSolution:
    target: PauliTarget | UnitaryTarget
    assignment: tuple  # ((variable, PauliElement | DenseUnitary), ...)

    def __post_init__(self):
        for v, op in self.assignment:
            if isinstance(self.target, PauliTarget):
                if not isinstance(op, PauliElement) or (op.p, op.n) != (self.target.p, self.target.n):
                    raise TargetMismatch(f"operator for {v} does not match Pauli target")
            else:
                if not isinstance(op, DenseUnitary) or op.m != self.target.m:
                    raise TargetMismatch(f"operator for {v} does not match unitary target")

    @staticmethod
    def from_paulis(p, n, mapping):
        return OperatorSolution(PauliTarget(p, n), tuple(mapping.items())
                                if isinstance(mapping, dict) else tuple(mapping))

    @staticmethod
    def from_unitaries(m, mapping):
        return OperatorSolution(UnitaryTarget(m), tuple(mapping.items())
                                if isinstance(mapping, dict) else tuple(mapping))

    def operator(self, variable):
        for v, op in self.assignment:
            if v == variable:
                return op
        raise KeyError(variable)

    def variables(self):
        return [v for v, _ in self.assignment]

    @property
    def dimension(self):
        return self.target.dimension

    def to_dense(self):
        """Numeric rendering of a Pauli solution as a dense unitary solution."""
        if isinstance(self.target, UnitaryTarget):
            return self
        return OperatorSolution(
            UnitaryTarget(self.dimension),
            tuple((v, to_matrix(op)) for v, op in self.assignment))

    def to_json_dict(self):
        return {
            "target": self.target.to_json_dict(),
            "assignment": {v: op.to_json_dict() for v, op in self.assignment},
        }

    @staticmethod
    def from_json_dict(data):
        tgt = data["target"]
        if tgt["kind"] == "pauli":
            target = PauliTarget(int(tgt["p"]), int(tgt["n"]))
            assignment = tuple(
                (v, PauliElement.make(target.p, target.n, int(e["phase"]), e["x"], e["z"]))
                for v, e in data["assignment"].items())
        elif tgt["kind"] == "unitary":
            target = UnitaryTarget(int(tgt["m"]))
            assignment = tuple(
                (v, DenseUnitary.from_array(
                    [[complex(re, im) for re, im in row] for row in e["matrix"]]))
                for v, e in data["assignment"].items())
        else:
            raise ValueError(f"unknown target kind {tgt['kind']!r}")
        return OperatorSolution(target, assignment)


@dataclass(frozen=True)
class VerificationReport:
    torsion: tuple       # ((variable, bool), ...)
    commutation: tuple   # (((v1, v2), bool), ...) unordered pairs sharing an edge
    constraints: tuple   # ((constraint name, bool), ...)

    @property
    def ok(self):
        return (all(b for _, b in self.torsion)
                and all(b for _, b in self.commutation)
                and all(b for _, b in self.constraints))

    def failing_constraints(self):
        return [name for name, b in self.constraints if not b]

    def to_json_dict(self):
        return {
            "torsion": {v: b for v, b in self.torsion},
            "commutation": {f"{a},{b_}": ok for (a, b_), ok in self.commutation},
            "constraints": {name: b for name, b in self.constraints},
            "pass": self.ok,
        }


def _dense_close(A, B, tol):
    return float(np.max(np.abs(A - B))) <= tol if A.size else True


def verify_solution(L: LinearConstraintSystem, T: OperatorSolution,
                    tolerance: float = UNITARITY_TOL) -> VerificationReport:
    """Check d-torsion, edgewise commutation, and the product constraints.

    Pauli targets are verified exactly; dense targets within `tolerance`.
    Constraint products are taken in ascending variable order.
    """
    missing = set(L.variables) - set(T.variables())
    if missing:
        raise TargetMismatch(f"assignment missing variables: {sorted(missing)}")
    pauli = isinstance(T.target, PauliTarget)
    if pauli and L.d != T.target.p:
        raise TargetMismatch("Pauli target requires d = p")
    d = L.d
    var_pos = {v: i for i, v in enumerate(L.variables)}

    torsion = []
    for v in L.variables:
        op = T.operator(v)
        if pauli:
            torsion.append((v, pauli_order_divides(op, d)))
        else:
            A = op.array()
            torsion.append((v, _dense_close(np.linalg.matrix_power(A, d),
                                            np.eye(op.m), tolerance)))

    pairs = set()
    for con in L.constraints:
        vs = [v for v, _ in con.coeffs]
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                pairs.add(tuple(sorted((vs[i], vs[j]), key=var_pos.get)))
    commutation = []
    for a, b in sorted(pairs, key=lambda t: (var_pos[t[0]], var_pos[t[1]])):
        if pauli:
            ok = pauli_commute(T.operator(a), T.operator(b))
        else:
            A, B = T.operator(a).array(), T.operator(b).array()
            ok = _dense_close(A @ B, B @ A, tolerance)
        commutation.append(((a, b), ok))

    constraints = []
    m = T.dimension
    for con in L.constraints:
        ordered = sorted(con.coeffs, key=lambda vc: var_pos[vc[0]])
        if pauli:
            prod = PauliElement.identity(T.target.p, T.target.n)
            for v, c in ordered:
                prod = pauli_mul(prod, pauli_pow(T.operator(v), c))
            target = _phase_element(T.target, d, con.rhs)
            ok = prod == target
        else:
            prod = np.eye(m, dtype=complex)
            for v, c in ordered:
                prod = prod @ np.linalg.matrix_power(T.operator(v).array(), c)
            w = cmath.exp(2j * cmath.pi * con.rhs / d)
            ok = _dense_close(prod, w * np.eye(m), tolerance)
        constraints.append((con.name, ok))

    return VerificationReport(tuple(torsion), tuple(commutation), tuple(constraints))


def _phase_element(target: PauliTarget, d: int, b: int) -> PauliElement:
    """w^b * I as a Pauli element, w = e^{2*pi*i/d} with d = p."""
    if target.p == 2:
        return PauliElement.make(2, target.n, 2 * b, (0,) * target.n, (0,) * target.n)
    return PauliElement.make(target.p, target.n, b, (0,) * target.n, (0,) * target.n)


def stabilize(T: OperatorSolution, extra: int) -> OperatorSolution:
    """Tensor every operator with the identity on `extra` more qudits."""
    if not isinstance(T.target, PauliTarget):
        raise TargetMismatch("stabilize is defined for Pauli targets only")
    if extra < 0:
        raise ValueError("extra must be >= 0")
    if extra == 0:
        return T
    p, n = T.target.p, T.target.n
    pad = (0,) * extra
    return OperatorSolution(
        PauliTarget(p, n + extra),
        tuple((v, PauliElement.make(p, n + extra, op.phase, op.x + pad, op.z + pad))
              for v, op in T.assignment))


def det_cochain(T: OperatorSolution, L: LinearConstraintSystem) -> ZdVector:
    """The 1-cochain v -> log_w det T(v) over Z/d, w = e^{2*pi*i/d}.

    Exact for Pauli targets; dense determinants are snapped to the nearest
    d-th root of unity. The coboundary identity delta(c) = m * tau (mod d)
    is asserted, m being the target dimension.
    """
    d = L.d
    coords = []
    for v in L.variables:
        op = T.operator(v)
        if isinstance(op, PauliElement):
            s, q = pauli_det_root(op)
            if (s * d) % q != 0:
                raise ValueError(f"det of {v} is not a d-th root of unity")
            coords.append((s * d // q) % d)
        else:
            det = complex(np.linalg.det(op.array()))
            best = min(range(d), key=lambda c: abs(det - cmath.exp(2j * cmath.pi * c / d)))
            if abs(det - cmath.exp(2j * cmath.pi * best / d)) > ROOT_SNAP_TOL:
                raise ValueError(f"det of {v} is not a d-th root of unity within tolerance")
            coords.append(best)
    c = ZdVector.make(d, coords)
    H, tau = hypergraph_of(L)
    boundary = hypergraph_boundary(H, d)
    delta_c = [x % d for x in (boundary.transpose() @ list(c.coordinates))]
    m = T.dimension
    expected = [(m * t) % d for _, t in tau.values]
    if delta_c != expected:
        raise AssertionError("delta(det cochain) != m * tau (mod d)")
    return c


def scalar_solution_to_operator(x: ZdVector, L: LinearConstraintSystem) -> OperatorSolution:
    """Wrap a scalar solution as 1x1 unitaries w^{x_i}."""
    if len(x) != L.num_variables or x.modulus != L.d:
        raise ValueError("scalar solution does not match the system")
    w = cmath.exp(2j * cmath.pi / L.d)
    return OperatorSolution.from_unitaries(
        1, {v: DenseUnitary.from_array([[w ** xi]]) for v, xi in zip(L.variables, x.coordinates)})
