"""Exact integer and modular linear algebra.

Everything here runs over Python's arbitrary-precision integers: Smith
normal form with unimodular transforms, solving A*x = b modulo d
(composite d allowed, via the integer lift [A | d*I]), and presentations
of finite abelian groups in invariant-factor form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, prod


class DimensionMismatch(ValueError):
    """Raised when matrix/vector shapes are incompatible."""


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, row-major."""

    rows: int
    cols: int
    entries: tuple  # flattened, rows*cols ints

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @staticmethod
    def from_rows(rows):
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        flat = tuple(int(x) for r in rows for x in r)
        return IntMatrix(nrows, ncols, flat)

    @staticmethod
    def zeros(rows, cols):
        return IntMatrix(rows, cols, (0,) * (rows * cols))

    @staticmethod
    def identity(n):
        return IntMatrix(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def col(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
            out = []
            for i in range(self.rows):
                ri = self.row(i)
                for j in range(other.cols):
                    out.append(sum(ri[k] * other[k, j] for k in range(self.cols)))
            return IntMatrix(self.rows, other.cols, tuple(out))
        # matrix @ vector
        vec = list(other)
        if self.cols != len(vec):
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ vector of length {len(vec)}")
        return [sum(self[i, k] * vec[k] for k in range(self.cols)) for i in range(self.rows)]

    def hstack(self, other):
        if self.rows != other.rows:
            raise DimensionMismatch("hstack row mismatch")
        rows = [self.row(i) + other.row(i) for i in range(self.rows)]
        return IntMatrix(self.rows, self.cols + other.cols, tuple(x for r in rows for x in r))

    def scale(self, c):
        return IntMatrix(self.rows, self.cols, tuple(c * x for x in self.entries))

    def mod(self, d):
        return IntMatrix(self.rows, self.cols, tuple(x % d for x in self.entries))

    def is_zero(self):
        return all(x == 0 for x in self.entries)

    def det_unimodular_sign(self):
        """Determinant of a square matrix via fraction-free elimination (Bareiss)."""
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class ZdVector:
    """Vector of residues modulo d (d >= 1; d = 1 is the degenerate zero module)."""

    modulus: int
    coordinates: tuple

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        if any(not (0 <= x < self.modulus) for x in self.coordinates):
            raise ValueError("coordinates not reduced")

    @staticmethod
    def make(modulus, coords):
        return ZdVector(modulus, tuple(int(x) % modulus for x in coords))

    def __len__(self):
        return len(self.coordinates)

    def __add__(self, other):
        if self.modulus != other.modulus or len(self) != len(other):
            raise DimensionMismatch("vector mismatch")
        return ZdVector.make(self.modulus,
                             [a + b for a, b in zip(self.coordinates, other.coordinates)])

    def is_zero(self):
        return all(x == 0 for x in self.coordinates)


@dataclass(frozen=True)
class SmithDecomposition:
    """A = U @ S @ V with U, V unimodular and S diagonal with a divisibility chain."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    def diagonal(self):
        n = min(self.S.rows, self.S.cols)
        return [self.S[i, i] for i in range(n)]

    def rank(self):
        return sum(1 for s in self.diagonal() if s != 0)


@dataclass(frozen=True)
class _ExtendedSNF:
    """S = E @ A @ F; U = E^-1 and V = F^-1 are kept so no inversion is ever needed."""

    S: IntMatrix
    E: IntMatrix
    Einv: IntMatrix
    F: IntMatrix
    Finv: IntMatrix

    def public(self):
        return SmithDecomposition(U=self.Einv, S=self.S, V=self.Finv)


def _snf_extended(A: IntMatrix) -> _ExtendedSNF:
    r, c = A.rows, A.cols
    S = A.to_rows()
    E = IntMatrix.identity(r).to_rows()
    Einv = IntMatrix.identity(r).to_rows()
    F = IntMatrix.identity(c).to_rows()
    Finv = IntMatrix.identity(c).to_rows()

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        E[i], E[j] = E[j], E[i]
        for row in Einv:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, q):  # row i += q * row j
        for k in range(c):
            S[i][k] += q * S[j][k]
        for k in range(r):
            E[i][k] += q * E[j][k]
        for row in Einv:
            row[j] -= q * row[i]

    def negate_row(i):
        S[i] = [-x for x in S[i]]
        E[i] = [-x for x in E[i]]
        for row in Einv:
            row[i] = -row[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in F:
            row[i], row[j] = row[j], row[i]
        Finv[i], Finv[j] = Finv[j], Finv[i]

    def add_col(i, j, q):  # col i += q * col j
        for row in S:
            row[i] += q * row[j]
        for row in F:
            row[i] += q * row[j]
        for k in range(c):
            Finv[j][k] -= q * Finv[i][k]

    def rdiv(a, b):
        # nearest-integer quotient: remainder magnitude at most |b| / 2
        q, rem = divmod(a, b)
        if 2 * abs(rem) > abs(b):
            q += 1
        return q

    t = 0
    n = min(r, c)
    while t < n:
        # re-select the minimal-absolute-value nonzero pivot every round;
        # together with rounded division this keeps coefficient growth tame
        pivot = None
        best = None
        for i in range(t, r):
            for j in range(t, c):
                v = S[i][j]
                if v != 0 and (best is None or abs(v) < best):
                    best = abs(v)
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)

        # one reduction sweep; leftover remainders are strictly smaller than
        # the pivot and become the pivot of the next round
        piv = S[t][t]
        clean = True
        for i in range(t + 1, r):
            if S[i][t] != 0:
                q = rdiv(S[i][t], piv)
                if q:
                    add_row(i, t, -q)
                if S[i][t] != 0:
                    clean = False
        for j in range(t + 1, c):
            if S[t][j] != 0:
                q = rdiv(S[t][j], piv)
                if q:
                    add_col(j, t, -q)
                if S[t][j] != 0:
                    clean = False
        if not clean:
            continue
        # enforce divisibility into the rest of the submatrix
        offender = None
        for i in range(t + 1, r):
            for j in range(t + 1, c):
                if S[i][j] % piv != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(t, offender, 1)
            continue  # re-run elimination at the same t
        if piv < 0:
            negate_row(t)
        t += 1

    return _ExtendedSNF(
        S=IntMatrix.from_rows(S) if r and c else IntMatrix.zeros(r, c),
        E=IntMatrix.from_rows(E) if r else IntMatrix.zeros(0, 0),
        Einv=IntMatrix.from_rows(Einv) if r else IntMatrix.zeros(0, 0),
        F=IntMatrix.from_rows(F) if c else IntMatrix.zeros(0, 0),
        Finv=IntMatrix.from_rows(Finv) if c else IntMatrix.zeros(0, 0),
    )


def smith_normal_form(A: IntMatrix) -> SmithDecomposition:
    """Smith normal form with unimodular transforms: A = U @ S @ V."""
    return _snf_extended(A).public()


def solve_int(A: IntMatrix, b) -> list | None:
    """One integer solution of A*y = b with free directions zeroed, or None."""
    b = [int(x) for x in b]
    if len(b) != A.rows:
        raise DimensionMismatch("rhs length mismatch")
    ext = _snf_extended(A)
    cprime = ext.E @ b if A.rows else []
    diag = [ext.S[i, i] for i in range(min(A.rows, A.cols))]
    z = [0] * A.cols
    for i in range(A.rows):
        s = diag[i] if i < len(diag) else 0
        if s == 0:
            if cprime[i] != 0:
                return None
        else:
            if cprime[i] % s != 0:
                return None
            z[i] = cprime[i] // s
    return ext.F @ z if A.cols else []


def solve_mod(A: IntMatrix, b: ZdVector, d: int) -> ZdVector | None:
    """One solution of A*x = b (mod d), or None if the system is unsolvable.

    Deterministic: free directions of the lifted system are zeroed and the
    result is reduced to [0, d).
    """
    if d < 2:
        raise ValueError("modulus must be >= 2")
    if b.modulus != d:
        raise DimensionMismatch("rhs modulus mismatch")
    if len(b) != A.rows:
        raise DimensionMismatch("rhs length mismatch")
    lifted = A.hstack(IntMatrix.identity(A.rows).scale(d))
    y = solve_int(lifted, b.coordinates)
    if y is None:
        return None
    return ZdVector.make(d, y[:A.cols])


def kernel_int(A: IntMatrix) -> list[list[int]]:
    """Basis (as columns) of the integer null space of A."""
    ext = _snf_extended(A)
    diag = [ext.S[i, i] for i in range(min(A.rows, A.cols))]
    free = [j for j in range(A.cols) if j >= len(diag) or diag[j] == 0]
    return [ext.F.col(j) for j in free]


@dataclass(frozen=True)
class FinAbGroup:
    """Finite abelian group as invariant factors k1 | k2 | ... (all >= 2).

    generator_lift, when present, is an (ambient dim) x (num factors) matrix
    whose column i is a vector in the ambient module representing the i-th
    abstract generator.
    """

    invariant_factors: tuple
    generator_lift: IntMatrix | None = field(default=None, compare=False)

    def __post_init__(self):
        ks = self.invariant_factors
        if any(k < 2 for k in ks):
            raise ValueError("invariant factors must be >= 2")
        if any(ks[i + 1] % ks[i] != 0 for i in range(len(ks) - 1)):
            raise ValueError("divisibility chain violated")

    @staticmethod
    def trivial():
        return FinAbGroup(())

    @property
    def order(self):
        return prod(self.invariant_factors)

    def is_trivial(self):
        return not self.invariant_factors

    def describe(self):
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"Z/{k}" for k in self.invariant_factors)


def _column_matrix(n, cols):
    if not cols:
        return IntMatrix.zeros(n, 0)
    return IntMatrix.from_rows([[col[i] for col in cols] for i in range(n)])


def lattice_quotient(n: int, numerator_cols, denominator_cols, lift_modulus=None) -> FinAbGroup:
    """Quotient L1/L2 of full-rank lattices in Z^n given by generating columns.

    Requires L2 <= L1 and L1/L2 finite. Generator lifts are returned in the
    ambient Z^n coordinates (reduced mod lift_modulus when given).
    """
    if n == 0:
        return FinAbGroup.trivial()
    M1 = _column_matrix(n, list(numerator_cols))
    M2 = _column_matrix(n, list(denominator_cols))
    ext1 = _snf_extended(M1)
    diag1 = [ext1.S[i, i] for i in range(min(M1.rows, M1.cols))]
    if len(diag1) < n or any(s == 0 for s in diag1[:n]):
        raise ValueError("numerator lattice is not full rank")
    # basis of L1: B1 = Einv1 @ diag(s); R = B1^-1 @ M2 = diag(1/s) @ E1 @ M2
    EM2 = ext1.E @ M2
    R_rows = []
    for i in range(n):
        row = EM2.row(i)
        s = diag1[i]
        if any(x % s != 0 for x in row):
            raise ValueError("denominator lattice not contained in numerator lattice")
        R_rows.append([x // s for x in row])
    R = IntMatrix.from_rows(R_rows)
    extR = _snf_extended(R)
    diagR = [extR.S[i, i] for i in range(min(R.rows, R.cols))]
    if len(diagR) < n or any(s == 0 for s in diagR[:n]):
        raise ValueError("quotient is not finite")
    B1 = ext1.Einv @ IntMatrix.from_rows(
        [[diag1[i] if i == j else 0 for j in range(n)] for i in range(n)])
    gen_matrix = B1 @ extR.Einv
    factors = []
    lift_cols = []
    for i in range(n):
        k = diagR[i]
        if k >= 2:
            factors.append(k)
            col = gen_matrix.col(i)
            if lift_modulus is not None:
                col = [x % lift_modulus for x in col]
            lift_cols.append(col)
    lift = _column_matrix(n, lift_cols)
    return FinAbGroup(tuple(factors), lift)


def quotient_group(ambient_rank: int, d: int, relations: IntMatrix) -> FinAbGroup:
    """(Z/d)^n modulo the column span of `relations`, in invariant-factor form."""
    if relations.rows != ambient_rank:
        raise DimensionMismatch("relations must have ambient_rank rows")
    if ambient_rank == 0:
        return FinAbGroup.trivial()
    denom = [relations.col(j) for j in range(relations.cols)]
    denom += [IntMatrix.identity(ambient_rank).scale(d).col(j) for j in range(ambient_rank)]
    numer = [IntMatrix.identity(ambient_rank).col(j) for j in range(ambient_rank)]
    return lattice_quotient(ambient_rank, numer, denom, lift_modulus=d)


def kernel_mod(A: IntMatrix, d: int) -> FinAbGroup:
    """{x over Z/d : A*x = 0 (mod d)} with explicit generator lifts."""
    if d < 2:
        raise ValueError("modulus must be >= 2")
    c = A.cols
    if c == 0:
        return FinAbGroup.trivial()
    lifted = A.hstack(IntMatrix.identity(A.rows).scale(d))
    numer = [col[:c] for col in kernel_int(lifted)]
    dI = IntMatrix.identity(c).scale(d)
    numer += [dI.col(j) for j in range(c)]
    denom = [dI.col(j) for j in range(c)]
    return lattice_quotient(c, numer, denom, lift_modulus=d)


@dataclass(frozen=True)
class CoefficientMap:
    """Homomorphism Z/k1 -> Z/k2, x -> multiplier * x."""

    src_modulus: int
    dst_modulus: int
    multiplier: int

    def __post_init__(self):
        if self.src_modulus < 1 or self.dst_modulus < 1:
            raise ValueError("moduli must be >= 1")
        if (self.multiplier * self.src_modulus) % self.dst_modulus != 0:
            raise ValueError(
                f"x -> {self.multiplier}*x is not well defined "
                f"from Z/{self.src_modulus} to Z/{self.dst_modulus}")

    def apply(self, vec: ZdVector) -> ZdVector:
        if vec.modulus != self.src_modulus:
            raise DimensionMismatch("vector modulus does not match map source")
        return ZdVector.make(self.dst_modulus,
                             [self.multiplier * x for x in vec.coordinates])

    def compose(self, first: "CoefficientMap") -> "CoefficientMap":
        """self after first."""
        if first.dst_modulus != self.src_modulus:
            raise DimensionMismatch("composition moduli mismatch")
        return CoefficientMap(first.src_modulus, self.dst_modulus,
                              (self.multiplier * first.multiplier) % self.dst_modulus)

    def is_zero(self):
        return self.multiplier % self.dst_modulus == 0

    def is_identity(self):
        return (self.src_modulus == self.dst_modulus
                and self.multiplier % self.dst_modulus == 1 % self.dst_modulus)


def torsion_inclusion(d: int, m: int) -> CoefficientMap:
    """i_m: (Z/d)_m = Z/gcd(d,m) -> Z/d, the m-torsion subgroup inclusion."""
    g = gcd(d, m)
    return CoefficientMap(g, d, d // g)


def times_m(d: int, m: int) -> CoefficientMap:
    """Multiplication by m on Z/d."""
    return CoefficientMap(d, d, m % d)


def torsion_projection(d: int, m: int) -> CoefficientMap:
    """pi_m: Z/d -> (Z/d)/m(Z/d) = Z/gcd(d,m), reduction."""
    g = gcd(d, m)
    return CoefficientMap(d, g, 1)
