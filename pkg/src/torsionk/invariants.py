"""Spectrum homotopy groups and degree-2 generalized cohomology of complexes.

Four families of spectra are supported: the d-torsion unitary K-theory
spectrum (homotopy concentrated in degree 1), its 2-truncated cofiber
family C(d, m), the real symmetric K-theory spectrum with its 8-periodic
homotopy table, and the real 2-truncated family for even multipliers.
The C(d, m)-cohomology of a 2-complex is assembled from ordinary
cohomology with cyclic coefficients, and operator solutions of linear
constraint systems are assigned their class (phi1; phi2) in it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .complexes import (
    CohomologyClass,
    CW2Complex,
    class_of,
    cohomology,
    pi1_presentation,
)
from .exact_linalg import (
    FinAbGroup,
    IntMatrix,
    kernel_mod,
    quotient_group,
    torsion_projection,
)
from .lcs import LinearConstraintSystem, hypergraph_of, is_realization
from .operators import OperatorSolution, det_cochain, verify_solution


class UnsupportedDegree(ValueError):
    """Raised when a spectrum's homotopy is requested outside its range."""


# --- spectra ----------------------------------------------------------------

@dataclass(frozen=True)
class KMuD:
    """d-torsion unitary K-theory spectrum."""

    d: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("d must be >= 2")


@dataclass(frozen=True)
class Cdm:
    """2-truncated cofiber spectrum C(d, m)."""

    d: int
    m: int

    def __post_init__(self):
        if self.d < 2 or self.m < 1:
            raise ValueError("need d >= 2 and m >= 1")


@dataclass(frozen=True)
class KoSym:
    """Real symmetric K-theory spectrum."""


@dataclass(frozen=True)
class CReal:
    """Real 2-truncated family; only even multipliers carry nonzero groups
    in degrees 1 and 2, so only those are stored."""

    m: int

    def __post_init__(self):
        if self.m < 2 or self.m % 2 != 0:
            raise ValueError("m must be even and >= 2")


@dataclass(frozen=True)
class HomotopyGroupResult:
    """Either an exact group, or an order with the known subquotient factors
    when the extension is unresolved."""

    exact: FinAbGroup | None = None
    order: int | None = None
    subquotient_factors: tuple = ()
    candidates: tuple = ()  # possible groups when unresolved

    def __post_init__(self):
        if self.exact is not None and self.order not in (None, self.exact.order):
            raise ValueError("order does not match the exact group")

    @staticmethod
    def of(group: FinAbGroup):
        return HomotopyGroupResult(exact=group, order=group.order)

    @property
    def is_exact(self):
        return self.exact is not None

    def describe(self):
        if self.exact is not None:
            return self.exact.describe()
        cands = " or ".join(g.describe() for g in self.candidates)
        return f"order {self.order}, unresolved extension ({cands})"

    def to_json_dict(self):
        if self.exact is not None:
            return {"exact": True, "invariant_factors": list(self.exact.invariant_factors),
                    "order": self.exact.order}
        return {"exact": False, "order": self.order,
                "subquotient_factors": list(self.subquotient_factors),
                "candidates": [list(g.invariant_factors) for g in self.candidates]}


def _cyclic(k: int) -> FinAbGroup:
    return FinAbGroup((k,)) if k >= 2 else FinAbGroup.trivial()


def homotopy_group(s, r: int) -> HomotopyGroupResult:
    """pi_r of the given spectrum."""
    if isinstance(s, KMuD):
        if r not in (0, 1, 2):
            raise UnsupportedDegree(f"degree {r} not in 0..2")
        return HomotopyGroupResult.of(_cyclic(s.d) if r == 1 else FinAbGroup.trivial())
    if isinstance(s, Cdm):
        if r not in (0, 1, 2):
            raise UnsupportedDegree(f"degree {r} not in 0..2")
        if r == 0:
            return HomotopyGroupResult.of(FinAbGroup.trivial())
        mul = IntMatrix.from_rows([[s.m]])
        if r == 1:
            # cokernel of multiplication by m on Z/d
            return HomotopyGroupResult.of(quotient_group(1, s.d, mul))
        # kernel of multiplication by m on Z/d
        return HomotopyGroupResult.of(kernel_mod(mul, s.d))
    if isinstance(s, KoSym):
        if r < 0:
            raise UnsupportedDegree("degree must be >= 0")
        k, eps = divmod(r, 8)
        table = {1: 2, 2: 2, 3: 2 ** (4 * k + 3), 7: 2 ** (4 * k + 4)}
        return HomotopyGroupResult.of(_cyclic(table.get(eps, 1)))
    if isinstance(s, CReal):
        if r not in (1, 2):
            raise UnsupportedDegree(f"degree {r} not in 1..2")
        if r == 1:
            return HomotopyGroupResult.of(_cyclic(2))
        # extension 0 -> Z/2 -> pi_2 -> Z/2 -> 0, never resolved
        return HomotopyGroupResult(order=4, subquotient_factors=(2, 2),
                                   candidates=(FinAbGroup((4,)), FinAbGroup((2, 2))))
    raise TypeError(f"unknown spectrum {s!r}")


def direct_sum(a: FinAbGroup, b: FinAbGroup) -> FinAbGroup:
    """Direct sum, renormalized to invariant-factor form."""
    ks = a.invariant_factors + b.invariant_factors
    if not ks:
        return FinAbGroup.trivial()
    L = lcm(*ks)
    rel = IntMatrix.from_rows([[ks[i] if i == j else 0 for j in range(len(ks))]
                               for i in range(len(ks))])
    return FinAbGroup(quotient_group(len(ks), L, rel).invariant_factors)


# --- C(d, m)-cohomology of a 2-complex --------------------------------------

@dataclass(frozen=True)
class CdmGroupResult:
    """C(d,m)(X), split into its degree-1 and degree-2 cohomology pieces.

    The total group is exact when d | m (canonical splitting, with Z/d
    coefficients) or when gcd(d, m) = 1 (trivial); otherwise only the order
    is certain and the extension is reported unresolved.
    """

    d: int
    m: int
    g: int
    h1_piece: FinAbGroup  # degree-1 cohomology with Z/g coefficients
    h2_piece: FinAbGroup  # degree-2 cohomology with Z/g coefficients
    total: FinAbGroup | None
    order: int

    @property
    def is_exact(self):
        return self.total is not None

    def describe(self):
        if self.total is not None:
            return self.total.describe()
        return f"order {self.order}, extension unresolved"

    def to_json_dict(self):
        out = {
            "d": self.d, "m": self.m, "gcd": self.g,
            "h1_piece": list(self.h1_piece.invariant_factors),
            "h2_piece": list(self.h2_piece.invariant_factors),
            "order": self.order,
            "exact": self.total is not None,
        }
        if self.total is not None:
            out["invariant_factors"] = list(self.total.invariant_factors)
        return out


def cdm_group(X: CW2Complex, d: int, m: int) -> CdmGroupResult:
    """C(d,m)(X) from the cohomology of X with cyclic coefficients.

    The degree-2 piece is H^2 with m-torsion coefficients and the degree-1
    piece is H^1 with mod-m-reduced coefficients; both coefficient groups
    are the cyclic group of order g = gcd(d, m).
    """
    if d < 2 or m < 1:
        raise ValueError("need d >= 2 and m >= 1")
    g = gcd(d, m)
    h1 = cohomology(X, g, 1)
    h2 = cohomology(X, g, 2)
    order = h1.order * h2.order
    if m % d == 0:
        total = direct_sum(cohomology(X, d, 1), cohomology(X, d, 2))
        assert total.order == order
    elif g == 1:
        total = FinAbGroup.trivial()
    else:
        total = None
    return CdmGroupResult(d, m, g, h1, h2, total, order)


@dataclass(frozen=True)
class CdmClass:
    """Class of an operator solution in C(d,m)(X): a degree-1 component over
    Z/gcd(d,m) and a degree-2 component over Z/d."""

    d: int
    m: int
    h1: CohomologyClass
    h2: CohomologyClass

    def __post_init__(self):
        if self.h2.modulus != self.d or self.h1.modulus != gcd(self.d, self.m):
            raise ValueError("component moduli do not match (d, m)")

    def coordinates(self):
        return (self.h1.coordinates, self.h2.coordinates)

    def describe(self):
        c1 = ",".join(str(c) for c in self.h1.coordinates)
        c2 = ",".join(str(c) for c in self.h2.coordinates)
        return f"({c1};{c2})"

    def to_json_dict(self):
        return {
            "d": self.d, "m": self.m,
            "h1": {"modulus": self.h1.modulus,
                   "coordinates": list(self.h1.coordinates),
                   "group": list(self.h1.ambient_group.invariant_factors)},
            "h2": {"modulus": self.h2.modulus,
                   "coordinates": list(self.h2.coordinates),
                   "group": list(self.h2.ambient_group.invariant_factors)},
            "pair": self.describe(),
            "h2_is_zero": self.h2.is_zero(),
        }


class UnverifiedSolution(ValueError):
    """Raised when a class is requested for a failing operator solution."""


def class_of_solution(X: CW2Complex, L: LinearConstraintSystem,
                      T: OperatorSolution, m: int | None = None) -> CdmClass:
    """The class (phi1; phi2) of a verified operator solution on a
    realization X of the system's hypergraph.

    phi2 is the class of the right-hand sides in degree-2 cohomology with
    Z/d coefficients; phi1 is the class of the determinant cochain reduced
    mod g = gcd(d, m) in degree-1 cohomology with Z/g coefficients.
    """
    if m is None:
        m = T.dimension
    report = verify_solution(L, T)
    if not report.ok:
        raise UnverifiedSolution(
            f"solution fails verification (constraints: {report.failing_constraints()})")
    H, tau = hypergraph_of(L)
    if not is_realization(X, H, L.d):
        raise ValueError("complex is not a realization of the system's hypergraph")
    h2 = class_of(X, L.d, 2, tau.vector())
    c = det_cochain(T, L)
    reduced = torsion_projection(L.d, m).apply(c)
    h1 = class_of(X, gcd(L.d, m), 1, reduced)
    return CdmClass(L.d, m, h1, h2)


# --- no-go certificates -----------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    kind: str          # "h2_vanishes" | "coprime" | "pi1_trivial_obstruction"
    statement: str
    checked_facts: tuple  # ((fact, value), ...)

    def to_json_dict(self):
        return {"kind": self.kind, "statement": self.statement,
                "checked_facts": {k: v for k, v in self.checked_facts}}


def certificates(X: CW2Complex, L: LinearConstraintSystem, m: int) -> list:
    """Applicable no-go/collapse statements for operator solutions over U(m).

    (a) if degree-2 cohomology with Z/gcd(d,m) coefficients vanishes, any
        operator solution over U(m) forces a scalar solution;
    (b) if gcd(d, m) = 1 the whole C(d,m) group vanishes and (a) applies;
    (c) if the fundamental group is recognizably trivial and the class of
        the right-hand sides is nonzero, no operator solution exists over
        any U(m).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    H, tau = hypergraph_of(L)
    if not is_realization(X, H, L.d):
        raise ValueError("complex is not a realization of the system's hypergraph")
    d = L.d
    g = gcd(d, m)
    out = []
    h2g = cohomology(X, g, 2)
    if g == 1:
        out.append(Certificate(
            "coprime",
            f"gcd({d}, {m}) = 1, so the obstruction group C({d},{m})(X) vanishes: "
            f"an operator solution over U({m}) would force a scalar solution",
            (("gcd", 1), ("cdm_order", cdm_group(X, d, m).order))))
    if h2g.is_trivial():
        out.append(Certificate(
            "h2_vanishes",
            f"degree-2 cohomology with Z/{g} coefficients vanishes: an operator "
            f"solution over U({m}) would force a scalar solution",
            (("gcd", g), ("h2_invariant_factors", list(h2g.invariant_factors)))))
    pres = pi1_presentation(X)
    if pres.recognizably_trivial:
        tau_class = class_of(X, d, 2, tau.vector())
        if not tau_class.is_zero():
            out.append(Certificate(
                "pi1_trivial_obstruction",
                "the fundamental group is trivial and the right-hand-side class "
                "is nonzero: no operator solution exists over any U(m)",
                (("pi1_generators", 0),
                 ("tau_class_coordinates", list(tau_class.coordinates)))))
    return out
