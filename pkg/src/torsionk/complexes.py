"""Two-dimensional CW complexes and their cellular cohomology mod k.

Complexes are purely combinatorial: named 0-cells, directed 1-cells, and
2-cells given by closed attaching words over the 1-cells. Orientation
convention: a 1-cell traversed forward contributes +1 to the degree-2
boundary, and the degree-1 boundary is target minus source.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .exact_linalg import (
    CoefficientMap,
    FinAbGroup,
    IntMatrix,
    ZdVector,
    kernel_int,
    lattice_quotient,
    quotient_group,
    smith_normal_form,
    solve_int,
    solve_mod,
)


class InvalidComplex(ValueError):
    """Raised when CW complex data is inconsistent."""


@dataclass(frozen=True)
class OneCell:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class TwoCell:
    name: str
    word: tuple  # ((one_cell_name, exponent), ...), a closed edge loop


@dataclass(frozen=True)
class CW2Complex:
    zero_cells: tuple
    one_cells: tuple  # of OneCell
    two_cells: tuple  # of TwoCell

    def __post_init__(self):
        if not self.zero_cells:
            raise InvalidComplex("need at least one 0-cell")
        if len(set(self.zero_cells)) != len(self.zero_cells):
            raise InvalidComplex("duplicate 0-cell names")
        names1 = [e.name for e in self.one_cells]
        if len(set(names1)) != len(names1):
            raise InvalidComplex("duplicate 1-cell names")
        if len({f.name for f in self.two_cells}) != len(self.two_cells):
            raise InvalidComplex("duplicate 2-cell names")
        verts = set(self.zero_cells)
        edges = {e.name: e for e in self.one_cells}
        for e in self.one_cells:
            if e.source not in verts or e.target not in verts:
                raise InvalidComplex(f"1-cell {e.name} has unknown endpoint")
        for f in self.two_cells:
            self._check_closed(f, edges)
        self._check_connected(edges)

    @staticmethod
    def _check_closed(f, edges):
        at = None
        start = None
        for entry in f.word:
            name, exp = entry
            if name not in edges:
                raise InvalidComplex(f"2-cell {f.name} references unknown 1-cell {name}")
            if exp == 0:
                raise InvalidComplex(f"2-cell {f.name} has zero exponent on {name}")
            e = edges[name]
            for _ in range(abs(exp)):
                frm, to = (e.source, e.target) if exp > 0 else (e.target, e.source)
                if at is None:
                    at, start = frm, frm
                elif at != frm:
                    raise InvalidComplex(f"attaching word of {f.name} is not a path")
                at = to
        if at is not None and at != start:
            raise InvalidComplex(f"attaching word of {f.name} is not closed")

    def _check_connected(self, edges):
        adj = {v: [] for v in self.zero_cells}
        for e in edges.values():
            adj[e.source].append(e.target)
            adj[e.target].append(e.source)
        seen = {self.zero_cells[0]}
        todo = deque(seen)
        while todo:
            v = todo.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        if len(seen) != len(self.zero_cells):
            raise InvalidComplex("complex is not connected")

    @staticmethod
    def build(zero_cells, one_cells, two_cells):
        """one_cells: (name, source, target) triples; two_cells: (name, word) pairs."""
        return CW2Complex(
            tuple(zero_cells),
            tuple(OneCell(*e) for e in one_cells),
            tuple(TwoCell(name, tuple((str(n), int(x)) for n, x in word))
                  for name, word in two_cells),
        )

    def one_cell_names(self):
        return [e.name for e in self.one_cells]

    def two_cell_names(self):
        return [f.name for f in self.two_cells]

    def to_json_dict(self):
        return {
            "zero_cells": list(self.zero_cells),
            "one_cells": [{"name": e.name, "source": e.source, "target": e.target}
                          for e in self.one_cells],
            "two_cells": [{"name": f.name, "word": [[n, x] for n, x in f.word]}
                          for f in self.two_cells],
        }

    @staticmethod
    def from_json_dict(data):
        return CW2Complex.build(
            data["zero_cells"],
            [(e["name"], e["source"], e["target"]) for e in data["one_cells"]],
            [(f["name"], [(n, x) for n, x in f["word"]]) for f in data["two_cells"]],
        )


@dataclass(frozen=True)
class ChainData:
    """Boundary matrices of the cellular chain complex, over Z."""

    d1: IntMatrix  # |C0| x |C1|, column = target - source
    d2: IntMatrix  # |C1| x |C2|, column = abelianized attaching word

    def __post_init__(self):
        if not (self.d1 @ self.d2).is_zero():
            raise InvalidComplex("d1 @ d2 != 0")

    def delta0(self):
        return self.d1.transpose()

    def delta1(self):
        return self.d2.transpose()


def chain_data(X: CW2Complex) -> ChainData:
    v_index = {v: i for i, v in enumerate(X.zero_cells)}
    e_index = {e.name: i for i, e in enumerate(X.one_cells)}
    n0, n1, n2 = len(X.zero_cells), len(X.one_cells), len(X.two_cells)
    d1 = [[0] * n1 for _ in range(n0)]
    for j, e in enumerate(X.one_cells):
        d1[v_index[e.target]][j] += 1
        d1[v_index[e.source]][j] -= 1
    d2 = [[0] * n2 for _ in range(n1)]
    for j, f in enumerate(X.two_cells):
        for name, exp in f.word:
            d2[e_index[name]][j] += exp
    return ChainData(
        d1=IntMatrix.from_rows(d1) if n0 else IntMatrix.zeros(0, n1),
        d2=IntMatrix.from_rows(d2) if n1 else IntMatrix.zeros(0, n2),
    )


def _cocycle_lattice(delta: IntMatrix, k: int):
    """Generating columns of {a in Z^n : delta @ a = 0 (mod k)} as a lattice."""
    n = delta.cols
    lifted = delta.hstack(IntMatrix.identity(delta.rows).scale(k))
    gens = [col[:n] for col in kernel_int(lifted)]
    kI = IntMatrix.identity(n).scale(k)
    gens += [kI.col(j) for j in range(n)]
    return gens


def cohomology(X: CW2Complex, k: int, degree: int) -> FinAbGroup:
    """H^degree(X, Z/k) with explicit cocycle generator lifts (degree 1 or 2)."""
    if k < 1:
        raise ValueError("coefficient modulus must be >= 1")
    cd = chain_data(X)
    if degree == 2:
        return quotient_group(len(X.two_cells), k, cd.delta1())
    if degree != 1:
        raise ValueError("only degrees 1 and 2 are supported")
    n1 = len(X.one_cells)
    if n1 == 0:
        return FinAbGroup.trivial()
    numer = _cocycle_lattice(cd.delta1(), k)
    delta0 = cd.delta0()
    kI = IntMatrix.identity(n1).scale(k)
    denom = [delta0.col(j) for j in range(delta0.cols)] + [kI.col(j) for j in range(n1)]
    return lattice_quotient(n1, numer, denom, lift_modulus=k)


@dataclass(frozen=True)
class CohomologyClass:
    degree: int
    modulus: int
    representative: ZdVector
    ambient_group: FinAbGroup
    coordinates: tuple
    complex: CW2Complex = field(compare=False)

    def is_zero(self):
        return all(c == 0 for c in self.coordinates)


def _coboundary_matrix(X: CW2Complex, degree: int) -> IntMatrix:
    cd = chain_data(X)
    return cd.delta0() if degree == 1 else cd.delta1()


def is_cocycle(X: CW2Complex, k: int, degree: int, cochain: ZdVector) -> bool:
    if degree == 2:
        return True  # top degree on a 2-complex
    cd = chain_data(X)
    image = cd.delta1() @ list(cochain.coordinates)
    return all(x % k == 0 for x in image)


def class_of(X: CW2Complex, k: int, degree: int, cochain: ZdVector) -> CohomologyClass:
    """The cohomology class of a mod-k cocycle, with canonical coordinates."""
    ncells = len(X.one_cells) if degree == 1 else len(X.two_cells)
    if len(cochain) != ncells or cochain.modulus != k:
        raise ValueError("cochain does not match the complex/modulus")
    if degree == 1 and not is_cocycle(X, k, 1, cochain):
        raise ValueError("degree-1 cochain is not a cocycle")
    group = cohomology(X, k, degree)
    cob = _coboundary_matrix(X, degree)
    t = len(group.invariant_factors)
    if t == 0:
        coords = ()
    else:
        # solve [G | cob | kI] y = representative over Z; the generator block
        # of y is canonical modulo the invariant factors
        G = group.generator_lift
        kI = IntMatrix.identity(ncells).scale(k)
        system = G.hstack(cob).hstack(kI)
        y = solve_int(system, cochain.coordinates)
        if y is None:
            raise AssertionError("cocycle not expressible in cohomology generators")
        coords = tuple(y[i] % group.invariant_factors[i] for i in range(t))
    cls = CohomologyClass(degree, k, cochain, group, coords, X)
    # exact coboundary decision must agree with the coordinates
    if k >= 2:
        bounded = solve_mod(cob, cochain, k) is not None
        if bounded != cls.is_zero():
            raise AssertionError("coordinate zero-test disagrees with solve_mod")
    return cls


def push_class(cls: CohomologyClass, cmap: CoefficientMap) -> CohomologyClass:
    """Change of coefficients applied to a cohomology class."""
    if cmap.src_modulus != cls.modulus:
        raise ValueError("descriptor source modulus does not match class modulus")
    return class_of(cls.complex, cmap.dst_modulus, cls.degree, cmap.apply(cls.representative))


@dataclass(frozen=True)
class Pi1Presentation:
    generators: tuple
    relators: tuple  # words in the generators, same ((name, exp), ...) shape
    spanning_tree: tuple
    recognizably_trivial: bool
    abelianization_trivial: bool


def pi1_presentation(X: CW2Complex) -> Pi1Presentation:
    """Presentation of the fundamental group from a BFS spanning tree.

    Generators are the 1-cells outside the tree; relators are the attaching
    words with tree edges deleted. Triviality is claimed only when repeated
    elimination of generators forced trivial by a one-letter relator (a word
    mentioning a single generator with total exponent +-1) empties the
    generator set; this is sound but not complete.
    """
    root = min(X.zero_cells)
    adj = {v: [] for v in X.zero_cells}
    for e in X.one_cells:
        adj[e.source].append((e.target, e.name))
        adj[e.target].append((e.source, e.name))
    tree = []
    seen = {root}
    todo = deque([root])
    while todo:
        v = todo.popleft()
        for w, name in sorted(adj[v]):
            if w not in seen:
                seen.add(w)
                tree.append(name)
                todo.append(w)
    tree_set = set(tree)
    generators = tuple(e.name for e in X.one_cells if e.name not in tree_set)
    relators = []
    for f in X.two_cells:
        word = tuple((n, x) for n, x in f.word if n not in tree_set)
        relators.append(word)
    relators = tuple(relators)
    gen_index = {g: i for i, g in enumerate(generators)}
    if generators:
        cols = []
        for word in relators:
            col = [0] * len(generators)
            for n, x in word:
                col[gen_index[n]] += x
            cols.append(col)
        if cols:
            rel = IntMatrix.from_rows([[c[i] for c in cols] for i in range(len(generators))])
        else:
            rel = IntMatrix.zeros(len(generators), 0)
        # abelianization Z^g / col(rel) is trivial iff SNF has g units on the diagonal
        snf = smith_normal_form(rel)
        diag = snf.diagonal()
        ab_trivial = (len(diag) == len(generators)
                      and all(abs(s) == 1 for s in diag[:len(generators)]))
    else:
        ab_trivial = True
    live = set(generators)
    changed = True
    while changed and live:
        changed = False
        for word in relators:
            names = {n for n, _ in word if n in live}
            if len(names) == 1:
                (name,) = names
                # a word in one generator collapses to a single power
                if abs(sum(x for n, x in word if n == name)) == 1:
                    live.discard(name)
                    changed = True
    return Pi1Presentation(
        generators=generators,
        relators=relators,
        spanning_tree=tuple(tree),
        recognizably_trivial=not live,
        abelianization_trivial=ab_trivial,
    )


def brute_force_cohomology(X: CW2Complex, k: int, degree: int,
                           enumeration_bound: int = 10 ** 6) -> FinAbGroup:
    """Cohomology by exhaustive cochain enumeration (test oracle).

    Independent of the Smith-normal-form path: the group structure is
    reconstructed from element-order counts alone.
    """
    from itertools import product

    cd = chain_data(X)
    n0, n1, n2 = len(X.zero_cells), len(X.one_cells), len(X.two_cells)
    if degree == 1:
        ncells, nprev, cob, delta = n1, n0, cd.delta0(), cd.delta1()
    elif degree == 2:
        ncells, nprev, cob, delta = n2, n1, cd.delta1(), None
    else:
        raise ValueError("only degrees 1 and 2 are supported")
    if k ** ncells > enumeration_bound or k ** nprev > enumeration_bound:
        raise ValueError("enumeration bound exceeded")

    coboundaries = set()
    for a in product(range(k), repeat=nprev):
        coboundaries.add(tuple(x % k for x in (cob @ list(a))))
    coboundaries = sorted(coboundaries)

    def is_cocycle_vec(vec):
        if delta is None:
            return True
        return all(x % k == 0 for x in (delta @ list(vec)))

    def coset_rep(vec):
        return min(tuple((vec[i] + b[i]) % k for i in range(ncells)) for b in coboundaries)

    elements = {coset_rep(vec)
                for vec in product(range(k), repeat=ncells) if is_cocycle_vec(vec)}
    zero = coset_rep((0,) * ncells)

    def killed_count(q):
        return sum(1 for x in elements
                   if coset_rep(tuple((q * xi) % k for xi in x)) == zero)

    return _group_from_order_counts(len(elements), killed_count)


def _group_from_order_counts(order: int, killed_count) -> FinAbGroup:
    """Invariant factors of a finite abelian group from |G| and the counting
    function q -> #{x in G : q*x = 0}."""
    if order == 1:
        return FinAbGroup.trivial()
    primes = []
    n = order
    p = 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.append(n)

    factors_by_prime = {}
    for p in primes:
        # c_j = #{cyclic p-factors with exponent >= j}, from count increments
        c = []
        prev_log = 0
        j = 1
        while True:
            cnt = killed_count(p ** j)
            log = 0
            while p ** log < cnt:
                log += 1
            assert p ** log == cnt, "count is not a prime power"
            if log == prev_log:
                break
            c.append(log - prev_log)
            prev_log = log
            j += 1
        factors = []
        for i in range(c[0] if c else 0):
            e = sum(1 for cj in c if cj > i)
            factors.append(p ** e)
        factors_by_prime[p] = sorted(factors)

    # right-align per-prime factor lists so the divisibility chain holds
    tmax = max(len(v) for v in factors_by_prime.values())
    invariant = []
    for i in range(tmax):
        f = 1
        for lst in factors_by_prime.values():
            pos = len(lst) - tmax + i
            if pos >= 0:
                f *= lst[pos]
        invariant.append(f)
    return FinAbGroup(tuple(q for q in invariant if q >= 2))
