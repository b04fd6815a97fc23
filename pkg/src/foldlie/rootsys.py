"""Root systems, Dynkin diagrams, graph automorphisms, and both folding
constructions (coinvariants and invariants), plus the character/cocharacter
lattices of the folded adjoint groups.

Roots are stored in weight-space coordinates: the j-th coordinate of a root
is its pairing with the j-th simple coroot, so the i-th simple root is the
i-th row of the Cartan matrix.  The inner product is carried explicitly as
a Gram matrix on these coordinates.  Folded systems live inside the ambient
space of the homogeneous system: the quotient V/(1-a)V is realized as the
fixed subspace of a (the orthogonal complement of im(1-a) for the invariant
inner product), so coinvariants and invariants can be compared directly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .exactalg import RatMatrix


_SERIES_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}


@dataclass(frozen=True)
class DynkinType:
    series: str
    rank: int

    def __post_init__(self):
        s, r = self.series, self.rank
        if s not in _SERIES_MIN_RANK:
            raise ValueError(f"unknown series {s!r}")
        if r < _SERIES_MIN_RANK[s]:
            raise ValueError(f"{s}{r} is not an admissible Dynkin type")
        if s == "E" and r not in (6, 7, 8):
            raise ValueError("E-series exists only for ranks 6, 7, 8")
        if s == "F" and r != 4:
            raise ValueError("F-series exists only for rank 4")
        if s == "G" and r != 2:
            raise ValueError("G-series exists only for rank 2")

    @staticmethod
    def parse(text: str) -> "DynkinType":
        m = re.fullmatch(r"\s*([ABCDEFG])\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse Dynkin type {text!r}")
        return DynkinType(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def is_simply_laced(self) -> bool:
        return self.series in ("A", "D", "E")

    def dual(self) -> "DynkinType":
        if self.series == "B":
            return DynkinType("C", self.rank)
        if self.series == "C":
            return DynkinType("B", self.rank)
        return self

    def root_count(self) -> int:
        n, s = self.rank, self.series
        if s == "A":
            return n * (n + 1)
        if s in ("B", "C"):
            return 2 * n * n
        if s == "D":
            return 2 * n * (n - 1)
        if s == "G":
            return 12
        if s == "F":
            return 48
        return {6: 72, 7: 126, 8: 240}[n]

    def weyl_order(self) -> int:
        import math

        n, s = self.rank, self.series
        if s == "A":
            return math.factorial(n + 1)
        if s in ("B", "C"):
            return 2**n * math.factorial(n)
        if s == "D":
            return 2 ** (n - 1) * math.factorial(n)
        if s == "G":
            return 12
        if s == "F":
            return 1152
        return {6: 51840, 7: 2903040, 8: 696729600}[n]

    def cartan_rows(self) -> list[list[int]]:
        """Cartan matrix C with C[i][j] = <alpha_i, alpha_j^vee>."""
        n = self.rank
        C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

        def edge(i, j):
            C[i][j] = C[j][i] = -1

        s = self.series
        if s in ("A", "B", "C"):
            for i in range(n - 1):
                edge(i, i + 1)
            if s == "B" and n >= 2:
                C[n - 2][n - 1] = -2  # alpha_n short
            if s == "C" and n >= 2:
                C[n - 1][n - 2] = -2  # alpha_n long
        elif s == "D":
            for i in range(n - 2):
                edge(i, i + 1)
            if n >= 3:
                edge(n - 3, n - 1)
        elif s == "E":
            # Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4
            chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
            for a, b in zip(chain, chain[1:]):
                edge(a, b)
            edge(1, 3)
        elif s == "F":
            edge(0, 1)
            edge(2, 3)
            C[1][2] = -2  # alpha_3, alpha_4 short
            C[2][1] = -1
        elif s == "G":
            C[0][1] = -1  # alpha_1 short, alpha_2 long
            C[1][0] = -3
        return C

    def simple_length_sq(self) -> list[Fraction]:
        """Squared lengths of the simple roots, long roots normalized to 2."""
        n = self.rank
        two = Fraction(2)
        if self.is_simply_laced:
            return [two] * n
        if self.series == "B":
            return [two] * (n - 1) + [Fraction(1)]
        if self.series == "C":
            return [Fraction(1)] * (n - 1) + [two]
        if self.series == "F":
            return [two, two, Fraction(1), Fraction(1)]
        return [Fraction(2, 3), two]  # G2


class RootSystem:
    """A finite root system with explicit Gram matrix.

    ``simple_roots`` and ``all_roots`` are tuples of coordinate tuples in a
    common ambient space; the ambient dimension may exceed the rank (folded
    systems live inside the homogeneous ambient space).
    """

    def __init__(self, ambient_dim, gram: RatMatrix, simple_roots, all_roots,
                 dtype: DynkinType | None = None, validate: bool = True):
        self.ambient_dim = ambient_dim
        self.gram = gram
        self.simple_roots = [tuple(Fraction(x) for x in v) for v in simple_roots]
        self.all_roots = [tuple(Fraction(x) for x in v) for v in all_roots]
        if dtype is None:
            dtype, perm = classify_with_perm(self.cartan_matrix())
            if perm != tuple(range(len(perm))):
                # reorder the simple roots to the canonical labeling
                reordered = [None] * len(self.simple_roots)
                for i, s in enumerate(self.simple_roots):
                    reordered[perm[i]] = s
                self.simple_roots = reordered
        self.dtype = dtype
        self._simple_coords = None
        if validate:
            self.verify()

    # -- geometry -----------------------------------------------------------
    def inner(self, u, v) -> Fraction:
        acc = Fraction(0)
        g = self.gram
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, vj in enumerate(v):
                if vj:
                    acc += ui * g.entry(i, j) * vj
        return acc

    def cartan_integer(self, alpha, beta) -> Fraction:
        """2(alpha, beta)/(beta, beta)."""
        return 2 * self.inner(alpha, beta) / self.inner(beta, beta)

    def cartan_matrix(self) -> list[list[Fraction]]:
        return [
            [self.cartan_integer(a, b) for b in self.simple_roots]
            for a in self.simple_roots
        ]

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def coroot(self, alpha) -> tuple:
        n = self.inner(alpha, alpha)
        return tuple(2 * x / n for x in alpha)

    def simple_coordinates(self) -> dict:
        """Each root expressed in the simple-root basis (exact)."""
        if self._simple_coords is None:
            from .exactalg import SpanSolver

            solver = SpanSolver(self.simple_roots)
            coords = {}
            for r in self.all_roots:
                c = solver.coordinates(r)
                if c is None:
                    raise AssertionError("root outside the simple-root span")
                coords[r] = c
            self._simple_coords = coords
        return self._simple_coords

    def positive_roots(self) -> list[tuple]:
        coords = self.simple_coordinates()
        return [r for r in self.all_roots if all(c >= 0 for c in coords[r])]

    # -- invariants -----------------------------------------------------------
    def verify(self):
        root_set = set(self.all_roots)
        for s in self.simple_roots:
            if s not in root_set:
                raise AssertionError("simple root missing from all_roots")
        for r in self.all_roots:
            if tuple(-x for x in r) not in root_set:
                raise AssertionError("root set not closed under negation")
        C = self.cartan_matrix()
        for i, row in enumerate(C):
            for j, x in enumerate(row):
                if x.denominator != 1:
                    raise AssertionError("non-integral Cartan integer")
                if i == j and x != 2:
                    raise AssertionError("diagonal Cartan entry != 2")
        expected = [[Fraction(x) for x in row] for row in self.dtype.cartan_rows()]
        if C != expected:
            raise AssertionError(
                f"Cartan matrix does not match declared type {self.dtype}"
            )
        if len(self.all_roots) != self.dtype.root_count():
            raise AssertionError(
                f"root count {len(self.all_roots)} != classical count "
                f"{self.dtype.root_count()} for {self.dtype}"
            )
        # pairwise Cartan integers of arbitrary roots are integers
        coords = self.simple_coordinates()
        for r in self.all_roots:
            for c in coords[r]:
                if c.denominator != 1:
                    raise AssertionError("root is not an integral combination of simples")

    def to_json(self) -> dict:
        return {
            "type": str(self.dtype),
            "ambient_dim": self.ambient_dim,
            "gram": [[str(self.gram.entry(i, j)) for j in range(self.gram.cols)]
                     for i in range(self.gram.rows)],
            "simple_roots": [[str(x) for x in r] for r in self.simple_roots],
            "all_roots": [[str(x) for x in r] for r in self.all_roots],
        }


@dataclass(frozen=True)
class GraphAut:
    """A Dynkin-diagram automorphism, given as a permutation of the simple
    root indices (0-based)."""

    permutation: tuple
    order: int

    def __post_init__(self):
        p = self.permutation
        if sorted(p) != list(range(len(p))):
            raise ValueError("not a permutation")
        k, q = 1, p
        ident = tuple(range(len(p)))
        while q != ident:
            q = tuple(p[i] for i in q)
            k += 1
            if k > len(p) + 2:
                raise ValueError("permutation order overflow")
        if k != self.order:
            raise ValueError(f"declared order {self.order} but actual order {k}")

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def apply_to_weight_coords(self, w) -> tuple:
        """a permutes fundamental weights, so weight coordinates permute."""
        p = self.permutation
        out = [None] * len(w)
        for i, x in enumerate(w):
            out[p[i]] = x
        return tuple(out)

    def validate_on(self, rs: RootSystem):
        """Cartan-matrix preservation and the Dynkin graph-automorphism
        condition (a(alpha), alpha) in {0, (alpha, alpha)} on every root."""
        C = rs.cartan_matrix()
        p = self.permutation
        n = rs.rank
        if len(p) != n:
            raise ValueError("permutation size != rank")
        for i in range(n):
            for j in range(n):
                if C[p[i]][p[j]] != C[i][j]:
                    raise ValueError("permutation does not preserve the Cartan matrix")
        for r in rs.all_roots:
            ar = self.apply_to_weight_coords(r)
            val = rs.inner(ar, r)
            if val != 0 and val != rs.inner(r, r):
                raise ValueError(
                    "not a Dynkin graph automorphism: (a(alpha), alpha) outside {0, |alpha|^2}"
                )

    def orbits(self, n: int) -> list[tuple]:
        """Orbits on simple-root indices, ordered by smallest member."""
        seen, out = set(), []
        for i in range(n):
            if i in seen:
                continue
            orb, j = [], i
            while j not in seen:
                seen.add(j)
                orb.append(j)
                j = self.permutation[j]
            out.append(tuple(orb))
        return out


@dataclass(frozen=True)
class FoldingDatum:
    homogeneous: RootSystem
    aut: GraphAut

    def __post_init__(self):
        rs, a = self.homogeneous, self.aut
        if not rs.dtype.is_simply_laced:
            raise ValueError("folding requires a simply-laced (ADE) system")
        a.validate_on(rs)
        if not a.is_trivial:
            t = rs.dtype
            ok = (
                (t.series == "A" and t.rank % 2 == 1 and t.rank >= 3 and a.order == 2)
                or (t.series == "D" and t.rank >= 4 and a.order == 2)
                or (t.series == "D" and t.rank == 4 and a.order == 3)
                or (t.series == "E" and t.rank == 6 and a.order == 2)
            )
            if not ok:
                raise ValueError(f"no folding of {t} by an order-{a.order} automorphism")


@dataclass(frozen=True)
class Lattice:
    """Free lattice given by an independent basis in an ambient Q-space."""

    rank: int
    basis: tuple

    def __post_init__(self):
        if self.rank != len(self.basis):
            raise ValueError("rank != number of basis vectors")
        if self.basis:
            m = RatMatrix.from_rows([list(b) for b in self.basis])
            if m.rank() != self.rank:
                raise ValueError("lattice basis is linearly dependent")


# -- construction -----------------------------------------------------------


def build_root_system(t: DynkinType | str) -> RootSystem:
    """Standard root system of a Dynkin type, in weight coordinates."""
    if isinstance(t, str):
        t = DynkinType.parse(t)
    C = t.cartan_rows()
    n = t.rank
    lengths = t.simple_length_sq()
    # Gram on simple roots: G[i][j] = C[i][j] * len_j^2 / 2
    G_simple = [[Fraction(C[i][j]) * lengths[j] / 2 for j in range(n)] for i in range(n)]
    Cm = RatMatrix.from_rows(C)
    Ci = Cm.inverse()
    # weight coords w = C^T m  =>  gram_w = C^{-1} G C^{-T}
    gram_w = Ci * RatMatrix.from_rows(G_simple) * Ci.transpose()
    simple = [tuple(Fraction(x) for x in C[i]) for i in range(n)]

    # closure under simple reflections: s_j(w) = w - w[j] * simple[j]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for w in frontier:
            for j in range(n):
                if w[j] == 0:
                    continue
                img = tuple(x - w[j] * simple[j][k] for k, x in enumerate(w))
                if img not in roots:
                    roots.add(img)
                    nxt.append(img)
        frontier = nxt
    all_roots = sorted(roots)
    return RootSystem(n, gram_w, simple, all_roots, dtype=t)


def standard_automorphism(t: DynkinType | str, order: int) -> GraphAut:
    """The standard Dynkin graph automorphism of the given order (trivial,
    the A/D/E6 flip, or D4 triality)."""
    if isinstance(t, str):
        t = DynkinType.parse(t)
    n = t.rank
    if order == 1:
        return GraphAut(tuple(range(n)), 1)
    if t.series == "A" and order == 2:
        return GraphAut(tuple(n - 1 - i for i in range(n)), 2)
    if t.series == "D" and order == 2:
        p = list(range(n))
        p[n - 2], p[n - 1] = p[n - 1], p[n - 2]
        return GraphAut(tuple(p), 2)
    if t.series == "D" and t.rank == 4 and order == 3:
        # rotate the three outer nodes 1 -> 3 -> 4 -> 1 (Bourbaki labels)
        return GraphAut((2, 1, 3, 0), 3)
    if t.series == "E" and t.rank == 6 and order == 2:
        return GraphAut((5, 1, 4, 3, 2, 0), 2)
    raise ValueError(f"no standard order-{order} automorphism of {t}")


def folding_datum(type_text: str, order: int) -> FoldingDatum:
    t = DynkinType.parse(type_text)
    rs = build_root_system(t)
    return FoldingDatum(rs, standard_automorphism(t, order))


# -- the two foldings ---------------------------------------------------------


def _aut_projector_images(fd: FoldingDatum):
    rs, a = fd.homogeneous, fd.aut
    ord_ = a.order

    def project(w):
        acc = list(w)
        img = w
        for _ in range(ord_ - 1):
            img = a.apply_to_weight_coords(img)
            acc = [x + y for x, y in zip(acc, img)]
        return tuple(Fraction(x, ord_) for x in acc)

    def orbit_sum(w):
        # the sum runs over the *distinct* orbit members (no multiplicities)
        orbit = {w}
        img = w
        for _ in range(ord_ - 1):
            img = a.apply_to_weight_coords(img)
            orbit.add(img)
        acc = [Fraction(0)] * len(w)
        for v in orbit:
            acc = [x + y for x, y in zip(acc, v)]
        return tuple(acc)

    return project, orbit_sum


def fold_coinvariants(fd: FoldingDatum) -> RootSystem:
    """Coinvariant folding: R_h/(1-a), realized inside the fixed subspace by
    the orthogonal averaging projection.  Gives the folded type of the
    classical table (A_{2n-1} -> C_n, D_{n+1} -> B_n, D4/3 -> G2, E6 -> F4)."""
    rs = fd.homogeneous
    project, _ = _aut_projector_images(fd)
    images = []
    seen = set()
    for r in rs.all_roots:
        p = project(r)
        if p not in seen:
            seen.add(p)
            images.append(p)
    simple = []
    simple_seen = set()
    for s in rs.simple_roots:
        p = project(s)
        if p not in simple_seen:
            simple_seen.add(p)
            simple.append(p)
    return RootSystem(rs.ambient_dim, rs.gram, simple, images)


def fold_invariants(fd: FoldingDatum) -> RootSystem:
    """Invariant folding: R_h^C = {alpha^O} with alpha^O the orbit sum
    (no multiplicities).  Gives the dual of the coinvariant type."""
    rs = fd.homogeneous
    _, orbit_sum = _aut_projector_images(fd)
    images = []
    seen = set()
    for r in rs.all_roots:
        p = orbit_sum(r)
        if p not in seen:
            seen.add(p)
            images.append(p)
    simple = []
    simple_seen = set()
    for s in rs.simple_roots:
        p = orbit_sum(s)
        if p not in simple_seen:
            simple_seen.add(p)
            simple.append(p)
    return RootSystem(rs.ambient_dim, rs.gram, simple, images)


def dualize_root_system(r: RootSystem) -> RootSystem:
    """Coroot system alpha^vee = 2 alpha/(alpha, alpha) in the same ambient
    space, the inner product identifying V with V*."""
    coroots = [r.coroot(a) for a in r.all_roots]
    simple = [r.coroot(a) for a in r.simple_roots]
    return RootSystem(r.ambient_dim, r.gram, simple, coroots)


@dataclass
class DualityReport:
    passed: bool
    coinvariant_type: str
    invariant_type: str
    details: str = ""


def check_folding_duality(fd: FoldingDatum) -> DualityReport:
    """Verify (R_{h,C})^vee = (R_h^vee)^C elementwise: the dual of each
    projected root equals the orbit sum, and the identification preserves
    Cartan integers."""
    co = fold_coinvariants(fd)
    inv = fold_invariants(fd)
    dual_co = dualize_root_system(co)
    ok = set(dual_co.all_roots) == set(inv.all_roots)
    msg = ""
    if not ok:
        msg = "dualized coinvariant roots differ from orbit sums"
    else:
        # Cartan integers are preserved by the (identity) bijection
        for a in dual_co.simple_roots:
            for b in dual_co.simple_roots:
                if dual_co.cartan_integer(a, b) != inv.cartan_integer(a, b):
                    ok = False
                    msg = "Cartan integers disagree under the duality bijection"
    return DualityReport(ok, str(co.dtype), str(inv.dtype), msg)


def folded_lattices(fd: FoldingDatum) -> tuple[Lattice, Lattice]:
    """Character and cocharacter lattices of the folded adjoint group:
    coinvariants of the root lattice and invariants of the coweight lattice."""
    rs, a = fd.homogeneous, fd.aut
    project, _ = _aut_projector_images(fd)
    orbits = a.orbits(rs.rank)
    char_basis = tuple(project(rs.simple_roots[o[0]]) for o in orbits)

    C = RatMatrix.from_rows(rs.dtype.cartan_rows())
    Ci = C.inverse()
    # fundamental coweight i = column i of C^{-1} in simple-coroot coordinates;
    # the invariant lattice has the orbit sums as a basis.
    cochar_basis = []
    for o in orbits:
        v = [Fraction(0)] * rs.rank
        for i in o:
            for k in range(rs.rank):
                v[k] += Ci.entry(k, i)
        cochar_basis.append(tuple(v))
    return (
        Lattice(len(orbits), char_basis),
        Lattice(len(orbits), tuple(cochar_basis)),
    )


# -- classification ------------------------------------------------------------


def _candidate_types(rank: int) -> list[DynkinType]:
    out = [DynkinType("A", rank)]
    if rank == 2:
        out = [DynkinType("C", 2), DynkinType("B", 2), DynkinType("A", 2), DynkinType("G", 2)]
        return out
    if rank >= 2:
        out += [DynkinType("C", rank), DynkinType("B", rank)]
    if rank >= 4:
        out.append(DynkinType("D", rank))
    if rank == 4:
        out.append(DynkinType("F", 4))
    if rank in (6, 7, 8):
        out.append(DynkinType("E", rank))
    return out


def _match_perm(C, D) -> tuple | None:
    """A permutation p with D[p[i]][p[j]] == C[i][j], or None."""
    n = len(C)

    def row_profile(M, i):
        return tuple(sorted((M[i][j], M[j][i]) for j in range(n) if j != i))

    profC = [row_profile(C, i) for i in range(n)]
    profD = [row_profile(D, i) for i in range(n)]
    for p in permutations(range(n)):
        good = True
        for i in range(n):
            if profC[i] != profD[p[i]]:
                good = False
                break
        if not good:
            continue
        if all(D[p[i]][p[j]] == C[i][j] for i in range(n) for j in range(n)):
            return p
    return None


def classify_with_perm(cartan) -> tuple[DynkinType, tuple]:
    """Identify the Dynkin type of a Cartan matrix by relabeling search.

    An exact (identity-permutation) match wins first, which resolves the
    B2/C2 labeling of rank-2 double-bond systems by the short/long pattern
    of the simple roots as ordered.  Returns the type and the permutation p
    with canonical[p[i]][p[j]] == cartan[i][j].
    """
    C = [[int(x) for x in row] for row in cartan]
    rank = len(C)
    cands = _candidate_types(rank)
    for t in cands:
        if C == t.cartan_rows():
            return t, tuple(range(rank))
    for t in cands:
        p = _match_perm(C, t.cartan_rows())
        if p is not None:
            return t, p
    raise ValueError("Cartan matrix is not of irreducible ABCDEFG type")


def classify(cartan) -> DynkinType:
    return classify_with_perm(cartan)[0]


def isomorphic(rs1: RootSystem, rs2: RootSystem) -> bool:
    """Root-system isomorphism via Cartan-matrix relabeling (B2 and C2 are
    isomorphic, only labeled differently)."""
    if rs1.rank != rs2.rank or len(rs1.all_roots) != len(rs2.all_roots):
        return False
    C1 = [[int(x) for x in row] for row in rs1.cartan_matrix()]
    C2 = [[int(x) for x in row] for row in rs2.cartan_matrix()]
    return _match_perm(C1, C2) is not None
