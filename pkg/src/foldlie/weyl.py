"""Finite Weyl groups as exact integer matrix groups on the coroot space,
the folding isomorphism W_h^C = W via restriction, and orbit computations.

Conventions: V* carries the simple-coroot basis, so the simple reflection
s_i sends alpha_j^vee to alpha_j^vee - C[i][j] alpha_i^vee and is an integer
matrix.  A graph automorphism acts by permuting the coroot basis.  The fixed
subspace V*^C has the orbit sums of coroot basis vectors as its basis, and
invariant vectors have constant coordinates along each orbit, which makes
restriction a cheap coordinate read."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import kernel
from .exactalg import RatMatrix
from .rootsys import (
    DynkinType,
    FoldingDatum,
    GraphAut,
    RootSystem,
    build_root_system,
    classify,
)

ENUMERATION_BUDGET = 60_000


class EnumerationBudgetExceeded(RuntimeError):
    pass


def _flat_identity(n: int) -> tuple:
    return tuple(1 if i == j else 0 for i in range(n) for j in range(n))


@dataclass(frozen=True)
class WeylElement:
    matrix: RatMatrix
    word: tuple

    def verify_word(self, generators) -> bool:
        acc = RatMatrix.identity(self.matrix.rows)
        for g in self.word:
            acc = acc * generators[g]
        return acc == self.matrix


class WeylGroup:
    """A fully enumerated reflection group of exact matrices.

    ``invariant_vectors`` is the coroot set in the acting coordinates; every
    element must permute it (checked by :meth:`verify`).
    """

    def __init__(self, dim, generators, flat_elements, words, dtype=None,
                 root_system=None, invariant_vectors=None):
        self.dim = dim
        self.generators = generators
        self._flat = flat_elements
        self._index = {m: i for i, m in enumerate(flat_elements)}
        self.elements = [
            WeylElement(RatMatrix(dim, dim, m), w) for m, w in zip(flat_elements, words)
        ]
        self.dtype = dtype
        self.root_system = root_system
        self.invariant_vectors = invariant_vectors
        self._mult_cache: dict = {}
        self._inv_cache: dict = {}
        self._rightmul_cache: dict = {}

    # -- construction ---------------------------------------------------------
    @staticmethod
    def generate(rs: RootSystem, force: bool = False) -> "WeylGroup":
        """Enumerate W(R^vee) by breadth-first closure over the simple
        reflections.  Types with more elements than the budget (rank > 6
        territory: A7, E6 and up) are rejected unless forced or enabled via
        FOLDLIE_ENABLE_E6."""
        t = rs.dtype
        expected = t.weyl_order()
        allowed = force or bool(os.environ.get("FOLDLIE_ENABLE_E6"))
        if expected > ENUMERATION_BUDGET and not allowed:
            raise EnumerationBudgetExceeded(
                f"|W({t})| = {expected} exceeds the enumeration budget; "
                "set FOLDLIE_ENABLE_E6=1 or pass force=True"
            )
        n = rs.rank
        C = [[int(x) for x in row] for row in rs.cartan_matrix()]
        gens = []
        for i in range(n):
            m = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
            for j in range(n):
                m[i][j] -= C[i][j]
            gens.append(tuple(x for row in m for x in row))
        flat, words = _bfs_closure(gens, n, expected)
        gen_mats = [RatMatrix(n, n, g) for g in gens]
        inv_vecs = _coroot_vectors(rs)
        return WeylGroup(n, gen_mats, flat, words, dtype=t, root_system=rs,
                         invariant_vectors=inv_vecs)

    @staticmethod
    def from_elements(dim, generators, flat_elements, words, dtype=None,
                      root_system=None, invariant_vectors=None) -> "WeylGroup":
        return WeylGroup(dim, generators, flat_elements, words, dtype=dtype,
                         root_system=root_system, invariant_vectors=invariant_vectors)

    # -- group structure ----------------------------------------------------
    @property
    def order(self) -> int:
        return len(self._flat)

    def index_of(self, matrix) -> int:
        key = matrix.entries if isinstance(matrix, RatMatrix) else tuple(matrix)
        idx = self._index.get(key)
        if idx is None:
            raise KeyError("matrix is not an element of this group")
        return idx

    def contains(self, matrix) -> bool:
        key = matrix.entries if isinstance(matrix, RatMatrix) else tuple(matrix)
        return key in self._index

    def multiply(self, i: int, j: int) -> int:
        key = (i, j)
        out = self._mult_cache.get(key)
        if out is None:
            prod = kernel.mat_mul(
                list(self._flat[i]), list(self._flat[j]), self.dim, self.dim, self.dim
            )
            out = self._index[tuple(prod)]
            self._mult_cache[key] = out
        return out

    def inverse(self, i: int) -> int:
        out = self._inv_cache.get(i)
        if out is None:
            inv = self.elements[i].matrix.inverse()
            out = self.index_of(inv)
            self._inv_cache[i] = out
        return out

    def identity_index(self) -> int:
        return self.index_of(_flat_identity(self.dim))

    def apply(self, i: int, vec) -> tuple:
        return tuple(
            kernel.mat_vec(list(self._flat[i]), list(vec), self.dim, self.dim)
        )

    def right_multiplication_permutation(self, j: int) -> tuple:
        """perm[i] = index of element_i * element_j (the action of monodromy
        on a fiber identified with the group)."""
        out = self._rightmul_cache.get(j)
        if out is None:
            out = tuple(self.multiply(i, j) for i in range(self.order))
            self._rightmul_cache[j] = out
        return out

    def reflections(self) -> list[int]:
        """Indices of elements acting as reflections (order 2, fixed space of
        codimension 1)."""
        out = []
        ident = RatMatrix.identity(self.dim)
        for i, el in enumerate(self.elements):
            m = el.matrix
            if m == ident:
                continue
            if self.multiply(i, i) != self.identity_index():
                continue
            if (m - ident).rank() == 1:
                out.append(i)
        return out

    def verify(self, check_coroots: bool = True):
        if self.dtype is not None and self.order != self.dtype.weyl_order():
            raise AssertionError(
                f"group order {self.order} != classical order {self.dtype.weyl_order()}"
            )
        ident = RatMatrix.identity(self.dim)
        for g in self.generators:
            if g * g != ident:
                raise AssertionError("generator is not an involution")
        if check_coroots and self.invariant_vectors:
            vecs = set(self.invariant_vectors)
            for i in range(self.order):
                for v in self.invariant_vectors:
                    if self.apply(i, v) not in vecs:
                        raise AssertionError("element does not permute the coroot set")


def _bfs_closure(gens, n, expected=None):
    ident = _flat_identity(n)
    flat = [ident]
    words = [()]
    index = {ident: 0}
    frontier = [0]
    while frontier:
        new = []
        for idx in frontier:
            m = list(flat[idx])
            w = words[idx]
            for gi, g in enumerate(gens):
                prod = tuple(kernel.mat_mul(m, list(g), n, n, n))
                if prod not in index:
                    index[prod] = len(flat)
                    flat.append(prod)
                    words.append(w + (gi,))
                    new.append(len(flat) - 1)
                    if expected is None and len(flat) > ENUMERATION_BUDGET:
                        raise EnumerationBudgetExceeded("enumeration budget exceeded")
        frontier = new
    return flat, words


def _coroot_vectors(rs: RootSystem) -> list[tuple]:
    """Coroots of rs in simple-coroot coordinates: for alpha = sum m_i alpha_i,
    alpha^vee = sum m_i (len_i^2/len_alpha^2) alpha_i^vee."""
    coords = rs.simple_coordinates()
    lengths = [rs.inner(s, s) for s in rs.simple_roots]
    out = []
    for r in rs.all_roots:
        m = coords[r]
        L = rs.inner(r, r)
        out.append(tuple(mi * li / L for mi, li in zip(m, lengths)))
    return out


def generate_weyl(r: RootSystem, force: bool = False) -> WeylGroup:
    """Spec operation: complete enumeration of the Weyl group of ``r``."""
    return WeylGroup.generate(r, force=force)


# -- folding -------------------------------------------------------------------


def aut_matrix_on_corootspace(a: GraphAut) -> RatMatrix:
    """The lift of a graph automorphism to V*: permutes the coroot basis."""
    n = len(a.permutation)
    ent = [Fraction(0)] * (n * n)
    for i in range(n):
        ent[a.permutation[i] * n + i] = Fraction(1)
    return RatMatrix(n, n, ent)


@dataclass
class FoldedWeylData:
    """Everything the folding isomorphism W_h^C = W produces.

    ``folded`` acts on the orbit-sum basis of the fixed subspace (V_h^*)^C;
    ``embed``/``restrict`` are inverse index maps between the folded group
    and the commutant subgroup of W_h; ``reflection_products`` maps each
    folded reflection index to (h-side root orbit, index in W_h of the
    product of commuting reflections over the orbit)."""

    fd: FoldingDatum
    wh: WeylGroup
    a_matrix: RatMatrix
    commutant: list[int]
    orbits: list[tuple]
    folded: WeylGroup
    embed: dict
    restrict: dict
    reflection_products: dict

    def simple_folded_reflection(self, orbit_index: int) -> int:
        """Folded-group index of the restricted product over the given
        simple-root orbit."""
        orbit = self.orbits[orbit_index]
        wh_idx = _orbit_product_index(self.wh, list(orbit))
        return self.restrict[wh_idx]


def _orbit_product_index(wh: WeylGroup, gen_indices: list[int]) -> int:
    idx = wh.identity_index()
    for g in gen_indices:
        gi = wh.index_of(wh.generators[g])
        idx = wh.multiply(idx, gi)
    return idx


def _reflection_matrix_from_root(rs: RootSystem, root) -> RatMatrix:
    """s_gamma on V* in coroot coordinates, for a root of the homogeneous
    (ADE) system: s(v) = v - <gamma, v> gamma^vee."""
    coords = rs.simple_coordinates()[root]
    n = rs.rank
    C = rs.cartan_matrix()
    L = rs.inner(root, root)
    lengths = [rs.inner(s, s) for s in rs.simple_roots]
    corv = [coords[i] * lengths[i] / L for i in range(n)]
    pair_row = [sum(coords[i] * C[i][j] for i in range(n)) for j in range(n)]
    ent = []
    for i in range(n):
        for j in range(n):
            ent.append(Fraction(1 if i == j else 0) - corv[i] * pair_row[j])
    return RatMatrix(n, n, ent)


def _commutant_indices(wh: WeylGroup, a_matrix: RatMatrix) -> list[int]:
    """Indices of W_h^C = {w : aw = wa}.  Raises if a does not normalize W_h."""
    for g in wh.generators:
        conj = a_matrix * g * a_matrix.inverse()
        if not wh.contains(conj):
            raise ValueError("automorphism does not normalize the Weyl group")
    out = []
    for i, el in enumerate(wh.elements):
        if el.matrix * a_matrix == a_matrix * el.matrix:
            out.append(i)
    return out


def commutant_fixed_subgroup(wh: WeylGroup, a_matrix: RatMatrix) -> WeylGroup:
    """W_h^C = {w : aw = wa} as a subgroup (still acting on V_h^*), generated
    by the products of commuting reflections over the automorphism's orbits
    of simple roots."""
    indices = _commutant_indices(wh, a_matrix)
    perm = _permutation_of_matrix(a_matrix)
    orbits = _orbits_of_permutation(perm)
    gens = []
    for o in orbits:
        idx = _orbit_product_index(wh, list(o))
        gens.append(wh.elements[idx].matrix)
    flat = [wh._flat[i] for i in indices]
    words = [wh.elements[i].word for i in indices]
    sub = WeylGroup(wh.dim, gens, flat, words, dtype=None,
                    root_system=wh.root_system,
                    invariant_vectors=wh.invariant_vectors)
    return sub


def _permutation_of_matrix(a_matrix: RatMatrix) -> tuple:
    n = a_matrix.rows
    perm = []
    for j in range(n):
        col = [i for i in range(n) if a_matrix.entry(i, j) == 1]
        if len(col) != 1:
            raise ValueError("automorphism matrix is not a basis permutation")
        perm.append(col[0])
    return tuple(perm)


def _orbits_of_permutation(perm) -> list[tuple]:
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        orb, j = [], i
        while j not in seen:
            seen.add(j)
            orb.append(j)
            j = perm[j]
        out.append(tuple(orb))
    return out


def folded_reflection(wh: WeylGroup, orbit) -> WeylElement:
    """s~_beta = product of the (commuting) simple reflections over an
    a-orbit of simple roots; errors if the orbit roots are not pairwise
    orthogonal."""
    rs = wh.root_system
    C = rs.cartan_matrix()
    orbit = list(orbit)
    for i in orbit:
        for j in orbit:
            if i != j and C[i][j] != 0:
                raise ValueError("orbit roots are not pairwise orthogonal")
    idx = _orbit_product_index(wh, orbit)
    return wh.elements[idx]


def _restrict_matrix(flat, dim, orbits) -> tuple | None:
    """Restrict an a-commuting matrix to the orbit-sum basis of the fixed
    subspace; invariant vectors have orbit-constant coordinates."""
    r = len(orbits)
    out = []
    for oi, o in enumerate(orbits):
        img = [0] * dim
        for i in o:
            for k in range(dim):
                img[k] += flat[k * dim + i]
        for o2 in orbits:
            rep = o2[0]
            for i in o2[1:]:
                if img[i] != img[rep]:
                    return None
        out.append([img[o2[0]] for o2 in orbits])
    # out[oi][k]: coordinate k of image of basis vector oi -> column oi
    ent = []
    for k in range(r):
        for oi in range(r):
            ent.append(Fraction(out[oi][k]))
    return tuple(ent)


def folding_weyl_data(fd: FoldingDatum, force: bool = False) -> FoldedWeylData:
    """Build W_h, its commutant W_h^C, and the restriction isomorphism onto
    the folded Weyl group, with the structural claims verified exactly:

    * restriction is injective on W_h^C and multiplicative,
    * the image equals the group generated by the folded simple reflections,
    * every folded reflection is the restriction of a product of commuting
      reflections over an h-side root orbit.
    """
    rs, aut = fd.homogeneous, fd.aut
    wh = WeylGroup.generate(rs, force=force)
    a_matrix = aut_matrix_on_corootspace(aut)
    comm = _commutant_indices(wh, a_matrix)
    orbits = aut.orbits(rs.rank)
    r = len(orbits)

    # restriction of every commutant element
    restricted = {}
    for i in comm:
        rm = _restrict_matrix(wh._flat[i], wh.dim, orbits)
        if rm is None:
            raise AssertionError("commutant element does not preserve the fixed subspace")
        restricted[i] = rm
    if len(set(restricted.values())) != len(comm):
        raise AssertionError("restriction map is not injective on W_h^C")

    # folded group generated by the restricted orbit products
    gen_flats = []
    for o in orbits:
        idx = _orbit_product_index(wh, list(o))
        gen_flats.append(restricted[idx])
    flat, words = _bfs_closure(gen_flats, r)
    folded_type = classify(fd_folded_cartan(fd))
    inv_vecs = _folded_coroot_vectors(fd, orbits)
    folded = WeylGroup(
        r,
        [RatMatrix(r, r, g) for g in gen_flats],
        flat,
        words,
        dtype=folded_type,
        root_system=None,
        invariant_vectors=inv_vecs,
    )

    if set(restricted.values()) != set(folded._flat):
        raise AssertionError(
            "restriction image differs from the generated folded Weyl group"
        )
    restrict = {i: folded.index_of(m) for i, m in restricted.items()}
    embed = {v: k for k, v in restrict.items()}

    # homomorphism spot-check on all generator pairs
    for i in comm[: min(len(comm), 50)]:
        for o in orbits:
            j = _orbit_product_index(wh, list(o))
            if restrict[wh.multiply(i, j)] != folded.multiply(restrict[i], restrict[j]):
                raise AssertionError("restriction is not multiplicative")

    reflection_products = _reflection_orbit_products(fd, wh, orbits, restrict)
    return FoldedWeylData(
        fd=fd,
        wh=wh,
        a_matrix=a_matrix,
        commutant=comm,
        orbits=orbits,
        folded=folded,
        embed=embed,
        restrict=restrict,
        reflection_products=reflection_products,
    )


def fd_folded_cartan(fd: FoldingDatum):
    from .rootsys import fold_coinvariants

    return fold_coinvariants(fd).cartan_matrix()


def _folded_coroot_vectors(fd: FoldingDatum, orbits) -> list[tuple]:
    """Folded coroots (orbit sums of h-coroots) in orbit-basis coordinates."""
    rs = fd.homogeneous
    coords = rs.simple_coordinates()
    seen = set()
    out = []
    for root in rs.all_roots:
        m = list(coords[root])  # ADE: coroot coords = root coords
        orbit = {tuple(m)}
        cur = root
        for _ in range(fd.aut.order - 1):
            cur = fd.aut.apply_to_weight_coords(cur)
            orbit.add(tuple(coords[cur]))
        s = [sum(v[i] for v in orbit) for i in range(rs.rank)]
        key = tuple(s)
        if key in seen:
            continue
        seen.add(key)
        out.append(tuple(Fraction(s[o[0]]) for o in orbits))
    return out


def _reflection_orbit_products(fd, wh, orbits, restrict) -> dict:
    """For every C-orbit of h-roots, the product of the commuting reflections
    over the orbit; keyed by the folded index of its restriction."""
    rs = fd.homogeneous
    out = {}
    seen_orbits = set()
    for root in rs.all_roots:
        orbit = [root]
        cur = root
        for _ in range(fd.aut.order - 1):
            cur = fd.aut.apply_to_weight_coords(cur)
            if cur not in orbit:
                orbit.append(cur)
        key = frozenset(orbit) | frozenset(tuple(-x for x in r) for r in orbit)
        if key in seen_orbits:
            continue
        seen_orbits.add(key)
        prod = RatMatrix.identity(wh.dim)
        for g in orbit:
            prod = prod * _reflection_matrix_from_root(rs, g)
        idx = wh.index_of(prod)
        if idx not in restrict:
            raise AssertionError("orbit reflection product does not commute with a")
        out[restrict[idx]] = (tuple(orbit), idx)
    return out


# -- chambers, regularity, orbits ------------------------------------------------


def root_pairing_rows(rs: RootSystem) -> list[tuple]:
    """<alpha, -> as a row vector on coroot coordinates, per positive root."""
    C = rs.cartan_matrix()
    coords = rs.simple_coordinates()
    rows = []
    for r in rs.positive_roots():
        m = coords[r]
        rows.append(tuple(sum(m[i] * C[i][j] for i in range(rs.rank)) for j in range(rs.rank)))
    return rows


def is_regular(rs: RootSystem, v, pairing_rows=None) -> bool:
    rows = pairing_rows if pairing_rows is not None else root_pairing_rows(rs)
    return all(sum(a * b for a, b in zip(row, v)) != 0 for row in rows)


def is_dominant(rs: RootSystem, v) -> bool:
    """Closure of the fundamental chamber: all simple pairings >= 0."""
    C = rs.cartan_matrix()
    for i in range(rs.rank):
        if sum(C[i][j] * v[j] for j in range(rs.rank)) < 0:
            return False
    return True


def embed_fixed_point(fwd: FoldedWeylData, folded_coords) -> tuple:
    """A point of (V_h^*)^C from its orbit-basis coordinates."""
    v = [Fraction(0)] * fwd.wh.dim
    for c, o in zip(folded_coords, fwd.orbits):
        for i in o:
            v[i] = Fraction(c)
    return tuple(v)


def is_fixed_point(fwd: FoldedWeylData, v) -> bool:
    return fwd.a_matrix.apply(v) == tuple(Fraction(x) for x in v)


@dataclass
class MembershipDecision:
    orbit_equal: bool
    point_is_regular: bool
    w_in_folded_group: bool | None
    restriction: RatMatrix | None


def orbit_regular_membership(fwd: FoldedWeylData, t_point, w: WeylElement) -> MembershipDecision:
    """Check W(w t) = W(t) for t, wt in the fixed Cartan, and certify w in W
    (by exhibiting its restriction) when t is regular."""
    wh = fwd.wh
    t = tuple(Fraction(x) for x in t_point)
    if not is_fixed_point(fwd, t):
        raise ValueError("t is not in the fixed Cartan subalgebra")
    wt = w.matrix.apply(t)
    if not is_fixed_point(fwd, wt):
        raise ValueError("w t is not in the fixed Cartan subalgebra")
    folded_elems = [wh.elements[i].matrix for i in fwd.commutant]
    orbit_t = {m.apply(t) for m in folded_elems}
    orbit_wt = {m.apply(wt) for m in folded_elems}
    equal = orbit_t == orbit_wt
    regular = is_regular(fwd.fd.homogeneous, t)
    w_in = None
    restriction = None
    if regular:
        key = w.matrix.entries
        w_idx = wh._index.get(key)
        w_in = w_idx in fwd.restrict if w_idx is not None else False
        if w_in:
            fidx = fwd.restrict[w_idx]
            restriction = fwd.folded.elements[fidx].matrix
    return MembershipDecision(equal, regular, w_in, restriction)


# -- sampling --------------------------------------------------------------------


def random_rational(rng: random.Random) -> Fraction:
    """Small random rational: numerator in [-9, 9], denominator in [1, 4]."""
    return Fraction(rng.randint(-9, 9), rng.randint(1, 4))


def random_fixed_point(fwd: FoldedWeylData, rng: random.Random,
                       regular: bool | None = None) -> tuple:
    rows = root_pairing_rows(fwd.fd.homogeneous)
    while True:
        v = embed_fixed_point(fwd, [random_rational(rng) for _ in fwd.orbits])
        if regular is None:
            return v
        reg = all(sum(a * b for a, b in zip(row, v)) != 0 for row in rows)
        if reg == regular:
            return v


@dataclass
class CheckReport:
    check: str
    cases_run: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def quotient_invariants_iso_check(fd: FoldingDatum, sample_count: int, seed: int,
                                  fwd: FoldedWeylData | None = None) -> CheckReport:
    """Exact sample-based check of t/W = (t_h/W_h)^C:

    injectivity: for t, t' in the fixed Cartan, t' in W_h(t) iff t' in W(t);
    surjectivity: a point t of t_h has a-class fixed in t_h/W_h (a t in
    W_h(t)) iff some W_h-translate of t lands in the fixed Cartan.
    """
    if fwd is None:
        fwd = folding_weyl_data(fd)
    rng = random.Random(seed)
    wh = fwd.wh
    report = CheckReport(check="quotient-invariants-iso", cases_run=0)
    all_mats = [e.matrix for e in wh.elements]
    folded_mats = [wh.elements[i].matrix for i in fwd.commutant]

    for case in range(sample_count):
        t = random_fixed_point(fwd, rng)
        # (a) W_h-translate of t that happens to lie in the fixed Cartan
        u = rng.randrange(wh.order)
        t2 = all_mats[u].apply(t)
        if is_fixed_point(fwd, t2):
            in_folded_orbit = any(m.apply(t) == t2 for m in folded_mats)
            if not in_folded_orbit:
                report.failures.append(
                    {"input": f"case {case}: t={t}, w_h index {u}",
                     "expected": "t' in W(t)", "got": "t' only in W_h(t)"}
                )
        # (b) independent second point: the two orbit memberships must agree
        t3 = random_fixed_point(fwd, rng)
        in_big = any(m.apply(t) == t3 for m in all_mats)
        in_small = any(m.apply(t) == t3 for m in folded_mats)
        if in_big != in_small:
            report.failures.append(
                {"input": f"case {case}: t={t}, t'={t3}",
                 "expected": "memberships agree", "got": f"W_h: {in_big}, W: {in_small}"}
            )
        # (c) surjectivity: a C-fixed class in t_h/W_h comes from the fixed Cartan
        w = rng.randrange(wh.order)
        th = all_mats[w].apply(t)
        a_th = fwd.a_matrix.apply(th)
        class_fixed = any(m.apply(th) == a_th for m in all_mats)
        translate_hits = any(is_fixed_point(fwd, m.apply(th)) for m in all_mats)
        if not (class_fixed and translate_hits):
            report.failures.append(
                {"input": f"case {case}: t_h={th}",
                 "expected": "C-fixed class with translate in fixed Cartan",
                 "got": f"fixed: {class_fixed}, translate: {translate_hits}"}
            )
        # (d) generic point of t_h: equivalence both ways
        tg = tuple(random_rational(rng) for _ in range(wh.dim))
        a_tg = fwd.a_matrix.apply(tg)
        fixed_class = any(m.apply(tg) == a_tg for m in all_mats)
        hits = any(is_fixed_point(fwd, m.apply(tg)) for m in all_mats)
        if fixed_class != hits:
            report.failures.append(
                {"input": f"case {case}: generic t_h={tg}",
                 "expected": "equivalence", "got": f"fixed class: {fixed_class}, hits: {hits}"}
            )
        report.cases_run += 4
    return report
