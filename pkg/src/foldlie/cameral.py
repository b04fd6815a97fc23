"""Combinatorial cameral covers: monodromy representations of punctured
surface groups into Weyl groups, Galois-cover geometry via Riemann-Hurwitz,
induction along the folding embedding W in W_h, and the pushforward-sections
rank checks.

A cover is its monodromy: the fiber is the Weyl group itself, deck
transformations act by left translation and monodromy by right translation,
so the two actions commute.  "Transversal" data has single reflections as
branch images."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .exactalg import RatMatrix, nullspace
from .weyl import CheckReport, FoldedWeylData, WeylGroup


@dataclass
class CoverMonodromy:
    group: WeylGroup
    base_genus: int
    handle_images: list  # 2g element indices: a_1, b_1, ..., a_g, b_g
    branch_images: list  # element indices c_1..c_n

    def __post_init__(self):
        if self.base_genus < 0:
            raise ValueError("base genus must be >= 0")
        if len(self.handle_images) != 2 * self.base_genus:
            raise ValueError("need exactly 2g handle images")

    def all_images(self) -> list:
        return list(self.handle_images) + list(self.branch_images)


def validate_monodromy(cm: CoverMonodromy) -> CoverMonodromy:
    """Check the surface-group relation prod [a_i, b_i] prod c_k = 1 exactly;
    on failure the residual group element is reported.  For transversal
    covers every branch image must be a reflection."""
    g = cm.group
    acc = g.identity_index()
    for i in range(cm.base_genus):
        a = cm.handle_images[2 * i]
        b = cm.handle_images[2 * i + 1]
        acc = g.multiply(acc, a)
        acc = g.multiply(acc, b)
        acc = g.multiply(acc, g.inverse(a))
        acc = g.multiply(acc, g.inverse(b))
    for c in cm.branch_images:
        acc = g.multiply(acc, c)
    if acc != g.identity_index():
        raise ValueError(
            f"surface-group relation violated; residual element index {acc}: "
            f"{g.elements[acc].matrix!r}"
        )
    return cm


def is_transversal(cm: CoverMonodromy) -> bool:
    refl = set(cm.group.reflections())
    return all(c in refl for c in cm.branch_images)


@dataclass
class CoverGeometry:
    component_count: int
    component_genera: list
    total_genus: int | None
    ramification_profile: list  # per branch point: sorted cycle lengths
    euler_characteristic: int


def monodromy_subgroup(cm: CoverMonodromy) -> set:
    """Element indices of the subgroup generated by all monodromy images."""
    g = cm.group
    gens = set(cm.all_images())
    gens |= {g.inverse(x) for x in gens}
    sub = {g.identity_index()}
    frontier = [g.identity_index()]
    while frontier:
        nxt = []
        for x in frontier:
            for h in gens:
                y = g.multiply(x, h)
                if y not in sub:
                    sub.add(y)
                    nxt.append(y)
        frontier = nxt
    return sub


def cover_geometry(cm: CoverMonodromy) -> CoverGeometry:
    """Components (= orbits of the monodromy subgroup on the fiber) and their
    genera by exact Euler-characteristic bookkeeping."""
    validate_monodromy(cm)
    g = cm.group
    n = g.order
    perms = [g.right_multiplication_permutation(c) for c in cm.all_images()]
    # components: orbits under all monodromy permutations
    comp = list(range(n))

    def find(i):
        while comp[i] != i:
            comp[i] = comp[comp[i]]
            i = comp[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            comp[rj] = ri

    for p in perms:
        for i in range(n):
            union(i, p[i])
    roots = sorted({find(i) for i in range(n)})
    comp_of = {r: k for k, r in enumerate(roots)}
    members: list[list] = [[] for _ in roots]
    for i in range(n):
        members[comp_of[find(i)]].append(i)

    branch_perms = [g.right_multiplication_permutation(c) for c in cm.branch_images]
    profile = []
    defects = [0] * len(roots)
    for p in branch_perms:
        cycles = []
        seen = set()
        for i in range(n):
            if i in seen:
                continue
            cyc = [i]
            j = p[i]
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = p[j]
            seen.add(i)
            cycles.append(cyc)
            defects[comp_of[find(i)]] += len(cyc) - 1
        profile.append(sorted(len(c) for c in cycles))

    genera = []
    chi_total = 0
    base_chi = 2 - 2 * cm.base_genus
    for k, mem in enumerate(members):
        chi = len(mem) * base_chi - defects[k]
        if chi % 2:
            raise AssertionError("odd Euler characteristic of a component")
        genera.append(1 - chi // 2)
        chi_total += chi
    return CoverGeometry(
        component_count=len(members),
        component_genera=genera,
        total_genus=genera[0] if len(members) == 1 else None,
        ramification_profile=profile,
        euler_characteristic=chi_total,
    )


# -- induction along the folding embedding ------------------------------------------


def induce_cover(cm: CoverMonodromy, fwd: FoldedWeylData) -> CoverMonodromy:
    """View a W-cover as a W_h-cover via (Sigma~ x W_h)/W: same monodromy
    elements pushed through the folding embedding; the local monodromies
    become the products of commuting reflections over the h-side root
    orbits."""
    if cm.group is not fwd.folded:
        raise ValueError("cover monodromy must live in the folded Weyl group")
    validate_monodromy(cm)
    embed = fwd.embed
    handles = [embed[i] for i in cm.handle_images]
    branches = [embed[i] for i in cm.branch_images]
    for c in cm.branch_images:
        if c in fwd.reflection_products:
            orbit, wh_idx = fwd.reflection_products[c]
            if embed[c] != wh_idx:
                raise AssertionError(
                    "induced local monodromy differs from the orbit reflection product"
                )
    return CoverMonodromy(
        group=fwd.wh,
        base_genus=cm.base_genus,
        handle_images=handles,
        branch_images=branches,
    )


def induced_components_isomorphic(cm: CoverMonodromy, induced: CoverMonodromy,
                                  fwd: FoldedWeylData) -> CheckReport:
    """Each component of the induced cover, via the coset-representative
    inclusions, is isomorphic to the original W-cover: the bijection
    w -> w_j * w intertwines every monodromy permutation exactly."""
    report = CheckReport(check="induced-components", cases_run=0)
    wh, folded = fwd.wh, fwd.folded
    embedded = [fwd.embed[i] for i in range(folded.order)]
    emb_set = set(embedded)
    # coset representatives: one per component of the induced fiber
    reps, seen = [], set()
    for i in range(wh.order):
        if i in seen:
            continue
        coset = {wh.multiply(i, e) for e in embedded}
        seen |= coset
        reps.append(i)
    expected = wh.order // folded.order
    report.cases_run += 1
    if len(reps) != expected:
        report.failures.append(
            {"input": "coset count", "expected": expected, "got": len(reps)}
        )
    images = cm.all_images()
    for wj in reps:
        phi = {w: wh.multiply(wj, fwd.embed[w]) for w in range(folded.order)}
        for c in images:
            report.cases_run += 1
            pf = folded.right_multiplication_permutation(c)
            ph = wh.right_multiplication_permutation(fwd.embed[c])
            ok = all(ph[phi[w]] == phi[pf[w]] for w in range(folded.order))
            if not ok:
                report.failures.append(
                    {"input": f"coset rep {wj}, monodromy {c}",
                     "expected": "intertwined permutations", "got": "mismatch"}
                )
    return report


# -- equivariant sections -----------------------------------------------------------


def _fixed_space_rank(mats: list[RatMatrix]) -> int:
    """Rank of the common fixed space of a list of matrices."""
    if not mats:
        raise ValueError("empty generator list")
    d = mats[0].rows
    if d == 0:
        return 0
    rows = []
    for m in mats:
        delta = m - RatMatrix.identity(d)
        rows.extend(delta.to_rows())
    stacked = RatMatrix.from_rows(rows)
    return len(nullspace(stacked))


def _fixed_space_basis(mats: list[RatMatrix]) -> list[tuple]:
    d = mats[0].rows
    rows = []
    for m in mats:
        delta = m - RatMatrix.identity(d)
        rows.extend(delta.to_rows())
    return [tuple(v.col(0)) for v in nullspace(RatMatrix.from_rows(rows))]


@dataclass
class FiberModel:
    """A finite group set: points are orbits of right multiplication by a
    (possibly trivial) local monodromy element; the group acts by left
    translation."""

    group: WeylGroup
    points: list  # frozensets of element indices
    point_index: dict

    @staticmethod
    def at(group: WeylGroup, local_monodromy: int | None) -> "FiberModel":
        n = group.order
        if local_monodromy is None:
            pts = [frozenset([i]) for i in range(n)]
        else:
            perm = group.right_multiplication_permutation(local_monodromy)
            seen, pts = set(), []
            for i in range(n):
                if i in seen:
                    continue
                cyc = {i}
                j = perm[i]
                while j != i:
                    cyc.add(j)
                    j = perm[j]
                seen |= cyc
                pts.append(frozenset(cyc))
        return FiberModel(group, pts, {p: k for k, p in enumerate(pts)})

    def act(self, g_idx: int, point_idx: int) -> int:
        pt = self.points[point_idx]
        image = frozenset(self.group.multiply(g_idx, w) for w in pt)
        return self.point_index[image]

    def orbits_with_stabilizers(self):
        """(orbit points, stabilizer element indices of the first point)."""
        seen = set()
        out = []
        for k in range(len(self.points)):
            if k in seen:
                continue
            orbit = {k}
            frontier = [k]
            while frontier:
                nxt = []
                for p in frontier:
                    for gi in range(self.group.order):
                        q = self.act(gi, p)
                        if q not in orbit:
                            orbit.add(q)
                            nxt.append(q)
                frontier = nxt
            seen |= orbit
            stab = [gi for gi in range(self.group.order) if self.act(gi, k) == k]
            out.append((sorted(orbit), k, stab))
        return out


def equivariant_section_space(fiber: FiberModel, lattice_action: dict):
    """Basis data of Hom_group(fiber, Lambda): per orbit, a base point and a
    basis of the stabilizer-fixed subspace; the rank is the sum."""
    out = []
    for orbit, base, stab in fiber.orbits_with_stabilizers():
        mats = [lattice_action[g] for g in stab]
        basis = _fixed_space_basis(mats)
        out.append({"orbit": orbit, "base": base, "stabilizer": stab, "basis": basis})
    return out


def section_value_tables(fiber: FiberModel, lattice_action: dict) -> list[dict]:
    """Explicit bases of Hom_group(fiber, Lambda) as full value tables
    point -> lattice vector.  A section supported on one orbit is determined
    by a stabilizer-fixed value v at the base point: f(g . base) = g . v."""
    rank = lattice_action[0].rows if 0 in lattice_action else next(
        iter(lattice_action.values())
    ).rows
    zero = (0,) * rank
    tables = []
    for orbit, base, stab in fiber.orbits_with_stabilizers():
        transversal = {}
        for p in orbit:
            for gi in lattice_action:
                if fiber.act(gi, base) == p:
                    transversal[p] = gi
                    break
        for v in _fixed_space_basis([lattice_action[g] for g in stab]):
            table = {p: zero for p in range(len(fiber.points))}
            for p in orbit:
                table[p] = lattice_action[transversal[p]].apply(v)
            tables.append(table)
    return tables


def own_lattice_action(group: WeylGroup) -> dict:
    return {i: group.elements[i].matrix for i in range(group.order)}


def embedded_lattice_action(fwd: FoldedWeylData) -> dict:
    """The rank-r_h lattice of the homogeneous side, as a module over the
    folded group via the embedding."""
    return {i: fwd.wh.elements[fwd.embed[i]].matrix for i in range(fwd.folded.order)}


def pushforward_sections_check(cm: CoverMonodromy, fwd: FoldedWeylData) -> CheckReport:
    """Prop-level check: over a generic fiber and over every branch-point
    type, the W_h-equivariant sections of the induced fiber with values in
    Lambda_h and the W-equivariant sections of the original fiber with the
    same values have equal rank, and restriction to the distinguished copy
    (f -> f_1) is a bijection."""
    report = CheckReport(check="pushforward-sections", cases_run=0)
    validate_monodromy(cm)
    wh, folded = fwd.wh, fwd.folded
    act_h = {i: wh.elements[i].matrix for i in range(wh.order)}
    act_w = embedded_lattice_action(fwd)

    local_cases = [None] + sorted(set(cm.branch_images))
    for c in local_cases:
        report.cases_run += 1
        ch = None if c is None else fwd.embed[c]
        fib_w = FiberModel.at(folded, c)
        fib_h = FiberModel.at(wh, ch)
        tables_w = section_value_tables(fib_w, act_w)
        tables_h = section_value_tables(fib_h, act_h)
        if len(tables_w) != len(tables_h):
            report.failures.append(
                {"input": f"fiber at local monodromy {c}", "expected": "equal ranks",
                 "got": f"W: {len(tables_w)}, W_h: {len(tables_h)}"}
            )
            continue
        # the embedding of fiber points: W-point of w -> W_h-point of embed(w)
        point_map = {}
        for k, pt in enumerate(fib_w.points):
            target = fwd.embed[next(iter(pt))]
            for hk, hpt in enumerate(fib_h.points):
                if target in hpt:
                    point_map[k] = hk
                    break
        npts = len(fib_w.points)

        def flatten(table):
            out = []
            for p in range(npts):
                out.extend(table[p])
            return out

        restricted = [
            flatten({p: th[point_map[p]] for p in range(npts)}) for th in tables_h
        ]
        w_rows = [flatten(tw) for tw in tables_w]
        rank_w = RatMatrix.from_rows(w_rows).rank() if w_rows else 0
        rank_restr = RatMatrix.from_rows(restricted).rank() if restricted else 0
        rank_union = (
            RatMatrix.from_rows(w_rows + restricted).rank() if w_rows + restricted else 0
        )
        if rank_w != len(tables_w):
            report.failures.append(
                {"input": f"fiber at local monodromy {c}",
                 "expected": "independent W-section basis", "got": f"rank {rank_w}"}
            )
        if not (rank_restr == len(tables_h) == rank_w and rank_union == rank_w):
            report.failures.append(
                {"input": f"fiber at local monodromy {c}",
                 "expected": "f -> f_1 a bijection onto the W-sections",
                 "got": f"restricted rank {rank_restr}, union rank {rank_union}"}
            )
    return report


# -- H^1 rank of the pushed-forward lattice ---------------------------------------------


def hitchin_fiber_rank(cm: CoverMonodromy, lattice_action: dict) -> int:
    """rank H^1(Sigma, (p_* Lambda)^W) by the Euler characteristic of the
    constructible sheaf of equivariant sections: the generic stalk has the
    full lattice rank, the stalk at a branch point is the local-monodromy
    fixed part.  H^0 (global invariants under the full monodromy group) must
    vanish, otherwise the computation needs a correction term and errors
    out."""
    validate_monodromy(cm)
    sub = monodromy_subgroup(cm)
    h0 = _fixed_space_rank([lattice_action[i] for i in sorted(sub)])
    if h0 != 0:
        raise ValueError(
            f"H^0 is nonzero (rank {h0}); the Euler-characteristic formula "
            "does not directly give rank H^1"
        )
    d = lattice_action[cm.group.identity_index()].rows
    rank0 = d
    chi = (2 - 2 * cm.base_genus) * rank0
    for c in cm.branch_images:
        rank_c = _fixed_space_rank([lattice_action[c]])
        chi -= rank0 - rank_c
    return -chi


# -- random transversal data ---------------------------------------------------------


def reflection_length_classes(fwd: FoldedWeylData) -> dict:
    """Folded reflections grouped by the size of the h-side root orbit
    (1 = long folded roots, >1 = short)."""
    out: dict = {}
    for refl_idx, (orbit, _) in fwd.reflection_products.items():
        out.setdefault(len(orbit), []).append(refl_idx)
    return out


def random_transversal_monodromy(fwd: FoldedWeylData, genus: int,
                                 branch_spec, rng: random.Random,
                                 require_full: bool = True) -> CoverMonodromy:
    """Random transversal monodromy data: reflections per the prescribed
    class counts, the last one corrected so the surface-group relation
    holds; resampled until the correction is a reflection of the right class
    and (for covers of connected cameral curves) the images generate the
    whole Weyl group."""
    folded = fwd.folded
    classes = reflection_length_classes(fwd)
    pools = []
    for cls, count in sorted(branch_spec.items()):
        if cls not in classes:
            raise ValueError(f"no reflections with orbit size {cls}")
        pools.extend([cls] * count)
    if not pools:
        raise ValueError("need at least one branch point to correct the relation")
    for _ in range(10_000):
        handles = [rng.randrange(folded.order) for _ in range(2 * genus)]
        branches = [rng.choice(classes[cls]) for cls in pools[:-1]]
        acc = folded.identity_index()
        for i in range(genus):
            a, b = handles[2 * i], handles[2 * i + 1]
            acc = folded.multiply(acc, a)
            acc = folded.multiply(acc, b)
            acc = folded.multiply(acc, folded.inverse(a))
            acc = folded.multiply(acc, folded.inverse(b))
        for c in branches:
            acc = folded.multiply(acc, c)
        last = folded.inverse(acc)
        if last not in classes[pools[-1]]:
            continue
        cm = CoverMonodromy(folded, genus, handles, branches + [last])
        if require_full and len(monodromy_subgroup(cm)) != folded.order:
            continue
        return cm
    raise RuntimeError("failed to sample transversal monodromy data")
