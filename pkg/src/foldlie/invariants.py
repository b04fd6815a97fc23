"""Symbolic Weyl-invariant machinery on Cartan coordinates.

Three consumers:

* the invariant-ring identities of the Lie-algebra folding checks
  (sigma_odd vanishing on the fixed Cartan, restricted generators matching
  folded generators),
* the surviving-degree computation behind the Hitchin-base dimension match
  (which fundamental invariants restrict to zero / fail to be C-invariant),
* the Molien-series cross-check of the stored exponent tables.

The A- and D-series cases run on closed-form generator sets (elementary
symmetric polynomials, their squares, and the Pfaffian); the D4 triality
case runs an honest Reynolds-operator computation over the 192-element
signed-permutation group, with decomposables quotiented out exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product

from .exactalg import MultiPoly, RatMatrix
from .rootsys import FoldingDatum


def var_names(prefix: str, n: int) -> tuple:
    return tuple(f"{prefix}{i + 1}" for i in range(n))


def esym(names, k: int) -> MultiPoly:
    """Elementary symmetric polynomial e_k."""
    names = tuple(names)
    n = len(names)
    terms = {}
    for subset in combinations(range(n), k):
        e = [0] * n
        for i in subset:
            e[i] = 1
        terms[tuple(e)] = Fraction(1)
    return MultiPoly(names, terms)


def esym_squares(names, k: int) -> MultiPoly:
    """e_k of the squared variables."""
    names = tuple(names)
    n = len(names)
    terms = {}
    for subset in combinations(range(n), k):
        e = [0] * n
        for i in subset:
            e[i] = 2
        terms[tuple(e)] = Fraction(1)
    return MultiPoly(names, terms)


def product_of_vars(names) -> MultiPoly:
    names = tuple(names)
    return MultiPoly(names, {(1,) * len(names): Fraction(1)})


def signed_perm_apply(poly: MultiPoly, perm, signs) -> MultiPoly:
    """Substitute t_i -> signs[i] * t_{perm[i]} (a monomial-to-monomial map)."""
    terms = {}
    for e, c in poly.terms.items():
        out = [0] * len(e)
        sgn = 1
        for i, k in enumerate(e):
            if k:
                out[perm[i]] += k
                if signs[i] < 0 and k % 2 == 1:
                    sgn = -sgn
        key = tuple(out)
        terms[key] = terms.get(key, Fraction(0)) + sgn * c
    return MultiPoly(poly.variables, terms)


def compose_linear(poly: MultiPoly, matrix: RatMatrix, new_names) -> MultiPoly:
    """Substitute variable i by the linear form sum_j matrix[i][j] * s_j."""
    new_names = tuple(new_names)
    images = []
    for i in range(len(poly.variables)):
        terms = {}
        for j in range(len(new_names)):
            coeff = matrix.entry(i, j)
            if coeff != 0:
                e = [0] * len(new_names)
                e[j] = 1
                terms[tuple(e)] = coeff
        images.append(MultiPoly(new_names, terms))
    return poly.substitute(dict(zip(poly.variables, images)), target_variables=new_names)


# -- A and D series closed forms --------------------------------------------------


def a_flip_action_signs(n_vars: int) -> dict:
    """Action of the A-series flip (t_i -> -t_{N+1-i}) on e_k, verified
    symbolically: returns {k: sign} with e_k o a = sign * e_k."""
    names = var_names("t", n_vars)
    perm = tuple(n_vars - 1 - i for i in range(n_vars))
    signs = (-1,) * n_vars
    out = {}
    for k in range(1, n_vars + 1):
        ek = esym(names, k)
        image = signed_perm_apply(ek, perm, signs)
        if image == ek:
            out[k] = 1
        elif image == -ek:
            out[k] = -1
        else:
            raise AssertionError(f"e_{k} is not a flip eigenvector")
    return out


def a_restriction_to_fixed_cartan(n_vars: int, k: int) -> MultiPoly:
    """e_k restricted to the fixed Cartan diag(u_1..u_n, -u_n..-u_1)."""
    assert n_vars % 2 == 0
    half = n_vars // 2
    names = var_names("t", n_vars)
    unames = var_names("u", half)
    mapping = {}
    for i in range(half):
        mapping[names[i]] = MultiPoly.var(unames, unames[i])
        mapping[names[n_vars - 1 - i]] = -MultiPoly.var(unames, unames[i])
    return esym(names, k).substitute(mapping, target_variables=unames)


def d_flip_action_signs(n_vars: int) -> dict:
    """Action of t_n -> -t_n on the D_n generators: e_k(t^2) for k < n are
    invariant, the Pfaffian t_1...t_n is anti-invariant.  Returns
    {degree description: sign} keyed by ('e2k', k) and ('pf',)."""
    names = var_names("t", n_vars)
    perm = tuple(range(n_vars))
    signs = tuple(1 if i < n_vars - 1 else -1 for i in range(n_vars))
    out = {}
    for k in range(1, n_vars):
        g = esym_squares(names, k)
        img = signed_perm_apply(g, perm, signs)
        if img != g:
            raise AssertionError("e_k(t^2) must be invariant under the D-flip")
        out[("e2k", k)] = 1
    pf = product_of_vars(names)
    img = signed_perm_apply(pf, perm, signs)
    if img != -pf:
        raise AssertionError("Pfaffian must be anti-invariant under the D-flip")
    out[("pf",)] = -1
    return out


# -- generic Reynolds machinery -----------------------------------------------------


def signed_permutation_group_d(n: int) -> list:
    """W(D_n) as signed permutations with an even number of sign flips."""
    out = []
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            if signs.count(-1) % 2 == 0:
                out.append((perm, signs))
    return out


def monomials_of_degree(nvars: int, degree: int) -> list:
    out = []

    def rec(pos, remaining, cur):
        if pos == nvars - 1:
            out.append(tuple(cur + [remaining]))
            return
        for k in range(remaining + 1):
            rec(pos + 1, remaining - k, cur + [k])

    rec(0, degree, [])
    return out


def _vector_of(poly: MultiPoly, monos_index) -> list:
    v = [Fraction(0)] * len(monos_index)
    for e, c in poly.terms.items():
        v[monos_index[e]] = c
    return v


def _independent_subset(vectors, polys):
    """Greedy row-reduction keeping an independent subset of vectors."""
    basis_rows = []
    kept = []
    for vec, poly in zip(vectors, polys):
        row = list(vec)
        for prow in basis_rows:
            lead = next(i for i, x in enumerate(prow) if x != 0)
            if row[lead] != 0:
                f = row[lead] / prow[lead]
                row = [a - f * b for a, b in zip(row, prow)]
        if any(x != 0 for x in row):
            basis_rows.append(row)
            kept.append(poly)
    return kept, basis_rows


def reynolds_invariant_basis(group, names, degree: int) -> list:
    """Basis of the degree-d invariants of a signed-permutation group."""
    names = tuple(names)
    n = len(names)
    monos = monomials_of_degree(n, degree)
    monos_index = {m: i for i, m in enumerate(monos)}
    order = len(group)
    seen_exps = set()
    vectors, polys = [], []
    for mono in monos:
        if mono in seen_exps:
            continue
        acc = MultiPoly.zero(names)
        base = MultiPoly(names, {mono: Fraction(1)})
        for perm, signs in group:
            acc = acc + signed_perm_apply(base, perm, signs)
        seen_exps.update(acc.terms.keys())
        avg = acc / order
        if avg.is_zero():
            continue
        vectors.append(_vector_of(avg, monos_index))
        polys.append(avg)
    kept, _ = _independent_subset(vectors, polys)
    return kept


def span_rank(polys, names, degree) -> int:
    monos = monomials_of_degree(len(names), degree)
    idx = {m: i for i, m in enumerate(monos)}
    kept, _ = _independent_subset([_vector_of(p, idx) for p in polys], polys)
    return len(kept)


@dataclass
class QuotientActionReport:
    degree: int
    invariant_dim: int
    decomposable_dim: int
    generator_multiplicity: int
    surviving_multiplicity: int


def invariant_generator_action(group, a_map, names, degrees) -> list[QuotientActionReport]:
    """For each degree: invariants modulo decomposables carry an action of
    the folding automorphism; the surviving multiplicity is the dimension of
    its eigenvalue-1 subspace.  ``a_map`` sends a polynomial to its pullback
    under the automorphism."""
    names = tuple(names)
    inv_bases = {}
    needed = sorted(set(degrees))
    for d in range(2, max(needed) + 1):
        inv_bases[d] = reynolds_invariant_basis(group, names, d)
    reports = []
    for d in needed:
        basis = inv_bases[d]
        monos = monomials_of_degree(len(names), d)
        idx = {m: i for i, m in enumerate(monos)}
        # decomposables: products of lower-degree invariants
        dec_polys = []
        for d1 in range(2, d // 2 + 1):
            d2 = d - d1
            for p in inv_bases.get(d1, []):
                for q in inv_bases.get(d2, []):
                    dec_polys.append(p * q)
        dec_vectors = [_vector_of(p, idx) for p in dec_polys]
        dec_kept, dec_rows = _independent_subset(dec_vectors, dec_polys)

        def reduce_mod(vec, rows):
            row = list(vec)
            for prow in rows:
                lead = next(i for i, x in enumerate(prow) if x != 0)
                if row[lead] != 0:
                    f = row[lead] / prow[lead]
                    row = [a - f * b for a, b in zip(row, prow)]
            return row

        # quotient basis from the invariant basis
        q_polys, q_rows = [], list(dec_rows)
        for p in basis:
            res = reduce_mod(_vector_of(p, idx), q_rows)
            if any(x != 0 for x in res):
                q_rows.append(res)
                q_polys.append(p)
        gen_mult = len(q_polys)

        # matrix of the a-action on the quotient
        if gen_mult == 0:
            reports.append(QuotientActionReport(d, len(basis), len(dec_kept), 0, 0))
            continue
        # solve coordinates of a*p in (decomposables + quotient basis)
        from .exactalg import SpanSolver

        col_polys = dec_kept + q_polys
        cols = [_vector_of(p, idx) for p in col_polys]
        solver = SpanSolver(cols) if cols else None
        act = []
        for p in q_polys:
            image = a_map(p)
            coords = solver.coordinates(_vector_of(image, idx))
            if coords is None:
                raise AssertionError("automorphism does not preserve the invariant ring")
            act.append(coords[len(dec_kept):])
        # act[i][j]: coefficient of q_polys[j] in image of q_polys[i] -> transpose
        m = RatMatrix(gen_mult, gen_mult,
                      [act[j][i] for i in range(gen_mult) for j in range(gen_mult)])
        eye = RatMatrix.identity(gen_mult)
        surviving = gen_mult - (m - eye).rank()
        reports.append(QuotientActionReport(d, len(basis), len(dec_kept), gen_mult, surviving))
    return reports


# -- surviving degrees per folding family ----------------------------------------------


@dataclass
class SurvivingDegrees:
    degrees_h: list
    survivors: dict
    method: str


def surviving_invariant_degrees(fd: FoldingDatum) -> SurvivingDegrees:
    """Which fundamental-invariant degrees of the homogeneous type survive
    folding, derived symbolically (A/D series and D4 triality) or from the
    stored table (E6, flagged)."""
    t = fd.homogeneous.dtype
    order = fd.aut.order
    if order == 1:
        from .hitchin import invariant_degrees

        ds = invariant_degrees(t)
        return SurvivingDegrees(ds, _count(ds), "trivial")
    if t.series == "A":
        n_vars = t.rank + 1
        signs = a_flip_action_signs(n_vars)
        degrees = list(range(2, n_vars + 1))
        survivors = {}
        for k in degrees:
            if signs[k] == 1:
                survivors[k] = survivors.get(k, 0) + 1
        return SurvivingDegrees(degrees, survivors, "symbolic-sigma-action")
    if t.series == "D" and order == 2:
        n = t.rank
        d_flip_action_signs(n)  # raises if the symbolic facts fail
        degrees = [2 * k for k in range(1, n)] + [n]
        survivors = _count([2 * k for k in range(1, n)])
        return SurvivingDegrees(sorted(degrees), survivors, "symbolic-pfaffian-action")
    if t.series == "D" and t.rank == 4 and order == 3:
        reports = d4_triality_reports()
        degrees = [2, 4, 4, 6]
        survivors = {r.degree: r.surviving_multiplicity for r in reports}
        return SurvivingDegrees(degrees, survivors, "reynolds-quotient-action")
    if t.series == "E" and t.rank == 6:
        return SurvivingDegrees(
            [2, 5, 6, 8, 9, 12], {2: 1, 6: 1, 8: 1, 12: 1}, "table-derived"
        )
    raise ValueError(f"no folding family for {t} with order {order}")


def _count(xs) -> dict:
    out: dict = {}
    for x in xs:
        out[x] = out.get(x, 0) + 1
    return out


def triality_matrix_eps() -> RatMatrix:
    """The triality action on the D4 Cartan in epsilon-coordinates, solved
    from its permutation of the simple coroots e1-e2 -> e3-e4 -> e3+e4 -> e1-e2
    (center coroot e2-e3 fixed)."""
    cor = [
        (1, -1, 0, 0),
        (0, 1, -1, 0),
        (0, 0, 1, -1),
        (0, 0, 1, 1),
    ]
    images = [cor[2], cor[1], cor[3], cor[0]]
    B = RatMatrix.from_rows([list(c) for c in cor]).transpose()
    M = RatMatrix.from_rows([list(c) for c in images]).transpose()
    return M * B.inverse()


_D4_REPORT_CACHE: list | None = None


def d4_triality_reports() -> list[QuotientActionReport]:
    global _D4_REPORT_CACHE
    if _D4_REPORT_CACHE is None:
        group = signed_permutation_group_d(4)
        names = var_names("t", 4)
        Ai = triality_matrix_eps().inverse()

        def a_map(p):
            return compose_linear(p, Ai, names)

        _D4_REPORT_CACHE = invariant_generator_action(group, a_map, names, [2, 4, 6])
    return _D4_REPORT_CACHE


def d4_fixed_cartan_basis() -> list[tuple]:
    """Basis of the triality-fixed plane in epsilon-coordinates."""
    from .exactalg import nullspace

    A = triality_matrix_eps()
    eye = RatMatrix.identity(4)
    return [tuple(v.col(0)) for v in nullspace(A - eye)]


# -- Molien series ---------------------------------------------------------------------


def molien_dimensions(matrices, kmax: int) -> list[Fraction]:
    """dim of the degree-k invariants, k = 0..kmax, via
    (1/|G|) sum_w tr Sym^k(w), with tr Sym^k computed from power traces by
    the Newton-style recursion k h_k = sum_j p_j h_{k-j}. Exact."""
    order = len(matrices)
    total = [Fraction(0)] * (kmax + 1)
    for m in matrices:
        powers = [RatMatrix.identity(m.rows)]
        for _ in range(kmax):
            powers.append(powers[-1] * m)
        p = [powers[j].trace() for j in range(kmax + 1)]
        h = [Fraction(1)] + [Fraction(0)] * kmax
        for k in range(1, kmax + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                acc += p[j] * h[k - j]
            h[k] = acc / k
        for k in range(kmax + 1):
            total[k] += h[k]
    return [x / order for x in total]


def hilbert_series_coefficients(degrees, kmax: int) -> list[int]:
    """Coefficients of prod 1/(1 - q^d) up to q^kmax."""
    coeffs = [0] * (kmax + 1)
    coeffs[0] = 1
    for d in degrees:
        for k in range(d, kmax + 1):
            coeffs[k] += coeffs[k - d]
    return coeffs


def verify_degrees_by_molien(weyl_group, degrees, kmax: int | None = None) -> bool:
    """Cross-check stored fundamental degrees against the Molien series of an
    enumerated Weyl group (desk scale, rank <= 3)."""
    if kmax is None:
        kmax = max(degrees)
    mats = [el.matrix for el in weyl_group.elements]
    molien = molien_dimensions(mats, kmax)
    hilbert = hilbert_series_coefficients(degrees, kmax)
    return all(molien[k] == hilbert[k] for k in range(kmax + 1))
