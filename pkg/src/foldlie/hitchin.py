"""Dimension and rank bookkeeping for Hitchin bases, fibers, and the
intermediate-Jacobian isogeny decomposition of the crepant resolution."""

from __future__ import annotations

from dataclasses import dataclass

from .rootsys import DynkinType, FoldingDatum, fold_coinvariants
from .weyl import CheckReport


def invariant_degrees(t: DynkinType | str) -> list[int]:
    """Degrees of the fundamental Weyl invariants (exponents + 1)."""
    if isinstance(t, str):
        t = DynkinType.parse(t)
    n = t.rank
    if t.series == "A":
        return list(range(2, n + 2))
    if t.series in ("B", "C"):
        return [2 * k for k in range(1, n + 1)]
    if t.series == "D":
        return sorted([2 * k for k in range(1, n)] + [n])
    if t.series == "G":
        return [2, 6]
    if t.series == "F":
        return [2, 6, 8, 12]
    return {
        6: [2, 5, 6, 8, 9, 12],
        7: [2, 6, 8, 10, 12, 14, 18],
        8: [2, 8, 12, 14, 18, 20, 24, 30],
    }[n]


def h0_canonical_power(g: int, d: int) -> int:
    """h^0(Sigma, K^d) = (2d - 1)(g - 1) for d >= 2 on a genus-g curve,
    g >= 2 (Riemann-Roch, the twist being of degree > 2g - 2)."""
    if g < 2:
        raise ValueError("genus must be >= 2")
    if d < 2:
        raise ValueError("degree must be >= 2")
    return (2 * d - 1) * (g - 1)


@dataclass
class HitchinBase:
    group_type: DynkinType
    genus: int
    degrees: list
    summand_dims: list

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError("genus must be >= 2")
        expected = invariant_degrees(self.group_type)
        if sorted(self.degrees) != sorted(expected):
            raise AssertionError("degrees do not match the exponent table")
        for d, s in zip(self.degrees, self.summand_dims):
            if s != h0_canonical_power(self.genus, d):
                raise AssertionError("summand dimension violates Riemann-Roch")

    @property
    def total(self) -> int:
        return sum(self.summand_dims)


def dim_base(t: DynkinType | str, g: int) -> HitchinBase:
    """B = sum_j H^0(Sigma, K^{d_j}) with the d_j from the exponent table."""
    if isinstance(t, str):
        t = DynkinType.parse(t)
    degrees = invariant_degrees(t)
    dims = [h0_canonical_power(g, d) for d in degrees]
    return HitchinBase(t, g, degrees, dims)


def fiber_dim(t: DynkinType | str, g: int) -> int:
    """Fibers of an algebraic integrable system have the base dimension."""
    return dim_base(t, g).total


def folded_base_match(fd: FoldingDatum, g: int) -> CheckReport:
    """dim B(folded) equals the C-invariant part of dim B_h, with the
    surviving degrees computed symbolically (not looked up) from the action
    on the invariant generators."""
    from .invariants import surviving_invariant_degrees

    report = CheckReport(check="folded-base-match", cases_run=0)
    folded_type = fold_coinvariants(fd).dtype
    sd = surviving_invariant_degrees(fd)
    base_h = dim_base(fd.homogeneous.dtype, g)
    report.cases_run += 1
    if sorted(sd.degrees_h) != sorted(base_h.degrees):
        report.failures.append(
            {"input": f"{fd.homogeneous.dtype} degrees", "expected": base_h.degrees,
             "got": sd.degrees_h}
        )
    invariant_part = sum(
        mult * h0_canonical_power(g, d) for d, mult in sd.survivors.items()
    )
    folded_total = dim_base(folded_type, g).total
    report.cases_run += 1
    if invariant_part != folded_total:
        report.failures.append(
            {"input": f"{fd.homogeneous.dtype} -> {folded_type}, g={g} ({sd.method})",
             "expected": folded_total, "got": invariant_part}
        )
    return report


@dataclass
class IsogenyDims:
    dim_B: int
    genus_fixed_locus: int
    aut_order: int
    dim_J2Z: int
    h3_Z: int

    def __post_init__(self):
        if self.dim_J2Z != self.dim_B + (self.aut_order - 1) * self.genus_fixed_locus:
            raise AssertionError("isogeny dimension identity violated")


def isogeny_dimensions(fd: FoldingDatum, g: int) -> IsogenyDims:
    """dim J^2(Z) = dim B(folded) + (|a| - 1) * genus(X^C), plus the
    third-Betti-number bookkeeping h^3(Z) = 2 dim B + 2(|a| - 1) g(X^C).
    Implemented for the families with a worked fixed locus: (A3, Z/2) and
    (D4, Z/3)."""
    from .unfolding import fixed_locus_genus, threefold_family

    t = fd.homogeneous.dtype
    order = fd.aut.order
    if order == 1:
        base = dim_base(t, g).total
        return IsogenyDims(base, 0, 1, base, 2 * base)
    if (t.series, t.rank, order) == ("A", 3, 2):
        folded = "C2"
    elif (t.series, t.rank, order) == ("D", 4, 3):
        folded = "G2"
    else:
        raise ValueError(
            "fixed-locus genus is only worked out for the A3/Z2 and D4/Z3 families"
        )
    tf = threefold_family(folded)
    gx = fixed_locus_genus(tf, g)
    base = dim_base(folded, g).total
    return IsogenyDims(
        dim_B=base,
        genus_fixed_locus=gx,
        aut_order=order,
        dim_J2Z=base + (order - 1) * gx,
        h3_Z=2 * base + 2 * (order - 1) * gx,
    )


# -- branch-count bookkeeping for transversal cameral covers ----------------------------


def transversal_branch_counts(t: DynkinType | str, g: int) -> dict:
    """Wall-crossing counts of a transversal Hitchin section, per root-length
    class: each class contributes |class| * (2g - 2) branch points (the class
    discriminant is a W-invariant of degree |class|).  The total |R|(2g-2)
    is exactly the count that makes rank H^1((p_* Lambda)^W) = 2 dim B."""
    from .rootsys import build_root_system

    if isinstance(t, str):
        t = DynkinType.parse(t)
    rs = build_root_system(t)
    by_length: dict = {}
    for r in rs.all_roots:
        key = rs.inner(r, r)
        by_length[key] = by_length.get(key, 0) + 1
    lengths = sorted(by_length)
    out = {}
    for i, key in enumerate(lengths):
        out[i + 1 if len(lengths) > 1 else 1] = by_length[key] * (2 * g - 2)
    return {"total": (2 * g - 2) * len(rs.all_roots), "by_class": out}


def folded_branch_spec(g: int) -> dict:
    """Branch counts for the folded C2 cover keyed by h-side orbit size:
    short folded roots (orbit size 2) and long ones (orbit size 1) each form
    a class of 4 roots, so each class meets the section 4(2g-2) times."""
    return {1: 4 * (2 * g - 2), 2: 4 * (2 * g - 2)}
