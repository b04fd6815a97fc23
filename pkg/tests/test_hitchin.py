import pytest

from foldlie.hitchin import (
    dim_base,
    fiber_dim,
    folded_base_match,
    h0_canonical_power,
    invariant_degrees,
    isogeny_dimensions,
    transversal_branch_counts,
)
from foldlie.rootsys import folding_datum


class TestDegreesTable:
    def test_values(self):
        assert invariant_degrees("A3") == [2, 3, 4]
        assert invariant_degrees("C2") == [2, 4]
        assert invariant_degrees("D4") == [2, 4, 4, 6]
        assert invariant_degrees("G2") == [2, 6]
        assert invariant_degrees("F4") == [2, 6, 8, 12]
        assert invariant_degrees("E6") == [2, 5, 6, 8, 9, 12]

    def test_product_is_weyl_order(self):
        import math

        from foldlie.rootsys import DynkinType

        for name in ("A3", "C2", "C4", "D5", "G2", "F4", "E6", "E7", "E8", "B4"):
            t = DynkinType.parse(name)
            assert math.prod(invariant_degrees(t)) == t.weyl_order()

    def test_sum_rule(self):
        # sum (2 d_j - 1) = dim g = |R| + rank
        from foldlie.rootsys import DynkinType

        for name in ("A3", "C3", "D4", "G2", "F4"):
            t = DynkinType.parse(name)
            assert sum(2 * d - 1 for d in invariant_degrees(t)) == \
                t.root_count() + t.rank


class TestDimBase:
    def test_worked_examples(self):
        hb = dim_base("C2", 2)
        assert hb.degrees == [2, 4] and hb.summand_dims == [3, 7] and hb.total == 10
        assert dim_base("A3", 2).total == 15
        assert dim_base("G2", 2).total == 14

    def test_formulas_in_genus(self):
        for g in (2, 3, 4):
            assert dim_base("C2", g).total == 10 * (g - 1)
            assert dim_base("A3", g).total == 15 * (g - 1)

    def test_genus_bound(self):
        with pytest.raises(ValueError):
            dim_base("C2", 1)

    def test_riemann_roch_monotone(self):
        for g in (2, 3, 5):
            dims = [h0_canonical_power(g, d) for d in range(2, 13)]
            assert all(x > 0 for x in dims)
            assert all(b > a for a, b in zip(dims, dims[1:]))

    def test_fiber_dim_equals_base(self):
        assert fiber_dim("C2", 2) == 10
        assert fiber_dim("A3", 2) == 15


class TestFoldedMatch:
    @pytest.mark.parametrize("th,order", [("A3", 2), ("A5", 2), ("A7", 2),
                                          ("D4", 2), ("D5", 2), ("D4", 3), ("E6", 2)])
    @pytest.mark.parametrize("g", [2, 3, 4])
    def test_families(self, th, order, g):
        assert folded_base_match(folding_datum(th, order), g).passed

    def test_trivial(self):
        assert folded_base_match(folding_datum("A3", 1), 2).passed

    def test_a3_numerical_content(self):
        # 15(g-1) minus the degree-3 summand 5(g-1) = 10(g-1)
        g = 3
        total_h = dim_base("A3", g).total
        missing = h0_canonical_power(g, 3)
        assert total_h - missing == dim_base("C2", g).total

    def test_d4_numerical_content(self):
        g = 2
        total_h = dim_base("D4", g).total
        missing = 2 * h0_canonical_power(g, 4)
        assert total_h - missing == dim_base("G2", g).total


class TestIsogeny:
    def test_a3_family(self):
        iso = isogeny_dimensions(folding_datum("A3", 2), 2)
        assert (iso.dim_B, iso.genus_fixed_locus, iso.dim_J2Z) == (10, 7, 17)
        assert iso.h3_Z == 34

    def test_d4_family(self):
        iso = isogeny_dimensions(folding_datum("D4", 3), 2)
        assert (iso.dim_B, iso.genus_fixed_locus, iso.dim_J2Z) == (14, 9, 32)

    def test_degenerate_trivial_group(self):
        iso = isogeny_dimensions(folding_datum("A3", 1), 2)
        assert iso.dim_J2Z == iso.dim_B == 15

    def test_strictly_exceeds_fiber_dim(self):
        for th, order in (("A3", 2), ("D4", 3)):
            for g in (2, 3):
                iso = isogeny_dimensions(folding_datum(th, order), g)
                assert iso.dim_J2Z > fiber_dim_from(iso)

    def test_unsupported_family(self):
        with pytest.raises(ValueError):
            isogeny_dimensions(folding_datum("A5", 2), 2)


def fiber_dim_from(iso):
    return iso.dim_B


class TestBranchCounts:
    def test_c2(self):
        out = transversal_branch_counts("C2", 2)
        assert out["total"] == 16
        assert sorted(out["by_class"].values()) == [8, 8]

    def test_total_matches_rank_identity(self):
        # (2g-2) rank + total = 2 dim B
        for name, rank in (("C2", 2), ("A3", 3), ("G2", 2)):
            for g in (2, 3):
                total = transversal_branch_counts(name, g)["total"]
                assert (2 * g - 2) * rank + total == 2 * dim_base(name, g).total
