from fractions import Fraction as Q

import pytest

from foldlie.rootsys import (
    DynkinType,
    FoldingDatum,
    GraphAut,
    build_root_system,
    check_folding_duality,
    classify,
    dualize_root_system,
    fold_coinvariants,
    fold_invariants,
    folded_lattices,
    folding_datum,
    isomorphic,
    standard_automorphism,
)

FOLD_TABLE = [
    ("A3", 2, "C2", "B2"),
    ("A5", 2, "C3", "B3"),
    ("A7", 2, "C4", "B4"),
    ("D4", 2, "B3", "C3"),
    ("D5", 2, "B4", "C4"),
    ("D4", 3, "G2", "G2"),
    ("E6", 2, "F4", "F4"),
]


class TestDynkinType:
    def test_parse_and_str(self):
        t = DynkinType.parse("A5")
        assert (t.series, t.rank) == ("A", 5) and str(t) == "A5"

    def test_inadmissible(self):
        for bad in ("E5", "G3", "F5", "B1", "X2"):
            with pytest.raises(ValueError):
                DynkinType.parse(bad)

    def test_duals(self):
        assert str(DynkinType.parse("B4").dual()) == "C4"
        assert str(DynkinType.parse("C3").dual()) == "B3"
        assert str(DynkinType.parse("F4").dual()) == "F4"

    def test_counts(self):
        assert DynkinType.parse("A3").root_count() == 12
        assert DynkinType.parse("G2").root_count() == 12
        assert DynkinType.parse("E6").weyl_order() == 51840


class TestBuild:
    def test_a3(self):
        rs = build_root_system("A3")
        assert len(rs.all_roots) == 12 and rs.rank == 3
        lengths = {rs.inner(r, r) for r in rs.all_roots}
        assert lengths == {Q(2)}

    def test_g2_two_lengths(self):
        rs = build_root_system("G2")
        lengths = sorted({rs.inner(r, r) for r in rs.all_roots})
        assert len(lengths) == 2 and lengths[1] / lengths[0] == 3

    def test_a1(self):
        rs = build_root_system("A1")
        assert sorted(rs.all_roots) == [(-2,), (2,)]

    def test_all_types_counts(self):
        for name in ("A7", "B4", "C4", "D5", "E6", "E7", "F4"):
            rs = build_root_system(name)
            assert len(rs.all_roots) == rs.dtype.root_count()


class TestGraphAut:
    def test_a4_flip_is_not_dynkin(self):
        rs = build_root_system("A4")
        flip = GraphAut((3, 2, 1, 0), 2)
        with pytest.raises(ValueError):
            flip.validate_on(rs)
        with pytest.raises(ValueError):
            FoldingDatum(rs, flip)

    def test_wrong_order_declaration(self):
        with pytest.raises(ValueError):
            GraphAut((1, 0), 4)

    def test_cartan_preservation_required(self):
        rs = build_root_system("A3")
        with pytest.raises(ValueError):
            GraphAut((1, 0, 2), 2).validate_on(rs)


class TestFoldingTable:
    @pytest.mark.parametrize("th,order,co_t,inv_t", FOLD_TABLE)
    def test_row(self, th, order, co_t, inv_t):
        fd = folding_datum(th, order)
        co = fold_coinvariants(fd)
        inv = fold_invariants(fd)
        assert str(co.dtype) == co_t
        assert str(inv.dtype) == inv_t
        assert len(co.all_roots) == co.dtype.root_count()
        assert len(inv.all_roots) == inv.dtype.root_count()

    def test_trivial_folding(self):
        fd = folding_datum("A3", 1)
        assert str(fold_coinvariants(fd).dtype) == "A3"
        assert str(fold_invariants(fd).dtype) == "A3"

    def test_invariants_dual_to_coinvariants(self):
        for th, order, _, _ in FOLD_TABLE:
            fd = folding_datum(th, order)
            assert isomorphic(dualize_root_system(fold_coinvariants(fd)),
                              fold_invariants(fd))

    def test_fixed_root_orbit_sum(self):
        fd = folding_datum("A5", 2)
        rs = fd.homogeneous
        mid = rs.simple_roots[2]  # fixed by the flip
        inv = fold_invariants(fd)
        assert mid in inv.all_roots

    def test_d4_triality_square_gives_same_folding(self):
        rs = build_root_system("D4")
        a = standard_automorphism("D4", 3)
        a2 = GraphAut(tuple(a.permutation[i] for i in a.permutation), 3)
        for aut in (a, a2):
            fd = FoldingDatum(rs, aut)
            assert str(fold_coinvariants(fd).dtype) == "G2"
            assert str(fold_invariants(fd).dtype) == "G2"


class TestDuality:
    def test_dualize_classical(self):
        assert str(dualize_root_system(build_root_system("C3")).dtype) == "B3"
        assert str(dualize_root_system(build_root_system("A3")).dtype) == "A3"
        assert str(dualize_root_system(build_root_system("G2")).dtype) == "G2"

    def test_double_dual_identity(self):
        for name in ("C3", "B4", "G2", "A3", "F4"):
            rs = build_root_system(name)
            dd = dualize_root_system(dualize_root_system(rs))
            assert set(dd.all_roots) == set(rs.all_roots)

    @pytest.mark.parametrize("th,order", [(r[0], r[1]) for r in FOLD_TABLE])
    def test_check_folding_duality(self, th, order):
        assert check_folding_duality(folding_datum(th, order)).passed

    def test_trivial_duality(self):
        assert check_folding_duality(folding_datum("A5", 1)).passed


class TestLattices:
    def test_a3_ranks(self):
        ch, cch = folded_lattices(folding_datum("A3", 2))
        assert ch.rank == 2 and cch.rank == 2

    def test_trivial_ranks(self):
        ch, cch = folded_lattices(folding_datum("A3", 1))
        assert ch.rank == 3 and cch.rank == 3

    def test_d4_triality_ranks(self):
        ch, cch = folded_lattices(folding_datum("D4", 3))
        assert ch.rank == 2 and cch.rank == 2

    def test_cocharacter_basis_is_invariant(self):
        fd = folding_datum("A5", 2)
        _, cch = folded_lattices(fd)
        # a acts on coroot coordinates by permuting the basis
        p = fd.aut.permutation
        for v in cch.basis:
            assert tuple(v[p.index(i)] for i in range(len(v))) == tuple(v)


class TestClassify:
    def test_b2_c2_distinction(self):
        assert str(classify([[2, -1], [-2, 2]])) == "C2"
        assert str(classify([[2, -2], [-1, 2]])) == "B2"

    def test_relabeling(self):
        # F4 written backwards still classifies as F4
        f4 = DynkinType.parse("F4").cartan_rows()
        rev = [[f4[3 - i][3 - j] for j in range(4)] for i in range(4)]
        assert str(classify(rev)) == "F4"

    def test_garbage_rejected(self):
        with pytest.raises(ValueError):
            classify([[2, -1], [-4, 2]])
