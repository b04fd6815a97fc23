import os
import random
from fractions import Fraction as Q

import pytest

from foldlie.exactalg import RatMatrix
from foldlie.rootsys import build_root_system, folding_datum
from foldlie.weyl import (
    EnumerationBudgetExceeded,
    WeylGroup,
    folded_reflection,
    folding_weyl_data,
    generate_weyl,
    is_fixed_point,
    orbit_regular_membership,
    quotient_invariants_iso_check,
    random_fixed_point,
)


class TestGenerate:
    @pytest.mark.parametrize("name,order", [("A3", 24), ("C2", 8), ("A1", 2),
                                            ("B3", 48), ("G2", 12)])
    def test_orders(self, name, order):
        w = generate_weyl(build_root_system(name))
        assert w.order == order
        w.verify(check_coroots=(order <= 48))

    def test_words_multiply_out(self):
        w = generate_weyl(build_root_system("C2"))
        for el in w.elements:
            assert el.verify_word(w.generators)

    def test_budget(self):
        with pytest.raises(EnumerationBudgetExceeded):
            generate_weyl(build_root_system("E7"))

    def test_reflection_count_matches_positive_roots(self):
        for name in ("A3", "C2", "G2"):
            rs = build_root_system(name)
            w = generate_weyl(rs)
            assert len(w.reflections()) == len(rs.all_roots) // 2


class TestFoldingIsomorphism:
    @pytest.mark.parametrize(
        "th,order,wh_order,w_order,folded",
        [("A3", 2, 24, 8, "C2"), ("A5", 2, 720, 48, "C3"),
         ("D4", 3, 192, 12, "G2"), ("D5", 2, 1920, 384, "B4")],
    )
    def test_orders_and_types(self, th, order, wh_order, w_order, folded):
        fwd = folding_weyl_data(folding_datum(th, order))
        assert fwd.wh.order == wh_order
        assert len(fwd.commutant) == w_order
        assert fwd.folded.order == w_order
        assert str(fwd.folded.dtype) == folded

    def test_restriction_injective_distinct_matrices(self, fwd_a3):
        mats = {fwd_a3.folded.elements[fwd_a3.restrict[i]].matrix.entries
                for i in fwd_a3.commutant}
        assert len(mats) == len(fwd_a3.commutant)

    def test_commutant_subgroup_operation(self, fwd_a3):
        from foldlie.weyl import commutant_fixed_subgroup

        sub = commutant_fixed_subgroup(fwd_a3.wh, fwd_a3.a_matrix)
        assert sub.order == 8
        assert len(sub.generators) == 2
        sub.verify(check_coroots=True)
        # closed under multiplication within the subgroup
        for i in range(sub.order):
            for j in range(sub.order):
                assert sub.multiply(i, j) < sub.order

    def test_non_normalizing_matrix_rejected(self, fwd_a3):
        from foldlie.exactalg import RatMatrix
        from foldlie.weyl import commutant_fixed_subgroup

        bad = RatMatrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
        with pytest.raises(ValueError):
            commutant_fixed_subgroup(fwd_a3.wh, bad)

    def test_folded_permutes_coroots(self, fwd_a3):
        fwd_a3.folded.verify()

    def test_trivial_automorphism(self):
        fwd = folding_weyl_data(folding_datum("A3", 1))
        assert len(fwd.commutant) == fwd.wh.order == fwd.folded.order

    def test_weyl_vector_equality(self):
        from foldlie.rootsys import fold_invariants

        for th, order in (("A3", 2), ("D4", 3)):
            fd = folding_datum(th, order)
            pos_h = fd.homogeneous.positive_roots()
            pos = fold_invariants(fd).positive_roots()
            s = lambda vs: tuple(sum(c) for c in zip(*vs))
            assert s(pos_h) == s(pos)


class TestFoldedReflections:
    def test_a3_outer_orbit(self, fwd_a3):
        wh = fwd_a3.wh
        el = folded_reflection(wh, (0, 2))
        # commutes with a
        assert el.matrix * fwd_a3.a_matrix == fwd_a3.a_matrix * el.matrix
        # restriction in the orbit basis (u_13, u_2) is (u, v) -> (v, u):
        # on coordinates (c13, c2) = (u, u+v) that is [[-1, 1], [0, 1]]
        idx = fwd_a3.restrict[wh.index_of(el.matrix)]
        rest = fwd_a3.folded.elements[idx].matrix
        assert rest == RatMatrix.from_rows([[-1, 1], [0, 1]])
        assert rest * rest == RatMatrix.identity(2)

    def test_singleton_orbit(self, fwd_a3):
        el = folded_reflection(fwd_a3.wh, (1,))
        assert el.matrix == fwd_a3.wh.generators[1]

    def test_d4_triality_orbit(self, fwd_d4_triality):
        el = folded_reflection(fwd_d4_triality.wh, (0, 2, 3))
        ident = RatMatrix.identity(4)
        assert el.matrix != ident and el.matrix * el.matrix == ident

    def test_non_orthogonal_orbit_rejected(self, fwd_a3):
        with pytest.raises(ValueError):
            folded_reflection(fwd_a3.wh, (0, 1))

    def test_every_simple_folded_reflection_is_a_restriction(self, fwd_a3):
        for oi in range(len(fwd_a3.orbits)):
            assert fwd_a3.simple_folded_reflection(oi) is not None


class TestRegularAction:
    def test_worked_regular_point(self, fwd_a3):
        t = (Q(1), Q(3), Q(1))  # diag(1, 2, -2, -1)
        assert is_fixed_point(fwd_a3, t)
        hits = 0
        for el in fwd_a3.wh.elements:
            if is_fixed_point(fwd_a3, el.matrix.apply(t)):
                d = orbit_regular_membership(fwd_a3, t, el)
                assert d.orbit_equal and d.point_is_regular and d.w_in_folded_group
                assert d.restriction is not None
                hits += 1
        assert hits == len(fwd_a3.commutant)

    def test_zero_point(self, fwd_a3):
        z = (Q(0),) * 3
        d = orbit_regular_membership(fwd_a3, z, fwd_a3.wh.elements[7])
        assert d.orbit_equal and not d.point_is_regular

    def test_nonregular_nonzero_point(self, fwd_a3):
        # diag(1, -1, 1, -1): fixed, non-regular (equal first/third entries)
        t = (Q(1), Q(0), Q(1))
        assert is_fixed_point(fwd_a3, t)
        for el in fwd_a3.wh.elements:
            if is_fixed_point(fwd_a3, el.matrix.apply(t)):
                assert orbit_regular_membership(fwd_a3, t, el).orbit_equal

    def test_point_outside_fixed_cartan_rejected(self, fwd_a3):
        with pytest.raises(ValueError):
            orbit_regular_membership(fwd_a3, (Q(1), Q(0), Q(0)),
                                     fwd_a3.wh.elements[0])


class TestQuotientIso:
    def test_a3_samples(self, fwd_a3):
        rep = quotient_invariants_iso_check(fwd_a3.fd, 25, 42, fwd=fwd_a3)
        assert rep.passed and rep.cases_run == 100

    def test_d4_samples(self, fwd_d4_triality):
        rep = quotient_invariants_iso_check(fwd_d4_triality.fd, 8, 7,
                                            fwd=fwd_d4_triality)
        assert rep.passed

    def test_regular_sampling_respects_flag(self, fwd_a3):
        rng = random.Random(3)
        from foldlie.weyl import is_regular

        v = random_fixed_point(fwd_a3, rng, regular=True)
        assert is_regular(fwd_a3.fd.homogeneous, v)

    def test_chamber_closure_semantics(self, fwd_a3):
        from foldlie.weyl import is_dominant

        rs = fwd_a3.fd.homogeneous
        rng = random.Random(8)
        # every orbit meets the closed chamber; boundary points count as in
        for _ in range(20):
            t = random_fixed_point(fwd_a3, rng)
            hits = [i for i, el in enumerate(fwd_a3.wh.elements)
                    if is_dominant(rs, el.matrix.apply(t))]
            assert hits
        assert is_dominant(rs, (Q(0),) * 3)  # boundary: closure semantics


@pytest.mark.skipif(not os.environ.get("FOLDLIE_ENABLE_E6"),
                    reason="gated: 51840-element enumeration")
class TestGated:
    def test_e6_commutant(self):
        fwd = folding_weyl_data(folding_datum("E6", 2))
        assert fwd.wh.order == 51840
        assert len(fwd.commutant) == 1152
        assert str(fwd.folded.dtype) == "F4"

    def test_a7_commutant(self):
        fwd = folding_weyl_data(folding_datum("A7", 2), force=True)
        assert fwd.wh.order == 40320
        assert len(fwd.commutant) == 384
