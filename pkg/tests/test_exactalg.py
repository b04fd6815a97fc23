import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foldlie.exactalg import (
    MultiPoly,
    RatMatrix,
    SpanSolver,
    char_poly,
    exterior_trace,
    nullspace,
    poly_eval,
    principal_minor_sum,
)


def rand_matrix(rng, rows, cols):
    return RatMatrix(
        rows, cols,
        [Q(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(rows * cols)],
    )


class TestCharPoly:
    def test_diag_example(self):
        cp = char_poly(RatMatrix.diagonal([1, 2, -1, -2]))
        assert cp.coefficient((4,)) == 1
        assert cp.coefficient((2,)) == -5
        assert cp.coefficient((0,)) == 4
        assert cp.coefficient((3,)) == 0 and cp.coefficient((1,)) == 0

    def test_zero_matrix(self):
        cp = char_poly(RatMatrix.zeros(2, 2))
        assert cp == MultiPoly(("x",), {(2,): Q(1)})

    def test_nilpotent_sp4_x(self):
        x = RatMatrix.from_rows(
            [[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]]
        )
        assert char_poly(x) == MultiPoly(("x",), {(4,): Q(1)})

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            char_poly(RatMatrix.zeros(2, 3))

    def test_conjugation_invariance(self):
        rng = random.Random(11)
        for _ in range(25):
            n = rng.randint(2, 4)
            m = rand_matrix(rng, n, n)
            while True:
                p = rand_matrix(rng, n, n)
                try:
                    pinv = p.inverse()
                    break
                except ValueError:
                    continue
            assert char_poly(p * m * pinv) == char_poly(m)

    def test_rational_entries_exact(self):
        m = RatMatrix.from_rows([[Q(1, 2), Q(1, 3)], [Q(1, 5), Q(1, 7)]])
        cp = char_poly(m)
        assert cp.coefficient((1,)) == -(Q(1, 2) + Q(1, 7))
        assert cp.coefficient((0,)) == Q(1, 2) * Q(1, 7) - Q(1, 3) * Q(1, 5)


class TestExteriorTrace:
    def test_examples(self):
        m = RatMatrix.diagonal([1, 2, -1, -2])
        assert exterior_trace(m, 2) == -5
        assert exterior_trace(RatMatrix.identity(4), 4) == 1

    def test_range_errors(self):
        m = RatMatrix.identity(3)
        for k in (0, 4):
            with pytest.raises(ValueError):
                exterior_trace(m, k)

    def test_against_principal_minors(self):
        rng = random.Random(5)
        for _ in range(15):
            n = rng.randint(2, 4)
            m = rand_matrix(rng, n, n)
            for k in range(1, n + 1):
                assert exterior_trace(m, k) == principal_minor_sum(m, k)

    @given(st.lists(st.integers(-6, 6), min_size=9, max_size=9))
    @settings(max_examples=40, deadline=None)
    def test_minor_oracle_property(self, entries):
        m = RatMatrix(3, 3, entries)
        for k in (1, 2, 3):
            assert exterior_trace(m, k) == principal_minor_sum(m, k)


class TestNullspace:
    def test_zero_matrix(self):
        assert len(nullspace(RatMatrix.zeros(2, 2))) == 2

    def test_identity(self):
        assert nullspace(RatMatrix.identity(3)) == []

    def test_sp4_ad_y_kernel(self, sp4):
        from foldlie.slodowy import ad_matrix

        y = RatMatrix.from_rows(
            [[0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0]]
        )
        assert len(nullspace(ad_matrix(sp4, y))) == 4

    def test_rank_nullity_on_random_matrices(self):
        rng = random.Random(42)
        for _ in range(500):
            rows, cols = rng.randint(1, 5), rng.randint(1, 5)
            m = rand_matrix(rng, rows, cols)
            basis = nullspace(m)
            assert len(basis) + m.rank() == cols
            for v in basis:
                assert (m * v).is_zero()


class TestMultiPoly:
    def test_eval_examples(self):
        c7 = MultiPoly.const(("x",), 7)
        assert poly_eval(c7, {"x": Q(123)}) == 7
        x, y, z = MultiPoly.variables_of(["x", "y", "z"])
        f = x**4 - y * z
        assert poly_eval(f, {"x": 1, "y": 1, "z": 1}) == 0
        vs = ("t1", "t2", "t3", "t4")
        from foldlie.invariants import esym

        sigma2 = esym(vs, 2)
        assert poly_eval(sigma2, dict(zip(vs, (1, 2, -1, -2)))) == -5

    def test_missing_variable_errors(self):
        x, y = MultiPoly.variables_of(["x", "y"])
        with pytest.raises(KeyError):
            poly_eval(x + y, {"x": Q(1)})

    def test_variable_order_mismatch_is_an_error(self):
        x1 = MultiPoly.var(("x", "y"), "x")
        x2 = MultiPoly.var(("y", "x"), "x")
        with pytest.raises(ValueError):
            _ = x1 + x2
        with pytest.raises(ValueError):
            _ = x1 * x2

    def test_no_zero_terms_stored(self):
        x, y = MultiPoly.variables_of(["x", "y"])
        p = (x + y) - x - y
        assert p.terms == {} and p.is_zero()

    def test_reduce_square(self):
        vs = ("a", "i")
        a = MultiPoly.var(vs, "a")
        i = MultiPoly.var(vs, "i")
        p = (a + i) * (a - i)
        assert p.reduce_square("i", Q(-1)) == a**2 + 1

    def test_substitute(self):
        x, y = MultiPoly.variables_of(["x", "y"])
        p = x**2 + y
        q = p.substitute({"x": y, "y": x * y})
        assert q == y**2 + x * y

    def test_diff(self):
        x, y = MultiPoly.variables_of(["x", "y"])
        assert (x**3 * y).diff("x") == 3 * x**2 * y

    def test_weighted_degrees(self):
        x, y, z = MultiPoly.variables_of(["x", "y", "z"])
        f = x**4 - y * z
        assert f.weighted_degrees({"x": 1, "y": 2, "z": 2}) == {4}


class TestSpanSolver:
    def test_roundtrip(self):
        basis = [(1, 0, 1), (0, 1, 1)]
        s = SpanSolver(basis)
        assert s.coordinates((2, 3, 5)) == (Q(2), Q(3))
        assert s.coordinates((1, 1, 1)) is None

    def test_dependent_basis_rejected(self):
        with pytest.raises(ValueError):
            SpanSolver([(1, 2), (2, 4)])


class TestImmutability:
    def test_matrix_immutable(self):
        m = RatMatrix.identity(2)
        with pytest.raises(AttributeError):
            m.rows = 3

    def test_poly_immutable(self):
        p = MultiPoly.const(("x",), 1)
        with pytest.raises(AttributeError):
            p.terms = {}
