"""The compiled and pure-Python kernels must agree exactly."""

import random
from fractions import Fraction as Q

from foldlie import kernel


def backends():
    return list(kernel.IMPLEMENTATIONS.values())


def rand_entries(rng, n, m):
    return [Q(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n * m)]


class TestAgreement:
    def test_backend_selected(self):
        assert kernel.BACKEND in ("python", "cython")
        assert "python" in kernel.IMPLEMENTATIONS

    def test_mat_mul(self):
        rng = random.Random(1)
        for _ in range(20):
            n, k, m = rng.randint(1, 5), rng.randint(1, 5), rng.randint(1, 5)
            a, b = rand_entries(rng, n, k), rand_entries(rng, k, m)
            results = [impl.mat_mul(list(a), list(b), n, k, m) for impl in backends()]
            assert all(r == results[0] for r in results)

    def test_rref(self):
        rng = random.Random(2)
        for _ in range(20):
            n, m = rng.randint(1, 5), rng.randint(1, 5)
            a = rand_entries(rng, n, m)
            results = [impl.rref(list(a), n, m) for impl in backends()]
            assert all(r == results[0] for r in results)

    def test_charpoly_int(self):
        rng = random.Random(3)
        for _ in range(20):
            n = rng.randint(1, 6)
            a = [rng.randint(-9, 9) for _ in range(n * n)]
            results = [impl.charpoly_int(list(a), n) for impl in backends()]
            assert all(r == results[0] for r in results)

    def test_charpoly_generic(self):
        rng = random.Random(4)
        for _ in range(10):
            n = rng.randint(1, 4)
            a = rand_entries(rng, n, n)
            results = [impl.charpoly_generic(list(a), n, Q(1)) for impl in backends()]
            assert all(r == results[0] for r in results)

    def test_common_denominator(self):
        vals = [Q(1, 2), Q(3, 4), Q(5, 6), 7]
        results = [impl.entries_common_denominator(vals) for impl in backends()]
        assert all(r == 12 for r in results)


class TestIntegerFaddeevLeVerrier:
    def test_matches_eigenvalue_expansion(self):
        impl = kernel.IMPLEMENTATIONS["python"]
        # diag(1, 2, -1, -2): x^4 - 5 x^2 + 4
        a = [0] * 16
        for i, v in enumerate((1, 2, -1, -2)):
            a[i * 4 + i] = v
        assert impl.charpoly_int(a, 4) == [1, 0, -5, 0, 4]

    def test_division_exactness_guard(self):
        # FL divisions are exact for any integer matrix; spot-check many
        rng = random.Random(5)
        impl = kernel.IMPLEMENTATIONS["python"]
        for _ in range(50):
            n = rng.randint(1, 6)
            a = [rng.randint(-20, 20) for _ in range(n * n)]
            coeffs = impl.charpoly_int(a, n)
            assert len(coeffs) == n + 1 and coeffs[0] == 1
