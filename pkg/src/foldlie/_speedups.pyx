# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled twin of ``_kernel_py``.

The entries stay Python objects (exact ints / Fractions / polynomials);
the win over the pure-Python kernel is typed index arithmetic and the
removal of interpreter loop overhead in the O(n^3) inner loops.
"""

from fractions import Fraction
from math import gcd


def mat_mul(list a, list b, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    """Multiply an n x k by a k x m flat row-major matrix."""
    cdef Py_ssize_t i, j, t, arow
    cdef list out = [None] * (n * m)
    cdef object acc
    for i in range(n):
        arow = i * k
        for j in range(m):
            acc = a[arow] * b[j]
            for t in range(1, k):
                acc = acc + a[arow + t] * b[t * m + j]
            out[i * m + j] = acc
    return out


def mat_vec(list a, list v, Py_ssize_t n, Py_ssize_t k):
    """Apply an n x k flat matrix to a length-k vector."""
    cdef Py_ssize_t i, t, arow
    cdef list out = [None] * n
    cdef object acc
    for i in range(n):
        arow = i * k
        acc = a[arow] * v[0]
        for t in range(1, k):
            acc = acc + a[arow + t] * v[t]
        out[i] = acc
    return out


def rref(entries, Py_ssize_t rows, Py_ssize_t cols):
    """Reduced row echelon form over Fraction entries."""
    cdef list m = [Fraction(x) for x in entries]
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, j, pivot_row
    cdef object pv, inv, f
    for c in range(cols):
        pivot_row = -1
        for i in range(r, rows):
            if m[i * cols + c] != 0:
                pivot_row = i
                break
        if pivot_row < 0:
            continue
        if pivot_row != r:
            for j in range(cols):
                m[r * cols + j], m[pivot_row * cols + j] = (
                    m[pivot_row * cols + j],
                    m[r * cols + j],
                )
        pv = m[r * cols + c]
        if pv != 1:
            inv = 1 / pv
            for j in range(c, cols):
                m[r * cols + j] = m[r * cols + j] * inv
        for i in range(rows):
            if i == r:
                continue
            f = m[i * cols + c]
            if f != 0:
                for j in range(c, cols):
                    m[i * cols + j] = m[i * cols + j] - f * m[r * cols + j]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def charpoly_int(entries, Py_ssize_t n):
    """Characteristic polynomial of an integer matrix (exact integer FL)."""
    if n == 0:
        return [1]
    cdef list a = list(entries)
    cdef list coeffs = [1]
    cdef list m = [0] * (n * n)
    cdef list am
    cdef Py_ssize_t i, j, t, k
    cdef object acc, tr, c
    for i in range(n):
        m[i * n + i] = 1
    for k in range(1, n + 1):
        am = [0] * (n * n)
        for i in range(n):
            for j in range(n):
                acc = 0
                for t in range(n):
                    acc = acc + a[i * n + t] * m[t * n + j]
                am[i * n + j] = acc
        tr = 0
        for i in range(n):
            tr = tr + am[i * n + i]
        c = -tr // k
        if c * k != -tr:
            raise ArithmeticError("non-exact division in integer Faddeev-LeVerrier")
        coeffs.append(c)
        if k < n:
            m = am
            for i in range(n):
                m[i * n + i] = m[i * n + i] + c
    return coeffs


def charpoly_generic(entries, Py_ssize_t n, one):
    """Characteristic polynomial over any commutative Q-algebra."""
    if n == 0:
        return [one]
    zero = one - one
    cdef list a = list(entries)
    cdef list coeffs = [one]
    cdef list m = [zero] * (n * n)
    cdef list am
    cdef Py_ssize_t i, j, t, k
    cdef object acc, tr, c
    for i in range(n):
        m[i * n + i] = one
    for k in range(1, n + 1):
        am = [zero] * (n * n)
        for i in range(n):
            for j in range(n):
                acc = zero
                for t in range(n):
                    acc = acc + a[i * n + t] * m[t * n + j]
                am[i * n + j] = acc
        tr = zero
        for i in range(n):
            tr = tr + am[i * n + i]
        c = (-tr) / k if k > 1 else -tr
        coeffs.append(c)
        if k < n:
            m = am
            for i in range(n):
                m[i * n + i] = m[i * n + i] + c
    return coeffs


def entries_common_denominator(entries):
    """lcm of the denominators of a list of Fractions (ints allowed)."""
    cdef object d = 1
    cdef object q
    for x in entries:
        q = x.denominator if isinstance(x, Fraction) else 1
        d = d * q // gcd(d, q)
    return d
