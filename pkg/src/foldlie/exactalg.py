"""Exact rational arithmetic kernel: matrices, nullspaces, characteristic
polynomials, exterior-power traces, and sparse multivariate polynomials.

Scalars are ``fractions.Fraction`` (exported as :data:`Rat`); no floating
point appears anywhere.  Matrix entries may also be :class:`MultiPoly`
values for symbolic computations (e.g. characteristic polynomials of
matrices with polynomial entries); operations that only make sense over
the rationals check for that.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from . import kernel

Rat = Fraction

Scalar = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class RatMatrix:
    """Immutable matrix with exact entries, stored row-major.

    Entries are Fractions for ordinary matrices; :class:`MultiPoly` entries
    are accepted for symbolic work (most methods are generic).
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        ent = tuple(x if isinstance(x, MultiPoly) else _frac(x) for x in entries)
        if len(ent) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(ent)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", ent)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    # -- constructors ----------------------------------------------------
    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "RatMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = [x for row in rows for x in row]
        return RatMatrix(r, c, flat)

    @staticmethod
    def identity(n: int) -> "RatMatrix":
        ent = [Fraction(0)] * (n * n)
        for i in range(n):
            ent[i * n + i] = Fraction(1)
        return RatMatrix(n, n, ent)

    @staticmethod
    def zeros(rows: int, cols: int) -> "RatMatrix":
        return RatMatrix(rows, cols, [Fraction(0)] * (rows * cols))

    @staticmethod
    def column(values: Sequence) -> "RatMatrix":
        vals = list(values)
        return RatMatrix(len(vals), 1, vals)

    @staticmethod
    def diagonal(values: Sequence) -> "RatMatrix":
        vals = list(values)
        n = len(vals)
        ent = [Fraction(0)] * (n * n)
        for i, v in enumerate(vals):
            ent[i * n + i] = _frac(v)
        return RatMatrix(n, n, ent)

    # -- basic access -----------------------------------------------------
    def entry(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    # -- algebra ----------------------------------------------------------
    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix(
            self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix(
            self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)]
        )

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch in matrix product")
            ent = kernel.mat_mul(
                list(self.entries), list(other.entries), self.rows, self.cols, other.cols
            )
            return RatMatrix(self.rows, other.cols, ent)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, [x * c for x in self.entries])

    def apply(self, vec: Sequence) -> tuple:
        """Matrix times column vector, returned as a tuple."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(kernel.mat_vec(list(self.entries), list(vec), self.rows, self.cols))

    def transpose(self) -> "RatMatrix":
        ent = [self.entries[j * self.cols + i] for i in range(self.cols) for j in range(self.rows)]
        return RatMatrix(self.cols, self.rows, ent)

    def trace(self):
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        acc = self.entries[0]
        for i in range(1, self.rows):
            acc = acc + self.entries[i * self.rows + i]
        return acc

    def bracket(self, other: "RatMatrix") -> "RatMatrix":
        """Commutator [self, other]."""
        return self * other - other * self

    # -- linear algebra ----------------------------------------------------
    def rref(self) -> tuple["RatMatrix", list]:
        ent, pivots = kernel.rref(list(self.entries), self.rows, self.cols)
        return RatMatrix(self.rows, self.cols, ent), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def inverse(self) -> "RatMatrix":
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = RatMatrix(
            n,
            2 * n,
            [
                self.entries[i * n + j] if j < n else Fraction(1 if j - n == i else 0)
                for i in range(n)
                for j in range(2 * n)
            ],
        )
        red, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        ent = [red.entry(i, n + j) for i in range(n) for j in range(n)]
        return RatMatrix(n, n, ent)

    def det(self):
        cp = char_poly(self)
        n = self.rows
        c0 = cp.coefficient((0,))
        return c0 if n % 2 == 0 else -c0

    def conjugate_by(self, p: "RatMatrix") -> "RatMatrix":
        """p * self * p^{-1}."""
        return p * self * p.inverse()

    # -- dunder plumbing ----------------------------------------------------
    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RatMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"RatMatrix({self.rows}x{self.cols}: {rows})"

    def _same_shape(self, other: "RatMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")


class MultiPoly:
    """Sparse multivariate polynomial with Fraction coefficients.

    The variable order is fixed at construction; mixing polynomials with
    different variable tuples raises instead of silently merging symbol
    sets.  Use :meth:`with_variables` for deliberate embeddings.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, Scalar]):
        vs = tuple(variables)
        clean = {}
        for exps, coeff in terms.items():
            c = _frac(coeff)
            if c == 0:
                continue
            e = tuple(int(x) for x in exps)
            if len(e) != len(vs):
                raise ValueError("exponent vector length mismatch")
            if any(x < 0 for x in e):
                raise ValueError("negative exponent")
            clean[e] = clean.get(e, Fraction(0)) + c
        clean = {e: c for e, c in clean.items() if c != 0}
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ----------------------------------------------------
    @staticmethod
    def zero(variables: Sequence[str]) -> "MultiPoly":
        return MultiPoly(variables, {})

    @staticmethod
    def const(variables: Sequence[str], c) -> "MultiPoly":
        return MultiPoly(variables, {(0,) * len(tuple(variables)): _frac(c)})

    @staticmethod
    def var(variables: Sequence[str], name: str) -> "MultiPoly":
        vs = tuple(variables)
        if name not in vs:
            raise KeyError(f"unknown variable {name!r}")
        e = [0] * len(vs)
        e[vs.index(name)] = 1
        return MultiPoly(vs, {tuple(e): Fraction(1)})

    @staticmethod
    def variables_of(names: Sequence[str]) -> list["MultiPoly"]:
        vs = tuple(names)
        return [MultiPoly.var(vs, n) for n in vs]

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(x == 0 for x in e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def coefficient(self, exps: tuple) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def depends_on(self, name: str) -> bool:
        i = self.variables.index(name)
        return any(e[i] > 0 for e in self.terms)

    # -- ring operations ----------------------------------------------------
    def _check(self, other: "MultiPoly"):
        if self.variables != other.variables:
            raise ValueError(
                f"variable order mismatch: {self.variables} vs {other.variables}"
            )

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.variables, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(self.variables, terms)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = _frac(other)
            return MultiPoly(self.variables, {e: k * c for e, k in self.terms.items()})
        self._check(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.variables, terms)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MultiPoly":
        c = _frac(other)
        if c == 0:
            raise ZeroDivisionError("division of MultiPoly by zero scalar")
        return self * (1 / c)

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of MultiPoly")
        result = MultiPoly.const(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=lambda t: (sum(t), t), reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v for v, k in zip(self.variables, e) if k
            )
            bits.append(f"{c}" if not mono else (f"{c}*{mono}" if c != 1 else mono))
        return " + ".join(bits)

    # -- calculus / substitution -------------------------------------------
    def diff(self, name: str) -> "MultiPoly":
        i = self.variables.index(name)
        terms = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            terms[tuple(e2)] = c * e[i]
        return MultiPoly(self.variables, terms)

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Exact evaluation; every variable must be assigned."""
        missing = [v for v in self.variables if v not in point]
        if missing:
            raise KeyError(f"missing variables in evaluation point: {missing}")
        vals = [_frac(point[v]) for v in self.variables]
        acc = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(vals, e):
                if k:
                    t *= x**k
            acc += t
        return acc

    def substitute(self, mapping: Mapping[str, "MultiPoly | Scalar"],
                   target_variables: Sequence[str] | None = None) -> "MultiPoly":
        """Substitute polynomials (or scalars) for variables.

        Unmapped variables must exist in the target variable tuple and are
        carried across unchanged.
        """
        if target_variables is None:
            polys = [v for v in mapping.values() if isinstance(v, MultiPoly)]
            if polys:
                target_variables = polys[0].variables
            else:
                target_variables = self.variables
        tvs = tuple(target_variables)
        images: list[MultiPoly] = []
        for v in self.variables:
            if v in mapping:
                img = mapping[v]
                if not isinstance(img, MultiPoly):
                    img = MultiPoly.const(tvs, img)
                elif img.variables != tvs:
                    raise ValueError("substitution images disagree on variables")
            else:
                img = MultiPoly.var(tvs, v)
            images.append(img)
        acc = MultiPoly.zero(tvs)
        for e, c in self.terms.items():
            t = MultiPoly.const(tvs, c)
            for img, k in zip(images, e):
                if k:
                    t = t * (img**k)
            acc = acc + t
        return acc

    def with_variables(self, variables: Sequence[str]) -> "MultiPoly":
        """Embed into a ring with a larger (or reordered) variable tuple."""
        vs = tuple(variables)
        idx = []
        for v in self.variables:
            if v not in vs:
                raise ValueError(f"variable {v!r} missing from target tuple")
            idx.append(vs.index(v))
        terms = {}
        for e, c in self.terms.items():
            e2 = [0] * len(vs)
            for i, k in zip(idx, e):
                e2[i] = k
            terms[tuple(e2)] = c
        return MultiPoly(vs, terms)

    def reduce_square(self, name: str, square: "MultiPoly | Scalar") -> "MultiPoly":
        """Rewrite ``name**2 -> square`` until the degree in ``name`` is < 2.

        This is how algebraic constants (i with i^2 = -1, r with r^2 = 2/3,
        a primitive cube root mu with mu^2 = -1 - mu) are handled exactly.
        """
        i = self.variables.index(name)
        if not isinstance(square, MultiPoly):
            square = MultiPoly.const(self.variables, square)
        self._check(square)
        cur = self
        while True:
            high = [e for e in cur.terms if e[i] >= 2]
            if not high:
                return cur
            keep = {e: c for e, c in cur.terms.items() if e[i] < 2}
            acc = MultiPoly(self.variables, keep)
            for e in high:
                c = cur.terms[e]
                e2 = list(e)
                q, r = divmod(e2[i], 2)
                e2[i] = r
                acc = acc + MultiPoly(self.variables, {tuple(e2): c}) * (square**q)
            cur = acc

    def weighted_degrees(self, weights: Mapping[str, int]) -> set:
        """Set of weighted degrees of the monomials (empty for 0)."""
        ws = [weights[v] for v in self.variables]
        return {sum(w * k for w, k in zip(ws, e)) for e in self.terms}


# -- spec operations ------------------------------------------------------


def nullspace(m: RatMatrix) -> list[RatMatrix]:
    """Basis of ker(m) as column vectors; rank-nullity is verified."""
    red, pivots = m.rref()
    free = [j for j in range(m.cols) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red.entry(r, f)
        basis.append(RatMatrix.column(v))
    if len(basis) + len(pivots) != m.cols:
        raise AssertionError("rank-nullity violated")
    for v in basis:
        if not (m * v).is_zero():
            raise AssertionError("nullspace vector fails m*v = 0")
    return basis


def char_poly_coefficients(m: RatMatrix) -> list:
    """Coefficients [c_0=1, c_1, ..., c_n] of det(x*I - m) ordered from x^n
    down to x^0.  Entries may be Fractions or MultiPoly values."""
    if not m.is_square:
        raise ValueError("char_poly of a non-square matrix")
    n = m.rows
    if any(isinstance(x, MultiPoly) for x in m.entries):
        vs = next(x for x in m.entries if isinstance(x, MultiPoly)).variables
        one = MultiPoly.const(vs, 1)
        ent = [x if isinstance(x, MultiPoly) else one * x for x in m.entries]
        return kernel.charpoly_generic(ent, n, one)
    d = kernel.entries_common_denominator(list(m.entries))
    ints = [int(x * d) for x in m.entries]
    coeffs = kernel.charpoly_int(ints, n)
    return [Fraction(c, d**k) for k, c in enumerate(coeffs)]


def char_poly(m: RatMatrix, variable: str = "x") -> MultiPoly:
    """Monic characteristic polynomial det(x*I - m), exact.

    Rational matrices are scaled to integers and run through the
    division-exact integer Faddeev-LeVerrier recursion; matrices with
    polynomial entries use the generic recursion (the indeterminate is
    renamed with trailing underscores if it collides with an entry
    variable).
    """
    n = m.rows if m.is_square else None
    coeffs = char_poly_coefficients(m)
    if all(isinstance(c, Fraction) for c in coeffs):
        return MultiPoly((variable,), {(n - k,): c for k, c in enumerate(coeffs)})
    base = next(c for c in coeffs if isinstance(c, MultiPoly)).variables
    lam = variable
    while lam in base:
        lam += "_"
    vs = base + (lam,)
    xi = len(vs) - 1
    terms: dict = {}
    for k, c in enumerate(coeffs):
        cp = c if isinstance(c, MultiPoly) else MultiPoly.const(base, c)
        for e, q in cp.with_variables(vs).terms.items():
            e2 = list(e)
            e2[xi] += n - k
            terms[tuple(e2)] = terms.get(tuple(e2), Fraction(0)) + q
    return MultiPoly(vs, terms)


def exterior_trace(m: RatMatrix, k: int):
    """tr(Lambda^k m) = e_k(eigenvalues) = (-1)^k times the coefficient of
    x^(n-k) in the characteristic polynomial; exact, possibly symbolic."""
    if not m.is_square:
        raise ValueError("exterior_trace of a non-square matrix")
    n = m.rows
    if not 1 <= k <= n:
        raise ValueError(f"exterior power degree {k} out of range 1..{n}")
    coeffs = char_poly_coefficients(m)
    return coeffs[k] * (Fraction(-1) ** k)


def poly_eval(p: MultiPoly, point: Mapping[str, Scalar]) -> Fraction:
    """Exact evaluation of ``p`` at a rational point covering all variables."""
    return p.evaluate(point)


def principal_minor_sum(m: RatMatrix, k: int) -> Fraction:
    """Brute-force sum of k x k principal minors (independent oracle for
    exterior_trace). Exponential in n; for tests only."""
    from itertools import combinations

    n = m.rows
    total = Fraction(0)
    for subset in combinations(range(n), k):
        sub = RatMatrix(
            k, k, [m.entry(i, j) for i in subset for j in subset]
        )
        total += sub.det()
    return total


class SpanSolver:
    """Repeated exact coordinate extraction against a fixed basis.

    Precomputes a row-reduction operator so that each solve is a single
    matrix-vector product plus a consistency check.
    """

    def __init__(self, basis_vectors: Sequence[Sequence]):
        cols = [tuple(_frac(x) for x in v) for v in basis_vectors]
        if not cols:
            raise ValueError("empty basis")
        m = len(cols[0])
        d = len(cols)
        aug = RatMatrix(
            m,
            d + m,
            [
                (cols[j][i] if j < d else Fraction(1 if j - d == i else 0))
                for i in range(m)
                for j in range(d + m)
            ],
        )
        red, pivots = aug.rref()
        if pivots[:d] != list(range(d)):
            raise ValueError("basis vectors are linearly dependent")
        self.dim = d
        self.length = m
        self._op = RatMatrix(m, m, [red.entry(i, d + j) for i in range(m) for j in range(m)])

    def coordinates(self, vector: Sequence) -> tuple | None:
        """Coordinates of ``vector`` in the basis, or None if outside the span."""
        v = tuple(_frac(x) for x in vector)
        if len(v) != self.length:
            raise ValueError("vector length mismatch")
        w = self._op.apply(v)
        if any(x != 0 for x in w[self.dim :]):
            return None
        return w[: self.dim]
