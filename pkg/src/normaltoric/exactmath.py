"""Exact integer and rational linear algebra.

Everything here works over Python ``int`` and :class:`fractions.Fraction`;
no floating point value is ever produced.  The pieces are small on purpose:
column-style Hermite normal form, lattice index, Diophantine solving and a
Fourier-Motzkin feasibility test that handles strict inequalities natively.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

__all__ = [
    "IntegerMatrix",
    "RankDeficientError",
    "Constraint",
    "LinearSystem",
    "hermite_normal_form",
    "smith_index",
    "solve_diophantine",
    "rational_feasible",
    "variable_bounds",
    "determinant",
    "matmul",
    "dot",
    "rational_vector",
]


class RankDeficientError(ValueError):
    """Raised when an operation needs full (row or column) rank."""


class IntegerMatrix:
    """Immutable integer matrix stored as a tuple of row tuples."""

    __slots__ = ("_rows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]], ncols: Optional[int] = None):
        data = tuple(tuple(_as_int(x) for x in row) for row in rows)
        if ncols is None:
            if not data:
                raise ValueError("cannot infer the column count of an empty matrix")
            ncols = len(data[0])
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged matrix rows")
        self._rows = data
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(([int(i == j) for j in range(n)] for i in range(n)), ncols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int) -> "IntegerMatrix":
        return cls(([col[i] for col in columns] for i in range(nrows)), ncols=len(columns))

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def entries(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def row(self, i: int) -> tuple[int, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> "IntegerMatrix":
        return IntegerMatrix(self.columns(), ncols=self.nrows)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self._rows[i][j]
        return self._rows[idx]

    def __matmul__(self, other):
        if isinstance(other, IntegerMatrix):
            return IntegerMatrix(matmul(self._rows, other._rows, other.ncols), ncols=other.ncols)
        return tuple(dot(r, other) for r in self._rows)

    def __eq__(self, other):
        return (
            isinstance(other, IntegerMatrix)
            and self.ncols == other.ncols
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.ncols, self._rows))

    def __repr__(self):
        return f"IntegerMatrix({self.tolist()!r})"


def _as_int(x) -> int:
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    raise TypeError(f"expected an integer entry, got {x!r}")


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError("dimension mismatch in dot product")
    return sum((a * b for a, b in zip(u, v)), 0)


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], bcols: Optional[int] = None):
    if bcols is None:
        bcols = len(b[0]) if b else 0
    return [[sum((row[k] * b[k][j] for k in range(len(b))), 0) for j in range(bcols)] for row in a]


def rational_vector(values: Iterable) -> tuple[Fraction, ...]:
    """Coerce to a tuple of canonical fractions (``Fraction`` normalizes itself)."""
    return tuple(Fraction(v) for v in values)


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    a = [list(r) for r in M]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Hermite normal form and friends


def _hnf_lists(rows: Sequence[Sequence[int]], ncols: int):
    H = [list(r) for r in rows]
    U = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    d = len(H)

    def col_swap(j, k):
        for mat in (H, U):
            for r in mat:
                r[j], r[k] = r[k], r[j]

    def col_axpy(j, q, k):  # column j -= q * column k
        for mat in (H, U):
            for r in mat:
                r[j] -= q * r[k]

    def col_neg(j):
        for mat in (H, U):
            for r in mat:
                r[j] = -r[j]

    p = 0
    pivots = []
    for i in range(d):
        if p >= ncols:
            break
        row = H[i]
        found = False
        while True:
            nz = [j for j in range(p, ncols) if row[j] != 0]
            if not nz:
                break
            found = True
            jmin = min(nz, key=lambda j: (abs(row[j]), j))
            if jmin != p:
                col_swap(p, jmin)
            clean = True
            for j in range(p + 1, ncols):
                if row[j]:
                    col_axpy(j, row[j] // row[p], p)
                    if row[j]:
                        clean = False
            if clean:
                break
        if not found:
            continue
        if row[p] < 0:
            col_neg(p)
        for j in range(p):
            q = row[j] // row[p]
            if q:
                col_axpy(j, q, p)
        pivots.append((i, p))
        p += 1
    return H, U, pivots


def hermite_normal_form(M: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix]:
    """Column-style Hermite normal form.

    Returns ``(H, U)`` with ``M @ U == H`` and ``U`` unimodular.  Pivots are
    positive, entries to the left of a pivot lie in ``[0, pivot)`` and the zero
    columns come last, so the trailing columns of ``U`` span the integer kernel.
    """
    H, U, _ = _hnf_lists(M.entries, M.ncols)
    return IntegerMatrix(H, ncols=M.ncols), IntegerMatrix(U, ncols=M.ncols)


def matrix_rank(M: IntegerMatrix) -> int:
    return len(_hnf_lists(M.entries, M.ncols)[2])


def integer_kernel(M: IntegerMatrix) -> list[tuple[int, ...]]:
    """A lattice basis of ``ker(M) ∩ Z^n`` (the zero-column part of ``U``)."""
    _, U, pivots = _hnf_lists(M.entries, M.ncols)
    r = len(pivots)
    return [tuple(U[i][j] for i in range(M.ncols)) for j in range(r, M.ncols)]


def smith_index(M: IntegerMatrix) -> int:
    """Product of the invariant factors of a full-column-rank matrix.

    Equals the gcd of the maximal minors, i.e. the index of the column lattice
    in its saturation.  A value of 1 means the columns span a primitive
    sublattice.
    """
    Mt = M.T
    H, _, pivots = _hnf_lists(Mt.entries, Mt.ncols)
    if len(pivots) < M.ncols:
        raise RankDeficientError("smith_index needs full column rank")
    out = 1
    for i, j in pivots:
        out *= H[i][j]
    return out


def solve_diophantine(M: IntegerMatrix, z: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Some integer ``v`` with ``M @ v == z``, or ``None`` when none exists."""
    if len(z) != M.nrows:
        raise ValueError(f"right-hand side has length {len(z)}, expected {M.nrows}")
    H, U, pivots = _hnf_lists(M.entries, M.ncols)
    t = [0] * M.ncols
    pivot_of_row = dict(pivots)
    for i in range(M.nrows):
        acc = z[i] - sum(H[i][j] * t[j] for j in range(M.ncols))
        if i in pivot_of_row:
            j = pivot_of_row[i]
            q, rem = divmod(acc, H[i][j])
            if rem:
                return None
            t[j] = q
        elif acc != 0:
            return None
    return tuple(dot(U[i], t) for i in range(M.ncols))


# ---------------------------------------------------------------------------
# Fourier-Motzkin feasibility


GT, GE, EQ = ">", ">=", "="


@dataclass(frozen=True)
class Constraint:
    """``coeffs · x  relation  bound`` with relation one of ``>``, ``>=``, ``=``."""

    coeffs: tuple[Fraction, ...]
    bound: Fraction
    relation: str = GE

    def __post_init__(self):
        if self.relation not in (GT, GE, EQ):
            raise ValueError(f"unknown relation {self.relation!r}")
        object.__setattr__(self, "coeffs", rational_vector(self.coeffs))
        object.__setattr__(self, "bound", Fraction(self.bound))

    def holds(self, x: Sequence) -> bool:
        lhs = dot(self.coeffs, x)
        if self.relation == GT:
            return lhs > self.bound
        if self.relation == GE:
            return lhs >= self.bound
        return lhs == self.bound


@dataclass(frozen=True)
class LinearSystem:
    constraints: tuple[Constraint, ...]
    dim: int

    def __init__(self, constraints: Iterable[Constraint], dim: Optional[int] = None):
        cons = tuple(constraints)
        dims = {len(c.coeffs) for c in cons}
        if dim is None:
            if len(dims) != 1:
                raise ValueError("cannot infer dimension" if not dims else "mixed dimensions")
            dim = dims.pop()
        elif dims - {dim}:
            raise ValueError("constraint dimension does not match system dimension")
        object.__setattr__(self, "constraints", cons)
        object.__setattr__(self, "dim", dim)

    def holds(self, x: Sequence) -> bool:
        return all(c.holds(x) for c in self.constraints)


class _Infeasible(Exception):
    pass


def _normalize(a: list, b: Fraction, strict: bool):
    """Scale an inequality by a positive factor so duplicates compare equal."""
    scale = next((abs(c) for c in a if c), None)
    if scale is None:
        ok = (0 > b) if strict else (0 >= b)
        if not ok:
            raise _Infeasible
        return None
    return (tuple(c / scale for c in a), b / scale, strict)


def _substitute_equalities(system: LinearSystem):
    """Eliminate equalities by substitution.

    Returns the remaining inequalities (as normalized triples) and the list of
    ``(j, coeffs, const)`` meaning ``x_j = const + coeffs · x``.
    """
    eqs = [(list(c.coeffs), c.bound) for c in system.constraints if c.relation == EQ]
    ineqs = [(list(c.coeffs), c.bound, c.relation == GT) for c in system.constraints if c.relation != EQ]
    subs = []
    while eqs:
        a, b = eqs.pop(0)
        j = next((k for k in range(len(a) - 1, -1, -1) if a[k] != 0), None)
        if j is None:
            if b != 0:
                raise _Infeasible
            continue
        expr = [-c / a[j] for c in a]
        expr[j] = Fraction(0)
        const = b / a[j]
        subs.append((j, expr, const))

        def apply(coeffs, bound):
            f = coeffs[j]
            if not f:
                return coeffs, bound
            new = [c + f * e for c, e in zip(coeffs, expr)]
            new[j] = Fraction(0)
            return new, bound - f * const

        eqs = [apply(c, bb) for c, bb in eqs]
        ineqs = [(*apply(c, bb), s) for c, bb, s in ineqs]
    return ineqs, subs


def _fm_eliminate(ineqs, order):
    """Run FM over variables in ``order``; return the per-stage constraint sets."""
    current = set()
    for a, b, s in ineqs:
        t = _normalize(list(a), Fraction(b), s)
        if t is not None:
            current.add(t)
    stages = []
    for k in order:
        stages.append((k, current))
        pos, neg, rest = [], [], set()
        for c in current:
            ck = c[0][k]
            if ck > 0:
                pos.append(c)
            elif ck < 0:
                neg.append(c)
            else:
                rest.add(c)
        for ap, bp, sp in pos:
            for an, bn, sn in neg:
                fp, fn = -an[k], ap[k]
                a = [fp * x + fn * y for x, y in zip(ap, an)]
                t = _normalize(a, fp * bp + fn * bn, sp or sn)
                if t is not None:
                    rest.add(t)
        current = rest
    for c in current:
        _normalize(list(c[0]), c[1], c[2])
    return stages


def _pick(lo, lo_strict, hi, hi_strict) -> Fraction:
    """A simple value in the interval: 0 if possible, else a small integer, else the midpoint."""

    def ok(x):
        if lo is not None and (x < lo or (lo_strict and x == lo)):
            return False
        if hi is not None and (x > hi or (hi_strict and x == hi)):
            return False
        return True

    if ok(Fraction(0)):
        return Fraction(0)
    if lo is not None and lo >= 0:
        cand = Fraction(lo.__floor__() + 1) if (lo_strict or lo.denominator != 1) else lo
    else:
        cand = Fraction(hi.__ceil__() - 1) if (hi_strict or hi.denominator != 1) else hi
    if ok(cand):
        return cand
    return (lo + hi) / 2


def _interval(constraints, k, x):
    lo = hi = None
    lo_s = hi_s = False
    for a, b, s in constraints:
        ck = a[k]
        rest = b - sum(a[i] * x[i] for i in range(len(a)) if i != k and a[i] and x[i] is not None)
        if ck == 0:
            continue
        val = rest / ck
        if ck > 0:
            if lo is None or val > lo:
                lo, lo_s = val, s
            elif val == lo:
                lo_s = lo_s or s
        else:
            if hi is None or val < hi:
                hi, hi_s = val, s
            elif val == hi:
                hi_s = hi_s or s
    return lo, lo_s, hi, hi_s


def rational_feasible(system: LinearSystem) -> Optional[tuple[Fraction, ...]]:
    """A rational point satisfying every constraint, or ``None`` if infeasible.

    Strict inequalities are honoured strictly.  Equalities are substituted
    away first, then the remaining inequalities go through Fourier-Motzkin
    elimination and the witness is rebuilt by back-substitution.
    """
    n = system.dim
    try:
        ineqs, subs = _substitute_equalities(system)
        order = list(range(n - 1, -1, -1))
        stages = _fm_eliminate(ineqs, order)
    except _Infeasible:
        return None
    x: list = [None] * n
    for k, cons in reversed(stages):
        lo, lo_s, hi, hi_s = _interval(cons, k, x)
        if lo is not None and hi is not None and (lo > hi or (lo == hi and (lo_s or hi_s))):
            return None  # only reachable through a bug in elimination
        x[k] = _pick(lo, lo_s, hi, hi_s)
    for j, expr, const in reversed(subs):
        x[j] = const + sum((e * x[i] for i, e in enumerate(expr) if e), Fraction(0))
    out = tuple(x)
    assert system.holds(out), "Fourier-Motzkin witness failed re-check"
    return out


def variable_bounds(system: LinearSystem, j: int):
    """Exact ``(lo, hi)`` of coordinate ``j`` over the closure of the feasible set.

    Strict inequalities are relaxed to non-strict ones.  ``None`` marks an
    unbounded side; returns ``None`` outright for an infeasible system.
    """
    ineqs = []
    for c in system.constraints:
        ineqs.append((c.coeffs, c.bound, False))
        if c.relation == EQ:
            ineqs.append((tuple(-a for a in c.coeffs), -c.bound, False))
    order = [k for k in range(system.dim) if k != j] + [j]
    try:
        stages = _fm_eliminate(ineqs, order)
    except _Infeasible:
        return None
    lo, _, hi, _ = _interval(stages[-1][1], j, [None] * system.dim)
    return lo, hi


def gcd_all(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def solve_rational(M: Sequence[Sequence], b: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Unique solution of a square nonsingular system over Q, else ``None``."""
    n = len(M)
    a = [[Fraction(x) for x in row] + [Fraction(bb)] for row, bb in zip(M, b)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return None
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return tuple(a[i][n] for i in range(n))


def primitive_integer_vector(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector by a positive factor to a primitive integer vector."""
    fr = rational_vector(v)
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = gcd_all(ints) or 1
    return tuple(i // g for i in ints)
