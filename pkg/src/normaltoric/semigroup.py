"""Cones, lattices and semigroups of a nonnegative configuration.

The normality oracle here is the ground truth for the whole package: it
checks ``C(A) ∩ ZA = NA`` directly, by finding every lattice point of
``C(A)`` that is not accounted for by integer multiples of the columns.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .exactmath import (
    Constraint,
    IntegerMatrix,
    LinearSystem,
    RankDeficientError,
    determinant,
    dot,
    matrix_rank,
    primitive_integer_vector,
    rational_feasible,
    solve_diophantine,
    solve_rational,
    variable_bounds,
)
from .gale import GaleDiagram, gale_diagram

__all__ = [
    "NotPointedError",
    "Configuration",
    "NormalityCertificate",
    "is_pointed",
    "in_lattice",
    "in_semigroup",
    "in_cone",
    "normality_oracle",
    "hilbert_kernel_check",
    "ceil_vector",
]


class NotPointedError(ValueError):
    """The cone spanned by the columns contains a line (or a zero column)."""


def _as_matrix(A) -> IntegerMatrix:
    return A if isinstance(A, IntegerMatrix) else IntegerMatrix(A)


def is_pointed(A) -> Optional[tuple[int, ...]]:
    """A grading ``c`` with ``c · a_j > 0`` for every column, or ``None``.

    The returned vector is scaled to a primitive integer vector.
    """
    A = _as_matrix(A)
    system = LinearSystem((Constraint(col, 0, ">") for col in A.columns()), dim=A.nrows)
    c = rational_feasible(system)
    if c is None:
        return None
    return primitive_integer_vector(c)


@dataclass(frozen=True)
class Configuration:
    """A nonnegative ``d × n`` integer matrix of rank ``d`` spanning a pointed cone."""

    A: IntegerMatrix
    grading: Optional[tuple[int, ...]] = None
    _gale: list = field(default_factory=list, repr=False, compare=False)

    def __init__(self, A, grading=None):
        A = _as_matrix(A)
        if any(x < 0 for row in A.entries for x in row):
            raise ValueError("configuration entries must be nonnegative")
        if matrix_rank(A) != A.nrows:
            raise RankDeficientError("configuration must have full row rank")
        if grading is None:
            grading = is_pointed(A)
            if grading is None:
                raise NotPointedError("cone C(A) is not pointed")
        else:
            grading = tuple(grading)
            if any(dot(grading, col) <= 0 for col in A.columns()):
                raise NotPointedError("grading is not positive on every column")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "grading", grading)
        object.__setattr__(self, "_gale", [])

    @property
    def d(self) -> int:
        return self.A.nrows

    @property
    def n(self) -> int:
        return self.A.ncols

    @property
    def codim(self) -> int:
        return self.n - self.d

    @property
    def degrees(self) -> tuple:
        """Degree of every column under the grading."""
        return tuple(dot(self.grading, col) for col in self.A.columns())

    def degree(self, z: Sequence[int]):
        return dot(self.grading, z)

    def gale(self) -> GaleDiagram:
        if not self._gale:
            self._gale.append(gale_diagram(self.A))
        return self._gale[0]


@dataclass(frozen=True)
class NormalityCertificate:
    verdict: bool
    witness: Optional[tuple[int, ...]] = None
    method: str = "parallelepiped"


def _config(A) -> Configuration:
    return A if isinstance(A, Configuration) else Configuration(A)


def in_lattice(A, z: Sequence[int]) -> bool:
    A = A.A if isinstance(A, Configuration) else _as_matrix(A)
    return solve_diophantine(A, z) is not None


def in_cone(A, z: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Nonnegative rational coefficients ``r`` with ``A r = z``, if any."""
    A = A.A if isinstance(A, Configuration) else _as_matrix(A)
    if len(z) != A.nrows:
        raise ValueError("dimension mismatch")
    n = A.ncols
    cons = [Constraint(row, zi, "=") for row, zi in zip(A.entries, z)]
    cons += [Constraint(tuple(int(i == j) for i in range(n)), 0, ">=") for j in range(n)]
    return rational_feasible(LinearSystem(cons, dim=n))


def in_semigroup(A, z: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Nonnegative integer ``m`` with ``A m = z``, or ``None``.

    Depth-first over the columns in decreasing degree, memoized on the
    residual.  Since every entry of ``A`` is nonnegative the residual must
    stay componentwise nonnegative, which bounds each multiplicity.
    """
    cfg = _config(A)
    z = tuple(z)
    if len(z) != cfg.d:
        raise ValueError("dimension mismatch")
    cols = cfg.A.columns()
    degs = cfg.degrees
    order = sorted(range(cfg.n), key=lambda j: (-degs[j], j))

    @lru_cache(maxsize=None)
    def search(k: int, r: tuple) -> Optional[tuple]:
        if not any(r):
            return ()
        if k == len(order):
            return None
        j = order[k]
        col = cols[j]
        top = min((ri // ci for ri, ci in zip(r, col) if ci), default=0)
        for mult in range(top, -1, -1):
            rest = tuple(ri - mult * ci for ri, ci in zip(r, col))
            sub = search(k + 1, rest)
            if sub is not None:
                return ((j, mult),) + sub
        return None

    if any(x < 0 for x in z):
        return None
    found = search(0, z)
    if found is None:
        return None
    m = [0] * cfg.n
    for j, mult in found:
        m[j] = mult
    return tuple(m)


def _parallelepiped_points(A: IntegerMatrix, sigma: Sequence[int]) -> set:
    """Lattice points of ``ZA`` in the half-open parallelepiped of the columns ``sigma``.

    They are the coset representatives of ``ZA / Z A_sigma``; we walk that
    finite group by adding columns of ``A`` and wrapping the coordinates
    with respect to ``A_sigma`` into ``[0, 1)``.
    """
    d = A.nrows
    basis_rows = [[A[i][j] for j in sigma] for i in range(d)]
    gens = []
    for col in A.columns():
        lam = solve_rational(basis_rows, col)
        frac = tuple(x - math.floor(x) for x in lam)
        if any(frac):
            gens.append(frac)
    zero = tuple(Fraction(0) for _ in range(d))
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for lam in frontier:
            for g in gens:
                s = tuple((a + b) - math.floor(a + b) for a, b in zip(lam, g))
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    points = set()
    for lam in seen:
        z = tuple(sum(basis_rows[i][k] * lam[k] for k in range(d)) for i in range(d))
        points.add(tuple(int(x) for x in z))
    return points


def normality_oracle(A) -> NormalityCertificate:
    """Decide ``C(A) ∩ ZA = NA`` by brute force.

    Every cone point splits as an integer combination of ``d`` independent
    columns plus a remainder in their half-open parallelepiped, so testing
    the parallelepiped lattice points of every independent ``d``-subset
    suffices.  The reported witness is the failing point of least degree
    (ties broken lexicographically).
    """
    cfg = _config(A)
    M = cfg.A
    candidates = set()
    for sigma in itertools.combinations(range(cfg.n), cfg.d):
        if determinant([[M[i][j] for j in sigma] for i in range(cfg.d)]) == 0:
            continue
        candidates |= _parallelepiped_points(M, sigma)
    for z in sorted(candidates, key=lambda z: (cfg.degree(z), z)):
        if in_semigroup(cfg, z) is None:
            return NormalityCertificate(False, z, "parallelepiped")
    return NormalityCertificate(True, None, "parallelepiped")


def ceil_vector(x: Sequence) -> tuple[int, ...]:
    return tuple(math.ceil(Fraction(v)) for v in x)


def _lattice_points_below(G: GaleDiagram, c: Sequence[int]):
    """Integer ``v`` with ``B v <= c``, in lexicographic order (bounded polytope)."""
    m = G.m
    system = LinearSystem(
        (Constraint(tuple(-x for x in p), -ci, ">=") for p, ci in zip(G.points, c) if any(p)),
        dim=m,
    )
    if any(not any(p) and ci < 0 for p, ci in zip(G.points, c)):
        return
    ranges = []
    for k in range(m):
        b = variable_bounds(system, k)
        if b is None:
            return
        lo, hi = b
        if lo is None or hi is None:
            raise NotPointedError("kernel polytope is unbounded")
        ranges.append(range(math.ceil(lo), math.floor(hi) + 1))
    for v in itertools.product(*ranges):
        if all(dot(p, v) <= ci for p, ci in zip(G.points, c)):
            yield v


def hilbert_kernel_check(G: GaleDiagram, x: Sequence) -> Optional[tuple[int, ...]]:
    """An integer kernel vector ``y <= ceil(x)``, or ``None`` if there is none.

    ``x`` must be a rational vector in ``ker(A)``; ``G.source`` is ``A``.
    """
    x = tuple(Fraction(v) for v in x)
    if G.source is not None:
        if len(x) != G.source.ncols:
            raise ValueError("dimension mismatch")
        if any(dot(row, x) != 0 for row in G.source.entries):
            raise ValueError("vector is not in ker(A)")
    c = ceil_vector(x)
    if G.source is not None and all(dot(row, c) == 0 for row in G.source.entries):
        return c
    for v in _lattice_points_below(G, c):
        return G.kernel_vector(v)
    return None
