"""Kernel polytopes and lattice covering.

For a Gale basis with rows ``b_i`` the open polytope
``Q0 = {y : b_i · y > -1}`` tiles space under integer translations exactly
when the configuration is normal.  This module builds ``Q0`` (and the shifted
``Q_v``, ``P_z``), decides the covering question exactly in dimensions one
and two, and brackets the covering radius of the closure by bisection.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from .exactmath import Constraint, LinearSystem, dot, rational_feasible, variable_bounds
from .gale import GaleDiagram

__all__ = [
    "Facet",
    "RationalPolytope",
    "CoveringVerdict",
    "UnsupportedDimensionError",
    "UnboundedPolytopeError",
    "DegeneratePolytopeError",
    "q_zero",
    "q_v",
    "p_z_contains",
    "translate_polytope",
    "scale_polytope",
    "covers_space",
    "covering_radius_bounds",
    "unit_cube",
]


class UnsupportedDimensionError(ValueError):
    pass


class UnboundedPolytopeError(ValueError):
    pass


class DegeneratePolytopeError(ValueError):
    pass


@dataclass(frozen=True)
class Facet:
    """The half-space ``normal · y > bound`` (strict) or ``>= bound``."""

    normal: tuple[int, ...]
    bound: Fraction
    strict: bool = True

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(self.normal))
        object.__setattr__(self, "bound", Fraction(self.bound))

    def holds(self, y: Sequence) -> bool:
        lhs = dot(self.normal, y)
        return lhs > self.bound if self.strict else lhs >= self.bound


@dataclass(frozen=True)
class RationalPolytope:
    dim: int
    facets: tuple[Facet, ...]

    def __post_init__(self):
        object.__setattr__(self, "facets", tuple(self.facets))
        if any(len(f.normal) != self.dim for f in self.facets):
            raise ValueError("facet normal has the wrong dimension")

    def contains(self, y: Sequence) -> bool:
        return all(f.holds(y) for f in self.facets)

    def system(self) -> LinearSystem:
        return LinearSystem(
            (Constraint(f.normal, f.bound, ">" if f.strict else ">=") for f in self.facets),
            dim=self.dim,
        )

    @cached_property
    def bbox(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """Exact coordinate ranges of the closure; raises if unbounded or empty."""
        out = []
        system = self.system()
        for k in range(self.dim):
            b = variable_bounds(system, k)
            if b is None:
                raise DegeneratePolytopeError("polytope is empty")
            if b[0] is None or b[1] is None:
                raise UnboundedPolytopeError(f"coordinate {k} is unbounded")
            out.append(b)
        return tuple(out)

    def closure(self) -> "RationalPolytope":
        return RationalPolytope(self.dim, tuple(Facet(f.normal, f.bound, False) for f in self.facets))

    def has_interior(self) -> bool:
        opened = LinearSystem((Constraint(f.normal, f.bound, ">") for f in self.facets), dim=self.dim)
        return rational_feasible(opened) is not None


@dataclass(frozen=True)
class CoveringVerdict:
    covers: bool
    uncovered_witness: Optional[tuple[Fraction, ...]] = None


def q_v(G: GaleDiagram, v: Sequence[int]) -> RationalPolytope:
    """``{y : b_i · y > b_i · v - 1}`` for the Gale rows ``b_i``."""
    facets = tuple(Facet(b, dot(b, v) - 1, True) for b in G.points)
    Q = RationalPolytope(G.m, facets)
    try:
        Q.bbox
    except UnboundedPolytopeError as exc:
        raise UnboundedPolytopeError("kernel polytope is unbounded; is C(A) pointed?") from exc
    return Q


def q_zero(G: GaleDiagram) -> RationalPolytope:
    return q_v(G, (0,) * G.m)


def p_z_contains(z: Sequence[int], x: Sequence) -> bool:
    """Membership of a kernel vector ``x`` in ``P_z``: ``ceil(x_i) >= z_i`` for all ``i``."""
    return all(Fraction(xi) > zi - 1 for xi, zi in zip(x, z))


def translate_polytope(Q: RationalPolytope, w: Sequence) -> RationalPolytope:
    if len(w) != Q.dim:
        raise ValueError("dimension mismatch")
    return RationalPolytope(Q.dim, tuple(Facet(f.normal, f.bound + dot(f.normal, w), f.strict) for f in Q.facets))


def scale_polytope(Q: RationalPolytope, t) -> RationalPolytope:
    """The dilate ``t · Q`` about the origin, ``t > 0``."""
    t = Fraction(t)
    if t <= 0:
        raise ValueError("dilation factor must be positive")
    return RationalPolytope(Q.dim, tuple(Facet(f.normal, f.bound * t, f.strict) for f in Q.facets))


def unit_cube(m: int, strict: bool = False) -> RationalPolytope:
    facets = []
    for k in range(m):
        e = tuple(int(i == k) for i in range(m))
        facets.append(Facet(e, 0, strict))
        facets.append(Facet(tuple(-x for x in e), -1, strict))
    return RationalPolytope(m, tuple(facets))


def _translates(Q: RationalPolytope):
    """Integer shifts ``v`` whose translate ``v + closure(Q)`` can meet the unit cell."""
    ranges = [range(math.ceil(-hi), math.floor(1 - lo) + 1) for lo, hi in Q.bbox]
    return list(itertools.product(*ranges))


def _covered(Q: RationalPolytope, y: Sequence[Fraction]) -> bool:
    ranges = [
        range(math.ceil(yk - hi), math.floor(yk - lo) + 1)
        for yk, (lo, hi) in zip(y, Q.bbox)
    ]
    for v in itertools.product(*ranges):
        if Q.contains(tuple(yk - vk for yk, vk in zip(y, v))):
            return True
    return False


def _representatives_1d(Q: RationalPolytope) -> list[tuple[Fraction]]:
    cuts = {Fraction(0), Fraction(1)}
    for (v,) in _translates(Q):
        for f in Q.facets:
            (b,) = f.normal
            if b:
                p = (f.bound + b * v) / b
                if 0 <= p <= 1:
                    cuts.add(p)
    pts = sorted(cuts)
    reps = list(pts) + [(a + b) / 2 for a, b in zip(pts, pts[1:])]
    return [(p,) for p in reps]


def _line_key(a1, a2, c):
    lead = a1 if a1 else a2
    return (Fraction(a1) / lead, Fraction(a2) / lead, Fraction(c) / lead)


def _in_cell(p) -> bool:
    return all(0 <= x <= 1 for x in p)


def _representatives_2d(Q: RationalPolytope) -> list[tuple[Fraction, Fraction]]:
    """One exact point on every face of the arrangement clipped to the unit cell.

    Faces are vertices, edges between consecutive vertices on a line, and
    2-cells; membership in each translate of ``Q`` is constant on a face.
    """
    lines = {_line_key(1, 0, 0), _line_key(1, 0, 1), _line_key(0, 1, 0), _line_key(0, 1, 1)}
    for v in _translates(Q):
        for f in Q.facets:
            b1, b2 = f.normal
            if b1 or b2:
                lines.add(_line_key(b1, b2, f.bound + b1 * v[0] + b2 * v[1]))
    lines = sorted(lines)
    on_line = {ln: set() for ln in lines}
    vertices = set()
    for L1, L2 in itertools.combinations(lines, 2):
        a1, a2, c = L1
        b1, b2, e = L2
        det = a1 * b2 - a2 * b1
        if det == 0:
            continue
        p = ((c * b2 - a2 * e) / det, (a1 * e - c * b1) / det)
        if _in_cell(p):
            vertices.add(p)
            on_line[L1].add(p)
            on_line[L2].add(p)
    edges = set()
    for ln, pts in on_line.items():
        pts = sorted(pts)
        for p, q in zip(pts, pts[1:]):
            edges.add(((p[0] + q[0]) / 2, (p[1] + q[1]) / 2))
    cells = set()
    xs = sorted({p[0] for p in vertices})
    for x0, x1 in zip(xs, xs[1:]):
        xm = (x0 + x1) / 2
        ys = sorted({(c - a1 * xm) / a2 for a1, a2, c in lines if a2 and 0 <= (c - a1 * xm) / a2 <= 1})
        for y0, y1 in zip(ys, ys[1:]):
            cells.add((xm, (y0 + y1) / 2))
    return sorted(vertices) + sorted(edges - vertices) + sorted(cells)


def covers_space(Q: RationalPolytope) -> CoveringVerdict:
    """Exact decision whether the integer translates of ``Q`` cover ``R^m``, ``m <= 2``.

    It is enough to cover the closed unit cell.  Strictness of each facet is
    honoured, so open polytopes that only touch along a boundary are
    correctly reported as failing to cover.
    """
    if Q.dim == 0:
        return CoveringVerdict(True, None)
    if Q.dim == 1:
        reps = _representatives_1d(Q)
    elif Q.dim == 2:
        reps = _representatives_2d(Q)
    else:
        raise UnsupportedDimensionError(f"covering decision is implemented for m <= 2, got m = {Q.dim}")
    for y in reps:
        if not _covered(Q, y):
            return CoveringVerdict(False, y)
    return CoveringVerdict(True, None)


def covering_radius_bounds(Q: RationalPolytope, tolerance=Fraction(1, 64)) -> tuple[Fraction, Fraction]:
    """Bracket ``(lo, hi)`` of the covering radius of ``closure(Q)`` with ``hi - lo <= tolerance``.

    The covering property of ``t · Q`` is monotone in ``t`` for convex ``Q``,
    so bisection on ``t`` is sound; ``lo`` never covers, ``hi`` always does.
    """
    tolerance = Fraction(tolerance)
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    if Q.dim > 2:
        raise UnsupportedDimensionError(f"covering radius is implemented for m <= 2, got m = {Q.dim}")
    closed = Q.closure()
    if not Q.has_interior():
        raise DegeneratePolytopeError("polytope has empty interior")

    def probe(t):
        return covers_space(scale_polytope(closed, t)).covers

    lo, hi = Fraction(0), Fraction(1)
    while not probe(hi):
        lo, hi = hi, hi * 2
        if hi > 2**40:
            raise DegeneratePolytopeError("no covering dilate found")
    while hi - lo > tolerance:
        mid = (lo + hi) / 2
        if probe(mid):
            hi = mid
        else:
            lo = mid
    return lo, hi
