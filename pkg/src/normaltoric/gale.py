"""Gale diagrams of integer configurations.

A Gale diagram of ``A`` is a lattice basis of ``ker(A) ∩ Z^n`` read row-wise:
the ``j``-th point is the ``j``-th coordinate of every basis vector.  For
codimension two the points live in the plane and carry sign-class labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .exactmath import (
    IntegerMatrix,
    RankDeficientError,
    _hnf_lists,
    dot,
    smith_index,
)

__all__ = [
    "GaleDiagram",
    "gale_diagram",
    "canonical_kernel_basis",
    "sign_class",
    "sign_classes",
    "quadrants_hit",
    "is_imbalanced",
    "signed_swaps",
    "find_imbalanced_basis",
    "SIGN_CLASSES",
]

SIGN_CLASSES = ("A", "B1", "B2", "C", "D", "E", "F1", "F2", "G", "Zero")


@dataclass(frozen=True)
class GaleDiagram:
    """``n`` points in ``Z^m``; ``points[j]`` belongs to column ``j`` of ``source``."""

    m: int
    points: tuple[tuple[int, ...], ...]
    source: Optional[IntegerMatrix] = None

    @property
    def n(self) -> int:
        return len(self.points)

    def basis(self) -> list[tuple[int, ...]]:
        """The kernel basis vectors (columns of the stacked ``n × m`` matrix)."""
        return [tuple(p[k] for p in self.points) for k in range(self.m)]

    def matrix(self) -> IntegerMatrix:
        return IntegerMatrix(self.points, ncols=self.m)

    def kernel_vector(self, coeffs: Sequence) -> tuple:
        """``B @ coeffs``: the kernel element with the given basis coordinates."""
        return tuple(dot(p, coeffs) for p in self.points)

    def transform(self, T: Sequence[Sequence[int]]) -> "GaleDiagram":
        """Apply a linear map ``T`` (as ``m × m`` rows) to every point."""
        pts = tuple(tuple(dot(row, p) for row in T) for p in self.points)
        return GaleDiagram(self.m, pts, self.source)

    def check(self) -> None:
        """Re-verify ``A·B = 0`` and saturation exactly; raise on failure."""
        if self.source is None:
            raise ValueError("diagram has no source configuration")
        for row in self.source.entries:
            for b in self.basis():
                if dot(row, b) != 0:
                    raise ValueError("Gale point set is not in the kernel")
        if self.m and smith_index(self.matrix()) != 1:
            raise ValueError("Gale basis spans a proper sublattice of the kernel")


def canonical_kernel_basis(vectors: Sequence[Sequence[int]], n: int) -> list[tuple[int, ...]]:
    """Row Hermite form of a kernel basis: a unique representative per lattice."""
    if not vectors:
        return []
    # row HNF of V equals the transpose of the column HNF of V^T
    H, _, pivots = _hnf_lists([list(col) for col in zip(*vectors)], len(vectors))
    if len(pivots) < len(vectors):
        raise RankDeficientError("kernel vectors are linearly dependent")
    return [tuple(H[i][j] for i in range(n)) for j in range(len(vectors))]


def gale_diagram(A: IntegerMatrix) -> GaleDiagram:
    """The canonical Gale diagram of a full-row-rank matrix ``A``."""
    H, U, pivots = _hnf_lists(A.entries, A.ncols)
    d, n = A.shape
    if len(pivots) < d:
        raise RankDeficientError(f"matrix has rank {len(pivots)} < {d} rows")
    kernel = [tuple(U[i][j] for i in range(n)) for j in range(d, n)]
    basis = canonical_kernel_basis(kernel, n)
    points = tuple(tuple(b[j] for b in basis) for j in range(n))
    return GaleDiagram(n - d, points, A)


def _need_planar(G: GaleDiagram) -> None:
    if G.m != 2:
        raise ValueError(f"operation needs a planar Gale diagram, got m = {G.m}")


def sign_class(point: Sequence[int]) -> str:
    s, t = point
    if s == 0 and t == 0:
        return "Zero"
    if t == 0:
        return "A" if s > 0 else "E"
    if s == 0:
        return "C" if t > 0 else "G"
    if s < 0 < t:
        return "D"
    if s > 0 and t > 0:
        return "B1" if s >= t else "B2"
    if s < 0 and t < 0:
        return "F2" if s >= t else "F1"
    return "H"  # open fourth quadrant: absent from normal diagrams in standard position


def sign_classes(G: GaleDiagram) -> list[str]:
    """Label each point by its sign class.

    Points in the open fourth quadrant get the extra label ``"H"``; diagrams
    of the shape studied here avoid that quadrant after a suitable basis
    change, but arbitrary bases do not.
    """
    _need_planar(G)
    return [sign_class(p) for p in G.points]


def quadrants_hit(G: GaleDiagram) -> frozenset:
    _need_planar(G)
    hit = set()
    for s, t in G.points:
        if s > 0 and t > 0:
            hit.add("Q1")
        elif s < 0 and t > 0:
            hit.add("Q2")
        elif s < 0 and t < 0:
            hit.add("Q3")
        elif s > 0 and t < 0:
            hit.add("Q4")
    return frozenset(hit)


def is_imbalanced(G: GaleDiagram) -> bool:
    _need_planar(G)
    return all(s == 0 or t >= 0 for s, t in G.points)


def signed_swaps() -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """The eight signed permutation matrices of the plane, identity first."""
    out = []
    for swap in (False, True):
        for e1 in (1, -1):
            for e2 in (1, -1):
                if swap:
                    out.append(((0, e1), (e2, 0)))
                else:
                    out.append(((e1, 0), (0, e2)))
    return out


def _shears(bound: int):
    yield ((1, 0), (0, 1))
    for k in range(1, bound + 1):
        for kk in (k, -k):
            yield ((1, kk), (0, 1))
            yield ((1, 0), (kk, 1))


def _compose(S, T):
    return tuple(tuple(sum(S[i][k] * T[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def find_imbalanced_basis(G: GaleDiagram, shear_bound: int = 5) -> Optional[GaleDiagram]:
    """Search signed swaps composed with one bounded shear for an imbalanced diagram.

    Returns the first hit in a fixed enumeration order (the identity first).
    ``None`` only means the bounded search came up empty.
    """
    _need_planar(G)
    for shear in _shears(shear_bound):
        for swap in signed_swaps():
            H = G.transform(_compose(swap, shear))
            if is_imbalanced(H):
                return H
    return None


def unimodular_transforms(bound: int):
    """Products of an upper and a lower elementary shear, coefficients within ``bound``."""
    seen = set()
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            for T in (_compose(((1, a), (0, 1)), ((1, 0), (b, 1))),
                      _compose(((1, 0), (b, 1)), ((1, a), (0, 1)))):
                if T not in seen:
                    seen.add(T)
                    yield T


def find_four_quadrant_basis(G: GaleDiagram, bound: int = 3) -> Optional[GaleDiagram]:
    """Bounded search for a basis change after which all four open quadrants are hit."""
    _need_planar(G)
    for T in unimodular_transforms(bound):
        H = G.transform(T)
        if len(quadrants_hit(H)) == 4:
            return H
    return None
