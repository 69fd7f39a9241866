"""Binomial ideals: term orders, Buchberger's algorithm and toric ideals.

Only binomials with coefficients ``1`` and ``-1`` ever occur, so a polynomial
is a pair of exponent vectors and reduction is monomial rewriting.  The toric
ideal is obtained from a lattice basis by saturating one variable at a time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .exactmath import dot

__all__ = [
    "Binomial",
    "TermOrder",
    "GroebnerBasis",
    "SizeGuardError",
    "compare",
    "normal_form",
    "buchberger",
    "toric_ideal_mingens",
    "saturate",
    "initial_ideal",
    "lex_order",
    "ideal_contains",
]

Monomial = tuple  # exponent vector


class SizeGuardError(RuntimeError):
    """A Gröbner computation grew past the configured element limit."""


MAX_ELEMENTS = 4000


@dataclass(frozen=True)
class Binomial:
    """``x^{u+} - x^{u-}`` for an integer vector ``u``."""

    u: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(int(x) for x in self.u))

    @classmethod
    def from_monomials(cls, a: Sequence[int], b: Sequence[int]) -> "Binomial":
        return cls(tuple(x - y for x, y in zip(a, b)))

    @property
    def plus(self) -> Monomial:
        return tuple(max(x, 0) for x in self.u)

    @property
    def minus(self) -> Monomial:
        return tuple(max(-x, 0) for x in self.u)

    def __neg__(self) -> "Binomial":
        return Binomial(tuple(-x for x in self.u))

    def canonical(self) -> "Binomial":
        """Sign-normalize so the lexicographically larger monomial comes first."""
        lead = next((x for x in self.u if x), 0)
        return -self if lead < 0 else self

    def __str__(self) -> str:
        return f"{format_monomial(self.plus)} - {format_monomial(self.minus)}"


def format_monomial(a: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(a, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class TermOrder:
    """Compare by ``weight · a``, then lexicographically in ``tiebreak`` order.

    Nonnegative weights make this a monomial order with ``1`` smallest.
    """

    weight: tuple[Fraction, ...]
    tiebreak: tuple[int, ...]

    def __init__(self, weight: Sequence, tiebreak: Optional[Sequence[int]] = None):
        w = tuple(Fraction(x) for x in weight)
        if any(x < 0 for x in w):
            raise ValueError("term order weights must be nonnegative")
        tb = tuple(range(len(w))) if tiebreak is None else tuple(tiebreak)
        if sorted(tb) != list(range(len(w))):
            raise ValueError("tiebreak must be a permutation of the variable indices")
        object.__setattr__(self, "weight", w)
        object.__setattr__(self, "tiebreak", tb)

    def key(self, a: Sequence[int]):
        return (dot(self.weight, a), tuple(a[i] for i in self.tiebreak))


def lex_order(n: int, tiebreak: Optional[Sequence[int]] = None) -> TermOrder:
    return TermOrder((0,) * n, tiebreak)


def compare(a: Sequence[int], b: Sequence[int], order: TermOrder) -> int:
    """-1, 0 or 1 as ``x^a`` is smaller than, equal to or greater than ``x^b``."""
    if len(a) != len(b):
        raise ValueError("exponent vectors of different lengths")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


@dataclass(frozen=True)
class GroebnerBasis:
    """Marked binomials ``(lead, trail)`` sorted by leading monomial."""

    elements: tuple[tuple[Monomial, Monomial], ...]
    order: TermOrder
    reduced: bool = True
    spair_reductions: int = field(default=0, compare=False)

    def leads(self) -> list[Monomial]:
        return [a for a, _ in self.elements]

    def binomials(self) -> list[Binomial]:
        """Elements as ``lead - trail`` with common factors cancelled."""
        return [Binomial.from_monomials(a, b) for a, b in self.elements]

    def reduce_monomial(self, a: Sequence[int]) -> Monomial:
        return _reduce_monomial(tuple(a), self.elements)


def _reduce_monomial(a: Monomial, elements) -> Monomial:
    changed = True
    while changed:
        changed = False
        for lead, trail in elements:
            if _divides(lead, a):
                a = tuple(x - l + t for x, l, t in zip(a, lead, trail))
                changed = True
                break
    return a


def _as_pair(b) -> tuple[Monomial, Monomial]:
    if isinstance(b, Binomial):
        return b.plus, b.minus
    a, c = b
    return tuple(a), tuple(c)


def _orient(a, b, order: TermOrder):
    return (a, b) if order.key(a) > order.key(b) else (b, a)


def normal_form(b: Union[Binomial, tuple], G: GroebnerBasis) -> Optional[Binomial]:
    """Reduce both monomials of ``b`` modulo ``G``; ``None`` means zero."""
    a, c = _as_pair(b)
    na, nc = G.reduce_monomial(a), G.reduce_monomial(c)
    if na == nc:
        return None
    return Binomial.from_monomials(na, nc)


def _groebner(pairs: Iterable, order: TermOrder, max_elements: int = MAX_ELEMENTS) -> GroebnerBasis:
    G: list = []
    for a, c in pairs:
        if a != c:
            G.append(_orient(a, c, order))
    queue = [(i, j) for j in range(len(G)) for i in range(j)]
    reductions = 0
    while queue:
        i, j = queue.pop(0)
        (la, ta), (lb, tb) = G[i], G[j]
        if _coprime(la, lb):
            continue
        lcm = tuple(max(x, y) for x, y in zip(la, lb))
        s1 = tuple(l - x + t for l, x, t in zip(lcm, la, ta))
        s2 = tuple(l - x + t for l, x, t in zip(lcm, lb, tb))
        reductions += 1
        r1, r2 = _reduce_monomial(s1, G), _reduce_monomial(s2, G)
        if r1 == r2:
            continue
        G.append(_orient(r1, r2, order))
        if len(G) > max_elements:
            raise SizeGuardError(f"Gröbner basis exceeded {max_elements} elements")
        k = len(G) - 1
        queue.extend((i, k) for i in range(k))
    # minimalize: drop elements whose lead is divisible by another lead
    keep = []
    for idx, (lead, trail) in enumerate(G):
        if any(
            _divides(G[o][0], lead) and (G[o][0] != lead or o < idx)
            for o in range(len(G)) if o != idx
        ):
            continue
        keep.append((lead, trail))
    out = []
    for idx, (lead, trail) in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        out.append((lead, _reduce_monomial(trail, others)))
    out.sort(key=lambda e: order.key(e[0]))
    return GroebnerBasis(tuple(out), order, True, reductions)


def buchberger(gens: Sequence, order: TermOrder) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by binomials ``gens``.

    S-pairs with coprime leading monomials are skipped (Buchberger's first
    criterion).  ``spair_reductions`` counts the S-pairs actually reduced.
    """
    return _groebner([_as_pair(g) for g in gens], order)


def ideal_contains(gens: Sequence, b, order: Optional[TermOrder] = None) -> bool:
    pairs = [_as_pair(g) for g in gens]
    a, c = _as_pair(b)
    if order is None:
        order = lex_order(len(a))
    if not pairs:
        return a == c
    return normal_form((a, c), _groebner(pairs, order)) is None


def _positive_degrees(degrees: Sequence) -> tuple[int, ...]:
    """Scale positive rational degrees to positive integers."""
    fr = [Fraction(x) for x in degrees]
    den = 1
    for x in fr:
        den = den * x.denominator
    return tuple(int(x * den) for x in fr)


def saturate(gens: Sequence, degrees: Sequence) -> GroebnerBasis:
    """Gröbner basis of ``<gens> : (x_1 ⋯ x_n)^∞`` for homogeneous binomials.

    For each variable ``x_i`` take a Gröbner basis under an order that, within
    a degree, prefers monomials with fewer ``x_i``; then ``x_i`` divides a
    leading term only if it divides the whole binomial, and dividing out the
    common power of ``x_i`` saturates with respect to ``x_i``.
    """
    deg = _positive_degrees(degrees)
    n = len(deg)
    pairs = [_as_pair(g) for g in gens]
    G = None
    for i in range(n):
        w = [2 * x for x in deg]
        w[i] -= 1
        G = _groebner(pairs, TermOrder(w))
        pairs = []
        for a, c in G.elements:
            k = min(a[i], c[i])
            if k:
                a = a[:i] + (a[i] - k,) + a[i + 1:]
                c = c[:i] + (c[i] - k,) + c[i + 1:]
            pairs.append((a, c))
    return _groebner(pairs, TermOrder(deg))


def toric_ideal_mingens(config, basis: Optional[Sequence[Sequence[int]]] = None) -> list[Binomial]:
    """A minimal binomial generating set of the toric ideal of ``config``.

    ``basis`` overrides the lattice basis of ``ker(A) ∩ Z^n`` used as seed.
    Generators are sign-normalized with :meth:`Binomial.canonical` and listed
    by degree, then in decreasing lexicographic order of their vectors.
    """
    degs = config.degrees
    if basis is None:
        basis = config.gale().basis()
    if not basis:
        return []
    sat = saturate([Binomial(tuple(b)) for b in basis], degs)
    cands = {Binomial.from_monomials(a, c).canonical() for a, c in sat.elements}
    cands = sorted(cands, key=lambda b: (dot(degs, b.plus), tuple(-x for x in b.u)))
    order = TermOrder(_positive_degrees(degs))
    kept: list[Binomial] = []
    for b in cands:
        if kept and ideal_contains(kept, b, order):
            continue
        kept.append(b)
    return kept


def initial_ideal(G: GroebnerBasis) -> tuple[list[Monomial], bool]:
    """Leading monomials of a reduced basis and whether all are squarefree."""
    leads = G.leads()
    return leads, all(e <= 1 for a in leads for e in a)
