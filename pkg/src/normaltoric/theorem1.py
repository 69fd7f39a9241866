"""Squarefree term orders for normal toric ideals of codimension at most two.

The main entry point is :func:`verify_theorem1`: decide normality, compute
minimal generators, classify the codimension-two case by generator count,
and search for a term order whose reduced Gröbner basis has squarefree
leading monomials and minimally generates the toric ideal.  The search is
exhaustive over the choices of squarefree leader per generator, so failure
on a normal input is a genuine counterexample and is raised, not returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .binomial import (
    Binomial,
    GroebnerBasis,
    TermOrder,
    buchberger,
    initial_ideal,
    toric_ideal_mingens,
)
from .exactmath import Constraint, LinearSystem, dot, primitive_integer_vector, rational_feasible
from .gale import (
    GaleDiagram,
    _compose,
    find_four_quadrant_basis,
    sign_classes,
    signed_swaps,
    unimodular_transforms,
)
from .kernelgeom import covers_space, q_zero
from .semigroup import Configuration, normality_oracle

__all__ = [
    "Codim2Class",
    "Theorem1Report",
    "TheoremViolation",
    "MethodDisagreement",
    "UnsupportedCodimensionError",
    "HILBERT_BURCH_MINORS",
    "squarefree_terms",
    "classify_codim2",
    "find_squarefree_order",
    "validate_hilbert_burch_pattern",
    "ci_proof_fixture",
    "decide_normal",
    "verify_theorem1",
]


class TheoremViolation(AssertionError):
    """A normal codimension-two input without a squarefree Gröbner basis."""


class MethodDisagreement(AssertionError):
    """The covering decision and the semigroup oracle disagree."""


class UnsupportedCodimensionError(ValueError):
    pass


# Supports of the three 2x2 minors of the Hilbert-Burch matrix
#   [[A B1, D* E* F1*], [B2 C D, F2* G*], [F1 F2, B1* B2*]]
# as (first term classes, second term classes); starred letters share a class.
HILBERT_BURCH_MINORS = (
    (frozenset({"A", "B1", "F2", "G"}), frozenset({"B2", "C", "D", "E", "F1"})),
    (frozenset({"A", "B1", "B2"}), frozenset({"D", "E", "F1", "F2"})),
    (frozenset({"B1", "B2", "C", "D"}), frozenset({"F1", "F2", "G"})),
)

CLASS_TAGS = {2: "CompleteIntersection", 3: "CohenMacaulayThree"}


@dataclass(frozen=True)
class Codim2Class:
    tag: str
    mingen_count: int
    four_quadrant_basis: Optional[GaleDiagram] = field(default=None, compare=False)

    @property
    def consistent(self) -> bool:
        """A four-quadrant Gale basis forces at least four generators."""
        return self.four_quadrant_basis is None or self.mingen_count >= 4


@dataclass(frozen=True)
class Theorem1Report:
    normal: bool
    codim: int
    mingens: tuple[Binomial, ...] = ()
    codim2_class: Optional[Codim2Class] = None
    order: Optional[TermOrder] = None
    groebner: Optional[GroebnerBasis] = None
    selection: Optional[tuple[str, ...]] = None
    squarefree: bool = False
    gb_equals_mingens: bool = False  # reduced GB minimally generates the ideal
    gb_literal_match: bool = False  # ... and equals the computed mingens up to sign
    pattern_match: Optional[bool] = None
    witness: Optional[tuple] = None


def squarefree_terms(b: Binomial) -> frozenset:
    """The sides (``"plus"``/``"minus"``) of ``b`` with all exponents at most one."""
    out = set()
    if all(e <= 1 for e in b.plus):
        out.add("plus")
    if all(e <= 1 for e in b.minus):
        out.add("minus")
    return frozenset(out)


def classify_codim2(config: Configuration, mingens: Optional[Sequence[Binomial]] = None,
                    search_bound: int = 3) -> Codim2Class:
    if config.codim != 2:
        raise UnsupportedCodimensionError(f"expected codimension 2, got {config.codim}")
    if mingens is None:
        mingens = toric_ideal_mingens(config)
    count = len(mingens)
    tag = CLASS_TAGS.get(count, "NotCohenMacaulay")
    four = find_four_quadrant_basis(config.gale(), search_bound)
    return Codim2Class(tag, count, four)


def _homogenize(w: Sequence[Fraction], degrees: Sequence) -> tuple[int, ...]:
    """Shift ``w`` along the grading until it is nonnegative, then clear denominators.

    On homogeneous binomials adding a multiple of the degree vector changes
    no comparison, and positive rescaling changes none either.
    """
    lam = max([Fraction(0)] + [-Fraction(x) / dg for x, dg in zip(w, degrees)])
    shifted = [Fraction(x) + lam * dg for x, dg in zip(w, degrees)]
    if not any(shifted):
        return tuple(1 for _ in shifted)
    return primitive_integer_vector(shifted)


def find_squarefree_order(mingens: Sequence[Binomial], config: Configuration):
    """First term order whose reduced GB is squarefree and minimally generates the ideal.

    A reduced basis of a graded ideal generates minimally iff it has as many
    elements as ``mingens``; it need not coincide with ``mingens`` itself,
    since minimal generating sets are not unique (``x2 - x1*x3`` versus
    ``x2 - x1^3`` for ``A = [[1, 3, 2]]``).  Among accepted orders, one whose
    basis literally equals ``mingens`` is preferred.

    Returns ``(order, groebner, selection)`` or ``None``.  Selections are
    tried in a fixed order: generator by generator, ``"plus"`` before
    ``"minus"``.  A selection whose leaders multiply to the product of the
    trailing terms yields an infeasible strict system and is skipped.
    """
    mingens = list(mingens)
    n = config.n
    sides = []
    for g in mingens:
        sq = squarefree_terms(g)
        if not sq:
            return None
        sides.append(sorted(sq, reverse=True))  # "plus" first
    target = {g.canonical() for g in mingens}
    fallback = None
    for selection in itertools.product(*sides):
        diffs = [g.u if s == "plus" else tuple(-x for x in g.u) for g, s in zip(mingens, selection)]
        system = LinearSystem((Constraint(dvec, 0, ">") for dvec in diffs), dim=n)
        w = rational_feasible(system)
        if w is None:
            continue
        order = TermOrder(_homogenize(w, config.degrees))
        G = buchberger(mingens, order)
        _, squarefree = initial_ideal(G)
        if not squarefree or len(G.elements) != len(mingens):
            continue
        if {b.canonical() for b in G.binomials()} == target:
            return order, G, tuple(selection)
        if fallback is None:
            fallback = (order, G, tuple(selection))
    return fallback


def _check_kernel(mingens: Sequence[Binomial], G: GaleDiagram) -> None:
    if G.source is None:
        return
    for g in mingens:
        if any(dot(row, g.u) != 0 for row in G.source.entries):
            raise ValueError(f"{g} is not in the toric ideal of the source matrix")


def validate_hilbert_burch_pattern(mingens: Sequence[Binomial], G: GaleDiagram, basis_bound: int = 6) -> bool:
    """Do the three generators fit the minors of the Hilbert-Burch matrix?

    Tries every signed swap composed with a bounded basis change of ``G``,
    every matching of generators to minors and every orientation, and checks
    that each monomial's support lies in the prescribed union of sign
    classes.  Exponents are not compared.
    """
    if len(mingens) != 3:
        raise ValueError("pattern check needs exactly three generators")
    if G.m != 2:
        raise ValueError("pattern check needs a planar Gale diagram")
    _check_kernel(mingens, G)
    supports = [
        (frozenset(j for j, e in enumerate(g.plus) if e), frozenset(j for j, e in enumerate(g.minus) if e))
        for g in mingens
    ]
    for T in unimodular_transforms(basis_bound):
        for swap in signed_swaps():
            labels = sign_classes(G.transform(_compose(swap, T)))
            cls = [
                (frozenset(labels[j] for j in p), frozenset(labels[j] for j in q))
                for p, q in supports
            ]
            for perm in itertools.permutations(range(3)):
                if all(
                    (c1 <= HILBERT_BURCH_MINORS[k][0] and c2 <= HILBERT_BURCH_MINORS[k][1])
                    or (c2 <= HILBERT_BURCH_MINORS[k][0] and c1 <= HILBERT_BURCH_MINORS[k][1])
                    for (c1, c2), k in zip(cls, perm)
                ):
                    return True
    return False


def ci_proof_fixture(mingens: Sequence[Binomial]) -> tuple[Fraction, ...]:
    """``u = -(p - q)/2 + (r - s)/2`` for two generators ``x^p - x^q``, ``x^r - x^s``."""
    if len(mingens) != 2:
        raise ValueError("fixture needs exactly two generators")
    v1, v2 = mingens[0].u, mingens[1].u
    if v1 == v2 or v1 == tuple(-x for x in v2):
        raise ValueError("generators are not independent")
    return tuple(Fraction(-a, 2) + Fraction(b, 2) for a, b in zip(v1, v2))


def decide_normal(config: Configuration, method: str = "covering"):
    """Normality verdict and optional witness by ``covering``, ``oracle`` or ``both``.

    With ``both`` the two verdicts must agree; otherwise
    :class:`MethodDisagreement` is raised.  The witness is a cone point for
    the oracle and a point of ``R^m`` missed by the translates of ``Q0`` for
    the covering method.
    """
    if method not in ("covering", "oracle", "both"):
        raise ValueError(f"unknown method {method!r}")
    result = {}
    if method in ("covering", "both"):
        if config.codim > 2:
            raise UnsupportedCodimensionError("covering decision needs codimension <= 2")
        v = covers_space(q_zero(config.gale()))
        result["covering"] = (v.covers, v.uncovered_witness)
    if method in ("oracle", "both"):
        cert = normality_oracle(config)
        result["oracle"] = (cert.verdict, cert.witness)
    if method == "both" and result["covering"][0] != result["oracle"][0]:
        raise MethodDisagreement(f"covering says {result['covering'][0]}, oracle says {result['oracle'][0]}")
    return result


def verify_theorem1(config: Configuration, cross_check: bool = False) -> Theorem1Report:
    """Run the full pipeline on a pointed configuration of codimension 1 or 2."""
    if config.codim > 2:
        raise UnsupportedCodimensionError(f"codimension {config.codim} > 2 is not supported")
    decided = decide_normal(config, "both" if cross_check else "covering")
    key = "covering" if "covering" in decided else "oracle"
    normal, witness = decided[key]
    if not normal:
        return Theorem1Report(False, config.codim, witness=witness)
    mingens = tuple(toric_ideal_mingens(config))
    klass = classify_codim2(config, mingens) if config.codim == 2 else None
    found = find_squarefree_order(mingens, config)
    if found is None:
        if config.codim == 0:
            return Theorem1Report(True, 0, squarefree=True, gb_equals_mingens=True)
        raise TheoremViolation(f"no squarefree Gröbner basis for normal configuration {config.A.tolist()}")
    order, G, selection = found
    pattern = None
    if config.codim == 2 and len(mingens) == 3:
        pattern = validate_hilbert_burch_pattern(mingens, config.gale())
    return Theorem1Report(
        normal=True,
        codim=config.codim,
        mingens=mingens,
        codim2_class=klass,
        order=order,
        groebner=G,
        selection=selection,
        squarefree=True,
        gb_equals_mingens=True,
        gb_literal_match={b.canonical() for b in G.binomials()} == {g.canonical() for g in mingens},
        pattern_match=pattern,
    )
