import itertools

import pytest
from hypothesis import given, settings, strategies as st

from helpers import CI_SQUARE, TWISTED_CUBIC, mixed_corpus, normal_codim2
from normaltoric.binomial import toric_ideal_mingens
from normaltoric.exactmath import IntegerMatrix, RankDeficientError, dot, smith_index, solve_diophantine
from normaltoric.gale import (
    GaleDiagram,
    _compose,
    find_four_quadrant_basis,
    find_imbalanced_basis,
    gale_diagram,
    is_imbalanced,
    quadrants_hit,
    sign_class,
    sign_classes,
    signed_swaps,
    unimodular_transforms,
)

CUBIC_POINTS = ((1, 0), (-2, 1), (1, -2), (0, 1))

PATTERNS = {
    "A": lambda s, t: s > 0 and t == 0,
    "B1": lambda s, t: s >= t > 0,
    "B2": lambda s, t: t > s > 0,
    "C": lambda s, t: s == 0 and t > 0,
    "D": lambda s, t: s < 0 < t,
    "E": lambda s, t: s < 0 and t == 0,
    "F1": lambda s, t: s < t < 0,
    "F2": lambda s, t: t <= s < 0,
    "G": lambda s, t: s == 0 and t < 0,
    "H": lambda s, t: s > 0 > t,
}


def planar(points):
    return GaleDiagram(2, tuple(tuple(p) for p in points))


def test_twisted_cubic_diagram():
    G = gale_diagram(IntegerMatrix(TWISTED_CUBIC))
    G.check()
    assert G.m == 2 and G.n == 4
    assert G.points == ((1, 0), (0, 1), (-3, -2), (2, 1))
    # same lattice as the hand-picked basis {(1,-2,1,0), (0,1,-2,1)}
    B = IntegerMatrix.from_columns(G.basis(), 4)
    R = IntegerMatrix.from_columns(planar(CUBIC_POINTS).basis(), 4)
    assert smith_index(B) == smith_index(R) == 1
    for v in R.columns():
        assert all(dot(r, v) == 0 for r in TWISTED_CUBIC)
        assert solve_diophantine(B, v) is not None
    for v in B.columns():
        assert solve_diophantine(R, v) is not None


def test_small_diagrams():
    G = gale_diagram(IntegerMatrix([[2, 3]]))
    assert G.points in (((3,), (-2,)), ((-3,), (2,)))
    Z = gale_diagram(IntegerMatrix([[1, 0], [0, 1]]))
    assert Z.m == 0 and Z.points == ((), ())
    with pytest.raises(RankDeficientError):
        gale_diagram(IntegerMatrix([[1, 2], [2, 4]]))


def test_diagram_invariants_on_corpus():
    for cfg in mixed_corpus():
        G = cfg.gale()
        G.check()
        assert G.m == cfg.codim


def test_sign_class_examples():
    assert sign_class((1, 1)) == "B1"
    assert sign_class((-3, 2)) == "D"
    assert sign_class((0, 0)) == "Zero"
    assert [sign_class(p) for p in [(1, 0), (0, 1), (-1, 0), (0, -1)]] == ["A", "C", "E", "G"]
    with pytest.raises(ValueError):
        sign_classes(gale_diagram(IntegerMatrix([[2, 3]])))


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_sign_class_pattern_holds(s, t):
    label = sign_class((s, t))
    if (s, t) == (0, 0):
        assert label == "Zero"
    else:
        assert PATTERNS[label](s, t)
        assert sum(p(s, t) for p in PATTERNS.values()) == 1


def test_quadrants_examples():
    assert quadrants_hit(planar(CUBIC_POINTS)) == {"Q2", "Q4"}
    assert quadrants_hit(planar([(1, 1), (-1, 2), (1, -1), (-2, -3)])) == {"Q1", "Q2", "Q3", "Q4"}
    assert quadrants_hit(planar([(1, 0), (0, 1), (-1, 0), (0, -1)])) == frozenset()


def _quadrant(p):
    s, t = p
    if s and t:
        return {(1, 1): "Q1", (-1, 1): "Q2", (-1, -1): "Q3", (1, -1): "Q4"}[(s > 0) - (s < 0), (t > 0) - (t < 0)]
    return None


points2 = st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=1, max_size=6)


@settings(max_examples=100, deadline=None)
@given(points2)
def test_quadrants_dihedral_equivariance(points):
    G = planar(points)
    before = quadrants_hit(G)
    swaps = signed_swaps()
    assert len(swaps) == 8 and len(set(swaps)) == 8
    for T in swaps:
        # a signed swap permutes the open quadrants; track one point from each
        image = {}
        for q, rep in {"Q1": (1, 1), "Q2": (-1, 1), "Q3": (-1, -1), "Q4": (1, -1)}.items():
            image[q] = _quadrant(tuple(dot(row, rep) for row in T))
        assert quadrants_hit(G.transform(T)) == {image[q] for q in before}


def test_imbalanced_examples():
    assert is_imbalanced(planar([(1, 0), (-1, 0), (0, 1), (0, -1)]))
    assert not is_imbalanced(planar([(1, -1), (-1, 1)]))
    # the class layout of a complete intersection: A, B, C, D, E and (0,-) only
    assert is_imbalanced(planar([(1, 0), (2, 1), (0, 1), (-1, 3), (-2, 0), (0, -1)]))


@settings(max_examples=100, deadline=None)
@given(points2, st.randoms(use_true_random=False))
def test_imbalanced_permutation_invariant(points, rnd):
    shuffled = list(points)
    rnd.shuffle(shuffled)
    assert is_imbalanced(planar(points)) == is_imbalanced(planar(shuffled))


def test_find_imbalanced_basis_examples():
    axes = planar([(1, 0), (-1, 0), (0, 1), (0, -1)])
    assert find_imbalanced_basis(axes) == axes
    assert find_imbalanced_basis(planar(CUBIC_POINTS)) is None
    assert find_imbalanced_basis(planar([(1, 1), (-1, 2), (1, -1), (-2, -3)])) is None
    found = find_imbalanced_basis(gale_diagram(IntegerMatrix(CI_SQUARE)))
    assert found is not None and is_imbalanced(found)


def test_unimodular_transforms_are_unimodular():
    seen = list(unimodular_transforms(3))
    assert ((1, 0), (0, 1)) in [tuple(map(tuple, T)) for T in seen]
    for T in seen:
        (a, b), (c, d) = T
        assert abs(a * d - b * c) == 1


def test_four_quadrant_search():
    G = planar([(1, 1), (-1, 2), (1, -1), (-2, -3)])
    assert find_four_quadrant_basis(G) is not None
    assert find_four_quadrant_basis(planar(CUBIC_POINTS)) is None


def test_ci_generator_pairs_have_imbalanced_basis():
    count = 0
    for cfg in normal_codim2():
        gens = toric_ideal_mingens(cfg)
        if len(gens) != 2:
            continue
        count += 1
        G = planar(zip(gens[0].u, gens[1].u))
        found = find_imbalanced_basis(G, shear_bound=5)
        assert found is not None, cfg.A.tolist()
        assert is_imbalanced(found)
    assert count >= 10


def test_compose_matches_sequential_transform():
    G = planar(CUBIC_POINTS)
    for S, T in itertools.product(signed_swaps()[:3], list(unimodular_transforms(1))[:4]):
        assert G.transform(_compose(S, T)) == G.transform(T).transform(S)
