"""Shared fixtures: small named configurations and the seeded corpora."""

import itertools
import random
from fractions import Fraction
from functools import lru_cache

from normaltoric.corpus import normal_configuration, random_corpus
from normaltoric.exactmath import dot, solve_diophantine
from normaltoric.semigroup import ceil_vector, hilbert_kernel_check, in_cone

TWISTED_CUBIC = [[1, 1, 1, 1], [0, 1, 2, 3]]
QUARTIC = [[1, 1, 1, 1], [0, 1, 3, 4]]
CI_SQUARE = [[1, 1, 0, 0], [0, 0, 1, 1]]
PLANE_GAP = [[1, 1, 1], [0, 1, 3]]

CORPUS_SEED = 20261014

# (codim, n, entry bound); larger shapes are rarely normal, so they stay small
CODIM2_SHAPES = [(2, 3, 4), (2, 4, 1), (2, 4, 2), (2, 5, 2), (2, 4, 3), (2, 5, 1), (2, 6, 2), (2, 4, 4), (2, 5, 3)]
CODIM1_SHAPES = [(1, 2, 4), (1, 3, 3), (1, 3, 4), (1, 4, 2), (1, 4, 3)]


@lru_cache(maxsize=None)
def normal_codim2():
    sampled = list(random_corpus(40, CORPUS_SEED, shapes=CODIM2_SHAPES, require_normal=True))
    built = [normal_configuration(2, d, 3, CORPUS_SEED, k) for k, d in enumerate([2, 2, 3, 3, 4] * 4)]
    return _dedupe(sampled + built + list(normal_cm3()))


@lru_cache(maxsize=None)
def normal_cm3(count=12):
    """Constructed normal codim-2 members with exactly three minimal generators."""
    from normaltoric.binomial import toric_ideal_mingens

    out = []
    k = 0
    while len(out) < count:
        d, bound = [(2, 5), (3, 3), (2, 4)][k % 3]
        cfg = normal_configuration(2, d, bound, CORPUS_SEED + 1, k)
        if len(toric_ideal_mingens(cfg)) == 3:
            out.append(cfg)
        k += 1
    return _dedupe(out)


@lru_cache(maxsize=None)
def normal_codim1():
    return _dedupe(random_corpus(20, CORPUS_SEED, shapes=CODIM1_SHAPES, require_normal=True))


@lru_cache(maxsize=None)
def mixed_corpus(count=60, seed=CORPUS_SEED):
    """Unfiltered pointed configurations for oracle/criterion comparisons."""
    return tuple(random_corpus(count, seed, codims=(1, 2), n_max=5, max_entry=3))


def _dedupe(configs):
    seen, out = set(), []
    for c in configs:
        key = tuple(c.A.entries)
        if key not in seen:
            seen.add(key)
            out.append(c)
    return tuple(out)


def brute_det(M):
    """Laplace expansion; independent of the Bareiss routine under test."""
    n = len(M)
    if n == 0:
        return 1
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        total += (-1) ** j * M[0][j] * brute_det(minor)
    return total


def brute_gcd_of_minors(cols):
    """gcd of the maximal minors of the matrix with the given columns."""
    from math import gcd

    rows = [list(r) for r in zip(*cols)]
    k = len(cols)
    g = 0
    for sel in itertools.combinations(range(len(rows)), k):
        g = gcd(g, brute_det([rows[i] for i in sel]))
    return g


def rational_grid(values, den):
    return [Fraction(v, den) for v in values]


def _check_result(G, x, y):
    A = G.source
    assert all(dot(r, y) == 0 for r in A.entries)
    assert all(a <= b for a, b in zip(y, ceil_vector(x)))


def forward_direction(cfg, samples=100, seed=0):
    """Normal inputs: every rational kernel vector has an integer kernel vector below its ceiling."""
    rng = random.Random(f"fwd:{seed}:{cfg.A.tolist()}")
    G = cfg.gale()
    for _ in range(samples):
        den = rng.randint(1, 4)
        coeffs = [Fraction(rng.randint(-12, 12), den) for _ in range(G.m)]
        x = G.kernel_vector(coeffs)
        y = hilbert_kernel_check(G, x)
        assert y is not None, (cfg.A.tolist(), x)
        _check_result(G, x, y)


def reverse_direction(cfg, z):
    """Non-normal inputs: the two representations of a witness give a failing kernel vector."""
    r = in_cone(cfg, z)
    m = solve_diophantine(cfg.A, z)
    assert r is not None and m is not None
    x = tuple(Fraction(a) - b for a, b in zip(m, r))
    assert hilbert_kernel_check(cfg.gale(), x) is None
    return x


ACCEPTANCE_LINES = []


def record(number, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok
