"""Matrix files and seeded random configurations."""

from __future__ import annotations

import random
from typing import Iterator, Optional, Sequence

from .exactmath import IntegerMatrix, RankDeficientError, determinant, gcd_all, solve_rational
from .semigroup import Configuration, NotPointedError, _parallelepiped_points, normality_oracle

# Each instance gets its own generator seeded by the string "seed:index:attempt";
# CPython seeds str values through SHA-512, so streams are stable across runs.
RNG_ALGORITHM = "cpython-random-mt19937/sha512-str-seed"


class MatrixFileError(ValueError):
    def __init__(self, message: str, line: int, token: Optional[int] = None):
        where = f"line {line}" + (f", token {token}" if token is not None else "")
        super().__init__(f"{where}: {message}")
        self.line = line
        self.token = token


class MalformedHeaderError(MatrixFileError):
    pass


class TokenCountError(MatrixFileError):
    pass


class BadTokenError(MatrixFileError):
    pass


class NegativeEntryError(MatrixFileError):
    pass


def _parse_int(tok: str, line: int, pos: int, header: bool = False) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        cls = MalformedHeaderError if header else BadTokenError
        raise cls(f"not an integer: {tok!r}", line, pos) from None


def parse_matrix_text(text: str) -> IntegerMatrix:
    """Parse ``"d n"`` followed by ``d`` rows of ``n`` nonnegative integers."""
    lines = [
        (no, ln.split())
        for no, ln in enumerate(text.splitlines(), start=1)
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise MalformedHeaderError("missing header", 1)
    hno, head = lines[0]
    if len(head) != 2:
        raise MalformedHeaderError(f"header needs 2 tokens, got {len(head)}", hno)
    d, n = (_parse_int(t, hno, i, header=True) for i, t in enumerate(head, start=1))
    if d < 0 or n < 0:
        raise MalformedHeaderError("negative dimension", hno)
    body = lines[1:]
    if len(body) != d:
        raise TokenCountError(f"expected {d} matrix rows, got {len(body)}", body[-1][0] if body else hno)
    rows = []
    for no, toks in body:
        if len(toks) != n:
            raise TokenCountError(f"expected {n} entries, got {len(toks)}", no)
        row = []
        for pos, t in enumerate(toks, start=1):
            v = _parse_int(t, no, pos)
            if v < 0:
                raise NegativeEntryError(f"negative entry {v}", no, pos)
            row.append(v)
        rows.append(row)
    return IntegerMatrix(rows, ncols=n)


def parse_matrix(path: str) -> IntegerMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix_text(fh.read())


def format_matrix(A: IntegerMatrix, comment: Optional[str] = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(f"{A.nrows} {A.ncols}")
    out.extend(" ".join(str(x) for x in row) for row in A.entries)
    return "\n".join(out) + "\n"


def random_configuration(codim: int, n: int, max_entry: int, seed: int, index: int = 0,
                         require_normal: bool = False, max_tries: int = 100000) -> Configuration:
    """Rejection-sample a pointed configuration of the given shape.

    Entries are uniform in ``[0, max_entry]``; samples with deficient rank or
    a zero column are rejected, and so are non-normal ones when
    ``require_normal`` is set.
    """
    d = n - codim
    if d < 1:
        raise ValueError("need n > codim")
    for attempt in range(max_tries):
        rng = random.Random(f"{seed}:{index}:{attempt}")
        rows = [[rng.randint(0, max_entry) for _ in range(n)] for _ in range(d)]
        try:
            config = Configuration(rows)
        except (RankDeficientError, NotPointedError):
            continue
        if require_normal and not normality_oracle(config).verdict:
            continue
        return config
    raise RuntimeError(f"no admissible configuration after {max_tries} attempts")


def random_corpus(count: int, seed: int, codims: Sequence[int] = (1, 2), n_max: int = 6,
                  max_entry: int = 4, require_normal: bool = False,
                  shapes: Optional[Sequence[tuple[int, int, int]]] = None) -> Iterator[Configuration]:
    """``count`` configurations cycling through ``(codim, n, max_entry)`` shapes.

    By default every codimension in ``codims`` is paired with every
    ``n <= n_max`` at the single entry bound ``max_entry``.
    """
    if shapes is None:
        shapes = [(c, n, max_entry) for c in codims for n in range(c + 1, n_max + 1)]
    for k in range(count):
        codim, n, bound = shapes[k % len(shapes)]
        yield random_configuration(codim, n, bound, seed, k, require_normal)


def _simplicial_hilbert_basis(V: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Hilbert basis of the cone over the columns of the nonsingular matrix ``V``.

    Irreducible elements are either primitive generators or nonzero lattice
    points of the half-open parallelepiped, so only those are screened.
    """
    d = len(V)
    ext = IntegerMatrix([list(V[i]) + [int(i == j) for j in range(d)] for i in range(d)])
    cands = set(_parallelepiped_points(ext, range(d)))
    cands.discard((0,) * d)
    cands |= {tuple(V[i][j] for i in range(d)) for j in range(d)}

    def in_cone(x):
        lam = solve_rational(V, x)
        return all(c >= 0 for c in lam)

    hb = []
    for x in cands:
        if not any(h != x and in_cone(tuple(a - b for a, b in zip(x, h))) for h in cands):
            hb.append(x)
    return sorted(hb)


def normal_configuration(codim: int, d: int, max_entry: int, seed: int, index: int = 0,
                         max_tries: int = 100000) -> Configuration:
    """A configuration that is normal by construction, with ``n = d + codim`` columns.

    The columns are the Hilbert basis of a random simplicial cone in the
    nonnegative orthant, padded with further lattice points of the cone and
    shuffled.  The oracle double-checks normality.
    """
    n = d + codim
    for attempt in range(max_tries):
        rng = random.Random(f"hb:{seed}:{index}:{attempt}")
        cols = []
        for _ in range(d):
            v = [rng.randint(0, max_entry) for _ in range(d)]
            g = gcd_all(v)
            if g:
                cols.append([x // g for x in v])
        if len(cols) < d:
            continue
        V = [[cols[j][i] for j in range(d)] for i in range(d)]
        if determinant(V) == 0:
            continue
        hb = _simplicial_hilbert_basis(V)
        if len(hb) > n:
            continue
        extra = n - len(hb)
        members = list(hb)
        while extra:
            pick = [rng.choice(hb), rng.choice(hb)]
            s = tuple(a + b for a, b in zip(*pick))
            if s not in members:
                members.append(s)
                extra -= 1
        rng.shuffle(members)
        config = Configuration([[c[i] for c in members] for i in range(d)])
        if not normality_oracle(config).verdict:
            raise AssertionError(f"constructed configuration is not normal: {config.A.tolist()}")
        return config
    raise RuntimeError(f"no admissible cone after {max_tries} attempts")
