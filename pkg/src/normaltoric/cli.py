"""Command-line interface.

Every command reads a matrix file (``-`` for stdin) and prints one JSON
report with sorted keys.  Numbers appear as exact strings (``"3"``,
``"-1/3"``).  Exit codes: 0 success or true verdict, 1 false verdict,
2 input error, 3 unsupported, 4 internal disagreement.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from .binomial import SizeGuardError, TermOrder, buchberger, format_monomial, initial_ideal, toric_ideal_mingens
from .corpus import RNG_ALGORITHM, MatrixFileError, format_matrix, parse_matrix_text, random_configuration
from .exactmath import IntegerMatrix, RankDeficientError, matrix_rank
from .gale import gale_diagram, is_imbalanced, quadrants_hit, sign_classes
from .kernelgeom import UnsupportedDimensionError, covering_radius_bounds, covers_space, q_zero
from .semigroup import Configuration, NotPointedError, is_pointed
from .theorem1 import (
    MethodDisagreement,
    TheoremViolation,
    UnsupportedCodimensionError,
    decide_normal,
    verify_theorem1,
)

FORMAT_VERSION = 1
EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_UNSUPPORTED, EXIT_DISAGREE = 0, 1, 2, 3, 4


class InputError(ValueError):
    pass


def _q(x) -> str:
    return str(Fraction(x))


def _vec(v) -> Optional[list]:
    return None if v is None else [_q(x) for x in v]


def _binomial(b) -> dict:
    return {"vector": _vec(b.u), "binomial": str(b)}


def _read(path: str) -> tuple[IntegerMatrix, str]:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(str(exc)) from None
    A = parse_matrix_text(text)
    digest = hashlib.sha256(format_matrix(A).encode()).hexdigest()
    return A, digest


def _config(A: IntegerMatrix) -> Configuration:
    return Configuration(A)


def _parse_rational_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(t) for t in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse rational list {text!r}") from None


# --- commands ---------------------------------------------------------------


def cmd_info(A, args):
    rank = matrix_rank(A)
    grading = is_pointed(A)
    return EXIT_OK, {
        "d": _q(A.nrows),
        "n": _q(A.ncols),
        "rank": _q(rank),
        "codim": _q(A.ncols - rank),
        "pointed": grading is not None,
        "grading": _vec(grading),
    }


def cmd_gale(A, args):
    G = gale_diagram(A)
    out = {"m": _q(G.m), "points": [_vec(p) for p in G.points]}
    if G.m == 2:
        out["sign_classes"] = sign_classes(G)
        out["quadrants"] = sorted(quadrants_hit(G))
        out["imbalanced"] = is_imbalanced(G)
    return EXIT_OK, out


def cmd_normal(A, args):
    cfg = _config(A)
    res = decide_normal(cfg, args.method)
    out = {"method": args.method}
    if "covering" in res:
        ok, pt = res["covering"]
        out["covering"] = {"normal": ok, "uncovered_point": _vec(pt)}
    if "oracle" in res:
        ok, z = res["oracle"]
        out["oracle"] = {"normal": ok, "witness": _vec(z)}
    verdict = next(iter(res.values()))[0]
    out["normal"] = verdict
    return (EXIT_OK if verdict else EXIT_FALSE), out


def cmd_mingens(A, args):
    gens = toric_ideal_mingens(_config(A))
    return EXIT_OK, {"count": _q(len(gens)), "generators": [_binomial(g) for g in gens]}


def _order_payload(order: TermOrder) -> dict:
    return {"weight": _vec(order.weight), "tiebreak": [_q(i + 1) for i in order.tiebreak]}


def _gb_payload(G) -> dict:
    leads, squarefree = initial_ideal(G)
    return {
        "order": _order_payload(G.order),
        "elements": [
            {"lead": _vec(a), "trail": _vec(b), "binomial": f"{format_monomial(a)} - {format_monomial(b)}"}
            for a, b in G.elements
        ],
        "initial_ideal": [format_monomial(a) for a in leads],
        "squarefree": squarefree,
    }


def cmd_groebner(A, args):
    cfg = _config(A)
    w = _parse_rational_list(args.weight)
    if len(w) != cfg.n:
        raise InputError(f"weight has {len(w)} entries, expected {cfg.n}")
    lam = max([Fraction(0)] + [-x / dg for x, dg in zip(w, cfg.degrees)])
    w = [x + lam * dg for x, dg in zip(w, cfg.degrees)]
    tiebreak = None
    if args.tiebreak:
        try:
            tiebreak = [int(t) - 1 for t in args.tiebreak.split(",")]
        except ValueError:
            raise InputError(f"cannot parse tiebreak {args.tiebreak!r}") from None
    try:
        order = TermOrder(w, tiebreak)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    G = buchberger(toric_ideal_mingens(cfg), order)
    return EXIT_OK, _gb_payload(G)


def cmd_thm1(A, args):
    cfg = _config(A)
    r = verify_theorem1(cfg, cross_check=args.cross_check)
    out = {"normal": r.normal, "codim": _q(r.codim)}
    if not r.normal:
        out["uncovered_point"] = _vec(r.witness)
        return EXIT_FALSE, out
    out["mingens"] = [_binomial(g) for g in r.mingens]
    if r.codim2_class is not None:
        out["class"] = {"tag": r.codim2_class.tag, "mingen_count": _q(r.codim2_class.mingen_count)}
    out["selection"] = list(r.selection or ())
    out["groebner"] = _gb_payload(r.groebner)
    out["squarefree"] = r.squarefree
    out["gb_equals_mingens"] = r.gb_equals_mingens
    out["gb_literal_match"] = r.gb_literal_match
    out["pattern_match"] = r.pattern_match
    return EXIT_OK, out


def cmd_covering(A, args):
    cfg = _config(A)
    Q = q_zero(cfg.gale())
    v = covers_space(Q)
    out = {"covers": v.covers, "uncovered_point": _vec(v.uncovered_witness)}
    if args.radius:
        try:
            tol = Fraction(args.tol)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"bad tolerance {args.tol!r}") from None
        lo, hi = covering_radius_bounds(Q, tol)
        out["radius"] = {"lo": _q(lo), "hi": _q(hi), "tol": _q(tol)}
    return (EXIT_OK if v.covers else EXIT_FALSE), out


COMMANDS = {
    "info": cmd_info,
    "gale": cmd_gale,
    "normal": cmd_normal,
    "mingens": cmd_mingens,
    "groebner": cmd_groebner,
    "thm1": cmd_thm1,
    "covering": cmd_covering,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="normaltoric", description=__doc__.splitlines()[0])
    p.add_argument("--human", action="store_true", help="human-readable output instead of JSON")
    p.add_argument("--timing", action="store_true", help="add elapsed milliseconds to the report")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("info", "gale", "mingens"):
        sub.add_parser(name).add_argument("path")
    sp = sub.add_parser("normal")
    sp.add_argument("path")
    sp.add_argument("--method", choices=("covering", "oracle", "both"), default="covering")
    sp = sub.add_parser("groebner")
    sp.add_argument("path")
    sp.add_argument("--weight", required=True, help="comma-separated rationals w1,...,wn (use --weight=-1,... for a leading minus)")
    sp.add_argument("--tiebreak", help="comma-separated 1-based variable permutation")
    sp = sub.add_parser("thm1")
    sp.add_argument("path")
    sp.add_argument("--cross-check", action="store_true", help="also run the semigroup oracle")
    sp = sub.add_parser("covering")
    sp.add_argument("path")
    sp.add_argument("--radius", action="store_true")
    sp.add_argument("--tol", default="1/64")
    sp = sub.add_parser("gen")
    sp.add_argument("--codim", type=int, choices=(1, 2), required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--max", type=int, default=6)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--index", type=int, default=0)
    sp.add_argument("--require-normal", action="store_true")
    sp.add_argument("-o", "--output")
    return p


def _human(obj, indent=0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k in sorted(obj):
            v = obj[k]
            nested = isinstance(v, dict) or (isinstance(v, list) and any(isinstance(x, (dict, list)) for x in v))
            if v and nested:
                lines.append(f"{pad}{k}:")
                lines.append(_human(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        out = []
        for x in obj:
            if isinstance(x, dict):
                block = _human(x, indent + 1)
                out.append(f"{pad}- " + block[len(pad) + 2:])
            else:
                out.append(f"{pad}- {_scalar(x)}")
        return "\n".join(out)
    return pad + _scalar(obj)


def _scalar(v) -> str:
    if isinstance(v, list):
        return "(" + ", ".join(_scalar(x) for x in v) + ")"
    if v is None:
        return "-"
    return str(v).lower() if isinstance(v, bool) else str(v)


def _gen(args) -> int:
    if args.n <= args.codim or args.max < 1:
        print("error: need n > codim and --max >= 1", file=sys.stderr)
        return EXIT_INPUT
    cfg = random_configuration(args.codim, args.n, args.max, args.seed, args.index, args.require_normal)
    comment = (
        f"gen codim={args.codim} n={args.n} max={args.max} seed={args.seed} index={args.index}"
        f" require_normal={str(args.require_normal).lower()} rng={RNG_ALGORITHM}"
    )
    text = format_matrix(cfg.A, comment)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.command == "gen":
        return _gen(args)
    start = time.perf_counter()
    try:
        A, digest = _read(args.path)
        code, result = COMMANDS[args.command](A, args)
    except (MatrixFileError, InputError, RankDeficientError, NotPointedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (UnsupportedCodimensionError, UnsupportedDimensionError, SizeGuardError) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (MethodDisagreement, TheoremViolation) as exc:
        print(f"INTERNAL DISAGREEMENT: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    report = {
        "format": FORMAT_VERSION,
        "command": args.command,
        "input_sha256": digest,
        "exit_code": code,
        "result": result,
    }
    if args.timing:
        report["elapsed_ms"] = str(round((time.perf_counter() - start) * 1000))
    if args.human:
        print(_human(report))
    else:
        print(json.dumps(report, sort_keys=True, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
