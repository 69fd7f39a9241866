import json
import re
from fractions import Fraction

import pytest

from normaltoric import cli
from normaltoric.corpus import (
    BadTokenError,
    MalformedHeaderError,
    NegativeEntryError,
    TokenCountError,
    format_matrix,
    parse_matrix,
    parse_matrix_text,
    random_configuration,
)
from normaltoric.theorem1 import MethodDisagreement


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


@pytest.fixture
def files(tmp_path):
    return {
        "gap": write(tmp_path, "gap.txt", "1 2\n2 3\n"),
        "cubic": write(tmp_path, "cubic.txt", "# twisted cubic\n2 4\n1 1 1 1\n0 1 2 3\n"),
        "ci": write(tmp_path, "ci.txt", "2 4\n1 1 0 0\n0 0 1 1\n"),
        "codim4": write(tmp_path, "c4.txt", "1 5\n1 1 1 1 1\n"),
        "zero": write(tmp_path, "zero.txt", "1 2\n0 1\n"),
        "bad": write(tmp_path, "bad.txt", "1 2\n2 x\n"),
    }


def test_parse_examples():
    assert parse_matrix_text("1 2\n2 3\n").tolist() == [[2, 3]]
    assert parse_matrix_text("2 4\n1 1 1 1\n0 1 2 3\n").tolist() == [[1, 1, 1, 1], [0, 1, 2, 3]]
    big = 10**40
    assert parse_matrix_text(f"1 1\n{big}\n").tolist() == [[big]]
    assert parse_matrix_text("# c\n\n1 2\n# mid\n1 2\n").tolist() == [[1, 2]]


def test_parse_errors_are_distinct():
    with pytest.raises(BadTokenError) as e:
        parse_matrix_text("1 2\n2 x\n")
    assert (e.value.line, e.value.token) == (2, 2)
    with pytest.raises(MalformedHeaderError):
        parse_matrix_text("1\n2 3\n")
    with pytest.raises(MalformedHeaderError):
        parse_matrix_text("")
    with pytest.raises(TokenCountError) as e:
        parse_matrix_text("1 3\n2 3\n")
    assert e.value.line == 2
    with pytest.raises(TokenCountError):
        parse_matrix_text("2 2\n2 3\n")
    with pytest.raises(NegativeEntryError) as e:
        parse_matrix_text("1 2\n2 -3\n")
    assert (e.value.line, e.value.token) == (2, 2)


def test_format_round_trip(tmp_path):
    cfg = random_configuration(2, 5, 4, seed=1)
    p = write(tmp_path, "m.txt", format_matrix(cfg.A, "note"))
    assert parse_matrix(p) == cfg.A


def _leaves(obj):
    if isinstance(obj, dict):
        for v in obj.values():
            yield from _leaves(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _leaves(v)
    else:
        yield obj


def test_normal_both_on_gap(capsys, files):
    code, out, _ = run(capsys, "normal", "--method", "both", files["gap"])
    assert code == 1
    report = json.loads(out)
    assert report["format"] == 1 and report["command"] == "normal"
    res = report["result"]
    assert res["normal"] is False
    assert res["oracle"]["witness"] == ["1"]
    assert res["covering"]["normal"] is False


def test_thm1_twisted_cubic(capsys, files):
    code, out, _ = run(capsys, "thm1", files["cubic"])
    assert code == 0
    res = json.loads(out)["result"]
    assert res["squarefree"] and res["gb_equals_mingens"] and res["gb_literal_match"]
    assert {g["binomial"] for g in res["mingens"]} == {"x1*x3 - x2^2", "x2*x4 - x3^2", "x1*x4 - x2*x3"}
    assert set(res["groebner"]["initial_ideal"]) == {"x1*x3", "x2*x4", "x1*x4"}
    assert res["class"]["tag"] == "CohenMacaulayThree"


def test_covering_radius_on_gap(capsys, files):
    code, out, _ = run(capsys, "covering", "--radius", "--tol", "1/64", files["gap"])
    assert code == 1
    r = json.loads(out)["result"]["radius"]
    lo, hi = Fraction(r["lo"]), Fraction(r["hi"])
    assert lo <= Fraction(6, 5) <= hi and hi - lo <= Fraction(1, 64)


def test_other_commands(capsys, files):
    code, out, _ = run(capsys, "info", files["cubic"])
    res = json.loads(out)["result"]
    assert code == 0 and res["codim"] == "2" and res["pointed"] and res["grading"] == ["1", "0"]
    code, out, _ = run(capsys, "gale", files["cubic"])
    assert code == 0 and json.loads(out)["result"]["m"] == "2"
    code, out, _ = run(capsys, "mingens", files["ci"])
    assert code == 0 and json.loads(out)["result"]["count"] == "2"
    code, out, _ = run(capsys, "groebner", "--weight", "1,0,0,1", "--tiebreak", "4,3,2,1", files["cubic"])
    res = json.loads(out)["result"]
    assert code == 0 and res["squarefree"] and res["order"]["tiebreak"] == ["4", "3", "2", "1"]
    code, out, _ = run(capsys, "groebner", "--weight=-1,0,1/2,0", files["cubic"])
    res = json.loads(out)["result"]
    assert code == 0 and all(Fraction(x) >= 0 for x in res["order"]["weight"])
    code, out, _ = run(capsys, "normal", files["cubic"])
    assert code == 0


def test_input_errors(capsys, files, tmp_path):
    code, _, err = run(capsys, "info", files["bad"])
    assert code == 2 and "line 2, token 2" in err
    assert run(capsys, "info", tmp_path / "missing.txt")[0] == 2
    assert run(capsys, "normal", files["zero"])[0] == 2
    assert run(capsys, "groebner", "--weight", "1,2", files["cubic"])[0] == 2
    assert run(capsys, "groebner", "--weight", "1,0,0,1", "--tiebreak", "1,1,2,3", files["cubic"])[0] == 2
    assert run(capsys, "covering", "--radius", "--tol", "abc", files["gap"])[0] == 2


def test_unsupported_codimension(capsys, files):
    assert run(capsys, "thm1", files["codim4"])[0] == 3
    assert run(capsys, "covering", files["codim4"])[0] == 3
    assert run(capsys, "normal", "--method", "oracle", files["codim4"])[0] == 0


def test_disagreement_exits_4(capsys, files, monkeypatch):
    def broken(config, method):
        raise MethodDisagreement("covering says True, oracle says False")

    monkeypatch.setattr(cli, "decide_normal", broken)
    code, _, err = run(capsys, "normal", "--method", "both", files["gap"])
    assert code == 4 and "DISAGREEMENT" in err


def test_reports_are_exact_strings(capsys, files):
    for argv in (["thm1", files["cubic"]], ["covering", "--radius", files["gap"]], ["gale", files["ci"]],
                 ["normal", "--method", "both", files["gap"]], ["info", files["gap"]]):
        _, out, _ = run(capsys, *argv)
        report = json.loads(out)
        for leaf in _leaves(report["result"]):
            assert leaf is None or isinstance(leaf, (str, bool))
            if isinstance(leaf, str):
                assert not re.fullmatch(r"-?\d*\.\d+(e-?\d+)?", leaf)
        assert "." not in re.sub(r'"[^"]*"', "", out)


def test_timing_and_human(capsys, files):
    _, out, _ = run(capsys, "--timing", "info", files["gap"])
    assert "elapsed_ms" in json.loads(out)
    _, out, _ = run(capsys, "info", files["gap"])
    assert "elapsed_ms" not in json.loads(out)
    _, out, _ = run(capsys, "--human", "mingens", files["cubic"])
    assert out.startswith("command: mingens") and "- binomial: x1*x4 - x2*x3" in out


def test_gen_round_trip(capsys, tmp_path):
    argv = ["gen", "--codim", "2", "-n", "5", "--max", "3", "--seed", "9", "--require-normal"]
    assert run(capsys, *argv)[0] == 0
    code, text1, _ = run(capsys, *argv)
    code2, text2, _ = run(capsys, *argv)
    assert code == code2 == 0 and text1 == text2
    assert "rng=cpython-random-mt19937" in text1
    out = tmp_path / "g.txt"
    assert run(capsys, *argv, "-o", out)[0] == 0
    assert out.read_text() == text1
    reports = [run(capsys, "thm1", out)[1] for _ in range(2)]
    assert reports[0] == reports[1]
    assert json.loads(reports[0])["result"]["normal"] is True
    assert run(capsys, "gen", "--codim", "2", "-n", "2", "--seed", "1")[0] == 2
    assert run(capsys, "gen", "--codim", "3", "-n", "5", "--seed", "1")[0] == 2
