import json
from fractions import Fraction

import pytest
from hypothesis import given

from menv.cli import main
from menv.core import Element
from menv.document import SchemaError, deserialize, read_document, serialize
from strategies import elements


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_document_example():
    x = Element.monomial((0, 0, 0, 1, 2))
    assert serialize(x) == '{"gamma":"symbolic","terms":[{"mono":[0,0,0,1,2],"coeff":["1"]}]}'


def test_document_order_and_gamma():
    x = Element({(1, 0, 0, 0, 0): Fraction(1, 3), (0, 0, 0, 0, 1): -2})
    text = serialize(x, Fraction(-3, 4))
    assert json.loads(text)["gamma"] == "-3/4"
    assert [t["mono"] for t in json.loads(text)["terms"]] == [[0, 0, 0, 0, 1], [1, 0, 0, 0, 0]]
    assert read_document(text)[1].value == Fraction(-3, 4)


@given(elements(max_exp=3, max_degree=8, max_terms=20))
def test_document_round_trip(x):
    text = serialize(x)
    assert deserialize(text) == x
    assert serialize(deserialize(text)) == text


@pytest.mark.parametrize(
    "doc",
    [
        '{"gamma":"symbolic","terms":[{"mono":[0,0,1,2],"coeff":["1"]}]}',
        '{"gamma":"symbolic","terms":[{"mono":[0,0,0,1,2],"coeff":["1","0"]}]}',
        '{"gamma":"symbolic","terms":[{"mono":[0,0,0,1,-2],"coeff":["1"]}]}',
        '{"gamma":"symbolic","terms":[{"mono":[0,0,0,1,2],"coeff":[1]}]}',
        '{"gamma":"0","terms":[]}',
        '{"gamma":"2","terms":[{"mono":[0,0,0,0,1],"coeff":["1","1"]}]}',
        '{"gamma":"symbolic"}',
        '{"gamma":"symbolic","terms":[{"mono":[0,0,0,0,1],"coeff":["1"]},{"mono":[0,0,0,0,1],"coeff":["2"]}]}',
        "[1, 2]",
        "{",
    ],
)
def test_schema_errors(doc):
    with pytest.raises(SchemaError):
        deserialize(doc)


def test_eval_command(capsys):
    assert run(capsys, "eval", "assoc(c, (a*b), (a*b))", "--engine", "oracle") == (0, "-b d", "")
    assert run(capsys, "eval", "g e", "--gamma", "3")[1] == "3 e"
    code, out, _ = run(capsys, "eval", "d e^2", "--format", "json")
    assert out == '{"gamma":"symbolic","terms":[{"mono":[0,0,0,1,2],"coeff":["1"]}]}'


def test_document_files(capsys, tmp_path):
    path = tmp_path / "x.json"
    assert run(capsys, "eval", "g d e^2", "--out", str(path))[0] == 0
    assert deserialize(path.read_text()) == Element({(0, 0, 0, 1, 2): (0, 1)})
    assert run(capsys, "eval", "--in", str(path), "--gamma", "2")[1] == "2 d e^2"


def test_exit_codes(capsys):
    code, _, err = run(capsys, "eval", "a*b*c")
    assert code == 2 and "nonassociative" in err
    assert run(capsys, "eval", "c b")[0] == 2
    assert run(capsys, "eval", "a", "--gamma", "0")[0] == 1
    assert run(capsys, "eval", "--in", "/nonexistent/x.json")[0] == 1
    assert run(capsys, "frobnicate")[0] == 2


def test_center_command(capsys):
    code, out, _ = run(capsys, "center", "--gamma", "-1/2", "--max-degree", "6")
    assert code == 0
    assert out.splitlines()[0] == "generator: d e^2"
    assert "d^2 e^4" in out


def test_alt_and_table_commands(capsys):
    assert run(capsys, "alt", "eval", "c*b")[1] == "b c - 2 d"
    assert run(capsys, "alt", "eval", "(b*d) + a")[1] == "a"
    code, out, _ = run(capsys, "table", "--degree", "1")
    assert code == 0 and len(out.splitlines()) == 36
    assert "(c) * (b) = b c - 2 d" in out


def test_verify_command(capsys, monkeypatch):
    monkeypatch.setenv("MENV_MAX_EXP", "1")
    code, out, _ = run(capsys, "verify", "--suite", "oracle")
    assert code == 0 and out.startswith("PASS oracle")
    code, out, _ = run(capsys, "verify", "--suite", "malcev")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--suite", "small", "--max-exp", "3")
    assert code == 0


def test_verify_failure_exit_code(capsys, monkeypatch):
    import menv.cli as cli

    monkeypatch.setitem(cli.SUITES, "malcev", lambda bound: (False, "forced"))
    code, out, _ = run(capsys, "verify", "--suite", "malcev")
    assert code == 3 and out.startswith("FAIL malcev")
