import json
from pathlib import Path

import pytest

from fanodegen.cli import main
from fanodegen.formats import parse_ideal_text, parse_poly_text
from fanodegen.errors import FileFormatError

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sr(capsys):
    assert run(capsys, "sr", "T4", "--join-point")[:2] == (0, "x1*x2*x3*x4\n")
    code, out, _ = run(capsys, "sr", "T8p", "--join-point")
    assert code == 0 and len(out.split()) == 10
    assert sorted(run(capsys, "sr", "T5")[1].split()) == ["x1*x2*x3", "y1*y2"]
    assert run(capsys, "sr", "T12")[0] == 2


def test_hilbert_fixture(capsys):
    code, out, _ = run(capsys, "hilbert", str(FIXTURES / "sr_T7.ideal"))
    assert code == 0
    assert "dim 3" in out and "degree 10" in out


def test_invariants_by_case(capsys):
    assert run(capsys, "normal-module", "--case", "Xbp")[1].strip() == "107"
    assert run(capsys, "t2", "--case", "275510")[1].strip() == "4"
    assert run(capsys, "t1", "--case", "275510")[1].strip() == "27"


def test_json_is_stable(capsys):
    a = run(capsys, "normal-module", str(FIXTURES / "quartic.ideal"), "--json")[1]
    b = run(capsys, "normal-module", str(FIXTURES / "quartic.ideal"), "--json")[1]
    assert a == b
    d = json.loads(a)
    assert d["schema"] == 1 and d["h0N"] == 69
    assert list(d) == sorted(d)


def test_gb_orders_and_fields(capsys):
    code, out, _ = run(capsys, "gb", str(FIXTURES / "quartic.ideal"), "--order", "lex", "--field", "fp101")
    assert code == 0 and out.strip() == "x0^4 - x1*x2*x3*x4"
    assert run(capsys, "t1", str(FIXTURES / "quartic.ideal"), "--field", "fp101")[0] == 2


def test_parse_errors_give_exit_two(capsys, tmp_path):
    bad = tmp_path / "bad.ideal"
    bad.write_text("ring x y\nx*y + $\n")
    code, _, err = run(capsys, "gb", str(bad))
    assert code == 2 and "bad.ideal:2" in err
    assert run(capsys, "gb")[0] == 2
    assert run(capsys, "hilbert", str(tmp_path / "missing.ideal"))[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_degenerate(capsys):
    code, out, _ = run(capsys, "degenerate", str(FIXTURES / "degree4.poly"), "T4", "--json")
    d = json.loads(out)
    assert code == 0 and d["found"] and len(d["heights"]) == 5
    assert run(capsys, "degenerate", str(FIXTURES / "degree4.poly"), "T5")[0] == 1


def test_verify_cases(capsys):
    code, out, _ = run(capsys, "verify", "rolling-example", "--json")
    assert code == 0
    (rep,) = json.loads(out)
    assert rep["status"] == "PASS" and rep["schema"] == 1 and rep["runtime_ms"] == 0
    code, out, _ = run(capsys, "verify", "external-polytopes")
    assert code == 0 and out.startswith("SKIPPED")
    assert run(capsys, "verify", "nope")[0] == 2


def test_file_formats():
    I = parse_ideal_text("# comment\nring x, y\nx^2 - y\n")
    assert I.ring.variables == ("x", "y") and len(I.generators) == 1
    assert parse_poly_text("3 1\n1 2 3\n") == [(1, 2, 3)]
    for bad in ["3 2\n1 2 3\n", "2 1\n1 2 3\n", "x\n", ""]:
        with pytest.raises(FileFormatError):
            parse_poly_text(bad)
    with pytest.raises(FileFormatError):
        parse_ideal_text("x + y\n")
