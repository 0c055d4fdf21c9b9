import io
import json

import pytest

from polargroup import cli


def run(argv, capsys):
    code = cli.run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_class_circle(capsys):
    code, out, _ = run(["class", "--ring", "circle", "t - i"], capsys)
    assert code == 0
    assert "order: 2" in out
    code, out, _ = run(["class", "--ring", "circle", "t - i", "--json"], capsys)
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["torsion"] == ["1"]
    assert payload["free"] == []
    assert payload["order"] == "2"


def test_oracle(capsys):
    code, out, _ = run(["oracle", "--ring", "line", "((x-i))/((x+i))"], capsys)
    assert code == 0 and out.strip() == "nontrivial"
    code, out, _ = run(["oracle", "--ring", "line", "x^2+1"], capsys)
    assert code == 0 and out.strip() == "trivial"


def test_fixedring(capsys):
    code, out, _ = run(["fixedring", "--ring", "circle"], capsys)
    assert code == 0
    assert "X^2 + Y^2 = 1" in out and "verified: yes" in out


def test_eq_and_order(capsys):
    code, out, _ = run(["eq", "--ring", "line", "x-i", "(x-i)*(x^2+1)"], capsys)
    assert code == 0 and out.strip() == "equal"
    code, out, _ = run(["eq", "--ring", "line", "x-i", "x-2*i"], capsys)
    assert code == 0 and out.strip() == "different"
    code, out, _ = run(["order", "--ring", "line", "x^2+1"], capsys)
    assert code == 0 and out.strip() == "1"


def test_factor_and_delta(capsys):
    code, out, _ = run(["factor", "--ring", "line", "(x^2+1)*(x-i)"], capsys)
    assert code == 0
    assert "real:  x^2 + 1" in out and "delta: x - i" in out
    code, out, _ = run(["delta", "--ring", "line", "x-i"], capsys)
    assert code == 0 and out.strip() == "member"


def test_hom(capsys):
    code, out, _ = run(["hom", "--kind", "localize", "--ring", "line",
                        "--target", "line[inv=(x^2+1)]", "(x-i)*(x-1-i)"], capsys)
    assert code == 0 and "[x - (1+i)]" in out
    code, out, _ = run(["hom", "--kind", "include", "--ring", "conic", "t - i/2"], capsys)
    assert code == 0 and "icircle" in out
    code, out, _ = run(["hom", "--kind", "cusp-embed", "--ring", "cusp",
                        "x^2 - 2*i"], capsys)
    assert code == 0


def test_exit_codes(capsys):
    code, _, err = run(["class", "--ring", "line", "x +"], capsys)
    assert code == 2
    code, _, err = run(["class", "--ring", "nosuchring", "x"], capsys)
    assert code == 2
    code, _, err = run(["class", "--ring", "line", "x^2 - 2"], capsys)
    assert code == 3  # rootless over Q(i)
    code, _, err = run(["oracle", "--ring", "cusp", "1/(x-1)"], capsys)
    assert code == 0  # domain is the fraction field; ring check is delta's job
    code, _, err = run(["delta", "--ring", "cusp", "1/(x-1)"], capsys)
    assert code == 2


def test_stdin_dash(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("x - i"))
    code, out, _ = run(["class", "--ring", "line", "-"], capsys)
    assert code == 0 and "[x - i]" in out


def test_determinism(capsys):
    _, out1, _ = run(["report", "--section", "circle-identities"], capsys)
    _, out2, _ = run(["report", "--section", "circle-identities"], capsys)
    assert out1 == out2


def test_report_sections(capsys):
    for section in ("forms-of-cstar", "forms-of-p1", "localizations",
                    "circle-identities", "cusp-cubic"):
        code, out, _ = run(["report", "--section", section], capsys)
        assert code == 0
        assert "[FAIL]" not in out
