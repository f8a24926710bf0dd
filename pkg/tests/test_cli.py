import json

import pytest

from genkac.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_eval(capsys):
    assert run(capsys, "eval", "a*b") == (0, "-1 q + 1 c", "")
    code, out, _ = run(capsys, "eval", "a*b", "--format", "list")
    assert code == 0 and json.loads(out) == [[0, 0, 0, 1, -1, 1], [0, 0, 1, 0, 1, 1]]


def test_usage_errors(capsys):
    code, _, err = run(capsys, "eval", "a^-1")
    assert code == 2 and "error" in err
    assert run(capsys, "verify", "no-such")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_brackets(capsys):
    assert run(capsys, "bracket", "e1*c", "f1*c^-1")[:2] == (0, "h1*(1) + 1*K1 + 1*K2")
    assert run(capsys, "bracket", "--algebra", "vir", "a", "b")[:2] == (0, "L(1)")
    assert run(capsys, "bracket", "--algebra", "sl3", "e1", "e2")[:2] == (0, "1*e3")
    assert run(capsys, "bracket", "--algebra", "sl2", "E t", "F t^-1")[:2] == (0, "H*(1) + -1*K")


def test_scalar_commands(capsys):
    assert run(capsys, "residue", "a b c^-2 q^-1")[:2] == (0, "1")
    assert run(capsys, "pair", "a", "b c^-2 q^-1")[:2] == (0, "1")
    assert run(capsys, "act", "--x", "h1", "c q")[:2] == (0, "-3 c q")
    assert run(capsys, "grade", "e1*c")[:2] == (0, "1,1")
    assert run(capsys, "grade", "a + b")[0] == 1
    assert run(capsys, "w0", "c^-1 q^-1")[:2] == (0, "1 c q")
    assert run(capsys, "w0", "e1*a")[:2] == (0, "f1*(1 b q^-1)")


def test_dual_and_delta(capsys):
    code, out, _ = run(capsys, "dual", "--window", "1,1,0,1,-2,1", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and rows[0] == [[0, 0, 0, 0], [[0, 0, -1, -1, 1, 1]]]
    assert run(capsys, "delta", "1 + 3 a c")[:2] == (0, "1 + 3 a c")
    assert run(capsys, "delta", "c^-6")[0] == 1
    assert run(capsys, "delta", "b c q^-1", "--literal")[:2] == (0, "-1 b")
    assert run(capsys, "dual", "--window", "1,1,0,2,-1,2")[0] == 1


def test_expand_f(capsys):
    code, out, _ = run(capsys, "expand-f", "--order", "0", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["w_degree_0"]["lhs"] == "1 z2^-1 Qz^-1"
    code, out, _ = run(capsys, "expand-f", "--order", "1", "--split", "exact")
    assert code == 0 and out.startswith("order 1, region d1, split exact")


def test_verify_schema_and_determinism(capsys):
    code, out, _ = run(capsys, "verify", "gv-jacobi", "--seed", "42", "--cases", "20")
    rep = json.loads(out)
    assert code == 0
    assert set(rep) == {"suite", "seed", "cases", "passed", "failed", "failures", "millis"}
    assert (rep["cases"], rep["passed"], rep["failed"]) == (20, 20, 0)
    _, again, _ = run(capsys, "verify", "gv-jacobi", "--seed", "42", "--cases", "20")
    rep.pop("millis")
    rep2 = json.loads(again)
    rep2.pop("millis")
    assert rep == rep2


def test_verify_text_and_list(capsys):
    code, out, _ = run(capsys, "verify", "sl3-jacobi", "--cases", "5", "--format", "text")
    assert code == 0 and out.startswith("PASS sl3-jacobi: 61/61 passed")
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and "borcherds-positivity-diagnostic" in out.split()


def test_verify_diagnostic_exits_zero(capsys):
    code, out, _ = run(capsys, "verify", "omega-order-diagnostic")
    rep = json.loads(out)
    assert code == 0 and "diagnostic" in rep
